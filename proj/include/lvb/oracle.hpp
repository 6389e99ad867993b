#ifndef LVB_ORACLE_HPP
#define LVB_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lvb/core.hpp"
#include "lvb/diagrams.hpp"

namespace lvb {

/* Brute-force checks at desk scale. Fillings are diagrams in Young
 * order (row i has alpha_i boxes) whose row sums are prescribed; every
 * entry of row i lies in [floor(nu_i/alpha_i) - B, ceil(nu_i/alpha_i) + B].
 */

constexpr std::uint64_t default_state_limit = 100000000;

/* Partitions of n in decreasing lexicographic order. */
std::vector<Seq> partitions_of(Int n);

void for_each_dominant_nu(Seq const & alpha, Int bound,
                          std::function<void(Seq const &)> const & fn);
void for_each_omega_pair(Int n_max, Int bound,
                         std::function<void(Seq const &, Seq const &)> const & fn);
void for_each_decreasing(std::size_t len, Int lo, Int hi,
                         std::function<void(Seq const &)> const & fn);

Int default_window(Seq const & alpha);

/* Upper bound on the number of leaves visited for one row arrangement. */
std::uint64_t filling_state_count(Seq const & alpha, Seq const & nu, Int window);

void enumerate_fillings(Seq const & alpha, Seq const & nu, Int window,
                        std::function<void(Diagram const &)> const & fn,
                        std::uint64_t limit = default_state_limit);

Int min_norm_over_fillings(Seq const & alpha, Seq const & nu, Int window,
                           std::uint64_t limit = default_state_limit);

/* All diagrams of shape class alpha in the window with kappa = nu that
 * are odd-distinguished. Row orders range over arrangements of the row
 * lengths together with assignments of the nu values of each length
 * class to the rows of that length.
 */
std::vector<Diagram> distinguished_fillings(Seq const & alpha, Seq const & nu, Int window,
                                            std::uint64_t limit = default_state_limit);

struct CheckResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::string first_failure;
};

struct Report {
    std::string title;
    Int n_max = 0;
    Int entry_bound = 0;
    std::uint64_t cases = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    std::string text() const;
    std::string json() const;
};

/* Identities checked per Omega pair: inverse after forward, kappa
 * recovery, recursive against iterative form, norm agreement, the two
 * forward routes, and distinguishedness of the diagram output.
 */
Report roundtrip_sweep(Int n_max, Int entry_bound);

/* Minimality with window stability, and uniqueness of the distinguished
 * filling. window < 0 selects the per-shape default.
 */
Report oracle_sweep(Int n_max, Int entry_bound, Int window = -1);

}  // namespace lvb

#endif
