#ifndef LVB_SEQ_ALGORITHM_HPP
#define LVB_SEQ_ALGORITHM_HPP

#include <string>
#include <vector>

#include "lvb/core.hpp"

namespace lvb {

/* A permutation in one-line notation, zero based: perm[i] is the image
 * of i. For a ranking, perm[i] is the position given to row i.
 */
using Perm = std::vector<std::size_t>;

Perm inverse(Perm const & p);
bool is_permutation(Perm const & p);
/* One-based digits, e.g. "42135"; entries above 9 are comma separated. */
std::string perm_string(Perm const & p);

/* eps = -1 selects the ceiling variant, eps = +1 the floor variant.
 * i, Ia and Ib are zero-based row indices.
 */
Int candidate(int eps, Seq const & alpha, Seq const & nu, std::size_t i,
              std::vector<std::size_t> const & Ia,
              std::vector<std::size_t> const & Ib);

Perm ranking(int eps, Seq const & alpha, Seq const & nu);

Seq column_seq(int eps, Seq const & alpha, Seq const & nu, Perm const & sigma);

/* Recursive form. alpha must be a partition; nu may be arbitrary. */
Seq alg_A_raw(Seq const & alpha, Seq const & nu);
/* Same, after checking that nu is dominant with respect to alpha. */
Seq alg_A(Seq const & alpha, Seq const & nu);

struct Stage {
    Seq alpha;
    Seq nu;
    Perm sigma;
    Seq mu;
};

std::vector<Stage> alg_A_stages(Seq const & alpha, Seq const & nu);
Seq alg_A_iter(Seq const & alpha, Seq const & nu);

Seq gamma_forward(Seq const & alpha, Seq const & nu);

void require_omega_pair(Seq const & alpha, Seq const & nu);

}  // namespace lvb

#endif
