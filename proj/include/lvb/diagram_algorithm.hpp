#ifndef LVB_DIAGRAM_ALGORITHM_HPP
#define LVB_DIAGRAM_ALGORITHM_HPP

#include <vector>

#include "lvb/core.hpp"
#include "lvb/diagrams.hpp"
#include "lvb/seq_algorithm.hpp"

namespace lvb {

/* Branch and position of one row, both one based. A position of 0
 * marks a row that does not survive into the next stage.
 */
struct Placement {
    std::size_t branch;
    std::size_t pos;

    friend bool operator==(Placement const &, Placement const &) = default;
};

/* Indexed by the row of the permuted diagram, i.e. by ranking position. */
std::vector<Placement> row_survival(Seq const & alpha, Perm const & sigma, Seq const & iota);
/* Like row_survival but counts every row, surviving or not. */
std::vector<Placement> row_partition(Seq const & iota);

/* alpha may be in any order; its entries must be positive. */
DiagramPair alg_W(Seq const & alpha, Seq const & nu, int eps = -1);

Seq gamma_via_diagrams(Seq const & alpha, Seq const & nu);

}  // namespace lvb

#endif
