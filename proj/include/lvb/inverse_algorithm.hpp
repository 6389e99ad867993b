#ifndef LVB_INVERSE_ALGORITHM_HPP
#define LVB_INVERSE_ALGORITHM_HPP

#include <vector>

#include "lvb/core.hpp"
#include "lvb/diagrams.hpp"

namespace lvb {

/* Maximal runs of a weakly decreasing sequence in which consecutive
 * entries differ by at most 1.
 */
std::vector<Seq> clumps(Seq const & lambda);

struct Extraction {
    Seq majuscule;
    Seq remainder;
};

/* Greedy anchored extraction of a longest subsequence with gaps >= 2.
 * eps = -1 anchors at the first entry, eps = +1 at the last one. The
 * remainder is returned sorted weakly decreasing.
 */
Extraction majuscule_extract(Seq const & clump, int eps);

Diagram alg_B(Seq const & lambda, int eps = -1);

OmegaPair gamma_inverse(Seq const & lambda);

}  // namespace lvb

#endif
