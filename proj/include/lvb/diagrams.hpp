#ifndef LVB_DIAGRAMS_HPP
#define LVB_DIAGRAMS_HPP

#include <string>
#include <vector>

#include "lvb/core.hpp"

namespace lvb {

/* A weight diagram: left-justified rows of possibly unequal length, kept
 * in the given order. Row order matters, so nothing here re-sorts rows.
 * Row and column indices are zero based.
 */
using Diagram = std::vector<Seq>;

struct DiagramPair {
    Diagram x;
    Diagram y;
};

void require_diagram(Diagram const & d);

/* Row lengths sorted descending. */
Seq shape_class(Diagram const & d);
/* Height of every column, i.e. the conjugate of the shape class. */
Seq column_heights(Diagram const & d);
/* Rows that have a box in column j, top to bottom. */
std::vector<std::size_t> column_rows(Diagram const & d, std::size_t j);
/* Position of box (i, j) inside column j, counted from the top. */
std::size_t column_position(Diagram const & d, std::size_t i, std::size_t j);

Diagram e_map(Diagram const & x);
Diagram e_inverse(Diagram const & y);

Seq kappa(Diagram const & x);
Seq h_weight(Diagram const & x);
Seq eta(Diagram const & y);

/* Drops the first j-1 columns, then the rows left empty; j >= 1. */
Diagram truncate_columns(Diagram const & x, std::size_t j);
Diagram concat(std::vector<Diagram> const & parts);

bool is_raisable(Diagram const & y, std::size_t i, std::size_t j);
bool is_lowerable(Diagram const & y, std::size_t i, std::size_t j);

enum class Parity { odd, even };

bool is_distinguished(Diagram const & x, Parity parity);
/* Same predicate, but on an already shifted diagram Y = E(X). */
bool is_distinguished_shifted(Diagram const & y, Parity parity);

std::string render(Diagram const & d);
Diagram parse_diagram(std::string const & text);

}  // namespace lvb

#endif
