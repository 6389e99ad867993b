#ifndef LVB_CORE_HPP
#define LVB_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvb {

using Int = std::int64_t;
using Seq = std::vector<Int>;

enum class ErrorCode {
    invalid_argument = 1,
    overflow = 2,
    internal = 3,
    limit = 4,
};

/* Every failure raised by the library carries one of the codes above so
 * that the C layer can map it without parsing messages.
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string const & what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

struct OmegaPair {
    Seq alpha;
    Seq nu;

    friend bool operator==(OmegaPair const &, OmegaPair const &) = default;
};

[[noreturn]] void fail(ErrorCode code, std::string const & what);

/* Checked 64-bit arithmetic. */
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);

/* Mathematical rounding of a/b for b > 0. */
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

bool is_partition(Seq const & alpha);
void require_partition(Seq const & alpha, char const * what);
void require_positive(Seq const & alpha, char const * what);

/* alpha*_j = |{i : alpha_i >= j}| for j = 1..max(alpha). Accepts any
 * sequence of positive integers, sorted or not.
 */
Seq conjugate(Seq const & alpha);

/* Distinct parts k_1 > ... > k_m and their multiplicities a_1, ..., a_m. */
struct DistinctParts {
    Seq parts;
    std::vector<std::size_t> mult;
};
DistinctParts distinct_parts(Seq const & alpha);

Int sum(Seq const & v);
Seq dom(Seq v);
bool is_weakly_decreasing(Seq const & v);
Seq add_seq(Seq const & a, Seq const & b);

/* Doubled half-sum of the positive roots of the Levi attached to alpha,
 * laid out column by column.
 */
Seq two_rho(Seq const & alpha);

Int norm_sq(Seq const & mu);

bool is_dominant_wrt(Seq const & nu, Seq const & alpha);

std::vector<Seq> levi_blocks(Seq const & mu, Seq const & alpha);

/* Comma separated rendering used by the CLI and in error messages. */
std::string join(Seq const & v, char const * sep = ",");

}  // namespace lvb

#endif
