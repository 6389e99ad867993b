#include "lvb/core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lvb {

void fail(ErrorCode code, std::string const & what)
{
    throw Error(code, what);
}

Int add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorCode::overflow, "integer overflow in addition");
    return r;
}

Int sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(ErrorCode::overflow, "integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::overflow, "integer overflow in multiplication");
    return r;
}

Int neg(Int a)
{
    return sub(0, a);
}

Int floor_div(Int a, Int b)
{
    if (b <= 0)
        fail(ErrorCode::invalid_argument, "division by a non-positive integer");
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

Int ceil_div(Int a, Int b)
{
    if (b <= 0)
        fail(ErrorCode::invalid_argument, "division by a non-positive integer");
    Int q = a / b;
    if (a % b != 0 && a > 0)
        ++q;
    return q;
}

bool is_partition(Seq const & alpha)
{
    if (alpha.empty())
        return false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 1)
            return false;
        if (i + 1 < alpha.size() && alpha[i] < alpha[i + 1])
            return false;
    }
    return true;
}

void require_partition(Seq const & alpha, char const * what)
{
    if (!is_partition(alpha))
        fail(ErrorCode::invalid_argument,
             std::string(what) + " is not a partition: [" + join(alpha) + "]");
}

void require_positive(Seq const & alpha, char const * what)
{
    if (alpha.empty())
        fail(ErrorCode::invalid_argument, std::string(what) + " is empty");
    for (Int a : alpha)
        if (a < 1)
            fail(ErrorCode::invalid_argument,
                 std::string(what) + " has a non-positive entry: [" + join(alpha) + "]");
}

Seq conjugate(Seq const & alpha)
{
    Int s = 0;
    for (Int a : alpha) {
        if (a < 1)
            fail(ErrorCode::invalid_argument, "conjugate needs positive parts");
        s = std::max(s, a);
    }
    Seq c(static_cast<std::size_t>(s), 0);
    for (Int a : alpha)
        for (Int j = 0; j < a; ++j)
            ++c[static_cast<std::size_t>(j)];
    return c;
}

DistinctParts distinct_parts(Seq const & alpha)
{
    Seq sorted = dom(alpha);
    DistinctParts d;
    for (Int a : sorted) {
        if (d.parts.empty() || d.parts.back() != a) {
            d.parts.push_back(a);
            d.mult.push_back(1);
        } else {
            ++d.mult.back();
        }
    }
    return d;
}

Int sum(Seq const & v)
{
    Int s = 0;
    for (Int x : v)
        s = add(s, x);
    return s;
}

Seq dom(Seq v)
{
    std::sort(v.begin(), v.end(), std::greater<Int>());
    return v;
}

bool is_weakly_decreasing(Seq const & v)
{
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            return false;
    return true;
}

Seq add_seq(Seq const & a, Seq const & b)
{
    if (a.size() != b.size())
        fail(ErrorCode::invalid_argument, "length mismatch in sequence addition");
    Seq r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = add(a[i], b[i]);
    return r;
}

Seq two_rho(Seq const & alpha)
{
    Seq r;
    for (Int h : conjugate(alpha))
        for (Int k = h - 1; k >= 1 - h; k -= 2)
            r.push_back(k);
    return r;
}

Int norm_sq(Seq const & mu)
{
    Int s = 0;
    for (Int x : mu)
        s = add(s, mul(x, x));
    return s;
}

bool is_dominant_wrt(Seq const & nu, Seq const & alpha)
{
    if (nu.size() != alpha.size())
        fail(ErrorCode::invalid_argument, "nu and alpha have different lengths");
    for (std::size_t i = 0; i + 1 < nu.size(); ++i)
        if (alpha[i] == alpha[i + 1] && nu[i] < nu[i + 1])
            return false;
    return true;
}

std::vector<Seq> levi_blocks(Seq const & mu, Seq const & alpha)
{
    Seq c = conjugate(alpha);
    if (static_cast<Int>(mu.size()) != sum(c))
        fail(ErrorCode::invalid_argument, "weight length does not match the partition size");
    std::vector<Seq> blocks;
    auto it = mu.begin();
    for (Int h : c) {
        blocks.emplace_back(it, it + h);
        it += h;
    }
    return blocks;
}

std::string join(Seq const & v, char const * sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace lvb
