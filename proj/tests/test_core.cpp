#include <doctest.h>

#include <limits>

#include "lvb/core.hpp"
#include "lvb/oracle.hpp"
#include "lvb/seq_algorithm.hpp"
#include "support.hpp"

using namespace lvb;

TEST_SUITE("core") {

TEST_CASE("conjugate examples")
{
    CHECK(conjugate({4, 3, 2, 1, 1}) == Seq{5, 3, 2, 1});
    CHECK(conjugate({3, 2, 2, 1}) == Seq{4, 3, 1});
    CHECK(conjugate({1}) == Seq{1});
}

TEST_CASE("conjugate is an involution and preserves size for n <= 12")
{
    for (Int n = 1; n <= 12; ++n) {
        for (auto const & a : partitions_of(n)) {
            Seq c = conjugate(a);
            CHECK(c == ref::conjugate(a));
            CHECK(conjugate(c) == a);
            CHECK(sum(c) == n);
        }
    }
}

TEST_CASE("partition counts")
{
    // p(n) for n = 1..12
    Int expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (Int n = 1; n <= 12; ++n)
        CHECK(static_cast<Int>(partitions_of(n).size()) == expected[n - 1]);
}

TEST_CASE("distinct parts")
{
    auto d = distinct_parts({4, 3, 2, 1, 1});
    CHECK(d.parts == Seq{4, 3, 2, 1});
    CHECK(d.mult == std::vector<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("dom")
{
    CHECK(dom({1, 3, 2}) == Seq{3, 2, 1});
    CHECK(dom({5, 5, 5}) == Seq{5, 5, 5});
    CHECK(dom({0, -2, 1}) == Seq{1, 0, -2});
    Seq v{4, -1, 7, 7, 0};
    CHECK(dom(dom(v)) == dom(v));
    CHECK(sum(dom(v)) == sum(v));
}

TEST_CASE("two_rho examples")
{
    CHECK(two_rho({2, 1}) == Seq{1, -1, 0});
    CHECK(two_rho({4, 3, 2, 1, 1}) == Seq{4, 2, 0, -2, -4, 2, 0, -2, 1, -1, 0});
    CHECK(two_rho({1}) == Seq{0});
}

TEST_CASE("two_rho blocks sum to zero and are antisymmetric")
{
    for (Int n = 1; n <= 9; ++n) {
        for (auto const & a : partitions_of(n)) {
            Seq r = two_rho(a);
            CHECK(static_cast<Int>(r.size()) == n);
            for (auto const & b : levi_blocks(r, a)) {
                CHECK(sum(b) == 0);
                Seq rev(b.rbegin(), b.rend());
                for (auto & x : rev)
                    x = -x;
                CHECK(rev == b);
            }
        }
    }
}

TEST_CASE("norm_sq")
{
    CHECK(norm_sq({7, 5, 3, 1, 7, 4, 2, 6}) == 189);
    CHECK(norm_sq({}) == 0);
    CHECK(norm_sq({-3}) == 9);
}

TEST_CASE("is_dominant_wrt")
{
    CHECK(is_dominant_wrt({15, 14, 9, 4, 4}, {4, 3, 2, 1, 1}));
    CHECK_FALSE(is_dominant_wrt({1, 2}, {2, 2}));
    CHECK(is_dominant_wrt({1, 2}, {2, 1}));
    CHECK_THROWS_AS(is_dominant_wrt({1}, {1, 1}), Error);
}

TEST_CASE("levi_blocks")
{
    CHECK(levi_blocks({4, 4, 4, 4, 4, 5, 5, 5, 5, 4, 2}, {4, 3, 2, 1, 1})
          == std::vector<Seq>{{4, 4, 4, 4, 4}, {5, 5, 5}, {5, 4}, {2}});
    CHECK(levi_blocks({7}, {1}) == std::vector<Seq>{{7}});
    CHECK(levi_blocks({4, 4, 4, 4, 5, 4, 4, 6}, {3, 2, 2, 1})
          == std::vector<Seq>{{4, 4, 4, 4}, {5, 4, 4}, {6}});
    CHECK_THROWS_AS(levi_blocks({1, 2}, {1}), Error);
}

TEST_CASE("levi blocks of the algorithm output are weakly decreasing")
{
    for_each_omega_pair(6, 2, [](Seq const & a, Seq const & v) {
        for (auto const & b : levi_blocks(alg_A(a, v), a))
            CHECK(is_weakly_decreasing(b));
    });
}

TEST_CASE("mathematical rounding")
{
    CHECK(ceil_div(-3, 2) == -1);
    CHECK(floor_div(-3, 2) == -2);
    CHECK(ceil_div(3, 2) == 2);
    CHECK(floor_div(3, 2) == 1);
    CHECK(ceil_div(-4, 2) == -2);
    for (Int a = -20; a <= 20; ++a)
        for (Int b = 1; b <= 6; ++b) {
            CHECK(floor_div(a, b) == ref::fl(a, b));
            CHECK(ceil_div(a, b) == ref::ce(a, b));
        }
}

TEST_CASE("checked arithmetic reports overflow")
{
    Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(add(big, 1), Error);
    CHECK_THROWS_AS(sub(-big, 2), Error);
    CHECK_THROWS_AS(mul(big, 2), Error);
    try {
        add(big, 1);
    } catch (Error const & e) {
        CHECK(e.code() == ErrorCode::overflow);
    }
}

TEST_CASE("partition checks")
{
    CHECK(is_partition({3, 1, 1}));
    CHECK_FALSE(is_partition({}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK_THROWS_AS(require_partition({1, 2}, "alpha"), Error);
}

}
