#include "lvb/diagram_algorithm.hpp"

#include <algorithm>

namespace lvb {

namespace {

void require_decreasing(Seq const & iota)
{
    if (!is_weakly_decreasing(iota))
        fail(ErrorCode::invalid_argument, "iota is not weakly decreasing");
}

struct Branch {
    std::vector<std::size_t> rows;
    Seq alpha;
    Seq nu_hat;
    Seq heights;
    DiagramPair sub;
};

}  // namespace

std::vector<Placement> row_survival(Seq const & alpha, Perm const & sigma, Seq const & iota)
{
    if (alpha.size() != sigma.size() || alpha.size() != iota.size())
        fail(ErrorCode::invalid_argument, "row_survival inputs have different lengths");
    if (!is_permutation(sigma))
        fail(ErrorCode::invalid_argument, "sigma is not a permutation");
    require_decreasing(iota);
    Perm inv = inverse(sigma);
    std::vector<Placement> out(alpha.size());
    std::vector<std::size_t> count;
    for (std::size_t i = 0; i < iota.size(); ++i) {
        if (i == 0 || iota[i] != iota[i - 1])
            count.push_back(0);
        std::size_t pos = alpha[inv[i]] > 1 ? ++count.back() : 0;
        out[i] = {count.size(), pos};
    }
    return out;
}

std::vector<Placement> row_partition(Seq const & iota)
{
    require_decreasing(iota);
    std::vector<Placement> out(iota.size());
    std::vector<std::size_t> count;
    for (std::size_t i = 0; i < iota.size(); ++i) {
        if (i == 0 || iota[i] != iota[i - 1])
            count.push_back(0);
        out[i] = {count.size(), ++count.back()};
    }
    return out;
}

DiagramPair alg_W(Seq const & alpha, Seq const & nu, int eps)
{
    require_positive(alpha, "alpha");
    if (alpha.size() != nu.size())
        fail(ErrorCode::invalid_argument, "alpha and nu have different lengths");
    std::size_t l = alpha.size();
    Perm sigma = ranking(eps, alpha, nu);
    Seq iota = column_seq(eps, alpha, nu, sigma);
    Perm inv = inverse(sigma);
    auto place = row_survival(alpha, sigma, iota);

    std::size_t k = place.back().branch;
    std::vector<Branch> br(k);
    for (std::size_t i = 0; i < l; ++i) {
        if (place[i].pos == 0)
            continue;
        Branch & b = br[place[i].branch - 1];
        if (place[i].pos != b.rows.size() + 1)
            fail(ErrorCode::internal, "row survival table is not injective");
        b.rows.push_back(i);
        b.alpha.push_back(alpha[inv[i]] - 1);
        b.nu_hat.push_back(sub(nu[inv[i]], iota[i]));
    }
    for (std::size_t x = 0; x < k; ++x) {
        Branch & b = br[x];
        for (std::size_t r = 0; r < b.rows.size(); ++r) {
            for (std::size_t y = 0; y < k; ++y) {
                if (y == x)
                    continue;
                for (Int a : br[y].alpha) {
                    Int m = std::min(b.alpha[r], a);
                    b.nu_hat[r] = y < x ? sub(b.nu_hat[r], m) : add(b.nu_hat[r], m);
                }
            }
        }
    }
    for (auto & b : br) {
        if (b.rows.empty())
            continue;
        b.heights = conjugate(b.alpha);
        b.sub = alg_W(b.alpha, b.nu_hat, -eps);
    }

    DiagramPair out;
    out.x.resize(l);
    out.y.resize(l);
    Int L = static_cast<Int>(l);
    for (std::size_t i = 0; i < l; ++i) {
        out.x[i].push_back(iota[i]);
        out.y[i].push_back(add(iota[i], L - 2 * static_cast<Int>(i + 1) + 1));
    }
    for (std::size_t x = 0; x < k; ++x) {
        Branch const & b = br[x];
        for (std::size_t r = 0; r < b.rows.size(); ++r) {
            std::size_t i = b.rows[r];
            Seq const & xr = b.sub.x[r];
            Seq const & yr = b.sub.y[r];
            for (std::size_t j = 0; j < xr.size(); ++j) {
                Int v = xr[j];
                for (std::size_t y = 0; y < k; ++y) {
                    if (y == x || j >= br[y].heights.size())
                        continue;
                    v = y < x ? add(v, br[y].heights[j]) : sub(v, br[y].heights[j]);
                }
                out.x[i].push_back(v);
            }
            out.y[i].insert(out.y[i].end(), yr.begin(), yr.end());
        }
    }
    return out;
}

Seq gamma_via_diagrams(Seq const & alpha, Seq const & nu)
{
    require_omega_pair(alpha, nu);
    return eta(alg_W(alpha, nu, -1).y);
}

}  // namespace lvb
