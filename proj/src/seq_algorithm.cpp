#include "lvb/seq_algorithm.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>

namespace lvb {

namespace {

void check_eps(int eps)
{
    if (eps != -1 && eps != 1)
        fail(ErrorCode::invalid_argument, "eps must be -1 or +1");
}

void check_lengths(Seq const & alpha, Seq const & nu)
{
    require_positive(alpha, "alpha");
    if (alpha.size() != nu.size())
        fail(ErrorCode::invalid_argument, "alpha and nu have different lengths");
}

/* below[j] is true for rows counted with a minus sign, above[j] with a
 * plus sign; rows with neither flag are ignored.
 */
Int candidate_masked(int eps, Seq const & alpha, Seq const & nu, std::size_t i,
                     std::vector<char> const & minus, std::vector<char> const & plus)
{
    Int num = nu[i];
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (j == i)
            continue;
        Int m = std::min(alpha[i], alpha[j]);
        if (minus[j])
            num = sub(num, m);
        else if (plus[j])
            num = add(num, m);
    }
    return eps < 0 ? ceil_div(num, alpha[i]) : floor_div(num, alpha[i]);
}

}  // namespace

Perm inverse(Perm const & p)
{
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i]] = i;
    return q;
}

bool is_permutation(Perm const & p)
{
    std::vector<char> seen(p.size(), 0);
    for (std::size_t v : p) {
        if (v >= p.size() || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

std::string perm_string(Perm const & p)
{
    bool wide = p.size() > 9;
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i)
            os << ',';
        os << p[i] + 1;
    }
    return os.str();
}

Int candidate(int eps, Seq const & alpha, Seq const & nu, std::size_t i,
              std::vector<std::size_t> const & Ia,
              std::vector<std::size_t> const & Ib)
{
    check_eps(eps);
    check_lengths(alpha, nu);
    std::size_t l = alpha.size();
    if (i >= l)
        fail(ErrorCode::invalid_argument, "row index out of range");
    std::vector<char> minus(l, 0), plus(l, 0);
    for (std::size_t j : Ia) {
        if (j >= l || j == i || minus[j])
            fail(ErrorCode::invalid_argument, "bad index in Ia");
        minus[j] = 1;
    }
    for (std::size_t j : Ib) {
        if (j >= l || j == i || minus[j] || plus[j])
            fail(ErrorCode::invalid_argument, "bad index in Ib");
        plus[j] = 1;
    }
    return candidate_masked(eps, alpha, nu, i, minus, plus);
}

Perm ranking(int eps, Seq const & alpha, Seq const & nu)
{
    check_eps(eps);
    check_lengths(alpha, nu);
    std::size_t l = alpha.size();
    std::vector<char> chosen(l, 0), open(l, 1);
    Perm inv(l);
    if (eps < 0) {
        for (std::size_t p = 0; p < l; ++p) {
            std::size_t best = l;
            std::tuple<Int, Int, Int> key{};
            for (std::size_t j = 0; j < l; ++j) {
                if (chosen[j])
                    continue;
                open[j] = 0;
                auto k = std::make_tuple(candidate_masked(eps, alpha, nu, j, chosen, open),
                                         alpha[j], nu[j]);
                open[j] = 1;
                if (best == l || k > key) {
                    best = j;
                    key = k;
                }
            }
            inv[p] = best;
            chosen[best] = 1;
            open[best] = 0;
        }
    } else {
        for (std::size_t p = l; p-- > 0;) {
            std::size_t best = l;
            std::tuple<Int, Int, Int> key{};
            for (std::size_t j = l; j-- > 0;) {
                if (chosen[j])
                    continue;
                open[j] = 0;
                auto k = std::make_tuple(candidate_masked(eps, alpha, nu, j, open, chosen),
                                         neg(alpha[j]), nu[j]);
                open[j] = 1;
                if (best == l || k < key) {
                    best = j;
                    key = k;
                }
            }
            inv[p] = best;
            chosen[best] = 1;
            open[best] = 0;
        }
    }
    return inverse(inv);
}

Seq column_seq(int eps, Seq const & alpha, Seq const & nu, Perm const & sigma)
{
    check_eps(eps);
    check_lengths(alpha, nu);
    std::size_t l = alpha.size();
    if (sigma.size() != l || !is_permutation(sigma))
        fail(ErrorCode::invalid_argument, "sigma is not a permutation of the rows");
    Perm inv = inverse(sigma);
    Int L = static_cast<Int>(l);
    Seq iota(l);
    auto value = [&](std::size_t p) {
        std::vector<char> minus(l, 0), plus(l, 0);
        for (std::size_t q = 0; q < l; ++q) {
            if (q < p)
                minus[inv[q]] = 1;
            else if (q > p)
                plus[inv[q]] = 1;
        }
        Int c = candidate_masked(eps, alpha, nu, inv[p], minus, plus);
        return add(c, 2 * static_cast<Int>(p) + 1 - L);
    };
    if (eps < 0) {
        for (std::size_t p = 0; p < l; ++p) {
            iota[p] = value(p);
            if (p > 0 && iota[p] > iota[p - 1])
                iota[p] = iota[p - 1];
        }
    } else {
        for (std::size_t p = l; p-- > 0;) {
            iota[p] = value(p);
            if (p + 1 < l && iota[p] < iota[p + 1])
                iota[p] = iota[p + 1];
        }
    }
    return iota;
}

Seq alg_A_raw(Seq const & alpha, Seq const & nu)
{
    require_partition(alpha, "alpha");
    if (alpha.size() != nu.size())
        fail(ErrorCode::invalid_argument, "alpha and nu have different lengths");
    Perm sigma = ranking(-1, alpha, nu);
    Seq mu = column_seq(-1, alpha, nu, sigma);
    if (alpha[0] == 1)
        return mu;
    Seq a2, n2;
    for (std::size_t i = 0; i < alpha.size() && alpha[i] >= 2; ++i) {
        a2.push_back(alpha[i] - 1);
        n2.push_back(sub(nu[i], mu[sigma[i]]));
    }
#ifndef NDEBUG
    for (std::size_t i = a2.size(); i < alpha.size(); ++i)
        assert(mu[sigma[i]] == nu[i]);
#endif
    Seq rest = alg_A_raw(a2, n2);
    mu.insert(mu.end(), rest.begin(), rest.end());
    return mu;
}

void require_omega_pair(Seq const & alpha, Seq const & nu)
{
    require_partition(alpha, "alpha");
    if (nu.size() != alpha.size())
        fail(ErrorCode::invalid_argument, "alpha and nu have different lengths");
    if (!is_dominant_wrt(nu, alpha))
        fail(ErrorCode::invalid_argument,
             "nu [" + join(nu) + "] is not dominant with respect to alpha [" + join(alpha) + "]");
}

Seq alg_A(Seq const & alpha, Seq const & nu)
{
    require_omega_pair(alpha, nu);
    return alg_A_raw(alpha, nu);
}

std::vector<Stage> alg_A_stages(Seq const & alpha, Seq const & nu)
{
    require_omega_pair(alpha, nu);
    std::vector<Stage> stages;
    Seq a = alpha, v = nu;
    for (;;) {
        Stage st;
        st.alpha = a;
        st.nu = v;
        st.sigma = ranking(-1, a, v);
        st.mu = column_seq(-1, a, v, st.sigma);
        stages.push_back(st);
        if (a[0] == 1)
            break;
        std::size_t m = 0;
        while (m < a.size() && a[m] >= 2)
            ++m;
        Seq a2(m), v2(m);
        for (std::size_t i = 0; i < m; ++i) {
            a2[i] = a[i] - 1;
            v2[i] = sub(v[i], st.mu[st.sigma[i]]);
        }
        a = std::move(a2);
        v = std::move(v2);
    }
    return stages;
}

Seq alg_A_iter(Seq const & alpha, Seq const & nu)
{
    Seq mu;
    for (auto const & st : alg_A_stages(alpha, nu))
        mu.insert(mu.end(), st.mu.begin(), st.mu.end());
    return mu;
}

Seq gamma_forward(Seq const & alpha, Seq const & nu)
{
    return dom(add_seq(alg_A(alpha, nu), two_rho(alpha)));
}

}  // namespace lvb
