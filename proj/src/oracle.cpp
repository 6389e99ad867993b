#include "lvb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lvb/diagram_algorithm.hpp"
#include "lvb/inverse_algorithm.hpp"
#include "lvb/seq_algorithm.hpp"

namespace lvb {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        return UINT64_MAX;
    return r;
}

void partitions_rec(Int n, Int max_part, Seq & cur, std::vector<Seq> & out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

/* Row-major depth-first walk over integer rows with fixed lengths, sums
 * and per-row entry windows. prune(r, j, v) may reject a partial fill.
 */
class Walker {
  public:
    Walker(Seq lengths, Seq sums, Seq lo, Seq hi)
        : len_(std::move(lengths)), sums_(std::move(sums)), lo_(std::move(lo)), hi_(std::move(hi))
    {
        d_.resize(len_.size());
        for (std::size_t r = 0; r < len_.size(); ++r)
            d_[r].assign(static_cast<std::size_t>(len_[r]), 0);
    }

    void run(std::function<bool(std::size_t, std::size_t, Int)> const & prune,
             std::function<void(Diagram const &)> const & leaf)
    {
        prune_ = &prune;
        leaf_ = &leaf;
        if (!d_.empty())
            step(0, 0, sums_[0]);
    }

  private:
    void step(std::size_t r, std::size_t j, Int rest)
    {
        Int cells = len_[r] - static_cast<Int>(j);
        if (cells == 1) {
            if (rest < lo_[r] || rest > hi_[r])
                return;
            if (!place(r, j, rest))
                return;
            if (r + 1 == d_.size())
                (*leaf_)(d_);
            else
                step(r + 1, 0, sums_[r + 1]);
            return;
        }
        Int after = cells - 1;
        Int first = std::max(lo_[r], rest - after * hi_[r]);
        Int last = std::min(hi_[r], rest - after * lo_[r]);
        for (Int v = first; v <= last; ++v)
            if (place(r, j, v))
                step(r, j + 1, rest - v);
    }

    bool place(std::size_t r, std::size_t j, Int v)
    {
        d_[r][j] = v;
        return !*prune_ || (*prune_)(r, j, v);
    }

    Seq len_, sums_, lo_, hi_;
    Diagram d_;
    std::function<bool(std::size_t, std::size_t, Int)> const * prune_ = nullptr;
    std::function<void(Diagram const &)> const * leaf_ = nullptr;
};

void window_of(Int sum_v, Int length, Int window, Int & lo, Int & hi)
{
    lo = sub(floor_div(sum_v, length), window);
    hi = add(ceil_div(sum_v, length), window);
}

std::uint64_t arrangement_states(Seq const & lengths, Seq const & sums, Int window)
{
    std::uint64_t total = 1;
    for (std::size_t r = 0; r < lengths.size(); ++r) {
        Int lo, hi;
        window_of(sums[r], lengths[r], window, lo, hi);
        std::uint64_t w = static_cast<std::uint64_t>(hi - lo + 1);
        for (Int k = 1; k < lengths[r]; ++k)
            total = sat_mul(total, w);
    }
    return total;
}

void check_window(Int window)
{
    if (window < 0)
        fail(ErrorCode::invalid_argument, "search window must be non-negative");
}

std::string case_label(Seq const & alpha, Seq const & nu)
{
    return "alpha=" + join(alpha) + " nu=" + join(nu);
}

std::string diagram_inline(Diagram const & d)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            s += " / ";
        s += join(d[i], " ");
    }
    return s;
}

class Checker {
  public:
    explicit Checker(std::vector<std::string> const & names)
    {
        for (auto const & n : names)
            res_.push_back({n, 0, 0, {}});
    }
    void record(std::size_t k, bool good, std::string const & why)
    {
        if (good) {
            ++res_[k].passed;
        } else if (res_[k].failed++ == 0) {
            res_[k].first_failure = why;
        }
    }
    std::vector<CheckResult> take() { return std::move(res_); }

  private:
    std::vector<CheckResult> res_;
};

}  // namespace

std::vector<Seq> partitions_of(Int n)
{
    std::vector<Seq> out;
    if (n < 1)
        return out;
    Seq cur;
    partitions_rec(n, n, cur, out);
    return out;
}

void for_each_dominant_nu(Seq const & alpha, Int bound, std::function<void(Seq const &)> const & fn)
{
    require_partition(alpha, "alpha");
    if (bound < 0)
        fail(ErrorCode::invalid_argument, "entry bound must be non-negative");
    Seq nu(alpha.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == nu.size()) {
            fn(nu);
            return;
        }
        Int top = (i > 0 && alpha[i] == alpha[i - 1]) ? nu[i - 1] : bound;
        for (Int v = -bound; v <= top; ++v) {
            nu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

void for_each_omega_pair(Int n_max, Int bound, std::function<void(Seq const &, Seq const &)> const & fn)
{
    for (Int n = 1; n <= n_max; ++n)
        for (auto const & alpha : partitions_of(n))
            for_each_dominant_nu(alpha, bound, [&](Seq const & nu) { fn(alpha, nu); });
}

void for_each_decreasing(std::size_t len, Int lo, Int hi, std::function<void(Seq const &)> const & fn)
{
    if (len == 0 || lo > hi)
        return;
    Seq v(len);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            fn(v);
            return;
        }
        Int top = i ? v[i - 1] : hi;
        for (Int x = lo; x <= top; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

Int default_window(Seq const & alpha)
{
    require_partition(alpha, "alpha");
    return static_cast<Int>(alpha.size()) + alpha[0];
}

std::uint64_t filling_state_count(Seq const & alpha, Seq const & nu, Int window)
{
    require_omega_pair(alpha, nu);
    check_window(window);
    return arrangement_states(alpha, nu, window);
}

void enumerate_fillings(Seq const & alpha, Seq const & nu, Int window,
                        std::function<void(Diagram const &)> const & fn, std::uint64_t limit)
{
    std::uint64_t states = filling_state_count(alpha, nu, window);
    if (states > limit)
        fail(ErrorCode::limit, "filling search space too large: " + std::to_string(states) + " states");
    Seq lo(alpha.size()), hi(alpha.size());
    for (std::size_t r = 0; r < alpha.size(); ++r)
        window_of(nu[r], alpha[r], window, lo[r], hi[r]);
    Walker w(alpha, nu, lo, hi);
    w.run({}, fn);
}

Int min_norm_over_fillings(Seq const & alpha, Seq const & nu, Int window, std::uint64_t limit)
{
    Seq heights = conjugate(alpha);
    Seq rho = two_rho(alpha);
    Int best = -1;
    Seq col;
    enumerate_fillings(alpha, nu, window, [&](Diagram const & x) {
        // Young order: column j is made of the first heights[j] rows
        Int total = 0;
        std::size_t k = 0;
        for (std::size_t j = 0; j < heights.size(); ++j) {
            col.clear();
            for (Int i = 0; i < heights[j]; ++i)
                col.push_back(x[static_cast<std::size_t>(i)][j]);
            std::sort(col.begin(), col.end(), std::greater<Int>());
            for (Int v : col) {
                Int t = add(v, rho[k++]);
                total = add(total, mul(t, t));
            }
        }
        if (best < 0 || total < best)
            best = total;
    }, limit);
    return best;
}

std::vector<Diagram> distinguished_fillings(Seq const & alpha, Seq const & nu, Int window,
                                            std::uint64_t limit)
{
    require_omega_pair(alpha, nu);
    check_window(window);
    std::size_t l = alpha.size();
    DistinctParts dp = distinct_parts(alpha);

    // nu values of each length class, in class order
    std::vector<Seq> blocks(dp.parts.size());
    for (std::size_t i = 0; i < l; ++i) {
        std::size_t t = static_cast<std::size_t>(
            std::find(dp.parts.begin(), dp.parts.end(), alpha[i]) - dp.parts.begin());
        blocks[t].push_back(nu[i]);
    }

    std::vector<Diagram> found;
    std::uint64_t spent = 0;
    Seq order(alpha.rbegin(), alpha.rend());
    do {
        // order[r] is the length of row r of the candidate diagram
        std::vector<Seq> perm = blocks;

        Seq heights(static_cast<std::size_t>(alpha[0]), 0);
        for (Int len : order)
            for (Int j = 0; j < len; ++j)
                ++heights[static_cast<std::size_t>(j)];
        std::vector<Seq> shift(l);
        std::vector<std::vector<std::ptrdiff_t>> above(l);
        {
            std::vector<std::ptrdiff_t> last(heights.size(), -1);
            std::vector<Int> seen(heights.size(), 0);
            for (std::size_t r = 0; r < l; ++r) {
                for (Int j = 0; j < order[r]; ++j) {
                    std::size_t jj = static_cast<std::size_t>(j);
                    Int pos = ++seen[jj];
                    shift[r].push_back(heights[jj] - 2 * pos + 1);
                    above[r].push_back(last[jj]);
                    last[jj] = static_cast<std::ptrdiff_t>(r);
                }
            }
        }
        std::vector<std::size_t> cls(l);
        for (std::size_t r = 0; r < l; ++r)
            cls[r] = static_cast<std::size_t>(
                std::find(dp.parts.begin(), dp.parts.end(), order[r]) - dp.parts.begin());

        std::function<void(std::size_t)> assign = [&](std::size_t t) {
            if (t < perm.size()) {
                Seq & p = perm[t];
                std::sort(p.begin(), p.end());
                do {
                    assign(t + 1);
                } while (std::next_permutation(p.begin(), p.end()));
                return;
            }
            Seq sums(l), lo(l), hi(l);
            std::vector<std::size_t> used(perm.size(), 0);
            for (std::size_t r = 0; r < l; ++r) {
                sums[r] = perm[cls[r]][used[cls[r]]++];
                window_of(sums[r], order[r], window, lo[r], hi[r]);
            }
            spent += arrangement_states(order, sums, window);
            if (spent > limit)
                fail(ErrorCode::limit, "distinguished search space too large: "
                                           + std::to_string(spent) + " states");
            Diagram y(l);
            for (std::size_t r = 0; r < l; ++r)
                y[r].assign(static_cast<std::size_t>(order[r]), 0);
            auto prune = [&](std::size_t r, std::size_t j, Int v) {
                Int yv = v + shift[r][j];
                y[r][j] = yv;
                if (j > 0) {
                    Int step = yv - y[r][j - 1];
                    Int want = ((j - 1) % 2 == 1) ? 1 : -1;
                    if (step != 0 && step != want)
                        return false;
                }
                std::ptrdiff_t up = above[r][j];
                if (up >= 0 && y[static_cast<std::size_t>(up)][j] - yv < 2)
                    return false;
                return true;
            };
            Walker w(order, sums, lo, hi);
            w.run(prune, [&](Diagram const & x) {
                if (kappa(x) == nu && is_distinguished(x, Parity::odd))
                    found.push_back(x);
            });
        };
        assign(0);
    } while (std::next_permutation(order.begin(), order.end()));
    return found;
}

bool Report::ok() const
{
    for (auto const & c : checks)
        if (c.failed)
            return false;
    return true;
}

std::string Report::text() const
{
    std::ostringstream os;
    os << title << ": n_max=" << n_max << " entry_bound=" << entry_bound << " cases=" << cases << '\n';
    for (auto const & c : checks) {
        os << "  " << c.name << ": passed=" << c.passed << " failed=" << c.failed;
        if (c.failed)
            os << " first=" << c.first_failure;
        os << '\n';
    }
    os << (ok() ? "OK" : "FAILED") << '\n';
    return os.str();
}

std::string Report::json() const
{
    nlohmann::json j;
    j["title"] = title;
    j["n_max"] = n_max;
    j["entry_bound"] = entry_bound;
    j["cases"] = cases;
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (auto const & c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["failed"] = c.failed;
        if (c.failed)
            e["first_failure"] = c.first_failure;
        else
            e["first_failure"] = nullptr;
        j["checks"].push_back(e);
    }
    return j.dump();
}

Report roundtrip_sweep(Int n_max, Int entry_bound)
{
    if (n_max < 1 || entry_bound < 0)
        fail(ErrorCode::invalid_argument, "sweep needs n_max >= 1 and entry_bound >= 0");
    Checker ck({"inverse_after_forward", "kappa_recovery", "recursive_equals_iterative",
                "norm_agreement", "forward_routes_agree", "distinguished"});
    Report rep;
    rep.title = "roundtrip";
    rep.n_max = n_max;
    rep.entry_bound = entry_bound;
    for_each_omega_pair(n_max, entry_bound, [&](Seq const & alpha, Seq const & nu) {
        ++rep.cases;
        std::string label = case_label(alpha, nu);
        try {
            Seq rho = two_rho(alpha);
            Seq mu = alg_A(alpha, nu);
            Seq gam = dom(add_seq(mu, rho));
            DiagramPair w = alg_W(alpha, nu, -1);
            OmegaPair back = gamma_inverse(gam);
            ck.record(0, back.alpha == alpha && back.nu == nu,
                      label + " -> alpha=" + join(back.alpha) + " nu=" + join(back.nu));
            Seq kap = kappa(w.x);
            ck.record(1, kap == nu, label + " kappa=" + join(kap));
            Seq it = alg_A_iter(alpha, nu);
            ck.record(2, it == mu, label + " recursive=" + join(mu) + " iterative=" + join(it));
            Int n1 = norm_sq(add_seq(mu, rho));
            Int n2 = norm_sq(add_seq(h_weight(w.x), rho));
            ck.record(3, n1 == n2, label + " " + std::to_string(n1) + " vs " + std::to_string(n2));
            Seq e = eta(w.y);
            ck.record(4, e == gam, label + " seq=" + join(gam) + " diagrams=" + join(e));
            ck.record(5, is_distinguished(w.x, Parity::odd), label + " X=" + diagram_inline(w.x));
        } catch (Error const & err) {
            for (std::size_t k = 0; k < 6; ++k)
                ck.record(k, false, label + " error: " + err.what());
        }
    });
    rep.checks = ck.take();
    return rep;
}

Report oracle_sweep(Int n_max, Int entry_bound, Int window)
{
    if (n_max < 1 || entry_bound < 0)
        fail(ErrorCode::invalid_argument, "sweep needs n_max >= 1 and entry_bound >= 0");
    Checker ck({"minimality", "window_stability", "uniqueness"});
    Report rep;
    rep.title = "oracle";
    rep.n_max = n_max;
    rep.entry_bound = entry_bound;
    for_each_omega_pair(n_max, entry_bound, [&](Seq const & alpha, Seq const & nu) {
        ++rep.cases;
        std::string label = case_label(alpha, nu);
        try {
            Int b = window < 0 ? default_window(alpha) : window;
            Seq rho = two_rho(alpha);
            Int target = norm_sq(add_seq(alg_A(alpha, nu), rho));
            Int m1 = min_norm_over_fillings(alpha, nu, b);
            Int m2 = min_norm_over_fillings(alpha, nu, b + 2);
            ck.record(0, m1 == target, label + " algorithm=" + std::to_string(target)
                                           + " oracle=" + std::to_string(m1));
            ck.record(1, m1 == m2, label + " B=" + std::to_string(m1) + " B+2=" + std::to_string(m2));
            Diagram x = alg_W(alpha, nu, -1).x;
            auto found = distinguished_fillings(alpha, nu, b);
            std::string detail = label + " found=" + std::to_string(found.size());
            if (!found.empty())
                detail += " first=" + diagram_inline(found[0]);
            ck.record(2, found.size() == 1 && found[0] == x, detail);
        } catch (Error const & err) {
            for (std::size_t k = 0; k < 3; ++k)
                ck.record(k, false, label + " error: " + err.what());
        }
    });
    rep.checks = ck.take();
    return rep;
}

}  // namespace lvb
