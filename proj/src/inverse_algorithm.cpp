#include "lvb/inverse_algorithm.hpp"

#include <algorithm>

namespace lvb {

namespace {

void require_lambda(Seq const & lambda)
{
    if (lambda.empty())
        fail(ErrorCode::invalid_argument, "lambda is empty");
    if (!is_weakly_decreasing(lambda))
        fail(ErrorCode::invalid_argument, "lambda is not weakly decreasing: [" + join(lambda) + "]");
}

}  // namespace

std::vector<Seq> clumps(Seq const & lambda)
{
    require_lambda(lambda);
    std::vector<Seq> out(1);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i > 0 && sub(lambda[i - 1], lambda[i]) > 1)
            out.emplace_back();
        out.back().push_back(lambda[i]);
    }
    return out;
}

Extraction majuscule_extract(Seq const & clump, int eps)
{
    if (eps != -1 && eps != 1)
        fail(ErrorCode::invalid_argument, "eps must be -1 or +1");
    require_lambda(clump);
    for (std::size_t i = 0; i + 1 < clump.size(); ++i)
        if (clump[i] - clump[i + 1] > 1)
            fail(ErrorCode::invalid_argument, "not a clump: [" + join(clump) + "]");

    std::size_t n = clump.size();
    std::vector<char> taken(n, 0);
    if (eps < 0) {
        std::size_t last = 0;
        taken[0] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            if (clump[k] <= clump[last] - 2) {
                taken[k] = 1;
                last = k;
            }
        }
    } else {
        std::size_t last = n - 1;
        taken.back() = 1;
        for (std::size_t k = n - 1; k-- > 0;) {
            if (clump[k] >= clump[last] + 2) {
                taken[k] = 1;
                last = k;
            }
        }
    }
    Extraction e;
    for (std::size_t k = 0; k < n; ++k)
        (taken[k] ? e.majuscule : e.remainder).push_back(clump[k]);
    e.remainder = dom(e.remainder);
    return e;
}

Diagram alg_B(Seq const & lambda, int eps)
{
    if (eps != -1 && eps != 1)
        fail(ErrorCode::invalid_argument, "eps must be -1 or +1");
    std::vector<Diagram> parts;
    for (auto const & cl : clumps(lambda)) {
        Extraction e = majuscule_extract(cl, eps);
        Diagram d;
        for (Int v : e.majuscule)
            d.push_back({v});
        if (!e.remainder.empty()) {
            Diagram sub_d = alg_B(e.remainder, -eps);
            std::vector<char> used(d.size(), 0);
            for (auto const & row : sub_d) {
                std::size_t hit = d.size();
                for (std::size_t i = 0; i < d.size(); ++i) {
                    Int diff = sub(row[0], d[i][0]);
                    if (diff == 0 || diff == eps) {
                        if (hit != d.size())
                            fail(ErrorCode::internal, "attachment row is not unique");
                        hit = i;
                    }
                }
                if (hit == d.size())
                    fail(ErrorCode::internal, "no row to attach to");
                if (used[hit])
                    fail(ErrorCode::internal, "two rows attach to the same first-column box");
                used[hit] = 1;
                d[hit].insert(d[hit].end(), row.begin(), row.end());
            }
        }
        parts.push_back(std::move(d));
    }
    return concat(parts);
}

OmegaPair gamma_inverse(Seq const & lambda)
{
    Diagram x = e_inverse(alg_B(lambda, -1));
    return {shape_class(x), kappa(x)};
}

}  // namespace lvb
