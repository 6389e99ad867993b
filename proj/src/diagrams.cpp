#include "lvb/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lvb {

void require_diagram(Diagram const & d)
{
    for (auto const & row : d)
        if (row.empty())
            fail(ErrorCode::invalid_argument, "diagram has an empty row");
}

Seq shape_class(Diagram const & d)
{
    Seq lengths;
    for (auto const & row : d)
        lengths.push_back(static_cast<Int>(row.size()));
    return dom(lengths);
}

Seq column_heights(Diagram const & d)
{
    std::size_t s = 0;
    for (auto const & row : d)
        s = std::max(s, row.size());
    Seq h(s, 0);
    for (auto const & row : d)
        for (std::size_t j = 0; j < row.size(); ++j)
            ++h[j];
    return h;
}

std::vector<std::size_t> column_rows(Diagram const & d, std::size_t j)
{
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i].size() > j)
            rows.push_back(i);
    return rows;
}

std::size_t column_position(Diagram const & d, std::size_t i, std::size_t j)
{
    if (i >= d.size() || j >= d[i].size())
        fail(ErrorCode::invalid_argument, "box outside the diagram");
    std::size_t pos = 0;
    for (std::size_t r = 0; r < i; ++r)
        if (d[r].size() > j)
            ++pos;
    return pos;
}

namespace {

Diagram shift(Diagram const & d, int sign)
{
    require_diagram(d);
    Seq h = column_heights(d);
    Diagram out = d;
    std::vector<Int> seen(h.size(), 0);
    for (auto & row : out) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            // position i is one based here
            Int i = ++seen[j];
            Int delta = h[j] - 2 * i + 1;
            row[j] = sign > 0 ? add(row[j], delta) : sub(row[j], delta);
        }
    }
    return out;
}

}  // namespace

Diagram e_map(Diagram const & x)
{
    return shift(x, 1);
}

Diagram e_inverse(Diagram const & y)
{
    return shift(y, -1);
}

Seq kappa(Diagram const & x)
{
    require_diagram(x);
    std::map<std::size_t, Seq, std::greater<std::size_t>> groups;
    for (auto const & row : x)
        groups[row.size()].push_back(sum(row));
    Seq out;
    for (auto & [len, sums] : groups) {
        Seq block = dom(sums);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

Seq h_weight(Diagram const & x)
{
    require_diagram(x);
    Seq h = column_heights(x);
    Seq out;
    for (std::size_t j = 0; j < h.size(); ++j) {
        Seq col;
        for (auto const & row : x)
            if (row.size() > j)
                col.push_back(row[j]);
        col = dom(col);
        out.insert(out.end(), col.begin(), col.end());
    }
    return out;
}

Seq eta(Diagram const & y)
{
    require_diagram(y);
    Seq all;
    for (auto const & row : y)
        all.insert(all.end(), row.begin(), row.end());
    return dom(all);
}

Diagram truncate_columns(Diagram const & x, std::size_t j)
{
    if (j < 1)
        fail(ErrorCode::invalid_argument, "column index must be at least 1");
    Diagram out;
    for (auto const & row : x)
        if (row.size() > j - 1)
            out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(j - 1), row.end());
    return out;
}

Diagram concat(std::vector<Diagram> const & parts)
{
    Diagram out;
    for (auto const & p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool is_raisable(Diagram const & y, std::size_t i, std::size_t j)
{
    std::size_t pos = column_position(y, i, j);
    if (pos == 0)
        return true;
    std::size_t up = i;
    do {
        --up;
    } while (y[up].size() <= j);
    return y[up][j] > add(y[i][j], 2);
}

bool is_lowerable(Diagram const & y, std::size_t i, std::size_t j)
{
    if (i >= y.size() || j >= y[i].size())
        fail(ErrorCode::invalid_argument, "box outside the diagram");
    std::size_t down = i + 1;
    while (down < y.size() && y[down].size() <= j)
        ++down;
    if (down == y.size())
        return true;
    return y[down][j] < sub(y[i][j], 2);
}

bool is_distinguished_shifted(Diagram const & y, Parity parity)
{
    require_diagram(y);
    // For odd parity the step after column j (one based) is in {0, (-1)^j};
    // with zero-based j that is 1 when j is odd, -1 when j is even.
    for (std::size_t i = 0; i < y.size(); ++i) {
        auto const & row = y[i];
        for (std::size_t j = 0; j + 1 < row.size(); ++j) {
            Int step = row[j + 1] - row[j];
            Int want = (j % 2 == 1) ? 1 : -1;
            if (parity == Parity::even)
                want = -want;
            if (step != 0 && step != want)
                return false;
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            for (std::size_t k = j + 1; k < row.size(); ++k) {
                Int a = row[j], b = row[k];
                if (j % 2 == k % 2) {
                    // one-based parity of j is the opposite of zero-based
                    bool one_based_odd = (j % 2 == 0);
                    bool raise_case = (parity == Parity::odd) ? one_based_odd : !one_based_odd;
                    if (raise_case) {
                        if (a <= b - 1 && is_raisable(y, i, j))
                            return false;
                    } else {
                        if (a >= b + 1 && is_lowerable(y, i, j))
                            return false;
                    }
                }
                if (a <= b - 2 && is_raisable(y, i, j))
                    return false;
                if (a >= b + 2 && is_lowerable(y, i, j))
                    return false;
            }
        }
    }
    Seq h = column_heights(y);
    for (std::size_t j = 0; j < h.size(); ++j) {
        auto rows = column_rows(y, j);
        for (std::size_t p = 0; p + 1 < rows.size(); ++p)
            if (y[rows[p]][j] - y[rows[p + 1]][j] < 2)
                return false;
    }
    return true;
}

bool is_distinguished(Diagram const & x, Parity parity)
{
    return is_distinguished_shifted(e_map(x), parity);
}

std::string render(Diagram const & d)
{
    std::string out;
    for (auto const & row : d) {
        out += join(row, " ");
        out += '\n';
    }
    return out;
}

Diagram parse_diagram(std::string const & text)
{
    Diagram d;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Seq row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (std::exception const &) {
                fail(ErrorCode::invalid_argument, "bad diagram entry '" + tok + "'");
            }
            if (used != tok.size())
                fail(ErrorCode::invalid_argument, "bad diagram entry '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty())
            d.push_back(std::move(row));
    }
    return d;
}

}  // namespace lvb
