#include "incolor/latin.hpp"

#include "incolor/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace incolor {

bool is_latin(std::size_t n, std::span<const LatinSquare::Symbol> cells)
{
    if (cells.size() != n * n) {
        return false;
    }
    std::vector<char> row_seen(n * n, 0);
    std::vector<char> col_seen(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t s = cells[r * n + c];
            if (s >= n || row_seen[r * n + s] || col_seen[c * n + s]) {
                return false;
            }
            row_seen[r * n + s] = 1;
            col_seen[c * n + s] = 1;
        }
    }
    return true;
}

LatinSquare LatinSquare::from_cells(std::size_t n, std::vector<Symbol> cells)
{
    if (n > 65536) {
        throw InputError("Latin square order above 65536 is not supported");
    }
    if (!is_latin(n, cells)) {
        throw InputError("matrix of order " + std::to_string(n) + " is not a Latin square");
    }
    LatinSquare l;
    l.n_ = n;
    l.cells_ = std::move(cells);
    return l;
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows)
{
    const std::size_t n = rows.size();
    std::vector<Symbol> cells;
    cells.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) {
            throw InputError("Latin square rows must all have length " + std::to_string(n));
        }
        for (int s : r) {
            if (s < 0 || static_cast<std::size_t>(s) >= n) {
                throw InputError("symbol " + std::to_string(s) + " outside 0.." + std::to_string(n - 1));
            }
            cells.push_back(static_cast<Symbol>(s));
        }
    }
    return from_cells(n, std::move(cells));
}

bool LatinSquare::diagonal_constant() const
{
    for (std::size_t i = 1; i < n_; ++i) {
        if (at(i, i) != at(0, 0)) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> LatinSquare::rows() const
{
    std::vector<std::vector<int>> out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        out[r].assign(row(r).begin(), row(r).end());
    }
    return out;
}

LatinSquare circulant(std::span<const int> symbols)
{
    const std::size_t n = symbols.size();
    if (n == 0) {
        throw InputError("circulant needs at least one symbol");
    }
    std::vector<LatinSquare::Symbol> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int s = symbols[(j + n - i) % n];
            if (s < 0 || static_cast<std::size_t>(s) >= n) {
                throw InputError("circulant symbols must be a permutation of 0..n-1");
            }
            cells[i * n + j] = static_cast<LatinSquare::Symbol>(s);
        }
    }
    return LatinSquare::from_cells(n, std::move(cells));
}

LatinSquare circulant_identity(std::size_t n)
{
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    return circulant(s);
}

namespace {

#ifndef NDEBUG
// Block form [[A, A+nJ], [B, A]] with B = (A+nJ)^T P, P the cyclic shift with
// ones at (k, k+1) and (n, 1) (1-based).
std::vector<LatinSquare::Symbol> nabla_by_blocks(const LatinSquare& a)
{
    const std::size_t n = a.order();
    const std::size_t m = 2 * n;
    std::vector<LatinSquare::Symbol> out(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * m + j] = a.at(i, j);
            out[i * m + j + n] = static_cast<LatinSquare::Symbol>(a.at(i, j) + n);
            out[(i + n) * m + j + n] = a.at(i, j);
            // Column j of P has its single one in row (j - 1) mod n.
            const std::size_t k = (j + n - 1) % n;
            out[(i + n) * m + j] = static_cast<LatinSquare::Symbol>(a.at(k, i) + n);
        }
    }
    return out;
}
#endif

} // namespace

LatinSquare nabla(const LatinSquare& a)
{
    const std::size_t n = a.order();
    const std::size_t m = 2 * n;
    if (m > 65536) {
        throw InputError("nabla result exceeds supported order");
    }
    std::vector<LatinSquare::Symbol> cells(m * m);
    const auto shift = [n](LatinSquare::Symbol s) { return static_cast<LatinSquare::Symbol>(s + n); };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            LatinSquare::Symbol v;
            if (i < n && j < n) {
                v = a.at(i, j);
            } else if (i < n) {
                v = shift(a.at(i, j - n));
            } else if (j == 0) {
                v = shift(a.at(n - 1, i - n));
            } else if (j < n) {
                v = shift(a.at(j - 1, i - n));
            } else {
                v = a.at(i - n, j - n);
            }
            cells[i * m + j] = v;
        }
    }
    assert(n > 64 || cells == nabla_by_blocks(a));
    return LatinSquare::from_cells(m, std::move(cells));
}

LatinSquare nabla_power(const LatinSquare& a, unsigned t)
{
    LatinSquare out = a;
    for (unsigned i = 0; i < t; ++i) {
        out = nabla(out);
    }
    return out;
}

LatinSquare base8()
{
    static const std::vector<std::vector<int>> rows{
        {0, 1, 2, 3, 4, 5, 6, 7}, {2, 0, 7, 4, 5, 3, 1, 6}, {3, 6, 0, 7, 2, 1, 4, 5},
        {4, 5, 6, 0, 3, 2, 7, 1}, {7, 4, 5, 1, 0, 6, 3, 2}, {1, 2, 4, 6, 7, 0, 5, 3},
        {5, 3, 1, 2, 6, 7, 0, 4}, {6, 7, 3, 5, 1, 4, 2, 0},
    };
    return LatinSquare::from_rows(rows);
}

OddDecomposition decompose_even(std::uint64_t n)
{
    if (n == 0 || n % 2 != 0) {
        throw InputError("decompose_even needs a positive even integer");
    }
    if ((n & (n - 1)) == 0) {
        throw InputError(std::to_string(n) + " is a power of two");
    }
    OddDecomposition out;
    while (n % 2 == 0) {
        n /= 2;
        ++out.power;
    }
    out.odd = n;
    return out;
}

LatinSquare latin_square_no_principal(std::size_t n)
{
    if (n == 0) {
        throw InputError("order must be positive");
    }
    if (n == 2 || n == 4) {
        throw InputError("no Latin square of order " + std::to_string(n) +
                         " without principal intercalates and with constant diagonal exists");
    }
    if (n % 2 == 1) {
        return circulant_identity(n);
    }
    if ((n & (n - 1)) == 0) {
        unsigned t = 0;
        while ((std::size_t{1} << t) < n) {
            ++t;
        }
        return nabla_power(base8(), t - 3);
    }
    const OddDecomposition dec = decompose_even(n);
    return nabla_power(circulant_identity(dec.odd), dec.power);
}

std::vector<Intercalate> find_intercalates(const LatinSquare& l, bool principal_only)
{
    const std::size_t n = l.order();
    std::vector<Intercalate> out;
    if (principal_only) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (l.at(i, i) == l.at(j, j) && l.at(i, j) == l.at(j, i)) {
                    out.push_back({i, j, i, j, l.at(i, i), l.at(i, j)});
                }
            }
        }
        return out;
    }
    std::vector<std::size_t> where(n);
    for (std::size_t r1 = 0; r1 < n; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < n; ++r2) {
            for (std::size_t c = 0; c < n; ++c) {
                where[l.at(r2, c)] = c;
            }
            for (std::size_t c1 = 0; c1 < n; ++c1) {
                // Row r2 holds l(r1, c1) in column c2; an intercalate closes if the
                // crossing cells agree.
                const std::size_t c2 = where[l.at(r1, c1)];
                if (c2 > c1 && l.at(r1, c2) == l.at(r2, c1)) {
                    out.push_back({r1, r2, c1, c2, l.at(r1, c1), l.at(r1, c2)});
                }
            }
        }
    }
    return out;
}

bool has_principal_intercalate(const LatinSquare& l)
{
    const std::size_t n = l.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (l.at(i, i) == l.at(j, j) && l.at(i, j) == l.at(j, i)) {
                return true;
            }
        }
    }
    return false;
}

LatinSquare normalize_symbols_diag_zero(const LatinSquare& l)
{
    if (!l.diagonal_constant()) {
        throw InputError("diagonal is not constant");
    }
    if (l.order() == 0 || l.at(0, 0) == 0) {
        return l;
    }
    const LatinSquare::Symbol z = l.at(0, 0);
    std::vector<LatinSquare::Symbol> cells = l.cells();
    for (auto& s : cells) {
        if (s == z) {
            s = 0;
        } else if (s == 0) {
            s = z;
        }
    }
    return LatinSquare::from_cells(l.order(), std::move(cells));
}

LatinSquare permute_rows_constant_diagonal(const LatinSquare& l, int s)
{
    const std::size_t n = l.order();
    if (s < 0 || static_cast<std::size_t>(s) >= n) {
        throw InputError("symbol outside 0..n-1");
    }
    std::vector<LatinSquare::Symbol> cells(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t r = 0; r < n; ++r) {
            if (l.at(r, col) == s) {
                std::copy(l.row(r).begin(), l.row(r).end(), cells.begin() + static_cast<std::ptrdiff_t>(col * n));
                break;
            }
        }
    }
    return LatinSquare::from_cells(n, std::move(cells));
}

void enumerate_latin_squares(std::size_t n, const std::function<void(const LatinSquare&)>& visit)
{
    if (n > 5) {
        throw InputError("exhaustive enumeration is limited to order 5");
    }
    std::vector<LatinSquare::Symbol> cells(n * n);
    std::vector<unsigned> row_used(n, 0);
    std::vector<unsigned> col_used(n, 0);
    const std::function<void(std::size_t)> place = [&](std::size_t pos) {
        if (pos == n * n) {
            visit(LatinSquare::from_cells(n, cells));
            return;
        }
        const std::size_t r = pos / n;
        const std::size_t c = pos % n;
        for (unsigned s = 0; s < n; ++s) {
            const unsigned bit = 1U << s;
            if ((row_used[r] & bit) || (col_used[c] & bit)) {
                continue;
            }
            row_used[r] |= bit;
            col_used[c] |= bit;
            cells[pos] = static_cast<LatinSquare::Symbol>(s);
            place(pos + 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
        }
    };
    place(0);
}

std::string latin_to_text(const LatinSquare& l)
{
    std::ostringstream out;
    for (std::size_t r = 0; r < l.order(); ++r) {
        for (std::size_t c = 0; c < l.order(); ++c) {
            out << (c ? " " : "") << l.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

LatinSquare latin_from_text(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoi(tok, &used));
                if (used != tok.size()) {
                    throw InputError("bad symbol '" + tok + "'");
                }
            } catch (const std::logic_error&) {
                throw InputError("bad symbol '" + tok + "'");
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return LatinSquare::from_rows(rows);
}

} // namespace incolor
