#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace incolor {

/// n x n Latin square over symbols 0..n-1, stored row-major.
///
/// Indices are 0-based. The constructor rejects anything that is not Latin,
/// so every LatinSquare value satisfies the row/column permutation invariant.
class LatinSquare {
public:
    using Symbol = std::uint16_t;

    LatinSquare() = default;

    /// Throws InputError unless rows form a Latin square.
    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);
    /// Throws InputError unless cells (row-major, n*n entries) form a Latin square.
    static LatinSquare from_cells(std::size_t n, std::vector<Symbol> cells);

    std::size_t order() const { return n_; }
    Symbol at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
    std::span<const Symbol> row(std::size_t r) const { return {cells_.data() + r * n_, n_}; }
    const std::vector<Symbol>& cells() const { return cells_; }

    bool diagonal_constant() const;
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Symbol> cells_;
};

/// True if every symbol occurs exactly once per row and column.
bool is_latin(std::size_t n, std::span<const LatinSquare::Symbol> cells);

/// (a_0..a_{n-1})_circ: cell (i, j) = symbols[(j - i) mod n].
/// symbols must be a permutation of 0..n-1.
LatinSquare circulant(std::span<const int> symbols);
LatinSquare circulant_identity(std::size_t n);

/// Order-doubling operator: top-left A, top-right A+n, bottom-right A, and
/// bottom-left the transposed, column-rotated copy of A+n.
LatinSquare nabla(const LatinSquare& a);
/// nabla applied t times (t = 0 returns a).
LatinSquare nabla_power(const LatinSquare& a, unsigned t);

/// The fixed 8 x 8 seed square used for orders 2^t, t >= 3.
LatinSquare base8();

struct OddDecomposition {
    std::uint64_t odd = 0;
    unsigned power = 0;
};
/// n = 2^power * odd with odd >= 3. Requires n even and not a power of two.
OddDecomposition decompose_even(std::uint64_t n);

/// Latin square of order n with zero diagonal and no principal intercalate, in O(n^2).
/// Throws InputError for n in {2, 4}, where none exists.
LatinSquare latin_square_no_principal(std::size_t n);

/// Rows (r1, r2) and columns (c1, c2), with cells (r1,c1) = (r2,c2) = a and
/// (r1,c2) = (r2,c1) = b.
struct Intercalate {
    std::size_t r1 = 0;
    std::size_t r2 = 0;
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    int a = 0;
    int b = 0;

    bool principal() const { return r1 == c1 && r2 == c2; }

    friend bool operator==(const Intercalate&, const Intercalate&) = default;
};

/// All intercalates (r1 < r2, c1 < c2), or only principal ones.
std::vector<Intercalate> find_intercalates(const LatinSquare& l, bool principal_only);
bool has_principal_intercalate(const LatinSquare& l);

/// Permutes symbols so the (constant) diagonal becomes 0. Throws InputError on a
/// non-constant diagonal.
LatinSquare normalize_symbols_diag_zero(const LatinSquare& l);

/// Reorders rows so that every diagonal cell equals s.
LatinSquare permute_rows_constant_diagonal(const LatinSquare& l, int s);

/// Calls visit for every Latin square of order n (n <= 5).
void enumerate_latin_squares(std::size_t n, const std::function<void(const LatinSquare&)>& visit);

std::string latin_to_text(const LatinSquare& l);
/// Parses n lines of n space-separated symbols. Throws InputError when the
/// matrix is ragged or not Latin.
LatinSquare latin_from_text(std::string_view text);

} // namespace incolor
