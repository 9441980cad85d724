#ifndef MATRED_MATRIX_HPP
#define MATRED_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "matred/poly.hpp"

namespace matred {

inline constexpr std::size_t kDefaultExpBitCeiling = std::size_t{1} << 20;

/// Exact n x n matrix over GF(q), row-major packed entries.
class SquareMatrix {
  public:
    SquareMatrix() = default;
    SquareMatrix(Field field, std::size_t n)
        : field_(std::move(field)), n_(n), a_(n * n, 0) {
        if (n == 0) throw Error(Errc::InvalidInput, "matrix dimension must be >= 1");
    }

    static SquareMatrix identity(const Field& f, std::size_t n) {
        SquareMatrix m(f, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }
    static SquareMatrix from_raw(Field f, std::size_t n, std::vector<std::uint64_t> entries);

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    const std::vector<std::uint64_t>& raw() const { return a_; }

    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * n_ + j] = v; }
    FieldElement elem(std::size_t i, std::size_t j) const { return {field_, at(i, j)}; }

    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const SquareMatrix& o) const {
        return n_ == o.n_ && same_spec(field_, o.field_) && a_ == o.a_;
    }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

  private:
    Field field_;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> a_;
};

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_scale(const SquareMatrix& a, const FieldElement& s);

std::size_t rank(const SquareMatrix& a);

/// rank(A - I): how far A is from the identity.
std::size_t degree(const SquareMatrix& a);

bool invertible(const SquareMatrix& a);
SquareMatrix inverse(const SquareMatrix& a); // throws Singular

/// Companion matrix of a monic f of degree d >= 1: ones on the subdiagonal,
/// last column the negated low-order coefficients. charpoly(companion(f)) = f.
SquareMatrix companion(const Polynomial& f);

SquareMatrix block_diag(const std::vector<SquareMatrix>& blocks);

/// One generalized Jordan block: `size` copies of companion(f) on the block
/// diagonal with identity super-blocks. Dimension size * deg(f).
SquareMatrix jordan_block_matrix(const Polynomial& f, std::size_t size);

Polynomial charpoly(const SquareMatrix& a);
Polynomial minpoly(const SquareMatrix& a);

/// A^k by binary exponentiation (A^0 = I). Refuses exponents whose bit length
/// exceeds the ceiling so that huge synthesized exponents stay on the
/// symbolic path.
SquareMatrix mat_pow_big(const SquareMatrix& a, const Nat& k,
                         std::size_t max_exp_bits = kDefaultExpBitCeiling);

/// Matrix-vector product A*v on raw packed values.
std::vector<std::uint64_t> mat_vec(const SquareMatrix& a, const std::vector<std::uint64_t>& v);

/// Horner evaluation of f at a matrix argument.
SquareMatrix poly_at_matrix(const Polynomial& f, const SquareMatrix& a);

/// Block structure of the generalized Jordan normal form. `size` counts the
/// companion copies stacked inside one Jordan block (the block's dimension is
/// size * deg(factor)); `mult` counts equal blocks. No conjugating matrix is
/// computed anywhere.
struct JordanStructure {
    struct Block {
        Polynomial factor;
        std::uint64_t size = 0;
        std::uint64_t mult = 0;
    };
    std::vector<Block> blocks; // sorted by (factor canonical order, size)
    std::size_t n = 0;

    std::uint64_t max_block_size() const;
    /// sum over blocks of size * mult for a given factor
    std::uint64_t total_multiplicity_of(const Polynomial& f) const;
};

/// Recovers the Jordan block multiset from rank sequences of f(A)^j: the
/// number of blocks for factor f of size >= j is
/// (rank f(A)^{j-1} - rank f(A)^j) / deg f.
JordanStructure jordan_structure(const SquareMatrix& a, std::uint64_t seed = 0);

/// Same, reusing an already computed factorization of charpoly(a).
JordanStructure jordan_structure(const SquareMatrix& a, const Factorization& fact);

} // namespace matred

#endif
