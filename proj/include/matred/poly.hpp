#ifndef MATRED_POLY_HPP
#define MATRED_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "matred/bounds.hpp"
#include "matred/gf.hpp"

namespace matred {

/// Univariate polynomial over a fixed GF(q), coefficients low degree first
/// with no trailing zeros (the zero polynomial has an empty vector).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Field field, const std::vector<FieldElement>& coeffs);

    static Polynomial from_raw(Field field, std::vector<std::uint64_t> raw);
    static Polynomial zero(const Field& f) { return from_raw(f, {}); }
    static Polynomial one(const Field& f) { return from_raw(f, {1}); }
    static Polynomial x(const Field& f) { return from_raw(f, {0, 1}); }
    /// x - c
    static Polynomial x_minus(const FieldElement& c);

    const Field& field() const { return field_; }
    const std::vector<std::uint64_t>& raw() const { return c_; }
    /// degree; -1 stands in for the zero polynomial's -infinity
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t coeff_raw(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return {field_, coeff_raw(i)}; }
    FieldElement leading() const { return {field_, c_.empty() ? 0 : c_.back()}; }

    bool operator==(const Polynomial& o) const { return same_spec(field_, o.field_) && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    Field field_;
    std::vector<std::uint64_t> c_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const FieldElement& s);
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial make_monic(const Polynomial& a);
Polynomial derivative(const Polynomial& a);
FieldElement eval(const Polynomial& f, const FieldElement& at);
Polynomial pow_mod(const Polynomial& base, const Nat& exp, const Polynomial& mod);
Polynomial pow_mod(const Polynomial& base, std::uint64_t exp, const Polynomial& mod);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }
inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// The single tie-break rule used everywhere: compare by degree, then by the
/// coefficient tuple (c_{d-1}, ..., c_0) with each coefficient ordered by its
/// canonical packed value. Returns <0, 0, >0.
int compare_canonical(const Polynomial& a, const Polynomial& b);

struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Polynomial, std::uint64_t>> factors; // canonically sorted, distinct

    /// unit * prod factor^multiplicity
    Polynomial reassemble() const;
};

/// Complete factorization into monic irreducibles. `seed` drives the
/// randomized equal-degree splitting only; the canonical (sorted) output is
/// seed-independent.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0);

/// Rabin test: f monic of degree d >= 1 is irreducible iff x^{q^d} = x mod f
/// and gcd(x^{q^{d/l}} - x, f) = 1 for every prime l | d.
bool is_irreducible(const Polynomial& f);

/// Multiplicative order of the residue x in GF(q)[x]/(f), f monic irreducible
/// with nonzero constant term. Factors q^d - 1 by trial division up to
/// `factor_bound` and fails loudly (FactorBoundExceeded) if that is not
/// enough, rather than returning a multiple of the order.
Nat root_order(const Polynomial& f, std::uint64_t factor_bound = kDefaultFactorBound);

/// Lexicographically smallest monic irreducible of degree d over the field
/// whose root has multiplicative order q^d - 1 (a Singer polynomial).
Polynomial singer_polynomial(const Field& field, unsigned d,
                             std::uint64_t factor_bound = kDefaultFactorBound);

} // namespace matred

#endif
