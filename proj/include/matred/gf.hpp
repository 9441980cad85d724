#ifndef MATRED_GF_HPP
#define MATRED_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "matred/bigint.hpp"
#include "matred/errors.hpp"

namespace matred {

/// Immutable description of GF(p^e): the characteristic, the extension degree
/// and the monic irreducible modulus used to represent the extension.
/// Elements are stored packed into a single word: an element with coefficient
/// vector (c_0, ..., c_{e-1}) (low degree first, each in [0,p)) is encoded as
/// the mixed-radix value sum c_i * p^i. This keeps q = p^e <= 2^32 elements in
/// one uint64_t and makes canonical (in)equality a word compare.
class FieldSpec {
  public:
    static constexpr std::uint64_t kMaxQ = (std::uint64_t{1} << 32);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    Nat q_nat() const { return nat_from_u64(q_); }
    bool prime_field() const { return e_ == 1; }

    /// Modulus coefficients, low degree first, length e+1, monic.
    /// For e == 1 this is the placeholder x (coefficients {0, 1}).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // Raw element arithmetic on packed encodings. Callers must pass values
    // produced by this spec; encodings are not interchangeable across specs.
    // The prime-field cases are inline so kernels pay no call overhead.
    std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const {
        if (e_ == 1) return (a + b) % p_;
        return add_raw_ext(a, b);
    }
    std::uint64_t sub_raw(std::uint64_t a, std::uint64_t b) const {
        if (e_ == 1) return (a + p_ - b) % p_;
        return sub_raw_ext(a, b);
    }
    std::uint64_t neg_raw(std::uint64_t a) const { return sub_raw(0, a); }
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
        if (e_ == 1) return (a * b) % p_;
        return mul_raw_ext(a, b);
    }
    std::uint64_t inv_raw(std::uint64_t a) const; // throws DivisionByZero on 0
    std::uint64_t pow_raw(std::uint64_t a, const Nat& k) const;
    std::uint64_t pow_raw_u64(std::uint64_t a, std::uint64_t k) const;
    std::uint64_t frobenius_raw(std::uint64_t a) const { return pow_raw_u64(a, p_); }

    std::uint64_t encode(const std::vector<std::uint64_t>& coeffs) const;
    std::vector<std::uint64_t> decode(std::uint64_t a) const;

  private:
    friend std::shared_ptr<const FieldSpec> build_field(std::uint64_t, unsigned);
    friend std::shared_ptr<const FieldSpec> make_field(std::uint64_t, unsigned,
                                                       const std::vector<std::uint64_t>&);
    FieldSpec() = default;
    static std::shared_ptr<FieldSpec> alloc(std::uint64_t p, unsigned e,
                                            std::vector<std::uint64_t> modulus, std::uint64_t q);

    std::uint64_t add_raw_ext(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_raw_ext(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_raw_ext(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> p_pows_;   // p^0 .. p^e
    std::uint64_t mod_mask_ = 0;          // p == 2 only: modulus as bitmask
};

using Field = std::shared_ptr<const FieldSpec>;

inline bool same_spec(const Field& a, const Field& b) {
    return a == b || (a && b && *a == *b);
}

/// Deterministic field construction: the modulus is the lexicographically
/// smallest monic irreducible of degree e over GF(p), ordering coefficient
/// tuples (c_{e-1}, ..., c_0) ascending. Repeated calls are bit-identical.
Field build_field(std::uint64_t p, unsigned e);

/// Field with a caller-supplied modulus (validated: monic, degree e,
/// irreducible over GF(p); for e == 1 the modulus must be x).
Field make_field(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus);

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field field, std::uint64_t raw) : field_(std::move(field)), raw_(raw) {}

    static FieldElement from_coeffs(const Field& f, const std::vector<std::uint64_t>& coeffs) {
        return FieldElement(f, f->encode(coeffs));
    }
    /// Residue embedding: k mod p as a constant element.
    static FieldElement from_int(const Field& f, std::uint64_t k) {
        return FieldElement(f, k % f->p());
    }

    const Field& field() const { return field_; }
    std::uint64_t raw() const { return raw_; }
    std::vector<std::uint64_t> coeffs() const { return field_->decode(raw_); }
    bool is_zero() const { return raw_ == 0; }
    bool is_one() const { return raw_ == 1; }

    bool operator==(const FieldElement& o) const { return same_spec(field_, o.field_) && raw_ == o.raw_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    Field field_;
    std::uint64_t raw_ = 0;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, const Nat& k);
FieldElement pow(const FieldElement& a, std::uint64_t k);
FieldElement frobenius(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

inline FieldElement zero(const Field& f) { return FieldElement(f, 0); }
inline FieldElement one(const Field& f) { return FieldElement(f, 1); }

} // namespace matred

#endif
