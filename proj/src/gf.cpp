#include "matred/gf.hpp"

#include <algorithm>
#include <string>

#include "matred/poly.hpp"

namespace matred {

namespace {

// Dense polynomial helpers over the prime field GF(p), digits in [0,p).
// Only what extended-gcd inversion needs; everything else goes through the
// poly module.
using PVec = std::vector<std::uint64_t>;

void ptrim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// r -= q_coef * x^shift * b   (in place, mod p)
void psubmul(PVec& r, std::uint64_t q_coef, std::size_t shift, const PVec& b, std::uint64_t p) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = (q_coef * b[i]) % p;
        std::uint64_t& slot = r[i + shift];
        slot = (slot + p - sub) % p;
    }
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p);
}

// (quotient, remainder) of a / b over GF(p); b nonzero
std::pair<PVec, PVec> pdivmod(PVec a, const PVec& b, std::uint64_t p) {
    PVec q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = (a.back() * lead_inv) % p;
        std::size_t shift = a.size() - b.size();
        if (c != 0) {
            q[shift] = c;
            psubmul(a, c, shift, b, p);
        }
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return {std::move(q), std::move(a)};
}

PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

PVec psub(PVec a, const PVec& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

std::uint64_t checked_pow_q(std::uint64_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > FieldSpec::kMaxQ / p)
            throw Error(Errc::InvalidInput,
                        "p^e exceeds the size budget q <= 2^32 (p=" + std::to_string(p) +
                            ", e=" + std::to_string(e) + ")");
        q *= p;
    }
    return q;
}

} // namespace

std::shared_ptr<FieldSpec> FieldSpec::alloc(std::uint64_t p, unsigned e,
                                            std::vector<std::uint64_t> modulus, std::uint64_t q) {
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->p_ = p;
    s->e_ = e;
    s->q_ = q;
    s->modulus_ = std::move(modulus);
    s->p_pows_.resize(e + 1);
    s->p_pows_[0] = 1;
    for (unsigned i = 1; i <= e; ++i) s->p_pows_[i] = s->p_pows_[i - 1] * p;
    if (p == 2) {
        s->mod_mask_ = 0;
        for (unsigned i = 0; i <= e; ++i)
            if (s->modulus_[i]) s->mod_mask_ |= std::uint64_t{1} << i;
    }
    return s;
}

std::uint64_t FieldSpec::add_raw_ext(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, pa = a, pb = b;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((pa % p_ + pb % p_) % p_) * p_pows_[i];
        pa /= p_;
        pb /= p_;
    }
    return r;
}

std::uint64_t FieldSpec::sub_raw_ext(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, pa = a, pb = b;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((pa % p_ + p_ - pb % p_) % p_) * p_pows_[i];
        pa /= p_;
        pb /= p_;
    }
    return r;
}

std::uint64_t FieldSpec::mul_raw_ext(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) {
        std::uint64_t prod = 0, x = a, y = b;
        while (y) {
            if (y & 1) prod ^= x;
            x <<= 1;
            y >>= 1;
        }
        for (int i = 2 * static_cast<int>(e_) - 2; i >= static_cast<int>(e_); --i)
            if ((prod >> i) & 1) prod ^= mod_mask_ << (i - e_);
        return prod;
    }
    std::uint64_t da[32], db[32], buf[63] = {0};
    std::uint64_t pa = a, pb = b;
    for (unsigned i = 0; i < e_; ++i) {
        da[i] = pa % p_;
        db[i] = pb % p_;
        pa /= p_;
        pb /= p_;
    }
    for (unsigned i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < e_; ++j) buf[i + j] = (buf[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * static_cast<int>(e_) - 2; i >= static_cast<int>(e_); --i) {
        std::uint64_t c = buf[i];
        if (!c) continue;
        buf[i] = 0;
        for (unsigned j = 0; j < e_; ++j) {
            if (!modulus_[j]) continue;
            buf[i - e_ + j] = (buf[i - e_ + j] + c * (p_ - modulus_[j])) % p_;
        }
    }
    std::uint64_t r = 0;
    for (unsigned i = 0; i < e_; ++i) r += buf[i] * p_pows_[i];
    return r;
}

std::uint64_t FieldSpec::inv_raw(std::uint64_t a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (e_ == 1) return inv_mod_p(a, p_);
    // extended gcd of a with the modulus over GF(p)
    PVec r0 = modulus_, r1 = decode(a);
    ptrim(r1);
    PVec t0, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        PVec t2 = psub(t0, pmul(q, t1, p_), p_);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t scale = inv_mod_p(r0.back(), p_); // r0 is a nonzero constant
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < t0.size(); ++i) out += ((t0[i] * scale) % p_) * p_pows_[i];
    return out;
}

std::uint64_t FieldSpec::pow_raw_u64(std::uint64_t a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    k %= (q_ - 1);
    if (k == 0) return 1;
    std::uint64_t r = 1, base = a;
    while (k) {
        if (k & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::pow_raw(std::uint64_t a, const Nat& k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    // exponent reduction modulo the multiplicative group order is exact
    std::uint64_t kr = mpz_fdiv_ui(k.get_mpz_t(), static_cast<unsigned long>(q_ - 1));
    if (kr == 0) return 1;
    return pow_raw_u64(a, kr);
}

std::uint64_t FieldSpec::encode(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > e_)
        throw Error(Errc::InvalidInput, "coefficient vector longer than extension degree");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_)
            throw Error(Errc::InvalidInput, "coefficient not reduced mod p");
        r += coeffs[i] * p_pows_[i];
    }
    return r;
}

std::vector<std::uint64_t> FieldSpec::decode(std::uint64_t a) const {
    std::vector<std::uint64_t> out(e_);
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Field build_field(std::uint64_t p, unsigned e) {
    if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p));
    if (e == 0) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
    std::uint64_t q = checked_pow_q(p, e);
    if (e == 1) return alloc_spec(p, 1, {0, 1}, p);

    Field gp = build_field(p, 1);
    // Scan coefficient tuples (c_{e-1}, ..., c_0) in ascending order; the
    // packed low part of the candidate is exactly the loop counter.
    std::uint64_t count = q; // p^e candidates
    for (std::uint64_t k = 0; k < count; ++k) {
        if (k % p == 0) continue; // constant term 0 => divisible by x
        std::vector<std::uint64_t> mod(e + 1);
        std::uint64_t t = k;
        for (unsigned i = 0; i < e; ++i) {
            mod[i] = t % p;
            t /= p;
        }
        mod[e] = 1;
        std::vector<FieldElement> cs;
        cs.reserve(e + 1);
        for (auto c : mod) cs.emplace_back(gp, c);
        if (is_irreducible(Polynomial(gp, cs))) return alloc_spec(p, e, std::move(mod), q);
    }
    throw Error(Errc::InvalidInput, "no irreducible modulus found"); // unreachable
}

Field make_field(std::uint64_t p, unsigned e, const std::vector<std::uint64_t>& modulus) {
    if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p));
    if (e == 0) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
    std::uint64_t q = checked_pow_q(p, e);
    if (modulus.size() != e + 1 || modulus.back() != 1)
        throw Error(Errc::NotMonic, "modulus must be monic of degree e");
    for (auto c : modulus)
        if (c >= p) throw Error(Errc::InvalidInput, "modulus coefficient not reduced mod p");
    if (e == 1) {
        if (modulus[0] != 0)
            throw Error(Errc::InvalidInput, "prime-field modulus must be the placeholder x");
        return alloc_spec(p, 1, {0, 1}, p);
    }
    Field gp = build_field(p, 1);
    std::vector<FieldElement> cs;
    cs.reserve(e + 1);
    for (auto c : modulus) cs.emplace_back(gp, c);
    if (!is_irreducible(Polynomial(gp, cs)))
        throw Error(Errc::NotIrreducible, "modulus is reducible over GF(p)");
    return alloc_spec(p, e, modulus, q);
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!same_spec(a.field(), b.field()))
        throw Error(Errc::SpecMismatch, "operands live in different fields");
}
} // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->add_raw(a.raw(), b.raw())};
}
FieldElement sub(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->sub_raw(a.raw(), b.raw())};
}
FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->mul_raw(a.raw(), b.raw())};
}
FieldElement neg(const FieldElement& a) { return {a.field(), a.field()->neg_raw(a.raw())}; }
FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv_raw(a.raw())}; }
FieldElement pow(const FieldElement& a, const Nat& k) { return {a.field(), a.field()->pow_raw(a.raw(), k)}; }
FieldElement pow(const FieldElement& a, std::uint64_t k) {
    return {a.field(), a.field()->pow_raw_u64(a.raw(), k)};
}
FieldElement frobenius(const FieldElement& a) { return {a.field(), a.field()->frobenius_raw(a.raw())}; }

} // namespace matred
