#include "matred/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace matred {

namespace {

using RawVec = std::vector<std::uint64_t>;

// Hot loops run over raw packed values with an inlined prime-field fast path;
// extension fields fall through to FieldSpec.
struct Ctx {
    const FieldSpec* s;
    std::uint64_t p;
    bool prime;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return prime ? (a + b) % p : s->add_raw(a, b);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return prime ? (a + p - b) % p : s->sub_raw(a, b);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return prime ? (a * b) % p : s->mul_raw(a, b);
    }
    std::uint64_t inv(std::uint64_t a) const { return s->inv_raw(a); }
};

Ctx ctx_of(const Field& f) { return Ctx{f.get(), f->p(), f->e() == 1}; }

void trim(RawVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

RawVec vadd(const Ctx& c, const RawVec& a, const RawVec& b) {
    RawVec r = a.size() >= b.size() ? a : b;
    const RawVec& small = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < small.size(); ++i) r[i] = c.add(r[i], small[i]);
    trim(r);
    return r;
}

RawVec vsub(const Ctx& c, RawVec a, const RawVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = c.sub(a[i], b[i]);
    trim(a);
    return a;
}

RawVec vmul(const Ctx& c, const RawVec& a, const RawVec& b) {
    if (a.empty() || b.empty()) return {};
    RawVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = c.add(r[i + j], c.mul(a[i], b[j]));
        }
    }
    return r;
}

RawVec vscale(const Ctx& c, RawVec a, std::uint64_t s) {
    for (auto& v : a) v = c.mul(v, s);
    trim(a);
    return a;
}

// divisor must be nonzero
void vdivmod(const Ctx& c, RawVec a, const RawVec& b, RawVec& q_out, RawVec& r_out) {
    trim(a);
    if (a.size() < b.size()) {
        q_out.clear();
        r_out = std::move(a);
        return;
    }
    RawVec q(a.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = c.inv(b.back());
    for (std::size_t shift = q.size(); shift-- > 0;) {
        std::size_t pos = shift + b.size() - 1;
        if (a[pos] == 0) continue;
        std::uint64_t coef = c.mul(a[pos], lead_inv);
        q[shift] = coef;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            a[shift + j] = c.sub(a[shift + j], c.mul(coef, b[j]));
        }
    }
    a.resize(b.size() - 1);
    trim(a);
    q_out = std::move(q);
    r_out = std::move(a);
}

RawVec vmod(const Ctx& c, RawVec a, const RawVec& b) {
    RawVec q, r;
    vdivmod(c, std::move(a), b, q, r);
    return r;
}

RawVec vmulmod(const Ctx& c, const RawVec& a, const RawVec& b, const RawVec& m) {
    return vmod(c, vmul(c, a, b), m);
}

RawVec vmonic(const Ctx& c, RawVec a) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    return vscale(c, std::move(a), c.inv(a.back()));
}

RawVec vgcd(const Ctx& c, RawVec a, RawVec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RawVec r = vmod(c, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return vmonic(c, std::move(a));
}

RawVec vpowmod_u64(const Ctx& c, RawVec base, std::uint64_t e, const RawVec& m) {
    RawVec r{1};
    base = vmod(c, std::move(base), m);
    while (e) {
        if (e & 1) r = vmulmod(c, r, base, m);
        base = vmulmod(c, base, base, m);
        e >>= 1;
    }
    return r;
}

RawVec vpowmod(const Ctx& c, RawVec base, const Nat& e, const RawVec& m) {
    if (e == 0) return RawVec{1};
    base = vmod(c, std::move(base), m);
    RawVec r = base;
    auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        r = vmulmod(c, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = vmulmod(c, r, base, m);
    }
    return r;
}

int vcompare(const RawVec& a, const RawVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

struct VcompareLess {
    bool operator()(const RawVec& a, const RawVec& b) const { return vcompare(a, b) < 0; }
};

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool v_is_irreducible(const Ctx& c, const Field& field, const RawVec& f) {
    std::size_t d = f.size() - 1;
    if (d == 1) return true;
    RawVec x{0, 1};
    // powers[i] = x^{q^i} mod f
    std::vector<RawVec> powers(d + 1);
    powers[0] = x;
    for (std::size_t i = 1; i <= d; ++i)
        powers[i] = vpowmod_u64(c, powers[i - 1], field->q(), f);
    if (vcompare(powers[d], x) != 0) return false;
    for (std::uint64_t l : prime_divisors_u64(d)) {
        RawVec diff = vsub(c, powers[d / l], x);
        RawVec g = vgcd(c, std::move(diff), f);
        if (g.size() != 1) return false;
    }
    return true;
}

// f monic squarefree, all irreducible factors of degree d; splits completely.
void equal_degree_split(const Ctx& c, const Field& field, RawVec f, std::size_t d,
                        std::mt19937_64& rng, std::vector<RawVec>& out) {
    while (true) {
        std::size_t deg = f.size() - 1;
        if (deg == d) {
            out.push_back(std::move(f));
            return;
        }
        RawVec r(deg, 0);
        for (auto& v : r) v = rng() % field->q();
        trim(r);
        if (r.size() < 2) continue; // constants never split anything
        RawVec t;
        if (field->p() == 2) {
            // trace map over GF(2): sum of r^{2^i}, i < e*d
            RawVec acc = vmod(c, r, f);
            RawVec cur = acc;
            std::uint64_t steps = static_cast<std::uint64_t>(field->e()) * d;
            for (std::uint64_t i = 1; i < steps; ++i) {
                cur = vmulmod(c, cur, cur, f);
                acc = vadd(c, acc, cur);
            }
            t = std::move(acc);
        } else {
            Nat qd;
            mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(field->q()),
                          static_cast<unsigned long>(d));
            Nat e = (qd - 1) / 2;
            t = vpowmod(c, r, e, f);
            if (!t.empty()) t[0] = c.sub(t[0], 1);
            trim(t);
        }
        RawVec g = vgcd(c, t, f);
        if (g.size() <= 1 || g.size() == f.size()) continue;
        RawVec q, rem;
        vdivmod(c, f, g, q, rem);
        equal_degree_split(c, field, std::move(g), d, rng, out);
        f = std::move(q);
    }
}

// f monic squarefree; returns (irreducible, degree-class) pieces fully split.
std::vector<RawVec> factor_squarefree(const Ctx& c, const Field& field, RawVec f,
                                      std::mt19937_64& rng) {
    std::vector<RawVec> out;
    RawVec h{0, 1}; // x^{q^d} mod f, updated as f shrinks
    std::size_t d = 0;
    while (f.size() > 1) {
        ++d;
        if (2 * d > f.size() - 1) {
            out.push_back(std::move(f));
            break;
        }
        h = vpowmod_u64(c, std::move(h), field->q(), f);
        RawVec diff = vsub(c, h, RawVec{0, 1});
        RawVec g = vgcd(c, std::move(diff), f);
        if (g.size() > 1) {
            equal_degree_split(c, field, g, d, rng, out);
            RawVec q, rem;
            vdivmod(c, std::move(f), g, q, rem);
            f = std::move(q);
            h = vmod(c, std::move(h), f);
        }
    }
    return out;
}

RawVec pth_root(const Field& field, const RawVec& f) {
    std::uint64_t p = field->p();
    std::uint64_t root_exp = field->q() / p; // a^{q/p} is the p-th root of a
    RawVec out((f.size() - 1) / p + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = field->pow_raw_u64(f[j * p], root_exp);
    return out;
}

// monic f, deg >= 1: accumulate (squarefree part, multiplicity) pairs
void squarefree_decompose(const Ctx& c, const Field& field, RawVec f, std::uint64_t outer,
                          std::vector<std::pair<RawVec, std::uint64_t>>& parts) {
    // constants i mod p encode as the raw value i mod p in every spec
    RawVec fp(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) fp[i - 1] = c.mul(f[i], i % c.p);
    trim(fp);
    if (fp.empty()) {
        squarefree_decompose(c, field, pth_root(field, f), outer * field->p(), parts);
        return;
    }
    RawVec cpart = vgcd(c, f, fp);
    RawVec w, rem;
    vdivmod(c, std::move(f), cpart, w, rem);
    std::uint64_t i = 1;
    while (w.size() > 1) {
        RawVec y = vgcd(c, w, cpart);
        RawVec z, rem2;
        vdivmod(c, w, y, z, rem2);
        if (z.size() > 1) parts.emplace_back(std::move(z), i * outer);
        RawVec cnext, rem3;
        vdivmod(c, std::move(cpart), y, cnext, rem3);
        cpart = std::move(cnext);
        w = std::move(y);
        ++i;
    }
    if (cpart.size() > 1)
        squarefree_decompose(c, field, pth_root(field, cpart), outer * field->p(), parts);
}

} // namespace

Polynomial::Polynomial(Field field, const std::vector<FieldElement>& coeffs) : field_(std::move(field)) {
    c_.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (!same_spec(e.field(), field_))
            throw Error(Errc::SpecMismatch, "coefficient from a different field");
        c_.push_back(e.raw());
    }
    trim(c_);
}

Polynomial Polynomial::from_raw(Field field, std::vector<std::uint64_t> raw) {
    Polynomial p;
    for (auto v : raw)
        if (v >= field->q()) throw Error(Errc::InvalidInput, "raw coefficient out of range");
    p.field_ = std::move(field);
    p.c_ = std::move(raw);
    trim(p.c_);
    return p;
}

Polynomial Polynomial::x_minus(const FieldElement& c) {
    return from_raw(c.field(), {c.field()->neg_raw(c.raw()), 1});
}

namespace {
void require_same_field(const Polynomial& a, const Polynomial& b) {
    if (!same_spec(a.field(), b.field()))
        throw Error(Errc::SpecMismatch, "polynomials over different fields");
}
const Field& field_of(const Polynomial& a, const Polynomial& b) {
    return a.field() ? a.field() : b.field();
}
} // namespace

Polynomial add(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    return Polynomial::from_raw(field_of(a, b), vadd(ctx_of(a.field()), a.raw(), b.raw()));
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    return Polynomial::from_raw(field_of(a, b), vsub(ctx_of(a.field()), a.raw(), b.raw()));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    return Polynomial::from_raw(field_of(a, b), vmul(ctx_of(a.field()), a.raw(), b.raw()));
}

Polynomial mul(const Polynomial& a, const FieldElement& s) {
    if (!same_spec(a.field(), s.field())) throw Error(Errc::SpecMismatch, "scalar from a different field");
    return Polynomial::from_raw(a.field(), vscale(ctx_of(a.field()), a.raw(), s.raw()));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    RawVec q, r;
    vdivmod(ctx_of(a.field()), a.raw(), b.raw(), q, r);
    return {Polynomial::from_raw(a.field(), std::move(q)), Polynomial::from_raw(a.field(), std::move(r))};
}

Polynomial make_monic(const Polynomial& a) {
    return Polynomial::from_raw(a.field(), vmonic(ctx_of(a.field()), a.raw()));
}

Polynomial derivative(const Polynomial& a) {
    if (a.degree() < 1) return Polynomial::zero(a.field());
    const auto& f = a.field();
    RawVec d(a.raw().size() - 1, 0);
    for (std::size_t i = 1; i < a.raw().size(); ++i)
        d[i - 1] = f->mul_raw(a.raw()[i], i % f->p());
    return Polynomial::from_raw(f, std::move(d));
}

FieldElement eval(const Polynomial& f, const FieldElement& at) {
    if (!same_spec(f.field(), at.field())) throw Error(Errc::SpecMismatch, "evaluation point field mismatch");
    const auto& s = f.field();
    std::uint64_t acc = 0;
    for (std::size_t i = f.raw().size(); i-- > 0;)
        acc = s->add_raw(s->mul_raw(acc, at.raw()), f.raw()[i]);
    return {s, acc};
}

Polynomial pow_mod(const Polynomial& base, const Nat& exp, const Polynomial& mod) {
    require_same_field(base, mod);
    if (mod.degree() < 1) throw Error(Errc::InvalidInput, "pow_mod modulus must have degree >= 1");
    return Polynomial::from_raw(base.field(), vpowmod(ctx_of(base.field()), base.raw(), exp, mod.raw()));
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t exp, const Polynomial& mod) {
    require_same_field(base, mod);
    if (mod.degree() < 1) throw Error(Errc::InvalidInput, "pow_mod modulus must have degree >= 1");
    return Polynomial::from_raw(base.field(),
                                vpowmod_u64(ctx_of(base.field()), base.raw(), exp, mod.raw()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) return Polynomial::zero(field_of(a, b));
    return Polynomial::from_raw(field_of(a, b), vgcd(ctx_of(field_of(a, b)), a.raw(), b.raw()));
}

int compare_canonical(const Polynomial& a, const Polynomial& b) { return vcompare(a.raw(), b.raw()); }

Polynomial Factorization::reassemble() const {
    Polynomial acc = Polynomial::from_raw(unit.field(), {unit.raw()});
    for (const auto& [f, m] : factors)
        for (std::uint64_t i = 0; i < m; ++i) acc = mul(acc, f);
    return acc;
}

Factorization factor(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    const Field& field = f.field();
    Ctx c = ctx_of(field);
    Factorization out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;

    std::mt19937_64 rng(seed);
    RawVec monic = vmonic(c, f.raw());
    std::vector<std::pair<RawVec, std::uint64_t>> parts;
    squarefree_decompose(c, field, std::move(monic), 1, parts);

    std::map<RawVec, std::uint64_t, VcompareLess> acc;
    for (auto& [sf, mult] : parts) {
        for (auto& irr : factor_squarefree(c, field, std::move(sf), rng)) acc[irr] += mult;
    }
    out.factors.reserve(acc.size());
    for (auto& [raw, mult] : acc)
        out.factors.emplace_back(Polynomial::from_raw(field, raw), mult);
    return out;
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::DegreeZero, "irreducibility needs degree >= 1");
    if (!f.is_monic()) throw Error(Errc::NotMonic, "irreducibility test expects a monic polynomial");
    return v_is_irreducible(ctx_of(f.field()), f.field(), f.raw());
}

namespace {

Nat order_from_primes(const Ctx& c, const Field& field, const RawVec& f, const Nat& group_order,
                      const std::vector<std::pair<Nat, std::uint64_t>>& primes) {
    Nat order = group_order;
    RawVec x{0, 1};
    for (const auto& [ell, mult] : primes) {
        for (std::uint64_t i = 0; i < mult; ++i) {
            Nat cand = order / ell;
            RawVec probe = vpowmod(c, x, cand, f);
            if (probe.size() == 1 && probe[0] == 1) order = cand;
            else break;
        }
    }
    return order;
}

Nat qd_minus_one(const Field& field, unsigned d) {
    Nat n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(field->q()), d);
    return n - 1;
}

} // namespace

Nat root_order(const Polynomial& f, std::uint64_t factor_bound) {
    if (f.degree() < 1) throw Error(Errc::DegreeZero, "root_order needs degree >= 1");
    if (!f.is_monic()) throw Error(Errc::NotMonic, "root_order expects a monic polynomial");
    if (f.coeff_raw(0) == 0)
        throw Error(Errc::InvalidInput, "root_order: constant term is zero, residue x is not a unit");
    if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, "root_order expects an irreducible polynomial");
    const Field& field = f.field();
    Nat n = qd_minus_one(field, static_cast<unsigned>(f.degree()));
    TrialFactorization tf = trial_factor(n, factor_bound);
    if (!tf.complete)
        throw Error(Errc::FactorBoundExceeded,
                    "q^d - 1 = " + n.get_str() + " has a cofactor " + tf.residual.get_str() +
                        " above the trial-division bound " + std::to_string(factor_bound));
    return order_from_primes(ctx_of(field), field, f.raw(), n, tf.factors);
}

Polynomial singer_polynomial(const Field& field, unsigned d, std::uint64_t factor_bound) {
    if (d == 0) throw Error(Errc::DegreeZero, "singer_polynomial needs degree >= 1");
    Nat n = qd_minus_one(field, d);
    TrialFactorization tf = trial_factor(n, factor_bound);
    if (!tf.complete)
        throw Error(Errc::FactorBoundExceeded,
                    "q^d - 1 = " + n.get_str() + " has a cofactor " + tf.residual.get_str() +
                        " above the trial-division bound " + std::to_string(factor_bound));
    Ctx c = ctx_of(field);
    std::uint64_t q = field->q();
    // Scan coefficient tuples (c_{d-1}, ..., c_0) ascending; the counter's
    // base-q digits are the packed coefficients.
    Nat count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(q), d);
    for (Nat k = 0; k < count; ++k) {
        RawVec cand(d + 1, 0);
        Nat t = k;
        for (unsigned i = 0; i < d; ++i) {
            cand[i] = mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(q));
            t /= static_cast<unsigned long>(q);
        }
        cand[d] = 1;
        if (cand[0] == 0) continue; // x divides it (or root 0 for d = 1)
        if (!v_is_irreducible(c, field, cand)) continue;
        if (order_from_primes(c, field, cand, n, tf.factors) == n)
            return Polynomial::from_raw(field, std::move(cand));
    }
    throw Error(Errc::InvalidInput, "no Singer polynomial found"); // unreachable
}

} // namespace matred
