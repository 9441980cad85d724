#include "matred/bounds.hpp"

#include <cmath>

#include "matred/degred.hpp"
#include "matred/errors.hpp"

namespace matred {

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<std::uint8_t> composite(x + 1, 0);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = 1;
    }
    return out;
}

Nat TrialFactorization::reassemble() const {
    Nat n = residual;
    for (const auto& [p, e] : factors) {
        for (std::uint64_t i = 0; i < e; ++i) n *= p;
    }
    return n;
}

TrialFactorization trial_factor(const Nat& n, std::uint64_t bound) {
    if (n < 1) throw Error(Errc::InvalidInput, "trial_factor requires n >= 1");
    TrialFactorization out;
    Nat r = n;
    if (r == 1) return out;

    auto strip = [&](std::uint64_t c) {
        std::uint64_t e = 0;
        while (mpz_divisible_ui_p(r.get_mpz_t(), c)) {
            mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), c);
            ++e;
        }
        if (e) out.factors.emplace_back(nat_from_u64(c), e);
        return e != 0;
    };

    Nat limit;
    mpz_sqrt(limit.get_mpz_t(), r.get_mpz_t());
    auto refresh_limit = [&]() { mpz_sqrt(limit.get_mpz_t(), r.get_mpz_t()); };

    std::uint64_t c = 2;
    int wheel = 0; // 7, 11, 13, 17, ... alternating +4/+2
    bool residual_prime = false;
    while (r > 1) {
        if (mpz_cmp_ui(limit.get_mpz_t(), c) < 0) {
            residual_prime = true;
            break;
        }
        if (c > bound) break;
        if (strip(c)) refresh_limit();
        if (c == 2) c = 3;
        else if (c == 3) c = 5;
        else if (c == 5) c = 7;
        else {
            c += (wheel == 0) ? 4 : 2;
            wheel ^= 1;
        }
    }
    if (r == 1) return out;
    if (residual_prime) {
        out.factors.emplace_back(r, 1);
        return out;
    }
    // every prime divisor of r exceeds bound; r <= bound^2 forces primality
    Nat b2 = nat_from_u64(bound) * nat_from_u64(bound);
    if (r <= b2) {
        out.factors.emplace_back(r, 1);
        return out;
    }
    out.complete = false;
    out.residual = r;
    return out;
}

double log2_nat(const Nat& n) {
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

Nat sl_order(std::uint64_t n, std::uint64_t q) {
    if (n < 1 || q < 2) throw Error(Errc::InvalidInput, "sl_order requires n >= 1, q >= 2");
    Nat order = 1;
    Nat qn = nat_from_u64(q);
    Nat qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(n * (n - 1) / 2));
    order *= qpow;
    for (std::uint64_t i = 2; i <= n; ++i) {
        Nat t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
        order *= (t - 1);
    }
    return order;
}

ErdosReport erdos_report(std::uint64_t n) {
    if (n < 3) throw Error(Errc::InvalidInput, "erdos_report requires n >= 3");
    PrimeSelection sel = select_primes(n);
    ErdosReport rep;
    rep.n = n;
    rep.pbar = sel.pbar;
    rep.prime_sum = sel.d;
    rep.prime_count = sel.primes.size();
    rep.product = sel.product;
    double lg_n = std::log2(static_cast<double>(n));
    double lglg_n = std::log2(lg_n);
    rep.ratio_prime_sum = static_cast<double>(sel.d) / (lg_n * lg_n / lglg_n);
    rep.ratio_pbar = static_cast<double>(sel.pbar) / lg_n;
    return rep;
}

Nat bs_compose(std::uint64_t diam_n, std::uint64_t diam_q) {
    return Nat(4) * nat_from_u64(diam_n) * nat_from_u64(diam_q);
}

std::pair<SylowChainSpec, Nat> sylow_chain_bound(std::uint64_t n, std::uint64_t q, std::uint64_t p) {
    if (n < 1 || q < 2 || p < 2) throw Error(Errc::InvalidInput, "need n >= 1, q >= 2, p >= 2");
    std::uint64_t e = 0, t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw Error(Errc::NotPPower, "q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));

    SylowChainSpec spec;
    spec.n = n;
    spec.q = q;
    spec.p = p;
    spec.m = 1;
    spec.ell = 1;
    while (spec.m < n) {
        spec.m *= 2;
        ++spec.ell;
    }
    spec.r = (spec.m * spec.m / 4) * e;
    if (spec.r == 0) {
        spec.r = 1;
        spec.r_clamped = true;
    }
    Nat value;
    mpz_ui_pow_ui(value.get_mpz_t(), 4, static_cast<unsigned long>(spec.ell - 1));
    Nat pr;
    mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p * spec.r),
                  static_cast<unsigned long>(spec.ell));
    value *= pr;
    return {spec, value};
}

CompareReport compare_bounds(std::uint64_t n, std::uint64_t q, const BoundConstants& consts) {
    if (n < 3 || q < 2) throw Error(Errc::InvalidInput, "compare_bounds requires n >= 3, q >= 2");
    CompareReport rep;
    rep.n = n;
    rep.q = q;
    rep.consts = consts;
    double lg_n = std::log2(static_cast<double>(n));
    double lg_q = std::log2(static_cast<double>(q));
    rep.this_paper_log2 = consts.c_main * static_cast<double>(n) * lg_n * lg_n * lg_q;
    double s = lg_n + lg_q;
    rep.biswas_yang_log2 = static_cast<double>(n) * s * s * s * lg_q;
    rep.sl_order_log2 = log2_nat(sl_order(n, q));
    PrimeSelection sel = select_primes(n);
    rep.prime_sum_d = sel.d;
    rep.assembly_log2 = 2.0 * static_cast<double>(n) * static_cast<double>(sel.d) * lg_q +
                        std::log2(static_cast<double>(n) / static_cast<double>(sel.d));
    return rep;
}

} // namespace matred
