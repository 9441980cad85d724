#ifndef MATRED_BOUNDS_HPP
#define MATRED_BOUNDS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "matred/bigint.hpp"

namespace matred {

inline constexpr std::uint64_t kDefaultFactorBound = 10'000'000;

std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

struct TrialFactorization {
    std::vector<std::pair<Nat, std::uint64_t>> factors; // (prime, exponent), ascending
    bool complete = true;
    Nat residual = 1; // cofactor with no prime divisor <= bound; 1 when complete

    Nat reassemble() const;
};

/// Prime factorization by trial division up to `bound`. When the leftover
/// cofactor is below bound^2 it is itself prime and the factorization is
/// still complete; otherwise complete = false and the cofactor is reported.
TrialFactorization trial_factor(const Nat& n, std::uint64_t bound = kDefaultFactorBound);

/// Constants the asymptotic statements hide. Defaults of 1 are reported
/// alongside every result; nothing here is asserted.
struct BoundConstants {
    double c_main = 1.0;
    double c4 = 1.0;
    double c5 = 1.0;
};

struct ErdosReport {
    std::uint64_t n = 0;
    std::uint64_t pbar = 0;        // smallest prime with odd-primorial(pbar) > n^4
    std::uint64_t prime_sum = 0;   // d = sum of the odd primes up to pbar
    std::size_t prime_count = 0;
    Nat product;                   // odd-primorial(pbar)
    double ratio_prime_sum = 0.0;  // d / ((log2 n)^2 / log2 log2 n)
    double ratio_pbar = 0.0;       // pbar / log2 n
};

ErdosReport erdos_report(std::uint64_t n);

/// 4 * diam(N) * diam(G/N)
Nat bs_compose(std::uint64_t diam_n, std::uint64_t diam_q);

struct SylowChainSpec {
    std::uint64_t n = 0, q = 0, p = 0;
    std::uint64_t m = 0;       // least power of 2 >= n
    std::uint64_t r = 0;       // (m^2/4) * log_p q, clamped to >= 1
    std::uint64_t ell = 0;     // 1 + log2 m
    bool r_clamped = false;
};

/// Evaluates 4^{ell-1} * (p*r)^ell exactly for the explicit normal chain in a
/// Sylow p-subgroup of GL(m, q). Degenerate n = 1 clamps r to 1 (reported).
std::pair<SylowChainSpec, Nat> sylow_chain_bound(std::uint64_t n, std::uint64_t q, std::uint64_t p);

struct CompareReport {
    std::uint64_t n = 0, q = 0;
    BoundConstants consts;
    // everything in log2 space; O-constants are the defaults above and the
    // values are heuristic magnitudes, not certified bounds
    double this_paper_log2 = 0.0;  // c_main * n * (log2 n)^2 * log2 q
    double biswas_yang_log2 = 0.0; // n * (log2 n + log2 q)^3 * log2 q
    double sl_order_log2 = 0.0;    // exact |SL(n,q)| order formula, then log2
    double assembly_log2 = 0.0;    // 2nd*log2 q + log2(n/d), d = odd prime sum for n
    std::uint64_t prime_sum_d = 0;
};

CompareReport compare_bounds(std::uint64_t n, std::uint64_t q, const BoundConstants& consts = {});

/// Exact order of SL(n, q): q^{n(n-1)/2} * prod_{i=2}^{n} (q^i - 1).
Nat sl_order(std::uint64_t n, std::uint64_t q);

double log2_nat(const Nat& n);

} // namespace matred

#endif
