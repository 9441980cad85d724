#ifndef MATRED_DEGRED_HPP
#define MATRED_DEGRED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matred/matrix.hpp"

namespace matred {

/// m may be materialized with this many bits before reduce gives up;
/// generous enough for odd-primorial instances around n = 100 over GF(2).
inline constexpr std::size_t kDefaultExponentMaterializeBits = std::size_t{1} << 26;

/// Odd primes 3..pbar with pbar minimal such that their product exceeds n^4.
struct PrimeSelection {
    std::uint64_t n = 0;
    std::uint64_t pbar = 0;
    std::vector<std::uint64_t> primes;
    Nat product;
    std::uint64_t d = 0; // sum of the selected primes
};

PrimeSelection select_primes(std::uint64_t n);

/// Block-diagonal matrix of companion matrices of Singer polynomials, one of
/// degree p for each selected prime p, plus an identity block of size `pad`.
/// Dimension d + pad, degree d.
SquareMatrix build_singer_block(const PrimeSelection& sel, const Field& field, std::size_t pad,
                                std::uint64_t factor_bound = kDefaultFactorBound);

/// The zero-one divisibility table D: rows are the candidate primes, columns
/// the non-unipotent diagonal positions (factor (x-1) excluded). D(i,j) = 1
/// iff p_i divides the degree of the irreducible factor owning position j.
struct DMatrix {
    std::vector<std::uint64_t> primes;
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<std::vector<std::uint8_t>> entries; // r rows of length s
    std::vector<std::uint64_t> row_sums;            // n_i
    // informational log-weighted average of the n_i; every decision is made
    // with exact integer comparisons, never with this value
    double w_approx = 0.0;

    /// exact test of W <= num/den via prod p_i^{den*n_i} <= (prod p_i)^num
    bool weighted_average_at_most(std::uint64_t num, std::uint64_t den) const;
};

DMatrix build_D(const Factorization& fact, const std::vector<std::uint64_t>& primes);
DMatrix build_D(const Factorization& fact, const PrimeSelection& sel);

/// 0-based index of the smallest row minimizing n_i. Throws NoSmallRow unless
/// 4 * n_i <= s holds for that row; exact integer comparison throughout.
std::size_t choose_prime(const DMatrix& d);

struct ReductionExponent {
    std::uint64_t a = 0;       // smallest with p^a >= n
    std::uint64_t s_prime = 1; // lcm of factor degrees not divisible by p'
    Nat m;                     // p^a * (q^{s'} - 1)
};

ReductionExponent reduction_exponent(const Factorization& fact, std::uint64_t p_prime,
                                     const Field& field, std::size_t n,
                                     std::size_t max_m_bits = kDefaultExponentMaterializeBits);

/// Degree of A^m predicted from the Jordan structure alone. Requires
/// v_p(m) large enough that p^{v_p(m)} dominates every block size (the
/// synthesized exponents always are); throws MalformedExponent otherwise.
/// A companion copy of factor f contributes deg(f) iff the multiplicative
/// order of f's root does not divide m / p^{v_p(m)}.
std::size_t symbolic_power_degree(const Factorization& fact, const JordanStructure& jordan,
                                  const Nat& m, std::uint64_t factor_bound = kDefaultFactorBound);

/// Smallest (q-1)^k wiping every eigenvalue of A^m out of GF(q) \ {1};
/// returns (q-1)^k (which is 1 when nothing needs purging).
Nat purge_fq_eigenvalues(const Factorization& fact, const Field& field, const Nat& m,
                         std::uint64_t factor_bound = kDefaultFactorBound);

/// True iff q^t - 1 divides some power of q - 1, decided exactly by stripping
/// the prime divisors of q - 1 from q^t - 1. For prime t this forces t = 2.
bool divides_power_predicate(std::uint64_t q, std::uint64_t t,
                             std::uint64_t factor_bound = kDefaultFactorBound);

/// Full witness of one degree-reduction run on A: the exponent synthesis
/// m = p^a * (q^{s'} - 1), the (q-1)-power purge, and the predicted degree of
/// A^{m * purge_exponent}, all derived symbolically.
struct ReductionCertificate {
    Factorization input_factorization;
    std::size_t n = 0;
    std::uint64_t q = 0;
    bool hypothesis_ok = false;     // product of distinct odd prime factor degrees > n^4
    std::uint64_t chosen_prime = 0; // 0 when the degenerate path was taken
    std::uint64_t a = 0;
    std::uint64_t s_prime = 1;
    Nat m = 1;
    Nat purge_exponent = 1;
    std::size_t predicted_degree = 0;
    std::size_t input_degree = 0;
    std::vector<std::string> notes;
};

struct ReduceOptions {
    std::uint64_t factor_bound = kDefaultFactorBound;
    std::size_t max_m_bits = kDefaultExponentMaterializeBits;
};

ReductionCertificate reduce(const SquareMatrix& a, std::uint64_t seed = 0,
                            const ReduceOptions& opts = {});

} // namespace matred

#endif
