#ifndef MATRED_BIGINT_HPP
#define MATRED_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace matred {

using Nat = mpz_class; // arbitrary-precision natural; callers keep values >= 0

inline Nat nat_from_u64(std::uint64_t v) {
    Nat n;
    mpz_import(n.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return n;
}

inline Nat nat_pow(std::uint64_t base, std::uint64_t exp) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

inline std::size_t bit_length(const Nat& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool divides(const Nat& d, const Nat& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// trailing p-adic valuation: largest a with p^a | n (n > 0)
std::uint64_t p_adic_valuation(Nat& n, std::uint64_t p);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

} // namespace matred

#endif
