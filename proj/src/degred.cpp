#include "matred/degred.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matred {

namespace {

Polynomial x_minus_one(const Field& f) { return Polynomial::x_minus(one(f)); }

std::uint64_t unipotent_multiplicity(const Factorization& fact, const Field& field) {
    Polynomial xm1 = x_minus_one(field);
    for (const auto& [f, m] : fact.factors)
        if (f == xm1) return m;
    return 0;
}

std::size_t total_dimension(const Factorization& fact) {
    std::size_t n = 0;
    for (const auto& [f, m] : fact.factors) n += static_cast<std::size_t>(f.degree()) * m;
    return n;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t bd = b / g;
    if (bd != 0 && a > UINT64_MAX / bd)
        throw Error(Errc::CapExceeded, "lcm of factor degrees overflows 64 bits");
    return a * bd;
}

std::uint64_t smallest_a_with_pa_at_least(std::uint64_t p, std::size_t n) {
    std::uint64_t a = 0;
    Nat pa = 1;
    while (pa < static_cast<unsigned long>(n)) {
        pa *= static_cast<unsigned long>(p);
        ++a;
    }
    return a;
}

} // namespace

PrimeSelection select_primes(std::uint64_t n) {
    if (n < 2) throw Error(Errc::InvalidInput, "select_primes requires n >= 2");
    PrimeSelection sel;
    sel.n = n;
    sel.product = 1;
    Nat n4 = nat_from_u64(n);
    n4 = n4 * n4 * n4 * n4;
    std::uint64_t c = 3;
    while (sel.product <= n4) {
        if (is_prime_u64(c)) {
            sel.primes.push_back(c);
            sel.product *= nat_from_u64(c);
            sel.d += c;
            sel.pbar = c;
        }
        c += 2;
    }
    return sel;
}

SquareMatrix build_singer_block(const PrimeSelection& sel, const Field& field, std::size_t pad,
                                std::uint64_t factor_bound) {
    std::vector<SquareMatrix> blocks;
    blocks.reserve(sel.primes.size() + 1);
    for (std::uint64_t p : sel.primes)
        blocks.push_back(companion(singer_polynomial(field, static_cast<unsigned>(p), factor_bound)));
    if (pad > 0) blocks.push_back(SquareMatrix::identity(field, pad));
    return block_diag(blocks);
}

DMatrix build_D(const Factorization& fact, const std::vector<std::uint64_t>& primes) {
    const Field& field = fact.unit.field();
    Polynomial xm1 = x_minus_one(field);
    DMatrix d;
    d.primes = primes;
    d.r = primes.size();
    std::size_t n = total_dimension(fact);
    d.s = n - static_cast<std::size_t>(unipotent_multiplicity(fact, field));
    d.entries.assign(d.r, std::vector<std::uint8_t>(d.s, 0));
    d.row_sums.assign(d.r, 0);
    std::size_t col = 0;
    for (const auto& [f, mult] : fact.factors) {
        if (f == xm1) continue;
        auto deg = static_cast<std::uint64_t>(f.degree());
        std::size_t span = static_cast<std::size_t>(deg) * mult;
        for (std::size_t i = 0; i < d.r; ++i) {
            if (deg % primes[i] == 0) {
                for (std::size_t j = 0; j < span; ++j) d.entries[i][col + j] = 1;
                d.row_sums[i] += span;
            }
        }
        col += span;
    }
    if (d.r > 0) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < d.r; ++i) {
            double lg = std::log2(static_cast<double>(d.primes[i]));
            num += static_cast<double>(d.row_sums[i]) * lg;
            den += lg;
        }
        d.w_approx = num / den;
    }
    return d;
}

DMatrix build_D(const Factorization& fact, const PrimeSelection& sel) {
    return build_D(fact, sel.primes);
}

bool DMatrix::weighted_average_at_most(std::uint64_t num, std::uint64_t den) const {
    // W <= num/den  <=>  prod p_i^{den*n_i} <= (prod p_i)^num
    Nat lhs = 1, rhs = 1;
    for (std::size_t i = 0; i < r; ++i) {
        Nat t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(primes[i]),
                      static_cast<unsigned long>(den * row_sums[i]));
        lhs *= t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(primes[i]),
                      static_cast<unsigned long>(num));
        rhs *= t;
    }
    return lhs <= rhs;
}

std::size_t choose_prime(const DMatrix& d) {
    if (d.r == 0 || d.s == 0)
        throw Error(Errc::InvalidInput, "choose_prime needs a nonempty D matrix");
    std::size_t best = 0;
    for (std::size_t i = 1; i < d.r; ++i)
        if (d.row_sums[i] < d.row_sums[best]) best = i;
    if (4 * d.row_sums[best] > d.s)
        throw Error(Errc::NoSmallRow,
                    "no row with 4*n_i <= s: min n_i = " + std::to_string(d.row_sums[best]) +
                        " at prime " + std::to_string(d.primes[best]) + ", s = " +
                        std::to_string(d.s) +
                        "; possible only when the hypothesis prod p_i > n^4 fails");
    return best;
}

ReductionExponent reduction_exponent(const Factorization& fact, std::uint64_t p_prime,
                                     const Field& field, std::size_t n, std::size_t max_m_bits) {
    bool present = false;
    Polynomial xm1 = x_minus_one(field);
    std::uint64_t s_prime = 1;
    for (const auto& [f, mult] : fact.factors) {
        auto deg = static_cast<std::uint64_t>(f.degree());
        if (deg == p_prime) present = true;
        if (f == xm1) continue;
        if (deg % p_prime != 0) s_prime = lcm_checked(s_prime, deg);
    }
    if (!present)
        throw Error(Errc::PrimeNotPresent,
                    "no irreducible factor of degree " + std::to_string(p_prime));

    ReductionExponent out;
    out.a = smallest_a_with_pa_at_least(field->p(), n);
    out.s_prime = s_prime;

    // m = p^a * (q^{s'} - 1); refuse to materialize absurd sizes
    double est_bits = static_cast<double>(s_prime) * std::log2(static_cast<double>(field->q()));
    if (est_bits > static_cast<double>(max_m_bits) - 64.0)
        throw Error(Errc::CapExceeded,
                    "materializing q^{s'} - 1 with s' = " + std::to_string(s_prime) +
                        " would exceed " + std::to_string(max_m_bits) + " bits");
    Nat qs;
    mpz_ui_pow_ui(qs.get_mpz_t(), static_cast<unsigned long>(field->q()),
                  static_cast<unsigned long>(s_prime));
    Nat pa;
    mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(field->p()),
                  static_cast<unsigned long>(out.a));
    out.m = pa * (qs - 1);
    return out;
}

std::size_t symbolic_power_degree(const Factorization& fact, const JordanStructure& jordan,
                                  const Nat& m, std::uint64_t factor_bound) {
    if (m < 1) throw Error(Errc::MalformedExponent, "exponent must be >= 1");
    const Field& field = fact.unit.field();
    if (total_dimension(fact) != jordan.n)
        throw Error(Errc::InvalidInput, "factorization and Jordan structure disagree on n");

    Nat rest = m;
    std::uint64_t a = p_adic_valuation(rest, field->p());
    Nat pa;
    mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(field->p()),
                  static_cast<unsigned long>(a));
    if (pa < nat_from_u64(jordan.max_block_size()))
        throw Error(Errc::MalformedExponent,
                    "p-part p^" + std::to_string(a) + " does not dominate the largest Jordan block");

    Polynomial xm1 = x_minus_one(field);
    std::size_t degree_sum = 0;
    for (const auto& [f, mult] : fact.factors) {
        if (f == xm1) continue;
        Nat order = root_order(f, factor_bound);
        if (!divides(order, rest))
            degree_sum += static_cast<std::size_t>(f.degree()) * mult;
    }
    return degree_sum;
}

Nat purge_fq_eigenvalues(const Factorization& fact, const Field& field, const Nat& m,
                         std::uint64_t factor_bound) {
    Polynomial xm1 = x_minus_one(field);
    Nat qm1 = field->q_nat() - 1;
    std::vector<Nat> orders;
    for (const auto& [f, mult] : fact.factors) {
        if (f == xm1) continue;
        Nat order = root_order(f, factor_bound);
        Nat g;
        mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), m.get_mpz_t());
        order /= g;
        if (order > 1) orders.push_back(order);
    }
    Nat purge = 1;
    while (true) {
        bool in_fq = false;
        for (const Nat& o : orders)
            if (o > 1 && divides(o, qm1)) in_fq = true;
        if (!in_fq) break;
        purge *= qm1;
        for (Nat& o : orders) {
            Nat g;
            mpz_gcd(g.get_mpz_t(), o.get_mpz_t(), qm1.get_mpz_t());
            o /= g;
        }
    }
    return purge;
}

bool divides_power_predicate(std::uint64_t q, std::uint64_t t, std::uint64_t factor_bound) {
    if (q < 2) throw Error(Errc::InvalidInput, "q must be > 1");
    if (!is_prime_u64(t)) throw Error(Errc::InvalidInput, "t must be prime");
    // every prime divisor of q^t - 1 divides q - 1  <=>  stripping the primes
    // of q - 1 from q^t - 1 leaves 1
    TrialFactorization qm1 = trial_factor(nat_from_u64(q - 1), factor_bound);
    if (!qm1.complete)
        throw Error(Errc::FactorBoundExceeded, "q - 1 has a factor above the trial bound");
    Nat n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(t));
    n -= 1;
    for (const auto& [prime, mult] : qm1.factors) {
        while (divides(prime, n)) n /= prime;
    }
    return n == 1;
}

ReductionCertificate reduce(const SquareMatrix& a_mat, std::uint64_t seed, const ReduceOptions& opts) {
    const Field& field = a_mat.field();
    if (!invertible(a_mat)) throw Error(Errc::Singular, "input matrix is singular");

    ReductionCertificate cert;
    cert.n = a_mat.n();
    cert.q = field->q();
    cert.input_degree = degree(a_mat);
    cert.input_factorization = factor(charpoly(a_mat), seed);
    const Factorization& fact = cert.input_factorization;
    JordanStructure jordan = jordan_structure(a_mat, fact);

    // distinct odd primes occurring as factor degrees
    std::vector<std::uint64_t> primes;
    for (const auto& [f, mult] : fact.factors) {
        auto deg = static_cast<std::uint64_t>(f.degree());
        if (deg > 2 && is_prime_u64(deg) &&
            std::find(primes.begin(), primes.end(), deg) == primes.end())
            primes.push_back(deg);
    }
    std::sort(primes.begin(), primes.end());

    Nat prime_product = 1;
    for (auto p : primes) prime_product *= nat_from_u64(p);
    Nat n4 = nat_from_u64(cert.n);
    n4 = n4 * n4 * n4 * n4;
    cert.hypothesis_ok = !primes.empty() && prime_product > n4;
    cert.notes.push_back("odd-prime-degree product = " + prime_product.get_str() + ", n^4 = " +
                         n4.get_str());

    std::size_t s = cert.n - static_cast<std::size_t>(unipotent_multiplicity(fact, field));

    if (primes.empty() || s == 0) {
        cert.chosen_prime = 0;
        cert.a = smallest_a_with_pa_at_least(field->p(), cert.n);
        cert.s_prime = 1;
        Nat pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(field->p()),
                      static_cast<unsigned long>(cert.a));
        cert.m = pa * (field->q_nat() - 1);
        cert.purge_exponent = purge_fq_eigenvalues(fact, field, cert.m, opts.factor_bound);
        cert.predicted_degree =
            symbolic_power_degree(fact, jordan, cert.m * cert.purge_exponent, opts.factor_bound);
        cert.notes.push_back(cert.input_degree == 0 ? "already identity-like"
                                                    : "no odd-prime-degree factors; degenerate path");
        return cert;
    }

    DMatrix d = build_D(fact, primes);
    std::size_t idx;
    try {
        idx = choose_prime(d);
    } catch (const Error& e) {
        if (e.code() != Errc::NoSmallRow) throw;
        throw Error(Errc::NoSmallRow,
                    std::string(e.what()) + " [hypothesis product = " + prime_product.get_str() +
                        ", n^4 = " + n4.get_str() + "]");
    }
    cert.chosen_prime = primes[idx];
    ReductionExponent re =
        reduction_exponent(fact, cert.chosen_prime, field, cert.n, opts.max_m_bits);
    cert.a = re.a;
    cert.s_prime = re.s_prime;
    cert.m = re.m;
    cert.purge_exponent = purge_fq_eigenvalues(fact, field, cert.m, opts.factor_bound);
    cert.predicted_degree =
        symbolic_power_degree(fact, jordan, cert.m * cert.purge_exponent, opts.factor_bound);
    cert.notes.push_back("D row sums: min n_i = " + std::to_string(d.row_sums[idx]) + " of s = " +
                         std::to_string(d.s));
    return cert;
}

} // namespace matred
