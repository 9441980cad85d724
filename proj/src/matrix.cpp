#include "matred/matrix.hpp"

#include <algorithm>
#include <string>

namespace matred {

namespace {

void require_compatible(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n() != b.n()) throw Error(Errc::ShapeMismatch, "matrix dimensions differ");
    if (!same_spec(a.field(), b.field()))
        throw Error(Errc::SpecMismatch, "matrices over different fields");
}

bool gf2_fast(const Field& f) { return f->p() == 2 && f->e() == 1; }

// ---- packed GF(2) kernels: rows as bit words -------------------------------

std::size_t words_per_row(std::size_t n) { return (n + 63) / 64; }

std::vector<std::uint64_t> pack_rows(const SquareMatrix& a) {
    std::size_t n = a.n(), w = words_per_row(n);
    std::vector<std::uint64_t> rows(n * w, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j)) rows[i * w + j / 64] |= std::uint64_t{1} << (j % 64);
    return rows;
}

SquareMatrix unpack_rows(const Field& f, std::size_t n, const std::vector<std::uint64_t>& rows) {
    std::size_t w = words_per_row(n);
    SquareMatrix m(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((rows[i * w + j / 64] >> (j % 64)) & 1) m.set(i, j, 1);
    return m;
}

SquareMatrix gf2_mul(const SquareMatrix& a, const SquareMatrix& b) {
    std::size_t n = a.n(), w = words_per_row(n);
    auto brows = pack_rows(b);
    std::vector<std::uint64_t> crows(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* out = crows.data() + i * w;
        for (std::size_t k = 0; k < n; ++k) {
            if (!a.at(i, k)) continue;
            const std::uint64_t* src = brows.data() + k * w;
            for (std::size_t t = 0; t < w; ++t) out[t] ^= src[t];
        }
    }
    return unpack_rows(a.field(), n, crows);
}

std::size_t gf2_rank(std::vector<std::uint64_t> rows, std::size_t n) {
    std::size_t w = words_per_row(n);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t word = col / 64;
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        std::size_t pivot = r;
        while (pivot < n && !(rows[pivot * w + word] & mask)) ++pivot;
        if (pivot == n) continue;
        if (pivot != r)
            for (std::size_t t = 0; t < w; ++t) std::swap(rows[pivot * w + t], rows[r * w + t]);
        for (std::size_t i = r + 1; i < n; ++i) {
            if (rows[i * w + word] & mask)
                for (std::size_t t = word; t < w; ++t) rows[i * w + t] ^= rows[r * w + t];
        }
        ++r;
    }
    return r;
}

// ---- generic elimination ----------------------------------------------------

std::size_t generic_rank(const SquareMatrix& m) {
    const FieldSpec& s = *m.field();
    std::size_t n = m.n();
    std::vector<std::uint64_t> a = m.raw();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != r)
            for (std::size_t t = 0; t < n; ++t) std::swap(a[pivot * n + t], a[r * n + t]);
        std::uint64_t pinv = s.inv_raw(a[r * n + col]);
        for (std::size_t i = r + 1; i < n; ++i) {
            std::uint64_t v = a[i * n + col];
            if (v == 0) continue;
            std::uint64_t t = s.mul_raw(v, pinv);
            for (std::size_t j = col; j < n; ++j)
                a[i * n + j] = s.sub_raw(a[i * n + j], s.mul_raw(t, a[r * n + j]));
        }
        ++r;
    }
    return r;
}

} // namespace

SquareMatrix SquareMatrix::from_raw(Field f, std::size_t n, std::vector<std::uint64_t> entries) {
    if (n == 0) throw Error(Errc::InvalidInput, "matrix dimension must be >= 1");
    if (entries.size() != n * n) throw Error(Errc::ShapeMismatch, "entry array is not n x n");
    for (auto v : entries)
        if (v >= f->q()) throw Error(Errc::InvalidInput, "matrix entry out of range");
    SquareMatrix m;
    m.field_ = std::move(f);
    m.n_ = n;
    m.a_ = std::move(entries);
    return m;
}

bool SquareMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool SquareMatrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    if (gf2_fast(a.field())) return gf2_mul(a, b);
    const FieldSpec& s = *a.field();
    std::size_t n = a.n();
    SquareMatrix c(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t bkj = b.at(k, j);
                if (bkj == 0) continue;
                c.set(i, j, s.add_raw(c.at(i, j), s.mul_raw(aik, bkj)));
            }
        }
    }
    return c;
}

SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    const FieldSpec& s = *a.field();
    SquareMatrix c(a.field(), a.n());
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        c.set(i / a.n(), i % a.n(), s.add_raw(a.raw()[i], b.raw()[i]));
    return c;
}

SquareMatrix mat_sub(const SquareMatrix& a, const SquareMatrix& b) {
    require_compatible(a, b);
    const FieldSpec& s = *a.field();
    SquareMatrix c(a.field(), a.n());
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        c.set(i / a.n(), i % a.n(), s.sub_raw(a.raw()[i], b.raw()[i]));
    return c;
}

SquareMatrix mat_scale(const SquareMatrix& a, const FieldElement& sc) {
    if (!same_spec(a.field(), sc.field())) throw Error(Errc::SpecMismatch, "scalar field mismatch");
    const FieldSpec& s = *a.field();
    SquareMatrix c(a.field(), a.n());
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        c.set(i / a.n(), i % a.n(), s.mul_raw(a.raw()[i], sc.raw()));
    return c;
}

std::size_t rank(const SquareMatrix& a) {
    if (gf2_fast(a.field())) return gf2_rank(pack_rows(a), a.n());
    return generic_rank(a);
}

std::size_t degree(const SquareMatrix& a) {
    const FieldSpec& s = *a.field();
    SquareMatrix d = a;
    for (std::size_t i = 0; i < a.n(); ++i) d.set(i, i, s.sub_raw(d.at(i, i), 1));
    return rank(d);
}

bool invertible(const SquareMatrix& a) { return rank(a) == a.n(); }

SquareMatrix inverse(const SquareMatrix& m) {
    const FieldSpec& s = *m.field();
    std::size_t n = m.n();
    std::vector<std::uint64_t> a = m.raw();
    SquareMatrix inv = SquareMatrix::identity(m.field(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) throw Error(Errc::Singular, "matrix is not invertible");
        if (pivot != col) {
            for (std::size_t t = 0; t < n; ++t) {
                std::swap(a[pivot * n + t], a[col * n + t]);
                std::uint64_t tmp = inv.at(pivot, t);
                inv.set(pivot, t, inv.at(col, t));
                inv.set(col, t, tmp);
            }
        }
        std::uint64_t pinv = s.inv_raw(a[col * n + col]);
        for (std::size_t t = 0; t < n; ++t) {
            a[col * n + t] = s.mul_raw(a[col * n + t], pinv);
            inv.set(col, t, s.mul_raw(inv.at(col, t), pinv));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint64_t v = a[i * n + col];
            if (v == 0) continue;
            for (std::size_t t = 0; t < n; ++t) {
                a[i * n + t] = s.sub_raw(a[i * n + t], s.mul_raw(v, a[col * n + t]));
                inv.set(i, t, s.sub_raw(inv.at(i, t), s.mul_raw(v, inv.at(col, t))));
            }
        }
    }
    return inv;
}

SquareMatrix companion(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::DegreeZero, "companion needs degree >= 1");
    if (!f.is_monic()) throw Error(Errc::NotMonic, "companion matrix needs a monic polynomial");
    const Field& fd = f.field();
    std::size_t d = static_cast<std::size_t>(f.degree());
    SquareMatrix c(fd, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
    for (std::size_t i = 0; i < d; ++i) c.set(i, d - 1, fd->neg_raw(f.coeff_raw(i)));
    return c;
}

SquareMatrix block_diag(const std::vector<SquareMatrix>& blocks) {
    if (blocks.empty()) throw Error(Errc::EmptyList, "block_diag needs at least one block");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!same_spec(b.field(), blocks.front().field()))
            throw Error(Errc::SpecMismatch, "blocks over different fields");
        n += b.n();
    }
    SquareMatrix m(blocks.front().field(), n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.n(); ++i)
            for (std::size_t j = 0; j < b.n(); ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.n();
    }
    return m;
}

SquareMatrix jordan_block_matrix(const Polynomial& f, std::size_t size) {
    if (size == 0) throw Error(Errc::InvalidInput, "jordan block size must be >= 1");
    SquareMatrix c = companion(f);
    std::size_t d = c.n();
    SquareMatrix m(f.field(), d * size);
    for (std::size_t b = 0; b < size; ++b) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) m.set(b * d + i, b * d + j, c.at(i, j));
            if (b + 1 < size) m.set(b * d + i, (b + 1) * d + i, 1);
        }
    }
    return m;
}

Polynomial charpoly(const SquareMatrix& m) {
    const FieldSpec& s = *m.field();
    const Field& fd = m.field();
    std::size_t n = m.n();

    // Hessenberg reduction by similarity (row op paired with inverse col op).
    std::vector<std::uint64_t> h = m.raw();
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t pivot = k + 1;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != k + 1) {
            for (std::size_t t = 0; t < n; ++t) std::swap(at(pivot, t), at(k + 1, t));
            for (std::size_t t = 0; t < n; ++t) std::swap(at(t, pivot), at(t, k + 1));
        }
        std::uint64_t pinv = s.inv_raw(at(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            std::uint64_t v = at(i, k);
            if (v == 0) continue;
            std::uint64_t t = s.mul_raw(v, pinv);
            for (std::size_t j = k; j < n; ++j)
                at(i, j) = s.sub_raw(at(i, j), s.mul_raw(t, at(k + 1, j)));
            for (std::size_t j = 0; j < n; ++j)
                at(j, k + 1) = s.add_raw(at(j, k + 1), s.mul_raw(t, at(j, i)));
        }
    }

    // charpoly of the leading principal blocks of the Hessenberg form:
    // p_m = (x - H[m-1][m-1]) p_{m-1}
    //       - sum_i H[i-1][m-1] * (prod_{j=i+1..m} H[j-1][j-2]) * p_{i-1}
    std::vector<std::vector<std::uint64_t>> p(n + 1);
    p[0] = {1};
    for (std::size_t mlen = 1; mlen <= n; ++mlen) {
        std::vector<std::uint64_t> cur(mlen + 1, 0);
        const auto& prev = p[mlen - 1];
        std::uint64_t diag = at(mlen - 1, mlen - 1);
        for (std::size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = s.add_raw(cur[t + 1], prev[t]);
            cur[t] = s.sub_raw(cur[t], s.mul_raw(diag, prev[t]));
        }
        std::uint64_t prod = 1;
        for (std::size_t i = mlen - 1; i >= 1; --i) {
            prod = s.mul_raw(prod, at(i, i - 1));
            if (prod == 0) break;
            std::uint64_t coef = s.mul_raw(at(i - 1, mlen - 1), prod);
            if (coef == 0) continue;
            const auto& pi = p[i - 1];
            for (std::size_t t = 0; t < pi.size(); ++t)
                cur[t] = s.sub_raw(cur[t], s.mul_raw(coef, pi[t]));
        }
        p[mlen] = std::move(cur);
    }
    return Polynomial::from_raw(fd, std::move(p[n]));
}

std::vector<std::uint64_t> mat_vec(const SquareMatrix& a, const std::vector<std::uint64_t>& v) {
    const FieldSpec& s = *a.field();
    std::size_t n = a.n();
    if (v.size() != n) throw Error(Errc::ShapeMismatch, "vector length mismatch");
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) && v[j]) acc = s.add_raw(acc, s.mul_raw(a.at(i, j), v[j]));
        }
        out[i] = acc;
    }
    return out;
}

Polynomial minpoly(const SquareMatrix& a) {
    const FieldSpec& s = *a.field();
    const Field& fd = a.field();
    std::size_t n = a.n();
    Polynomial g = Polynomial::one(fd);

    for (std::size_t start = 0; start < n; ++start) {
        if (static_cast<std::size_t>(g.degree()) == n) break;
        // Krylov chain from e_start with relation tracking: rows hold reduced
        // vectors, combs hold the expression of each row in powers of A.
        std::vector<std::vector<std::uint64_t>> rows, combs;
        std::vector<std::size_t> pivots;
        std::vector<std::uint64_t> v(n, 0);
        v[start] = 1;
        std::vector<std::uint64_t> comb{1};
        while (true) {
            std::vector<std::uint64_t> red = v, cred = comb;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                std::uint64_t c = red[pivots[r]];
                if (c == 0) continue;
                for (std::size_t t = 0; t < n; ++t)
                    red[t] = s.sub_raw(red[t], s.mul_raw(c, rows[r][t]));
                if (cred.size() < combs[r].size()) cred.resize(combs[r].size(), 0);
                for (std::size_t t = 0; t < combs[r].size(); ++t)
                    cred[t] = s.sub_raw(cred[t], s.mul_raw(c, combs[r][t]));
            }
            std::size_t piv = 0;
            while (piv < n && red[piv] == 0) ++piv;
            if (piv == n) {
                // relation found: cred is the local minimal polynomial
                while (!cred.empty() && cred.back() == 0) cred.pop_back();
                Polynomial gi = make_monic(Polynomial::from_raw(fd, std::move(cred)));
                Polynomial g_gcd = gcd(g, gi);
                g = divmod(mul(g, gi), g_gcd).first;
                break;
            }
            std::uint64_t pinv = s.inv_raw(red[piv]);
            for (auto& t : red) t = s.mul_raw(t, pinv);
            std::vector<std::uint64_t> cnorm = cred;
            for (auto& t : cnorm) t = s.mul_raw(t, pinv);
            rows.push_back(red);
            combs.push_back(std::move(cnorm));
            pivots.push_back(piv);
            v = mat_vec(a, v);
            comb.insert(comb.begin(), 0); // multiply the tracked power by x
        }
    }
    return g;
}

SquareMatrix mat_pow_big(const SquareMatrix& a, const Nat& k, std::size_t max_exp_bits) {
    if (k < 0) throw Error(Errc::InvalidInput, "exponent must be a natural number");
    if (bit_length(k) > max_exp_bits)
        throw Error(Errc::ExponentTooLarge,
                    "exponent bit length " + std::to_string(bit_length(k)) +
                        " exceeds ceiling " + std::to_string(max_exp_bits) +
                        "; use the symbolic path");
    SquareMatrix result = SquareMatrix::identity(a.field(), a.n());
    if (k == 0) return result;
    SquareMatrix base = a;
    std::size_t bits = bit_length(k);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = mat_mul(result, base);
        if (i + 1 < bits) base = mat_mul(base, base);
    }
    return result;
}

SquareMatrix poly_at_matrix(const Polynomial& f, const SquareMatrix& a) {
    if (!same_spec(f.field(), a.field())) throw Error(Errc::SpecMismatch, "polynomial/matrix field mismatch");
    SquareMatrix acc(a.field(), a.n());
    if (f.is_zero()) return acc;
    const FieldSpec& s = *a.field();
    for (std::size_t t = f.raw().size(); t-- > 0;) {
        if (t + 1 < f.raw().size()) acc = mat_mul(acc, a);
        std::uint64_t c = f.raw()[t];
        if (c) {
            for (std::size_t i = 0; i < a.n(); ++i) acc.set(i, i, s.add_raw(acc.at(i, i), c));
        }
    }
    return acc;
}

std::uint64_t JordanStructure::max_block_size() const {
    std::uint64_t m = 0;
    for (const auto& b : blocks) m = std::max(m, b.size);
    return m;
}

std::uint64_t JordanStructure::total_multiplicity_of(const Polynomial& f) const {
    std::uint64_t t = 0;
    for (const auto& b : blocks)
        if (b.factor == f) t += b.size * b.mult;
    return t;
}

JordanStructure jordan_structure(const SquareMatrix& a, std::uint64_t seed) {
    return jordan_structure(a, factor(charpoly(a), seed));
}

JordanStructure jordan_structure(const SquareMatrix& a, const Factorization& fact) {
    std::size_t n = a.n();
    JordanStructure js;
    js.n = n;
    for (const auto& [f, mult] : fact.factors) {
        std::size_t d = static_cast<std::size_t>(f.degree());
        SquareMatrix fa = poly_at_matrix(f, a);
        std::vector<std::uint64_t> count_ge; // count_ge[j-1] = #blocks of size >= j
        std::size_t prev_rank = n;
        SquareMatrix power = fa;
        while (true) {
            std::size_t r = rank(power);
            std::size_t diff = prev_rank - r;
            if (diff == 0) break;
            if (diff % d != 0)
                throw Error(Errc::InvalidInput, "rank sequence inconsistent with factor degree");
            count_ge.push_back(diff / d);
            prev_rank = r;
            if (r == 0) break;
            power = mat_mul(power, fa);
        }
        for (std::size_t j = 1; j <= count_ge.size(); ++j) {
            std::uint64_t exact =
                count_ge[j - 1] - (j < count_ge.size() ? count_ge[j] : 0);
            if (exact > 0) js.blocks.push_back({f, j, exact});
        }
    }
    std::sort(js.blocks.begin(), js.blocks.end(), [](const auto& x, const auto& y) {
        int c = compare_canonical(x.factor, y.factor);
        if (c != 0) return c < 0;
        return x.size < y.size;
    });
    return js;
}

} // namespace matred
