#include "matred/cayley.hpp"

#include <algorithm>
#include <deque>

namespace matred {

std::string canonical_key(const SquareMatrix& m) {
    std::string key;
    key.reserve(m.raw().size() * 4);
    for (std::uint64_t v : m.raw()) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    return key;
}

char symbol_label(std::size_t sym) {
    std::size_t gen = sym / 2;
    return static_cast<char>((sym % 2 == 0 ? 'a' : 'A') + gen);
}

std::optional<std::uint32_t> GroupTable::find(const SquareMatrix& m) const {
    auto it = index_.find(canonical_key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string GroupTable::word_of(std::size_t i) const {
    std::string w;
    while (parent_[i] >= 0) {
        w.push_back(symbol_label(via_symbol_[i]));
        i = static_cast<std::size_t>(parent_[i]);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

namespace {

std::vector<SquareMatrix> make_symbols(const std::vector<SquareMatrix>& generators) {
    if (generators.empty()) throw Error(Errc::EmptyList, "need at least one generator");
    if (generators.size() > 26) throw Error(Errc::InvalidInput, "at most 26 generators supported");
    for (const auto& g : generators) {
        if (g.n() != generators.front().n())
            throw Error(Errc::ShapeMismatch, "generators of different sizes");
        if (!same_spec(g.field(), generators.front().field()))
            throw Error(Errc::SpecMismatch, "generators over different fields");
    }
    std::vector<SquareMatrix> symbols;
    symbols.reserve(2 * generators.size());
    for (const auto& g : generators) {
        if (!invertible(g)) throw Error(Errc::SingularGenerator, "generator is singular");
        symbols.push_back(g);
        symbols.push_back(inverse(g));
    }
    return symbols;
}

} // namespace

GroupTable enumerate_group(const std::vector<SquareMatrix>& generators, std::size_t cap) {
    std::vector<SquareMatrix> symbols = make_symbols(generators);
    GroupTable t;
    t.field_ = generators.front().field();
    t.n_ = generators.front().n();
    t.generators_ = generators;

    SquareMatrix id = SquareMatrix::identity(t.field_, t.n_);
    t.elements_.push_back(id);
    t.word_length_.push_back(0);
    t.parent_.push_back(-1);
    t.via_symbol_.push_back(0);
    t.index_.emplace(canonical_key(id), 0);

    for (std::size_t head = 0; head < t.elements_.size(); ++head) {
        for (std::size_t s = 0; s < symbols.size(); ++s) {
            SquareMatrix next = mat_mul(t.elements_[head], symbols[s]);
            std::string key = canonical_key(next);
            if (t.index_.count(key)) continue;
            if (t.elements_.size() >= cap)
                throw Error(Errc::CapExceeded,
                            "group closure exceeds cap " + std::to_string(cap));
            auto idx = static_cast<std::uint32_t>(t.elements_.size());
            t.index_.emplace(std::move(key), idx);
            t.elements_.push_back(std::move(next));
            t.word_length_.push_back(t.word_length_[head] + 1);
            t.parent_.push_back(static_cast<std::int64_t>(head));
            t.via_symbol_.push_back(static_cast<std::uint32_t>(s));
        }
    }
    return t;
}

DiameterReport bfs_diameter(const GroupTable& table) {
    DiameterReport rep;
    rep.group_order = table.order();
    std::uint32_t diam = 0;
    std::size_t witness_idx = 0;
    for (std::size_t i = 0; i < table.order(); ++i) {
        if (table.word_length(i) > diam) {
            diam = table.word_length(i);
            witness_idx = i;
        }
    }
    rep.diameter = diam;
    rep.eccentricity_histogram.assign(diam + 1, 0);
    for (std::size_t i = 0; i < table.order(); ++i) rep.eccentricity_histogram[table.word_length(i)]++;
    rep.witness = table.element(witness_idx);
    rep.witness_word = table.word_of(witness_idx);
    return rep;
}

DiameterReport bfs_diameter(const std::vector<SquareMatrix>& generators, std::size_t cap) {
    return bfs_diameter(enumerate_group(generators, cap));
}

LowDegreeWord find_low_degree_word(const std::vector<SquareMatrix>& generators,
                                   const std::vector<Polynomial>& targets, std::size_t cap) {
    if (targets.empty()) throw Error(Errc::EmptyList, "need at least one target polynomial");
    std::vector<SquareMatrix> symbols = make_symbols(generators);
    const Field& field = generators.front().field();
    std::size_t n = generators.front().n();

    Polynomial product = Polynomial::one(field);
    std::size_t total_deg = 0;
    for (const auto& tgt : targets) {
        if (!same_spec(tgt.field(), field))
            throw Error(Errc::SpecMismatch, "target polynomial over a different field");
        if (tgt.degree() < 1) throw Error(Errc::DegreeZero, "targets must have degree >= 1");
        total_deg += static_cast<std::size_t>(tgt.degree());
        product = mul(product, tgt);
    }
    if (total_deg > n)
        throw Error(Errc::InvalidInput, "total target degree exceeds the matrix dimension");

    Nat budget;
    mpz_ui_pow_ui(budget.get_mpz_t(), static_cast<unsigned long>(field->q()),
                  static_cast<unsigned long>(n * total_deg));

    auto divisible = [&](const SquareMatrix& m) {
        return divmod(charpoly(m), product).second.is_zero();
    };

    // breadth-first over group elements; the first hit carries the shortest,
    // lexicographically smallest word
    std::vector<SquareMatrix> elements;
    std::vector<std::int64_t> parent;
    std::vector<std::uint32_t> via;
    std::unordered_map<std::string, std::uint32_t> index;
    auto word_of = [&](std::size_t i) {
        std::string w;
        while (parent[i] >= 0) {
            w.push_back(symbol_label(via[i]));
            i = static_cast<std::size_t>(parent[i]);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    SquareMatrix id = SquareMatrix::identity(field, n);
    elements.push_back(id);
    parent.push_back(-1);
    via.push_back(0);
    index.emplace(canonical_key(id), 0);
    if (divisible(id)) return {"", id, 0, budget};

    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (std::size_t s = 0; s < symbols.size(); ++s) {
            SquareMatrix next = mat_mul(elements[head], symbols[s]);
            std::string key = canonical_key(next);
            if (index.count(key)) continue;
            if (elements.size() >= cap)
                throw Error(Errc::NotFoundWithinCap,
                            "no qualifying word within cap " + std::to_string(cap));
            auto idx = static_cast<std::uint32_t>(elements.size());
            index.emplace(std::move(key), idx);
            elements.push_back(next);
            parent.push_back(static_cast<std::int64_t>(head));
            via.push_back(static_cast<std::uint32_t>(s));
            if (divisible(next)) {
                std::string w = word_of(idx);
                return {w, std::move(next), w.size(), budget};
            }
        }
    }
    throw Error(Errc::NotFoundWithinCap, "group exhausted without a qualifying word");
}

std::uint64_t class_covering_number(const GroupTable& table, const SquareMatrix& a,
                                    std::uint64_t kmax) {
    auto a_idx = table.find(a);
    if (!a_idx) throw Error(Errc::InvalidInput, "element is not in the group");
    std::size_t order = table.order();

    // conjugacy class of a, as element indices
    std::vector<std::uint8_t> in_class(order, 0);
    std::vector<std::uint32_t> class_members;
    for (std::size_t g = 0; g < order; ++g) {
        SquareMatrix conj = mat_mul(mat_mul(table.element(g), a), inverse(table.element(g)));
        std::uint32_t idx = *table.find(conj);
        if (!in_class[idx]) {
            in_class[idx] = 1;
            class_members.push_back(idx);
        }
    }

    std::vector<std::uint8_t> covered(order, 0);
    std::vector<std::uint32_t> frontier = class_members; // C^j for the current j
    std::size_t covered_count = 0;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        for (auto idx : frontier) {
            if (!covered[idx]) {
                covered[idx] = 1;
                ++covered_count;
            }
        }
        if (covered_count == order) return k;
        if (k == kmax) break;
        std::vector<std::uint8_t> seen(order, 0);
        std::vector<std::uint32_t> next;
        for (auto x : frontier) {
            for (auto c : class_members) {
                SquareMatrix prod = mat_mul(table.element(x), table.element(c));
                std::uint32_t idx = *table.find(prod);
                if (!seen[idx]) {
                    seen[idx] = 1;
                    next.push_back(idx);
                }
            }
        }
        frontier = std::move(next);
    }
    throw Error(Errc::NotCovered,
                "class products do not cover the group within kmax = " + std::to_string(kmax));
}

DiameterReport exhaustive_group_diameter(const GroupTable& table) {
    std::size_t order = table.order();
    if (order > 16)
        throw Error(Errc::OrderTooLarge, "exhaustive diameter is limited to groups of order <= 16");

    // multiplication and inverse tables over element indices
    std::vector<std::uint32_t> mult(order * order);
    std::vector<std::uint32_t> invt(order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j)
            mult[i * order + j] = *table.find(mat_mul(table.element(i), table.element(j)));
        invt[i] = *table.find(inverse(table.element(i)));
    }

    auto bfs = [&](const std::vector<std::uint32_t>& syms, std::vector<std::uint32_t>& dist) {
        dist.assign(order, UINT32_MAX);
        dist[0] = 0;
        std::deque<std::uint32_t> q{0};
        std::size_t reached = 1;
        while (!q.empty()) {
            std::uint32_t at = q.front();
            q.pop_front();
            for (auto s : syms) {
                std::uint32_t nx = mult[at * order + s];
                if (dist[nx] == UINT32_MAX) {
                    dist[nx] = dist[at] + 1;
                    ++reached;
                    q.push_back(nx);
                }
            }
        }
        return reached == order;
    };

    std::uint32_t best_diam = 0;
    std::uint64_t best_mask = 1; // the subset {identity} generates the trivial group
    bool found = order == 1;
    std::vector<std::uint32_t> dist;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << order); ++mask) {
        std::vector<std::uint32_t> syms;
        for (std::size_t i = 0; i < order; ++i) {
            if (!(mask >> i & 1)) continue;
            syms.push_back(static_cast<std::uint32_t>(i));
            if (invt[i] != i) syms.push_back(invt[i]);
        }
        if (!bfs(syms, dist)) continue;
        std::uint32_t diam = *std::max_element(dist.begin(), dist.end());
        if (!found || diam > best_diam) {
            found = true;
            best_diam = diam;
            best_mask = mask;
        }
    }

    // rebuild the report for the maximizing generating set
    std::vector<std::uint32_t> syms;
    std::vector<std::size_t> genset;
    for (std::size_t i = 0; i < order; ++i) {
        if (!(best_mask >> i & 1)) continue;
        genset.push_back(i);
        syms.push_back(static_cast<std::uint32_t>(i));
        if (invt[i] != i) syms.push_back(invt[i]);
    }
    bfs(syms, dist);
    DiameterReport rep;
    rep.group_order = order;
    rep.diameter = best_diam;
    rep.eccentricity_histogram.assign(best_diam + 1, 0);
    std::size_t witness_idx = 0;
    for (std::size_t i = 0; i < order; ++i) {
        rep.eccentricity_histogram[dist[i]]++;
        if (dist[i] == best_diam && witness_idx == 0 && i > 0) witness_idx = i;
    }
    if (best_diam == 0) witness_idx = 0;
    rep.witness = table.element(witness_idx);
    rep.witness_generating_set = genset;

    // shortest word over the maximizing set, labels in subset order
    std::vector<std::int64_t> par(order, -1);
    std::vector<std::uint32_t> via(order, 0);
    {
        std::vector<std::uint32_t> d2(order, UINT32_MAX);
        d2[0] = 0;
        std::deque<std::uint32_t> q{0};
        while (!q.empty()) {
            std::uint32_t at = q.front();
            q.pop_front();
            for (std::size_t si = 0; si < genset.size(); ++si) {
                for (int invflag = 0; invflag < 2; ++invflag) {
                    std::uint32_t sym = invflag ? invt[genset[si]]
                                                : static_cast<std::uint32_t>(genset[si]);
                    if (invflag && invt[genset[si]] == genset[si]) continue;
                    std::uint32_t nx = mult[at * order + sym];
                    if (d2[nx] == UINT32_MAX) {
                        d2[nx] = d2[at] + 1;
                        par[nx] = at;
                        via[nx] = static_cast<std::uint32_t>(2 * si + invflag);
                        q.push_back(nx);
                    }
                }
            }
        }
    }
    std::string w;
    for (std::size_t i = witness_idx; par[i] >= 0; i = static_cast<std::size_t>(par[i]))
        w.push_back(symbol_label(via[i]));
    std::reverse(w.begin(), w.end());
    rep.witness_word = w;
    return rep;
}

} // namespace matred
