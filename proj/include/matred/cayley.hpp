#ifndef MATRED_CAYLEY_HPP
#define MATRED_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matred/matrix.hpp"

namespace matred {

inline constexpr std::size_t kDefaultGroupCap = 2'000'000;
inline constexpr std::uint64_t kDefaultCoverKmax = 16;

/// Exact serialized form of the entry array (4 bytes per entry); lookup is
/// exact equality on this key, nothing hash-semantic is exposed.
std::string canonical_key(const SquareMatrix& m);

/// Symbols alternate generator/inverse: 2i -> 'a'+i, 2i+1 -> 'A'+i.
char symbol_label(std::size_t sym);

/// BFS closure of a generator set, with exact word lengths over
/// S u S^-1 u {1} and enough bookkeeping to reconstruct shortest words.
/// Element 0 is the identity; discovery order is deterministic and words are
/// lexicographically smallest among shortest (symbols expand in index order).
class GroupTable {
  public:
    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<SquareMatrix>& elements() const { return elements_; }
    const std::vector<SquareMatrix>& generators() const { return generators_; }
    const SquareMatrix& element(std::size_t i) const { return elements_[i]; }
    std::uint32_t word_length(std::size_t i) const { return word_length_[i]; }
    std::optional<std::uint32_t> find(const SquareMatrix& m) const;
    std::string word_of(std::size_t i) const;

  private:
    friend GroupTable enumerate_group(const std::vector<SquareMatrix>&, std::size_t);
    Field field_;
    std::size_t n_ = 0;
    std::vector<SquareMatrix> elements_;
    std::vector<SquareMatrix> generators_;
    std::vector<std::uint32_t> word_length_;
    std::vector<std::int64_t> parent_;
    std::vector<std::uint32_t> via_symbol_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

GroupTable enumerate_group(const std::vector<SquareMatrix>& generators,
                           std::size_t cap = kDefaultGroupCap);

struct DiameterReport {
    std::size_t group_order = 0;
    std::uint32_t diameter = 0;
    std::vector<std::size_t> eccentricity_histogram; // count of elements per word length
    SquareMatrix witness;
    std::string witness_word;
    // exhaustive variant only: the generating set (element indices) attaining
    // the maximum, with words labeled over that set in index order
    std::vector<std::size_t> witness_generating_set;
};

DiameterReport bfs_diameter(const GroupTable& table);
DiameterReport bfs_diameter(const std::vector<SquareMatrix>& generators,
                            std::size_t cap = kDefaultGroupCap);

struct LowDegreeWord {
    std::string word;
    SquareMatrix element;
    std::size_t length = 0;
    Nat budget; // q^{n * sum deg(targets)}, the transversal-set length bound
};

/// Shortest word (lexicographically smallest among equals) whose element has
/// a characteristic polynomial divisible by the product of the targets.
LowDegreeWord find_low_degree_word(const std::vector<SquareMatrix>& generators,
                                   const std::vector<Polynomial>& targets,
                                   std::size_t cap = kDefaultGroupCap);

/// Smallest k <= kmax such that products of at most k conjugates of `a`
/// exhaust the group (union over j <= k of j-fold class products).
std::uint64_t class_covering_number(const GroupTable& table, const SquareMatrix& a,
                                    std::uint64_t kmax = kDefaultCoverKmax);

/// Maximum of diam_S over every generating subset S of the group. Iterates
/// all 2^|G| subsets; hard-limited to order <= 16.
DiameterReport exhaustive_group_diameter(const GroupTable& table);

} // namespace matred

#endif
