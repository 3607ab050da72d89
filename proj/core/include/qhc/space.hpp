#ifndef QHC_SPACE_HPP
#define QHC_SPACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhc {

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite preorder presenting an Alexandrov space. Opens are the up-sets;
// subsets are bitmasks over the points (point i = bit i).
class FiniteSpace {
 public:
  FiniteSpace() = default;
  // `leq` lists pairs (x, y) meaning x <= y. The reflexive-transitive closure
  // is taken; the result is validated.
  FiniteSpace(int n, const std::vector<std::pair<int, int>>& leq);

  int points() const { return n_; }
  uint32_t full() const { return n_ >= 32 ? ~0u : (1u << n_) - 1; }
  bool leq(int x, int y) const { return (up_[x] >> y) & 1u; }
  uint32_t up_set(int x) const { return up_[x]; }

  uint32_t interior(uint32_t a) const;
  uint32_t closure(uint32_t a) const; // down-closure
  uint32_t reg(uint32_t a) const { return interior(closure(a)); }
  bool is_open(uint32_t a) const { return interior(a) == a; }
  bool is_regular_open(uint32_t a) const { return is_open(a) && reg(a) == a; }

  // Heyting operations on opens.
  uint32_t heyting_imp(uint32_t u, uint32_t v) const {
    return interior((full() & ~u) | v);
  }
  uint32_t heyting_neg(uint32_t u) const { return interior(full() & ~u); }

  const std::vector<uint32_t>& opens() const; // all up-sets, ascending mask order
  std::vector<uint32_t> regular_opens() const;

  // Canonical form under point permutations (for isomorphism classing).
  std::string canonical_key() const;

  std::vector<std::pair<int, int>> strict_pairs() const;

 private:
  int n_ = 0;
  std::vector<uint32_t> up_;
  mutable std::vector<uint32_t> opens_cache_;
};

// All preorders with 1..max_points points, one representative per isomorphism
// class, in a fixed deterministic order.
std::vector<FiniteSpace> enumerate_spaces(int max_points);

// Labeled count (used by the enumeration oracle в tests).
long count_labeled_preorders(int n);

} // namespace qhc

#endif
