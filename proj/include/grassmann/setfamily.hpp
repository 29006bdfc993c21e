#ifndef GRASSMANN_SETFAMILY_HPP
#define GRASSMANN_SETFAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "grassmann/element.hpp"

namespace grassmann {

/// A family of subsets of [n], each stored as a bitmask. Sets are kept sorted
/// ascending by integer value without duplicates.
class SetFamily {
 public:
  explicit SetFamily(int n, std::vector<Mask> sets = {});

  int n() const noexcept { return n_; }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(Mask set) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::vector<Mask> sets_;
};

SetFamily family_union(const SetFamily& a, const SetFamily& b);

bool is_intersecting(const SetFamily& f);
bool is_odd_family(const SetFamily& f);

/// All k-subsets of [n].
SetFamily level(int n, int k);
/// All odd-size subsets of [n].
SetFamily odd_sets(int n);
/// Union of the odd levels i with i > n/2.
SetFamily odd_upper_levels(int n);
/// All k-subsets containing l.
SetFamily star(int n, int k, int l);

struct SearchOptions {
  /// Maximum number of search nodes. Left empty, a default sized for n <= 7
  /// applies, and larger instances are refused.
  std::optional<std::uint64_t> node_budget;
  /// Collect every maximum family, not only the first one.
  bool enumerate_all = false;
};

struct SearchResult {
  std::size_t maximum = 0;
  /// First maximum family reached by the depth-first search.
  SetFamily certificate{1};
  std::uint64_t nodes = 0;
  /// Filled only with SearchOptions::enumerate_all.
  std::vector<SetFamily> all_maxima;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Largest odd intersecting system in 2^[n], by exact branch and bound over
/// the odd subsets (ascending mask order). BudgetExceeded if the node budget
/// runs out; never returns an unproven answer.
SearchResult max_odd_intersecting(int n, SearchOptions options = {});

/// Largest intersecting family inside the k-th level, for k <= n/2, n <= 12.
SearchResult ekr_search(int n, int k, SearchOptions options = {});
std::size_t ekr_max(int n, int k);

/// Largest odd intersecting family inside levels i and n-i-1 (n, i odd,
/// i < n/2 - 1). Always enumerates every maximizer.
SearchResult two_level_max(int n, int i, SearchOptions options = {});

/// Maximum clique search on an arbitrary family graph: vertices are the given
/// sets, adjacent when they intersect. Exposed for tests.
SearchResult max_intersecting_subfamily(const SetFamily& candidates, SearchOptions options);

}  // namespace grassmann

#endif  // GRASSMANN_SETFAMILY_HPP
