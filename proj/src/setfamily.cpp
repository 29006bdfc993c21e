#include "grassmann/setfamily.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "grassmann/errors.hpp"

namespace grassmann {

SetFamily::SetFamily(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxGenerators) throw IndexOutOfRange("ground set size out of range");
  for (Mask m : sets_) {
    if ((m & ~full_mask(n)) != 0) throw IndexOutOfRange("set exceeds ground set [n]");
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(Mask set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set);
}

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
  if (a.n() != b.n()) throw AmbientMismatch("families over different ground sets");
  auto sets = a.sets();
  sets.insert(sets.end(), b.sets().begin(), b.sets().end());
  return SetFamily(a.n(), std::move(sets));
}

bool is_intersecting(const SetFamily& f) {
  const auto& s = f.sets();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      if ((s[i] & s[j]) == 0) return false;
    }
  }
  return true;
}

bool is_odd_family(const SetFamily& f) {
  return std::all_of(f.sets().begin(), f.sets().end(),
                     [](Mask m) { return popcount(m) % 2 == 1; });
}

namespace {

template <class Keep>
SetFamily collect(int n, Keep keep) {
  if (n < 1 || n > kMaxGenerators) throw IndexOutOfRange("ground set size out of range");
  std::vector<Mask> sets;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (keep(m)) sets.push_back(m);
  }
  return SetFamily(n, std::move(sets));
}

}  // namespace

SetFamily level(int n, int k) {
  if (k < 0 || k > n) throw IndexOutOfRange("level " + std::to_string(k) + " out of range");
  return collect(n, [k](Mask m) { return popcount(m) == k; });
}

SetFamily odd_sets(int n) {
  return collect(n, [](Mask m) { return popcount(m) % 2 == 1; });
}

SetFamily odd_upper_levels(int n) {
  return collect(n, [n](Mask m) {
    const int d = popcount(m);
    return d % 2 == 1 && 2 * d > n;
  });
}

SetFamily star(int n, int k, int l) {
  if (l < 1 || l > n) throw IndexOutOfRange("star element " + std::to_string(l) + " out of range");
  if (k < 1 || k > n) throw IndexOutOfRange("star level " + std::to_string(k) + " out of range");
  return collect(n, [k, l](Mask m) { return popcount(m) == k && (m & bit(l)); });
}

// ------------------------------------------------------------------- search

namespace {

class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Index of the lowest set bit; call only when !none().
  std::size_t first() const {
    for (std::size_t k = 0;; ++k) {
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
  }
  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= o.words_[k];
    return out;
  }
  void remove_all(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Exact maximum clique in the "sets intersect" graph. Vertices are tried in
/// ascending mask order; a node is pruned when a greedy colouring of its
/// candidates (and, if given, the complement-pair count) cannot beat the
/// incumbent.
class CliqueSearch {
 public:
  CliqueSearch(const SetFamily& vertices, bool complement_pairs, std::uint64_t budget,
               bool enumerate_all)
      : sets_(vertices.sets()),
        n_(vertices.n()),
        budget_(budget),
        enumerate_all_(enumerate_all),
        adjacency_(sets_.size(), Bits(sets_.size())),
        non_adjacency_(sets_.size(), Bits(sets_.size())),
        partner_(sets_.size(), kNoPartner) {
    for (std::size_t a = 0; a < sets_.size(); ++a) {
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        if (a != b && (sets_[a] & sets_[b]) != 0) {
          adjacency_[a].set(b);
        } else {
          non_adjacency_[a].set(b);
        }
      }
    }
    if (complement_pairs) {
      for (std::size_t a = 0; a < sets_.size(); ++a) {
        const Mask c = full_mask(n_) & ~sets_[a];
        auto it = std::lower_bound(sets_.begin(), sets_.end(), c);
        if (it != sets_.end() && *it == c) {
          partner_[a] = static_cast<std::size_t>(it - sets_.begin());
          use_pairs_ = true;
        }
      }
    }
  }

  SearchResult run() {
    Bits all(sets_.size());
    for (std::size_t v = 0; v < sets_.size(); ++v) {
      // A set meeting itself must be nonempty.
      if (sets_[v] != 0) all.set(v);
    }
    expand(all);
    SearchResult result;
    result.maximum = best_.size();
    result.certificate = to_family(best_);
    result.nodes = nodes_;
    for (const auto& c : all_best_) result.all_maxima.push_back(to_family(c));
    return result;
  }

 private:
  static constexpr std::size_t kNoPartner = static_cast<std::size_t>(-1);

  SetFamily to_family(const std::vector<std::size_t>& clique) const {
    std::vector<Mask> masks;
    for (auto v : clique) masks.push_back(sets_[v]);
    return SetFamily(n_, std::move(masks));
  }

  std::size_t colour_bound(const Bits& candidates) const {
    std::size_t colours = 0;
    Bits uncoloured = candidates;
    while (!uncoloured.none()) {
      ++colours;
      Bits open = uncoloured;
      while (!open.none()) {
        const auto v = open.first();
        uncoloured.reset(v);
        open.reset(v);
        open = open & non_adjacency_[v];
      }
    }
    return colours;
  }

  std::size_t pair_bound(const Bits& candidates) const {
    std::size_t bound = 0;
    for (std::size_t v = 0; v < sets_.size(); ++v) {
      if (!candidates.test(v)) continue;
      const auto p = partner_[v];
      // Count each complementary pair once.
      if (p == kNoPartner || !candidates.test(p) || v < p) ++bound;
    }
    return bound;
  }

  bool hopeless(std::size_t upper) const {
    return enumerate_all_ ? upper < best_size() : upper <= best_size();
  }

  std::size_t best_size() const { return found_ ? best_.size() : 0; }

  void record() {
    if (!found_ || current_.size() > best_.size()) {
      best_ = current_;
      found_ = true;
      all_best_.clear();
      if (enumerate_all_) all_best_.push_back(current_);
    } else if (enumerate_all_ && current_.size() == best_.size()) {
      all_best_.push_back(current_);
    }
  }

  void expand(Bits candidates) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("search budget of " + std::to_string(budget_) +
                               " nodes exhausted before optimality was proven",
                           best_size());
    }
    if (candidates.none()) {
      record();
      return;
    }
    std::size_t upper = current_.size() + colour_bound(candidates);
    if (use_pairs_) upper = std::min(upper, current_.size() + pair_bound(candidates));
    if (hopeless(upper)) return;

    while (!candidates.none()) {
      if (hopeless(current_.size() + candidates.count())) return;
      const auto v = candidates.first();
      current_.push_back(v);
      expand(candidates & adjacency_[v]);
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Mask> sets_;
  int n_;
  std::uint64_t budget_;
  bool enumerate_all_;
  std::vector<Bits> adjacency_;
  std::vector<Bits> non_adjacency_;
  std::vector<std::size_t> partner_;
  bool use_pairs_ = false;

  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  bool found_ = false;
  std::vector<std::vector<std::size_t>> all_best_;
};

SearchResult run_search(const SetFamily& candidates, bool complement_pairs,
                        const SearchOptions& options) {
  CliqueSearch search(candidates, complement_pairs, options.node_budget.value_or(kDefaultNodeBudget),
                      options.enumerate_all);
  return search.run();
}

}  // namespace

SearchResult max_intersecting_subfamily(const SetFamily& candidates, SearchOptions options) {
  return run_search(candidates, false, options);
}

SearchResult max_odd_intersecting(int n, SearchOptions options) {
  if (n < 1 || n > kMaxGenerators) throw IndexOutOfRange("n out of range for the family search");
  if (n > 7 && !options.node_budget) {
    throw PreconditionError("n > 7 needs an explicit node budget");
  }
  if (options.enumerate_all && n > 5) {
    throw PreconditionError("enumerating every maximum family is supported only for n <= 5");
  }
  // For even n an odd set and its complement are both odd and disjoint.
  return run_search(odd_sets(n), n % 2 == 0, options);
}

SearchResult ekr_search(int n, int k, SearchOptions options) {
  if (n < 1 || n > 12) throw PreconditionError("ekr search supports 1 <= n <= 12");
  if (k < 1 || 2 * k > n) throw PreconditionError("ekr search needs 1 <= k <= n/2");
  return run_search(level(n, k), false, options);
}

std::size_t ekr_max(int n, int k) { return ekr_search(n, k).maximum; }

SearchResult two_level_max(int n, int i, SearchOptions options) {
  if (n < 1 || n > kMaxGenerators || n % 2 == 0) throw PreconditionError("two_level_max needs odd n");
  if (i < 1 || i % 2 == 0) throw PreconditionError("two_level_max needs odd i >= 1");
  if (2 * i >= n - 2) throw PreconditionError("two_level_max needs i < n/2 - 1");
  options.enumerate_all = true;
  return run_search(family_union(level(n, i), level(n, n - i - 1)), false, options);
}

}  // namespace grassmann
