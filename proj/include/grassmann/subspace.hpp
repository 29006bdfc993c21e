#ifndef GRASSMANN_SUBSPACE_HPP
#define GRASSMANN_SUBSPACE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/setfamily.hpp"

namespace grassmann {

/// A bijection of [n], stored as its image list sigma(1), ..., sigma(n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// sigma(i) = n + 1 - i.
  static Permutation reversed(int n);
  static Permutation transposition(int n, int a, int b);
  /// Comma separated images, e.g. "1,2,6,4,5,3".
  static Permutation parse(std::string_view text, int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A subspace of E^(n) in canonical form: reduced echelon basis whose pivots
/// are the initial monomials of the basis vectors, normalized to coefficient 1
/// and absent from every other basis vector. Basis vectors are ordered by
/// strictly decreasing pivot, so equal subspaces have equal bases.
class Subspace {
 public:
  explicit Subspace(int n, Field field = Field::rational());

  static Subspace span(int n, Field field, const std::vector<Element>& vectors);
  /// Ambient taken from the first vector; the list must be nonempty.
  static Subspace span(const std::vector<Element>& vectors);

  int n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<Element>& basis() const noexcept { return basis_; }
  /// Pivot monomials, largest first.
  std::vector<Mask> pivots() const;

  /// Remainder of x after eliminating every pivot.
  Element reduce(const Element& x) const;
  bool contains(const Element& x) const;
  bool contains(const Subspace& other) const;

  void check_ambient(const Subspace& other) const;
  void check_ambient(const Element& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  void insert(Element x);

  int n_;
  Field field_;
  std::vector<Element> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Span of all products c*d with c in a, d in b.
Subspace product_span(const Subspace& a, const Subspace& b);

/// Elements of d whose terms all satisfy keep (d intersected with a
/// monomial-spanned subspace).
Subspace restrict_support(const Subspace& d, const std::function<bool(Mask)>& keep);

struct SpaceSelector {
  enum class Kind { Degree, Even, Odd, Star, Whole };
  Kind kind = Kind::Whole;
  int k = 0;
  int l = 0;

  static SpaceSelector degree(int k) { return {Kind::Degree, k, 0}; }
  static SpaceSelector even() { return {Kind::Even, 0, 0}; }
  static SpaceSelector odd() { return {Kind::Odd, 0, 0}; }
  /// Monomials of degree k whose support contains l.
  static SpaceSelector star(int l, int k) { return {Kind::Star, k, l}; }
  static SpaceSelector whole() { return {Kind::Whole, 0, 0}; }
};

Subspace standard_space(int n, SpaceSelector selector, Field field = Field::rational());
Subspace monomial_span(int n, const std::vector<Mask>& masks, Field field = Field::rational());
Subspace monomial_span(const SetFamily& family, Field field = Field::rational());

/// True when every basis vector is a single term.
bool is_monomial_spanned(const Subspace& d);

/// ker(pi_i restricted to d) + pi_i(d).
Subspace gamma(int i, const Subspace& d);
/// gamma_{sigma(1)} ... gamma_{sigma(n)} (d); gamma_{sigma(n)} acts first.
Subspace gamma_chain(const Permutation& sigma, const Subspace& d);
/// Span of initial monomials of all elements (the pivots of the canonical basis).
Subspace initial_span(const Subspace& d);
/// Supports of the monomials spanning gamma_chain(sigma, d).
SetFamily monomial_family(const Permutation& sigma, const Subspace& d);

/// Span of the lowest-degree components of all nonzero elements.
Subspace min_space(const Subspace& a);

/// dim(d intersected with E_k) for k = 0..n.
std::vector<std::size_t> hilbert_series(const Subspace& d);
/// d equals the sum of its homogeneous pieces.
bool is_graded(const Subspace& d);

/// Skew pairing on odd elements: the degree-n part of ab for even n, the
/// degree-(n-1) part for odd n. PreconditionError on non-odd input.
Element phi(const Element& a, const Element& b);
/// {x in E_odd : phi(x, w) = 0 for all w in d}; d must lie in E_odd.
Subspace perp(const Subspace& d);

}  // namespace grassmann

#endif  // GRASSMANN_SUBSPACE_HPP
