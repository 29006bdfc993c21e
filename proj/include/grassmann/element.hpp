#ifndef GRASSMANN_ELEMENT_HPP
#define GRASSMANN_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <optional>
#include <vector>

#include "grassmann/scalar.hpp"

namespace grassmann {

/// Element arithmetic keeps one monomial in a single 32-bit word.
inline constexpr int kMaxGenerators = 16;

/// Bit (i-1) set <=> generator v_i occurs.
using Mask = std::uint32_t;

inline constexpr Mask full_mask(int n) noexcept { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline constexpr Mask bit(int i) noexcept { return Mask{1} << (i - 1); }
inline int popcount(Mask m) noexcept { return __builtin_popcount(m); }

/// Throws IndexOutOfRange unless 1 <= n <= kMaxGenerators.
void check_generator_count(int n);

/// The basis monomial v_J = v_{j_1} ... v_{j_k} with j_1 < ... < j_k.
class Monomial {
 public:
  Monomial(int n, Mask mask);
  static Monomial unit(int n) { return Monomial(n, 0); }
  /// Indices are 1-based and must be distinct.
  static Monomial from_indices(int n, const std::vector<int>& indices);

  int n() const noexcept { return n_; }
  Mask mask() const noexcept { return mask_; }
  int degree() const noexcept { return popcount(mask_); }
  bool contains(int i) const noexcept { return (mask_ & bit(i)) != 0; }

  /// Support in increasing order.
  std::vector<int> indices() const;
  /// Support in decreasing order; the key the monomial order compares.
  std::vector<int> order_key() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int n_;
  Mask mask_;
};

/// Sign s with v_J v_K = s v_{J u K}; 0 when J and K meet.
int sign(Mask j, Mask k) noexcept;
int sign(const Monomial& j, const Monomial& k);

/// The initial-term order. Descending supports are compared position by
/// position and the smaller index wins; a proper prefix beats its extensions.
/// On masks this is exactly: whichever side lacks the highest differing bit is
/// larger, i.e. reversed integer order.
std::strong_ordering compare_monomials(Mask a, Mask b) noexcept;
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

/// A canonical sparse element of E^(n): no stored coefficient is zero.
class Element {
 public:
  /// Ascending mask order, which is descending monomial order.
  using TermMap = std::map<Mask, Scalar>;

  explicit Element(int n, Field field = Field::rational());

  static Element zero(int n, Field field = Field::rational()) { return Element(n, field); }
  static Element one(int n, Field field = Field::rational());
  static Element scalar(int n, const Scalar& c);
  static Element monomial(const Monomial& m, const Scalar& c);
  static Element monomial(int n, Mask mask, Field field = Field::rational());
  /// The generator v_i.
  static Element generator(int n, int i, Field field = Field::rational());

  int n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  const TermMap& terms() const& noexcept { return terms_; }
  // Rvalue overload keeps range-for over a temporary safe.
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Scalar coefficient(Mask mask) const;
  /// Adds c * v_mask, dropping the term if it cancels.
  Element& add_term(Mask mask, const Scalar& c);

  /// Lowest and highest degree present; nullopt for zero.
  std::optional<int> min_degree() const;
  bool is_homogeneous() const;
  /// All terms of even (resp. odd) degree. Zero is both.
  bool is_even() const;
  bool is_odd() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

  /// Throws AmbientMismatch unless both live in the same E^(n) over the same field.
  void check_ambient(const Element& other) const;

 private:
  int n_;
  Field field_;
  TermMap terms_;
};

Element mul(const Element& a, const Element& b);

/// Keeps the terms whose monomial omits generator i.
Element pi(int i, const Element& x);

Element grade_component(const Element& x, int k);
Element even_part(const Element& x);
Element odd_part(const Element& x);

/// Least-degree nonzero homogeneous component; UndefinedInput on zero.
Element min_part(const Element& x);

/// Largest monomial with nonzero coefficient; UndefinedInput on zero.
Monomial initial_monomial(const Element& x);
/// Leading term with its coefficient; zero maps to zero.
Element initial_term(const Element& x);

}  // namespace grassmann

#endif  // GRASSMANN_ELEMENT_HPP
