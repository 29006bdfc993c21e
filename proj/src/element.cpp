#include "grassmann/element.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "grassmann/errors.hpp"

namespace grassmann {

void check_generator_count(int n) {
  if (n < 1 || n > kMaxGenerators) {
    throw IndexOutOfRange("generator count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxGenerators));
  }
}

Monomial::Monomial(int n, Mask mask) : n_(n), mask_(mask) {
  check_generator_count(n);
  if ((mask & ~full_mask(n)) != 0) {
    throw IndexOutOfRange("monomial mask exceeds ambient n=" + std::to_string(n));
  }
}

Monomial Monomial::from_indices(int n, const std::vector<int>& indices) {
  check_generator_count(n);
  Mask mask = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    if (mask & bit(i)) throw PreconditionError("duplicate index " + std::to_string(i));
    mask |= bit(i);
  }
  return Monomial(n, mask);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<int> Monomial::order_key() const {
  auto out = indices();
  std::reverse(out.begin(), out.end());
  return out;
}

int sign(Mask j, Mask k) noexcept {
  if (j & k) return 0;
  // Count pairs (a in J, b in K) with a > b: for each b, the bits of J above b.
  int inversions = 0;
  for (Mask m = k; m != 0; m &= m - 1) {
    const int b = std::countr_zero(m);
    inversions += popcount(j >> (b + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

int sign(const Monomial& j, const Monomial& k) {
  if (j.n() != k.n()) throw AmbientMismatch("monomials from different ambient algebras");
  return sign(j.mask(), k.mask());
}

std::strong_ordering compare_monomials(Mask a, Mask b) noexcept {
  if (a == b) return std::strong_ordering::equal;
  const Mask top = std::bit_floor(a ^ b);
  return (b & top) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw AmbientMismatch("monomials from different ambient algebras");
  return compare_monomials(a.mask(), b.mask());
}

Element::Element(int n, Field field) : n_(n), field_(field) { check_generator_count(n); }

Element Element::one(int n, Field field) { return monomial(n, 0, field); }

Element Element::scalar(int n, const Scalar& c) {
  Element out(n, c.field());
  out.add_term(0, c);
  return out;
}

Element Element::monomial(const Monomial& m, const Scalar& c) {
  Element out(m.n(), c.field());
  out.add_term(m.mask(), c);
  return out;
}

Element Element::monomial(int n, Mask mask, Field field) {
  return monomial(Monomial(n, mask), Scalar(field, 1));
}

Element Element::generator(int n, int i, Field field) {
  if (i < 1 || i > n) throw IndexOutOfRange("generator index " + std::to_string(i));
  return monomial(n, bit(i), field);
}

Scalar Element::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(field_, 0) : it->second;
}

Element& Element::add_term(Mask mask, const Scalar& c) {
  if (c.field() != field_) throw FieldError("coefficient field differs from element field");
  if ((mask & ~full_mask(n_)) != 0) throw IndexOutOfRange("term outside ambient algebra");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

std::optional<int> Element::min_degree() const {
  std::optional<int> best;
  for (const auto& [mask, c] : terms_) {
    const int d = popcount(mask);
    if (!best || d < *best) best = d;
  }
  return best;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = popcount(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return popcount(t.first) == d; });
}

bool Element::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return popcount(t.first) % 2 == 0; });
}

bool Element::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return popcount(t.first) % 2 == 1; });
}

void Element::check_ambient(const Element& other) const {
  if (n_ != other.n_) {
    throw AmbientMismatch("elements of E^(" + std::to_string(n_) + ") and E^(" +
                          std::to_string(other.n_) + ")");
  }
  if (field_ != other.field_) {
    throw AmbientMismatch("elements over " + field_.to_string() + " and " +
                          other.field_.to_string());
  }
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [mask, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  check_ambient(rhs);
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_ambient(rhs);
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldError("scalar field differs from element field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, v] : terms_) v *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_ambient(b);
  Element out(a.n(), a.field());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add_term(ma | mb, s > 0 ? c : -c);
    }
  }
  return out;
}

Element mul(const Element& a, const Element& b) { return a * b; }

namespace {

template <class Keep>
Element filter_terms(const Element& x, Keep keep) {
  Element out(x.n(), x.field());
  for (const auto& [mask, c] : x.terms()) {
    if (keep(mask)) out.add_term(mask, c);
  }
  return out;
}

}  // namespace

Element pi(int i, const Element& x) {
  if (i < 1 || i > x.n()) {
    throw IndexOutOfRange("projection index " + std::to_string(i) + " outside 1.." +
                          std::to_string(x.n()));
  }
  return filter_terms(x, [b = bit(i)](Mask m) { return (m & b) == 0; });
}

Element grade_component(const Element& x, int k) {
  if (k < 0 || k > x.n()) throw IndexOutOfRange("degree " + std::to_string(k) + " out of range");
  return filter_terms(x, [k](Mask m) { return popcount(m) == k; });
}

Element even_part(const Element& x) {
  return filter_terms(x, [](Mask m) { return popcount(m) % 2 == 0; });
}

Element odd_part(const Element& x) {
  return filter_terms(x, [](Mask m) { return popcount(m) % 2 == 1; });
}

Element min_part(const Element& x) {
  const auto d = x.min_degree();
  if (!d) throw UndefinedInput("min_part of the zero element");
  return grade_component(x, *d);
}

Monomial initial_monomial(const Element& x) {
  if (x.is_zero()) throw UndefinedInput("initial monomial of the zero element");
  return Monomial(x.n(), x.terms().begin()->first);
}

Element initial_term(const Element& x) {
  if (x.is_zero()) return x;
  const auto& [mask, c] = *x.terms().begin();
  return Element::monomial(Monomial(x.n(), mask), c);
}

}  // namespace grassmann
