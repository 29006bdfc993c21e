#include "grassmann/subspace.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "grassmann/errors.hpp"
#include "grassmann/matrix.hpp"

namespace grassmann {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto images = identity(n).images();
  if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("transposition index out of range");
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<int> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
      throw PreconditionError("malformed permutation '" + std::string(text) + "'");
    }
    images.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(images.size()) != n) {
    throw PreconditionError("permutation '" + std::string(text) + "' does not have " +
                            std::to_string(n) + " entries");
  }
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  return os.str();
}

// ------------------------------------------------------------------- Subspace

Subspace::Subspace(int n, Field field) : n_(n), field_(field) { check_generator_count(n); }

Subspace Subspace::span(int n, Field field, const std::vector<Element>& vectors) {
  Subspace out(n, field);
  for (const auto& v : vectors) {
    out.check_ambient(v);
    out.insert(v);
  }
  return out;
}

Subspace Subspace::span(const std::vector<Element>& vectors) {
  if (vectors.empty()) throw PreconditionError("span of an empty list needs an explicit ambient");
  return span(vectors.front().n(), vectors.front().field(), vectors);
}

std::vector<Mask> Subspace::pivots() const {
  std::vector<Mask> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.terms().begin()->first);
  return out;
}

Element Subspace::reduce(const Element& x) const {
  check_ambient(x);
  Element r = x;
  for (const auto& b : basis_) {
    const Scalar c = r.coefficient(b.terms().begin()->first);
    if (!c.is_zero()) r -= b * c;
  }
  return r;
}

bool Subspace::contains(const Element& x) const { return reduce(x).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Element& b) { return contains(b); });
}

void Subspace::check_ambient(const Subspace& other) const {
  if (n_ != other.n_ || field_ != other.field_) {
    throw AmbientMismatch("subspaces of different ambient algebras");
  }
}

void Subspace::check_ambient(const Element& x) const {
  if (n_ != x.n() || field_ != x.field()) {
    throw AmbientMismatch("element outside the subspace's ambient algebra");
  }
}

void Subspace::insert(Element x) {
  x = reduce(x);
  if (x.is_zero()) return;
  const Mask pivot = x.terms().begin()->first;
  x *= Scalar(field_, 1) / x.terms().begin()->second;
  // Rows only carry the new pivot below their own pivot, so their pivots survive.
  for (auto& b : basis_) {
    const Scalar c = b.coefficient(pivot);
    if (!c.is_zero()) b -= x * c;
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(), [pivot](const Element& b) {
    return b.terms().begin()->first > pivot;
  });
  basis_.insert(pos, std::move(x));
}

// ------------------------------------------------------- lattice operations

namespace {

/// Coefficient matrix: one row per monomial occurring in `vectors` for which
/// `row_filter` holds, one column per vector.
Matrix coordinate_matrix(const std::vector<const Element*>& vectors, Field field,
                         const std::function<bool(Mask)>& row_filter) {
  std::map<Mask, std::size_t> rows;
  for (const auto* v : vectors) {
    for (const auto& [mask, c] : v->terms()) {
      if (row_filter(mask)) rows.emplace(mask, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [mask, index] : rows) index = next++;
  Matrix m(rows.size(), vectors.size(), field);
  for (std::size_t col = 0; col < vectors.size(); ++col) {
    for (const auto& [mask, c] : vectors[col]->terms()) {
      if (auto it = rows.find(mask); it != rows.end()) m(it->second, col) = c;
    }
  }
  return m;
}

Element combine(const std::vector<const Element*>& vectors, const std::vector<Scalar>& coeffs,
                std::size_t count, int n, Field field) {
  Element out(n, field);
  for (std::size_t j = 0; j < count; ++j) {
    if (!coeffs[j].is_zero()) out += *vectors[j] * coeffs[j];
  }
  return out;
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.n(), a.field(), vectors);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  // Kernel of [A | B]: sum(alpha_i a_i) = -sum(beta_j b_j) lies in both.
  std::vector<const Element*> columns;
  for (const auto& v : a.basis()) columns.push_back(&v);
  for (const auto& v : b.basis()) columns.push_back(&v);
  const Matrix m = coordinate_matrix(columns, a.field(), [](Mask) { return true; });
  std::vector<Element> common;
  for (const auto& k : m.kernel()) common.push_back(combine(columns, k, a.dim(), a.n(), a.field()));
  return Subspace::span(a.n(), a.field(), common);
}

Subspace product_span(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  Subspace out(a.n(), a.field());
  std::vector<Element> products;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      auto p = x * y;
      if (!p.is_zero()) products.push_back(std::move(p));
    }
  }
  return Subspace::span(a.n(), a.field(), products);
}

Subspace restrict_support(const Subspace& d, const std::function<bool(Mask)>& keep) {
  std::vector<const Element*> columns;
  for (const auto& v : d.basis()) columns.push_back(&v);
  const Matrix m = coordinate_matrix(columns, d.field(), [&keep](Mask x) { return !keep(x); });
  if (m.rows() == 0) return d;
  std::vector<Element> kept;
  for (const auto& k : m.kernel()) kept.push_back(combine(columns, k, d.dim(), d.n(), d.field()));
  return Subspace::span(d.n(), d.field(), kept);
}

Subspace standard_space(int n, SpaceSelector selector, Field field) {
  check_generator_count(n);
  using Kind = SpaceSelector::Kind;
  if (selector.kind == Kind::Degree || selector.kind == Kind::Star) {
    if (selector.k < 0 || selector.k > n) {
      throw IndexOutOfRange("degree " + std::to_string(selector.k) + " out of range");
    }
  }
  if (selector.kind == Kind::Star && (selector.l < 1 || selector.l > n)) {
    throw IndexOutOfRange("star element " + std::to_string(selector.l) + " out of range");
  }
  std::vector<Mask> masks;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const int d = popcount(m);
    bool take = false;
    switch (selector.kind) {
      case Kind::Degree:
        take = d == selector.k;
        break;
      case Kind::Even:
        take = d % 2 == 0;
        break;
      case Kind::Odd:
        take = d % 2 == 1;
        break;
      case Kind::Star:
        take = d == selector.k && (m & bit(selector.l));
        break;
      case Kind::Whole:
        take = true;
        break;
    }
    if (take) masks.push_back(m);
  }
  return monomial_span(n, masks, field);
}

Subspace monomial_span(int n, const std::vector<Mask>& masks, Field field) {
  std::vector<Element> vectors;
  vectors.reserve(masks.size());
  for (Mask m : masks) vectors.push_back(Element::monomial(n, m, field));
  return Subspace::span(n, field, vectors);
}

Subspace monomial_span(const SetFamily& family, Field field) {
  return monomial_span(family.n(), family.sets(), field);
}

bool is_monomial_spanned(const Subspace& d) {
  return std::all_of(d.basis().begin(), d.basis().end(),
                     [](const Element& b) { return b.term_count() == 1; });
}

// ------------------------------------------------------------ gamma operators

Subspace gamma(int i, const Subspace& d) {
  if (i < 1 || i > d.n()) {
    throw IndexOutOfRange("gamma index " + std::to_string(i) + " outside 1.." +
                          std::to_string(d.n()));
  }
  const Mask b = bit(i);
  Subspace kernel = restrict_support(d, [b](Mask m) { return (m & b) != 0; });
  std::vector<Element> image;
  image.reserve(d.dim());
  for (const auto& v : d.basis()) image.push_back(pi(i, v));
  return sum(kernel, Subspace::span(d.n(), d.field(), image));
}

Subspace gamma_chain(const Permutation& sigma, const Subspace& d) {
  if (sigma.size() != d.n()) throw PreconditionError("permutation size differs from n");
  Subspace out = d;
  for (int t = d.n(); t >= 1; --t) out = gamma(sigma(t), out);
  return out;
}

Subspace initial_span(const Subspace& d) { return monomial_span(d.n(), d.pivots(), d.field()); }

SetFamily monomial_family(const Permutation& sigma, const Subspace& d) {
  const Subspace chained = gamma_chain(sigma, d);
  if (!is_monomial_spanned(chained)) {
    throw std::logic_error("gamma chain produced a non-monomial basis vector");
  }
  return SetFamily(d.n(), chained.pivots());
}

Subspace min_space(const Subspace& a) {
  // Eliminate with columns ordered by increasing degree: each echelon row then
  // starts in its lowest degree, and those leading components span the result.
  std::vector<Mask> columns;
  for (Mask m = 0; m <= full_mask(a.n()); ++m) columns.push_back(m);
  std::stable_sort(columns.begin(), columns.end(),
                   [](Mask x, Mask y) { return popcount(x) < popcount(y); });
  std::vector<std::size_t> position(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) position[columns[c]] = c;

  Matrix m(a.dim(), columns.size(), a.field());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (const auto& [mask, c] : a.basis()[r].terms()) m(r, position[mask]) = c;
  }
  m.rref();
  std::vector<Element> mins;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element row(a.n(), a.field());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!m(r, c).is_zero()) row.add_term(columns[c], m(r, c));
    }
    if (!row.is_zero()) mins.push_back(min_part(row));
  }
  return Subspace::span(a.n(), a.field(), mins);
}

std::vector<std::size_t> hilbert_series(const Subspace& d) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= d.n(); ++k) {
    out.push_back(restrict_support(d, [k](Mask m) { return popcount(m) == k; }).dim());
  }
  return out;
}

bool is_graded(const Subspace& d) {
  const auto series = hilbert_series(d);
  std::size_t total = 0;
  for (auto v : series) total += v;
  return total == d.dim();
}

// ------------------------------------------------------------- skew pairing

Element phi(const Element& a, const Element& b) {
  a.check_ambient(b);
  if (!a.is_odd() || !b.is_odd()) throw PreconditionError("phi is defined on odd elements only");
  const int n = a.n();
  return grade_component(a * b, n % 2 == 0 ? n : n - 1);
}

Subspace perp(const Subspace& d) {
  const int n = d.n();
  for (const auto& v : d.basis()) {
    if (!v.is_odd()) throw PreconditionError("perp needs a subspace of the odd part");
  }
  std::vector<Mask> odd_masks;
  std::vector<std::size_t> column(std::size_t{full_mask(n)} + 1, 0);
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) % 2 == 1) {
      column[m] = odd_masks.size();
      odd_masks.push_back(m);
    }
  }
  std::vector<Mask> targets;
  if (n % 2 == 0) {
    targets.push_back(full_mask(n));
  } else {
    for (int i = 1; i <= n; ++i) targets.push_back(full_mask(n) & ~bit(i));
  }

  Matrix system(d.dim() * targets.size(), odd_masks.size(), d.field());
  for (std::size_t j = 0; j < d.dim(); ++j) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const std::size_t row = j * targets.size() + t;
      for (const auto& [term, c] : d.basis()[j].terms()) {
        if ((term & targets[t]) != term) continue;
        const Mask m = targets[t] ^ term;
        // phi(v_m, v_term) contributes sign(m, term) to the target coefficient.
        const int s = sign(m, term);
        system(row, column[m]) += s > 0 ? c : -c;
      }
    }
  }

  std::vector<Element> solutions;
  for (const auto& k : system.kernel()) {
    Element x(n, d.field());
    for (std::size_t c = 0; c < odd_masks.size(); ++c) {
      if (!k[c].is_zero()) x.add_term(odd_masks[c], k[c]);
    }
    solutions.push_back(std::move(x));
  }
  return Subspace::span(n, d.field(), solutions);
}

}  // namespace grassmann
