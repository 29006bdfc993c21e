#include "grassmann/structure.hpp"

#include <string>

#include "grassmann/errors.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/text.hpp"

namespace grassmann {

namespace {

Subspace even_space(const Subspace& like) {
  return standard_space(like.n(), SpaceSelector::even(), like.field());
}

Subspace odd_piece(const Subspace& a) {
  return restrict_support(a, [](Mask m) { return popcount(m) % 2 == 1; });
}

/// Every product of an even monomial with a basis vector of d, on the given side.
bool absorbs(const Subspace& d, bool even_only, bool on_left) {
  for (Mask m = 0; m <= full_mask(d.n()); ++m) {
    if (even_only && popcount(m) % 2 != 0) continue;
    const Element e = Element::monomial(d.n(), m, d.field());
    for (const auto& b : d.basis()) {
      if (!d.contains(on_left ? e * b : b * e)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_subalgebra(const Subspace& a) {
  for (const auto& x : a.basis()) {
    for (const auto& y : a.basis()) {
      if (!a.contains(x * y)) return false;
    }
  }
  return true;
}

bool is_commutative(const Subspace& a) {
  const auto& b = a.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[i] * b[j] != b[j] * b[i]) return false;
    }
  }
  return true;
}

bool is_square_zero(const Subspace& d) {
  for (const auto& x : d.basis()) {
    for (const auto& y : d.basis()) {
      if (!(x * y).is_zero()) return false;
    }
  }
  return true;
}

// E_even is central, so one side suffices.
bool is_e0_submodule(const Subspace& d) { return absorbs(d, true, true); }

bool is_right_ideal(const Subspace& d) { return absorbs(d, false, false); }

bool is_left_ideal(const Subspace& d) { return absorbs(d, false, true); }

Subspace generated_subalgebra(const Subspace& s) {
  Subspace current = s;
  while (true) {
    Subspace next = sum(current, product_span(current, current));
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace assemble(const Subspace& d) {
  for (const auto& b : d.basis()) {
    if (!b.is_odd()) throw PreconditionError("assemble needs a subspace of the odd part");
  }
  if (!is_square_zero(d)) throw PreconditionError("assemble needs a square-zero subspace");
  const Subspace e0 = even_space(d);
  return sum(sum(e0, product_span(e0, d)), d);
}

bool is_maximal_commutative(const Subspace& a) {
  const Subspace e0 = even_space(a);
  if (!a.contains(e0)) return false;
  const Subspace d = odd_piece(a);
  if (a.dim() != e0.dim() + d.dim()) return false;
  return is_square_zero(d) && is_e0_submodule(d) && perp(d) == d;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t max_comm_dim(int n) {
  if (n < 1 || n > 62) throw PreconditionError("max_comm_dim needs 1 <= n <= 62");
  const int k = n / 4;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (n % 2 == 0) return 3 * (std::uint64_t{1} << (n - 2));
  std::uint64_t total = half;
  if (n % 4 == 1) {
    for (int l = k; l <= 2 * k; ++l) total += binomial(n, 2 * l + 1);
  } else {
    total += binomial(n - 1, 2 * k);
    for (int l = k; l <= 2 * k; ++l) total += binomial(n, 2 * l + 3);
  }
  return total;
}

Subspace canonical_max_commutative(int n, int l, Field field) {
  check_generator_count(n);
  if (l < 1 || l > n) throw IndexOutOfRange("star element " + std::to_string(l) + " out of range");
  const Mask star_bit = bit(l);
  const int k = n / 4;
  std::vector<Mask> odd_masks;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const int d = popcount(m);
    if (d % 2 == 0) continue;
    bool take = false;
    if (n % 2 == 0) {
      take = (m & star_bit) != 0;
    } else {
      take = 2 * d > n || (n % 4 == 3 && d == 2 * k + 1 && (m & star_bit));
    }
    if (take) odd_masks.push_back(m);
  }
  return sum(standard_space(n, SpaceSelector::even(), field), monomial_span(n, odd_masks, field));
}

std::vector<PluckerDefect> plucker_defects(const Element& x) {
  for (const auto& [mask, c] : x.terms()) {
    if (popcount(mask) != 2) throw PreconditionError("Pluecker defects need a degree-2 element");
  }
  std::vector<PluckerDefect> out;
  const int n = x.n();
  auto coeff = [&x](int a, int b) { return x.coefficient(bit(a) | bit(b)); };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          Scalar v = coeff(i, j) * coeff(k, l) - coeff(i, k) * coeff(j, l) + coeff(i, l) * coeff(j, k);
          out.push_back({{i, j, k, l}, std::move(v)});
        }
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------- AlgebraHom

AlgebraHom::AlgebraHom(int n_source, std::vector<Element> images)
    : n_source_(n_source), images_(std::move(images)) {
  check_generator_count(n_source);
  if (static_cast<int>(images_.size()) != n_source) {
    throw ValidationError("expected " + std::to_string(n_source) + " generator images, got " +
                          std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images_[i].check_ambient(images_.front());
    if (!images_[i].is_odd()) {
      throw ValidationError("image of v_" + std::to_string(i + 1) + " is not odd");
    }
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i; j < images_.size(); ++j) {
      const Element anti = images_[i] * images_[j] + images_[j] * images_[i];
      if (!anti.is_zero()) {
        throw ValidationError("images of v_" + std::to_string(i + 1) + " and v_" +
                              std::to_string(j + 1) + " do not anticommute: " +
                              print_element(anti));
      }
    }
  }
}

Element AlgebraHom::image_of_monomial(Mask mask) const {
  Element out = Element::one(target_n(), images_.front().field());
  for (int i = 1; i <= n_source_; ++i) {
    if (mask & bit(i)) out = out * images_[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

Element AlgebraHom::apply(const Element& x) const {
  if (x.n() != n_source_ || x.field() != images_.front().field()) {
    throw AmbientMismatch("element outside the homomorphism's source algebra");
  }
  Element out(target_n(), x.field());
  for (const auto& [mask, c] : x.terms()) out += image_of_monomial(mask) * c;
  return out;
}

Subspace AlgebraHom::apply(const Subspace& a) const {
  std::vector<Element> images;
  for (const auto& b : a.basis()) images.push_back(apply(b));
  return Subspace::span(target_n(), a.field(), images);
}

bool AlgebraHom::is_bijective() const {
  if (n_source_ != target_n()) return false;
  const std::size_t size = std::size_t{full_mask(n_source_)} + 1;
  Matrix m(size, size, images_.front().field());
  for (Mask col = 0; col < size; ++col) {
    const Element image = image_of_monomial(col);
    for (const auto& [row, c] : image.terms()) m(row, col) = c;
  }
  return m.rank() == size;
}

AlgebraHom hom_from_images(std::vector<Element> images) {
  if (images.empty()) throw ValidationError("a homomorphism needs at least one generator image");
  const int n = static_cast<int>(images.size());
  return AlgebraHom(n, std::move(images));
}

// -------------------------------------------------------------------- radical

Subspace graded_radical(const Subspace& a) {
  if (!a.contains(Element::one(a.n(), a.field()))) {
    throw PreconditionError("graded_radical needs a unital subalgebra");
  }
  if (!is_graded(a)) throw PreconditionError("graded_radical needs a graded subspace");
  if (!is_subalgebra(a)) throw PreconditionError("graded_radical needs a subalgebra");
  return restrict_support(a, [](Mask m) { return m != 0; });
}

std::size_t radical_quotient_dim(const Subspace& a) {
  const Subspace rad = graded_radical(a);
  return rad.dim() - product_span(rad, rad).dim();
}

StructureReport analyze(const Subspace& a) {
  StructureReport r;
  r.dimension = a.dim();
  r.square_dimension = product_span(a, a).dim();
  r.is_subalgebra = is_subalgebra(a);
  r.is_commutative = is_commutative(a);
  r.is_square_zero = r.square_dimension == 0;
  r.is_e0_submodule = is_e0_submodule(a);
  r.is_maximal_commutative = is_maximal_commutative(a);
  return r;
}

}  // namespace grassmann
