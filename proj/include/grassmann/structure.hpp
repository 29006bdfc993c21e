#ifndef GRASSMANN_STRUCTURE_HPP
#define GRASSMANN_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// A * A is contained in A (no unit required).
bool is_subalgebra(const Subspace& a);
bool is_commutative(const Subspace& a);
bool is_square_zero(const Subspace& d);
/// E_even * d is contained in d.
bool is_e0_submodule(const Subspace& d);
/// d * E is contained in d.
bool is_right_ideal(const Subspace& d);
/// E * d is contained in d.
bool is_left_ideal(const Subspace& d);

/// Smallest subalgebra (not necessarily unital) containing s.
Subspace generated_subalgebra(const Subspace& s);

/// E_even + E_even*d + d for a square-zero d inside E_odd; always a
/// commutative subalgebra.
Subspace assemble(const Subspace& d);

/// Decided by linear algebra alone: A = E_even + D with D = A n E_odd a
/// square-zero E_even-submodule equal to its own perp.
bool is_maximal_commutative(const Subspace& a);

/// Largest dimension of a commutative subalgebra of E^(n), 1 <= n <= 62.
std::uint64_t max_comm_dim(int n);
std::uint64_t binomial(int n, int k);

/// A commutative subalgebra of dimension max_comm_dim(n):
///   n even      E_even + Span{v_J : l in J}
///   n = 4k+1    E_even + sum of E_i over odd i > n/2
///   n = 4k+3    as above plus Span{v_J : l in J, |J| = 2k+1}
Subspace canonical_max_commutative(int n, int l = 1, Field field = Field::rational());

struct PluckerDefect {
  std::array<int, 4> quadruple;  // i < j < k < l
  Scalar value;                  // x_ij x_kl - x_ik x_jl + x_il x_jk
};

/// One entry per 4-subset of [n]. x must be homogeneous of degree 2.
std::vector<PluckerDefect> plucker_defects(const Element& x);

/// The algebra map E^(n_source) -> E^(n_target) sending v_i to u_i. The images
/// must be odd and pairwise anticommute (u_i u_j + u_j u_i = 0 for i <= j).
class AlgebraHom {
 public:
  AlgebraHom(int n_source, std::vector<Element> images);

  int source_n() const noexcept { return n_source_; }
  int target_n() const noexcept { return images_.front().n(); }
  const std::vector<Element>& images() const noexcept { return images_; }

  Element apply(const Element& x) const;
  Subspace apply(const Subspace& a) const;
  /// The induced linear map on all 2^n coordinates is invertible.
  bool is_bijective() const;

 private:
  Element image_of_monomial(Mask mask) const;

  int n_source_;
  std::vector<Element> images_;
};

AlgebraHom hom_from_images(std::vector<Element> images);

/// Positive-degree part of a graded unital subalgebra.
Subspace graded_radical(const Subspace& a);
/// dim(rad) - dim(rad^2).
std::size_t radical_quotient_dim(const Subspace& a);

struct StructureReport {
  std::size_t dimension = 0;
  std::size_t square_dimension = 0;
  bool is_subalgebra = false;
  bool is_commutative = false;
  bool is_square_zero = false;
  bool is_e0_submodule = false;
  bool is_maximal_commutative = false;
};

StructureReport analyze(const Subspace& a);

}  // namespace grassmann

#endif  // GRASSMANN_STRUCTURE_HPP
