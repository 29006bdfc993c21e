#ifndef GRASSMANN_RANDOM_HPP
#define GRASSMANN_RANDOM_HPP

#include <cstdint>
#include <functional>
#include <random>

#include "grassmann/element.hpp"
#include "grassmann/setfamily.hpp"
#include "grassmann/structure.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// Seeded generator of test inputs. Coefficients are small nonzero integers.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  Mask mask(int n);

  Scalar coefficient(Field field, int bound = 3);
  /// Up to max_terms terms on monomials accepted by `allowed`.
  Element element(int n, Field field, int max_terms,
                  const std::function<bool(Mask)>& allowed = nullptr);
  Element homogeneous(int n, int degree, Field field, int max_terms);
  /// Span of `count` random elements (dimension at most count).
  Subspace subspace(int n, Field field, int count, int max_terms = 4);
  Permutation permutation(int n);
  /// Random odd-size sets, biased towards large sets so that roughly half of
  /// the families intersect.
  SetFamily odd_family(int n, int max_sets);
  /// v_i -> sum_j a_ij v_j for a random invertible integer matrix.
  AlgebraHom linear_automorphism(int n, Field field);

 private:
  std::mt19937_64 engine_;
};

}  // namespace grassmann

#endif  // GRASSMANN_RANDOM_HPP
