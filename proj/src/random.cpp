#include "grassmann/random.hpp"

#include <algorithm>
#include <vector>

#include "grassmann/matrix.hpp"

namespace grassmann {

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Mask RandomSource::mask(int n) {
  return static_cast<Mask>(std::uniform_int_distribution<std::uint32_t>(0, full_mask(n))(engine_));
}

Scalar RandomSource::coefficient(Field field, int bound) {
  int v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return Scalar(field, v);
}

Element RandomSource::element(int n, Field field, int max_terms,
                              const std::function<bool(Mask)>& allowed) {
  Element out(n, field);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Mask m = mask(n);
    for (int tries = 0; allowed && !allowed(m) && tries < 1000; ++tries) m = mask(n);
    if (!allowed || allowed(m)) out.add_term(m, coefficient(field));
  }
  return out;
}

Element RandomSource::homogeneous(int n, int degree, Field field, int max_terms) {
  return element(n, field, max_terms, [degree](Mask m) { return popcount(m) == degree; });
}

Subspace RandomSource::subspace(int n, Field field, int count, int max_terms) {
  std::vector<Element> vectors;
  for (int i = 0; i < count; ++i) vectors.push_back(element(n, field, max_terms));
  return Subspace::span(n, field, vectors);
}

Permutation RandomSource::permutation(int n) {
  auto images = Permutation::identity(n).images();
  std::shuffle(images.begin(), images.end(), engine_);
  return Permutation(std::move(images));
}

SetFamily RandomSource::odd_family(int n, int max_sets) {
  std::vector<Mask> sets;
  const int count = uniform(1, max_sets);
  // Weighting toward sets of size > n/2 keeps both outcomes common.
  const double large_bias = std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  for (int i = 0; i < count; ++i) {
    Mask m = 0;
    do {
      m = mask(n);
    } while (popcount(m) % 2 == 0 || (coin(large_bias) && 2 * popcount(m) <= n));
    sets.push_back(m);
  }
  return SetFamily(n, std::move(sets));
}

AlgebraHom RandomSource::linear_automorphism(int n, Field field) {
  while (true) {
    Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), field);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Scalar(field, uniform(-2, 2));
    }
    if (a.rank() != static_cast<std::size_t>(n)) continue;
    std::vector<Element> images;
    for (int i = 0; i < n; ++i) {
      Element u(n, field);
      for (int j = 0; j < n; ++j) u.add_term(bit(j + 1), a(i, j));
      images.push_back(std::move(u));
    }
    return AlgebraHom(n, std::move(images));
  }
}

}  // namespace grassmann
