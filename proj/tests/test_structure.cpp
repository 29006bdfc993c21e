#include "doctest.h"

#include "grassmann/random.hpp"
#include "grassmann/structure.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Subspace star_algebra(int n) {
  std::vector<Mask> masks;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) % 2 == 1 && (m & 1)) masks.push_back(m);
  }
  return assemble(monomial_span(n, masks));
}

Subspace odd_piece(const Subspace& a) {
  return restrict_support(a, [](Mask m) { return popcount(m) % 2 == 1; });
}

}  // namespace

TEST_CASE("predicates") {
  CHECK(is_square_zero(sp(6, {"v{1,2,3}+v{4,5,6}", "v{1,2,4}+v{3,5,6}"})));
  const Subspace a = sp(2, {"1", "v{1,2}", "v{1}"});
  CHECK(is_subalgebra(a));
  CHECK(is_commutative(a));
  CHECK_FALSE(is_square_zero(standard_space(2, SpaceSelector::odd())));
  CHECK_FALSE(is_subalgebra(sp(2, {"v{1}", "v{2}"})));
  CHECK(is_commutative(standard_space(3, SpaceSelector::even())));
  CHECK_FALSE(is_commutative(sp(2, {"v{1}", "v{2}"})));
  CHECK(is_e0_submodule(sp(3, {"v{1}", "v{1,2,3}"})));
  CHECK_FALSE(is_e0_submodule(sp(3, {"v{1}"})));
  const Subspace ideal = sp(3, {"v{1}", "v{1,2}", "v{1,3}", "v{1,2,3}"});
  CHECK(is_right_ideal(ideal));
  CHECK(is_left_ideal(ideal));
  CHECK_FALSE(is_right_ideal(sp(2, {"v{1}"})));
}

TEST_CASE("generated subalgebras") {
  CHECK(generated_subalgebra(sp(4, {"v{1,2}+v{3,4}"})) == sp(4, {"v{1,2}+v{3,4}", "v{1,2,3,4}"}));
  CHECK(generated_subalgebra(sp(3, {"v{1}+v{2,3}"})) == sp(3, {"v{1}+v{2,3}", "v{1,2,3}"}));
}

TEST_CASE("assemble") {
  CHECK(assemble(sp(2, {"v{1}"})) == sp(2, {"1", "v{1,2}", "v{1}"}));
  CHECK(assemble(Subspace(3)) == standard_space(3, SpaceSelector::even()));
  const Subspace d5 = sum(standard_space(5, SpaceSelector::degree(3)), standard_space(5, SpaceSelector::degree(5)));
  CHECK(assemble(d5).dim() == 27);
  CHECK_THROWS_AS(assemble(sp(3, {"v{1,2}"})), PreconditionError);
  CHECK_THROWS_AS(assemble(sp(3, {"v{1}", "v{2}"})), PreconditionError);
}

TEST_CASE("maximality") {
  CHECK(is_maximal_commutative(sp(2, {"1", "v{1,2}", "v{1}"})));
  CHECK_FALSE(is_maximal_commutative(standard_space(2, SpaceSelector::even())));
  CHECK_FALSE(is_maximal_commutative(standard_space(3, SpaceSelector::whole())));
  for (int n = 3; n <= 7; n += 2) {
    const Subspace a = star_algebra(n);
    CHECK(is_maximal_commutative(a));
    CHECK(a.dim() == (std::size_t{3} << n) / 4);
  }
  // Odd part square-zero and self-perpendicular, but not closed under E_even.
  CHECK_FALSE(is_maximal_commutative(sum(standard_space(3, SpaceSelector::even()), sp(3, {"v{1}+v{2}"}))));
}

TEST_CASE("maximal dimension formula") {
  const std::uint64_t expected[] = {2, 3, 6, 12, 27, 48, 101, 192};
  for (int n = 1; n <= 8; ++n) CHECK(max_comm_dim(n) == expected[n - 1]);
  CHECK_THROWS_AS(max_comm_dim(0), PreconditionError);
  CHECK(max_comm_dim(10) == 3u * 256u);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(60, 30) == 118264581564861424ull);
}

TEST_CASE("canonical maximal commutative subalgebras") {
  CHECK(canonical_max_commutative(5) ==
        sum(standard_space(5, SpaceSelector::even()),
            sum(standard_space(5, SpaceSelector::degree(3)), standard_space(5, SpaceSelector::degree(5)))));
  CHECK(canonical_max_commutative(7).dim() == 101);
  CHECK(canonical_max_commutative(4).dim() == 12);
  for (int n = 1; n <= 7; ++n) {
    for (int l = 1; l <= n; ++l) {
      const Subspace a = canonical_max_commutative(n, l);
      REQUIRE(a.dim() == max_comm_dim(n));
      REQUIRE(is_commutative(a));
      REQUIRE(is_subalgebra(a));
      REQUIRE(is_maximal_commutative(a));
    }
  }
  CHECK(canonical_max_commutative(3, 1, Field::prime(5)).dim() == 6);
  CHECK_THROWS_AS(canonical_max_commutative(3, 4), IndexOutOfRange);
}

TEST_CASE("structure bijection on random maximal algebras") {
  RandomSource rng(41);
  for (int s = 0; s < 20; ++s) {
    const int n = rng.uniform(2, 5);
    const Subspace a = rng.linear_automorphism(n, Field::rational()).apply(canonical_max_commutative(n));
    REQUIRE(is_maximal_commutative(a));
    const Subspace d = odd_piece(a);
    REQUIRE(perp(d) == d);
    REQUIRE(assemble(d) == a);
    if (n % 2 == 0) REQUIRE(d.dim() == (std::size_t{1} << (n - 2)));
  }
}

TEST_CASE("odd elements commute exactly when their product vanishes") {
  RandomSource rng(42);
  auto odd = [](Mask m) { return popcount(m) % 2 == 1; };
  int vanishing = 0;
  for (int s = 0; s < 500; ++s) {
    const int n = rng.uniform(1, 6);
    const Element a = rng.element(n, Field::rational(), 2, odd);
    const Element b = rng.element(n, Field::rational(), 2, odd);
    REQUIRE(((a * b) == (b * a)) == (a * b).is_zero());
    vanishing += (a * b).is_zero();
  }
  CHECK(vanishing > 50);
}

TEST_CASE("Pluecker defects") {
  const auto d = plucker_defects(el("v{1,2}+v{3,4}", 4));
  REQUIRE(d.size() == 1);
  CHECK(d[0].quadruple == std::array<int, 4>{1, 2, 3, 4});
  CHECK(d[0].value == Scalar(Field::rational(), 1));
  for (const auto& p : plucker_defects(el("v{1,2}+v{1,3}", 4))) CHECK(p.value.is_zero());
  for (const auto& p : plucker_defects(el("v{1,2}", 5))) CHECK(p.value.is_zero());
  CHECK(plucker_defects(el("v{1,2}", 5)).size() == 5);
  CHECK_THROWS_AS(plucker_defects(el("v{1}", 4)), PreconditionError);

  // Small integer coefficients: all defects vanish exactly when x^2 = 0.
  RandomSource rng(43);
  for (int s = 0; s < 1000; ++s) {
    const int n = rng.uniform(2, 6);
    Element x = rng.homogeneous(n, 2, Field::rational(), rng.uniform(1, 4));
    if (s % 3 == 0) x = rng.homogeneous(n, 1, Field::rational(), n) * rng.homogeneous(n, 1, Field::rational(), n);
    if (x.is_zero()) continue;
    bool zero = true;
    for (const auto& p : plucker_defects(x)) zero = zero && p.value.is_zero();
    REQUIRE(zero == (x * x).is_zero());
    // x^2 = 2 * sum of defects on the 4-sets.
    Element expected(n);
    for (const auto& p : plucker_defects(x)) {
      Mask m = 0;
      for (int i : p.quadruple) m |= bit(i);
      expected.add_term(m, p.value * Scalar(Field::rational(), 2));
    }
    REQUIRE(x * x == expected);
  }
}

TEST_CASE("algebra homomorphisms") {
  const std::vector<Element> id{el("v{1}", 3), el("v{2}", 3), el("v{3}", 3)};
  const AlgebraHom identity = hom_from_images(id);
  CHECK(identity.apply(el("1+v{1,2}-3*v{1,2,3}", 3)) == el("1+v{1,2}-3*v{1,2,3}", 3));
  CHECK(identity.is_bijective());

  const AlgebraHom shear = hom_from_images({el("v{1}+v{2,3,4}", 4), el("v{2}", 4), el("v{3}", 4), el("v{4}", 4)});
  CHECK(shear.is_bijective());
  const Subspace image = shear.apply(canonical_max_commutative(4));
  CHECK(image.dim() == 12);
  CHECK(is_maximal_commutative(image));

  CHECK_THROWS_AS(hom_from_images({el("v{1}", 2), el("v{1,2}", 2)}), ValidationError);
  try {
    hom_from_images({el("v{1}", 3), el("v{2}+v{1,3}", 3), el("v{3}", 3)});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("v_2") != std::string::npos);
  }
  // Odd images always anticommute, so oddness is the only real constraint.
  CHECK_NOTHROW(hom_from_images({el("v{1}+v{2}", 2), el("v{1}+v{2}", 2)}));

  // A map into a larger algebra is never bijective.
  const AlgebraHom into = AlgebraHom(2, {el("v{1}", 3), el("v{2}", 3)});
  CHECK(into.target_n() == 3);
  CHECK_FALSE(into.is_bijective());
  CHECK(into.apply(el("v{1,2}", 2)) == el("v{1,2}", 3));

  RandomSource rng(44);
  for (int s = 0; s < 50; ++s) {
    const int n = rng.uniform(1, 5);
    const AlgebraHom alpha = rng.linear_automorphism(n, Field::rational());
    REQUIRE(alpha.is_bijective());
    const Element a = rng.element(n, Field::rational(), 4);
    const Element b = rng.element(n, Field::rational(), 4);
    REQUIRE(alpha.apply(a * b) == alpha.apply(a) * alpha.apply(b));
    REQUIRE(alpha.apply(a + b) == alpha.apply(a) + alpha.apply(b));
  }
}

TEST_CASE("graded radicals") {
  const Subspace a4 = canonical_max_commutative(4);
  CHECK(radical_quotient_dim(a4) == 7);
  const Subspace b4 = sum(standard_space(4, SpaceSelector::even()), standard_space(4, SpaceSelector::degree(3)));
  CHECK(is_maximal_commutative(b4));
  CHECK(radical_quotient_dim(b4) == 10);
  const Subspace e0 = standard_space(2, SpaceSelector::even());
  CHECK(graded_radical(e0) == sp(2, {"v{1,2}"}));
  CHECK(radical_quotient_dim(e0) == 1);
  CHECK_THROWS_AS(graded_radical(sp(3, {"v{1}"})), PreconditionError);
  CHECK_THROWS_AS(graded_radical(sp(3, {"1", "v{1}+v{2,3}", "v{1,2,3}"})), PreconditionError);
  CHECK_THROWS_AS(graded_radical(sp(3, {"1", "v{1}", "v{2}"})), PreconditionError);
}

TEST_CASE("analysis report") {
  const auto r = analyze(canonical_max_commutative(4));
  CHECK(r.dimension == 12);
  CHECK(r.is_maximal_commutative);
  CHECK(r.is_commutative);
  CHECK(r.is_subalgebra);
  CHECK_FALSE(r.is_square_zero);
  const auto e0 = analyze(standard_space(2, SpaceSelector::even()));
  CHECK_FALSE(e0.is_maximal_commutative);
  const Subspace a = sum(sum(sp(4, {"v{1,2}+v{3,4}"}), standard_space(4, SpaceSelector::degree(3))),
                         standard_space(4, SpaceSelector::degree(4)));
  const auto ex = analyze(a);
  CHECK(ex.is_subalgebra);
  CHECK(ex.square_dimension == 1);
  const auto sq = analyze(sp(6, {"v{1,2,3}+v{4,5,6}", "v{1,2,4}+v{3,5,6}"}));
  CHECK(sq.is_square_zero);
  CHECK(sq.is_commutative);
  CHECK(sq.square_dimension == 0);
}
