#include "doctest.h"

#include <algorithm>

#include "grassmann/errors.hpp"
#include "grassmann/random.hpp"
#include "grassmann/setfamily.hpp"
#include "grassmann/structure.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Mask> odd_candidates(int n) {
  return oracle::sets_where(n, [](Mask m) { return __builtin_popcount(m) % 2 == 1; });
}

std::vector<SetFamily> as_families(int n, const std::vector<std::vector<Mask>>& raw) {
  std::vector<SetFamily> out;
  for (const auto& f : raw) out.emplace_back(n, f);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.sets() < b.sets(); });
  return out;
}

std::vector<SetFamily> sorted(std::vector<SetFamily> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.sets() < b.sets(); });
  return v;
}

}  // namespace

TEST_CASE("families are sorted and deduplicated") {
  const SetFamily f(3, {7, 1, 7});
  CHECK(f.sets() == std::vector<Mask>{1, 7});
  CHECK(f.contains(7));
  CHECK_FALSE(f.contains(2));
  CHECK_THROWS_AS(SetFamily(2, {4}), IndexOutOfRange);
}

TEST_CASE("predicates") {
  CHECK(is_intersecting(SetFamily(3, {0b001, 0b111})));
  CHECK(is_odd_family(SetFamily(3, {0b001, 0b111})));
  CHECK_FALSE(is_intersecting(SetFamily(3, {0b001, 0b010})));
  CHECK_FALSE(is_odd_family(SetFamily(3, {0b011})));
  CHECK(is_intersecting(SetFamily(3)));
  CHECK_FALSE(is_intersecting(SetFamily(3, {0})));
}

TEST_CASE("canonical families") {
  CHECK(odd_upper_levels(5).size() == 11);
  CHECK(is_intersecting(odd_upper_levels(5)));
  CHECK(star(7, 3, 1).size() == 15);
  CHECK(level(5, 2).size() == 10);
  CHECK(odd_sets(4).size() == 8);
  CHECK(family_union(star(3, 1, 2), odd_upper_levels(3)) == SetFamily(3, {0b010, 0b111}));
  CHECK_THROWS_AS(star(3, 1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(level(3, 4), IndexOutOfRange);
  CHECK_THROWS_AS(family_union(SetFamily(2), SetFamily(3)), AmbientMismatch);
  for (int n = 1; n <= 9; n += 2) CHECK(is_intersecting(odd_upper_levels(n)));
}

TEST_CASE("odd intersecting maxima agree with subset enumeration, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto brute = oracle::max_intersecting(odd_candidates(n));
    SearchOptions all;
    all.enumerate_all = true;
    const SearchResult r = max_odd_intersecting(n, all);
    REQUIRE(r.maximum == brute.size);
    REQUIRE(sorted(r.all_maxima) == as_families(n, brute.maxima));
    REQUIRE(r.certificate.size() == r.maximum);
    REQUIRE(is_intersecting(r.certificate));
    REQUIRE(is_odd_family(r.certificate));
    REQUIRE(r.certificate == sorted(r.all_maxima).front());
  }
}

TEST_CASE("odd intersecting maxima") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 16, 37};
  for (int n = 1; n <= 7; ++n) {
    const SearchResult r = max_odd_intersecting(n);
    CHECK(r.maximum == expected[n - 1]);
    CHECK((std::uint64_t{1} << (n - 1)) + r.maximum == max_comm_dim(n));
    CHECK(is_intersecting(r.certificate));
    CHECK(is_odd_family(r.certificate));
  }
  CHECK(max_odd_intersecting(2).certificate == SetFamily(2, {0b01}));
  CHECK(max_odd_intersecting(3).certificate == SetFamily(3, {0b001, 0b111}));
  // Deterministic certificates.
  CHECK(max_odd_intersecting(7).certificate == max_odd_intersecting(7).certificate);
}

TEST_CASE("search limits") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(max_odd_intersecting(7, tiny), BudgetExceeded);
  try {
    max_odd_intersecting(7, tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.best_so_far() <= 37);
  }
  CHECK_THROWS_AS(max_odd_intersecting(8), PreconditionError);
  SearchOptions all;
  all.enumerate_all = true;
  CHECK_THROWS_AS(max_odd_intersecting(6, all), PreconditionError);
  CHECK_THROWS_AS(max_odd_intersecting(0), IndexOutOfRange);
}

TEST_CASE("Erdos-Ko-Rado values") {
  CHECK(ekr_max(5, 2) == 4);
  CHECK(ekr_max(7, 3) == 15);
  CHECK(ekr_max(2, 1) == 1);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; 2 * k <= n; ++k) CHECK(ekr_max(n, k) == binomial(n - 1, k - 1));
  }
  CHECK_THROWS_AS(ekr_max(5, 3), PreconditionError);
  CHECK_THROWS_AS(ekr_max(13, 2), PreconditionError);
}

TEST_CASE("Erdos-Ko-Rado agrees with subset enumeration") {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{6, 2}, std::pair{4, 2}}) {
    const auto brute = oracle::max_intersecting(
        oracle::sets_where(n, [k = k](Mask m) { return __builtin_popcount(m) == k; }));
    CHECK(ekr_max(n, k) == brute.size);
    CHECK(brute.size == oracle::choose(n - 1, k - 1));
  }
}

TEST_CASE("two-level maxima") {
  const SearchResult r = two_level_max(5, 1);
  CHECK(r.maximum == 10);
  REQUIRE(r.all_maxima.size() == 1);
  CHECK(r.all_maxima.front() == level(5, 3));
  const auto brute = oracle::max_intersecting(
      oracle::sets_where(5, [](Mask m) { return __builtin_popcount(m) == 1 || __builtin_popcount(m) == 3; }));
  CHECK(brute.size == 10);
  CHECK(brute.maxima.size() == 1);
  CHECK(two_level_max(7, 1).maximum == 21);
  CHECK(is_intersecting(level(7, 5)));
  CHECK_THROWS_AS(two_level_max(6, 1), PreconditionError);
  CHECK_THROWS_AS(two_level_max(5, 2), PreconditionError);
  CHECK_THROWS_AS(two_level_max(7, 3), PreconditionError);
}

TEST_CASE("maximum families follow the upper-level pattern") {
  SearchOptions all;
  all.enumerate_all = true;
  const auto r5 = max_odd_intersecting(5, all);
  REQUIRE(r5.all_maxima.size() == 1);
  CHECK(r5.all_maxima.front() == odd_upper_levels(5));
  const auto r1 = max_odd_intersecting(1, all);
  CHECK(r1.all_maxima == std::vector<SetFamily>{SetFamily(1, {1})});
  const auto r3 = max_odd_intersecting(3, all);
  std::vector<SetFamily> stars;
  for (int l = 1; l <= 3; ++l) stars.push_back(family_union(odd_upper_levels(3), star(3, 1, l)));
  CHECK(sorted(r3.all_maxima) == sorted(stars));
  const auto r7 = max_odd_intersecting(7);
  bool matches = false;
  for (int l = 1; l <= 7; ++l) matches = matches || r7.certificate == family_union(odd_upper_levels(7), star(7, 3, l));
  CHECK(matches);
}

TEST_CASE("even n: no maximum family holds a complementary pair") {
  for (int n = 2; n <= 6; n += 2) {
    const auto r = max_odd_intersecting(n);
    CHECK(r.maximum == (std::size_t{1} << (n - 2)));
    for (Mask m : r.certificate.sets()) CHECK_FALSE(r.certificate.contains(full_mask(n) & ~m));
  }
}

TEST_CASE("generic subfamily search") {
  const SetFamily candidates(4, {0b0001, 0b0010, 0b0011, 0b0110, 0b1100});
  const auto r = max_intersecting_subfamily(candidates, {});
  const auto brute = oracle::max_intersecting(candidates.sets());
  CHECK(r.maximum == brute.size);
}

TEST_CASE("monomial bridge") {
  RandomSource rng(51);
  int intersecting = 0;
  for (int s = 0; s < 500; ++s) {
    const int n = rng.uniform(1, 6);
    const SetFamily f = rng.odd_family(n, 8);
    const Subspace d = monomial_span(f);
    const bool odd_span = std::all_of(d.basis().begin(), d.basis().end(), [](const Element& b) { return b.is_odd(); });
    REQUIRE((is_intersecting(f) && is_odd_family(f)) == (is_square_zero(d) && odd_span));
    intersecting += is_intersecting(f);
  }
  CHECK(intersecting > 100);
  CHECK(intersecting < 450);
}
