#include "doctest.h"

#include "grassmann/expression.hpp"
#include "grassmann/random.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ParseErrorKind kind_of(const std::string& text, int n) {
  try {
    parse_element(text, n);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error for " << text);
  return ParseErrorKind::Syntax;
}

std::size_t offset_of(const std::string& text, int n) {
  try {
    parse_element(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parser examples") {
  const Field q = Field::rational();
  CHECK(parse_element("v{2,1}", 2) == Element::monomial(Monomial(2, 3), Scalar(q, -1)));
  const Element gen = parse_element("v{1,2}+v{3,4}", 4);
  CHECK(gen.term_count() == 2);
  CHECK(gen.coefficient(0b0011).is_one());
  CHECK(gen.coefficient(0b1100).is_one());
  CHECK(parse_element("1/2*v{3} - v{3}", 3) == Element::monomial(Monomial(3, 4), Scalar(q, -1, 2)));
  CHECK(parse_element("  3 v{1} + 1 ", 2) == parse_element("1+3*v{1}", 2));
  CHECK(parse_element("-v{3,2,1}", 3) == parse_element("v{1,2,3}", 3));
  CHECK(parse_element("v{1}-v{1}", 3).is_zero());
  CHECK(parse_element("0", 3).is_zero());
  CHECK(parse_element("-2/4", 1) == Element::scalar(1, Scalar(q, -1, 2)));
}

TEST_CASE("parser error kinds are distinct") {
  CHECK(kind_of("v{}", 3) == ParseErrorKind::EmptyMonomial);
  CHECK(kind_of("v{0}", 3) == ParseErrorKind::IndexOutOfRange);
  CHECK(kind_of("v{4}", 3) == ParseErrorKind::IndexOutOfRange);
  CHECK(kind_of("v{1,1}", 3) == ParseErrorKind::DuplicateIndex);
  CHECK(kind_of("1/0*v{1}", 3) == ParseErrorKind::ZeroDenominator);
  CHECK(kind_of("v{1", 3) == ParseErrorKind::Syntax);
  CHECK(kind_of("v{1}+", 3) == ParseErrorKind::Syntax);
  CHECK(kind_of("x", 3) == ParseErrorKind::Syntax);
  CHECK(kind_of("", 3) == ParseErrorKind::Syntax);
  CHECK(kind_of("v{1}*v{2}", 3) == ParseErrorKind::Syntax);
  CHECK(kind_of("1/-2", 3) == ParseErrorKind::Syntax);
  CHECK(offset_of("v{1}+v{2,2}", 3) >= 5);
  CHECK(offset_of("v{1} + q", 3) == 7);

  try {
    parse_element("1/3*v{1}", 2, Field::prime(3));
    FAIL("expected a zero denominator");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::ZeroDenominator);
  }
}

TEST_CASE("printer examples") {
  CHECK(print_element(parse_element("2*v{1,2,3}", 3)) == "2*v{1,2,3}");
  CHECK(print_element(Element(3)) == "0");
  CHECK(print_element(parse_element("-v{1,2}+v{2}", 2)) == "v{2}-v{1,2}");
  CHECK(print_element(parse_element("1-v{1}", 2)) == "1-v{1}");
  CHECK(print_element(parse_element("-1/2", 2)) == "-1/2");
  CHECK(print_element(parse_element("-1/2*v{2}", 2)) == "-1/2*v{2}");
  CHECK(print_element(parse_element("2*v{1}", 2, Field::prime(5))) == "2*v{1}");
  CHECK(print_element(parse_element("-v{1}", 2, Field::prime(5))) == "4*v{1}");
}

TEST_CASE("printed terms are strictly decreasing in the monomial order") {
  RandomSource rng(21);
  for (int s = 0; s < 200; ++s) {
    const int n = rng.uniform(1, 8);
    const Element x = rng.element(n, Field::rational(), 6);
    Mask previous = 0;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
      if (!first) REQUIRE(compare_monomials(previous, m) > 0);
      previous = m;
      first = false;
    }
  }
}

TEST_CASE("fuzzed round trip") {
  RandomSource rng(22);
  for (int s = 0; s < 1000; ++s) {
    const int n = rng.uniform(1, 8);
    const Field field = s % 4 == 0 ? Field::prime(7) : Field::rational();
    Element x = rng.element(n, field, 6);
    if (s % 5 == 0) x *= Scalar(field, 1, 3 + s % 4);
    const std::string text = print_element(x);
    REQUIRE_MESSAGE(parse_element(text, n, field) == x, text);
  }
}

TEST_CASE("subspace documents") {
  const auto doc = parse_subspace_document(R"({"n":2,"basis":["v{1}+v{2}"]})");
  CHECK(doc.field.is_rational());
  CHECK(read_subspace(doc).dim() == 1);

  const auto d3 = parse_subspace_document(
      R"({"n":6,"field":"rational","basis":["v{1,2,3}+v{4,5,6}","v{1,2,4}+v{3,5,6}"]})");
  const Subspace d = read_subspace(d3);
  CHECK(d.dim() == 2);
  CHECK(product_span(d, d).is_zero());

  const auto once = write_subspace(read_subspace(d3));
  const auto twice = write_subspace(read_subspace(once));
  CHECK(to_json(once) == to_json(twice));

  CHECK_THROWS_AS(parse_subspace_document(R"({"n":2,"field":"gf:2","basis":[]})"), FieldError);
  CHECK_THROWS_AS(parse_subspace_document(R"({"basis":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_subspace_document(R"({"n":2,"basis":"v{1}"})"), DocumentError);
  CHECK_THROWS_AS(parse_subspace_document("not json"), DocumentError);
  CHECK_THROWS_AS(read_subspace(parse_subspace_document(R"({"n":2,"basis":["v{3}"]})")), ParseError);

  const auto gf = parse_subspace_document(R"({"n":3,"field":"gf:5","basis":["2*v{1}+v{2}"]})");
  const Subspace g = read_subspace(gf);
  CHECK(g.field() == Field::prime(5));
  CHECK(to_json(write_subspace(g))["basis"][0] == "v{1}+3*v{2}");
}

TEST_CASE("document round trip on random subspaces") {
  RandomSource rng(23);
  for (int s = 0; s < 100; ++s) {
    const int n = rng.uniform(1, 6);
    const Subspace a = rng.subspace(n, Field::rational(), rng.uniform(0, 6));
    const auto text = to_json(write_subspace(a)).dump();
    REQUIRE(read_subspace(parse_subspace_document(text)) == a);
  }
}

TEST_CASE("family json") {
  const SetFamily f(3, {0b001, 0b111});
  CHECK(to_json(f).dump() == "[[1],[1,2,3]]");
  CHECK(family_from_json(nlohmann::json::parse("[[1,2,3],[1]]"), 3) == f);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse("[[4]]"), 3), IndexOutOfRange);
}

TEST_CASE("expression evaluation") {
  CHECK(print_element(evaluate_expression("(v{1}+v{2,3})*(v{1}+v{2,3})", 3)) == "2*v{1,2,3}");
  CHECK(print_element(evaluate_expression("v{2,1}", 2)) == "-v{1,2}");
  CHECK(print_element(evaluate_expression("v{1}*v{1}", 2)) == "0");
  CHECK(print_element(evaluate_expression("v{2}*v{1} + v{1}*v{2}", 2)) == "0");
  CHECK(print_element(evaluate_expression("2*(v{1}+1/2)*v{2}", 2)) == "v{2}+2*v{1,2}");
  CHECK(print_element(evaluate_expression("-(v{1})", 2)) == "-v{1}");
  try {
    evaluate_expression("(v{1}+v{5})", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::IndexOutOfRange);
    CHECK(e.position() >= 6);
  }
  CHECK_THROWS_AS(evaluate_expression("(v{1}", 3), ParseError);
  CHECK_THROWS_AS(evaluate_expression("v{1}**v{2}", 3), ParseError);
}
