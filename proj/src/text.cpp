#include "grassmann/text.hpp"

#include <cctype>

#include "grassmann/errors.hpp"

namespace grassmann {

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, int n, Field field)
      : text_(text), n_(n), field_(field), result_(n, field) {}

  Element parse() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    add_term(negative);
    skip_space();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(ParseErrorKind::Syntax, "expected '+' or '-'");
      get();
      skip_space();
      add_term(op == '-');
      skip_space();
    }
    return result_;
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& message) const {
    throw ParseError(kind, pos_, message);
  }
  [[noreturn]] void fail_at(ParseErrorKind kind, std::size_t at, const std::string& message) const {
    throw ParseError(kind, at, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(ParseErrorKind::Syntax, "expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void add_term(bool negative) {
    mpz_class num = 1;
    mpz_class den = 1;
    Mask mask = 0;
    int sign = 1;
    const auto term_start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      num = integer();
      skip_space();
      if (peek() == '/') {
        get();
        skip_space();
        const auto den_at = pos_;
        den = integer();
        if (den == 0) fail_at(ParseErrorKind::ZeroDenominator, den_at, "zero denominator");
        skip_space();
      }
      bool need_monomial = false;
      if (peek() == '*') {
        get();
        skip_space();
        need_monomial = true;
      }
      if (peek() == 'v' || peek() == '1') {
        std::tie(mask, sign) = monomial();
      } else if (need_monomial) {
        fail(ParseErrorKind::Syntax, "expected a monomial after '*'");
      }
    } else if (peek() == 'v') {
      std::tie(mask, sign) = monomial();
    } else {
      fail(ParseErrorKind::Syntax, "expected a coefficient or a monomial");
    }
    Scalar c = [&] {
      try {
        return Scalar(field_, num, den);
      } catch (const FieldError&) {
        fail_at(ParseErrorKind::ZeroDenominator, term_start,
                "denominator vanishes in " + field_.to_string());
      }
    }();
    if (negative != (sign < 0)) c = -c;
    result_.add_term(mask, c);
  }

  std::pair<Mask, int> monomial() {
    if (peek() == '1') {
      get();
      return {0, 1};
    }
    get();  // 'v'
    skip_space();
    if (peek() != '{') fail(ParseErrorKind::Syntax, "expected '{' after 'v'");
    get();
    skip_space();
    if (peek() == '}') fail(ParseErrorKind::EmptyMonomial, "empty index list");
    std::vector<int> indices;
    while (true) {
      const auto at = pos_;
      const mpz_class value = integer();
      if (value < 1 || value > n_) {
        fail_at(ParseErrorKind::IndexOutOfRange, at,
                "index " + value.get_str() + " outside 1.." + std::to_string(n_));
      }
      const int index = static_cast<int>(value.get_si());
      for (int seen : indices) {
        if (seen == index) {
          fail_at(ParseErrorKind::DuplicateIndex, at, "index " + std::to_string(index) + " repeated");
        }
      }
      indices.push_back(index);
      skip_space();
      if (peek() == ',') {
        get();
        skip_space();
        continue;
      }
      if (peek() == '}') {
        get();
        break;
      }
      fail(ParseErrorKind::Syntax, "expected ',' or '}'");
    }
    // Sorting the listed generators into increasing order costs one sign per inversion.
    int inversions = 0;
    Mask mask = 0;
    for (std::size_t a = 0; a < indices.size(); ++a) {
      for (std::size_t b = a + 1; b < indices.size(); ++b) {
        if (indices[a] > indices[b]) ++inversions;
      }
      mask |= bit(indices[a]);
    }
    return {mask, inversions % 2 ? -1 : 1};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  Field field_;
  Element result_;
};

std::string monomial_text(Mask mask) {
  std::string out = "v{";
  bool first = true;
  for (int i = 1; mask >> (i - 1); ++i) {
    if (mask & bit(i)) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

Element parse_element(std::string_view text, int n, Field field) {
  check_generator_count(n);
  return ElementParser(text, n, field).parse();
}

std::string print_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : x.terms()) {
    const bool negative = x.field().is_rational() && sgn(c.rational()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (mask == 0) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += monomial_text(mask);
    } else {
      out += magnitude.to_string() + "*" + monomial_text(mask);
    }
    first = false;
  }
  return out;
}

SubspaceDocument subspace_document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("subspace document must be a JSON object");
  SubspaceDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw DocumentError("subspace document needs an integer \"n\"");
  }
  doc.n = j["n"].get<int>();
  check_generator_count(doc.n);
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw DocumentError("\"field\" must be a string");
    doc.field = Field::parse(j["field"].get<std::string>());
  }
  if (!j.contains("basis") || !j["basis"].is_array()) {
    throw DocumentError("subspace document needs a \"basis\" array");
  }
  for (const auto& item : j["basis"]) {
    if (!item.is_string()) throw DocumentError("basis entries must be element strings");
    doc.basis.push_back(item.get<std::string>());
  }
  return doc;
}

nlohmann::json to_json(const SubspaceDocument& doc) {
  return nlohmann::json{{"n", doc.n}, {"field", doc.field.to_string()}, {"basis", doc.basis}};
}

SubspaceDocument parse_subspace_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  return subspace_document_from_json(j);
}

Subspace read_subspace(const SubspaceDocument& doc) {
  std::vector<Element> vectors;
  for (const auto& text : doc.basis) vectors.push_back(parse_element(text, doc.n, doc.field));
  return Subspace::span(doc.n, doc.field, vectors);
}

SubspaceDocument write_subspace(const Subspace& s) {
  SubspaceDocument doc;
  doc.n = s.n();
  doc.field = s.field();
  for (const auto& b : s.basis()) doc.basis.push_back(print_element(b));
  return doc;
}

nlohmann::json to_json(const SetFamily& f) {
  auto out = nlohmann::json::array();
  for (Mask m : f.sets()) out.push_back(Monomial(f.n(), m).indices());
  return out;
}

SetFamily family_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw DocumentError("a family is a JSON array of index arrays");
  std::vector<Mask> sets;
  for (const auto& set : j) {
    if (!set.is_array()) throw DocumentError("family members must be index arrays");
    std::vector<int> indices;
    for (const auto& i : set) {
      if (!i.is_number_integer()) throw DocumentError("indices must be integers");
      indices.push_back(i.get<int>());
    }
    sets.push_back(Monomial::from_indices(n, indices).mask());
  }
  return SetFamily(n, std::move(sets));
}

}  // namespace grassmann
