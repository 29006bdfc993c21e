#ifndef GRASSMANN_TEXT_HPP
#define GRASSMANN_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "grassmann/element.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/setfamily.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann {

/// Parses the element grammar
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := coeff | coeff ['*'] monomial | monomial
///   coeff    := int | int '/' posint
///   monomial := 'v' '{' idx (',' idx)* '}' | '1'
///
/// Whitespace may separate tokens. Index lists may be unordered; the sign of
/// the sorting permutation is folded into the coefficient. Throws ParseError.
Element parse_element(std::string_view text, int n, Field field = Field::rational());

/// Terms in decreasing monomial order; unit coefficients elided except on the
/// unit monomial; "0" for zero. parse_element inverts it exactly.
std::string print_element(const Element& x);

/// Malformed or inconsistent JSON document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct SubspaceDocument {
  int n = 1;
  Field field;
  std::vector<std::string> basis;
};

SubspaceDocument subspace_document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SubspaceDocument& doc);
SubspaceDocument parse_subspace_document(std::string_view text);

Subspace read_subspace(const SubspaceDocument& doc);
/// Emits the canonical echelon basis.
SubspaceDocument write_subspace(const Subspace& s);

/// [[1],[1,2,3]]: each set as its increasing index list.
nlohmann::json to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j, int n);

}  // namespace grassmann

#endif  // GRASSMANN_TEXT_HPP
