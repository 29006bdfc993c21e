#ifndef GRASSMANN_TESTS_SUPPORT_HPP
#define GRASSMANN_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "grassmann/element.hpp"
#include "grassmann/subspace.hpp"
#include "grassmann/text.hpp"
#include "oracles.hpp"

namespace testing {

using namespace grassmann;

inline Element el(const std::string& text, int n, Field field = Field::rational()) {
  return parse_element(text, n, field);
}

inline Subspace sp(int n, const std::vector<std::string>& texts, Field field = Field::rational()) {
  std::vector<Element> v;
  for (const auto& t : texts) v.push_back(el(t, n, field));
  return Subspace::span(n, field, v);
}

inline oracle::Vec to_vec(const Element& x) {
  oracle::Vec v(std::size_t{1} << x.n(), 0);
  for (const auto& [m, c] : x.terms()) v[m] = static_cast<int>(c.residue());
  return v;
}

inline Element from_vec(const oracle::Vec& v, int n, Field field) {
  Element x(n, field);
  for (Mask m = 0; m < v.size(); ++m) {
    if (v[m]) x.add_term(m, Scalar(field, v[m]));
  }
  return x;
}

inline std::vector<oracle::Vec> to_vecs(const Subspace& s) {
  std::vector<oracle::Vec> out;
  for (const auto& b : s.basis()) out.push_back(to_vec(b));
  return out;
}

}  // namespace testing

#endif  // GRASSMANN_TESTS_SUPPORT_HPP
