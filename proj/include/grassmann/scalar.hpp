#ifndef GRASSMANN_SCALAR_HPP
#define GRASSMANN_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace grassmann {

/// Runtime descriptor of the coefficient field: the rationals or GF(p), p an odd prime.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field{}; }
  /// Throws FieldError unless p is a prime >= 3.
  static Field prime(std::uint32_t p);
  /// Accepts "rational" or "gf:<p>".
  static Field parse(std::string_view descriptor);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;  // 0 encodes the rationals
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rational(), 0) {}
  Scalar(Field field, long value);
  /// value = num / den; throws FieldError if den vanishes in the field.
  Scalar(Field field, const mpz_class& num, const mpz_class& den);
  Scalar(Field field, const mpq_class& value);

  Field field() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value is -1.
  bool is_minus_one() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws UndefinedInput on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3", "-1/2"; residues print as their representative in [0, p).
  std::string to_string() const;

  /// Rational value; only valid for rational scalars.
  const mpq_class& rational() const;
  /// Residue; only valid for prime-field scalars.
  std::uint32_t residue() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  void check_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace grassmann

#endif  // GRASSMANN_SCALAR_HPP
