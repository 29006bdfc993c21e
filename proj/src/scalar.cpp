#include "grassmann/scalar.hpp"

#include <charconv>
#include <ostream>

#include "grassmann/errors.hpp"

namespace grassmann {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (!is_prime(p)) throw FieldError("field modulus " + std::to_string(p) + " is not a prime");
  return Field(p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "rational") return rational();
  constexpr std::string_view prefix = "gf:";
  if (descriptor.substr(0, prefix.size()) == prefix) {
    auto digits = descriptor.substr(prefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw FieldError("unknown field descriptor '" + std::string(descriptor) +
                   "' (expected \"rational\" or \"gf:<p>\")");
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(mpz_class(value), field.modulus()), field.modulus()};
  }
}

Scalar::Scalar(Field field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const auto p = field.modulus();
    const auto d = reduce(den, p);
    if (d == 0) throw FieldError("denominator vanishes in " + field.to_string());
    const std::uint64_t n = reduce(num, p);
    value_ = Residue{static_cast<std::uint32_t>(n * mod_inverse(d, p) % p), p};
  }
}

Scalar::Scalar(Field field, const mpq_class& value)
    : Scalar(field, value.get_num(), value.get_den()) {}

Field Scalar::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rational();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_minus_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value + 1 == r->modulus;
  return std::get<mpq_class>(value_) == -1;
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldError("arithmetic between scalars of different fields");
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(
        (std::uint64_t{r->value} + std::get<Residue>(rhs.value_).value) % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(
        std::uint64_t{r->value} * std::get<Residue>(rhs.value_).value % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  if (rhs.is_zero()) throw UndefinedInput("division by zero");
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto inv = mod_inverse(std::get<Residue>(rhs.value_).value, r->modulus);
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * inv % r->modulus);
  } else {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return *r == std::get<Scalar::Residue>(b.value_);
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldError("scalar is not a residue");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace grassmann
