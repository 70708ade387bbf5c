#include "nlie/scalar.hpp"

#include <cctype>

namespace nlie {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  require(p < (1u << 16) && is_prime(p), ErrorCode::invalid_argument,
          "modulus " + std::to_string(p) + " is not a prime below 65536");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long value) {
  if (f.is_rational()) return Scalar(mpq_class(value));
  long p = f.modulus();
  long r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.modulus()});
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) return Scalar(q);
  mpz_class p = f.modulus();
  mpz_class den = q.get_den() % p;
  require(den != 0, ErrorCode::invalid_argument,
          "denominator divisible by " + std::to_string(f.modulus()));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.modulus()});
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  require(all_digits(num), ErrorCode::parse,
          "malformed scalar '" + std::string(text) + "'");
  if (!f.is_rational()) {
    require(slash == std::string_view::npos, ErrorCode::parse,
            "fractions are not allowed over " + f.to_string() + ": '" +
                std::string(text) + "'");
    mpz_class v{std::string(num)};
    if (negative) v = -v;
    mpz_class p = f.modulus();
    mpz_class r = v % p;
    if (r < 0) r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), f.modulus()});
  }
  mpq_class q;
  q.get_num() = mpz_class(std::string(num));
  if (slash != std::string_view::npos) {
    require(all_digits(den), ErrorCode::parse,
            "malformed denominator in '" + std::string(text) + "'");
    q.get_den() = mpz_class(std::string(den));
    require(q.get_den() != 0, ErrorCode::parse,
            "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) q.get_num() = -q.get_num();
  q.canonicalize();
  return Scalar(std::move(q));
}

Field Scalar::field() const {
  Field f;
  if (auto* r = std::get_if<Residue>(&value_)) f.p_ = r->modulus;
  return f;
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  bool same = value_.index() == other.value_.index();
  if (same && value_.index() == 1)
    same = std::get<Residue>(value_).modulus ==
           std::get<Residue>(other.value_).modulus;
  if (!same)
    throw Error(ErrorCode::field_mismatch, "arithmetic between " +
                                               field().to_string() + " and " +
                                               other.field().to_string());
}

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorCode::invalid_argument, "inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_)) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = r->value, e = r->modulus - 2;
    while (e) {
      if (e & 1) result = result * base % r->modulus;
      base = base * base % r->modulus;
      e >>= 1;
    }
    return Scalar(Residue{static_cast<std::uint32_t>(result), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + r->modulus - std::get<Residue>(rhs.value_).value) %
               r->modulus;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(r->value) *
        std::get<Residue>(rhs.value_).value % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.value_.index() == 1)
    return std::get<Scalar::Residue>(a.value_) == std::get<Scalar::Residue>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace nlie
