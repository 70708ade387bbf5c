#ifndef NLIE_SCALAR_HPP
#define NLIE_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nlie/error.hpp"

namespace nlie {

/// Either the rationals or a prime field F_p with p < 2^16.
class Field {
 public:
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint32_t modulus() const { return p_; }
  std::string to_string() const;

  friend bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

/// Exact field element: a rational in lowest terms or a reduced residue.
/// Arithmetic across fields throws; there is no implicit coercion.
class Scalar {
 public:
  /// Zero of Q.
  Scalar() = default;
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long value);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// "-3", "7/2" over Q; an integer (reduced) over F_p.
  static Scalar parse(std::string_view text, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  void check_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace nlie

#endif
