#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wreath {

using Rational = mpq_class;
using BigInt = mpz_class;

inline constexpr int kMaxCyclotomicOrder = 16;

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(int m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{d-1}, d = deg Phi_m,
/// always reduced modulo Phi_m so that equality is coefficient equality.
class Cyclotomic {
 public:
  /// Zero of Q (order 1).
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const Rational& value);
  /// Reduces a sum sum_k coeffs[k] zeta^k with arbitrary length modulo Phi_m.
  static Cyclotomic from_powers(int order, std::span<const Rational> coeffs);
  static Cyclotomic rational(const Rational& value) { return Cyclotomic(1, value); }

  int order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value when it lies in Q, std::nullopt otherwise.
  std::optional<Rational> as_rational() const;

  Cyclotomic conjugate() const;
  Cyclotomic operator-() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);
  Cyclotomic& operator/=(const Rational& scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& s) { return a /= s; }

  /// Values of different orders compare equal only when both are the same rational.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  /// Brings a rational operand up to this order, or throws on mismatch.
  void align_with(Cyclotomic& other);

  int order_;
  std::vector<Rational> coeffs_;
};

/// zeta_m^{k mod m}.
Cyclotomic root_of_unity(int m, int k);

}  // namespace wreath
