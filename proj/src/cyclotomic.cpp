#include "wreath/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace wreath {

namespace {

using Poly = std::vector<BigInt>;

// Exact division by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt c = num[k];
    quot[k - dd] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  return quot;
}

std::mutex poly_mutex;
std::map<int, Poly> poly_cache;

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int m) {
  if (m < 1 || m > kMaxCyclotomicOrder)
    throw std::out_of_range("cyclotomic order " + std::to_string(m) + " outside [1, " +
                            std::to_string(kMaxCyclotomicOrder) + "]");
  {
    std::lock_guard lock(poly_mutex);
    if (auto it = poly_cache.find(m); it != poly_cache.end()) return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  Poly poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(poly_mutex);
  return poly_cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_powers(int order, std::span<const Rational> coeffs) {
  Cyclotomic out(order);
  const Poly& phi = cyclotomic_polynomial(order);
  const std::size_t d = phi.size() - 1;
  // x^m = 1 first, then reduce the remaining degree < m modulo Phi_m.
  std::vector<Rational> work(static_cast<std::size_t>(order), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Rational c = coeffs[k];
    c.canonicalize();
    work[k % order] += c;
  }
  for (std::size_t k = work.size(); k-- > d;) {
    const Rational c = work[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) work[k - d + j] -= c * phi[j];
    work[k] = 0;
  }
  for (std::size_t j = 0; j < d; ++j) out.coeffs_[j] = work[j];
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> powers(static_cast<std::size_t>(order_), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[(order_ - k) % order_] += coeffs_[k];
  return from_powers(order_, powers);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (order_ == other.order_) return;
  if (other.is_rational()) {
    other = Cyclotomic(order_, other.coeffs_[0]);
  } else if (is_rational()) {
    *this = Cyclotomic(other.order_, coeffs_[0]);
  } else {
    throw std::invalid_argument("cyclotomic orders " + std::to_string(order_) + " and " +
                                std::to_string(other.order_) + " are incompatible");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align_with(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align_with(rhs);
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  std::vector<Rational> prod(2 * coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  *this = from_powers(order_, prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  Rational k = scalar;
  k.canonicalize();
  for (auto& c : coeffs_) c *= k;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& scalar) {
  Rational k = scalar;
  k.canonicalize();
  if (k == 0) throw std::domain_error("cyclotomic division by zero");
  for (auto& c : coeffs_) c /= k;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const auto ra = a.as_rational();
  const auto rb = b.as_rational();
  return ra && rb && *ra == *rb;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].get_str();
    if (k == 1) out += "*z" + std::to_string(order_);
    if (k > 1) out += "*z" + std::to_string(order_) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic root_of_unity(int m, int k) {
  if (m < 1) throw std::invalid_argument("root_of_unity: m must be positive");
  const int e = ((k % m) + m) % m;
  std::vector<Rational> powers(static_cast<std::size_t>(e + 1), 0);
  powers[e] = 1;
  return Cyclotomic::from_powers(m, powers);
}

}  // namespace wreath
