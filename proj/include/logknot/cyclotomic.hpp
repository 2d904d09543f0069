#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <string>
#include <vector>

#include "logknot/errors.hpp"

namespace logknot {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Arithmetic context for Q(zeta), zeta = exp(i pi / (2p)) a primitive 4p-th
// root of unity. Elements are reduced modulo the 4p-th cyclotomic polynomial,
// so every value has one canonical representation. Contexts are cached per p
// and immutable after construction (safe to share across threads).
class CycloRing {
 public:
  static std::shared_ptr<const CycloRing> get(int p);

  int p() const { return p_; }
  int order() const { return 4 * p_; }          // multiplicative order of zeta
  int degree() const { return degree_; }        // phi(4p)

  // Monic minimal polynomial Phi_{4p}, coefficient of x^k at [k], size deg+1.
  const std::vector<BigInt>& modulus() const { return modulus_; }

  // reduction_row(r) for r in [degree, 2*degree-2]: x^r in the power basis.
  const std::vector<BigInt>& reduction_row(int r) const {
    return reduction_rows_[r - degree_];
  }

 private:
  explicit CycloRing(int p);
  int p_;
  int degree_;
  std::vector<BigInt> modulus_;
  std::vector<std::vector<BigInt>> reduction_rows_;
};

// Element of Q(zeta_{4p}): integer coefficient vector over the power basis
// 1, zeta, ..., zeta^{deg-1} with a single positive denominator, normalized
// so gcd(content, den) = 1. Default-constructed values are the rational 0
// usable with any ring.
class Cyclo {
 public:
  Cyclo() : den_(1) {}
  Cyclo(std::shared_ptr<const CycloRing> ring, std::vector<BigInt> coeffs,
        BigInt den);

  static Cyclo from_rational(const std::shared_ptr<const CycloRing>& ring,
                             const BigRat& r);

  const std::shared_ptr<const CycloRing>& ring() const { return ring_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo pow(long e) const;  // negative exponents use inverse()

  // Canonical text form, e.g. "1 - z^2 + 1/2*z^5" (z stands for zeta_{4p}).
  std::string to_string() const;

 private:
  void normalize();
  std::shared_ptr<const CycloRing> ring_;  // null only for the rational 0
  std::vector<BigInt> coeffs_;             // size ring->degree(), or empty
  BigInt den_;
};

// zeta^j (j arbitrary, reduced mod 4p). Throws InvalidParameter if p < 2.
Cyclo root_power(int p, long j);
Cyclo root_power(const std::shared_ptr<const CycloRing>& ring, long j);

// Quantum integer [n] = (q^n - q^{-n})/(q - q^{-1}) at q = zeta^2; exact,
// defined for any integer n ([-n] = -[n]).
Cyclo quantum_integer(int p, long n);

// [n]! = [1][2]...[n]; [0]! = 1. Exactly 0 for n >= p (since [p] = 0); the
// result is then a zero divisor and must not be inverted. n < 0 throws.
Cyclo quantum_factorial(int p, long n);

// Multiplicative inverse; throws DivisionByZero on 0.
Cyclo inverse(const Cyclo& x);

// Parse the canonical text form back into a value; inverse of to_string().
Cyclo parse_cyclo(int p, const std::string& text);

}  // namespace logknot
