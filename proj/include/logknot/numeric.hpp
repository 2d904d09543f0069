#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <string>

#include "logknot/cyclotomic.hpp"

namespace logknot {

// Big-float backends: binary mantissa of the stated width.
template <unsigned Bits>
using FloatBits = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits,
                                         boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using Float128 = FloatBits<128>;
using Float256 = FloatBits<256>;

template <class B>
B pi_value() {
  return boost::math::constants::pi<B>();
}

template <class B>
bool is_finite_value(const B& x) {
  if (x != x) return false;  // NaN
  const B inf = std::numeric_limits<B>::infinity();
  return x != inf && x != -inf;
}

// Complex number over a big-float backend.
template <class B>
struct Complex {
  B re{}, im{};

  Complex() = default;
  Complex(B r, B i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(double r) : re(r), im(0) {}
  static Complex zero() { return Complex(B(0), B(0)); }
  static Complex one() { return Complex(B(1), B(0)); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    B r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    B n = b.re * b.re + b.im * b.im;
    if (n == 0) throw DivisionByZero("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  B abs() const {
    using boost::multiprecision::sqrt;
    return sqrt(re * re + im * im);
  }
  Complex conj() const { return {re, -im}; }
  bool is_finite() const { return is_finite_value(re) && is_finite_value(im); }
};

template <class B>
Complex<B> unit_phase(const B& angle) {  // exp(i * angle)
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  return {cos(angle), sin(angle)};
}

// exp(z) for complex z.
template <class B>
Complex<B> complex_exp(const Complex<B>& z) {
  using boost::multiprecision::exp;
  B m = exp(z.re);
  Complex<B> u = unit_phase(z.im);
  return {m * u.re, m * u.im};
}

// sin(z) for complex z = a + bi: sin a cosh b + i cos a sinh b.
template <class B>
Complex<B> complex_sin(const Complex<B>& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::cosh;
  using boost::multiprecision::sin;
  using boost::multiprecision::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// q^x at q = exp(i pi / p) for complex exponent x.
template <class B>
Complex<B> q_power(int p, const Complex<B>& x) {
  B f = pi_value<B>() / p;
  return complex_exp(Complex<B>(-f * x.im, f * x.re));
}

// [x] = sin(pi x / p) / sin(pi / p), the quantum number continued to complex x.
template <class B>
Complex<B> quantum_number(int p, const Complex<B>& x) {
  using boost::multiprecision::sin;
  B f = pi_value<B>() / p;
  Complex<B> s = complex_sin(Complex<B>(f * x.re, f * x.im));
  B d = sin(f);
  return {s.re / d, s.im / d};
}

// Numerical embedding at zeta = exp(i pi / (2p)).
template <class B>
Complex<B> to_complex(const Cyclo& x) {
  if (x.is_zero()) return Complex<B>::zero();
  const auto& ring = x.ring();
  B angle = pi_value<B>() / (2 * ring->p());
  Complex<B> zeta = unit_phase(angle);
  Complex<B> acc = Complex<B>::zero();
  for (int j = ring->degree() - 1; j >= 0; --j) {
    acc *= zeta;
    acc += Complex<B>(B(x.coeffs()[j]), B(0));
  }
  B den(x.den());
  return {acc.re / den, acc.im / den};
}

using Cx = Complex<Float128>;

template <class B>
std::string complex_to_string(const Complex<B>& z, int digits = 20) {
  std::string r = z.re.str(digits, std::ios_base::fmtflags(0));
  std::string i = z.im.str(digits, std::ios_base::fmtflags(0));
  std::string out = r;
  if (!i.empty() && i[0] == '-')
    out += " - " + i.substr(1) + "i";
  else
    out += " + " + i + "i";
  return out;
}

}  // namespace logknot
