#pragma once

#include <cmath>
#include <vector>

#include "logknot/center.hpp"
#include "logknot/tangle.hpp"

namespace logknot {

// Numeric verification layer for the non-integral family: the colored
// Alexander scalar O_lambda, its lambda-derivative, the glued-module
// off-diagonal entry, and the limit identities tying them to the exact
// decomposition coefficients.

template <class B>
struct AlexanderOptions {
  B h = B(1e-3);           // base step of the derivative stencil
  B offset = B(1e-6);      // evaluation offset for limits at integral points
  B scalar_tol = B(1e-8);  // relative scalarness assertion on X(lambda)
  TangleOptions tangle;
};

namespace detail {

template <class B>
B nearest_integer_distance(const Complex<B>& z) {
  using boost::multiprecision::abs;
  using boost::multiprecision::round;
  B d = abs(z.re - round(z.re));
  B i = abs(z.im);
  return (d > i) ? d : i;
}

}  // namespace detail

// O_lambda(T_K): the scalar by which the tangle operator acts on the
// p-dimensional non-integral module of highest weight lambda + 1.
// Scalarness is asserted to `scalar_tol` relative; the returned value is the
// diagonal average.
template <class B>
Complex<B> colored_alexander(const FramedBraidWord& b, int p,
                             const Complex<B>& lambda,
                             const AlexanderOptions<B>& opts = {}) {
  Complex<B> hw = lambda + Complex<B>::one();
  if (detail::nearest_integer_distance(hw) < B(1e-12))
    throw InvalidParameter(
        "colored Alexander weight is too close to an integral weight; "
        "evaluate at a small offset instead");
  WeightModule<Complex<B>> m = build_nonintegral<B>(p, hw);
  DenseMatrix<Complex<B>> z = tangle_operator(b, m, opts.tangle);
  Complex<B> avg = Complex<B>::zero();
  for (int i = 0; i < z.rows; ++i) avg += z.at(i, i);
  avg = avg / Complex<B>(B(z.rows), B(0));
  B scale = B(1) + avg.abs();
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) {
      B dev = (i == j) ? (z.at(i, j) - avg).abs() : z.at(i, j).abs();
      if (dev > opts.scalar_tol * scale)
        throw Error(
            "tangle operator is not scalar on the non-integral module");
    }
  if (!avg.is_finite())
    throw Error("colored Alexander evaluation is not finite");
  return avg;
}

template <class B>
struct DerivativeEstimate {
  Complex<B> value;
  B error;  // difference of the two Richardson inputs / 3
};

// dO/dlambda at lambda0 by central differences with steps h and h/2 and one
// Richardson extrapolation. lambda0 may sit on an integral weight: the
// stencil never evaluates at the point itself.
template <class B>
DerivativeEstimate<B> alexander_derivative(const FramedBraidWord& b, int p,
                                           const Complex<B>& lambda0,
                                           const AlexanderOptions<B>& opts = {}) {
  auto diff = [&](const B& step) {
    Complex<B> sh(step, B(0));
    Complex<B> hi = colored_alexander(b, p, lambda0 + sh, opts);
    Complex<B> lo = colored_alexander(b, p, lambda0 - sh, opts);
    return (hi - lo) / (Complex<B>(B(2), B(0)) * sh);
  };
  Complex<B> d1 = diff(opts.h);
  Complex<B> d2 = diff(opts.h / B(2));
  DerivativeEstimate<B> out;
  Complex<B> third = Complex<B>(B(3), B(0));
  out.value = (Complex<B>(B(4), B(0)) * d2 - d1) / third;
  out.error = (d2 - d1).abs() / B(3);
  return out;
}

// Limit value of O at an integral point: symmetric average of offset
// evaluations, which cancels the linear term of the expansion.
template <class B>
Complex<B> alexander_at_integer(const FramedBraidWord& b, int p,
                                const Complex<B>& lambda0,
                                const AlexanderOptions<B>& opts = {}) {
  Complex<B> sh(opts.offset, B(0));
  Complex<B> hi = colored_alexander(b, p, lambda0 + sh, opts);
  Complex<B> lo = colored_alexander(b, p, lambda0 - sh, opts);
  Complex<B> half(B(1) / B(2), B(0));
  return (hi + lo) * half;
}

// The (c_s, d_0) entry of the tangle operator on the glued module Y(lambda, s).
// Only glue indices 1 <= s <= p-1 admit this entry: at s = p the target basis
// vector c_p does not exist, the glued action violates E^p = 0 (so no tangle
// operator is defined on it), and the identity this entry feeds has its
// correction term multiplied by [p] = 0.
template <class B>
Complex<B> glued_offdiagonal(const FramedBraidWord& b, int p,
                             const Complex<B>& lambda, int s,
                             const AlexanderOptions<B>& opts = {}) {
  if (s < 1 || s > p - 1)
    throw InvalidParameter("glue index must satisfy 1 <= s <= p-1");
  WeightModule<Complex<B>> m = build_glued<B>(p, lambda, s);
  std::vector<int> cols = {m.index_of("d0")};
  DenseMatrix<Complex<B>> zc = tangle_operator_columns(b, m, cols, opts.tangle);
  return zc.at(m.index_of("c" + std::to_string(s)), 0);
}

// --- verification reports ---------------------------------------------------

template <class B>
struct Theorem4Row {
  int s = 0;
  Complex<B> b_plus_exact, b_plus_formula;
  Complex<B> b_minus_exact, b_minus_formula;
  Complex<B> a_exact, o_low, o_high;  // a_s vs O_{s-1} and O_{2p-s-1}
  B b_plus_residual{}, b_minus_residual{}, a_residual{};
  B derivative_error{};  // largest reported Richardson error on this row
};

template <class B>
struct Theorem4Report {
  int p = 0;
  std::vector<Theorem4Row<B>> rows;
  Complex<B> a0_exact, a0_limit;  // s = 0 edge of the a-identity
  Complex<B> ap_exact, ap_limit;  // s = p edge (Steinberg)
  B tol_b{}, tol_a{};
  bool pass = false;
};

// Checks, for 1 <= s <= p-1,
//   b_s^+ = -(p sin^2(pi/p) / (pi sin(pi s/p))) (O'(2p-s-1) - O'(s-1)),
//   b_s^- = +(p sin^2(pi/p) / (pi sin(pi s/p))) (O'(s-1)   - O'(-s-1)),
//   a_s   = O_{s-1} = O_{2p-s-1},
// with the exact left sides from the central decomposition, plus the s = 0
// and s = p edges of the a-identity.
template <class B>
Theorem4Report<B> verify_theorem4(const FramedBraidWord& b, int p,
                                  B tol_b = B(1e-6), B tol_a = B(1e-8),
                                  const AlexanderOptions<B>& opts = {},
                                  const DecomposeOptions& dopts = {}) {
  using boost::multiprecision::sin;
  Theorem4Report<B> report;
  report.p = p;
  report.tol_b = tol_b;
  report.tol_a = tol_a;
  CentralDecomposition dec = decompose(b, p, dopts);
  const B pi = pi_value<B>();
  B sp = sin(pi / p);
  report.pass = true;
  for (int s = 1; s <= p - 1; ++s) {
    Theorem4Row<B> row;
    row.s = s;
    B factor = B(p) * sp * sp / (pi * sin(pi * s / p));
    auto dp_high = alexander_derivative(b, p, Complex<B>(double(2 * p - s - 1)), opts);
    auto dp_mid = alexander_derivative(b, p, Complex<B>(double(s - 1)), opts);
    auto dp_low = alexander_derivative(b, p, Complex<B>(double(-s - 1)), opts);
    Complex<B> f(factor, B(0));
    row.b_plus_formula = -(f * (dp_high.value - dp_mid.value));
    row.b_minus_formula = f * (dp_mid.value - dp_low.value);
    row.b_plus_exact = to_complex<B>(dec.b_plus[size_t(s) - 1]);
    row.b_minus_exact = to_complex<B>(dec.b_minus[size_t(s) - 1]);
    row.a_exact = to_complex<B>(dec.a[size_t(s)]);
    row.o_low = alexander_at_integer(b, p, Complex<B>(double(s - 1)), opts);
    row.o_high = alexander_at_integer(b, p, Complex<B>(double(2 * p - s - 1)), opts);
    row.b_plus_residual = (row.b_plus_exact - row.b_plus_formula).abs();
    row.b_minus_residual = (row.b_minus_exact - row.b_minus_formula).abs();
    B ra = (row.a_exact - row.o_low).abs();
    B rb = (row.a_exact - row.o_high).abs();
    row.a_residual = (ra > rb) ? ra : rb;
    row.derivative_error = dp_high.error;
    if (dp_mid.error > row.derivative_error) row.derivative_error = dp_mid.error;
    if (dp_low.error > row.derivative_error) row.derivative_error = dp_low.error;
    if (row.b_plus_residual > tol_b || row.b_minus_residual > tol_b ||
        row.a_residual > tol_a)
      report.pass = false;
    report.rows.push_back(row);
  }
  report.a0_exact = to_complex<B>(dec.a[0]);
  report.a0_limit = alexander_at_integer(b, p, Complex<B>(-1.0), opts);
  report.ap_exact = to_complex<B>(dec.a[size_t(p)]);
  report.ap_limit = alexander_at_integer(b, p, Complex<B>(double(p - 1)), opts);
  if ((report.a0_exact - report.a0_limit).abs() > tol_a ||
      (report.ap_exact - report.ap_limit).abs() > tol_a)
    report.pass = false;
  return report;
}

template <class B>
struct SymmetryRow {
  int s = 0;
  Complex<B> o_low, o_high, a_exact;
  B residual{};  // max of |o_high - o_low|, |o_low - a|, |o_high - a|
};

template <class B>
struct SymmetryReport {
  int p = 0;
  std::vector<SymmetryRow<B>> rows;
  B tol{};
  bool pass = false;
};

// Closing symmetry O_{2p-s-1} = O_{s-1} = a_s for 1 <= s <= p-1, with limits
// taken by symmetric offset evaluation.
template <class B>
SymmetryReport<B> verify_symmetry(const FramedBraidWord& b, int p,
                                  B tol = B(1e-6),
                                  const AlexanderOptions<B>& opts = {},
                                  const DecomposeOptions& dopts = {}) {
  SymmetryReport<B> report;
  report.p = p;
  report.tol = tol;
  report.pass = true;
  CentralDecomposition dec = decompose(b, p, dopts);
  for (int s = 1; s <= p - 1; ++s) {
    SymmetryRow<B> row;
    row.s = s;
    row.o_low = alexander_at_integer(b, p, Complex<B>(double(s - 1)), opts);
    row.o_high = alexander_at_integer(b, p, Complex<B>(double(2 * p - s - 1)), opts);
    row.a_exact = to_complex<B>(dec.a[size_t(s)]);
    B r = (row.o_high - row.o_low).abs();
    B r2 = (row.o_low - row.a_exact).abs();
    if (r2 > r) r = r2;
    r2 = (row.o_high - row.a_exact).abs();
    if (r2 > r) r = r2;
    row.residual = r;
    if (r > tol) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

template <class B>
struct OffdiagonalRow {
  int s = 0;
  Complex<B> lhs, rhs;  // O_{lambda-2s-1} and O_{lambda-1} - [s][lambda-s] x
  B residual{};
};

template <class B>
struct OffdiagonalReport {
  int p = 0;
  Complex<B> lambda;
  std::vector<OffdiagonalRow<B>> rows;
  B tol{};
  bool pass = false;
};

// The off-diagonal identity O_{lambda-2s-1} = O_{lambda-1} - [s][lambda-s] x
// at generic lambda, for every glue index 1 <= s <= p-1 (at s = p the glued
// module degenerates and the correction term carries the factor [p] = 0; see
// glued_offdiagonal).
template <class B>
OffdiagonalReport<B> verify_offdiagonal(const FramedBraidWord& b, int p,
                                        const Complex<B>& lambda,
                                        B tol = B(1e-8),
                                        const AlexanderOptions<B>& opts = {}) {
  OffdiagonalReport<B> report;
  report.p = p;
  report.lambda = lambda;
  report.tol = tol;
  report.pass = true;
  Complex<B> one = Complex<B>::one();
  for (int s = 1; s <= p - 1; ++s) {
    OffdiagonalRow<B> row;
    row.s = s;
    Complex<B> two_s(B(2 * s), B(0));
    row.lhs = colored_alexander(b, p, lambda - two_s - one, opts);
    Complex<B> x = glued_offdiagonal(b, p, lambda, s, opts);
    Complex<B> qs = quantum_number(p, Complex<B>(double(s)));
    Complex<B> ql = quantum_number(p, lambda - Complex<B>(double(s)));
    row.rhs = colored_alexander(b, p, lambda - one, opts) - qs * ql * x;
    row.residual = (row.lhs - row.rhs).abs();
    if (row.residual > tol) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace logknot
