#include "doctest.h"
#include "logknot/alexander.hpp"

using namespace logknot;

namespace {

using B = Float128;

double dist(const Cx& a, const Cx& b) {
  return static_cast<double>((a - b).abs());
}

Cx cx(double re, double im = 0.0) { return Cx(B(re), B(im)); }

}  // namespace

TEST_CASE("colored Alexander of the unknot is one") {
  for (int p : {2, 3, 5})
    for (Cx lam : {cx(0.37), cx(1.61, 0.2)})
      CHECK(dist(colored_alexander(preset_braid("unknot"), p, lam), Cx::one()) <
            1e-30);
}

TEST_CASE("colored Alexander of the framed unknot is the ribbon scalar") {
  // A single twist closes to the unknot with framing one, so the value is
  // the ribbon scalar q^{((lambda+1)^2 - 1)/2 - p lambda} on the non-integral
  // module (the -p lambda term is the pivot K^{1-p} on the highest weight).
  FramedBraidWord t1 = parse_braid_word("t1", 1);
  for (int p : {2, 3}) {
    for (Cx lam : {cx(0.37), cx(-0.83, 0.4)}) {
      Cx hw = lam + Cx::one();
      Cx expo = (hw * hw - Cx::one()) / cx(2) - cx(p) * lam;
      CHECK(dist(colored_alexander(t1, p, lam), q_power(p, expo)) < 1e-30);
    }
  }
}

TEST_CASE("colored Alexander golden values") {
  Cx o1 = colored_alexander(preset_braid("trefoil"), 2, cx(0.37));
  Cx g1(B("-0.030694377189041135487086319768047"),
        B("0.20340128026263025020182629605203"));
  CHECK(dist(o1, g1) < 1e-25);
  // The 0-framed figure eight is amphichiral, and its value lands on the
  // real axis.
  Cx o2 = colored_alexander(preset_braid("figure8"), 3, cx(0.37));
  Cx g2(B("0.93175311953506430097949331980359"), B(0));
  CHECK(dist(o2, g2) < 1e-25);
}

TEST_CASE("colored Alexander matches the naive numeric oracle") {
  FramedBraidWord b = preset_braid("trefoil");
  for (int p : {2, 3}) {
    Cx lam = cx(0.37);
    auto m = build_nonintegral<B>(p, lam + Cx::one());
    DenseMatrix<Cx> zn = detail::z_columns_numeric(
        b, m, detail::all_columns(m.dim()), TangleOptions{}, /*naive=*/true);
    Cx avg = Cx::zero();
    for (int i = 0; i < zn.rows; ++i) avg += zn.at(i, i);
    avg = avg / cx(zn.rows);
    CHECK(dist(colored_alexander(b, p, lam), avg) < 1e-30);
  }
}

TEST_CASE("derivative basics") {
  // Constant function: zero derivative.
  auto d0 = alexander_derivative(preset_braid("unknot"), 3, cx(0.37));
  CHECK(static_cast<double>(d0.value.abs()) < 1e-12);

  // Single twist: O(lambda) = q^{(lambda(lambda+2))/2 - p lambda}
  // differentiates to (i pi (lambda+1-p)/p) O(lambda).
  FramedBraidWord t1 = parse_braid_word("t1", 1);
  int p = 3;
  Cx lam = cx(0.37, -0.2);
  auto d = alexander_derivative(t1, p, lam);
  Cx hw = lam + Cx::one();
  Cx o = colored_alexander(t1, p, lam);
  B f = pi_value<B>() / p;
  Cx expected = Cx(B(0), f) * (hw - cx(p)) * o;
  CHECK(dist(d.value, expected) < 1e-12);
  // The error field is the step-halving difference |D(h) - D(h/2)|/3, an
  // O(h^2) third-derivative scale, not the Richardson-corrected residual.
  CHECK(static_cast<double>(d.error) < 1e-5);
}

TEST_CASE("derivative is step-size consistent") {
  AlexanderOptions<B> fine;
  fine.h = B(1e-4);
  // The second sample sits near (but safely off) an integral weight; at
  // exactly 1 + 1e-3 the coarse stencil would collide with the pole guard.
  for (Cx lam : {cx(0.37), cx(1.0 + 1e-2)}) {
    auto coarse = alexander_derivative(preset_braid("trefoil"), 2, lam);
    auto finer = alexander_derivative(preset_braid("trefoil"), 2, lam, fine);
    CHECK(dist(coarse.value, finer.value) < 1e-6);
  }
}

TEST_CASE("derivative of a connected sum obeys the product rule") {
  FramedBraidWord k1 = preset_braid("trefoil");
  FramedBraidWord k2 = preset_braid("figure8");
  FramedBraidWord sum = connected_sum_word(k1, k2);
  int p = 2;
  Cx lam = cx(0.23, 0.11);
  Cx o1 = colored_alexander(k1, p, lam);
  Cx o2 = colored_alexander(k2, p, lam);
  // O is multiplicative under connected sum.
  CHECK(dist(colored_alexander(sum, p, lam), o1 * o2) < 1e-28);
  auto d1 = alexander_derivative(k1, p, lam);
  auto d2 = alexander_derivative(k2, p, lam);
  auto ds = alexander_derivative(sum, p, lam);
  CHECK(dist(ds.value, d1.value * o2 + o1 * d2.value) < 1e-6);
}

TEST_CASE("theorem 4 on the framed unknot") {
  // The single twist has closed-form invariants on both sides: exact ribbon
  // nilpotents against numerically differentiated ribbon scalars.
  FramedBraidWord t1 = parse_braid_word("t1", 1);
  for (int p : {2, 3, 4}) {
    auto rep = verify_theorem4<B>(t1, p);
    CHECK(rep.pass);
    for (const auto& row : rep.rows) {
      CHECK(static_cast<double>(row.b_plus_residual) < 1e-9);
      CHECK(static_cast<double>(row.b_minus_residual) < 1e-9);
      CHECK(static_cast<double>(row.a_residual) < 1e-9);
    }
  }
}

TEST_CASE("theorem 4 on small knots") {
  CHECK(verify_theorem4<B>(preset_braid("trefoil"), 2).pass);
  CHECK(verify_theorem4<B>(preset_braid("trefoil"), 3).pass);
  CHECK(verify_theorem4<B>(preset_braid("figure8"), 2).pass);
}

TEST_CASE("closing symmetry") {
  CHECK(verify_symmetry<B>(preset_braid("trefoil"), 3).pass);
  CHECK(verify_symmetry<B>(preset_braid("cinquefoil"), 2).pass);
  CHECK(verify_symmetry<B>(preset_braid("figure8"), 3).pass);
}

TEST_CASE("off-diagonal identity at generic weights") {
  for (int p : {2, 3}) {
    for (Cx lam : {cx(0.37), cx(1.61, 0.2)}) {
      auto r1 = verify_offdiagonal(preset_braid("trefoil"), p, lam);
      CHECK(r1.pass);
      auto r2 = verify_offdiagonal(preset_braid("figure8"), p, lam);
      CHECK(r2.pass);
    }
  }
  // Identity tangle: the off-diagonal entry itself vanishes.
  CHECK(static_cast<double>(
            glued_offdiagonal(preset_braid("unknot"), 3, cx(0.37), 1).abs()) <
        1e-30);
}

TEST_CASE("glued off-diagonal limit recovers the plus coefficient") {
  // x on Y(lambda, p-s) tends to the exact b_s^+ as lambda -> 2p-s.
  FramedBraidWord b = preset_braid("trefoil");
  int p = 3;
  CentralDecomposition dec = decompose(b, p);
  for (int s = 1; s <= p - 1; ++s) {
    Cx lam = cx(double(2 * p - s) + 1e-6);
    Cx x = glued_offdiagonal(b, p, lam, p - s);
    CHECK(dist(x, to_complex<B>(dec.b_plus[size_t(s) - 1])) < 1e-4);
  }
}

TEST_CASE("highest weight vector of the glued module") {
  // h = c_s - [s][lambda-s] d_0 spans a z-eigenvector with eigenvalue
  // O_{lambda-2s-1}.
  FramedBraidWord b = preset_braid("trefoil");
  int p = 3, s = 1;
  Cx lam = cx(0.37);
  auto m = build_glued<B>(p, lam, s);
  int ic = m.index_of("c" + std::to_string(s));
  int id = m.index_of("d0");
  std::vector<int> cols = {ic, id};
  DenseMatrix<Cx> zc = tangle_operator_columns(b, m, cols);
  Cx t = quantum_number(p, cx(s)) * quantum_number(p, lam - cx(s));
  Cx o = colored_alexander(b, p, lam - cx(2 * s) - Cx::one());
  for (int i = 0; i < zc.rows; ++i) {
    Cx v = zc.at(i, 0) - t * zc.at(i, 1);  // (z h)_i
    Cx want = Cx::zero();
    if (i == ic) want = o;
    if (i == id) want = -(t * o);
    CHECK(dist(v, want) < 1e-28);
  }
}

TEST_CASE("colored Alexander is Markov invariant at fixed weight") {
  FramedBraidWord b = preset_braid("trefoil");
  int p = 2;
  Cx lam = cx(0.61, 0.11);
  Cx base = colored_alexander(b, p, lam);
  Cx conj = colored_alexander(
      markov_conjugate(b, parse_braid_word("s1 t1", 2)), p, lam);
  CHECK(dist(base, conj) < 1e-28);
  for (int sign : {+1, -1}) {
    Cx tw = colored_alexander(
        markov_stabilize(b, sign, StabilizationMode::TwistSide), p, lam);
    Cx cr = colored_alexander(
        markov_stabilize(b, sign, StabilizationMode::CrossingSide), p, lam);
    CHECK(dist(tw, cr) < 1e-28);
  }
}

TEST_CASE("alexander input guards") {
  CHECK_THROWS_AS(colored_alexander(preset_braid("trefoil"), 3, cx(1.0)),
                  InvalidParameter);
  CHECK_THROWS_AS(colored_alexander(preset_braid("trefoil"), 3, cx(-4.0)),
                  InvalidParameter);
  CHECK_THROWS_AS(glued_offdiagonal(preset_braid("trefoil"), 3, cx(0.37), 0),
                  InvalidParameter);
  // The glue index p is degenerate: c_p leaves the basis and the glued action
  // would violate E^p = 0, so the operation rejects it.
  CHECK_THROWS_AS(glued_offdiagonal(preset_braid("trefoil"), 3, cx(0.37), 3),
                  InvalidParameter);
  CHECK_THROWS_AS(glued_offdiagonal(preset_braid("trefoil"), 3, cx(0.37), 4),
                  InvalidParameter);
  CHECK_THROWS_AS(colored_alexander(parse_braid_word("s1 s1", 2), 2, cx(0.37)),
                  MultiComponent);
}
