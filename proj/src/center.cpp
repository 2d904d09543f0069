#include "logknot/center.hpp"

namespace logknot {

namespace {

// Scalar action on an irreducible module, with the scalarness assertion.
Cyclo scalar_action(const FramedBraidWord& b, const ExactModule& m,
                    const DecomposeOptions& opts) {
  if (opts.mode == DecomposeMode::FullMatrices) {
    DenseMatrix<Cyclo> z = tangle_operator(b, m, opts.tangle);
    Cyclo a = z.at(0, 0);
    for (int i = 0; i < z.rows; ++i)
      for (int j = 0; j < z.cols; ++j) {
        bool ok = (i == j) ? (z.at(i, j) == a) : z.at(i, j).is_zero();
        if (!ok)
          throw Error(
              "tangle operator is not scalar on an irreducible module");
      }
    return a;
  }
  std::vector<int> cols = {0};
  DenseMatrix<Cyclo> zc = tangle_operator_columns(b, m, cols, opts.tangle);
  for (int i = 1; i < zc.rows; ++i)
    if (!zc.at(i, 0).is_zero())
      throw Error("tangle operator is not scalar on an irreducible module");
  return zc.at(0, 0);
}

// Action on a projective cover: diagonal scalar (must equal the block's a_s,
// passed in) plus a nilpotent coefficient on the canonical radical map.
Cyclo nilpotent_action(const FramedBraidWord& b, const ExactModule& m,
                       const Cyclo& a_s, const DecomposeOptions& opts) {
  const bool plus = (m.alpha == 1);
  const int row = m.index_of(plus ? "a0" : "x0");
  const int col = m.index_of(plus ? "b0" : "y0");
  if (opts.mode == DecomposeMode::FullMatrices) {
    DenseMatrix<Cyclo> z = tangle_operator(b, m, opts.tangle);
    Cyclo coeff = z.at(row, col);
    DenseMatrix<Cyclo> n = radical_map(m);
    for (int i = 0; i < z.rows; ++i)
      for (int j = 0; j < z.cols; ++j) {
        Cyclo want = n.at(i, j) * coeff;
        if (i == j) want += a_s;
        if (!(z.at(i, j) == want))
          throw Error(
              "tangle operator on a projective cover is not scalar plus "
              "nilpotent");
      }
    return coeff;
  }
  std::vector<int> cols = {col};
  DenseMatrix<Cyclo> zc = tangle_operator_columns(b, m, cols, opts.tangle);
  for (int i = 0; i < zc.rows; ++i) {
    bool ok;
    if (i == col)
      ok = (zc.at(i, 0) == a_s);
    else if (i == row)
      ok = true;
    else
      ok = zc.at(i, 0).is_zero();
    if (!ok)
      throw Error(
          "tangle operator on a projective cover is not scalar plus "
          "nilpotent");
  }
  return zc.at(row, 0);
}

}  // namespace

bool operator==(const CentralDecomposition& l, const CentralDecomposition& r) {
  if (l.p != r.p || l.framing != r.framing) return false;
  auto eq = [](const std::vector<Cyclo>& x, const std::vector<Cyclo>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return false;
    return true;
  };
  return eq(l.a, r.a) && eq(l.b_plus, r.b_plus) && eq(l.b_minus, r.b_minus);
}

CentralDecomposition decompose(const FramedBraidWord& b, int p,
                               const DecomposeOptions& opts) {
  if (p < 2) throw InvalidParameter("order parameter p must be at least 2");
  if (closure_components(b) != 1)
    throw MultiComponent("decomposition requires a knot closure");
  CentralDecomposition out;
  out.p = p;
  out.framing = framing_of(b);
  out.a.resize(size_t(p) + 1);
  out.b_plus.resize(size_t(p) - 1);
  out.b_minus.resize(size_t(p) - 1);
  for (int s = 1; s <= p; ++s)
    out.a[size_t(s)] = scalar_action(b, build_irreducible(p, +1, s), opts);
  out.a[0] = scalar_action(b, build_irreducible(p, -1, p), opts);
  for (int s = 1; s <= p - 1; ++s) {
    out.b_plus[size_t(s) - 1] = nilpotent_action(
        b, build_projective(p, +1, s), out.a[size_t(s)], opts);
    // The minus-family projective in the same block as Irr(+,s) is the cover
    // of the (p-s)-dimensional minus irreducible.
    out.b_minus[size_t(s) - 1] = nilpotent_action(
        b, build_projective(p, -1, p - s), out.a[size_t(s)], opts);
  }
  return out;
}

Cyclo colored_jones(const FramedBraidWord& b, int p, int s,
                    const DecomposeOptions& opts) {
  if (s < 1 || s > p)
    throw InvalidParameter("colored Jones color must satisfy 1 <= s <= p");
  if (closure_components(b) != 1)
    throw MultiComponent("colored Jones requires a knot closure");
  return scalar_action(b, build_irreducible(p, +1, s), opts);
}

ConnectedSumReport verify_connected_sum(const FramedBraidWord& b1,
                                        const FramedBraidWord& b2, int p,
                                        const DecomposeOptions& opts) {
  ConnectedSumReport r;
  r.left = decompose(b1, p, opts);
  r.right = decompose(b2, p, opts);
  r.sum = decompose(connected_sum_word(b1, b2), p, opts);
  r.multiplicative = true;
  for (int s = 0; s <= p; ++s)
    if (!(r.sum.a[size_t(s)] == r.left.a[size_t(s)] * r.right.a[size_t(s)]))
      r.multiplicative = false;
  r.leibniz = true;
  for (int s = 1; s <= p - 1; ++s) {
    const size_t k = size_t(s) - 1;
    Cyclo wp = r.left.a[size_t(s)] * r.right.b_plus[k] +
               r.left.b_plus[k] * r.right.a[size_t(s)];
    Cyclo wm = r.left.a[size_t(s)] * r.right.b_minus[k] +
               r.left.b_minus[k] * r.right.a[size_t(s)];
    if (!(r.sum.b_plus[k] == wp) || !(r.sum.b_minus[k] == wm))
      r.leibniz = false;
  }
  return r;
}

}  // namespace logknot
