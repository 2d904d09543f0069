#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logknot/braid_word.hpp"
#include "logknot/braiding.hpp"
#include "logknot/fields.hpp"
#include "logknot/modules.hpp"

namespace logknot {

struct TangleOptions {
  long cap = 20000;              // refuse when dim(M)^strands exceeds this
  bool framing_correct = false;  // multiply the result by ribbon^{-framing}
  bool check_central = true;     // verify the result commutes with E, F, K
  bool force_exact_big = false;  // skip the int64 fast path
};

namespace detail {

inline long checked_power(int d, int n, long cap) {
  long v = 1;
  for (int k = 0; k < n; ++k) {
    v *= d;
    if (v > cap)
      throw CapExceeded("module dimension " + std::to_string(d) + "^" +
                        std::to_string(n) + " exceeds the cap " +
                        std::to_string(cap));
  }
  return v;
}

// The five local operator panels every braid letter reduces to.
template <class T>
struct PanelMatrices {
  DenseMatrix<T> cross_pos, cross_neg;  // flip o R and its inverse on M (x) M
  DenseMatrix<T> twist_pos, twist_neg;  // ribbon and its inverse on M
  DenseMatrix<T> pivot;                 // K^{1-p}
};

template <class T>
PanelMatrices<T> panel_matrices(const WeightModule<T>& m) {
  PanelMatrices<T> pm;
  pm.cross_pos = braid_crossing(m, m, +1);
  pm.cross_neg = braid_crossing(m, m, -1);
  pm.twist_pos = ribbon_matrix(m);
  pm.twist_neg = ribbon_inverse_matrix(m);
  pm.pivot = pivot_matrix(m);
  return pm;
}

// Scale factors pulled out of each panel so the fast backend works over
// integer coefficient vectors (1 everywhere for the exact-Cyclo and complex
// backends, which keep fractions inside the value type).
struct PanelDens {
  BigInt cross[2] = {BigInt(1), BigInt(1)};
  BigInt twist[2] = {BigInt(1), BigInt(1)};
  BigInt pivot = BigInt(1);
};

inline BigInt word_denominator(const PanelDens& dens,
                               const FramedBraidWord& b) {
  BigInt den(1);
  for (const BraidLetter& l : b.letters)
    den *= (l.kind == BraidLetter::Sigma) ? dens.cross[l.sign < 0]
                                          : dens.twist[l.sign < 0];
  for (int k = 1; k < b.strands; ++k) den *= dens.pivot;
  return den;
}

// --- scalar backends -------------------------------------------------------

struct BigOps {
  using V = Cyclo;
  std::shared_ptr<const CycloRing> ring;
  V one() const { return Cyclo::from_rational(ring, BigRat(1)); }
  static bool is_zero(const V& v) { return v.is_zero(); }
  V mul(const V& a, const V& b) const { return a * b; }
  static void add_into(V& acc, const V& v) { acc += v; }
  static BigInt panel_den(const DenseMatrix<Cyclo>&) { return BigInt(1); }
  V convert(const Cyclo& x, const BigInt&) const { return x; }
  Cyclo to_exact(const V& v, const BigInt&) const { return v; }
};

template <int D>
struct FastOps {
  using V = FastCyclo<D>;
  FastRing<D> ring;
  explicit FastOps(std::shared_ptr<const CycloRing> r) : ring(std::move(r)) {}
  V one() const {
    V v{};
    v.c[0] = 1;
    return v;
  }
  static bool is_zero(const V& v) { return FastRing<D>::is_zero(v); }
  V mul(const V& a, const V& b) const {
    V out;
    ring.mul(a, b, out);
    return out;
  }
  static void add_into(V& acc, const V& v) { FastRing<D>::add_into(acc, v); }
  static BigInt panel_den(const DenseMatrix<Cyclo>& m) {
    BigInt l(1);
    for (const Cyclo& v : m.a)
      if (!v.is_zero()) l = boost::multiprecision::lcm(l, v.den());
    return l;
  }
  V convert(const Cyclo& x, const BigInt& scale) const {
    return ring.from_cyclo(x, scale);
  }
  Cyclo to_exact(const V& v, const BigInt& den) const {
    return ring.to_cyclo(v, den);
  }
};

template <class B>
struct ComplexOps {
  using V = Complex<B>;
  V one() const { return Complex<B>(B(1), B(0)); }
  static bool is_zero(const V& v) { return v.re == 0 && v.im == 0; }
  V mul(const V& a, const V& b) const { return a * b; }
  static void add_into(V& acc, const V& v) { acc += v; }
  static BigInt panel_den(const DenseMatrix<Complex<B>>&) { return BigInt(1); }
  V convert(const Complex<B>& x, const BigInt&) const { return x; }
};

// --- block-path engine -----------------------------------------------------

template <class V>
struct SparsePanels {
  int d = 0;
  // cross[s] has d^2 columns of (row, value); twist[s] has d; pivot is diag.
  std::vector<std::vector<std::pair<int, V>>> cross[2], twist[2];
  std::vector<V> pivot;
  PanelDens dens;
};

template <class Ops, class T>
SparsePanels<typename Ops::V> compile_sparse(const Ops& ops,
                                             const PanelMatrices<T>& pm) {
  SparsePanels<typename Ops::V> out;
  out.d = pm.pivot.rows;
  auto cols_of = [&](const DenseMatrix<T>& m, BigInt& den) {
    den = Ops::panel_den(m);
    std::vector<std::vector<std::pair<int, typename Ops::V>>> cols(m.cols);
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i)
        if (!is_exact_zero(m.at(i, j)))
          cols[j].emplace_back(i, ops.convert(m.at(i, j), den));
    return cols;
  };
  out.cross[0] = cols_of(pm.cross_pos, out.dens.cross[0]);
  out.cross[1] = cols_of(pm.cross_neg, out.dens.cross[1]);
  out.twist[0] = cols_of(pm.twist_pos, out.dens.twist[0]);
  out.twist[1] = cols_of(pm.twist_neg, out.dens.twist[1]);
  auto pcols = cols_of(pm.pivot, out.dens.pivot);
  out.pivot.resize(out.d);
  for (int j = 0; j < out.d; ++j) {
    if (pcols[j].size() != 1 || pcols[j][0].first != j)
      throw Error("pivot panel must be diagonal");
    out.pivot[j] = pcols[j][0].second;
  }
  return out;
}

template <class Ops>
void merge_terms(const Ops& ops,
                 std::vector<std::pair<std::uint32_t, typename Ops::V>>& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0, r = 0;
  while (r < t.size()) {
    std::uint32_t code = t[r].first;
    typename Ops::V acc = t[r].second;
    for (++r; r < t.size() && t[r].first == code; ++r)
      ops.add_into(acc, t[r].second);
    if (!Ops::is_zero(acc)) t[w++] = {code, acc};
  }
  t.resize(w);
}

// Selected columns of the tangle operator: evolve each tensor column
// (c, tail) through the word (rightmost letter acts first), then keep the
// outputs whose traced factors return to the same tail, weighted by the
// pivot. Each evolving column stays inside one total-weight class, which is
// what keeps the sparse supports small.
template <class Ops>
DenseMatrix<typename Ops::V> z_columns_block(
    const Ops& ops, const SparsePanels<typename Ops::V>& panels,
    const FramedBraidWord& b, const std::vector<int>& cols) {
  using V = typename Ops::V;
  const int d = panels.d, n = b.strands;
  std::vector<long> mult(size_t(n) + 1, 1);  // mult[k] = d^{n-k}, k = 1..n
  for (int k = n - 1; k >= 1; --k) mult[k] = mult[k + 1] * d;
  long tails = (n >= 2) ? mult[1] : 1;
  DenseMatrix<V> out(d, int(cols.size()));
  std::vector<std::pair<std::uint32_t, V>> cur, nxt;
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    for (long t = 0; t < tails; ++t) {
      V pp = ops.one();
      for (long tt = t, k = 0; k < n - 1; ++k, tt /= d)
        pp = ops.mul(pp, panels.pivot[int(tt % d)]);
      cur.assign(1, {std::uint32_t(cols[ci] * tails + t), ops.one()});
      for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        const BraidLetter& l = *it;
        nxt.clear();
        if (l.kind == BraidLetter::Sigma) {
          const auto& cc = panels.cross[l.sign < 0];
          long mi = mult[l.index], mi1 = mult[l.index + 1];
          for (const auto& [code, val] : cur) {
            int a = int((code / mi) % d), bdig = int((code / mi1) % d);
            for (const auto& [row, w] : cc[a * d + bdig]) {
              long nc =
                  long(code) + (row / d - a) * mi + (row % d - bdig) * mi1;
              nxt.emplace_back(std::uint32_t(nc), ops.mul(val, w));
            }
          }
        } else {
          const auto& tc = panels.twist[l.sign < 0];
          long mi = mult[l.index];
          for (const auto& [code, val] : cur) {
            int a = int((code / mi) % d);
            for (const auto& [row, w] : tc[a])
              nxt.emplace_back(std::uint32_t(long(code) + (row - a) * mi),
                               ops.mul(val, w));
          }
        }
        cur.swap(nxt);
        merge_terms(ops, cur);
      }
      for (const auto& [code, val] : cur)
        if (long(code % tails) == t)
          ops.add_into(out.at(int(code / tails), int(ci)), ops.mul(val, pp));
    }
  }
  return out;
}

// --- naive oracle engine ---------------------------------------------------

// The same contraction on flat dense arrays with full panel scans: no weight
// blocks, no sparse supports, no merge bookkeeping. Independent oracle for
// the block path.
template <class Ops, class T>
DenseMatrix<typename Ops::V> z_columns_naive(const Ops& ops,
                                             const PanelMatrices<T>& pm,
                                             const FramedBraidWord& b,
                                             const std::vector<int>& cols,
                                             long dn, PanelDens& dens_out) {
  using V = typename Ops::V;
  const int d = pm.pivot.rows, n = b.strands;
  dens_out.cross[0] = Ops::panel_den(pm.cross_pos);
  dens_out.cross[1] = Ops::panel_den(pm.cross_neg);
  dens_out.twist[0] = Ops::panel_den(pm.twist_pos);
  dens_out.twist[1] = Ops::panel_den(pm.twist_neg);
  dens_out.pivot = Ops::panel_den(pm.pivot);
  auto dense = [&](const DenseMatrix<T>& m, const BigInt& den) {
    DenseMatrix<V> out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        if (!is_exact_zero(m.at(i, j)))
          out.at(i, j) = ops.convert(m.at(i, j), den);
    return out;
  };
  DenseMatrix<V> cross[2] = {dense(pm.cross_pos, dens_out.cross[0]),
                             dense(pm.cross_neg, dens_out.cross[1])};
  DenseMatrix<V> twist[2] = {dense(pm.twist_pos, dens_out.twist[0]),
                             dense(pm.twist_neg, dens_out.twist[1])};
  DenseMatrix<V> pivot = dense(pm.pivot, dens_out.pivot);
  std::vector<long> mult(size_t(n) + 1, 1);
  for (int k = n - 1; k >= 1; --k) mult[k] = mult[k + 1] * d;
  long tails = dn / d;
  DenseMatrix<V> out(d, int(cols.size()));
  std::vector<V> cur(static_cast<size_t>(dn));
  std::vector<V> nxt(static_cast<size_t>(dn));
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    for (long t = 0; t < tails; ++t) {
      V pp = ops.one();
      for (long tt = t, k = 0; k < n - 1; ++k, tt /= d)
        pp = ops.mul(pp, pivot.at(int(tt % d), int(tt % d)));
      std::fill(cur.begin(), cur.end(), V{});
      cur[size_t(cols[ci] * tails + t)] = ops.one();
      for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        const BraidLetter& l = *it;
        std::fill(nxt.begin(), nxt.end(), V{});
        if (l.kind == BraidLetter::Sigma) {
          const DenseMatrix<V>& panel = cross[l.sign < 0];
          long mi = mult[l.index], mi1 = mult[l.index + 1];
          for (long idx = 0; idx < dn; ++idx) {
            if (Ops::is_zero(cur[size_t(idx)])) continue;
            int a = int((idx / mi) % d), bdig = int((idx / mi1) % d);
            int col = a * d + bdig;
            for (int row = 0; row < d * d; ++row) {
              const V& w = panel.at(row, col);
              if (Ops::is_zero(w)) continue;
              long nc = idx + (row / d - a) * mi + (row % d - bdig) * mi1;
              ops.add_into(nxt[size_t(nc)], ops.mul(cur[size_t(idx)], w));
            }
          }
        } else {
          const DenseMatrix<V>& panel = twist[l.sign < 0];
          long mi = mult[l.index];
          for (long idx = 0; idx < dn; ++idx) {
            if (Ops::is_zero(cur[size_t(idx)])) continue;
            int a = int((idx / mi) % d);
            for (int row = 0; row < d; ++row) {
              const V& w = panel.at(row, a);
              if (Ops::is_zero(w)) continue;
              ops.add_into(nxt[size_t(idx + (row - a) * mi)],
                           ops.mul(cur[size_t(idx)], w));
            }
          }
        }
        cur.swap(nxt);
      }
      for (int h = 0; h < d; ++h) {
        const V& v = cur[size_t(h * tails + t)];
        if (!Ops::is_zero(v))
          ops.add_into(out.at(h, int(ci)), ops.mul(v, pp));
      }
    }
  }
  return out;
}

// --- exact drivers with fast/big selection ---------------------------------

inline std::vector<int> all_columns(int d) {
  std::vector<int> cols(d);
  for (int i = 0; i < d; ++i) cols[i] = i;
  return cols;
}

inline std::shared_ptr<const CycloRing> ring_of(const ExactModule& m) {
  return CycloRing::get(m.p);
}

template <class Ops>
DenseMatrix<Cyclo> z_exact_run(const Ops& ops, const PanelMatrices<Cyclo>& pm,
                               const FramedBraidWord& b,
                               const std::vector<int>& cols, bool naive,
                               long dn) {
  DenseMatrix<typename Ops::V> raw;
  BigInt den;
  if (naive) {
    PanelDens dens;
    raw = z_columns_naive(ops, pm, b, cols, dn, dens);
    den = word_denominator(dens, b);
  } else {
    auto panels = compile_sparse(ops, pm);
    raw = z_columns_block(ops, panels, b, cols);
    den = word_denominator(panels.dens, b);
  }
  DenseMatrix<Cyclo> out(raw.rows, raw.cols);
  for (int i = 0; i < raw.rows; ++i)
    for (int j = 0; j < raw.cols; ++j)
      out.at(i, j) = ops.to_exact(raw.at(i, j), den);
  return out;
}

inline DenseMatrix<Cyclo> z_columns_exact(const FramedBraidWord& b,
                                          const ExactModule& m,
                                          const std::vector<int>& cols,
                                          const TangleOptions& opts,
                                          bool naive) {
  long dn = checked_power(m.dim(), b.strands, opts.cap);
  PanelMatrices<Cyclo> pm = panel_matrices(m);
  auto ring = ring_of(m);
  if (!opts.force_exact_big) {
    int deg = fast_degree(m.p);
    try {
      if (deg == 4)
        return z_exact_run(FastOps<4>(ring), pm, b, cols, naive, dn);
      if (deg == 8)
        return z_exact_run(FastOps<8>(ring), pm, b, cols, naive, dn);
      if (deg == 12)
        return z_exact_run(FastOps<12>(ring), pm, b, cols, naive, dn);
    } catch (const FastOverflow&) {
      // fall through to the exact big path
    }
  }
  return z_exact_run(BigOps{ring}, pm, b, cols, naive, dn);
}

template <class B>
DenseMatrix<Complex<B>> z_columns_numeric(const FramedBraidWord& b,
                                          const WeightModule<Complex<B>>& m,
                                          const std::vector<int>& cols,
                                          const TangleOptions& opts,
                                          bool naive) {
  long dn = checked_power(m.dim(), b.strands, opts.cap);
  PanelMatrices<Complex<B>> pm = panel_matrices(m);
  ComplexOps<B> ops;
  if (naive) {
    PanelDens dens;
    return z_columns_naive(ops, pm, b, cols, dn, dens);
  }
  auto panels = compile_sparse(ops, pm);
  return z_columns_block(ops, panels, b, cols);
}

template <class T>
DenseMatrix<T> ribbon_power(const WeightModule<T>& m, int f) {
  DenseMatrix<T> base = (f >= 0) ? ribbon_matrix(m) : ribbon_inverse_matrix(m);
  DenseMatrix<T> out = DenseMatrix<T>::identity_like(m.dim(), one_scalar(m));
  for (int k = 0; k < (f >= 0 ? f : -f); ++k) out = out * base;
  return out;
}

inline void check_tangle_central(const DenseMatrix<Cyclo>& z,
                                 const ExactModule& m) {
  DenseMatrix<Cyclo> k = k_matrix(m, 1);
  if (!(z * m.act_e == m.act_e * z) || !(z * m.act_f == m.act_f * z) ||
      !(z * k == k * z))
    throw Error("tangle operator is not central on the module");
}
template <class B>
void check_tangle_central(const DenseMatrix<Complex<B>>& z,
                          const WeightModule<Complex<B>>& m) {
  DenseMatrix<Complex<B>> k = k_matrix(m, 1);
  B scale = B(1) + max_abs(z);
  B res = max_abs(z * m.act_e - m.act_e * z);
  B r2 = max_abs(z * m.act_f - m.act_f * z);
  if (r2 > res) res = r2;
  r2 = max_abs(z * k - k * z);
  if (r2 > res) res = r2;
  if (res > B(1e-9) * scale)
    throw Error("tangle operator is not central on the module");
}

}  // namespace detail

// Dense representation matrix of a framed braid word on M^{(x)n}: the
// product of the letter matrices in word order (crossings via flip o R,
// twists via the ribbon, acting on the strand factors).
template <class T>
DenseMatrix<T> braid_operator(const FramedBraidWord& b,
                              const WeightModule<T>& m,
                              const TangleOptions& opts = {}) {
  long dn = detail::checked_power(m.dim(), b.strands, opts.cap);
  detail::PanelMatrices<T> pm = detail::panel_matrices(m);
  const int d = m.dim(), n = b.strands;
  T one = one_scalar(m);
  DenseMatrix<T> out = DenseMatrix<T>::identity_like(int(dn), one);
  for (const BraidLetter& l : b.letters) {
    const DenseMatrix<T>& panel = (l.kind == BraidLetter::Sigma)
                                      ? (l.sign > 0 ? pm.cross_pos : pm.cross_neg)
                                      : (l.sign > 0 ? pm.twist_pos : pm.twist_neg);
    long left = 1;
    for (int k = 1; k < l.index; ++k) left *= d;
    int width = (l.kind == BraidLetter::Sigma) ? 2 : 1;
    long right = 1;
    for (int k = l.index + width; k <= n; ++k) right *= d;
    DenseMatrix<T> full =
        kronecker(kronecker(DenseMatrix<T>::identity_like(int(left), one),
                            panel),
                  DenseMatrix<T>::identity_like(int(right), one));
    out = out * full;
  }
  return out;
}

// Invariant operator of the (1,1)-tangle: close strands 2..n of the braid
// with pivot insertions (partial quantum trace). Requires a one-component
// closure. Central on M by construction; verified unless disabled.
inline DenseMatrix<Cyclo> tangle_operator(const FramedBraidWord& b,
                                          const ExactModule& m,
                                          const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  DenseMatrix<Cyclo> z = detail::z_columns_exact(
      b, m, detail::all_columns(m.dim()), opts, /*naive=*/false);
  if (opts.framing_correct)
    z = detail::ribbon_power(m, -framing_of(b)) * z;
  if (opts.check_central) detail::check_tangle_central(z, m);
  return z;
}

template <class B>
DenseMatrix<Complex<B>> tangle_operator(const FramedBraidWord& b,
                                        const WeightModule<Complex<B>>& m,
                                        const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  DenseMatrix<Complex<B>> z = detail::z_columns_numeric(
      b, m, detail::all_columns(m.dim()), opts, /*naive=*/false);
  if (opts.framing_correct)
    z = detail::ribbon_power(m, -framing_of(b)) * z;
  if (opts.check_central) detail::check_tangle_central(z, m);
  return z;
}

// Selected columns of the tangle operator (no centrality check; intended
// for the entry extractions where only one or two columns are needed).
inline DenseMatrix<Cyclo> tangle_operator_columns(const FramedBraidWord& b,
                                                  const ExactModule& m,
                                                  const std::vector<int>& cols,
                                                  const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  DenseMatrix<Cyclo> z =
      detail::z_columns_exact(b, m, cols, opts, /*naive=*/false);
  if (opts.framing_correct)
    z = detail::ribbon_power(m, -framing_of(b)) * z;
  return z;
}

template <class B>
DenseMatrix<Complex<B>> tangle_operator_columns(
    const FramedBraidWord& b, const WeightModule<Complex<B>>& m,
    const std::vector<int>& cols, const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  DenseMatrix<Complex<B>> z =
      detail::z_columns_numeric(b, m, cols, opts, /*naive=*/false);
  if (opts.framing_correct)
    z = detail::ribbon_power(m, -framing_of(b)) * z;
  return z;
}

// Flat-array oracle with the same contract as tangle_operator.
inline DenseMatrix<Cyclo> naive_tangle_operator(const FramedBraidWord& b,
                                                const ExactModule& m,
                                                const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  DenseMatrix<Cyclo> z = detail::z_columns_exact(
      b, m, detail::all_columns(m.dim()), opts, /*naive=*/true);
  if (opts.framing_correct)
    z = detail::ribbon_power(m, -framing_of(b)) * z;
  return z;
}

inline DenseMatrix<Cyclo> naive_tangle_operator_columns(
    const FramedBraidWord& b, const ExactModule& m,
    const std::vector<int>& cols, const TangleOptions& opts = {}) {
  if (closure_components(b) != 1)
    throw MultiComponent("tangle closure has more than one component");
  return detail::z_columns_exact(b, m, cols, opts, /*naive=*/true);
}

}  // namespace logknot
