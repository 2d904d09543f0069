#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "logknot/matrix.hpp"

namespace logknot {

enum class ModuleKind { Irreducible, Projective, NonIntegral, Glued };

// Weight exponent lam*lambda + off; integral modules have lam = 0 and carry
// the integer H-lift inherited from their non-integral specialization (the
// lift matters: zeta^{w1 w2} in the braiding sees w mod 4p, not K's q^w).
struct Weight {
  int lam = 0;
  int off = 0;
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.lam == b.lam && a.off == b.off;
  }
  Weight shifted(int d) const { return {lam, off + d}; }
};

std::string to_string(const Weight& w);

template <class T>
struct WeightModule {
  int p = 0;
  ModuleKind kind = ModuleKind::Irreducible;
  int alpha = +1;  // sign for the integral families
  int s = 0;       // ladder parameter (Irr/Proj dimension label, glue index)
  T lambda{};      // generic highest weight (NonIntegral/Glued only)
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  DenseMatrix<T> act_e, act_f;

  int dim() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (labels[i] == label) return i;
    throw InvalidParameter("no basis vector labeled '" + label + "'");
  }
};

using ExactModule = WeightModule<Cyclo>;

// q^w at q = zeta^2 for a stored weight.
inline Cyclo weight_q_power(const WeightModule<Cyclo>& m, int i, int mult = 1) {
  const Weight& w = m.weights[i];
  if (w.lam != 0) throw InvalidParameter("integral module expected");
  return root_power(m.p, 2L * mult * w.off);
}
template <class B>
Complex<B> weight_value(const WeightModule<Complex<B>>& m, int i) {
  const Weight& w = m.weights[i];
  Complex<B> v = m.lambda;
  v *= Complex<B>(B(w.lam), B(0));
  v += Complex<B>(B(w.off), B(0));
  return v;
}
template <class B>
Complex<B> weight_q_power(const WeightModule<Complex<B>>& m, int i,
                          int mult = 1) {
  Complex<B> v = weight_value(m, i);
  v *= Complex<B>(B(mult), B(0));
  return q_power(m.p, v);
}

template <class T>
DenseMatrix<T> k_matrix(const WeightModule<T>& m, int power = 1) {
  DenseMatrix<T> k(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i) k.at(i, i) = weight_q_power(m, i, power);
  return k;
}

inline Cyclo q_scalar(const WeightModule<Cyclo>& m, int e) {
  return root_power(m.p, 2L * e);
}
template <class B>
Complex<B> q_scalar(const WeightModule<Complex<B>>& m, int e) {
  return q_power(m.p, Complex<B>(B(e), B(0)));
}
inline Cyclo one_scalar(const WeightModule<Cyclo>& m) {
  return root_power(m.p, 0);
}
template <class B>
Complex<B> one_scalar(const WeightModule<Complex<B>>&) {
  return Complex<B>::one();
}
inline Cyclo module_k2p_scalar(const WeightModule<Cyclo>& m) {
  return one_scalar(m);
}
template <class B>
Complex<B> module_k2p_scalar(const WeightModule<Complex<B>>& m) {
  Complex<B> v = m.lambda;
  v *= Complex<B>(B(2 * m.p), B(0));
  return q_power(m.p, v);
}
inline std::string entry_text(const Cyclo& v) { return v.to_string(); }
template <class B>
std::string entry_text(const Complex<B>& v) {
  return complex_to_string(v, 8);
}

// X^alpha(s): irreducible of dimension s, 1 <= s <= p, alpha = +-1.
ExactModule build_irreducible(int p, int alpha, int s);

// P^alpha(t): projective cover of X^alpha(t), dimension 2p, 1 <= t <= p-1.
ExactModule build_projective(int p, int alpha, int t);

// The nilpotent central endomorphism spanning rad End of a projective cover:
// b_n -> a_n on the plus family, y_k -> x_k on the minus family, zero else.
DenseMatrix<Cyclo> radical_map(const ExactModule& m);

// X(lambda): p-dimensional highest-weight module at non-integral lambda.
template <class B>
WeightModule<Complex<B>> build_nonintegral(int p, const Complex<B>& lambda);

// Y(lambda, s): dimension 2p, chain lambda glued over chain lambda-2s,
// 1 <= s <= p.
template <class B>
WeightModule<Complex<B>> build_glued(int p, const Complex<B>& lambda, int s);

struct CheckItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};
struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  double max_residual() const {
    double r = 0.0;
    for (const auto& it : items) r = std::max(r, it.residual);
    return r;
  }
  std::string summary() const;
};

// Defining relations of the (semi-)restricted quantum group on m:
// conjugation by K, the EF commutator, nilpotency of E and F, K^{2p},
// and the weight grading of the stored actions.
template <class T>
CheckReport check_module_relations(const WeightModule<T>& m, double tol);

// Human-readable basis/action listing.
template <class T>
std::string dump_module(const WeightModule<T>& m);

// ---- implementation of templated pieces ----

namespace detail {

inline double residual_of(const DenseMatrix<Cyclo>& d) {
  for (const auto& v : d.a)
    if (!v.is_zero()) return 1.0;
  return 0.0;
}
template <class B>
double residual_of(const DenseMatrix<Complex<B>>& d) {
  return static_cast<double>(max_abs(d));
}

}  // namespace detail

template <class T>
CheckReport check_module_relations(const WeightModule<T>& m, double tol) {
  CheckReport rep;
  const int n = m.dim();
  auto add = [&](const std::string& name, double res) {
    rep.items.push_back({name, res <= tol, res});
  };

  DenseMatrix<T> k = k_matrix(m, 1), kinv = k_matrix(m, -1);

  // K E K^{-1} = q^2 E and K F K^{-1} = q^{-2} F, entrywise.
  {
    DenseMatrix<T> d1(n, n), d2(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        d1.at(i, j) = k.at(i, i) * m.act_e.at(i, j) * kinv.at(j, j) -
                      q_scalar(m, 2) * m.act_e.at(i, j);
        d2.at(i, j) = k.at(i, i) * m.act_f.at(i, j) * kinv.at(j, j) -
                      q_scalar(m, -2) * m.act_f.at(i, j);
      }
    add("K E K^-1 = q^2 E", detail::residual_of(d1));
    add("K F K^-1 = q^-2 F", detail::residual_of(d2));
  }

  // [E, F] = (K - K^-1) / (q - q^-1)
  {
    T qdiff = q_scalar(m, 1) - q_scalar(m, -1);
    DenseMatrix<T> lhs = m.act_e * m.act_f - m.act_f * m.act_e;
    DenseMatrix<T> rhs = k - kinv;
    DenseMatrix<T> d(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d.at(i, j) = lhs.at(i, j) * qdiff - rhs.at(i, j);
    add("(q-q^-1)[E,F] = K - K^-1", detail::residual_of(d));
  }

  // E^p = F^p = 0
  {
    DenseMatrix<T> ep = m.act_e, fp = m.act_f;
    for (int t = 1; t < m.p; ++t) {
      ep = ep * m.act_e;
      fp = fp * m.act_f;
    }
    add("E^p = 0", detail::residual_of(ep));
    add("F^p = 0", detail::residual_of(fp));
  }

  // K^{2p} = 1 on integral modules; = q^{2p lambda} on generic-weight ones.
  {
    DenseMatrix<T> k2p = k_matrix(m, 2 * m.p);
    T expect = module_k2p_scalar(m);
    DenseMatrix<T> d = k2p - scale_matrix(
                                 DenseMatrix<T>::identity_like(n, one_scalar(m)),
                                 expect);
    add("K^2p scalar", detail::residual_of(d));
  }

  // Weight grading: E raises the stored weight by exactly 2, F lowers it.
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!is_exact_zero(m.act_e.at(i, j)) &&
            !(m.weights[i] == m.weights[j].shifted(2)))
          ok = false;
        if (!is_exact_zero(m.act_f.at(i, j)) &&
            !(m.weights[i] == m.weights[j].shifted(-2)))
          ok = false;
      }
    rep.items.push_back({"weight grading of E, F", ok, ok ? 0.0 : 1.0});
  }
  return rep;
}

template <class B>
WeightModule<Complex<B>> build_nonintegral(int p, const Complex<B>& lambda) {
  if (p < 2) throw InvalidParameter("p must be >= 2");
  WeightModule<Complex<B>> m;
  m.p = p;
  m.kind = ModuleKind::NonIntegral;
  m.lambda = lambda;
  m.act_e = DenseMatrix<Complex<B>>(p, p);
  m.act_f = DenseMatrix<Complex<B>>(p, p);
  for (int n = 0; n < p; ++n) {
    m.labels.push_back("v" + std::to_string(n));
    m.weights.push_back({1, -1 - 2 * n});
  }
  for (int n = 1; n < p; ++n) {
    // E v_n = [n][lambda - n] v_{n-1}
    Complex<B> c = quantum_number(p, Complex<B>(B(n), B(0)));
    Complex<B> lm = lambda;
    lm -= Complex<B>(B(n), B(0));
    c *= quantum_number(p, lm);
    m.act_e.at(n - 1, n) = c;
  }
  for (int n = 0; n + 1 < p; ++n) m.act_f.at(n + 1, n) = Complex<B>::one();
  return m;
}

template <class B>
WeightModule<Complex<B>> build_glued(int p, const Complex<B>& lambda, int s) {
  if (p < 2) throw InvalidParameter("p must be >= 2");
  if (s < 1 || s > p) throw InvalidParameter("glue index s out of range");
  WeightModule<Complex<B>> m;
  m.p = p;
  m.kind = ModuleKind::Glued;
  m.s = s;
  m.lambda = lambda;
  const int dim = 2 * p;
  m.act_e = DenseMatrix<Complex<B>>(dim, dim);
  m.act_f = DenseMatrix<Complex<B>>(dim, dim);
  for (int n = 0; n < p; ++n) {
    m.labels.push_back("c" + std::to_string(n));
    m.weights.push_back({1, -1 - 2 * n});
  }
  for (int n = 0; n < p; ++n) {
    m.labels.push_back("d" + std::to_string(n));
    m.weights.push_back({1, -1 - 2 * s - 2 * n});
  }
  auto qn = [&](const Complex<B>& x) { return quantum_number(p, x); };
  auto num = [&](int k) { return Complex<B>(B(k), B(0)); };
  const int C = 0, D = p;  // base offsets of the two chains
  for (int n = 1; n < p; ++n) {
    Complex<B> lm = lambda;
    lm -= num(n);
    m.act_e.at(C + n - 1, C + n) = qn(num(n)) * qn(lm);  // E c_n
  }
  // E d_0 = c_{s-1}
  m.act_e.at(C + s - 1, D + 0) = Complex<B>::one();
  for (int n = 1; n < p; ++n) {
    Complex<B> lm = lambda;
    lm -= num(2 * s + n);
    m.act_e.at(D + n - 1, D + n) = qn(num(n)) * qn(lm);  // diagonal part
    if (n <= p - s) m.act_e.at(C + n + s - 1, D + n) = Complex<B>::one();
  }
  for (int n = 0; n + 1 < p; ++n) {
    m.act_f.at(C + n + 1, C + n) = Complex<B>::one();
    m.act_f.at(D + n + 1, D + n) = Complex<B>::one();
  }
  return m;
}

template <class T>
std::string dump_module(const WeightModule<T>& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    out += m.labels[i] + "  w=" + to_string(m.weights[i]) + "\n";
    for (int j = 0; j < m.dim(); ++j) {
      if (!is_exact_zero(m.act_e.at(j, i)))
        out += "  E -> " + m.labels[j] + " * " + entry_text(m.act_e.at(j, i)) +
               "\n";
    }
    for (int j = 0; j < m.dim(); ++j) {
      if (!is_exact_zero(m.act_f.at(j, i)))
        out += "  F -> " + m.labels[j] + " * " + entry_text(m.act_f.at(j, i)) +
               "\n";
    }
  }
  return out;
}

}  // namespace logknot
