#include "logknot/modules.hpp"

namespace logknot {

std::string to_string(const Weight& w) {
  std::string out;
  if (w.lam != 0) {
    if (w.lam == 1)
      out = "L";
    else if (w.lam == -1)
      out = "-L";
    else
      out = std::to_string(w.lam) + "L";
    if (w.off > 0) out += "+" + std::to_string(w.off);
    if (w.off < 0) out += std::to_string(w.off);
    return out;
  }
  return std::to_string(w.off);
}

std::string CheckReport::summary() const {
  std::string out;
  for (const auto& it : items) {
    out += (it.pass ? "pass  " : "FAIL  ");
    out += it.name + "\n";
  }
  return out;
}

namespace {

Cyclo qi(int p, long n) { return quantum_integer(p, n); }

void push_ladder(ExactModule& m, const std::string& stem, int count,
                 int top_weight) {
  for (int n = 0; n < count; ++n) {
    m.labels.push_back(stem + std::to_string(n));
    m.weights.push_back({0, top_weight - 2 * n});
  }
}

}  // namespace

ExactModule build_irreducible(int p, int alpha, int s) {
  if (p < 2) throw InvalidParameter("p must be >= 2");
  if (alpha != 1 && alpha != -1)
    throw InvalidParameter("alpha must be +1 or -1");
  if (s < 1 || s > p)
    throw InvalidParameter("irreducible dimension must satisfy 1 <= s <= p");
  ExactModule m;
  m.p = p;
  m.kind = ModuleKind::Irreducible;
  m.alpha = alpha;
  m.s = s;
  m.act_e = DenseMatrix<Cyclo>(s, s);
  m.act_f = DenseMatrix<Cyclo>(s, s);
  // Stored lift: the plus family sits at highest weight s-1; the minus
  // family is the X(s-p) chain, top weight s-p-1 (eigenvalue -q^{s-1}).
  push_ladder(m, "u", s, alpha == 1 ? s - 1 : s - p - 1);
  for (int n = 1; n < s; ++n) {
    Cyclo c = qi(p, n) * qi(p, s - n);
    m.act_e.at(n - 1, n) = (alpha == 1) ? c : -c;
  }
  Cyclo one = root_power(p, 0);
  for (int n = 0; n + 1 < s; ++n) m.act_f.at(n + 1, n) = one;
  return m;
}

ExactModule build_projective(int p, int alpha, int t) {
  if (p < 2) throw InvalidParameter("p must be >= 2");
  if (alpha != 1 && alpha != -1)
    throw InvalidParameter("alpha must be +1 or -1");
  if (t < 1 || t > p - 1)
    throw InvalidParameter("projective label must satisfy 1 <= t <= p-1");
  ExactModule m;
  m.p = p;
  m.kind = ModuleKind::Projective;
  m.alpha = alpha;
  m.s = t;
  const int dim = 2 * p;
  m.act_e = DenseMatrix<Cyclo>(dim, dim);
  m.act_f = DenseMatrix<Cyclo>(dim, dim);
  Cyclo one = root_power(p, 0);

  // Both tables use the parameter s with ladders x_k, y_k (0..p-s-1) and
  // a_n, b_n (0..s-1); the plus module is P^+(s) at s = t, the minus module
  // is P^-(p-s), i.e. s = p - t.
  const int s = (alpha == 1) ? t : p - t;
  const int X = 0, Y = p - s, A = 2 * (p - s), B = 2 * (p - s) + s;

  if (alpha == 1) {
    // Lifts from Y(2p-s, p-s): x_k ~ c_k, a_n ~ c_{n+p-s}, b_n ~ d_n,
    // y_k ~ d_{k+s}.
    push_ladder(m, "x", p - s, 2 * p - s - 1);
    push_ladder(m, "y", p - s, -s - 1);
    push_ladder(m, "a", s, s - 1);
    push_ladder(m, "b", s, s - 1);
  } else {
    // Lifts from Y(s, s): a_n ~ c_n, x_k ~ c_{k+s}, y_k ~ d_k,
    // b_n ~ d_{n+p-s}.
    push_ladder(m, "x", p - s, -s - 1);
    push_ladder(m, "y", p - s, -s - 1);
    push_ladder(m, "a", s, s - 1);
    push_ladder(m, "b", s, s - 1 - 2 * p);
  }

  // E on the x ladder: E x_k = -[k][p-s-k] x_{k-1}.
  for (int k = 1; k < p - s; ++k)
    m.act_e.at(X + k - 1, X + k) = -(qi(p, k) * qi(p, p - s - k));
  // E on the y ladder: same coefficients; minus module adds + x_{k-1}.
  for (int k = 1; k < p - s; ++k) {
    m.act_e.at(Y + k - 1, Y + k) = -(qi(p, k) * qi(p, p - s - k));
    if (alpha == -1) m.act_e.at(X + k - 1, Y + k) = one;
  }
  m.act_e.at(A + s - 1, Y + 0) = one;  // E y_0 = a_{s-1}
  // E on the a ladder: E a_n = [n][s-n] a_{n-1}.
  for (int n = 1; n < s; ++n)
    m.act_e.at(A + n - 1, A + n) = qi(p, n) * qi(p, s - n);
  // E on the b ladder: same coefficients; plus module adds + a_{n-1}.
  for (int n = 1; n < s; ++n) {
    m.act_e.at(B + n - 1, B + n) = qi(p, n) * qi(p, s - n);
    if (alpha == 1) m.act_e.at(A + n - 1, B + n) = one;
  }
  m.act_e.at(X + (p - s) - 1, B + 0) = one;  // E b_0 = x_{p-s-1}

  // F ladders.
  for (int k = 0; k + 1 < p - s; ++k) {
    m.act_f.at(X + k + 1, X + k) = one;
    m.act_f.at(Y + k + 1, Y + k) = one;
  }
  for (int n = 0; n + 1 < s; ++n) {
    m.act_f.at(A + n + 1, A + n) = one;
    m.act_f.at(B + n + 1, B + n) = one;
  }
  if (alpha == 1) {
    m.act_f.at(A + 0, X + (p - s) - 1) = one;  // F x_{p-s-1} = a_0
    m.act_f.at(Y + 0, B + s - 1) = one;        // F b_{s-1} = y_0
  } else {
    m.act_f.at(B + 0, Y + (p - s) - 1) = one;  // F y_{p-s-1} = b_0
    m.act_f.at(X + 0, A + s - 1) = one;        // F a_{s-1} = x_0
  }
  return m;
}

DenseMatrix<Cyclo> radical_map(const ExactModule& m) {
  if (m.kind != ModuleKind::Projective)
    throw InvalidParameter("radical map needs a projective cover");
  Cyclo one = Cyclo::from_rational(CycloRing::get(m.p), BigRat(1));
  DenseMatrix<Cyclo> n(m.dim(), m.dim());
  const char* from = (m.alpha == 1) ? "b" : "y";
  const char* to = (m.alpha == 1) ? "a" : "x";
  for (int j = 0; j < m.s; ++j)
    n.at(m.index_of(to + std::to_string(j)),
         m.index_of(from + std::to_string(j))) = one;
  return n;
}

}  // namespace logknot
