#include "logknot/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace logknot {
namespace {

using Poly = std::vector<BigInt>;  // coefficient of x^k at [k]

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Exact division of integer polynomials (remainder known to vanish).
Poly poly_divide_exact(Poly num, const Poly& den) {
  int dn = poly_deg(num), dd = poly_deg(den);
  if (dd < 0) throw DivisionByZero("polynomial division by zero");
  Poly q(dn - dd + 1 > 0 ? dn - dd + 1 : 0, BigInt(0));
  for (int k = dn - dd; k >= 0; --k) {
    BigInt c = num[k + dd] / den[dd];
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  return q;
}

// Cyclotomic polynomial Phi_n, memoized.
const Poly& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const Poly&(int)> rec = [&](int m) -> const Poly& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    Poly q(m + 1, BigInt(0));
    q[0] = -1;
    q[m] = 1;  // x^m - 1
    for (int d = 1; d < m; ++d)
      if (m % d == 0) q = poly_divide_exact(std::move(q), rec(d));
    return cache.emplace(m, std::move(q)).first->second;
  };
  return rec(n);
}

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace

CycloRing::CycloRing(int p) : p_(p) {
  if (p < 2) throw InvalidParameter("root order parameter p must be >= 2");
  const Poly& phi = cyclotomic_poly(4 * p);
  degree_ = poly_deg(phi);
  modulus_.assign(phi.begin(), phi.begin() + degree_ + 1);
  // x^r mod Phi for r = degree .. 2*degree-2.
  reduction_rows_.resize(degree_ - 1 > 0 ? degree_ - 1 : 0);
  Poly cur(degree_, BigInt(0));  // x^degree ≡ -(low part) since Phi is monic
  for (int j = 0; j < degree_; ++j) cur[j] = -modulus_[j];
  for (int r = degree_; r <= 2 * degree_ - 2; ++r) {
    reduction_rows_[r - degree_] = cur;
    if (r == 2 * degree_ - 2) break;
    // multiply by x, fold the top coefficient back in
    BigInt top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j) cur[j] -= top * modulus_[j];
  }
}

std::shared_ptr<const CycloRing> CycloRing::get(int p) {
  static std::map<int, std::shared_ptr<const CycloRing>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto ring = std::shared_ptr<const CycloRing>(new CycloRing(p));
  cache.emplace(p, ring);
  return ring;
}

Cyclo::Cyclo(std::shared_ptr<const CycloRing> ring, std::vector<BigInt> coeffs,
             BigInt den)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), den_(std::move(den)) {
  if (!ring_) throw InvalidParameter("cyclotomic value needs a ring");
  if (den_ == 0) throw DivisionByZero("zero denominator");
  normalize();
}

void Cyclo::normalize() {
  if (!ring_) {
    coeffs_.clear();
    den_ = 1;
    return;
  }
  const int deg = ring_->degree();
  // Reduce arbitrary-degree input by long division by the monic modulus.
  const auto& mod = ring_->modulus();
  for (int k = poly_deg(coeffs_); k >= deg; --k) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    coeffs_[k] = 0;
    for (int j = 0; j < deg; ++j) coeffs_[k - deg + j] -= c * mod[j];
  }
  coeffs_.resize(deg, BigInt(0));
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : coeffs_) c = -c;
  }
  BigInt g = den_;
  for (const auto& c : coeffs_) {
    g = gcd_big(g, c);
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : coeffs_) c /= g;
  }
  bool zero = std::all_of(coeffs_.begin(), coeffs_.end(),
                          [](const BigInt& c) { return c == 0; });
  if (zero) den_ = 1;
}

Cyclo Cyclo::from_rational(const std::shared_ptr<const CycloRing>& ring,
                           const BigRat& r) {
  std::vector<BigInt> c(ring->degree(), BigInt(0));
  c[0] = numerator(r);
  return Cyclo(ring, std::move(c), denominator(r));
}

bool Cyclo::is_zero() const {
  if (!ring_) return true;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
  if (!ring_) return true;
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && !ring_) return *this = o;
  if (!o.ring_) return *this;
  if (!ring_) return *this = o;
  if (ring_->p() != o.ring_->p())
    throw FieldMismatch("adding values over different roots of unity");
  BigInt g = gcd_big(den_, o.den_);
  BigInt lm = den_ / g * o.den_;
  BigInt fa = lm / den_, fb = lm / o.den_;
  for (int j = 0; j < ring_->degree(); ++j)
    coeffs_[j] = coeffs_[j] * fa + o.coeffs_[j] * fb;
  den_ = lm;
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (is_zero() || o.is_zero()) {
    auto ring = ring_ ? ring_ : o.ring_;
    if (ring)
      *this = Cyclo(ring, std::vector<BigInt>(ring->degree(), BigInt(0)), 1);
    else
      *this = Cyclo();
    return *this;
  }
  if (ring_->p() != o.ring_->p())
    throw FieldMismatch("multiplying values over different roots of unity");
  const int deg = ring_->degree();
  std::vector<BigInt> conv(2 * deg - 1, BigInt(0));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<BigInt> out(conv.begin(), conv.begin() + deg);
  for (int r = deg; r <= 2 * deg - 2; ++r) {
    if (conv[r] == 0) continue;
    const auto& row = ring_->reduction_row(r);
    for (int j = 0; j < deg; ++j) out[j] += conv[r] * row[j];
  }
  coeffs_ = std::move(out);
  den_ *= o.den_;
  normalize();
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  bool az = a.is_zero(), bz = b.is_zero();
  if (az || bz) return az && bz;
  if (a.ring_->p() != b.ring_->p()) return false;
  return a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse(*this).pow(-e);
  if (!ring_) {
    if (e == 0) throw InvalidParameter("0^0 over null ring");
    return Cyclo();
  }
  Cyclo acc = Cyclo::from_rational(ring_, BigRat(1));
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclo root_power(const std::shared_ptr<const CycloRing>& ring, long j) {
  const long n = ring->order();
  long jm = ((j % n) + n) % n;
  std::vector<BigInt> c(jm + 1, BigInt(0));
  c[jm] = 1;
  return Cyclo(ring, std::move(c), 1);
}

Cyclo root_power(int p, long j) { return root_power(CycloRing::get(p), j); }

Cyclo quantum_integer(int p, long n) {
  auto ring = CycloRing::get(p);
  if (n == 0) return Cyclo::from_rational(ring, BigRat(0));
  bool neg = n < 0;
  long m = neg ? -n : n;
  // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m} with q = zeta^2
  Cyclo s = Cyclo::from_rational(ring, BigRat(0));
  for (long k = 0; k < m; ++k) s += root_power(ring, 2 * (m - 1 - 2 * k));
  return neg ? -s : s;
}

Cyclo quantum_factorial(int p, long n) {
  if (n < 0) throw InvalidParameter("quantum factorial of negative index");
  auto ring = CycloRing::get(p);
  Cyclo acc = Cyclo::from_rational(ring, BigRat(1));
  for (long k = 1; k <= n; ++k) acc *= quantum_integer(p, k);
  return acc;
}

Cyclo inverse(const Cyclo& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  const auto& ring = x.ring();
  const int deg = ring->degree();
  using RPoly = std::vector<BigRat>;
  auto rdeg = [](const RPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i] != 0) return i;
    return -1;
  };
  // Extended Euclid for gcd(a, Phi) = 1 = u*a + v*Phi; inverse = u.
  RPoly r0(deg + 1), r1(deg);
  for (int j = 0; j <= deg; ++j) r0[j] = BigRat(ring->modulus()[j]);
  for (int j = 0; j < deg; ++j) r1[j] = BigRat(x.coeffs()[j], x.den());
  RPoly u0{BigRat(0)}, u1{BigRat(1)};
  while (true) {
    int d1 = rdeg(r1);
    if (d1 < 0) throw DivisionByZero("non-invertible cyclotomic value");
    if (d1 == 0) break;
    int d0 = rdeg(r0);
    // r0 = q*r1 + rem; (u0,u1) tracks the Bezout coefficient of x
    RPoly q(d0 - d1 + 1, BigRat(0));
    RPoly rem = r0;
    for (int k = d0 - d1; k >= 0; --k) {
      BigRat c = rem[k + d1] / r1[d1];
      q[k] = c;
      if (c == 0) continue;
      for (int j = 0; j <= d1; ++j) rem[k + j] -= c * r1[j];
    }
    RPoly unew(std::max(u0.size(), q.size() + u1.size()), BigRat(0));
    for (size_t i = 0; i < u0.size(); ++i) unew[i] = u0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < u1.size(); ++j)
        if (q[i] != 0 && u1[j] != 0) unew[i + j] -= q[i] * u1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(unew);
  }
  // r1 is a nonzero constant c; inverse = u1 / c reduced mod Phi.
  BigRat c = r1[0];
  BigInt den(1);
  for (auto& v : u1) {
    v /= c;
    den = den / gcd_big(den, denominator(v)) * denominator(v);
  }
  std::vector<BigInt> coeffs(u1.size(), BigInt(0));
  for (size_t j = 0; j < u1.size(); ++j)
    coeffs[j] = numerator(u1[j]) * (den / denominator(u1[j]));
  return Cyclo(ring, std::move(coeffs), den);
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    BigInt num = coeffs_[j];
    BigInt g = gcd_big(num, den_);
    BigInt n = num / g, d = den_ / g;
    bool neg = n < 0;
    if (neg) n = -n;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (n == 1 && d == 1);
    if (!unit_coeff || j == 0) {
      os << n;
      if (d != 1) os << "/" << d;
      if (j > 0) os << "*";
    }
    if (j == 1)
      os << "z";
    else if (j > 1)
      os << "z^" << j;
  }
  return os.str();
}

Cyclo parse_cyclo(int p, const std::string& text) {
  auto ring = CycloRing::get(p);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto parse_uint = [&]() -> BigInt {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) throw ParseError("expected integer at position " +
                                     std::to_string(start) + " in '" + text + "'");
    return BigInt(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cyclotomic literal");
  bool any = false;
  std::vector<std::pair<long, BigRat>> terms;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) +
                       " in '" + text + "'");
    }
    BigRat coeff(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      BigInt n = parse_uint();
      BigInt d(1);
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        d = parse_uint();
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
      }
      coeff = BigRat(n, d);
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long power = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        power = static_cast<long>(parse_uint());
      }
    } else if (!have_coeff) {
      throw ParseError("expected term at position " + std::to_string(i) +
                       " in '" + text + "'");
    }
    terms.emplace_back(power, sign < 0 ? -coeff : coeff);
    any = true;
  }
  if (!any) throw ParseError("empty cyclotomic literal");
  Cyclo result = Cyclo::from_rational(ring, BigRat(0));
  for (auto& [power, c] : terms) {
    Cyclo t = root_power(ring, power);
    result += t * Cyclo::from_rational(ring, c);
  }
  return result;
}

}  // namespace logknot
