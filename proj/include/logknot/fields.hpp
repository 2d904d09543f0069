#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "logknot/cyclotomic.hpp"

namespace logknot {

// Control-flow signal: a fast-path value left the safe integer range. The
// contraction engine catches it and redoes the computation over Cyclo.
struct FastOverflow {};

// Cyclotomic integer numerator with fixed degree D = phi(4p) and int64
// coefficients; the denominator (a single BigInt scale) is tracked by the
// caller per operator application, not per element.
template <int D>
struct FastCyclo {
  std::array<std::int64_t, D> c{};
};

template <int D>
class FastRing {
 public:
  // Coefficients are kept within +-kCoeffBound so that products accumulate
  // in __int128 without wrapping: D * bound^2 * (1 + D * max_red) < 2^127.
  static constexpr std::int64_t kCoeffBound = std::int64_t(1) << 55;

  explicit FastRing(std::shared_ptr<const CycloRing> ring)
      : ring_(std::move(ring)) {
    if (ring_->degree() != D)
      throw InvalidParameter("fast ring degree mismatch");
    for (int r = D; r <= 2 * D - 2; ++r) {
      const std::vector<BigInt>& row = ring_->reduction_row(r);
      for (int k = 0; k < D; ++k) {
        BigInt v = k < int(row.size()) ? row[k] : BigInt(0);
        if (v > kCoeffBound || v < -kCoeffBound)
          throw InvalidParameter("reduction row exceeds fast range");
        red_[r - D][k] = std::int64_t(v);
      }
    }
  }

  const std::shared_ptr<const CycloRing>& exact_ring() const { return ring_; }

  static bool is_zero(const FastCyclo<D>& v) {
    for (int i = 0; i < D; ++i)
      if (v.c[i] != 0) return false;
    return true;
  }

  static void add_into(FastCyclo<D>& acc, const FastCyclo<D>& v) {
    for (int i = 0; i < D; ++i) {
      acc.c[i] += v.c[i];
      if (acc.c[i] > kCoeffBound || acc.c[i] < -kCoeffBound)
        throw FastOverflow{};
    }
  }

  void mul(const FastCyclo<D>& a, const FastCyclo<D>& b,
           FastCyclo<D>& out) const {
    __int128 acc[2 * D - 1] = {};
    for (int i = 0; i < D; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < D; ++j)
        acc[i + j] += __int128(a.c[i]) * b.c[j];
    }
    for (int r = 2 * D - 2; r >= D; --r) {
      __int128 v = acc[r];
      if (v == 0) continue;
      const std::int64_t* row = red_[r - D].data();
      for (int k = 0; k < D; ++k)
        if (row[k] != 0) acc[k] += v * row[k];
    }
    for (int k = 0; k < D; ++k) {
      if (acc[k] > kCoeffBound || acc[k] < -kCoeffBound) throw FastOverflow{};
      out.c[k] = std::int64_t(acc[k]);
    }
  }

  // x * scale must be an integer vector in range (callers pick scale as the
  // common denominator of an operator panel).
  FastCyclo<D> from_cyclo(const Cyclo& x, const BigInt& scale) const {
    FastCyclo<D> out{};
    if (x.is_zero()) return out;
    if (x.ring() && x.ring().get() != ring_.get())
      throw FieldMismatch("fast conversion across rings");
    BigInt q = scale / x.den();
    if (q * x.den() != scale)
      throw InvalidParameter("scale is not a multiple of the denominator");
    const std::vector<BigInt>& co = x.coeffs();
    for (int i = 0; i < int(co.size()) && i < D; ++i) {
      BigInt v = co[i] * q;
      if (v > kCoeffBound || v < -kCoeffBound) throw FastOverflow{};
      out.c[i] = std::int64_t(v);
    }
    return out;
  }

  // Reassemble the exact value v / den.
  Cyclo to_cyclo(const FastCyclo<D>& v, const BigInt& den) const {
    Cyclo out = Cyclo::from_rational(ring_, BigRat(0));
    Cyclo zeta = root_power(ring_, 1);
    // Horner over the power basis.
    for (int i = D - 1; i >= 0; --i) {
      out *= zeta;
      out += Cyclo::from_rational(ring_, BigRat(BigInt(v.c[i]), den));
    }
    return out;
  }

 private:
  std::shared_ptr<const CycloRing> ring_;
  std::array<std::array<std::int64_t, D>, D - 1> red_;
};

// phi(4p) when the fast backend supports it (degree <= 12), else 0.
inline int fast_degree(int p) {
  int d = CycloRing::get(p)->degree();
  return (d == 4 || d == 8 || d == 12) ? d : 0;
}

}  // namespace logknot
