#include "logknot/braiding.hpp"

namespace logknot {

Cyclo braiding_coefficient(int p, int n) {
  if (n < 0 || n >= p)
    throw InvalidParameter("braiding coefficient index out of range");
  auto ring = CycloRing::get(p);
  Cyclo q = root_power(ring, 2);
  Cyclo qdiff = q - root_power(ring, -2);
  Cyclo out = Cyclo::from_rational(ring, BigRat(1));
  for (int k = 0; k < n; ++k) out *= qdiff;
  out *= root_power(ring, n * (n - 1));  // q^{n(n-1)/2} = zeta^{n(n-1)}
  if (n > 0) out *= inverse(quantum_factorial(p, n));
  return out;
}

}  // namespace logknot
