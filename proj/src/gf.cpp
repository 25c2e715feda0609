#include "modlab/gf.hpp"

#include "modlab/errors.hpp"

namespace modlab {

namespace {
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw SpecError("field size must be a prime in [2, 97], got " +
                    std::to_string(p));
}

int PrimeField::inv(int a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) throw SpecError("division by zero in GF(p)");
  // Fermat: a^(p-2). p <= 97 so a plain loop is fine.
  int r = 1;
  for (int e = 0; e < p_ - 2; ++e) r = (r * a) % p_;
  return r;
}

}  // namespace modlab
