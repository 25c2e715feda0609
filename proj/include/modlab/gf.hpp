#pragma once

#include <compare>
#include <cstdint>

namespace modlab {

// Arithmetic in GF(p) for a prime p with 2 <= p <= 97. Elements are the
// residues 0..p-1 stored as plain ints; every operation returns a reduced
// residue.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int modulus() const { return p_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }
  int inv(int a) const;  // throws SpecError on 0
  int reduce(long long a) const {
    int r = static_cast<int>(a % p_);
    return r < 0 ? r + p_ : r;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

}  // namespace modlab
