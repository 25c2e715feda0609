#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "modlab/caps.hpp"
#include "modlab/mat.hpp"

namespace modlab {

// Subspace of the row space GF(p)^n, held in canonical form: the basis is the
// reduced row echelon form with zero rows dropped. Two subspaces are equal as
// sets iff their representations are equal, so operator== is set equality.
class Subspace {
 public:
  Subspace(PrimeField f, int ambient_dim);  // zero subspace
  static Subspace from_rows(const Mat& rows);
  static Subspace full(PrimeField f, int n);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  bool contains(const std::vector<uint8_t>& v) const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Residue of v after clearing every pivot coordinate; zero iff contained.
  std::vector<uint8_t> reduce(const std::vector<uint8_t>& v) const;

  // Coordinates of v in this basis; v must be contained.
  std::vector<uint8_t> coords(const std::vector<uint8_t>& v) const;

  friend bool operator==(const Subspace&, const Subspace&);
  // Deterministic total order: ambient, then dim, then entries
  // lexicographically. Used to sort lattices and dedup lists.
  friend std::strong_ordering operator<=>(const Subspace&, const Subspace&);

 private:
  int ambient_;
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool is_subset(const Subspace& u, const Subspace& v);

// All p^dim vectors of the subspace in the fixed coefficient order. Throws
// CapExceeded when the count would pass cap.
std::vector<std::vector<uint8_t>> enumerate_vectors(const Subspace& s,
                                                    uint64_t cap);

// Right null space {x : m x = 0}, returned as row vectors.
Subspace kernel(const Mat& m);
// Left null space {v : v m = 0}.
Subspace left_kernel(const Mat& m);
// Row space of m.
Subspace row_space(const Mat& m);
// Column space of m, as row vectors of length m.rows().
Subspace column_space(const Mat& m);

}  // namespace modlab
