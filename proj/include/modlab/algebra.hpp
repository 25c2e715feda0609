#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "modlab/mat.hpp"
#include "modlab/subspace.hpp"

namespace modlab {

// Matrix-unit label e_(row,col). Vertices are 1-based.
struct Label {
  int row = 0;
  int col = 0;
  auto operator<=>(const Label&) const = default;
};

std::string label_name(Label l);

// Reflexive, antisymmetric, transitive relation on {1..size}. The diagonal
// is added automatically; antisymmetry and transitivity violations are
// reported with the offending pairs.
struct PosetPattern {
  int size = 0;
  std::vector<Label> pairs;  // sorted, includes the diagonal

  static PosetPattern make(int size, std::vector<Label> given);
};

// Set of labels spanning a two-sided monomial ideal.
struct MonomialIdeal {
  std::vector<Label> labels;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Basic algebra with a monomial basis of matrix units: the product of two
// basis elements is another basis element or zero. Everything downstream
// (modules, hulls, censuses) works through this interface.
class FiniteAlgebra {
 public:
  const PrimeField& field() const { return field_; }
  int pattern_size() const { return size_; }
  int dim() const { return int(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  int label_index(Label l) const;  // -1 when absent

  // Index of basis[a] * basis[b], or -1 for zero.
  int product(int a, int b) const { return mult_[a][b]; }

  std::vector<uint8_t> multiply(const std::vector<uint8_t>& x,
                                const std::vector<uint8_t>& y) const;

  // Vertices i whose idempotent e_(i,i) survives, ascending.
  const std::vector<int>& vertices() const { return vertices_; }
  int diagonal_index(int vertex) const;  // index of e_(v,v), -1 when gone

  std::vector<uint8_t> unit() const;  // coordinates of 1 = sum of idempotents
  bool is_diagonal(int a) const {
    return labels_[a].row == labels_[a].col;
  }

  // Jacobson radical: the span of the off-diagonal labels.
  Subspace radical() const;

  // Matrix of x -> x * basis[a] on coordinate row vectors.
  Mat right_mult_matrix(int a) const;
  // Matrix of x -> basis[a] * x.
  Mat left_mult_matrix(int a) const;

  // Raw constructor used by the verifier tests to build corrupted tables.
  // mult[a][b] is a basis index or -1.
  static AlgebraPtr from_tables(PrimeField f, int size,
                                std::vector<Label> labels,
                                std::vector<std::vector<int>> mult);

 private:
  FiniteAlgebra(PrimeField f) : field_(f) {}

  PrimeField field_;
  int size_ = 0;
  std::vector<Label> labels_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> vertices_;

  friend AlgebraPtr algebra_from_pattern(const PosetPattern&, int);
};

AlgebraPtr algebra_from_pattern(const PosetPattern& pattern, int p);

// Same handle, or same field, labels and multiplication table. Separately
// built copies of one pattern algebra count as equal.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Quotient by a monomial ideal. The label set must be closed under left and
// right multiplication by basis elements and at least one vertex must
// survive; violations raise SpecError naming the products at fault.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, const MonomialIdeal& ideal);

struct AlgebraCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Exhaustive audit of the multiplication table: monomial shape,
// associativity over all triples, unit behavior, idempotent diagonal,
// antisymmetry. Runs on anything from_tables can produce.
AlgebraCheck verify_algebra(const FiniteAlgebra& a);

// Same basis with reversed multiplication; labels are transposed so the
// result is again a pattern algebra.
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

// Serial means every indecomposable projective has a unique composition
// series. Implemented in module.cpp via radical layers.
bool is_right_serial(const AlgebraPtr& a);
bool is_left_serial(const AlgebraPtr& a);

}  // namespace modlab
