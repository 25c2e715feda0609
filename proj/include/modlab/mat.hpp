#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "modlab/gf.hpp"

namespace modlab {

// Dense matrix over GF(p). Entries are reduced residues stored row-major as
// uint8_t (p <= 97 fits). Zero-row and zero-column shapes are legal so that
// the zero module and empty systems need no special cases.
class Mat {
 public:
  Mat(PrimeField f, int rows, int cols);
  Mat(PrimeField f, int rows, int cols, std::vector<uint8_t> entries);

  static Mat identity(PrimeField f, int n);
  static Mat from_rows(PrimeField f,
                       const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  uint8_t operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
  void set(int i, int j, int v) {
    e_[size_t(i) * cols_ + j] = uint8_t(field_.reduce(v));
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  friend bool operator==(const Mat&, const Mat&);

  Mat transpose() const;
  Mat scaled(int c) const;
  bool is_zero() const;
  bool is_identity() const;

  std::vector<uint8_t> row(int i) const;
  void set_row(int i, const std::vector<uint8_t>& v);

  // Rows stacked on top of each other / side by side.
  static Mat vstack(const Mat& top, const Mat& bottom);
  static Mat hstack(const Mat& left, const Mat& right);

  // v * this for a row vector v of length rows().
  std::vector<uint8_t> apply_row(const std::vector<uint8_t>& v) const;

  std::string to_string() const;

  const std::vector<uint8_t>& data() const { return e_; }

 private:
  PrimeField field_;
  int rows_, cols_;
  std::vector<uint8_t> e_;
};

struct RrefResult {
  Mat reduced;
  int rank;
  std::vector<int> pivot_cols;  // one per nonzero row, ascending
};

// Unique reduced row echelon form: pivots 1, pivot columns cleared, zero rows
// at the bottom.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

// Particular solution with zeros in the coordinates not determined by pivots.
// Solves X * A = B for a row-vector system (rows of X pair with rows of B).
// Returned X has B.rows() x A.rows(). nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& A, const Mat& B);

// Solves A * X = B. X is A.cols() x B.cols(), zeros in free coordinates.
std::optional<Mat> solve_right(const Mat& A, const Mat& B);

std::optional<Mat> inverse(const Mat& m);
bool is_invertible(const Mat& m);

// Coefficient tuple number k in the fixed enumeration order: tuples are
// ordered lexicographically, last coordinate varying fastest. Digit i of k in
// base p, most significant first.
std::vector<uint8_t> coeffs_from_index(uint64_t k, int len, int p);

}  // namespace modlab
