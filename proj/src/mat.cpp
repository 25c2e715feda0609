#include "modlab/mat.hpp"

#include <sstream>

#include "modlab/errors.hpp"

namespace modlab {

Mat::Mat(PrimeField f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw SpecError("negative matrix dimension");
}

Mat::Mat(PrimeField f, int rows, int cols, std::vector<uint8_t> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw SpecError("negative matrix dimension");
  if (e_.size() != size_t(rows) * cols)
    throw SpecError("matrix entry count does not match shape");
  for (auto& x : e_) x = uint8_t(x % f.modulus());
}

Mat Mat::identity(PrimeField f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<std::vector<int>>& rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c)
      throw SpecError("ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[i][j]));
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw SpecError("shape mismatch in matrix addition");
  Mat r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = uint8_t(field_.add(e_[k], o.e_[k]));
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw SpecError("shape mismatch in matrix subtraction");
  Mat r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = uint8_t(field_.sub(e_[k], o.e_[k]));
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw SpecError("shape mismatch in matrix product");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        int v = r(i, j) + a * o(k, j);
        r.e_[size_t(i) * o.cols_ + j] = uint8_t(v % field_.modulus());
      }
    }
  }
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.e_ == b.e_;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
  return r;
}

Mat Mat::scaled(int c) const {
  c = field_.reduce(c);
  Mat r(field_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = uint8_t(field_.mul(e_[k], c));
  return r;
}

bool Mat::is_zero() const {
  for (auto x : e_)
    if (x) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<uint8_t> Mat::row(int i) const {
  return std::vector<uint8_t>(e_.begin() + size_t(i) * cols_,
                              e_.begin() + size_t(i + 1) * cols_);
}

void Mat::set_row(int i, const std::vector<uint8_t>& v) {
  if (int(v.size()) != cols_) throw SpecError("row length mismatch");
  for (int j = 0; j < cols_; ++j) set(i, j, v[j]);
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  if (top.cols_ != bottom.cols_ || !(top.field_ == bottom.field_))
    throw SpecError("shape mismatch in vstack");
  Mat r(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.e_.begin(), top.e_.end(), r.e_.begin());
  std::copy(bottom.e_.begin(), bottom.e_.end(),
            r.e_.begin() + top.e_.size());
  return r;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
  if (left.rows_ != right.rows_ || !(left.field_ == right.field_))
    throw SpecError("shape mismatch in hstack");
  Mat r(left.field_, left.rows_, left.cols_ + right.cols_);
  for (int i = 0; i < left.rows_; ++i) {
    for (int j = 0; j < left.cols_; ++j) r.set(i, j, left(i, j));
    for (int j = 0; j < right.cols_; ++j)
      r.set(i, left.cols_ + j, right(i, j));
  }
  return r;
}

std::vector<uint8_t> Mat::apply_row(const std::vector<uint8_t>& v) const {
  if (int(v.size()) != rows_) throw SpecError("row vector length mismatch");
  std::vector<uint8_t> out(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j)
      out[j] = uint8_t((out[j] + v[i] * (*this)(i, j)) % field_.modulus());
  }
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << int((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Mat& m) {
  Mat r = m;
  const PrimeField& f = r.field();
  std::vector<int> pivots;
  int prow = 0;
  for (int col = 0; col < r.cols() && prow < r.rows(); ++col) {
    int sel = -1;
    for (int i = prow; i < r.rows(); ++i)
      if (r(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow) {
      auto a = r.row(prow), b = r.row(sel);
      r.set_row(prow, b);
      r.set_row(sel, a);
    }
    int piv = f.inv(r(prow, col));
    for (int j = col; j < r.cols(); ++j)
      r.set(prow, j, f.mul(r(prow, j), piv));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == prow) continue;
      int c = r(i, col);
      if (c == 0) continue;
      for (int j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r(i, j), f.mul(c, r(prow, j))));
    }
    pivots.push_back(col);
    ++prow;
  }
  return RrefResult{std::move(r), prow, std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> solve_right(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw SpecError("shape mismatch in solve");
  auto aug = rref(Mat::hstack(A, B));
  int n = A.cols();
  // A pivot landing in the augmented block means inconsistency.
  for (int c : aug.pivot_cols)
    if (c >= n) return std::nullopt;
  Mat X(A.field(), n, B.cols());
  for (size_t r = 0; r < aug.pivot_cols.size(); ++r) {
    int pc = aug.pivot_cols[r];
    for (int j = 0; j < B.cols(); ++j)
      X.set(pc, j, aug.reduced(int(r), n + j));
  }
  return X;
}

std::optional<Mat> solve_left(const Mat& A, const Mat& B) {
  auto t = solve_right(A.transpose(), B.transpose());
  if (!t) return std::nullopt;
  return t->transpose();
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_right(m, Mat::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((*x * m).is_identity())) return std::nullopt;
  return x;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

std::vector<uint8_t> coeffs_from_index(uint64_t k, int len, int p) {
  std::vector<uint8_t> c(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    c[i] = uint8_t(k % p);
    k /= p;
  }
  return c;
}

}  // namespace modlab
