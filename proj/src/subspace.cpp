#include "modlab/subspace.hpp"

#include "modlab/errors.hpp"

namespace modlab {

Subspace::Subspace(PrimeField f, int ambient_dim)
    : ambient_(ambient_dim), basis_(f, 0, ambient_dim) {
  if (ambient_dim < 0) throw SpecError("negative ambient dimension");
}

Subspace Subspace::from_rows(const Mat& rows) {
  auto r = rref(rows);
  Subspace s(rows.field(), rows.cols());
  Mat b(rows.field(), r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i) b.set_row(i, r.reduced.row(i));
  s.basis_ = std::move(b);
  s.pivots_ = std::move(r.pivot_cols);
  return s;
}

Subspace Subspace::full(PrimeField f, int n) {
  return from_rows(Mat::identity(f, n));
}

std::vector<uint8_t> Subspace::reduce(const std::vector<uint8_t>& v) const {
  if (int(v.size()) != ambient_) throw SpecError("vector length mismatch");
  const PrimeField& f = field();
  std::vector<uint8_t> w = v;
  for (int r = 0; r < dim(); ++r) {
    int c = w[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j)
      w[j] = uint8_t(f.sub(w[j], f.mul(c, basis_(r, j))));
  }
  return w;
}

bool Subspace::contains(const std::vector<uint8_t>& v) const {
  auto w = reduce(v);
  for (auto x : w)
    if (x) return false;
  return true;
}

std::vector<uint8_t> Subspace::coords(const std::vector<uint8_t>& v) const {
  if (int(v.size()) != ambient_) throw SpecError("vector length mismatch");
  const PrimeField& f = field();
  std::vector<uint8_t> w = v;
  std::vector<uint8_t> out(dim(), 0);
  for (int r = 0; r < dim(); ++r) {
    int c = w[pivots_[r]];
    out[r] = uint8_t(c);
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j)
      w[j] = uint8_t(f.sub(w[j], f.mul(c, basis_(r, j))));
  }
  for (auto x : w)
    if (x) throw SpecError("vector not contained in subspace");
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return a.basis_.data() <=> b.basis_.data();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw SpecError("subspace sum in different ambient spaces");
  return Subspace::from_rows(Mat::vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field()))
    throw SpecError("subspace intersection in different ambient spaces");
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.field(), u.ambient_dim());
  // Left kernel of the stacked bases: a row (a | b) with aU + bV = 0 gives
  // the intersection element aU = -bV, and every element arises this way.
  Mat stacked = Mat::vstack(u.basis(), v.basis());
  Subspace lk = left_kernel(stacked);
  Mat gens(u.field(), lk.dim(), u.ambient_dim());
  for (int r = 0; r < lk.dim(); ++r) {
    auto full = lk.basis().row(r);
    std::vector<uint8_t> a(full.begin(), full.begin() + u.dim());
    gens.set_row(r, u.basis().apply_row(a));
  }
  return Subspace::from_rows(gens);
}

bool is_subset(const Subspace& u, const Subspace& v) {
  for (int r = 0; r < u.dim(); ++r)
    if (!v.contains(u.basis().row(r))) return false;
  return true;
}

std::vector<std::vector<uint8_t>> enumerate_vectors(const Subspace& s,
                                                    uint64_t cap) {
  int p = s.field().modulus();
  int d = s.dim();
  // p^d with overflow guard; d is small in practice.
  uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > cap / p) throw CapExceeded("max_vectors", UINT64_MAX, cap);
    total *= uint64_t(p);
  }
  if (total > cap) throw CapExceeded("max_vectors", total, cap);
  std::vector<std::vector<uint8_t>> out;
  out.reserve(total);
  for (uint64_t k = 0; k < total; ++k)
    out.push_back(s.basis().apply_row(coeffs_from_index(k, d, p)));
  return out;
}

Subspace kernel(const Mat& m) {
  auto r = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  const PrimeField& f = m.field();
  Mat basis(f, n - r.rank, n);
  int row = 0;
  for (int fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    basis.set(row, fcol, 1);
    for (int pr = 0; pr < r.rank; ++pr)
      basis.set(row, r.pivot_cols[pr], f.neg(r.reduced(pr, fcol)));
    ++row;
  }
  return Subspace::from_rows(basis);
}

Subspace left_kernel(const Mat& m) { return kernel(m.transpose()); }

Subspace row_space(const Mat& m) { return Subspace::from_rows(m); }

Subspace column_space(const Mat& m) {
  return Subspace::from_rows(m.transpose());
}

}  // namespace modlab
