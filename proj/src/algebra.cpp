#include "modlab/algebra.hpp"

#include <algorithm>
#include <set>

#include "modlab/errors.hpp"

namespace modlab {

std::string label_name(Label l) {
  return "e(" + std::to_string(l.row) + "," + std::to_string(l.col) + ")";
}

PosetPattern PosetPattern::make(int size, std::vector<Label> given) {
  if (size < 1) throw SpecError("pattern size must be at least 1");
  for (int i = 1; i <= size; ++i) given.push_back({i, i});
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  std::set<Label> have(given.begin(), given.end());
  for (const Label& l : given) {
    if (l.row < 1 || l.row > size || l.col < 1 || l.col > size)
      throw SpecError("pattern pair " + label_name(l) + " out of range 1.." +
                      std::to_string(size));
    if (l.row != l.col && have.count({l.col, l.row}))
      throw SpecError("pattern is not antisymmetric: both " + label_name(l) +
                      " and " + label_name({l.col, l.row}) + " given");
  }
  for (const Label& a : given)
    for (const Label& b : given) {
      if (a.col != b.row) continue;
      if (!have.count({a.row, b.col}))
        throw SpecError("pattern is not transitive: " + label_name(a) +
                        " and " + label_name(b) + " need " +
                        label_name({a.row, b.col}));
    }
  PosetPattern p;
  p.size = size;
  p.pairs = std::move(given);
  return p;
}

int FiniteAlgebra::label_index(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return -1;
  return int(it - labels_.begin());
}

std::vector<uint8_t> FiniteAlgebra::multiply(
    const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) const {
  if (int(x.size()) != dim() || int(y.size()) != dim())
    throw SpecError("algebra element has wrong coordinate length");
  const PrimeField& f = field_;
  std::vector<uint8_t> out(dim(), 0);
  for (int a = 0; a < dim(); ++a) {
    if (!x[a]) continue;
    for (int b = 0; b < dim(); ++b) {
      if (!y[b]) continue;
      int c = mult_[a][b];
      if (c < 0) continue;
      out[c] = uint8_t(f.add(out[c], f.mul(x[a], y[b])));
    }
  }
  return out;
}

int FiniteAlgebra::diagonal_index(int vertex) const {
  return label_index({vertex, vertex});
}

std::vector<uint8_t> FiniteAlgebra::unit() const {
  std::vector<uint8_t> u(dim(), 0);
  for (int v : vertices_) u[diagonal_index(v)] = 1;
  return u;
}

Subspace FiniteAlgebra::radical() const {
  int n = 0;
  for (int a = 0; a < dim(); ++a)
    if (!is_diagonal(a)) ++n;
  Mat gens(field_, n, dim());
  int r = 0;
  for (int a = 0; a < dim(); ++a)
    if (!is_diagonal(a)) gens.set(r++, a, 1);
  return Subspace::from_rows(gens);
}

Mat FiniteAlgebra::right_mult_matrix(int a) const {
  Mat m(field_, dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    int c = mult_[k][a];
    if (c >= 0) m.set(k, c, 1);
  }
  return m;
}

Mat FiniteAlgebra::left_mult_matrix(int a) const {
  Mat m(field_, dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    int c = mult_[a][k];
    if (c >= 0) m.set(k, c, 1);
  }
  return m;
}

namespace {
std::vector<int> surviving_vertices(const std::vector<Label>& labels) {
  std::vector<int> v;
  for (const Label& l : labels)
    if (l.row == l.col) v.push_back(l.row);
  return v;
}
}  // namespace

AlgebraPtr FiniteAlgebra::from_tables(PrimeField f, int size,
                                      std::vector<Label> labels,
                                      std::vector<std::vector<int>> mult) {
  auto a = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra(f));
  a->size_ = size;
  a->labels_ = std::move(labels);
  a->mult_ = std::move(mult);
  a->vertices_ = surviving_vertices(a->labels_);
  return a;
}

AlgebraPtr algebra_from_pattern(const PosetPattern& pattern, int p) {
  PrimeField f(p);
  auto a = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra(f));
  a->size_ = pattern.size;
  a->labels_ = pattern.pairs;
  int d = a->dim();
  a->mult_.assign(d, std::vector<int>(d, -1));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (a->labels_[x].col != a->labels_[y].row) continue;
      a->mult_[x][y] =
          a->label_index({a->labels_[x].row, a->labels_[y].col});
    }
  a->vertices_ = surviving_vertices(a->labels_);
  return a;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->field().modulus() != b->field().modulus()) return false;
  if (a->labels() != b->labels()) return false;
  for (int x = 0; x < a->dim(); ++x)
    for (int y = 0; y < a->dim(); ++y)
      if (a->product(x, y) != b->product(x, y)) return false;
  return true;
}

AlgebraPtr quotient_algebra(const AlgebraPtr& a, const MonomialIdeal& ideal) {
  std::set<int> gone;
  for (const Label& l : ideal.labels) {
    int idx = a->label_index(l);
    if (idx < 0)
      throw SpecError("ideal label " + label_name(l) +
                      " is not a basis element");
    gone.insert(idx);
  }
  // Two-sided closure audit.
  for (int s : gone)
    for (int b = 0; b < a->dim(); ++b) {
      int sb = a->product(s, b);
      if (sb >= 0 && !gone.count(sb))
        throw SpecError("ideal not closed: " + label_name(a->labels()[s]) +
                        " * " + label_name(a->labels()[b]) + " = " +
                        label_name(a->labels()[sb]) + " is outside");
      int bs = a->product(b, s);
      if (bs >= 0 && !gone.count(bs))
        throw SpecError("ideal not closed: " + label_name(a->labels()[b]) +
                        " * " + label_name(a->labels()[s]) + " = " +
                        label_name(a->labels()[bs]) + " is outside");
    }
  std::vector<Label> kept;
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(a->dim(), -1);
  for (int i = 0; i < a->dim(); ++i) {
    if (gone.count(i)) continue;
    new_of_old[i] = int(kept.size());
    kept.push_back(a->labels()[i]);
    old_of_new.push_back(i);
  }
  bool any_vertex = false;
  for (const Label& l : kept)
    if (l.row == l.col) any_vertex = true;
  if (!any_vertex)
    throw SpecError("quotient would remove every idempotent");
  int d = int(kept.size());
  std::vector<std::vector<int>> mult(d, std::vector<int>(d, -1));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int z = a->product(old_of_new[x], old_of_new[y]);
      if (z >= 0) mult[x][y] = new_of_old[z];  // -1 when z fell in the ideal
    }
  return FiniteAlgebra::from_tables(a->field(), a->pattern_size(),
                                    std::move(kept), std::move(mult));
}

AlgebraCheck verify_algebra(const FiniteAlgebra& a) {
  AlgebraCheck out;
  auto fail = [&out](std::string msg) {
    out.ok = false;
    out.problems.push_back(std::move(msg));
  };
  int d = a.dim();
  const auto& ls = a.labels();
  // Label list must be sorted, unique, in range, with closed endpoints.
  for (int i = 0; i + 1 < d; ++i)
    if (!(ls[i] < ls[i + 1])) fail("labels not sorted or not unique");
  std::set<Label> have(ls.begin(), ls.end());
  for (const Label& l : ls) {
    if (l.row < 1 || l.col < 1 || l.row > a.pattern_size() ||
        l.col > a.pattern_size())
      fail("label " + label_name(l) + " out of range");
    if (!have.count({l.row, l.row}) || !have.count({l.col, l.col}))
      fail("label " + label_name(l) + " references a missing vertex");
    if (l.row != l.col && have.count({l.col, l.row}))
      fail("labels " + label_name(l) + " and " + label_name({l.col, l.row}) +
           " break antisymmetry");
  }
  // Monomial shape.
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int z = a.product(x, y);
      if (z < -1 || z >= d) {
        fail("product table entry out of range");
        continue;
      }
      if (ls[x].col != ls[y].row) {
        if (z != -1)
          fail("product " + label_name(ls[x]) + " * " + label_name(ls[y]) +
               " should vanish");
      } else if (z != -1 && ls[z] != Label{ls[x].row, ls[y].col}) {
        fail("product " + label_name(ls[x]) + " * " + label_name(ls[y]) +
             " lands on the wrong label");
      }
    }
  // Associativity over all basis triples, zero treated as absorbing. Stop at
  // the first offender; one witness is enough.
  bool assoc_ok = true;
  for (int x = 0; x < d && assoc_ok; ++x)
    for (int y = 0; y < d && assoc_ok; ++y)
      for (int z = 0; z < d && assoc_ok; ++z) {
        int xy = a.product(x, y);
        int yz = a.product(y, z);
        int l = xy < 0 ? -1 : a.product(xy, z);
        int r = yz < 0 ? -1 : a.product(x, yz);
        if (l != r) {
          fail("associativity fails at " + label_name(ls[x]) + ", " +
               label_name(ls[y]) + ", " + label_name(ls[z]));
          assoc_ok = false;
        }
      }
  // Unit and idempotents.
  {
    auto u = a.unit();
    for (int x = 0; x < d; ++x) {
      std::vector<uint8_t> ex(d, 0);
      ex[x] = 1;
      if (a.multiply(u, ex) != ex || a.multiply(ex, u) != ex)
        fail("unit fails on " + label_name(ls[x]));
    }
    for (int v : a.vertices()) {
      int i = a.diagonal_index(v);
      if (a.product(i, i) != i)
        fail("diagonal " + label_name(ls[i]) + " is not idempotent");
    }
  }
  return out;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  int d = a->dim();
  std::vector<Label> flipped(d);
  for (int i = 0; i < d; ++i)
    flipped[i] = {a->labels()[i].col, a->labels()[i].row};
  // Sort the transposed labels and remember where each came from.
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return flipped[x] < flipped[y]; });
  std::vector<Label> labels(d);
  std::vector<int> new_of_old(d);
  for (int n = 0; n < d; ++n) {
    labels[n] = flipped[order[n]];
    new_of_old[order[n]] = n;
  }
  std::vector<std::vector<int>> mult(d, std::vector<int>(d, -1));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int z = a->product(order[y], order[x]);  // reversed product
      if (z >= 0) mult[x][y] = new_of_old[z];
    }
  return FiniteAlgebra::from_tables(a->field(), a->pattern_size(),
                                    std::move(labels), std::move(mult));
}

}  // namespace modlab
