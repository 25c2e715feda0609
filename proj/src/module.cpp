#include "modlab/module.hpp"

#include <algorithm>
#include <set>

#include "modlab/errors.hpp"
#include "modlab/exec.hpp"

namespace modlab {

Mat RightModule::action_of(const std::vector<uint8_t>& x) const {
  const auto& a = *algebra();
  if (int(x.size()) != a.dim())
    throw SpecError("algebra element has wrong coordinate length");
  Mat out(a.field(), dim(), dim());
  for (int i = 0; i < a.dim(); ++i)
    if (x[i]) out = out + action(i).scaled(x[i]);
  return out;
}

RightModule RightModule::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  RightModule m;
  m.impl_ = std::move(impl);
  return m;
}

RightModule make_module(AlgebraPtr a, std::vector<Mat> actions,
                        std::string name) {
  if (!a) throw SpecError("module needs an algebra");
  int d = a->dim();
  if (int(actions.size()) != d)
    throw SpecError("expected " + std::to_string(d) + " action matrices, got " +
                    std::to_string(actions.size()));
  int n = actions[0].rows();
  for (const Mat& m : actions) {
    if (m.rows() != n || m.cols() != n)
      throw SpecError("action matrices must be square of equal size");
    if (!(m.field() == a->field()))
      throw SpecError("action matrix field differs from the algebra");
  }
  // Unit acts as the identity.
  Mat unit(a->field(), n, n);
  for (int v : a->vertices()) unit = unit + actions[a->diagonal_index(v)];
  if (!unit.is_identity())
    throw SpecError("module axiom violated: the unit does not act as 1");
  // Products follow the table.
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int z = a->product(x, y);
      Mat lhs = actions[x] * actions[y];
      if (z >= 0 ? !(lhs == actions[z]) : !lhs.is_zero())
        throw SpecError("module axiom violated on " +
                        label_name(a->labels()[x]) + " * " +
                        label_name(a->labels()[y]));
    }
  auto impl = std::make_shared<RightModule::Impl>();
  impl->alg = std::move(a);
  impl->actions = std::move(actions);
  impl->name = std::move(name);
  RightModule m;
  m.impl_ = std::move(impl);
  return m;
}

RightModule zero_module(const AlgebraPtr& a) {
  std::vector<Mat> actions(a->dim(), Mat(a->field(), 0, 0));
  return make_module(a, std::move(actions), "0");
}

RightModule simple_module(const AlgebraPtr& a, int vertex) {
  if (a->diagonal_index(vertex) < 0)
    throw SpecError("no vertex " + std::to_string(vertex) + " in the algebra");
  std::vector<Mat> actions;
  for (int i = 0; i < a->dim(); ++i) {
    Mat m(a->field(), 1, 1);
    if (i == a->diagonal_index(vertex)) m.set(0, 0, 1);
    actions.push_back(m);
  }
  return make_module(a, std::move(actions),
                     "S(" + std::to_string(vertex) + ")");
}

RightModule regular_module(const AlgebraPtr& a) {
  std::vector<Mat> actions;
  for (int i = 0; i < a->dim(); ++i) actions.push_back(a->right_mult_matrix(i));
  return make_module(a, std::move(actions), "A");
}

RightModule projective_right(const AlgebraPtr& a, int vertex) {
  if (a->diagonal_index(vertex) < 0)
    throw SpecError("no vertex " + std::to_string(vertex) + " in the algebra");
  std::vector<int> rows;  // label indices in row `vertex`, in label order
  for (int i = 0; i < a->dim(); ++i)
    if (a->labels()[i].row == vertex) rows.push_back(i);
  int n = int(rows.size());
  std::vector<Mat> actions;
  for (int x = 0; x < a->dim(); ++x) {
    Mat m(a->field(), n, n);
    for (int r = 0; r < n; ++r) {
      int z = a->product(rows[r], x);
      if (z < 0) continue;
      auto it = std::lower_bound(rows.begin(), rows.end(), z);
      m.set(r, int(it - rows.begin()), 1);
    }
    actions.push_back(m);
  }
  return make_module(a, std::move(actions),
                     "P(" + std::to_string(vertex) + ")");
}

RightModule projective_left(const AlgebraPtr& a, int vertex) {
  auto m = projective_right(opposite_algebra(a), vertex);
  return m.renamed("P'(" + std::to_string(vertex) + ")");
}

RightModule direct_sum(const std::vector<RightModule>& parts) {
  if (parts.empty()) throw SpecError("direct sum needs at least one part");
  const AlgebraPtr& a = parts[0].algebra();
  int n = 0;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), a))
      throw SpecError("direct sum of modules over different algebras");
    n += p.dim();
  }
  std::vector<Mat> actions;
  std::string name;
  for (int x = 0; x < a->dim(); ++x) {
    Mat m(a->field(), n, n);
    int off = 0;
    for (const auto& p : parts) {
      const Mat& b = p.action(x);
      for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
          if (b(i, j)) m.set(off + i, off + j, b(i, j));
      off += p.dim();
    }
    actions.push_back(m);
  }
  for (size_t i = 0; i < parts.size(); ++i)
    name += (i ? "+" : "") + parts[i].name();
  return make_module(a, std::move(actions), name);
}

bool is_action_closed(const RightModule& m, const Subspace& s) {
  for (int a = 0; a < m.algebra()->dim(); ++a)
    for (int r = 0; r < s.dim(); ++r)
      if (!s.contains(m.act(s.basis().row(r), a))) return false;
  return true;
}

Submodule spin(const RightModule& m,
               const std::vector<std::vector<uint8_t>>& gens) {
  Mat rows(m.algebra()->field(), int(gens.size()), m.dim());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (int(gens[i].size()) != m.dim())
      throw SpecError("generator length does not match the module");
    rows.set_row(int(i), gens[i]);
  }
  Subspace s = Subspace::from_rows(rows);
  for (;;) {
    Subspace next = s;
    for (int r = 0; r < s.dim(); ++r)
      for (int a = 0; a < m.algebra()->dim(); ++a) {
        auto w = m.act(s.basis().row(r), a);
        Mat one(m.algebra()->field(), 1, m.dim());
        one.set_row(0, w);
        next = sum(next, Subspace::from_rows(one));
      }
    if (next == s) break;
    s = next;
  }
  return Submodule{m, s};
}

Submodule socle(const RightModule& m) {
  Subspace s = Subspace::full(m.algebra()->field(), m.dim());
  for (int a = 0; a < m.algebra()->dim(); ++a) {
    if (m.algebra()->is_diagonal(a)) continue;
    s = intersect(s, left_kernel(m.action(a)));
  }
  return Submodule{m, s};
}

Submodule radical_submodule(const RightModule& m) {
  Mat stacked(m.algebra()->field(), 0, m.dim());
  for (int a = 0; a < m.algebra()->dim(); ++a)
    if (!m.algebra()->is_diagonal(a)) stacked = Mat::vstack(stacked, m.action(a));
  return Submodule{m, Subspace::from_rows(stacked)};
}

namespace {
// W * J as a subspace, for an action-closed W.
Subspace times_radical(const RightModule& m, const Subspace& w) {
  Mat rows(m.algebra()->field(), 0, m.dim());
  for (int a = 0; a < m.algebra()->dim(); ++a) {
    if (m.algebra()->is_diagonal(a)) continue;
    Mat img(m.algebra()->field(), w.dim(), m.dim());
    for (int r = 0; r < w.dim(); ++r)
      img.set_row(r, m.act(w.basis().row(r), a));
    rows = Mat::vstack(rows, img);
  }
  return Subspace::from_rows(rows);
}
}  // namespace

std::vector<Subspace> radical_series(const RightModule& m) {
  std::vector<Subspace> out;
  Subspace cur = Subspace::full(m.algebra()->field(), m.dim());
  out.push_back(cur);
  while (cur.dim() > 0) {
    cur = times_radical(m, cur);
    out.push_back(cur);
  }
  return out;
}

std::vector<Subspace> socle_series(const RightModule& m) {
  std::vector<Subspace> out;
  Subspace cur(m.algebra()->field(), m.dim());
  out.push_back(cur);
  while (cur.dim() < m.dim()) {
    // Preimage of Soc(M/cur) under the projection.
    auto [q, proj] = quotient_module(m, cur);
    Subspace qsoc = socle(q).space;
    Mat to_residue = proj * quotient_projection(qsoc);
    cur = left_kernel(to_residue);
    out.push_back(cur);
  }
  return out;
}

int composition_length(const RightModule& m) { return m.dim(); }

std::map<int, int> composition_factors(const RightModule& m) {
  std::map<int, int> out;
  auto series = radical_series(m);
  for (size_t k = 0; k + 1 < series.size(); ++k) {
    const Subspace& top = series[k];
    const Subspace& bot = series[k + 1];
    for (int v : m.algebra()->vertices()) {
      int a = m.algebra()->diagonal_index(v);
      Mat img(m.algebra()->field(), top.dim(), m.dim());
      for (int r = 0; r < top.dim(); ++r)
        img.set_row(r, m.act(top.basis().row(r), a));
      int mult = sum(Subspace::from_rows(img), bot).dim() - bot.dim();
      if (mult > 0) out[v] += mult;
    }
  }
  return out;
}

std::map<int, int> socle_factors(const RightModule& m) {
  std::map<int, int> out;
  Subspace soc = socle(m).space;
  for (int v : m.algebra()->vertices()) {
    int a = m.algebra()->diagonal_index(v);
    Mat img(m.algebra()->field(), soc.dim(), m.dim());
    for (int r = 0; r < soc.dim(); ++r)
      img.set_row(r, m.act(soc.basis().row(r), a));
    int mult = Subspace::from_rows(img).dim();
    if (mult > 0) out[v] = mult;
  }
  return out;
}

int goldie_dimension(const RightModule& m) { return socle(m).space.dim(); }

bool socle_square_free(const RightModule& m) {
  for (const auto& [label, count] : socle_factors(m))
    if (count > 1) return false;
  return true;
}

bool is_essential(const RightModule& m, const Subspace& n) {
  return is_subset(socle(m).space, n);
}

Submodule singular_submodule(const RightModule& m, const Caps& caps) {
  // Regular module of the algebra shares coordinates with the algebra.
  RightModule reg = regular_module(m.algebra());
  Subspace alg_socle = socle(reg).space;
  std::vector<Mat> socle_actions;
  for (int r = 0; r < alg_socle.dim(); ++r)
    socle_actions.push_back(m.action_of(alg_socle.basis().row(r)));
  Subspace full = Subspace::full(m.algebra()->field(), m.dim());
  Mat rows(m.algebra()->field(), 0, m.dim());
  for (const auto& v : enumerate_vectors(full, caps.max_vectors)) {
    // ann_r(v) is essential iff it contains Soc(A_A), i.e. the whole right
    // socle of the algebra kills v.
    bool killed = true;
    for (const Mat& s : socle_actions) {
      auto w = s.apply_row(v);
      if (!std::all_of(w.begin(), w.end(), [](uint8_t x) { return !x; })) {
        killed = false;
        break;
      }
    }
    if (!killed) continue;
    Mat one(m.algebra()->field(), 1, m.dim());
    one.set_row(0, v);
    rows = Mat::vstack(rows, one);
  }
  return Submodule{m, Subspace::from_rows(rows)};
}

std::vector<Subspace> submodule_lattice(const RightModule& m,
                                        const Caps& caps) {
  std::set<Subspace> found;
  std::vector<Subspace> work;
  auto add = [&](const Subspace& s) {
    if (found.insert(s).second) {
      work.push_back(s);
      if (found.size() > caps.max_lattice)
        throw CapExceeded("max_lattice", found.size(), caps.max_lattice);
    }
  };
  add(Subspace(m.algebra()->field(), m.dim()));
  Subspace full = Subspace::full(m.algebra()->field(), m.dim());
  for (const auto& v : enumerate_vectors(full, caps.max_vectors)) {
    if (std::all_of(v.begin(), v.end(), [](uint8_t x) { return !x; })) continue;
    add(spin(m, {v}).space);
  }
  // Close under sums: pair each unprocessed element against everything
  // known; later arrivals get their own turn. Set insertion keeps iterators
  // valid, so the inner loop can walk the live set.
  while (!work.empty()) {
    Subspace x = work.back();
    work.pop_back();
    for (auto it = found.begin(); it != found.end(); ++it) add(sum(x, *it));
  }
  return std::vector<Subspace>(found.begin(), found.end());
}

RightModule restrict_to(const RightModule& m, const Subspace& s) {
  if (!is_action_closed(m, s))
    throw SpecError("subspace is not action closed");
  std::vector<Mat> actions;
  for (int a = 0; a < m.algebra()->dim(); ++a) {
    Mat r(m.algebra()->field(), s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) {
      auto w = m.act(s.basis().row(i), a);
      r.set_row(i, s.coords(w));
    }
    actions.push_back(r);
  }
  return make_module(m.algebra(), std::move(actions), m.name() + "|sub");
}

Mat quotient_projection(const Subspace& w) {
  int n = w.ambient_dim();
  int q = n - w.dim();
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(n, false);
    for (int c : w.pivot_cols()) is_pivot[c] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat proj(w.field(), n, q);
  for (int j = 0; j < n; ++j) {
    std::vector<uint8_t> e(n, 0);
    e[j] = 1;
    auto r = w.reduce(e);
    for (int t = 0; t < q; ++t) proj.set(j, t, r[free_cols[t]]);
  }
  return proj;
}

std::pair<RightModule, Mat> quotient_module(const RightModule& m,
                                            const Subspace& n) {
  if (!is_action_closed(m, n))
    throw SpecError("cannot form a quotient by a non-submodule");
  Mat proj = quotient_projection(n);
  // Section embedding the free coordinates back.
  int nn = m.dim();
  int q = proj.cols();
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(nn, false);
    for (int c : n.pivot_cols()) is_pivot[c] = true;
    for (int c = 0; c < nn; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat section(m.algebra()->field(), q, nn);
  for (int t = 0; t < q; ++t) section.set(t, free_cols[t], 1);
  std::vector<Mat> actions;
  for (int a = 0; a < m.algebra()->dim(); ++a)
    actions.push_back(section * m.action(a) * proj);
  return {make_module(m.algebra(), std::move(actions), m.name() + "/sub"),
          proj};
}

uint64_t HomSpace::count(uint64_t cap) const {
  int p = source_.algebra()->field().modulus();
  uint64_t total = 1;
  for (int i = 0; i < dim(); ++i) {
    if (total > cap / p)
      throw CapExceeded("max_hom_elements", UINT64_MAX, cap);
    total *= uint64_t(p);
  }
  if (total > cap) throw CapExceeded("max_hom_elements", total, cap);
  return total;
}

Mat HomSpace::element(uint64_t k) const {
  int p = source_.algebra()->field().modulus();
  auto c = coeffs_from_index(k, dim(), p);
  Mat out(source_.algebra()->field(), source_.dim(), target_.dim());
  for (int i = 0; i < dim(); ++i)
    if (c[i]) out = out + basis_[i].scaled(c[i]);
  return out;
}

HomSpace hom_space(const RightModule& source, const RightModule& target) {
  if (!same_algebra(source.algebra(), target.algebra()))
    throw SpecError("hom space needs a common algebra");
  const PrimeField& f = source.algebra()->field();
  int m = source.dim(), n = target.dim(), d = source.algebra()->dim();
  // Intertwining: action_M(a) H = H action_N(a) for all basis a. Unknowns
  // are the entries of H, row-major.
  Mat c(f, d * m * n, m * n);
  for (int a = 0; a < d; ++a) {
    const Mat& am = source.action(a);
    const Mat& an = target.action(a);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        int row = (a * m + i) * n + j;
        for (int k = 0; k < m; ++k)
          c.set(row, k * n + j, f.add(c(row, k * n + j), am(i, k)));
        for (int l = 0; l < n; ++l)
          c.set(row, i * n + l, f.sub(c(row, i * n + l), an(l, j)));
      }
  }
  Subspace sol = kernel(c);
  std::vector<Mat> basis;
  for (int r = 0; r < sol.dim(); ++r) {
    auto v = sol.basis().row(r);
    Mat h(f, m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) h.set(i, j, v[i * n + j]);
    basis.push_back(h);
  }
  return HomSpace(source, target, std::move(basis));
}

bool is_intertwiner(const RightModule& source, const RightModule& target,
                    const Mat& h) {
  if (h.rows() != source.dim() || h.cols() != target.dim()) return false;
  for (int a = 0; a < source.algebra()->dim(); ++a)
    if (!(source.action(a) * h == h * target.action(a))) return false;
  return true;
}

namespace {
// Cheap isomorphism invariants that must agree.
bool same_invariants(const RightModule& m, const RightModule& n) {
  if (m.dim() != n.dim()) return false;
  if (composition_factors(m) != composition_factors(n)) return false;
  if (socle_factors(m) != socle_factors(n)) return false;
  auto dims = [](const std::vector<Subspace>& v) {
    std::vector<int> d;
    for (const auto& s : v) d.push_back(s.dim());
    return d;
  };
  if (dims(radical_series(m)) != dims(radical_series(n))) return false;
  if (dims(socle_series(m)) != dims(socle_series(n))) return false;
  return true;
}
}  // namespace

std::optional<Mat> find_isomorphism(const RightModule& m,
                                    const RightModule& n, const Caps& caps) {
  if (!same_invariants(m, n)) return std::nullopt;
  if (m.dim() == 0) return Mat(m.algebra()->field(), 0, 0);
  HomSpace hs = hom_space(m, n);
  uint64_t total = hs.count(caps.max_hom_elements);
  auto hit = exec::find_first(
      total, [&](uint64_t k) { return is_invertible(hs.element(k)); });
  if (!hit) return std::nullopt;
  return hs.element(*hit);
}

bool is_isomorphic(const RightModule& m, const RightModule& n,
                   const Caps& caps) {
  return find_isomorphism(m, n, caps).has_value();
}

std::vector<Mat> idempotent_endos(const RightModule& m, const Caps& caps) {
  HomSpace hs = hom_space(m, m);
  uint64_t total = hs.count(caps.max_hom_elements);
  std::vector<Mat> out;
  for (uint64_t k = 0; k < total; ++k) {
    Mat e = hs.element(k);
    if (e * e == e) out.push_back(e);
  }
  return out;
}

std::vector<Subspace> direct_summands(const RightModule& m, const Caps& caps) {
  std::set<Subspace> images;
  for (const Mat& e : idempotent_endos(m, caps))
    images.insert(row_space(e));
  return std::vector<Subspace>(images.begin(), images.end());
}

bool is_indecomposable(const RightModule& m, const Caps& caps) {
  if (m.dim() == 0) return false;
  return idempotent_endos(m, caps).size() == 2;
}

std::vector<RightModule> indecomposable_summands(const RightModule& m,
                                                 const Caps& caps) {
  if (m.dim() == 0) return {};
  HomSpace hs = hom_space(m, m);
  uint64_t total = hs.count(caps.max_hom_elements);
  for (uint64_t k = 0; k < total; ++k) {
    Mat e = hs.element(k);
    if (!(e * e == e)) continue;
    if (e.is_zero() || e.is_identity()) continue;
    Mat c = Mat::identity(e.field(), e.rows()) - e;
    auto left = indecomposable_summands(restrict_to(m, row_space(e)), caps);
    auto right = indecomposable_summands(restrict_to(m, row_space(c)), caps);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
  return {m};
}

bool is_simple(const RightModule& m) { return m.dim() == 1; }

bool is_semisimple(const RightModule& m) {
  return radical_submodule(m).space.dim() == 0;
}

bool is_uniform(const RightModule& m) { return goldie_dimension(m) == 1; }

bool is_uniserial(const RightModule& m) {
  auto series = radical_series(m);
  for (size_t k = 0; k + 1 < series.size(); ++k)
    if (series[k].dim() - series[k + 1].dim() > 1) return false;
  return true;
}

bool is_local_module(const RightModule& m) {
  if (m.dim() == 0) return false;
  return m.dim() - radical_submodule(m).space.dim() == 1;
}

bool is_right_serial(const AlgebraPtr& a) {
  for (int v : a->vertices())
    if (!is_uniserial(projective_right(a, v))) return false;
  return true;
}

bool is_left_serial(const AlgebraPtr& a) {
  for (int v : a->vertices())
    if (!is_uniserial(projective_left(a, v))) return false;
  return true;
}

}  // namespace modlab
