#include "modlab/envelope.hpp"

#include <algorithm>
#include <set>

#include "modlab/errors.hpp"
#include "modlab/exec.hpp"

namespace modlab {

namespace {

std::vector<uint8_t> vec_of(const Mat& m) { return m.data(); }

}  // namespace

RightModule indecomposable_injective(const AlgebraPtr& a, int vertex) {
  if (a->diagonal_index(vertex) < 0)
    throw SpecError("no vertex " + std::to_string(vertex) + " in the algebra");
  // Label indices in column `vertex`; the dual of the left projective there.
  std::vector<int> cols;
  for (int i = 0; i < a->dim(); ++i)
    if (a->labels()[i].col == vertex) cols.push_back(i);
  int n = int(cols.size());
  std::vector<Mat> actions;
  for (int b = 0; b < a->dim(); ++b) {
    Mat l = a->left_mult_matrix(b);
    Mat rho(a->field(), n, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) rho.set(r, s, l(cols[s], cols[r]));
    actions.push_back(rho);
  }
  return make_module(a, std::move(actions),
                     "E(" + std::to_string(vertex) + ")");
}

InjectiveHull injective_hull(const RightModule& m) {
  const AlgebraPtr& a = m.algebra();
  const PrimeField& f = a->field();
  auto soc_mult = socle_factors(m);

  InjectiveHull out{m, zero_module(a), Mat(f, m.dim(), 0), {}, soc_mult};
  if (m.dim() == 0) return out;

  std::vector<RightModule> parts;
  int offset = 0;
  for (const auto& [v, mult] : soc_mult) {
    RightModule e = indecomposable_injective(a, v);
    for (int c = 0; c < mult; ++c) {
      out.blocks.push_back(HullBlock{v, c, offset, e.dim()});
      parts.push_back(e);
      offset += e.dim();
    }
  }
  RightModule hull =
      parts.empty() ? zero_module(a) : direct_sum(parts);

  // Socle transport: the weight-v part of Soc(M) goes to the socle lines of
  // the v-blocks, one basis row per copy. The socle of E(S_v) is the dual
  // coordinate of the diagonal label (v,v).
  Subspace soc = socle(m).space;
  std::vector<std::vector<uint8_t>> constraints_lhs;
  std::vector<std::vector<uint8_t>> constraints_rhs;
  for (const auto& [v, mult] : soc_mult) {
    int av = a->diagonal_index(v);
    Mat img(f, soc.dim(), m.dim());
    for (int r = 0; r < soc.dim(); ++r)
      img.set_row(r, m.act(soc.basis().row(r), av));
    Subspace weight = Subspace::from_rows(img);
    // Socle coordinate of E(S_v): position of (v,v) in the column list.
    int pos = 0;
    for (int i = 0; i < a->dim(); ++i) {
      if (a->labels()[i].col != v) continue;
      if (a->labels()[i] == Label{v, v}) break;
      ++pos;
    }
    int copy = 0;
    for (const HullBlock& blk : out.blocks) {
      if (blk.vertex != v) continue;
      std::vector<uint8_t> target(hull.dim(), 0);
      target[blk.offset + pos] = 1;
      constraints_lhs.push_back(weight.basis().row(copy));
      constraints_rhs.push_back(target);
      ++copy;
    }
  }

  // Solve for H: intertwining plus the socle transport rows. Unknowns are
  // the entries of H (dim M x dim E), row-major.
  int dm = m.dim(), de = hull.dim(), d = a->dim();
  int rows = d * dm * de + int(constraints_lhs.size()) * de;
  Mat c(f, rows, dm * de);
  Mat rhs(f, rows, 1);
  for (int x = 0; x < d; ++x) {
    const Mat& am = m.action(x);
    const Mat& ae = hull.action(x);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < de; ++j) {
        int row = (x * dm + i) * de + j;
        for (int k = 0; k < dm; ++k)
          c.set(row, k * de + j, f.add(c(row, k * de + j), am(i, k)));
        for (int l = 0; l < de; ++l)
          c.set(row, i * de + l, f.sub(c(row, i * de + l), ae(l, j)));
      }
  }
  int base = d * dm * de;
  for (size_t t = 0; t < constraints_lhs.size(); ++t) {
    const auto& u = constraints_lhs[t];
    for (int j = 0; j < de; ++j) {
      int row = base + int(t) * de + j;
      for (int k = 0; k < dm; ++k) c.set(row, k * de + j, u[k]);
      rhs.set(row, 0, constraints_rhs[t][j]);
    }
  }
  auto sol = solve_right(c, rhs);
  if (!sol)
    throw SpecError("internal: hull embedding system is inconsistent");
  Mat h(f, dm, de);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < de; ++j) h.set(i, j, (*sol)(i * de + j, 0));
  if (rank(h) != dm)
    throw SpecError("internal: hull embedding is not injective");
  out.hull = hull;
  out.embedding = h;
  return out;
}

bool is_injective(const RightModule& m) {
  return injective_hull(m).hull.dim() == m.dim();
}

CheckResult is_quasi_injective(const RightModule& m) {
  InjectiveHull ih = injective_hull(m);
  Subspace image = row_space(ih.embedding);
  HomSpace end = hom_space(ih.hull, ih.hull);
  for (int i = 0; i < end.dim(); ++i) {
    const Mat& g = end.basis()[i];
    Mat moved = image.basis() * g;
    if (!is_subset(row_space(moved), image))
      return {false, "hull endomorphism basis #" + std::to_string(i) +
                         " moves the module off itself"};
  }
  return {true, ""};
}

UnitSweep automorphism_sweep(const RightModule& m, const Caps& caps) {
  InjectiveHull ih = injective_hull(m);
  Subspace image = row_space(ih.embedding);
  HomSpace end = hom_space(ih.hull, ih.hull);
  uint64_t total = end.count(caps.max_hom_elements);
  auto outcome = exec::sweep(total, [&](uint64_t k) {
    Mat g = end.element(k);
    if (!is_invertible(g)) return std::pair<bool, bool>(false, false);
    Mat moved = image.basis() * g;
    bool ok = is_subset(row_space(moved), image);
    return std::pair<bool, bool>(true, !ok);
  });
  UnitSweep out;
  out.units = outcome.counted;
  out.elements = total;
  out.invariant = outcome.first_fail == exec::kNoIndex;
  if (!out.invariant) {
    out.witness_index = outcome.first_fail;
    out.witness = "hull automorphism #" + std::to_string(outcome.first_fail) +
                  " moves the module off itself";
  }
  return out;
}

CheckResult is_automorphism_invariant(const RightModule& m, const Caps& caps) {
  UnitSweep s = automorphism_sweep(m, caps);
  return {s.invariant, s.witness};
}

CheckResult is_pseudo_injective(const RightModule& m, const Caps& caps) {
  HomSpace end = hom_space(m, m);
  auto lattice = submodule_lattice(m, caps);
  for (size_t ni = 0; ni < lattice.size(); ++ni) {
    const Subspace& n = lattice[ni];
    RightModule nmod = restrict_to(m, n);
    HomSpace homs = hom_space(nmod, m);
    // Restrictions of the endomorphisms, as a subspace of Hom(N, M).
    Mat restr(m.algebra()->field(), end.dim(), n.dim() * m.dim());
    for (int j = 0; j < end.dim(); ++j)
      restr.set_row(j, vec_of(n.basis() * end.basis()[j]));
    Subspace reachable = Subspace::from_rows(restr);
    uint64_t total = homs.count(caps.max_hom_elements);
    auto outcome = exec::sweep(total, [&](uint64_t k) {
      Mat fmat = homs.element(k);
      if (rank(fmat) != n.dim()) return std::pair<bool, bool>(false, false);
      bool extends = reachable.contains(vec_of(fmat));
      return std::pair<bool, bool>(true, !extends);
    });
    if (outcome.first_fail != exec::kNoIndex)
      return {false, "monomorphism #" + std::to_string(outcome.first_fail) +
                         " from submodule #" + std::to_string(ni) + " (dim " +
                         std::to_string(n.dim()) + ") does not extend"};
  }
  return {true, ""};
}

CheckResult check_c1(const RightModule& m, const Caps& caps) {
  auto lattice = submodule_lattice(m, caps);
  auto summands = direct_summands(m, caps);
  Subspace soc = socle(m).space;
  for (size_t ni = 0; ni < lattice.size(); ++ni) {
    const Subspace& n = lattice[ni];
    bool found = false;
    for (const Subspace& d : summands) {
      if (!is_subset(n, d)) continue;
      if (is_subset(intersect(d, soc), n)) {
        found = true;
        break;
      }
    }
    if (!found)
      return {false, "submodule #" + std::to_string(ni) + " (dim " +
                         std::to_string(n.dim()) +
                         ") is essential in no direct summand"};
  }
  return {true, ""};
}

CheckResult check_c2(const RightModule& m, const Caps& caps) {
  auto lattice = submodule_lattice(m, caps);
  auto summands = direct_summands(m, caps);
  std::set<Subspace> summand_set(summands.begin(), summands.end());
  for (size_t ni = 0; ni < lattice.size(); ++ni) {
    const Subspace& n = lattice[ni];
    if (summand_set.count(n)) continue;
    RightModule nmod = restrict_to(m, n);
    for (size_t di = 0; di < summands.size(); ++di) {
      if (summands[di].dim() != n.dim()) continue;
      if (is_isomorphic(nmod, restrict_to(m, summands[di]), caps))
        return {false, "submodule #" + std::to_string(ni) +
                           " is isomorphic to summand #" + std::to_string(di) +
                           " but is not a summand"};
    }
  }
  return {true, ""};
}

CheckResult check_c3(const RightModule& m, const Caps& caps) {
  auto summands = direct_summands(m, caps);
  std::set<Subspace> summand_set(summands.begin(), summands.end());
  for (size_t i = 0; i < summands.size(); ++i)
    for (size_t j = i + 1; j < summands.size(); ++j) {
      if (intersect(summands[i], summands[j]).dim() != 0) continue;
      if (!summand_set.count(sum(summands[i], summands[j])))
        return {false, "summands #" + std::to_string(i) + " and #" +
                           std::to_string(j) +
                           " are independent but their sum is not a summand"};
    }
  return {true, ""};
}

bool is_relatively_injective(const RightModule& m, const RightModule& n,
                             const Caps& caps) {
  HomSpace homs_nm = hom_space(n, m);
  for (const Subspace& w : submodule_lattice(n, caps)) {
    RightModule wmod = restrict_to(n, w);
    int need = hom_space(wmod, m).dim();
    Mat restr(m.algebra()->field(), homs_nm.dim(), w.dim() * m.dim());
    for (int j = 0; j < homs_nm.dim(); ++j)
      restr.set_row(j, vec_of(w.basis() * homs_nm.basis()[j]));
    if (rank(restr) != need) return false;
  }
  return true;
}

CheckResult is_quasi_projective(const RightModule& m, const Caps& caps) {
  HomSpace end = hom_space(m, m);
  auto lattice = submodule_lattice(m, caps);
  for (size_t ci = 0; ci < lattice.size(); ++ci) {
    auto [q, proj] = quotient_module(m, lattice[ci]);
    int need = hom_space(m, q).dim();
    Mat pushed(m.algebra()->field(), end.dim(), m.dim() * q.dim());
    for (int j = 0; j < end.dim(); ++j)
      pushed.set_row(j, vec_of(end.basis()[j] * proj));
    if (rank(pushed) != need)
      return {false, "maps onto the quotient by submodule #" +
                         std::to_string(ci) + " (dim " +
                         std::to_string(lattice[ci].dim()) +
                         ") are not all covered"};
  }
  return {true, ""};
}

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::no:
      return "no";
    case Flag::yes:
      return "yes";
    default:
      return "unknown";
  }
}

PropertyProfile property_profile(const RightModule& m, const Caps& caps) {
  PropertyProfile p;
  p.dim = m.dim();
  p.length = composition_length(m);
  p.goldie = goldie_dimension(m);
  p.loewy = int(radical_series(m).size()) - 1;
  p.top_dim = m.dim() - radical_submodule(m).space.dim();
  p.factors = composition_factors(m);
  p.socle = socle_factors(m);
  p.uniform = is_uniform(m);
  p.uniserial = is_uniserial(m);
  p.local = is_local_module(m);
  p.semisimple = is_semisimple(m);
  p.simple = is_simple(m);
  p.square_free_socle = socle_square_free(m);

  auto guard = [&](Flag& slot, const char* key, auto&& fn) {
    try {
      CheckResult r = fn();
      slot = r.value ? Flag::yes : Flag::no;
      if (!r.value) p.witnesses[key] = r.witness;
    } catch (const CapExceeded& e) {
      slot = Flag::unknown;
      p.witnesses[key] = e.what();
    }
  };

  try {
    p.indecomposable = is_indecomposable(m, caps);
    HomSpace end = hom_space(m, m);
    p.end_count = end.count(caps.max_hom_elements);
  } catch (const CapExceeded& e) {
    p.witnesses["endomorphisms"] = e.what();
  }

  InjectiveHull ih = injective_hull(m);
  p.hull_blocks = ih.multiplicities;
  p.injective = ih.hull.dim() == m.dim() ? Flag::yes : Flag::no;

  guard(p.quasi_injective, "quasi_injective",
        [&] { return is_quasi_injective(m); });
  try {
    UnitSweep s = automorphism_sweep(m, caps);
    p.hull_end_count = s.elements;
    p.hull_aut_count = s.units;
    p.automorphism_invariant = s.invariant ? Flag::yes : Flag::no;
    if (!s.invariant) p.witnesses["automorphism_invariant"] = s.witness;
  } catch (const CapExceeded& e) {
    p.automorphism_invariant = Flag::unknown;
    p.witnesses["automorphism_invariant"] = e.what();
  }
  guard(p.pseudo_injective, "pseudo_injective",
        [&] { return is_pseudo_injective(m, caps); });
  guard(p.c1, "c1", [&] { return check_c1(m, caps); });
  guard(p.c2, "c2", [&] { return check_c2(m, caps); });
  guard(p.c3, "c3", [&] { return check_c3(m, caps); });
  guard(p.quasi_projective, "quasi_projective",
        [&] { return is_quasi_projective(m, caps); });
  return p;
}

}  // namespace modlab
