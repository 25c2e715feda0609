#include "modlab/theorems.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "modlab/errors.hpp"

namespace modlab {

namespace {

std::string module_tag(const RightModule& m) {
  std::ostringstream os;
  os << m.name() << " (dim " << m.dim() << ")";
  return os.str();
}

// Verdict under construction: counts every asserted instance, keeps the
// first failure as witness.
struct Tally {
  TheoremVerdict v;

  explicit Tally(std::string id, std::string universe) {
    v.id = std::move(id);
    v.universe = std::move(universe);
    v.holds = true;
  }
  void expect(bool ok, const std::string& what) {
    ++v.instances_checked;
    if (!ok && v.holds) {
      v.holds = false;
      v.witness = what;
    }
  }
  void note(std::string s) { v.notes.push_back(std::move(s)); }
  TheoremVerdict done() && { return std::move(v); }
};

std::string census_universe(const Census& c) {
  std::ostringstream os;
  const auto& a = *c.algebra;
  os << "poset algebra on " << a.vertices().size() << " vertices over GF("
     << a.field().modulus() << "), socle bounds (";
  bool first = true;
  for (int v : a.vertices()) {
    if (!first) os << ",";
    first = false;
    auto it = c.bounds.find(v);
    os << (it == c.bounds.end() ? 0 : it->second);
  }
  os << "), length <= " << c.max_length << ", " << c.representatives.size()
     << " classes";
  if (c.partial) os << " [partial]";
  return os.str();
}

// Subspace of the hull spanned by the coordinates of the chosen blocks.
Subspace block_coordinates(const InjectiveHull& ih,
                           const std::vector<int>& chosen) {
  const PrimeField f = ih.hull.algebra()->field();
  std::vector<std::vector<int>> rows;
  for (int bi : chosen) {
    const HullBlock& b = ih.blocks[bi];
    for (int k = 0; k < b.dim; ++k) {
      std::vector<int> r(ih.hull.dim(), 0);
      r[b.offset + k] = 1;
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return Subspace::from_rows(Mat(f, 0, ih.hull.dim()));
  return Subspace::from_rows(Mat::from_rows(f, rows));
}

// The direct sum of the chosen hull blocks as a module, and the image of
// the source under the projection onto those coordinates.
std::pair<RightModule, Subspace> block_projection(
    const InjectiveHull& ih, const std::vector<int>& chosen) {
  const AlgebraPtr& a = ih.hull.algebra();
  std::vector<RightModule> parts;
  std::vector<int> cols;
  for (int bi : chosen) {
    const HullBlock& b = ih.blocks[bi];
    parts.push_back(indecomposable_injective(a, b.vertex));
    for (int k = 0; k < b.dim; ++k) cols.push_back(b.offset + k);
  }
  RightModule target = direct_sum(parts);
  Mat proj(a->field(), ih.embedding.rows(), int(cols.size()));
  for (int r = 0; r < ih.embedding.rows(); ++r)
    for (size_t j = 0; j < cols.size(); ++j)
      proj.set(r, int(j), ih.embedding(r, cols[j]));
  return {target, row_space(proj)};
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> complement_of(const std::vector<int>& s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

}  // namespace

AlgebraPtr ring_fan3(int p) {
  return algebra_from_pattern(PosetPattern::make(3, {{1, 2}, {1, 3}}), p);
}

AlgebraPtr ring_fan4(int p) {
  return algebra_from_pattern(
      PosetPattern::make(4, {{1, 2}, {1, 3}, {1, 4}}), p);
}

Census build_census(const AlgebraPtr& a, const std::map<int, int>& bounds,
                    int max_length, const Caps& caps) {
  std::vector<RightModule> parts;
  for (int v : a->vertices()) {
    auto it = bounds.find(v);
    int copies = it == bounds.end() ? 0 : it->second;
    if (copies < 0) throw SpecError("census bound must be nonnegative");
    for (int k = 0; k < copies; ++k)
      parts.push_back(indecomposable_injective(a, v));
  }
  if (parts.empty()) throw SpecError("census needs a positive socle bound");
  Census c{a, bounds, max_length, direct_sum(parts).renamed("C"), {}, 0,
           false};
  try {
    std::vector<Subspace> lattice = submodule_lattice(c.cogenerator, caps);
    c.submodules_examined = lattice.size();
    for (const Subspace& s : lattice) {
      if (s.dim() > max_length) continue;
      RightModule m = restrict_to(c.cogenerator, s);
      bool seen = false;
      for (const RightModule& rep : c.representatives)
        if (is_isomorphic(m, rep, caps)) {
          seen = true;
          break;
        }
      if (!seen)
        c.representatives.push_back(
            m.renamed("r" + std::to_string(c.representatives.size())));
    }
  } catch (const CapExceeded&) {
    c.partial = true;
  }
  return c;
}

GluedModule example2_module() {
  AlgebraPtr a = ring_fan4(2);
  RightModule ambient = direct_sum({indecomposable_injective(a, 2),
                                    indecomposable_injective(a, 3),
                                    indecomposable_injective(a, 4)});
  // Block coordinates: top at 0,2,4 and socle at 1,3,5. The two arms are
  // generated by the sums of adjacent tops.
  Subspace b1 = spin(ambient, {{1, 0, 1, 0, 0, 0}}).space;
  Subspace b2 = spin(ambient, {{0, 0, 1, 0, 1, 0}}).space;
  Subspace b = sum(b1, b2);
  return {ambient, b1, b2, b};
}

TheoremVerdict scenario_example1() {
  Tally t("example-1", "fan-3 ring over GF(2)");
  AlgebraPtr a = ring_fan3(2);
  RightModule m = projective_right(a, 1);
  t.expect(m.dim() == 3, "dim P(1) != 3");
  t.expect(socle_factors(m) == std::map<int, int>{{2, 1}, {3, 1}},
           "Soc P(1) is not S2 + S3");

  InjectiveHull ih = injective_hull(m);
  RightModule l1 = indecomposable_injective(a, 2);
  RightModule l2 = indecomposable_injective(a, 3);
  t.expect(ih.multiplicities == std::map<int, int>{{2, 1}, {3, 1}},
           "hull blocks are not E(2) + E(3)");
  t.expect(is_isomorphic(ih.hull, direct_sum({l1, l2})),
           "hull is not L1 + L2");
  t.expect(composition_length(l1) == 2, "l(L1) != 2");
  t.expect(composition_length(l2) == 2, "l(L2) != 2");
  t.expect(is_injective(l1), "L1 not injective");
  t.expect(is_injective(l2), "L2 not injective");
  t.expect(hom_space(l1, l1).count(16) == 2, "|End(L1)| != 2");
  t.expect(hom_space(l2, l2).count(16) == 2, "|End(L2)| != 2");
  t.expect(hom_space(l1, l2).dim() == 0, "Hom(L1,L2) != 0");
  t.expect(hom_space(l2, l1).dim() == 0, "Hom(L2,L1) != 0");

  UnitSweep sweep = automorphism_sweep(m);
  t.expect(sweep.elements == 4, "|End(E)| != 4");
  t.expect(sweep.units == 1, "|Aut(E)| != 1");
  t.expect(sweep.invariant, "P(1) not invariant under hull automorphisms");
  t.expect(!is_quasi_injective(m).value, "P(1) unexpectedly quasi-injective");
  t.expect(!is_uniform(m), "P(1) unexpectedly uniform");
  t.expect(is_left_serial(a), "ring not left serial");
  t.note("|End(E)| = 4, |Aut(E)| = 1");
  return std::move(t).done();
}

TheoremVerdict scenario_example2() {
  Tally t("example-2", "fan-4 ring over GF(2)");
  AlgebraPtr a = ring_fan4(2);
  GluedModule g = example2_module();
  RightModule bmod = restrict_to(g.ambient, g.b).renamed("B");

  t.expect(g.b.dim() == 5, "dim B != 5");
  t.expect(composition_length(bmod) == 5, "l(B) != 5");

  // The arms are the two length-3 quotients of P(1).
  RightModule p1 = projective_right(a, 1);
  std::vector<uint8_t> kill14(p1.dim(), 0), kill12(p1.dim(), 0);
  kill14[a->label_index({1, 4})] = 1;
  kill12[a->label_index({1, 2})] = 1;
  RightModule a1 = quotient_module(p1, spin(p1, {kill14}).space).first;
  RightModule a2 = quotient_module(p1, spin(p1, {kill12}).space).first;
  t.expect(is_isomorphic(restrict_to(g.ambient, g.b1), a1),
           "B1 is not P(1)/soc(4)");
  t.expect(is_isomorphic(restrict_to(g.ambient, g.b2), a2),
           "B2 is not P(1)/soc(2)");
  t.expect(socle_factors(a1) == std::map<int, int>{{2, 1}, {3, 1}},
           "Soc B1 wrong");
  t.expect(socle_factors(a2) == std::map<int, int>{{3, 1}, {4, 1}},
           "Soc B2 wrong");

  // The arms meet exactly in the socle of the middle block.
  Subspace meet = intersect(g.b1, g.b2);
  RightModule meetmod = restrict_to(g.ambient, meet);
  t.expect(meet.dim() == 1 &&
               socle_factors(meetmod) == std::map<int, int>{{3, 1}},
           "B1 and B2 do not meet in Soc(E(3))");

  t.expect(is_essential(g.ambient, g.b), "B not essential in the ambient");
  InjectiveHull ih = injective_hull(bmod);
  t.expect(ih.multiplicities == std::map<int, int>{{2, 1}, {3, 1}, {4, 1}},
           "E(B) is not E(2)+E(3)+E(4)");

  UnitSweep sweep = automorphism_sweep(bmod);
  t.expect(sweep.elements == 8, "|End(E)| != 8");
  t.expect(sweep.units == 1, "|Aut(E)| != 1");
  t.expect(sweep.invariant, "B not invariant under hull automorphisms");
  t.expect(!is_local_module(bmod), "B unexpectedly local");
  t.expect(is_indecomposable(bmod), "B unexpectedly decomposes");
  t.note("l(B) = 5");
  return std::move(t).done();
}

TheoremVerdict check_hierarchy(const Census& c) {
  Tally t("hierarchy-chain", census_universe(c));
  if (c.partial) t.note("partial census");
  for (const RightModule& m : c.representatives) {
    bool inj = is_injective(m);
    bool qi = is_quasi_injective(m).value;
    bool pi = is_pseudo_injective(m).value;
    bool ai = is_automorphism_invariant(m).value;
    t.expect(!inj || qi, module_tag(m) + ": injective but not quasi-injective");
    t.expect(!qi || pi,
             module_tag(m) + ": quasi-injective but not pseudo-injective");
    t.expect(!pi || ai,
             module_tag(m) + ": pseudo-injective but not invariant");
  }
  return std::move(t).done();
}

TheoremVerdict check_projection_invariance(const Census& c,
                                           const Caps& caps) {
  Tally t("projection-invariance", census_universe(c));
  if (c.partial) t.note("partial census");
  for (const RightModule& m : c.representatives) {
    if (!is_automorphism_invariant(m, caps).value) continue;
    InjectiveHull ih = injective_hull(m);
    for (const auto& chosen : nonempty_subsets(int(ih.blocks.size()))) {
      auto [target, image] = block_projection(ih, chosen);
      RightModule proj = restrict_to(target, image);
      t.expect(is_automorphism_invariant(proj, caps).value,
               module_tag(m) + ": projection onto " +
                   std::to_string(chosen.size()) +
                   " hull blocks is not invariant");
    }
  }
  return std::move(t).done();
}

TheoremVerdict check_split_decomposition(const Census& c, const Caps& caps) {
  Tally t("split-decomposition", census_universe(c));
  if (c.partial) t.note("partial census");
  uint64_t vacuous = 0;
  for (const RightModule& m : c.representatives) {
    if (!is_automorphism_invariant(m, caps).value) continue;
    InjectiveHull ih = injective_hull(m);
    int k = int(ih.blocks.size());
    if (k < 2) continue;
    Subspace image = row_space(ih.embedding);
    for (const auto& chosen : nonempty_subsets(k)) {
      if (int(chosen.size()) == k) continue;
      RightModule e1 = block_projection(ih, chosen).first;
      // Hypothesis: some automorphism s of E1 keeps 1 - s invertible.
      HomSpace end1 = hom_space(e1, e1);
      uint64_t total = end1.count(caps.max_hom_elements);
      bool found = false;
      Mat id = Mat::identity(e1.algebra()->field(), e1.dim());
      for (uint64_t i = 0; i < total && !found; ++i) {
        Mat s = end1.element(i);
        found = is_invertible(s) && is_invertible(id - s);
      }
      if (!found) {
        ++vacuous;
        ++t.v.instances_checked;
        continue;
      }
      Subspace u1 = block_coordinates(ih, chosen);
      Subspace u2 =
          block_coordinates(ih, complement_of(chosen, k));
      Subspace m1 = intersect(image, u1);
      Subspace m2 = intersect(image, u2);
      bool ok = m1.dim() + m2.dim() == image.dim() &&
                sum(m1, m2) == image;
      t.expect(ok, module_tag(m) + ": no split across a block pair");
    }
  }
  t.note("vacuous splits (no suitable automorphism): " +
         std::to_string(vacuous));
  return std::move(t).done();
}

TheoremVerdict check_invariance_equals_quasi(const Census& c,
                                             const Caps& caps) {
  Tally t("invariance-equals-quasi-injectivity", census_universe(c));
  if (c.partial) t.note("partial census");
  int p = c.algebra->field().modulus();
  if (p >= 3) {
    for (const RightModule& m : c.representatives) {
      bool ai = is_automorphism_invariant(m, caps).value;
      bool qi = is_quasi_injective(m).value;
      t.expect(ai == qi, module_tag(m) + ": invariance and quasi-injectivity "
                                         "disagree over GF(" +
                             std::to_string(p) + ")");
    }
  } else {
    t.note("two-element field: boundary mode, recording "
           "invariant-but-not-quasi-injective representatives");
    for (const RightModule& m : c.representatives) {
      bool ai = is_automorphism_invariant(m, caps).value;
      bool qi = is_quasi_injective(m).value;
      t.expect(!qi || ai, module_tag(m) + ": quasi-injective but not "
                                          "invariant");
      if (ai && !qi) t.note("boundary: " + module_tag(m));
    }
  }
  return std::move(t).done();
}

TheoremVerdict check_repeated_block_split(const Census& c, const Caps& caps) {
  Tally t("repeated-block-split", census_universe(c));
  if (c.partial) t.note("partial census");
  uint64_t repeated = 0;
  for (const RightModule& m : c.representatives) {
    bool ai = is_automorphism_invariant(m, caps).value;
    if (ai) {
      InjectiveHull ih = injective_hull(m);
      Subspace image = row_space(ih.embedding);
      int k = int(ih.blocks.size());
      for (const auto& [vertex, mult] : ih.multiplicities) {
        if (mult < 2) continue;
        ++repeated;
        std::vector<int> first, second;
        for (int bi = 0; bi < k; ++bi) {
          if (ih.blocks[bi].vertex != vertex) continue;
          if (ih.blocks[bi].copy == 0)
            first.push_back(bi);
          else if (ih.blocks[bi].copy == 1)
            second.push_back(bi);
        }
        Subspace u1 = block_coordinates(ih, first);
        Subspace u2 = block_coordinates(ih, second);
        std::vector<int> rest;
        for (int bi = 0; bi < k; ++bi)
          if (bi != first[0] && bi != second[0]) rest.push_back(bi);
        Subspace u3 = block_coordinates(ih, rest);
        Subspace m1 = intersect(image, u1);
        Subspace m2 = intersect(image, u2);
        Subspace m3 = intersect(image, u3);
        bool ok = m1.dim() + m2.dim() + m3.dim() == image.dim() &&
                  sum(sum(m1, m2), m3) == image;
        t.expect(ok, module_tag(m) + ": no three-way split at the repeated "
                                     "block for vertex " +
                         std::to_string(vertex));
      }
    }
    // Corollary: indecomposable invariant modules have square-free socle.
    if (ai && is_indecomposable(m, caps))
      t.expect(socle_square_free(m),
               module_tag(m) + ": indecomposable, invariant, repeated socle "
                               "label");
  }
  t.note("representatives with a repeated hull block: " +
         std::to_string(repeated));
  return std::move(t).done();
}

TheoremVerdict check_uniform_or_binary_scalars(const Census& c,
                                               const Caps& caps) {
  Tally t("uniform-or-binary-scalars", census_universe(c));
  if (c.partial) t.note("partial census");
  int p = c.algebra->field().modulus();
  for (const RightModule& m : c.representatives) {
    if (m.dim() == 0) continue;
    if (!is_indecomposable(m, caps)) continue;
    if (!is_automorphism_invariant(m, caps).value) continue;
    bool first_disjunct = is_uniform(m) && is_quasi_injective(m).value;
    if (p >= 3) {
      t.expect(first_disjunct,
               module_tag(m) + ": indecomposable invariant module over GF(" +
                   std::to_string(p) + ") that is not uniform "
                                       "quasi-injective");
    } else {
      // Simple modules over a basic algebra have two-element endomorphism
      // rings at p = 2, so the second disjunct always holds.
      ++t.v.instances_checked;
      if (!first_disjunct) t.note("binary-scalars case: " + module_tag(m));
    }
  }
  return std::move(t).done();
}

TheoremVerdict check_invariance_implies_pseudo(const Census& c,
                                               const Caps& caps) {
  Tally t("invariance-implies-pseudo", census_universe(c));
  if (c.partial) t.note("partial census");
  for (const RightModule& m : c.representatives) {
    if (!is_automorphism_invariant(m, caps).value) continue;
    t.expect(is_pseudo_injective(m, caps).value,
             module_tag(m) + ": invariant but not pseudo-injective");
  }
  return std::move(t).done();
}

TheoremVerdict check_socle_complement_quotients(const Census& c,
                                                const Caps& caps) {
  Tally t("socle-complement-quotients", census_universe(c));
  if (c.partial) t.note("partial census");
  // Hypothesis: every indecomposable representative is invariant.
  for (const RightModule& m : c.representatives)
    if (is_indecomposable(m, caps) &&
        !is_automorphism_invariant(m, caps).value) {
      t.v.applicable = false;
      t.note("hypothesis fails: " + module_tag(m) +
             " is indecomposable and not invariant");
      return std::move(t).done();
    }
  const AlgebraPtr& a = c.algebra;
  for (int v : a->vertices()) {
    RightModule pv = projective_right(a, v);
    if (is_uniform(pv)) continue;
    t.expect(socle_square_free(pv),
             "P(" + std::to_string(v) + ") has a repeated socle label");
    Subspace soc = socle(pv).space;
    RightModule socmod = restrict_to(pv, soc);
    // Isotypic pieces of the socle, one per label.
    std::vector<std::pair<int, Subspace>> isotypic;
    for (int w : a->vertices()) {
      int di = a->diagonal_index(w);
      Mat fix = socmod.action(di) -
                Mat::identity(a->field(), socmod.dim());
      Subspace ww = kernel(fix);
      if (ww.dim() > 0) isotypic.push_back({w, ww});
    }
    int pieces = int(isotypic.size());
    for (int keep = 0; keep < (1 << pieces); ++keep) {
      // Kill the components whose labels are not kept.
      std::vector<std::vector<int>> rows;
      for (int i = 0; i < pieces; ++i) {
        if (keep & (1 << i)) continue;
        Mat amb = isotypic[i].second.basis() * soc.basis();
        for (int r = 0; r < amb.rows(); ++r) {
          auto v = amb.row(r);
          rows.emplace_back(v.begin(), v.end());
        }
      }
      Subspace aprime =
          rows.empty()
              ? Subspace::from_rows(Mat(a->field(), 0, pv.dim()))
              : Subspace::from_rows(Mat::from_rows(a->field(), rows));
      RightModule q = quotient_module(pv, aprime).first;
      t.expect(is_quasi_projective(q, caps).value,
               "P(" + std::to_string(v) + ") modulo a socle complement is "
                                          "not quasi-projective");
    }
  }
  for (const RightModule& m : c.representatives)
    if (is_uniserial(m))
      t.expect(is_quasi_projective(m, caps).value,
               module_tag(m) + ": uniserial but not quasi-projective");
  return std::move(t).done();
}

TheoremVerdict check_local_type_panel(const Census& c, const Caps& caps) {
  Tally t("local-type-panel", census_universe(c));
  if (c.partial) t.note("partial census");
  const AlgebraPtr& a = c.algebra;

  // Hypothesis of the panel: the radical squares to zero.
  for (const Label& x : a->labels())
    for (const Label& y : a->labels()) {
      if (x.row == x.col || y.row == y.col) continue;
      std::vector<uint8_t> vx(a->labels().size(), 0), vy(vx);
      vx[a->label_index(x)] = 1;
      vy[a->label_index(y)] = 1;
      auto prod = a->multiply(vx, vy);
      if (std::any_of(prod.begin(), prod.end(),
                      [](uint8_t z) { return z != 0; })) {
        t.v.applicable = false;
        t.note("radical does not square to zero");
        return std::move(t).done();
      }
    }

  // (a) every uniform representative is simple or injective of length 2
  bool a_ok = true;
  std::string a_wit;
  for (const RightModule& m : c.representatives) {
    if (m.dim() == 0 || !is_uniform(m)) continue;
    ++t.v.instances_checked;
    if (!(is_simple(m) ||
          (is_injective(m) && composition_length(m) == 2))) {
      a_ok = false;
      if (a_wit.empty()) a_wit = module_tag(m);
    }
  }
  // (b) the algebra is left serial
  bool b_ok = is_left_serial(a);
  ++t.v.instances_checked;
  // (c) per primitive idempotent: radical homogeneous or of length <= 2
  bool c_ok = true;
  int max_rad_len = 0;
  for (int v : a->vertices()) {
    RightModule pv = projective_right(a, v);
    RightModule radm = restrict_to(pv, radical_submodule(pv).space);
    auto labels = socle_factors(radm);
    bool homogeneous = labels.size() <= 1;
    max_rad_len = std::max(max_rad_len, radm.dim());
    ++t.v.instances_checked;
    if (!(homogeneous || radm.dim() <= 2)) {
      c_ok = false;
      t.note("condition (c) fails at vertex " + std::to_string(v) +
             ": l = " + std::to_string(radm.dim()) + ", labels mixed");
    }
    if (v == a->vertices().front())
      t.note("l(e(" + std::to_string(v) +
             ")J) = " + std::to_string(radm.dim()));
  }

  // Locality scan over the census.
  std::string nonlocal;
  for (const RightModule& m : c.representatives) {
    if (m.dim() == 0 || !is_indecomposable(m, caps)) continue;
    ++t.v.instances_checked;
    if (!is_local_module(m) && nonlocal.empty()) nonlocal = module_tag(m);
  }
  bool all_local = nonlocal.empty();
  t.note(all_local ? "all indecomposable representatives are local"
                   : "non-local indecomposable: " + nonlocal);
  t.note(std::string("(a) ") + (a_ok ? "holds" : "fails: " + a_wit));
  t.note(std::string("(b) ") + (b_ok ? "holds" : "fails"));
  t.note(std::string("(c) ") + (c_ok ? "holds" : "fails"));

  // Forward direction: all indecomposables local forces (a), (b), (c).
  t.expect(!all_local || (a_ok && b_ok && c_ok),
           "all representatives local yet a panel condition fails");
  // Converse: (a), (b), (c) with radicals of length <= 2 force locality.
  t.expect(!(a_ok && b_ok && c_ok && max_rad_len <= 2) || all_local,
           "panel holds with short radicals yet " + nonlocal + " is not "
                                                              "local");
  return std::move(t).done();
}

TheoremVerdict scan_c2_question(const Census& c, const Caps& caps) {
  Tally t("c2-question", census_universe(c));
  if (c.partial) t.note("partial census");
  bool found = false;
  for (const RightModule& m : c.representatives) {
    if (!is_automorphism_invariant(m, caps).value) continue;
    CheckResult c2 = check_c2(m, caps);
    bool qi = is_quasi_injective(m).value;
    // Quasi-injective modules satisfy C2; a violation there is a defect,
    // not a finding.
    t.expect(!qi || c2.value, module_tag(m) + ": quasi-injective C2 failure");
    if (!c2.value && !qi) {
      found = true;
      t.note("C2 fails at invariant representative " + module_tag(m) + ": " +
             c2.witness);
    }
  }
  if (!found) t.note("no counterexample within this universe");
  return std::move(t).done();
}

TheoremVerdict check_summand_facts(const Census& c, const Caps& caps) {
  Tally t("summand-facts", census_universe(c));
  if (c.partial) t.note("partial census");
  for (const RightModule& m : c.representatives) {
    if (!is_automorphism_invariant(m, caps).value) continue;
    for (const Subspace& d : direct_summands(m, caps))
      t.expect(is_automorphism_invariant(restrict_to(m, d), caps).value,
               module_tag(m) + ": summand of dim " + std::to_string(d.dim()) +
                   " is not invariant");
    t.expect(check_c3(m, caps).value, module_tag(m) + ": invariant without "
                                                      "C3");
    if (check_c1(m, caps).value)
      t.expect(is_quasi_injective(m).value,
               module_tag(m) + ": CS and invariant but not quasi-injective");
    Mat id = Mat::identity(m.algebra()->field(), m.dim());
    for (const Mat& e : idempotent_endos(m, caps)) {
      if (e.is_zero() || e.is_identity()) continue;
      RightModule m1 = restrict_to(m, row_space(e));
      RightModule m2 = restrict_to(m, row_space(id - e));
      t.expect(is_relatively_injective(m1, m2, caps),
               module_tag(m) + ": half of a split is not injective relative "
                               "to the other");
    }
  }
  return std::move(t).done();
}

std::vector<TheoremVerdict> run_full_suite(const Caps& caps) {
  std::vector<TheoremVerdict> out;
  out.push_back(scenario_example1());
  out.push_back(scenario_example2());

  struct Setup {
    AlgebraPtr a;
    std::map<int, int> bounds;
  };
  std::vector<Setup> setups;
  for (int p : {2, 3}) {
    setups.push_back({ring_fan3(p), {{1, 1}, {2, 1}, {3, 1}}});
    setups.push_back({ring_fan4(p), {{1, 1}, {2, 1}, {3, 1}, {4, 1}}});
    // Widened bounds so repeated hull blocks actually occur.
    setups.push_back({ring_fan3(p), {{1, 1}, {2, 2}, {3, 1}}});
  }
  for (const Setup& s : setups) {
    Census c = build_census(s.a, s.bounds, 6, caps);
    out.push_back(check_hierarchy(c));
    out.push_back(check_projection_invariance(c, caps));
    out.push_back(check_split_decomposition(c, caps));
    out.push_back(check_invariance_equals_quasi(c, caps));
    out.push_back(check_repeated_block_split(c, caps));
    out.push_back(check_uniform_or_binary_scalars(c, caps));
    out.push_back(check_invariance_implies_pseudo(c, caps));
    out.push_back(check_socle_complement_quotients(c, caps));
    out.push_back(check_local_type_panel(c, caps));
    out.push_back(scan_c2_question(c, caps));
    out.push_back(check_summand_facts(c, caps));
  }
  return out;
}

}  // namespace modlab
