#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modlab/caps.hpp"
#include "modlab/envelope.hpp"
#include "modlab/module.hpp"

namespace modlab {

// The two bundled counterexample rings: poset patterns 1 < 2, 1 < 3 (and
// 1 < 4) over GF(p).
AlgebraPtr ring_fan3(int p = 2);
AlgebraPtr ring_fan4(int p = 2);

// Every isomorphism class of module with socle multiplicities within
// `bounds` embeds in the cogenerator C = (+) E(S_v)^bounds[v], so the
// submodule lattice of C, filtered by composition length and deduplicated
// up to isomorphism, is a complete census of those classes.
struct Census {
  AlgebraPtr algebra;
  std::map<int, int> bounds;
  int max_length = 0;
  RightModule cogenerator;
  std::vector<RightModule> representatives;  // pairwise non-isomorphic
  uint64_t submodules_examined = 0;
  bool partial = false;  // a cap stopped the build early
};

Census build_census(const AlgebraPtr& a, const std::map<int, int>& bounds,
                    int max_length, const Caps& caps = {});

struct TheoremVerdict {
  std::string id;
  std::string universe;
  uint64_t instances_checked = 0;
  bool holds = false;
  bool applicable = true;  // hypotheses met in this universe
  std::string witness;     // counterexample data when holds is false
  std::vector<std::string> notes;
};

// Worked scenario 1: over the fan-3 ring at GF(2), the projective P(1) is
// invariant under every automorphism of its hull yet not quasi-injective.
TheoremVerdict scenario_example1();

// Worked scenario 2: over the fan-4 ring at GF(2), the amalgam
// B = B1 + B2 inside E(S2)+E(S3)+E(S4) is automorphism-invariant,
// indecomposable, of length 5, and not local.
TheoremVerdict scenario_example2();

// The module B of scenario 2 together with its ambient injective and the
// two arms, exposed for reuse in censuses and reports.
struct GluedModule {
  RightModule ambient;  // E(S2) + E(S3) + E(S4)
  Subspace b1, b2, b;   // arms and their sum, as subspaces of the ambient
};
GluedModule example2_module();

// Census-quantified checks. Each verdict records its universe; none claims
// more than the census it ran on.
TheoremVerdict check_hierarchy(const Census& c);
TheoremVerdict check_projection_invariance(const Census& c,
                                           const Caps& caps = {});
TheoremVerdict check_split_decomposition(const Census& c,
                                         const Caps& caps = {});
TheoremVerdict check_invariance_equals_quasi(const Census& c,
                                             const Caps& caps = {});
TheoremVerdict check_repeated_block_split(const Census& c,
                                          const Caps& caps = {});
TheoremVerdict check_uniform_or_binary_scalars(const Census& c,
                                               const Caps& caps = {});
TheoremVerdict check_invariance_implies_pseudo(const Census& c,
                                               const Caps& caps = {});
TheoremVerdict check_socle_complement_quotients(const Census& c,
                                                const Caps& caps = {});
TheoremVerdict check_local_type_panel(const Census& c, const Caps& caps = {});
TheoremVerdict scan_c2_question(const Census& c, const Caps& caps = {});
TheoremVerdict check_summand_facts(const Census& c, const Caps& caps = {});

// All scenarios plus every census check over the bundled rings at GF(2)
// and GF(3), including a widened census that makes the repeated-block
// check non-vacuous. Deterministic order.
std::vector<TheoremVerdict> run_full_suite(const Caps& caps = {});

}  // namespace modlab
