#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modlab/caps.hpp"
#include "modlab/module.hpp"

namespace modlab {

// Indecomposable injective with socle S_vertex: the linear dual of the left
// projective at the vertex, with the transposed left action.
RightModule indecomposable_injective(const AlgebraPtr& a, int vertex);

struct HullBlock {
  int vertex;
  int copy;
  int offset;  // first coordinate of the block inside the hull
  int dim;
};

struct InjectiveHull {
  RightModule source;
  RightModule hull;
  // dim(source) x dim(hull) injective intertwiner, the identity on socles.
  Mat embedding;
  std::vector<HullBlock> blocks;
  std::map<int, int> multiplicities;  // vertex -> number of blocks
};

// Hull assembled from the socle: one indecomposable injective per socle
// factor, embedding solved as a linear extension of the socle transport.
InjectiveHull injective_hull(const RightModule& m);

bool is_injective(const RightModule& m);

struct CheckResult {
  bool value = false;
  std::string witness;  // set when value is false

  explicit operator bool() const { return value; }
};

// Invariance of the embedded module under every endomorphism of its hull.
// The maps fixing the image form a subspace, so checking the basis of
// End(E) decides it.
CheckResult is_quasi_injective(const RightModule& m);

struct UnitSweep {
  bool invariant = true;
  uint64_t units = 0;     // automorphisms of the hull
  uint64_t elements = 0;  // all hull endomorphisms swept
  uint64_t witness_index = 0;
  std::string witness;
};

// Invariance under every automorphism of the hull. Units do not form a
// subspace, so the whole endomorphism ring is enumerated; the reported
// witness is the least failing index regardless of execution policy.
UnitSweep automorphism_sweep(const RightModule& m, const Caps& caps = {});
CheckResult is_automorphism_invariant(const RightModule& m,
                                      const Caps& caps = {});

// Every monomorphism from a submodule into the module extends to an
// endomorphism. Sweeps each submodule's hom space.
CheckResult is_pseudo_injective(const RightModule& m, const Caps& caps = {});

// Every submodule is essential in a direct summand.
CheckResult check_c1(const RightModule& m, const Caps& caps = {});
// Submodules isomorphic to direct summands are direct summands.
CheckResult check_c2(const RightModule& m, const Caps& caps = {});
// Sums of independent direct summands are direct summands.
CheckResult check_c3(const RightModule& m, const Caps& caps = {});

// m is n-injective: maps from submodules of n into m extend to n.
bool is_relatively_injective(const RightModule& m, const RightModule& n,
                             const Caps& caps = {});

// Endomorphisms cover every map onto the quotients of m.
CheckResult is_quasi_projective(const RightModule& m, const Caps& caps = {});

enum class Flag { no, yes, unknown };

const char* flag_name(Flag f);

// One-stop structural report. Cap overruns turn the affected flag to
// unknown instead of failing the whole profile.
struct PropertyProfile {
  int dim = 0;
  int length = 0;
  int goldie = 0;
  int loewy = 0;
  int top_dim = 0;
  std::map<int, int> factors;
  std::map<int, int> socle;
  std::map<int, int> hull_blocks;
  uint64_t end_count = 0;       // |End(M)|
  uint64_t hull_end_count = 0;  // |End(E(M))|
  uint64_t hull_aut_count = 0;  // |Aut(E(M))|
  Flag injective = Flag::unknown;
  Flag quasi_injective = Flag::unknown;
  Flag automorphism_invariant = Flag::unknown;
  Flag pseudo_injective = Flag::unknown;
  Flag c1 = Flag::unknown;
  Flag c2 = Flag::unknown;
  Flag c3 = Flag::unknown;
  Flag quasi_projective = Flag::unknown;
  bool uniform = false;
  bool uniserial = false;
  bool local = false;
  bool indecomposable = false;
  bool semisimple = false;
  bool simple = false;
  bool square_free_socle = false;
  std::map<std::string, std::string> witnesses;

  // Derived exchange-condition flags.
  Flag cs() const { return c1; }
  Flag continuous() const { return flag_and(c1, c2); }
  Flag quasi_continuous() const { return flag_and(c1, c3); }

  static Flag flag_and(Flag a, Flag b) {
    if (a == Flag::no || b == Flag::no) return Flag::no;
    if (a == Flag::unknown || b == Flag::unknown) return Flag::unknown;
    return Flag::yes;
  }
};

PropertyProfile property_profile(const RightModule& m, const Caps& caps = {});

}  // namespace modlab
