#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlab/algebra.hpp"
#include "modlab/caps.hpp"
#include "modlab/mat.hpp"
#include "modlab/subspace.hpp"

namespace modlab {

// Finite right module: one action matrix per algebra basis element, acting on
// coordinate row vectors, v * action(a). Handles are cheap to copy; the data
// is shared and immutable.
class RightModule {
 public:
  const AlgebraPtr& algebra() const { return impl_->alg; }
  // The algebra has at least one basis element, so actions is never empty.
  int dim() const { return impl_->actions[0].rows(); }
  const Mat& action(int a) const { return impl_->actions[a]; }
  const std::string& name() const { return impl_->name; }

  std::vector<uint8_t> act(const std::vector<uint8_t>& v, int a) const {
    return impl_->actions[a].apply_row(v);
  }

  // Action of a general algebra element given by coordinates.
  Mat action_of(const std::vector<uint8_t>& x) const;

  RightModule renamed(std::string name) const;

 private:
  RightModule() = default;

  struct Impl {
    AlgebraPtr alg;
    std::vector<Mat> actions;
    std::string name;
  };
  std::shared_ptr<const Impl> impl_;

  friend RightModule make_module(AlgebraPtr, std::vector<Mat>, std::string);
};

// Validates the axioms: one square matrix per basis element, the unit acts
// as the identity, and action(a) * action(b) matches the product table.
RightModule make_module(AlgebraPtr a, std::vector<Mat> actions,
                        std::string name = "");

RightModule zero_module(const AlgebraPtr& a);
RightModule simple_module(const AlgebraPtr& a, int vertex);
RightModule regular_module(const AlgebraPtr& a);
// e_v A on the labels in row v.
RightModule projective_right(const AlgebraPtr& a, int vertex);
// A e_v as a right module over the opposite algebra.
RightModule projective_left(const AlgebraPtr& a, int vertex);
RightModule direct_sum(const std::vector<RightModule>& parts);

struct Submodule {
  RightModule parent;
  Subspace space;
};

bool is_action_closed(const RightModule& m, const Subspace& s);

// Smallest submodule containing the given vectors.
Submodule spin(const RightModule& m,
               const std::vector<std::vector<uint8_t>>& gens);

// Largest semisimple submodule: the annihilator of the radical.
Submodule socle(const RightModule& m);
// M * J.
Submodule radical_submodule(const RightModule& m);

// M >= MJ >= MJ^2 >= ... >= 0, endpoints included.
std::vector<Subspace> radical_series(const RightModule& m);
// 0 <= Soc <= Soc^2 <= ... <= M, endpoints included.
std::vector<Subspace> socle_series(const RightModule& m);

int composition_length(const RightModule& m);
// Vertex -> multiplicity over all radical layers.
std::map<int, int> composition_factors(const RightModule& m);
// Vertex -> multiplicity inside the socle.
std::map<int, int> socle_factors(const RightModule& m);
int goldie_dimension(const RightModule& m);
bool socle_square_free(const RightModule& m);

// N essential in M: it meets every nonzero submodule, which at finite length
// is the same as containing the socle.
bool is_essential(const RightModule& m, const Subspace& n);

// Elements whose right annihilator is an essential right ideal. Enumerates
// the module, so dim is bounded by caps.max_vectors.
Submodule singular_submodule(const RightModule& m, const Caps& caps = {});

// Every submodule, sorted by dimension then basis. Spins all cyclic
// submodules and closes under sums.
std::vector<Subspace> submodule_lattice(const RightModule& m,
                                        const Caps& caps = {});

// The induced module structure on an action-closed subspace, in the
// coordinates of its canonical basis.
RightModule restrict_to(const RightModule& m, const Subspace& s);

// M/N together with the projection matrix (dim M x dim M/N).
std::pair<RightModule, Mat> quotient_module(const RightModule& m,
                                            const Subspace& n);

// Full coordinate space projection matrix of F^n -> F^n / W on row vectors.
Mat quotient_projection(const Subspace& w);

class HomSpace {
 public:
  HomSpace(RightModule source, RightModule target, std::vector<Mat> basis)
      : source_(std::move(source)),
        target_(std::move(target)),
        basis_(std::move(basis)) {}

  const RightModule& source() const { return source_; }
  const RightModule& target() const { return target_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }

  // Number of elements p^dim; throws CapExceeded past the cap.
  uint64_t count(uint64_t cap) const;
  // Element number k in coefficient order.
  Mat element(uint64_t k) const;

 private:
  RightModule source_, target_;
  std::vector<Mat> basis_;
};

// All intertwiners source -> target, canonical basis.
HomSpace hom_space(const RightModule& source, const RightModule& target);

bool is_intertwiner(const RightModule& source, const RightModule& target,
                    const Mat& h);

std::optional<Mat> find_isomorphism(const RightModule& m,
                                    const RightModule& n,
                                    const Caps& caps = {});
bool is_isomorphic(const RightModule& m, const RightModule& n,
                   const Caps& caps = {});

// Idempotents of End(M) in enumeration order.
std::vector<Mat> idempotent_endos(const RightModule& m,
                                  const Caps& caps = {});
// Images of the idempotent endomorphisms, deduplicated and sorted.
std::vector<Subspace> direct_summands(const RightModule& m,
                                      const Caps& caps = {});
bool is_indecomposable(const RightModule& m, const Caps& caps = {});
// Splits M along idempotents until every piece is indecomposable.
std::vector<RightModule> indecomposable_summands(const RightModule& m,
                                                 const Caps& caps = {});

bool is_simple(const RightModule& m);
bool is_semisimple(const RightModule& m);
// Exactly one simple in the socle.
bool is_uniform(const RightModule& m);
// Submodules form a chain; at finite length this is the same as every
// radical layer having dimension at most one.
bool is_uniserial(const RightModule& m);
// Unique maximal submodule.
bool is_local_module(const RightModule& m);

}  // namespace modlab
