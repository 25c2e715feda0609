#pragma once

#include <cstdint>

namespace modlab {

// Budgets for the exhaustive enumerations. Exceeding one raises CapExceeded;
// nothing is silently truncated.
struct Caps {
  uint64_t max_vectors = uint64_t(1) << 22;   // vectors enumerated per subspace
  uint64_t max_hom_elements = uint64_t(1) << 20;  // elements of a hom space swept
  uint64_t max_lattice = 1000000;             // submodules collected per lattice

  static Caps unlimited() {
    Caps c;
    c.max_vectors = UINT64_MAX;
    c.max_hom_elements = UINT64_MAX;
    c.max_lattice = UINT64_MAX;
    return c;
  }
};

}  // namespace modlab
