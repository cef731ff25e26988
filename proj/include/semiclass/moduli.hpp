// Classification of symmetric ad-invariant preconnection data by exact
// linear algebra: assemble the invariance + symmetry constraints as one
// sparse rational system and read off its kernel.
#pragma once

#include <string>
#include <vector>

#include "semiclass/lie.hpp"
#include "semiclass/matrix.hpp"
#include "semiclass/xi.hpp"

namespace semiclass {

struct ModuliResult {
  std::string algebra;
  std::size_t dimension = 0;
  std::vector<XiHat> basis;  // canonical kernel basis, reshaped
};

// Linear system in the d*d*d unknowns X(a,b,c), column (a*d + b)*d + c
// (Tensor's flat layout, so kernel vectors reshape directly): one
// ad-invariance equation per ordered basis pair (v,w), diagonal included,
// and output index (b,c), followed by the output-symmetry equations
// X(a,b,c) = X(a,c,b) for b < c.
RationalMatrix invariant_constraint_matrix(const LieAlgebra& L);

// Exact kernel of the constraint system; every basis element is a symmetric
// ad-invariant XiHat.
ModuliResult moduli_dimension(const LieAlgebra& L);

// Symmetrized-trace d-symbol of sl_n in the defining representation,
//   d(a,b,c) = tr(T_a (T_b T_c + T_c T_b)),
// with both output indices raised by the inverse Killing form. This spans
// the nontrivial moduli direction for n >= 3; any nonzero multiple is the
// same point of the projectivized kernel. Throws std::invalid_argument for
// n < 3 (the sl2 d-symbol vanishes identically).
XiHat cubic_casimir(unsigned n);

}  // namespace semiclass
