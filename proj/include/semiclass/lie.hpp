// Lie algebras as exact structure constants, Killing forms, quasitriangular
// r-matrices, Schouten brackets, cobrackets, and the obstruction tensors
// n = [[r-,r-]] and m = [r-13, r-23].
#pragma once

#include <string>
#include <vector>

#include "semiclass/tensor.hpp"

namespace semiclass {

// Bracket convention: [e_a, e_b] = f(a,b,c) e_c.
struct LieAlgebra {
  std::string name;  // preset name, or "custom" for loaded input
  unsigned dim = 0;
  std::vector<std::string> basis_names;
  Tensor f;  // rank 3
};

// r lives in g (x) g over a fixed algebra.
struct RMatrix {
  LieAlgebra algebra;
  Tensor value;  // rank 2
};

// delta(e_a) = value(a,b,c) e_b (x) e_c: input leg first.
struct Cobracket {
  LieAlgebra algebra;
  Tensor value;  // rank 3
};

// Presets: "sl2" (basis e+, e-, e3 with [e3,e+-] = +-2e+-, [e+,e-] = e3),
// "sl3"/"sl4" (Chevalley basis: E_ij for i<j, then E_ji, then
// h_a = E_aa - E_{a+1,a+1}), "so5" (M_ij = E_ij - E_ji, i<j), and
// "b2" (basis H, X with [H,X] = X). Structure constants are generated from
// exact matrix commutators in the defining representation.
LieAlgebra preset_algebra(const std::string& name);

// Defining-representation matrices for the preset basis, used to generate
// structure constants and as an independent oracle in tests.
std::vector<std::vector<std::vector<Rational>>> fundamental_matrices(const std::string& name);

// Helper for moduli tests: the d-dimensional abelian algebra.
LieAlgebra abelian_algebra(unsigned dim);

// Sum over cyclic rotations of f_{ab}^s f_{sc}^d; zero iff Jacobi holds.
Tensor jacobi_residual(const LieAlgebra& L);

// K(a,b) = f_{as}^t f_{bt}^s.
Tensor killing(const LieAlgebra& L);

// Residual of ad-invariance for a rank-k tensor:
//   res(v, i_1..i_k) = sum_j f_{v s}^{i_j} T(i_1, .., s at slot j, .., i_k),
// the infinitesimal action of e_v on T leg by leg.
Tensor ad_invariance_residual(const LieAlgebra& L, const Tensor& T);

// The Drinfeld-Sklyanin r for sl_n presets:
//   r = sum_{i<j} E_ij (x) E_ji + 1/2 sum_{a,b} (G^{-1})_{ab} h_a (x) h_b,
// G_ab = tr(h_a h_b). For sl2 this is e+ (x) e- + 1/4 e3 (x) e3.
RMatrix standard_r(const LieAlgebra& L);

// The antisymmetric witness r = X (x) H - H (x) X on b2 (r+ = 0).
RMatrix triangular_r_b2();

// [[a,b]] = [a12,b13] + [a12,b23] + [a13,b23], each commutator taken on the
// shared tensor leg.
Tensor schouten(const RMatrix& a, const RMatrix& b);

Tensor cybe_residual(const RMatrix& r);          // [[r,r]]
Tensor n_tensor(const RMatrix& r);               // [[r-,r-]]
Tensor m_tensor(const RMatrix& r);               // [r-13, r-23]

RMatrix r_plus(const RMatrix& r);
RMatrix r_minus(const RMatrix& r);

// delta(v) = ad_v(r) = [v, r^1] (x) r^2 + r^1 (x) [v, r^2].
Cobracket cobracket_from_r(const RMatrix& r);

// delta([v,w]) - ad_v delta(w) + ad_w delta(v), indexed (v,w,b,c).
Tensor cocycle_residual(const Cobracket& delta);

// Cyclic sum over the three output legs of (delta (x) id) delta, indexed
// (v, p, q, c); zero iff co-Jacobi holds.
Tensor cojacobi_residual(const Cobracket& delta);

// flip(f) - f; always antisymmetric.
Tensor r_minus_from_cochain(const Tensor& f);

}  // namespace semiclass
