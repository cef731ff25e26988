// Exact polynomial coordinate-chart engine: Poisson brackets, connection
// data, torsion/curvature, omega-compatibility, centrality, the N and E
// obstruction tensors, and the semiclassical braiding with its Yang-Baxter
// residuals.  All coefficient functions are MultiPoly over the chart
// variables x1..xn, so every identity below is decidable by exact equality.
//
// Index conventions (fixed once, used everywhere):
//   * gamma[k][i][j]            = G^k_{ij}; the FIRST lower slot is the
//                                 derivative direction: (D_V W)^l = V^k (d_k W^l + G^l_{ki} W^i),
//                                 and on 1-forms (D_k a)_n = d_k a_n - G^i_{kn} a_i.
//   * torsion T[k][i][j]        = T^k_{ij} = G^k_{ij} - G^k_{ji}.
//   * curvature R[l][i][j][k]   = R^l_{ijk} = d_j G^l_{ki} - d_k G^l_{ji}
//                                 + G^m_{ki} G^l_{jm} - G^m_{ji} G^l_{km}.
//   * hat vector field of x     : (x-hat)^q = w^{kq} d_k x, and the pairing
//                                 <x-hat, a_n dx^n> = w^{kn} (d_k x) a_n.
//   * lowered curvature         : R_{smkq} = w_{st} R^t_{mkq} (first index
//                                 lowered with the inverse matrix w_{ij}).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiclass/multipoly.hpp"

namespace semiclass {

using PolyVec = std::vector<MultiPoly>;
using PolyMat = std::vector<PolyVec>;
using PolyRank3 = std::vector<PolyMat>;
using PolyRank4 = std::vector<PolyRank3>;
using PolyRank5 = std::vector<PolyRank4>;

// A polynomial chart: antisymmetric bivector components w^{ij}, connection
// coefficients G^k_{ij}, and (optionally, when the bivector is invertible)
// the inverse matrix w_{ij} with w^{ij} w_{jk} = delta^i_k exactly.
struct Chart {
  unsigned n = 0;
  PolyMat omega;                        // omega[i][j] = w^{ij}
  PolyRank3 gamma;                      // gamma[k][i][j] = G^k_{ij}
  std::optional<PolyMat> omega_lower;   // omega_lower[i][j] = w_{ij}
};

// A differential form with polynomial components in the dx basis.  Degree 1
// stores n components a_i (the form a_i dx^i); degree 2 stores an n*n
// component matrix comps[i*n+j], required antisymmetric.
struct FormField {
  unsigned degree = 1;
  unsigned n = 0;
  PolyVec comps;
};

// The coefficients c_n^{ik} of the induced covariant-exterior datum
// gamma(x^k, dx^i) = c_n^{ik} dx^n, stored as c[nn][i][k].
struct CTensorField {
  PolyRank3 c;
};

// Validates shapes, variable lists, antisymmetry of omega, and (when present)
// the exact inverse identity for omega_lower.  Throws std::invalid_argument.
void chart_check(const Chart& chart);

// Validates a form against a chart (degree 1 or 2, component count, variable
// lists, degree-2 antisymmetry).  Throws std::invalid_argument.
void form_check(const Chart& chart, const FormField& form);

// Convenience builders.
MultiPoly chart_zero(const Chart& chart);
MultiPoly chart_const(const Chart& chart, const Rational& value);
MultiPoly chart_parse(const Chart& chart, const std::string& text);
FormField one_form(const Chart& chart, PolyVec components);
// The coordinate differential dx^i as a FormField (constant components).
FormField coordinate_differential(const Chart& chart, unsigned i);
// The exterior differential of a function: (df)_i = d_i f.
FormField differential(const Chart& chart, const MultiPoly& f);

// {f,g} = w^{ij} (d_i f)(d_j g).  Throws on variable mismatch.
MultiPoly poisson(const Chart& chart, const MultiPoly& f, const MultiPoly& g);

// J[i][j][k] = w^{is} d_s w^{jk} + w^{js} d_s w^{ki} + w^{ks} d_s w^{ij};
// zero iff the bivector is Poisson.
PolyRank3 jacobi_residual_chart(const Chart& chart);

// c_n^{ik} = -w^{kq} G^i_{qn}, returned as c[nn][i][k].
CTensorField c_from_gamma(const Chart& chart);

// gamma(y, a_i dx^i) = (w^{kq} d_q a_n + c_n^{ik} a_i)(d_k y) dx^n with c
// built from the chart's connection.  `a` must be degree 1.
FormField gamma_apply(const Chart& chart, const MultiPoly& y, const FormField& a);
// Same contraction with an explicitly supplied c tensor (used to probe
// deliberately incompatible data).
FormField gamma_apply_with_c(const Chart& chart, const CTensorField& c,
                             const MultiPoly& y, const FormField& a);

PolyRank3 torsion_chart(const Chart& chart);    // T[k][i][j]
PolyRank4 curvature_chart(const Chart& chart);  // R[l][i][j][k]

// res[nn][i][j] = D_n w^{ij} + w^{iq} T^j_{qn} + w^{qj} T^i_{qn}, where
// D_n w^{ij} = d_n w^{ij} + G^i_{nq} w^{qj} + G^j_{nq} w^{iq}.
PolyRank3 nabla_omega_residual(const Chart& chart);

// True iff the bivector is covariantly constant and the torsion vanishes.
// Requires omega_lower (the invertible case); throws without it.
bool centrality_predicate(const Chart& chart);

// N[k][j][i][l] = N^k_{jil} = T^k_{ji;l} + (1/2) R^k_{jli}
//                 + T^n_{jl} T^k_{in} + (1/2) T^n_{li} T^k_{jn},
// with T^k_{ji;l} the covariant derivative of the torsion in the slot l.
PolyRank4 n_tensor_field(const Chart& chart);

// E[nn][k][l][i] = E^{nk}_{li} = w^{jn} N^k_{jil}.
PolyRank4 e_tensor_field(const Chart& chart);

// res[m][nn][k][l][i] = D_m E^{nk}_{li}  (one connection term per index,
// signs by variance).
PolyRank5 e_constancy_residual(const Chart& chart);

// The coordinate lift of the semiclassical braiding on a decomposable pair:
//   rho~(tau (x) eta) = w^{jq} w^{is} tau_j eta_i R_{smkq} dx^k (x) dx^m
//                       - w^{sq} (D_s tau) (x) (D_q eta).
// Returned as a list of decomposable summands (left leg, right leg); scalar
// prefactors are folded into the left leg.  Requires omega_lower for the
// index lowering; throws without it.
std::vector<std::pair<FormField, FormField>> rho_tilde(const Chart& chart,
                                                       const FormField& tau,
                                                       const FormField& eta);

// Collapses a decomposable-pair list to the component matrix out[k][m] of
// dx^k (x) dx^m.
PolyMat collapse_pair_terms(const Chart& chart,
                            const std::vector<std::pair<FormField, FormField>>& terms);

// The six-term classical Yang-Baxter residual
//   (r12 r23 + r13 r23 + r12 r13 - r13 r12 - r23 r12 - r23 r13)(zeta (x) eta (x) xi)
// with r = rho~ acting on the indicated tensor legs, collapsed to the
// component array out[i][j][k] of dx^i (x) dx^j (x) dx^k.
PolyRank3 rho_cyb_residual(const Chart& chart, const FormField& zeta,
                           const FormField& eta, const FormField& xi);

// Components of (rho~ + rho~_21)(tau (x) eta); zero iff the braiding is
// antisymmetric on this pair.
PolyMat rho_antisym_residual(const Chart& chart, const FormField& tau,
                             const FormField& eta);

// The cyclic torsion functional: the sum over the cycle x -> y -> z -> x of
//   <x-hat, gamma(y, dz)> - <y-hat, gamma(x, dz)>,
// which computes T(x-hat, y-hat)(dz) + cyclic; identically zero for
// compatible charts.
MultiPoly torsion_cyclic_residual(const Chart& chart, const MultiPoly& x,
                                  const MultiPoly& y, const MultiPoly& z);
// Same cyclic sum with an explicitly supplied c tensor in place of the
// chart-induced one.
MultiPoly torsion_cyclic_residual_with_c(const Chart& chart, const CTensorField& c,
                                         const MultiPoly& x, const MultiPoly& y,
                                         const MultiPoly& z);

// The flat two-coordinate invariant-basis model of the noncommutative torus:
// w = [[0,1],[-1,0]], G = 0, with omega_lower populated.
Chart preset_torus_chart();

// JSON encoding {n, omega: [[poly]], gamma: [[[poly]]], omega_lower?: [[poly]]}
// using the polynomial text grammar.  The loader validates via chart_check and
// reports the JSON path of any offending entry.
Chart chart_from_json_text(const std::string& text);
std::string chart_to_json_text(const Chart& chart);

}  // namespace semiclass
