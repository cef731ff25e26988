// Exact coordinate algebra of the standard 2x2 unimodular matrix chart and
// the invariant-frame differential geometry living on it.
//
// The function algebra is generated by the matrix entries a, b, c, d of
// M = [[a, b], [c, d]] subject to the single relation a*d - b*c = 1.  Every
// element is kept in a canonical form in which no monomial contains both a
// and d: such monomials are rewritten with a*d -> 1 + b*c until none remain.
// The rewrite terminates (each step lowers the total a,d-degree of the
// monomial it touches) and is confluent (each offending monomial has exactly
// one reduct), so the canonical form is unique and equality of SU2Poly
// values is equality in the quotient algebra.
//
// Frame conventions (frozen; see docs/CONVENTIONS.md):
//   * Basis of the symmetry algebra: index 0 = e+, 1 = e-, 2 = e3, with
//     matrices X+ = [[0,1],[0,0]], X- = [[0,0],[1,0]], X3 = [[1,0],[0,-1]].
//   * dL(v, f) is the left-translation derivation: the derivative of f along
//     t -> M * exp(t X_v) at t = 0.  dR(v, f) uses t -> exp(t X_v) * M.
//     Both are derivations of the quotient algebra and commute with each
//     other.  We abbreviate the partials del_v = dL(v, .).
//   * tau^0, tau^1, tau^2 (written tau+, tau-, tau3) is the left-invariant
//     coframe; InvariantOneForm stores coefficients with respect to it, and
//     the differential is d f = (del_i f) tau^i.
//   * The bracket is built from the antisymmetric half r_ = r_minus of the
//     stored standard sl2 r-matrix, r_ = (1/2)(e+ (x) e- - e- (x) e+):
//       {x, y} = sum_{p,q} r_^{pq} [ dL_p x dL_q y - dR_p x dR_q y ].
//   * su2_poisson_frame() returns the frame coefficients w^{ij} with
//     {x, y} = sum w^{ij} (del_i x)(del_j y); the induced pairing of the
//     bracket-derivation of x against a one-form is
//       su2_pairing(x, eta) = sum_{k,i} w^{ki} (del_k x) eta_i,
//     so su2_pairing(x, d z) = {x, z}.
//   * A preconnection tensor X = Xi.value (rank 3, dimension 3) acts on the
//     coframe through gamma(x, tau^i)_j = sum_p (del_p x) X(j, p, i), and on
//     general forms through the Leibniz rule
//       gamma(x, eta_i tau^i) = {x, eta_i} tau^i + eta_i gamma(x, tau^i).
//   * Torsion pairs the bracket-derivation against the covariant derivative:
//       torsion_pair(x, y, z) = <x-hat, gamma(y, dz)> - <y-hat, gamma(x, dz)>.
//   * Curvature is the action commutator:
//       R(x, y) eta = gamma(x, gamma(y, eta)) - gamma(y, gamma(x, eta))
//                     - gamma({x, y}, eta).

#pragma once

#include <array>
#include <string>
#include <vector>

#include "semiclass/lie.hpp"
#include "semiclass/multipoly.hpp"
#include "semiclass/rational.hpp"
#include "semiclass/xi.hpp"

namespace semiclass {

// Variable list of the coordinate algebra: {"a", "b", "c", "d"}.
const std::vector<std::string>& su2_variables();

// An element of the coordinate algebra, always held in canonical form.
struct SU2Poly {
  MultiPoly value;

  SU2Poly();                               // zero
  explicit SU2Poly(const MultiPoly& raw);  // canonicalizes

  bool is_zero() const { return value.is_zero(); }
  std::string to_string() const { return value.to_string(); }

  SU2Poly operator-() const;
  SU2Poly operator+(const SU2Poly& o) const;
  SU2Poly operator-(const SU2Poly& o) const;
  SU2Poly operator*(const SU2Poly& o) const;
  SU2Poly& operator+=(const SU2Poly& o);
  SU2Poly& operator-=(const SU2Poly& o);
  bool operator==(const SU2Poly& o) const { return value == o.value; }
  bool operator!=(const SU2Poly& o) const { return !(*this == o); }
};

SU2Poly operator*(const Rational& k, const SU2Poly& p);

// Canonical form of a raw polynomial in a, b, c, d: rewrites every monomial
// containing both a and d via a*d -> 1 + b*c until none remains.
SU2Poly normal_form(const MultiPoly& raw);

SU2Poly su2_zero();
SU2Poly su2_one();
SU2Poly su2_constant(const Rational& k);
SU2Poly su2_generator(unsigned g);  // 0,1,2,3 -> a,b,c,d
SU2Poly su2_parse(const std::string& text);

// Left/right translation derivations; v indexes the basis (0 = e+, 1 = e-,
// 2 = e3).  The string overloads accept the basis names "e+", "e-", "e3".
// Both throw std::invalid_argument on an unknown basis element.
SU2Poly dL(unsigned v, const SU2Poly& p);
SU2Poly dR(unsigned v, const SU2Poly& p);
SU2Poly dL(const std::string& v, const SU2Poly& p);
SU2Poly dR(const std::string& v, const SU2Poly& p);

// Bracket from the antisymmetrized standard r-matrix (see header comment).
SU2Poly poisson_su2(const SU2Poly& x, const SU2Poly& y);

// A one-form written in the left-invariant coframe: comps[i] multiplies
// tau^i, i = 0, 1, 2 <-> tau+, tau-, tau3.
struct InvariantOneForm {
  std::array<SU2Poly, 3> comps;

  bool is_zero() const;
  InvariantOneForm operator-() const;
  InvariantOneForm operator+(const InvariantOneForm& o) const;
  InvariantOneForm operator-(const InvariantOneForm& o) const;
  bool operator==(const InvariantOneForm& o) const;
  bool operator!=(const InvariantOneForm& o) const { return !(*this == o); }
};

InvariantOneForm operator*(const SU2Poly& f, const InvariantOneForm& w);
InvariantOneForm operator*(const Rational& k, const InvariantOneForm& w);

InvariantOneForm su2_basis_form(unsigned i);          // tau^i
InvariantOneForm su2_differential(const SU2Poly& x);  // (del_i x) tau^i

// Frame coefficients w^{ij} of the bracket in the left-invariant frame:
// {x, y} = sum w^{ij} (del_i x)(del_j y).
const std::array<std::array<SU2Poly, 3>, 3>& su2_poisson_frame();

// <x-hat, eta> = sum_{k,i} w^{ki} (del_k x) eta_i; satisfies
// su2_pairing(x, su2_differential(z)) == poisson_su2(x, z).
SU2Poly su2_pairing(const SU2Poly& x, const InvariantOneForm& eta);

// Covariant action of the distinguished bicovariant preconnection, defined
// directly by its coframe images
//   gamma(x, tau+) = -(del_- x) tau3
//   gamma(x, tau-) = -(del_+ x) tau3
//   gamma(x, tau3) = (1/2)((del_+ x) tau+ + (del_- x) tau-)
// extended to general forms by the Leibniz rule.
InvariantOneForm gamma_canonical_su2(const SU2Poly& x, const InvariantOneForm& eta);

// Covariant action of an arbitrary preconnection tensor on this chart
// through the left-trivialization dictionary (see header comment).  The
// tensor must have dimension 3 and rank 3; throws std::invalid_argument
// otherwise.
InvariantOneForm gamma_from_xi_su2(const Xi& xi, const SU2Poly& x, const InvariantOneForm& eta);

// Torsion functional <x-hat, gamma(y, dz)> - <y-hat, gamma(x, dz)>.
SU2Poly torsion_pair_su2(const Xi& xi, const SU2Poly& x, const SU2Poly& y, const SU2Poly& z);

// Curvature action gamma_x gamma_y - gamma_y gamma_x - gamma_{[x,y]} on eta.
InvariantOneForm curvature_action_su2(const Xi& xi, const SU2Poly& x, const SU2Poly& y,
                                      const InvariantOneForm& eta);

}  // namespace semiclass
