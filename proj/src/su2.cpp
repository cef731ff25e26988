#include "semiclass/su2.hpp"

#include <stdexcept>
#include <utility>

namespace semiclass {

namespace {

MultiPoly zero_raw() { return MultiPoly::constant(su2_variables(), 0); }

// Rewrites every monomial containing both a and d via a*d -> 1 + b*c until
// none remains.  Terminates because each step strictly lowers the combined
// a,d-degree of the monomial it touches; each offending monomial has exactly
// one reduct, so the result is independent of the rewrite order.
MultiPoly reduce(MultiPoly work) {
  if (work.variables() != su2_variables())
    throw std::invalid_argument("su2: polynomial must use the variables a, b, c, d");
  for (;;) {
    bool changed = false;
    for (const auto& [exps, coeff] : work.terms()) {
      if (exps[0] >= 1 && exps[3] >= 1) {
        const Rational k = coeff;
        MultiPoly delta = zero_raw();
        delta.add_term(exps, -k);
        std::vector<unsigned> e1 = exps;
        e1[0] -= 1;
        e1[3] -= 1;
        delta.add_term(e1, k);
        std::vector<unsigned> e2 = e1;
        e2[1] += 1;
        e2[2] += 1;
        delta.add_term(e2, k);
        work += delta;
        changed = true;
        break;  // the term map changed; restart the scan
      }
    }
    if (!changed) return work;
  }
}

struct GenImage {
  int target;  // generator index the image lands on, or -1 for zero
  int sign;
};
using ImageTable = std::array<GenImage, 4>;

// Images of (a, b, c, d) under the left-translation derivations, read off
// from M * X_v with M = [[a, b], [c, d]]:
//   dL(e+): (0, a, 0, c)   dL(e-): (b, 0, d, 0)   dL(e3): (a, -b, c, -d)
const std::array<ImageTable, 3>& left_tables() {
  static const std::array<ImageTable, 3> t = {{
      {{{-1, 0}, {0, 1}, {-1, 0}, {2, 1}}},
      {{{1, 1}, {-1, 0}, {3, 1}, {-1, 0}}},
      {{{0, 1}, {1, -1}, {2, 1}, {3, -1}}},
  }};
  return t;
}

// Images under the right-translation derivations, from X_v * M:
//   dR(e+): (c, d, 0, 0)   dR(e-): (0, 0, a, b)   dR(e3): (a, b, -c, -d)
const std::array<ImageTable, 3>& right_tables() {
  static const std::array<ImageTable, 3> t = {{
      {{{2, 1}, {3, 1}, {-1, 0}, {-1, 0}}},
      {{{-1, 0}, {-1, 0}, {0, 1}, {1, 1}}},
      {{{0, 1}, {1, 1}, {2, -1}, {3, -1}}},
  }};
  return t;
}

SU2Poly apply_derivation(const ImageTable& img, const SU2Poly& p) {
  MultiPoly out = zero_raw();
  for (const auto& [exps, coeff] : p.value.terms()) {
    for (unsigned g = 0; g < 4; ++g) {
      if (exps[g] == 0 || img[g].target < 0) continue;
      std::vector<unsigned> e = exps;
      e[g] -= 1;
      e[static_cast<unsigned>(img[g].target)] += 1;
      out.add_term(e, coeff * frac(static_cast<long>(exps[g]) * img[g].sign, 1));
    }
  }
  return SU2Poly(out);
}

unsigned basis_index(const std::string& v) {
  if (v == "e+") return 0;
  if (v == "e-") return 1;
  if (v == "e3") return 2;
  throw std::invalid_argument("su2: unknown basis element '" + v + "'");
}

void check_basis_index(unsigned v) {
  if (v >= 3) throw std::invalid_argument("su2: basis index out of range (0, 1, 2)");
}

const Tensor& sl2_r_minus() {
  static const Tensor rm = r_minus(standard_r(preset_algebra("sl2"))).value;
  return rm;
}

void check_xi_shape(const Xi& xi) {
  if (xi.value.dim() != 3 || xi.value.rank() != 3)
    throw std::invalid_argument(
        "su2: preconnection tensor must have dimension 3 and rank 3");
}

}  // namespace

const std::vector<std::string>& su2_variables() {
  static const std::vector<std::string> vars = {"a", "b", "c", "d"};
  return vars;
}

SU2Poly::SU2Poly() : value(zero_raw()) {}
SU2Poly::SU2Poly(const MultiPoly& raw) : value(reduce(raw)) {}

SU2Poly SU2Poly::operator-() const { return SU2Poly(-value); }
SU2Poly SU2Poly::operator+(const SU2Poly& o) const { return SU2Poly(value + o.value); }
SU2Poly SU2Poly::operator-(const SU2Poly& o) const { return SU2Poly(value - o.value); }
SU2Poly SU2Poly::operator*(const SU2Poly& o) const { return SU2Poly(value * o.value); }
SU2Poly& SU2Poly::operator+=(const SU2Poly& o) { return *this = *this + o; }
SU2Poly& SU2Poly::operator-=(const SU2Poly& o) { return *this = *this - o; }

SU2Poly operator*(const Rational& k, const SU2Poly& p) { return SU2Poly(p.value * k); }

SU2Poly normal_form(const MultiPoly& raw) { return SU2Poly(raw); }

SU2Poly su2_zero() { return SU2Poly(); }
SU2Poly su2_one() { return su2_constant(1); }
SU2Poly su2_constant(const Rational& k) {
  return SU2Poly(MultiPoly::constant(su2_variables(), k));
}

SU2Poly su2_generator(unsigned g) {
  if (g >= 4) throw std::invalid_argument("su2: generator index out of range (0..3)");
  return SU2Poly(MultiPoly::variable(su2_variables(), g));
}

SU2Poly su2_parse(const std::string& text) {
  return SU2Poly(parse_poly(text, su2_variables()));
}

SU2Poly dL(unsigned v, const SU2Poly& p) {
  check_basis_index(v);
  return apply_derivation(left_tables()[v], p);
}

SU2Poly dR(unsigned v, const SU2Poly& p) {
  check_basis_index(v);
  return apply_derivation(right_tables()[v], p);
}

SU2Poly dL(const std::string& v, const SU2Poly& p) { return dL(basis_index(v), p); }
SU2Poly dR(const std::string& v, const SU2Poly& p) { return dR(basis_index(v), p); }

SU2Poly poisson_su2(const SU2Poly& x, const SU2Poly& y) {
  const Tensor& rm = sl2_r_minus();
  SU2Poly acc;
  for (unsigned p = 0; p < 3; ++p)
    for (unsigned q = 0; q < 3; ++q) {
      const Rational k = rm.at({p, q});
      if (is_zero(k)) continue;
      acc += k * (dL(p, x) * dL(q, y) - dR(p, x) * dR(q, y));
    }
  return acc;
}

bool InvariantOneForm::is_zero() const {
  return comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero();
}

InvariantOneForm InvariantOneForm::operator-() const {
  return InvariantOneForm{{-comps[0], -comps[1], -comps[2]}};
}

InvariantOneForm InvariantOneForm::operator+(const InvariantOneForm& o) const {
  return InvariantOneForm{
      {comps[0] + o.comps[0], comps[1] + o.comps[1], comps[2] + o.comps[2]}};
}

InvariantOneForm InvariantOneForm::operator-(const InvariantOneForm& o) const {
  return *this + (-o);
}

bool InvariantOneForm::operator==(const InvariantOneForm& o) const {
  return comps[0] == o.comps[0] && comps[1] == o.comps[1] && comps[2] == o.comps[2];
}

InvariantOneForm operator*(const SU2Poly& f, const InvariantOneForm& w) {
  return InvariantOneForm{{f * w.comps[0], f * w.comps[1], f * w.comps[2]}};
}

InvariantOneForm operator*(const Rational& k, const InvariantOneForm& w) {
  return InvariantOneForm{{k * w.comps[0], k * w.comps[1], k * w.comps[2]}};
}

InvariantOneForm su2_basis_form(unsigned i) {
  check_basis_index(i);
  InvariantOneForm w;
  w.comps[i] = su2_one();
  return w;
}

InvariantOneForm su2_differential(const SU2Poly& x) {
  return InvariantOneForm{{dL(0u, x), dL(1u, x), dL(2u, x)}};
}

const std::array<std::array<SU2Poly, 3>, 3>& su2_poisson_frame() {
  static const std::array<std::array<SU2Poly, 3>, 3> w = [] {
    std::array<std::array<SU2Poly, 3>, 3> m;
    m[0][1] = su2_parse("-b*c");
    m[1][0] = su2_parse("b*c");
    m[0][2] = su2_parse("1/2*b*d");
    m[2][0] = su2_parse("-1/2*b*d");
    m[1][2] = su2_parse("1/2*a*c");
    m[2][1] = su2_parse("-1/2*a*c");
    return m;
  }();
  return w;
}

SU2Poly su2_pairing(const SU2Poly& x, const InvariantOneForm& eta) {
  const auto& w = su2_poisson_frame();
  SU2Poly acc;
  for (unsigned k = 0; k < 3; ++k) {
    if (w[k][0].is_zero() && w[k][1].is_zero() && w[k][2].is_zero()) continue;
    const SU2Poly dkx = dL(k, x);
    if (dkx.is_zero()) continue;
    for (unsigned i = 0; i < 3; ++i) {
      if (w[k][i].is_zero() || eta.comps[i].is_zero()) continue;
      acc += w[k][i] * dkx * eta.comps[i];
    }
  }
  return acc;
}

InvariantOneForm gamma_canonical_su2(const SU2Poly& x, const InvariantOneForm& eta) {
  std::array<InvariantOneForm, 3> g;
  g[0].comps[2] = -dL(1u, x);
  g[1].comps[2] = -dL(0u, x);
  g[2].comps[0] = frac(1, 2) * dL(0u, x);
  g[2].comps[1] = frac(1, 2) * dL(1u, x);

  InvariantOneForm out;
  for (unsigned i = 0; i < 3; ++i) {
    if (eta.comps[i].is_zero()) continue;
    out = out + poisson_su2(x, eta.comps[i]) * su2_basis_form(i) + eta.comps[i] * g[i];
  }
  return out;
}

InvariantOneForm gamma_from_xi_su2(const Xi& xi, const SU2Poly& x,
                                   const InvariantOneForm& eta) {
  check_xi_shape(xi);
  InvariantOneForm out;
  for (unsigned j = 0; j < 3; ++j) out.comps[j] = poisson_su2(x, eta.comps[j]);
  for (unsigned i = 0; i < 3; ++i) {
    if (eta.comps[i].is_zero()) continue;
    for (unsigned p = 0; p < 3; ++p) {
      const SU2Poly dpx = dL(p, x);
      if (dpx.is_zero()) continue;
      for (unsigned j = 0; j < 3; ++j) {
        const Rational k = xi.value.at({j, p, i});
        if (is_zero(k)) continue;
        out.comps[j] += k * (eta.comps[i] * dpx);
      }
    }
  }
  return out;
}

SU2Poly torsion_pair_su2(const Xi& xi, const SU2Poly& x, const SU2Poly& y,
                         const SU2Poly& z) {
  const InvariantOneForm dz = su2_differential(z);
  return su2_pairing(x, gamma_from_xi_su2(xi, y, dz)) -
         su2_pairing(y, gamma_from_xi_su2(xi, x, dz));
}

InvariantOneForm curvature_action_su2(const Xi& xi, const SU2Poly& x, const SU2Poly& y,
                                      const InvariantOneForm& eta) {
  const InvariantOneForm gy = gamma_from_xi_su2(xi, y, eta);
  const InvariantOneForm gx = gamma_from_xi_su2(xi, x, eta);
  return gamma_from_xi_su2(xi, x, gy) - gamma_from_xi_su2(xi, y, gx) -
         gamma_from_xi_su2(xi, poisson_su2(x, y), eta);
}

}  // namespace semiclass
