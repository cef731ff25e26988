#include "semiclass/chart.hpp"

#include <array>
#include <stdexcept>

#include "json.hpp"

namespace semiclass {

namespace {

MultiPoly zero_poly(unsigned n) {
  return MultiPoly::constant(chart_variables(n), Rational(0));
}

PolyMat zero_mat(unsigned n) { return PolyMat(n, PolyVec(n, zero_poly(n))); }
PolyRank3 zero_rank3(unsigned n) { return PolyRank3(n, zero_mat(n)); }
PolyRank4 zero_rank4(unsigned n) { return PolyRank4(n, zero_rank3(n)); }
PolyRank5 zero_rank5(unsigned n) { return PolyRank5(n, zero_rank4(n)); }

void check_poly(const Chart& chart, const MultiPoly& p, const char* where) {
  if (p.variables() != chart_variables(chart.n)) {
    throw std::invalid_argument(std::string(where) +
                                ": polynomial is not over the chart variables");
  }
}

// Covariant derivative of a 1-form: D[s][k] = d_s a_k - G^i_{sk} a_i.
PolyMat covariant_form_derivative(const Chart& chart, const PolyVec& a) {
  const unsigned n = chart.n;
  PolyMat D = zero_mat(n);
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned k = 0; k < n; ++k) {
      MultiPoly entry = poly_partial(a[k], s);
      for (unsigned i = 0; i < n; ++i) {
        entry -= chart.gamma[i][s][k] * a[i];
      }
      D[s][k] = entry;
    }
  }
  return D;
}

void require_lower(const Chart& chart, const char* where) {
  if (!chart.omega_lower.has_value()) {
    throw std::invalid_argument(std::string(where) +
                                ": chart has no omega_lower (inverse bivector) data");
  }
}

}  // namespace

void chart_check(const Chart& chart) {
  const unsigned n = chart.n;
  if (n == 0) throw std::invalid_argument("chart_check: n must be positive");
  auto require_mat = [&](const PolyMat& m, const char* name) {
    if (m.size() != n) throw std::invalid_argument(std::string("chart_check: ") + name + " has wrong shape");
    for (const auto& row : m) {
      if (row.size() != n) throw std::invalid_argument(std::string("chart_check: ") + name + " has wrong shape");
      for (const auto& p : row) check_poly(chart, p, "chart_check");
    }
  };
  require_mat(chart.omega, "omega");
  if (chart.gamma.size() != n) throw std::invalid_argument("chart_check: gamma has wrong shape");
  for (const auto& slice : chart.gamma) require_mat(slice, "gamma");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (!(chart.omega[i][j] + chart.omega[j][i]).is_zero()) {
        throw std::invalid_argument("chart_check: omega is not antisymmetric");
      }
    }
  }
  if (chart.omega_lower.has_value()) {
    require_mat(*chart.omega_lower, "omega_lower");
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned k = 0; k < n; ++k) {
        MultiPoly acc = zero_poly(n);
        for (unsigned j = 0; j < n; ++j) {
          acc += chart.omega[i][j] * (*chart.omega_lower)[j][k];
        }
        MultiPoly expected = chart_const(chart, Rational(i == k ? 1 : 0));
        if (acc != expected) {
          throw std::invalid_argument(
              "chart_check: omega_lower is not an exact inverse of omega");
        }
      }
    }
  }
}

void form_check(const Chart& chart, const FormField& form) {
  const unsigned n = chart.n;
  if (form.n != n) throw std::invalid_argument("form_check: form is not over this chart");
  if (form.degree == 1) {
    if (form.comps.size() != n) throw std::invalid_argument("form_check: degree-1 form needs n components");
  } else if (form.degree == 2) {
    if (form.comps.size() != std::size_t(n) * n) {
      throw std::invalid_argument("form_check: degree-2 form needs n*n components");
    }
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        if (!(form.comps[i * n + j] + form.comps[j * n + i]).is_zero()) {
          throw std::invalid_argument("form_check: degree-2 components must be antisymmetric");
        }
      }
    }
  } else {
    throw std::invalid_argument("form_check: degree must be 1 or 2");
  }
  for (const auto& p : form.comps) check_poly(chart, p, "form_check");
}

MultiPoly chart_zero(const Chart& chart) { return zero_poly(chart.n); }

MultiPoly chart_const(const Chart& chart, const Rational& value) {
  return MultiPoly::constant(chart_variables(chart.n), value);
}

MultiPoly chart_parse(const Chart& chart, const std::string& text) {
  return parse_poly(text, chart_variables(chart.n));
}

FormField one_form(const Chart& chart, PolyVec components) {
  FormField f;
  f.degree = 1;
  f.n = chart.n;
  f.comps = std::move(components);
  form_check(chart, f);
  return f;
}

FormField coordinate_differential(const Chart& chart, unsigned i) {
  if (i >= chart.n) throw std::invalid_argument("coordinate_differential: index out of range");
  PolyVec comps(chart.n, zero_poly(chart.n));
  comps[i] = chart_const(chart, Rational(1));
  return one_form(chart, std::move(comps));
}

FormField differential(const Chart& chart, const MultiPoly& f) {
  check_poly(chart, f, "differential");
  PolyVec comps;
  comps.reserve(chart.n);
  for (unsigned i = 0; i < chart.n; ++i) comps.push_back(poly_partial(f, i));
  return one_form(chart, std::move(comps));
}

MultiPoly poisson(const Chart& chart, const MultiPoly& f, const MultiPoly& g) {
  check_poly(chart, f, "poisson");
  check_poly(chart, g, "poisson");
  const unsigned n = chart.n;
  MultiPoly acc = zero_poly(n);
  for (unsigned i = 0; i < n; ++i) {
    MultiPoly df = poly_partial(f, i);
    if (df.is_zero()) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (chart.omega[i][j].is_zero()) continue;
      acc += chart.omega[i][j] * df * poly_partial(g, j);
    }
  }
  return acc;
}

PolyRank3 jacobi_residual_chart(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank3 J = zero_rank3(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned k = 0; k < n; ++k) {
        MultiPoly acc = zero_poly(n);
        for (unsigned s = 0; s < n; ++s) {
          acc += chart.omega[i][s] * poly_partial(chart.omega[j][k], s);
          acc += chart.omega[j][s] * poly_partial(chart.omega[k][i], s);
          acc += chart.omega[k][s] * poly_partial(chart.omega[i][j], s);
        }
        J[i][j][k] = acc;
      }
    }
  }
  return J;
}

CTensorField c_from_gamma(const Chart& chart) {
  const unsigned n = chart.n;
  CTensorField out;
  out.c = zero_rank3(n);
  for (unsigned nn = 0; nn < n; ++nn) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned k = 0; k < n; ++k) {
        MultiPoly acc = zero_poly(n);
        for (unsigned q = 0; q < n; ++q) {
          acc -= chart.omega[k][q] * chart.gamma[i][q][nn];
        }
        out.c[nn][i][k] = acc;
      }
    }
  }
  return out;
}

FormField gamma_apply_with_c(const Chart& chart, const CTensorField& c,
                             const MultiPoly& y, const FormField& a) {
  check_poly(chart, y, "gamma_apply");
  form_check(chart, a);
  if (a.degree != 1) throw std::invalid_argument("gamma_apply: form must have degree 1");
  const unsigned n = chart.n;
  PolyVec out(n, zero_poly(n));
  for (unsigned k = 0; k < n; ++k) {
    MultiPoly dy = poly_partial(y, k);
    if (dy.is_zero()) continue;
    for (unsigned nn = 0; nn < n; ++nn) {
      MultiPoly bracket = zero_poly(n);
      for (unsigned q = 0; q < n; ++q) {
        bracket += chart.omega[k][q] * poly_partial(a.comps[nn], q);
      }
      for (unsigned i = 0; i < n; ++i) {
        bracket += c.c[nn][i][k] * a.comps[i];
      }
      out[nn] += bracket * dy;
    }
  }
  return one_form(chart, std::move(out));
}

FormField gamma_apply(const Chart& chart, const MultiPoly& y, const FormField& a) {
  return gamma_apply_with_c(chart, c_from_gamma(chart), y, a);
}

PolyRank3 torsion_chart(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank3 T = zero_rank3(n);
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        T[k][i][j] = chart.gamma[k][i][j] - chart.gamma[k][j][i];
      }
    }
  }
  return T;
}

PolyRank4 curvature_chart(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank4 R = zero_rank4(n);
  for (unsigned l = 0; l < n; ++l) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        for (unsigned k = 0; k < n; ++k) {
          MultiPoly acc = poly_partial(chart.gamma[l][k][i], j) -
                          poly_partial(chart.gamma[l][j][i], k);
          for (unsigned m = 0; m < n; ++m) {
            acc += chart.gamma[m][k][i] * chart.gamma[l][j][m];
            acc -= chart.gamma[m][j][i] * chart.gamma[l][k][m];
          }
          R[l][i][j][k] = acc;
        }
      }
    }
  }
  return R;
}

PolyRank3 nabla_omega_residual(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank3 T = torsion_chart(chart);
  PolyRank3 res = zero_rank3(n);
  for (unsigned nn = 0; nn < n; ++nn) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        MultiPoly acc = poly_partial(chart.omega[i][j], nn);
        for (unsigned q = 0; q < n; ++q) {
          acc += chart.gamma[i][nn][q] * chart.omega[q][j];
          acc += chart.gamma[j][nn][q] * chart.omega[i][q];
          acc += chart.omega[i][q] * T[j][q][nn];
          acc += chart.omega[q][j] * T[i][q][nn];
        }
        res[nn][i][j] = acc;
      }
    }
  }
  return res;
}

bool centrality_predicate(const Chart& chart) {
  require_lower(chart, "centrality_predicate");
  for (const auto& slice : nabla_omega_residual(chart)) {
    for (const auto& row : slice) {
      for (const auto& p : row) {
        if (!p.is_zero()) return false;
      }
    }
  }
  for (const auto& slice : torsion_chart(chart)) {
    for (const auto& row : slice) {
      for (const auto& p : row) {
        if (!p.is_zero()) return false;
      }
    }
  }
  return true;
}

PolyRank4 n_tensor_field(const Chart& chart) {
  const unsigned n = chart.n;
  const Rational half(1, 2);
  PolyRank3 T = torsion_chart(chart);
  PolyRank4 R = curvature_chart(chart);
  PolyRank4 N = zero_rank4(n);
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned l = 0; l < n; ++l) {
          // Covariant derivative of the torsion in the slot l.
          MultiPoly acc = poly_partial(T[k][j][i], l);
          for (unsigned m = 0; m < n; ++m) {
            acc += chart.gamma[k][l][m] * T[m][j][i];
            acc -= chart.gamma[m][l][j] * T[k][m][i];
            acc -= chart.gamma[m][l][i] * T[k][j][m];
          }
          acc += R[k][j][l][i] * half;
          for (unsigned m = 0; m < n; ++m) {
            acc += T[m][j][l] * T[k][i][m];
            acc += T[m][l][i] * T[k][j][m] * half;
          }
          N[k][j][i][l] = acc;
        }
      }
    }
  }
  return N;
}

PolyRank4 e_tensor_field(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank4 N = n_tensor_field(chart);
  PolyRank4 E = zero_rank4(n);
  for (unsigned nn = 0; nn < n; ++nn) {
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned l = 0; l < n; ++l) {
        for (unsigned i = 0; i < n; ++i) {
          MultiPoly acc = zero_poly(n);
          for (unsigned j = 0; j < n; ++j) {
            acc += chart.omega[j][nn] * N[k][j][i][l];
          }
          E[nn][k][l][i] = acc;
        }
      }
    }
  }
  return E;
}

PolyRank5 e_constancy_residual(const Chart& chart) {
  const unsigned n = chart.n;
  PolyRank4 E = e_tensor_field(chart);
  PolyRank5 res = zero_rank5(n);
  for (unsigned m = 0; m < n; ++m) {
    for (unsigned nn = 0; nn < n; ++nn) {
      for (unsigned k = 0; k < n; ++k) {
        for (unsigned l = 0; l < n; ++l) {
          for (unsigned i = 0; i < n; ++i) {
            MultiPoly acc = poly_partial(E[nn][k][l][i], m);
            for (unsigned s = 0; s < n; ++s) {
              acc += chart.gamma[nn][m][s] * E[s][k][l][i];
              acc += chart.gamma[k][m][s] * E[nn][s][l][i];
              acc -= chart.gamma[s][m][l] * E[nn][k][s][i];
              acc -= chart.gamma[s][m][i] * E[nn][k][l][s];
            }
            res[m][nn][k][l][i] = acc;
          }
        }
      }
    }
  }
  return res;
}

std::vector<std::pair<FormField, FormField>> rho_tilde(const Chart& chart,
                                                       const FormField& tau,
                                                       const FormField& eta) {
  require_lower(chart, "rho_tilde");
  form_check(chart, tau);
  form_check(chart, eta);
  if (tau.degree != 1 || eta.degree != 1) {
    throw std::invalid_argument("rho_tilde: both forms must have degree 1");
  }
  const unsigned n = chart.n;
  const PolyMat& lower = *chart.omega_lower;
  PolyRank4 R = curvature_chart(chart);
  // Lowered curvature R_{smkq} = w_{st} R^t_{mkq}.
  PolyRank4 Rlow = zero_rank4(n);
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned m = 0; m < n; ++m) {
      for (unsigned k = 0; k < n; ++k) {
        for (unsigned q = 0; q < n; ++q) {
          MultiPoly acc = zero_poly(n);
          for (unsigned t = 0; t < n; ++t) {
            acc += lower[s][t] * R[t][m][k][q];
          }
          Rlow[s][m][k][q] = acc;
        }
      }
    }
  }

  std::vector<std::pair<FormField, FormField>> terms;

  // Curvature part: for each (k,m) the scalar
  //   w^{jq} w^{is} tau_j eta_i R_{smkq}
  // multiplies dx^k (x) dx^m; the scalar is folded into the left leg.
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned m = 0; m < n; ++m) {
      MultiPoly scalar = zero_poly(n);
      for (unsigned j = 0; j < n; ++j) {
        if (tau.comps[j].is_zero()) continue;
        for (unsigned q = 0; q < n; ++q) {
          if (chart.omega[j][q].is_zero()) continue;
          for (unsigned i = 0; i < n; ++i) {
            if (eta.comps[i].is_zero()) continue;
            for (unsigned s = 0; s < n; ++s) {
              if (chart.omega[i][s].is_zero() || Rlow[s][m][k][q].is_zero()) continue;
              scalar += chart.omega[j][q] * chart.omega[i][s] * tau.comps[j] *
                        eta.comps[i] * Rlow[s][m][k][q];
            }
          }
        }
      }
      if (scalar.is_zero()) continue;
      PolyVec left(n, zero_poly(n));
      left[k] = scalar;
      terms.emplace_back(one_form(chart, std::move(left)),
                         coordinate_differential(chart, m));
    }
  }

  // Derivative part: - w^{sq} (D_s tau) (x) (D_q eta), one decomposable
  // summand per (s,q) with the -w^{sq} factor folded into the left leg.
  PolyMat Dtau = covariant_form_derivative(chart, tau.comps);
  PolyMat Deta = covariant_form_derivative(chart, eta.comps);
  for (unsigned s = 0; s < n; ++s) {
    for (unsigned q = 0; q < n; ++q) {
      if (chart.omega[s][q].is_zero()) continue;
      bool left_zero = true;
      bool right_zero = true;
      PolyVec left(n, zero_poly(n));
      PolyVec right(n, zero_poly(n));
      for (unsigned k = 0; k < n; ++k) {
        left[k] = -(chart.omega[s][q] * Dtau[s][k]);
        right[k] = Deta[q][k];
        if (!left[k].is_zero()) left_zero = false;
        if (!right[k].is_zero()) right_zero = false;
      }
      if (left_zero || right_zero) continue;
      terms.emplace_back(one_form(chart, std::move(left)),
                         one_form(chart, std::move(right)));
    }
  }
  return terms;
}

PolyMat collapse_pair_terms(const Chart& chart,
                            const std::vector<std::pair<FormField, FormField>>& terms) {
  const unsigned n = chart.n;
  PolyMat out = zero_mat(n);
  for (const auto& term : terms) {
    for (unsigned k = 0; k < n; ++k) {
      if (term.first.comps[k].is_zero()) continue;
      for (unsigned m = 0; m < n; ++m) {
        if (term.second.comps[m].is_zero()) continue;
        out[k][m] += term.first.comps[k] * term.second.comps[m];
      }
    }
  }
  return out;
}

namespace {

using Term3 = std::array<FormField, 3>;

// Applies rho~ to the tensor legs (a,b) of every decomposable summand,
// keeping the remaining leg in place.
std::vector<Term3> apply_rho_on_legs(const Chart& chart, const std::vector<Term3>& terms,
                                     unsigned a, unsigned b) {
  std::vector<Term3> out;
  for (const auto& term : terms) {
    auto pairs = rho_tilde(chart, term[a], term[b]);
    for (auto& pr : pairs) {
      Term3 next = term;
      next[a] = std::move(pr.first);
      next[b] = std::move(pr.second);
      out.push_back(std::move(next));
    }
  }
  return out;
}

void accumulate_terms(const Chart& chart, PolyRank3& acc, const std::vector<Term3>& terms,
                      int sign) {
  const unsigned n = chart.n;
  for (const auto& term : terms) {
    for (unsigned i = 0; i < n; ++i) {
      if (term[0].comps[i].is_zero()) continue;
      for (unsigned j = 0; j < n; ++j) {
        if (term[1].comps[j].is_zero()) continue;
        for (unsigned k = 0; k < n; ++k) {
          if (term[2].comps[k].is_zero()) continue;
          MultiPoly prod = term[0].comps[i] * term[1].comps[j] * term[2].comps[k];
          if (sign < 0) {
            acc[i][j][k] -= prod;
          } else {
            acc[i][j][k] += prod;
          }
        }
      }
    }
  }
}

}  // namespace

PolyRank3 rho_cyb_residual(const Chart& chart, const FormField& zeta,
                           const FormField& eta, const FormField& xi) {
  require_lower(chart, "rho_cyb_residual");
  const unsigned n = chart.n;
  std::vector<Term3> start;
  start.push_back(Term3{zeta, eta, xi});
  PolyRank3 acc = zero_rank3(n);
  struct Composition {
    unsigned first_a, first_b;    // applied first (rightmost factor)
    unsigned second_a, second_b;  // applied second
    int sign;
  };
  // r12 r23 + r13 r23 + r12 r13 - r13 r12 - r23 r12 - r23 r13.
  const Composition comps[] = {
      {1, 2, 0, 1, +1}, {1, 2, 0, 2, +1}, {0, 2, 0, 1, +1},
      {0, 1, 0, 2, -1}, {0, 1, 1, 2, -1}, {0, 2, 1, 2, -1},
  };
  for (const auto& c : comps) {
    auto mid = apply_rho_on_legs(chart, start, c.first_a, c.first_b);
    auto fin = apply_rho_on_legs(chart, mid, c.second_a, c.second_b);
    accumulate_terms(chart, acc, fin, c.sign);
  }
  return acc;
}

PolyMat rho_antisym_residual(const Chart& chart, const FormField& tau,
                             const FormField& eta) {
  const unsigned n = chart.n;
  PolyMat direct = collapse_pair_terms(chart, rho_tilde(chart, tau, eta));
  PolyMat swapped = collapse_pair_terms(chart, rho_tilde(chart, eta, tau));
  PolyMat out = zero_mat(n);
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned m = 0; m < n; ++m) {
      out[k][m] = direct[k][m] + swapped[m][k];
    }
  }
  return out;
}

namespace {

// <x-hat, a_n dx^n> = w^{kn} (d_k x) a_n.
MultiPoly hat_pairing(const Chart& chart, const MultiPoly& x, const FormField& a) {
  const unsigned n = chart.n;
  MultiPoly acc = zero_poly(n);
  for (unsigned k = 0; k < n; ++k) {
    MultiPoly dx = poly_partial(x, k);
    if (dx.is_zero()) continue;
    for (unsigned nn = 0; nn < n; ++nn) {
      if (chart.omega[k][nn].is_zero() || a.comps[nn].is_zero()) continue;
      acc += chart.omega[k][nn] * dx * a.comps[nn];
    }
  }
  return acc;
}

MultiPoly torsion_term(const Chart& chart, const CTensorField& c, const MultiPoly& x,
                       const MultiPoly& y, const MultiPoly& z) {
  FormField dz = differential(chart, z);
  return hat_pairing(chart, x, gamma_apply_with_c(chart, c, y, dz)) -
         hat_pairing(chart, y, gamma_apply_with_c(chart, c, x, dz));
}

}  // namespace

MultiPoly torsion_cyclic_residual_with_c(const Chart& chart, const CTensorField& c,
                                         const MultiPoly& x, const MultiPoly& y,
                                         const MultiPoly& z) {
  check_poly(chart, x, "torsion_cyclic_residual");
  check_poly(chart, y, "torsion_cyclic_residual");
  check_poly(chart, z, "torsion_cyclic_residual");
  return torsion_term(chart, c, x, y, z) + torsion_term(chart, c, y, z, x) +
         torsion_term(chart, c, z, x, y);
}

MultiPoly torsion_cyclic_residual(const Chart& chart, const MultiPoly& x,
                                  const MultiPoly& y, const MultiPoly& z) {
  return torsion_cyclic_residual_with_c(chart, c_from_gamma(chart), x, y, z);
}

Chart preset_torus_chart() {
  Chart chart;
  chart.n = 2;
  const MultiPoly zero = zero_poly(2);
  const MultiPoly one = MultiPoly::constant(chart_variables(2), Rational(1));
  chart.omega = {{zero, one}, {-one, zero}};
  chart.gamma = zero_rank3(2);
  chart.omega_lower = PolyMat{{zero, -one}, {one, zero}};
  chart_check(chart);
  return chart;
}

namespace {

PolyMat parse_poly_matrix(const nlohmann::json& node, unsigned n, const std::string& name) {
  if (!node.is_array() || node.size() != n) {
    throw std::invalid_argument("chart JSON: " + name + " must be an array of " +
                                std::to_string(n) + " rows");
  }
  PolyMat out(n, PolyVec(n, zero_poly(n)));
  for (unsigned i = 0; i < n; ++i) {
    const auto& row = node[i];
    if (!row.is_array() || row.size() != n) {
      throw std::invalid_argument("chart JSON: " + name + "[" + std::to_string(i) +
                                  "] must be an array of " + std::to_string(n) + " entries");
    }
    for (unsigned j = 0; j < n; ++j) {
      if (!row[j].is_string()) {
        throw std::invalid_argument("chart JSON: " + name + "[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] must be a polynomial string");
      }
      try {
        out[i][j] = parse_poly(row[j].get<std::string>(), chart_variables(n));
      } catch (const ParseError& err) {
        throw std::invalid_argument("chart JSON: " + name + "[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "]: " + err.what());
      }
    }
  }
  return out;
}

}  // namespace

Chart chart_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("chart JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw std::invalid_argument("chart JSON: top level must be an object with an unsigned \"n\"");
  }
  Chart chart;
  chart.n = doc["n"].get<unsigned>();
  if (chart.n == 0) throw std::invalid_argument("chart JSON: n must be positive");
  if (!doc.contains("omega")) throw std::invalid_argument("chart JSON: missing \"omega\"");
  chart.omega = parse_poly_matrix(doc["omega"], chart.n, "omega");
  if (!doc.contains("gamma") || !doc["gamma"].is_array() || doc["gamma"].size() != chart.n) {
    throw std::invalid_argument("chart JSON: gamma must be an array of " +
                                std::to_string(chart.n) + " matrices");
  }
  chart.gamma.clear();
  for (unsigned k = 0; k < chart.n; ++k) {
    chart.gamma.push_back(
        parse_poly_matrix(doc["gamma"][k], chart.n, "gamma[" + std::to_string(k) + "]"));
  }
  if (doc.contains("omega_lower")) {
    chart.omega_lower = parse_poly_matrix(doc["omega_lower"], chart.n, "omega_lower");
  }
  chart_check(chart);
  return chart;
}

std::string chart_to_json_text(const Chart& chart) {
  nlohmann::ordered_json doc;
  doc["n"] = chart.n;
  auto encode_mat = [](const PolyMat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const auto& p : row) cells.push_back(p.to_string());
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  doc["omega"] = encode_mat(chart.omega);
  nlohmann::ordered_json gamma = nlohmann::ordered_json::array();
  for (const auto& slice : chart.gamma) gamma.push_back(encode_mat(slice));
  doc["gamma"] = std::move(gamma);
  if (chart.omega_lower.has_value()) {
    doc["omega_lower"] = encode_mat(*chart.omega_lower);
  }
  return doc.dump(2);
}

}  // namespace semiclass
