#include "semiclass/report.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semiclass/moduli.hpp"
#include "semiclass/su2.hpp"

namespace semiclass {

namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t tensor_size(const Tensor& T) {
  std::size_t total = 1;
  for (unsigned k = 0; k < T.rank(); ++k) total *= T.dim();
  return total;
}

bool tensor_is_zero(const Tensor& T) {
  const std::size_t total = tensor_size(T);
  for (std::size_t i = 0; i < total; ++i)
    if (!is_zero(T.flat(i))) return false;
  return true;
}

ordered_json tensor_to_json(const Tensor& T) {
  std::function<ordered_json(std::vector<unsigned>&, unsigned)> build =
      [&](std::vector<unsigned>& idx, unsigned depth) -> ordered_json {
    ordered_json arr = ordered_json::array();
    for (unsigned i = 0; i < T.dim(); ++i) {
      idx[depth] = i;
      if (depth + 1 == T.rank())
        arr.push_back(rat_to_string(T.at(idx)));
      else
        arr.push_back(build(idx, depth + 1));
    }
    return arr;
  };
  std::vector<unsigned> idx(T.rank(), 0);
  if (T.rank() == 0) return ordered_json::array();
  return build(idx, 0);
}

Tensor tensor_from_json(const ordered_json& node, unsigned dim, unsigned rank,
                        const std::string& where) {
  Tensor T(dim, rank);
  std::function<void(const ordered_json&, std::vector<unsigned>&, unsigned)> walk =
      [&](const ordered_json& n, std::vector<unsigned>& idx, unsigned depth) {
        if (!n.is_array() || n.size() != dim)
          throw std::invalid_argument(where + ": expected an array of " +
                                      std::to_string(dim) + " entries at depth " +
                                      std::to_string(depth));
        for (unsigned i = 0; i < dim; ++i) {
          idx[depth] = i;
          if (depth + 1 == rank) {
            if (!n[i].is_string())
              throw std::invalid_argument(where + ": entries must be rational strings");
            T.at(idx) = rat_from_string(n[i].get<std::string>());
          } else {
            walk(n[i], idx, depth + 1);
          }
        }
      };
  std::vector<unsigned> idx(rank, 0);
  walk(node, idx, 0);
  return T;
}

bool polys_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}
bool polys_zero(const PolyMat& m) {
  for (const auto& r : m)
    if (!polys_zero(r)) return false;
  return true;
}
bool polys_zero(const PolyRank3& t) {
  for (const auto& s : t)
    if (!polys_zero(s)) return false;
  return true;
}
bool polys_zero(const PolyRank4& t) {
  for (const auto& s : t)
    if (!polys_zero(s)) return false;
  return true;
}
bool polys_zero(const PolyRank5& t) {
  for (const auto& s : t)
    if (!polys_zero(s)) return false;
  return true;
}

ordered_json polys_to_json(const PolyVec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : v) arr.push_back(p.to_string());
  return arr;
}
ordered_json polys_to_json(const PolyMat& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : m) arr.push_back(polys_to_json(r));
  return arr;
}
ordered_json polys_to_json(const PolyRank3& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : t) arr.push_back(polys_to_json(s));
  return arr;
}
ordered_json polys_to_json(const PolyRank4& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : t) arr.push_back(polys_to_json(s));
  return arr;
}
ordered_json polys_to_json(const PolyRank5& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : t) arr.push_back(polys_to_json(s));
  return arr;
}

ordered_json make_envelope(const std::string& command, const std::string& payload) {
  ordered_json doc;
  doc["command"] = command;
  doc["inputs_digest"] = input_digest(payload);
  doc["conventions"] = conventions_version();
  return doc;
}

class ResultList {
 public:
  void add(const std::string& name, ordered_json value, bool zero) {
    // Boolean entries (predicates, flags) summarize as true/false; tensor
    // and polynomial entries summarize by their exact-zero status.
    const std::string word = value.is_boolean()
                                 ? (value.get<bool>() ? "true" : "false")
                                 : (zero ? "zero" : "nonzero");
    ordered_json e;
    e["name"] = name;
    e["value"] = std::move(value);
    e["is_zero"] = zero;
    entries_.push_back(std::move(e));
    lines_ += "  " + name + ": " + word + "\n";
  }

  void add_tensor(const std::string& name, const Tensor& T) {
    add(name, tensor_to_json(T), tensor_is_zero(T));
  }

  template <typename P>
  void add_polys(const std::string& name, const P& value) {
    add(name, polys_to_json(value), polys_zero(value));
  }

  std::string finish(ordered_json& doc, const std::string& command,
                     std::string* summary) {
    doc["results"] = std::move(entries_);
    if (summary) *summary = command + "\n" + lines_;
    return doc.dump(2) + "\n";
  }

 private:
  ordered_json entries_ = ordered_json::array();
  std::string lines_;
};

}  // namespace

std::string conventions_version() {
  if (const char* env = std::getenv("SEMICLASS_CONVENTIONS"))
    if (*env != '\0') return env;
  return "v1";
}

std::string input_digest(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : payload) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

RMatrix preset_rmatrix(const std::string& name) {
  if (name == "sl2" || name == "sl3" || name == "sl4")
    return standard_r(preset_algebra(name));
  if (name == "b2") return triangular_r_b2();
  throw std::invalid_argument("unknown r-matrix preset '" + name +
                              "' (expected sl2, sl3, sl4, or b2)");
}

RMatrix rmatrix_from_json_text(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);  // throws with byte position
  if (!doc.is_object())
    throw std::invalid_argument("algebra JSON: top level must be an object");
  for (const char* key : {"dim", "basis_names", "f", "r"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("algebra JSON: missing key '") + key + "'");
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
    throw std::invalid_argument("algebra JSON: 'dim' must be a positive integer");
  const unsigned dim = doc["dim"].get<unsigned>();

  LieAlgebra L;
  L.name = "custom";
  L.dim = dim;
  if (!doc["basis_names"].is_array() || doc["basis_names"].size() != dim)
    throw std::invalid_argument("algebra JSON: 'basis_names' must list dim names");
  for (const auto& n : doc["basis_names"]) {
    if (!n.is_string())
      throw std::invalid_argument("algebra JSON: basis names must be strings");
    L.basis_names.push_back(n.get<std::string>());
  }
  L.f = tensor_from_json(doc["f"], dim, 3, "algebra JSON: 'f'");
  Tensor r = tensor_from_json(doc["r"], dim, 2, "algebra JSON: 'r'");
  return RMatrix{std::move(L), std::move(r)};
}

XiHat xihat_from_json_text(const std::string& text, const LieAlgebra& expected) {
  ordered_json doc = ordered_json::parse(text);
  if (!doc.is_object())
    throw std::invalid_argument("preconnection JSON: top level must be an object");
  for (const char* key : {"algebra", "value"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("preconnection JSON: missing key '") +
                                  key + "'");
  if (!doc["algebra"].is_string() || doc["algebra"].get<std::string>() != expected.name)
    throw std::invalid_argument("preconnection JSON: algebra tag does not match '" +
                                expected.name + "'");
  if (doc.contains("conventions")) {
    if (!doc["conventions"].is_string() ||
        doc["conventions"].get<std::string>() != conventions_version())
      throw std::invalid_argument(
          "preconnection JSON: conventions tag does not match '" +
          conventions_version() + "'");
  }
  return XiHat{
      tensor_from_json(doc["value"], expected.dim, 3, "preconnection JSON: 'value'")};
}

std::string report_check_cybe(const std::string& command, const std::string& payload,
                              const RMatrix& r, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  doc["algebra"] = r.algebra.name;
  ResultList results;
  if (r.algebra.name == "custom")
    results.add_tensor("jacobi_residual", jacobi_residual(r.algebra));
  results.add_tensor("cybe_residual", cybe_residual(r));
  results.add_tensor("r_plus_invariance_residual",
                     ad_invariance_residual(r.algebra, r_plus(r).value));
  const Tensor n = n_tensor(r);
  results.add_tensor("n_tensor", n);
  results.add_tensor("n_plus_schouten_r_plus", n + schouten(r_plus(r), r_plus(r)));
  return results.finish(doc, command, summary);
}

std::string report_cobracket(const std::string& command, const std::string& payload,
                             const RMatrix& r, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  doc["algebra"] = r.algebra.name;
  const Cobracket delta = cobracket_from_r(r);
  ResultList results;
  results.add_tensor("cobracket", delta.value);
  results.add_tensor("cocycle_residual", cocycle_residual(delta));
  results.add_tensor("cojacobi_residual", cojacobi_residual(delta));
  return results.finish(doc, command, summary);
}

std::string report_canonical(const std::string& command, const std::string& payload,
                             const RMatrix& r, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  doc["algebra"] = r.algebra.name;
  const Xi xi = canonical_xi(r);
  const Cobracket delta = cobracket_from_r(r);
  ResultList results;
  results.add_tensor("canonical_xi", xi.value);
  results.add_tensor("hat_residual", hat_from_xi(xi, r).value);
  results.add_tensor("compatibility_residual", compatibility_residual(xi, delta));
  return results.finish(doc, command, summary);
}

std::string report_j1(const std::string& command, const std::string& payload,
                      const RMatrix& r, const XiHat& hat, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  doc["algebra"] = r.algebra.name;
  const Tensor j1 = j1_obstruction(hat, r);
  const Tensor full = hat_flatness_residual(hat, r);
  const Tensor pj1 = propj1_residual(xi_from_hat(hat, r), r);
  // Zero-set agreement of the fully converted symmetric-part route against
  // the independently coded dual-language route.  The truncated display
  // (j1_obstruction) is reported alongside; it matches the full conversion
  // exactly when the input's invariance defect vanishes.
  const bool agree = tensor_is_zero(full) == tensor_is_zero(pj1);
  ResultList results;
  results.add_tensor("j1_obstruction", j1);
  results.add_tensor("hat_flatness_residual", full);
  results.add_tensor("propj1_residual", pj1);
  // The mismatch indicator of the two obstruction routes: zero means the
  // zero-sets agree; a discrepancy is surfaced here rather than suppressed.
  results.add("zero_set_mismatch", !agree, agree);
  return results.finish(doc, command, summary);
}

std::string report_moduli_dim(const std::string& command, const std::string& payload,
                              const std::string& preset, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  const ModuliResult m = moduli_dimension(preset_algebra(preset));
  doc["algebra"] = m.algebra;
  doc["dimension"] = m.dimension;
  ordered_json basis = ordered_json::array();
  for (const XiHat& h : m.basis) basis.push_back(tensor_to_json(h.value));
  doc["basis"] = std::move(basis);
  if (summary)
    *summary = command + "\n  dimension: " + std::to_string(m.dimension) + "\n";
  return doc.dump(2) + "\n";
}

std::string report_chart(const std::string& command, const std::string& payload,
                         const Chart& chart, std::string* summary) {
  ordered_json doc = make_envelope(command, payload);
  doc["n"] = chart.n;
  ResultList results;
  results.add_polys("jacobi_residual", jacobi_residual_chart(chart));
  results.add_polys("torsion", torsion_chart(chart));
  results.add_polys("curvature", curvature_chart(chart));
  results.add_polys("nabla_omega_residual", nabla_omega_residual(chart));
  if (chart.omega_lower.has_value()) {
    const bool central = centrality_predicate(chart);
    results.add("centrality_predicate", central, central);
    results.add_polys("e_constancy_residual", e_constancy_residual(chart));
    for (unsigned i = 0; i < chart.n; ++i)
      for (unsigned j = i + 1; j < chart.n; ++j) {
        const FormField di = coordinate_differential(chart, i);
        const FormField dj = coordinate_differential(chart, j);
        results.add_polys(
            "rho_pair_dx" + std::to_string(i + 1) + "_dx" + std::to_string(j + 1),
            collapse_pair_terms(chart, rho_tilde(chart, di, dj)));
        results.add_polys(
            "rho_antisym_residual_dx" + std::to_string(i + 1) + "_dx" +
                std::to_string(j + 1),
            rho_antisym_residual(chart, di, dj));
      }
    const FormField d0 = coordinate_differential(chart, 0);
    const FormField d1 = coordinate_differential(chart, 1);
    const FormField dk = coordinate_differential(chart, chart.n > 2 ? 2 : 1);
    results.add_polys("rho_cyb_residual_sample", rho_cyb_residual(chart, d0, d1, dk));
  } else {
    results.add("inverse_not_provided", true, false);
  }
  return results.finish(doc, command, summary);
}

std::string report_su2(const std::string& command, const std::string& payload,
                       const std::string& xi_spec, std::string* summary) {
  Xi xi{Tensor(3, 3)};
  if (xi_spec == "canonical") {
    xi = canonical_xi(standard_r(preset_algebra("sl2")));
  } else if (xi_spec.rfind("3d:", 0) == 0) {
    xi = su2_3d_xi(rat_from_string(xi_spec.substr(3)));
  } else {
    throw std::invalid_argument(
        "su2-report: --xi must be 'canonical' or '3d:<rational>'");
  }

  ordered_json doc = make_envelope(command, payload);
  doc["xi"] = xi_spec;
  ResultList results;

  static const char* names[4] = {"a", "b", "c", "d"};
  const std::array<SU2Poly, 4> gens = {su2_generator(0), su2_generator(1),
                                       su2_generator(2), su2_generator(3)};

  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = i + 1; j < 4; ++j) {
      const SU2Poly br = poisson_su2(gens[i], gens[j]);
      results.add(std::string("poisson_") + names[i] + "_" + names[j], br.to_string(),
                  br.is_zero());
    }

  for (unsigned g = 0; g < 4; ++g)
    for (unsigned i = 0; i < 3; ++i) {
      const InvariantOneForm w = gamma_from_xi_su2(xi, gens[g], su2_basis_form(i));
      ordered_json comps = ordered_json::array();
      for (unsigned k = 0; k < 3; ++k) comps.push_back(w.comps[k].to_string());
      results.add(std::string("gamma_") + names[g] + "_tau" + std::to_string(i + 1),
                  std::move(comps), w.is_zero());
    }

  const unsigned triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : triples) {
    const SU2Poly tor = torsion_pair_su2(xi, gens[t[0]], gens[t[1]], gens[t[2]]);
    results.add(std::string("torsion_") + names[t[0]] + "_" + names[t[1]] + "_" +
                    names[t[2]],
                tor.to_string(), tor.is_zero());
  }

  const unsigned pairs[4][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  for (const auto& pr : pairs)
    for (unsigned i = 0; i < 3; ++i) {
      const InvariantOneForm cur =
          curvature_action_su2(xi, gens[pr[0]], gens[pr[1]], su2_basis_form(i));
      ordered_json comps = ordered_json::array();
      for (unsigned k = 0; k < 3; ++k) comps.push_back(cur.comps[k].to_string());
      results.add(std::string("curvature_") + names[pr[0]] + "_" + names[pr[1]] +
                      "_tau" + std::to_string(i + 1),
                  std::move(comps), cur.is_zero());
    }

  return results.finish(doc, command, summary);
}

}  // namespace semiclass
