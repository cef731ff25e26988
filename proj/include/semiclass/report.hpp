// Machine-readable JSON reports over the library's residual computations,
// plus the loaders for the algebra/r-matrix and preconnection-tensor input
// files.  Every builder is deterministic: identical inputs yield
// byte-identical report text (ordered keys, canonical rational and
// polynomial serialization, no timestamps).
//
// Report envelope, shared by all subcommands:
//   {
//     "command":       echo of the invocation,
//     "inputs_digest": "fnv1a:<16 hex digits>" over the effective input,
//     "conventions":   conventions version string (see conventions_version),
//     ...command-specific payload...
//   }
// Residual payloads are a "results" array of {name, value, is_zero} entries;
// tensors are nested arrays of exact rational strings, polynomial values use
// the canonical monomial-ordered text form.
#pragma once

#include <string>

#include "semiclass/chart.hpp"
#include "semiclass/lie.hpp"
#include "semiclass/xi.hpp"

namespace semiclass {

// The version string of the frozen sign/indexing conventions documented in
// docs/CONVENTIONS.md.  The environment variable SEMICLASS_CONVENTIONS, when
// set, overrides the echoed string so callers can pin reports to a recorded
// convention set.
std::string conventions_version();

// FNV-1a 64-bit digest of the effective input, rendered "fnv1a:<hex>".
std::string input_digest(const std::string& payload);

// Presets accepted by the r-matrix subcommands: "sl2", "sl3", "sl4" carry
// the stored standard r; "b2" carries the antisymmetric witness.  Throws
// std::invalid_argument for anything else.
RMatrix preset_rmatrix(const std::string& name);

// Algebra/r-matrix input file: {"dim": n, "basis_names": [...],
// "f": [[[rational strings]]], "r": [[rational strings]]}.
RMatrix rmatrix_from_json_text(const std::string& text);

// Preconnection-tensor input file: {"algebra": name, "conventions": string,
// "value": [[[rational strings]]]}.  The algebra tag and dimension must
// match `expected`.
XiHat xihat_from_json_text(const std::string& text, const LieAlgebra& expected);

// Report builders.  `command` is echoed verbatim, `payload` feeds the input
// digest, and `summary` (when non-null) receives human-readable lines.
std::string report_check_cybe(const std::string& command, const std::string& payload,
                              const RMatrix& r, std::string* summary);
std::string report_cobracket(const std::string& command, const std::string& payload,
                             const RMatrix& r, std::string* summary);
std::string report_canonical(const std::string& command, const std::string& payload,
                             const RMatrix& r, std::string* summary);
std::string report_j1(const std::string& command, const std::string& payload,
                      const RMatrix& r, const XiHat& hat, std::string* summary);
std::string report_moduli_dim(const std::string& command, const std::string& payload,
                              const std::string& preset, std::string* summary);
std::string report_chart(const std::string& command, const std::string& payload,
                         const Chart& chart, std::string* summary);
// xi_spec: "canonical" or "3d:<rational>"; throws std::invalid_argument on
// anything else.
std::string report_su2(const std::string& command, const std::string& payload,
                       const std::string& xi_spec, std::string* summary);

}  // namespace semiclass
