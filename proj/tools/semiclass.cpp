// Command-line driver: every subcommand prints one deterministic JSON report
// to stdout and a short human-readable summary to stderr.  Exit codes:
//   0  success
//   1  input error (unknown subcommand, unreadable file, malformed input)
//   2  selftest ran and at least one criterion failed
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiclass/acceptance.hpp"
#include "semiclass/chart.hpp"
#include "semiclass/lie.hpp"
#include "semiclass/rational.hpp"
#include "semiclass/report.hpp"
#include "semiclass/tensor.hpp"
#include "semiclass/xi.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_rmatrix_preset(const std::string& s) {
  return s == "sl2" || s == "sl3" || s == "sl4" || s == "b2";
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

int run_selftest(const std::string& command) {
  const semiclass::AcceptanceReport rep = semiclass::run_acceptance_suite();
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["inputs_digest"] = semiclass::input_digest("selftest");
  doc["conventions"] = semiclass::conventions_version();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : rep.criteria) {
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << "criterion " << c.id
              << ": " << c.name;
    if (!c.passed) std::cerr << " -- " << c.detail;
    std::cerr << "\n";
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  doc["criteria"] = std::move(arr);
  doc["all_passed"] = rep.all_passed();
  std::cout << doc.dump(2) << "\n";
  return rep.all_passed() ? 0 : 2;
}

int run(int argc, char** argv) {
  CLI::App app{"exact residual reports for quasitriangular data, preconnections, "
               "and semiclassical charts"};
  app.require_subcommand(1);

  std::string cybe_input;
  auto* cybe = app.add_subcommand(
      "check-cybe", "classical Yang-Baxter and invariance residuals");
  cybe->add_option("input", cybe_input, "preset (sl2|sl3|sl4|b2) or JSON file")
      ->required();

  std::string cob_input;
  auto* cob = app.add_subcommand("cobracket", "cobracket and its residuals");
  cob->add_option("preset", cob_input, "preset (sl2|sl3|sl4|b2)")->required();

  std::string canon_input;
  auto* canon = app.add_subcommand(
      "canonical", "distinguished preconnection and its residuals");
  canon->add_option("preset", canon_input, "preset (sl2|sl3|sl4|b2)")->required();

  std::string j1_input, xihat_path;
  auto* j1cmd = app.add_subcommand(
      "j1", "curvature obstruction for a symmetric-part tensor");
  j1cmd->add_option("preset", j1_input, "preset (sl2|sl3|sl4|b2)")->required();
  j1cmd->add_option("--xihat", xihat_path,
                    "JSON file with the symmetric-part tensor (default: zero)");

  std::string moduli_input;
  auto* moduli = app.add_subcommand(
      "moduli-dim", "dimension of the invariant symmetric-part space");
  moduli->add_option("preset", moduli_input, "preset (sl2|sl3|sl4|so5|b2)")
      ->required();

  std::string chart_path;
  auto* chartcmd = app.add_subcommand(
      "chart-report", "torsion, curvature, centrality, and braiding residuals");
  chartcmd->add_option("file", chart_path, "chart JSON file")->required();

  std::string xi_spec = "canonical";
  auto* su2cmd = app.add_subcommand(
      "su2-report", "matrix-entry bracket table and covariant-action samples");
  su2cmd->add_option("--xi", xi_spec, "covariant action: canonical or 3d:<rational>");

  auto* self = app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      std::cout << app.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  const std::string command = join_args(argc, argv);
  if (self->parsed()) return run_selftest(command);

  std::string summary;
  std::string out;
  try {
    if (cybe->parsed()) {
      if (is_rmatrix_preset(cybe_input)) {
        out = semiclass::report_check_cybe(command, cybe_input,
                                           semiclass::preset_rmatrix(cybe_input),
                                           &summary);
      } else {
        const std::string text = read_file(cybe_input);
        out = semiclass::report_check_cybe(
            command, text, semiclass::rmatrix_from_json_text(text), &summary);
      }
    } else if (cob->parsed()) {
      out = semiclass::report_cobracket(command, cob_input,
                                        semiclass::preset_rmatrix(cob_input),
                                        &summary);
    } else if (canon->parsed()) {
      out = semiclass::report_canonical(command, canon_input,
                                        semiclass::preset_rmatrix(canon_input),
                                        &summary);
    } else if (j1cmd->parsed()) {
      const semiclass::RMatrix r = semiclass::preset_rmatrix(j1_input);
      semiclass::XiHat hat{semiclass::Tensor(r.algebra.dim, 3)};
      std::string payload = j1_input;
      if (!xihat_path.empty()) {
        const std::string text = read_file(xihat_path);
        hat = semiclass::xihat_from_json_text(text, r.algebra);
        payload += "\n";
        payload += text;
      }
      out = semiclass::report_j1(command, payload, r, hat, &summary);
    } else if (moduli->parsed()) {
      out = semiclass::report_moduli_dim(command, moduli_input, moduli_input,
                                         &summary);
    } else if (chartcmd->parsed()) {
      const std::string text = read_file(chart_path);
      out = semiclass::report_chart(command, text,
                                    semiclass::chart_from_json_text(text),
                                    &summary);
    } else if (su2cmd->parsed()) {
      out = semiclass::report_su2(command, xi_spec, xi_spec, &summary);
    }
  } catch (const semiclass::ParseError& e) {
    std::cerr << "error: parse failure at position " << e.pos << ": " << e.what()
              << "\n";
    return 1;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << out;
  std::cerr << summary;
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
