// Command-line front end. Reads one instance (JSON) from a file or
// stdin, runs the requested computation and prints JSON to stdout.
//
// Exit codes: 0 success, 2 malformed input, 3 instance exceeds the
// supported size bounds, 4 a verification run found a violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cha/complexes.hpp"
#include "cha/enumerate.hpp"
#include "cha/euler.hpp"
#include "cha/hopf.hpp"
#include "cha/json_io.hpp"
#include "cha/setfam.hpp"
#include "cha/symfun.hpp"

namespace {

struct Options {
  std::string input;  // empty = stdin
  bool one_based = false;
};

cha::Json read_instance(const Options& opt) {
  std::string text;
  if (opt.input.empty()) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(opt.input);
    if (!in) throw cha::InputError("cannot open input file: " + opt.input);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return cha::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw cha::InputError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const cha::Json& j) { std::cout << j.dump(2) << "\n"; }

void add_input_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("-i,--input", opt.input, "input JSON file (default: stdin)");
  cmd->add_flag("--one-based", opt.one_based, "vertices in the input are numbered from 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on hypergraphs, clutters and simplicial complexes"};
  app.require_subcommand(1);

  Options opt;
  std::string method = "deletion-contraction";
  std::string basis = "monomial";
  std::string kind = "hypergraph";
  int enum_vertices = 4;
  bool enum_serial = false;

  CLI::App* psi_cmd = app.add_subcommand("psi", "chromatic symmetric function");
  add_input_flags(psi_cmd, opt);
  psi_cmd->add_option("--basis", basis, "monomial or powersum")
      ->check(CLI::IsMember({"monomial", "powersum"}));

  CLI::App* chrom_cmd = app.add_subcommand("chrompoly", "chromatic / partition polynomial");
  add_input_flags(chrom_cmd, opt);
  chrom_cmd->add_option("--kind", kind, "hypergraph or complex")
      ->check(CLI::IsMember({"hypergraph", "complex"}));

  CLI::App* zinv_cmd = app.add_subcommand("zinv", "Mobius character of the instance");
  add_input_flags(zinv_cmd, opt);
  zinv_cmd->add_option("--method", method, "algorithm choice")
      ->check(CLI::IsMember({"takeuchi", "deletion-contraction", "antipode"}));

  CLI::App* anti_cmd = app.add_subcommand("antipode", "antipode expansion of the instance");
  add_input_flags(anti_cmd, opt);

  CLI::App* euler_cmd = app.add_subcommand("euler", "eulerian test with witness");
  add_input_flags(euler_cmd, opt);
  euler_cmd->add_option("--kind", kind, "hypergraph or complex")
      ->check(CLI::IsMember({"hypergraph", "complex"}));

  CLI::App* classify_cmd = app.add_subcommand("classify", "full structural classification");
  add_input_flags(classify_cmd, opt);

  CLI::App* nerve_cmd = app.add_subcommand("nerve", "nerve complex of a clutter");
  add_input_flags(nerve_cmd, opt);

  CLI::App* ind_cmd = app.add_subcommand("ind", "independence complex of a clutter");
  add_input_flags(ind_cmd, opt);

  CLI::App* nonfaces_cmd = app.add_subcommand("nonfaces", "minimal nonfaces of a complex");
  add_input_flags(nonfaces_cmd, opt);

  CLI::App* enum_cmd =
      app.add_subcommand("verify", "exhaustive theorem verification over small clutters");
  enum_cmd->add_option("-n,--max-vertices", enum_vertices, "largest vertex count")
      ->check(CLI::Range(0, 5));
  enum_cmd->add_flag("--serial", enum_serial, "use the serial reference driver");

  CLI11_PARSE(app, argc, argv);

  try {
    if (psi_cmd->parsed()) {
      if (basis == "monomial") {
        cha::Hypergraph h = cha::hypergraph_from_json(read_instance(opt), opt.one_based);
        emit(cha::qsym_to_json(cha::psi(h)));
      } else {
        cha::Clutter c = cha::clutter_from_json(read_instance(opt), opt.one_based);
        emit(cha::sym_to_json(cha::psi_powersum(c)));
      }
    } else if (chrom_cmd->parsed()) {
      cha::Json j = read_instance(opt);
      cha::IntPolynomial p =
          kind == "complex"
              ? cha::partition_polynomial(cha::complex_from_json(j, opt.one_based))
              : cha::chromatic_polynomial(cha::hypergraph_from_json(j, opt.one_based));
      emit(cha::polynomial_to_json(p));
    } else if (zinv_cmd->parsed()) {
      cha::Hypergraph h = cha::hypergraph_from_json(read_instance(opt), opt.one_based);
      cha::ZinvMethod m = cha::ZinvMethod::kDeletionContraction;
      if (method == "takeuchi") m = cha::ZinvMethod::kTakeuchiSum;
      if (method == "antipode") m = cha::ZinvMethod::kAntipodeThenZeta;
      emit(cha::Json{{"zeta_inverse", cha::zeta_inverse(h, m)}, {"method", method}});
    } else if (anti_cmd->parsed()) {
      cha::Hypergraph h = cha::hypergraph_from_json(read_instance(opt), opt.one_based);
      emit(cha::combo_to_json(cha::antipode_takeuchi(h)));
    } else if (euler_cmd->parsed()) {
      cha::Json j = read_instance(opt);
      cha::Json out;
      if (kind == "complex") {
        cha::SimplicialComplex k = cha::complex_from_json(j, opt.one_based);
        cha::EulerianComplexResult r = cha::is_eulerian_complex(k);
        out["eulerian"] = r.eulerian;
        if (r.witness) out["witness"] = cha::mask_to_vertices(*r.witness);
      } else {
        cha::Hypergraph h = cha::hypergraph_from_json(j, opt.one_based);
        cha::EulerianResult r = cha::is_eulerian(h);
        out["eulerian"] = r.eulerian;
        if (r.witness) out["witness"] = cha::mask_to_vertices(*r.witness);
      }
      emit(out);
    } else if (classify_cmd->parsed()) {
      cha::Clutter c = cha::clutter_from_json(read_instance(opt), opt.one_based);
      emit(cha::classification_to_json(cha::classify(c), c));
    } else if (nerve_cmd->parsed()) {
      cha::Clutter c = cha::clutter_from_json(read_instance(opt), opt.one_based);
      cha::Json out = cha::complex_to_json(cha::nerve(c));
      cha::Json labels = cha::Json::array();
      for (cha::Mask e : cha::nerve_vertex_order(c)) labels.push_back(cha::mask_to_vertices(e));
      out["vertex_labels"] = labels;
      emit(out);
    } else if (ind_cmd->parsed()) {
      cha::Clutter c = cha::clutter_from_json(read_instance(opt), opt.one_based);
      emit(cha::complex_to_json(cha::independence_complex(c)));
    } else if (nonfaces_cmd->parsed()) {
      cha::SimplicialComplex k = cha::complex_from_json(read_instance(opt), opt.one_based);
      emit(cha::clutter_to_json(cha::minimal_nonfaces(k)));
    } else if (enum_cmd->parsed()) {
      cha::VerificationReport r =
          cha::verify_theorems(enum_vertices, std::min(enum_vertices, 4), !enum_serial);
      cha::Json out{{"max_vertices", r.max_vertices},
                    {"clutter_classes", r.total_clutters},
                    {"eulerian_classes", r.eulerian_count},
                    {"relation_holds_not_eulerian", r.gds_not_eulerian_count},
                    {"labeled_hypergraphs_checked", r.hypergraphs_checked},
                    {"violations", r.violations}};
      emit(out);
      if (!r.violations.empty()) return 4;
    }
  } catch (const cha::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cha::BoundError& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
