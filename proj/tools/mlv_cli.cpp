#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "mlvtrans.h"

// Thin command-line front end over the shared-library interface. Machine
// JSON goes to stdout by default; --human switches to the text rendering.

namespace {

int emit(int status, mlv_result* result, bool human) {
  if (result) {
    std::printf("%s\n", human ? mlv_result_text(result) : mlv_result_json(result));
    mlv_result_free(result);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal Clifford toolkit for self-dual CSS codes"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "human-readable output instead of JSON");

  std::string code_path, basis_path, output_path, spec_path, signs, name, source, target;
  unsigned k = 0, max_depth = 8, samples = 32;
  std::uint64_t seed = 0x5eedULL;
  bool verify = false;

  auto* check = app.add_subcommand("check", "decide existence of a compatible symplectic basis");
  check->add_option("code", code_path, "code file")->required();

  auto* basis = app.add_subcommand("basis", "construct and verify a compatible basis");
  basis->add_option("code", code_path, "code file")->required();
  basis->add_option("-o,--output", output_path, "write the basis file here");

  auto* phase = app.add_subcommand("phase", "synthesize a transversal S/S† layer");
  phase->add_option("code", code_path, "code file")->required();
  phase->add_option("signs", signs, "target logical signs: all+, all-, or a +- string")
      ->required();
  phase->add_option("-b,--basis", basis_path, "basis file (default: code's own or fresh)");

  auto* concat = app.add_subcommand("concat", "build a concatenated code from a spec file");
  concat->add_option("spec", spec_path, "ordered code references, innermost first")->required();
  concat->add_flag("--verify", verify, "run multilevel conjugation checks");
  concat->add_option("--samples", samples, "sign patterns to sample during --verify");
  concat->add_option("--seed", seed, "sampling seed");

  auto* convert = app.add_subcommand("convert", "measurement conversion word search");
  convert->add_option("-k", k, "logical qubit count")->required();
  convert->add_option("source", source, "source label, e.g. \"Z1 Z2\"")->required();
  convert->add_option("target", target, "target label")->required();
  convert->add_option("--max-depth", max_depth, "search depth bound");

  auto* catalog = app.add_subcommand("catalog", "emit a built-in code file");
  catalog->add_option("name", name, "qhamming15, c422, c622, steane7, or hamming<m>")
      ->required();
  catalog->add_option("-o,--output", output_path, "write the code file here");

  auto* verify_cmd = app.add_subcommand("verify", "verify a basis against a code");
  verify_cmd->add_option("code", code_path, "code file")->required();
  verify_cmd->add_option("-b,--basis", basis_path, "basis file (default: code's basis section)");

  // Let the global --human flag appear after a subcommand too.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  mlv_result* result = nullptr;
  int status = 1;
  if (check->parsed()) {
    status = mlv_check(code_path.c_str(), &result);
  } else if (basis->parsed()) {
    status = mlv_basis(code_path.c_str(), output_path.empty() ? nullptr : output_path.c_str(),
                       &result);
  } else if (phase->parsed()) {
    status = mlv_phase(code_path.c_str(), signs.c_str(),
                       basis_path.empty() ? nullptr : basis_path.c_str(), &result);
  } else if (concat->parsed()) {
    status = mlv_concat(spec_path.c_str(), verify ? 1 : 0, samples, seed, &result);
  } else if (convert->parsed()) {
    status = mlv_convert(k, source.c_str(), target.c_str(), max_depth, &result);
  } else if (catalog->parsed()) {
    status = mlv_catalog(name.c_str(), output_path.empty() ? nullptr : output_path.c_str(),
                         &result);
  } else if (verify_cmd->parsed()) {
    status = mlv_verify(code_path.c_str(), basis_path.empty() ? nullptr : basis_path.c_str(),
                        &result);
  }
  return emit(status, result, human);
}
