#include "mlv/commands.hpp"

#include <sstream>

#include "mlv/basis.hpp"
#include "mlv/code.hpp"
#include "mlv/concat.hpp"
#include "mlv/formats.hpp"
#include "mlv/ftqc.hpp"
#include "mlv/phase.hpp"

namespace mlv {

namespace {

using nlohmann::json;

CommandResult run_guarded(const std::string& command,
                          const std::function<CommandResult()>& body) {
  try {
    CommandResult r = body();
    r.payload["command"] = command;
    r.payload["status"] = r.status == Status::Ok            ? "ok"
                          : r.status == Status::Unsupported ? "unsupported"
                          : r.status == Status::InvalidInput ? "invalid-input"
                                                             : "internal-error";
    return r;
  } catch (const UnsupportedError& e) {
    CommandResult r;
    r.status = Status::Unsupported;
    r.payload = {{"command", command}, {"status", "unsupported"}, {"error", e.what()}};
    r.human_text = std::string("unsupported: ") + e.what();
    return r;
  } catch (const ValidationError& e) {
    CommandResult r;
    r.status = Status::InvalidInput;
    r.payload = {{"command", command}, {"status", "invalid-input"}, {"error", e.what()}};
    r.human_text = std::string("invalid input: ") + e.what();
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.status = Status::InternalError;
    r.payload = {{"command", command}, {"status", "internal-error"}, {"error", e.what()}};
    r.human_text = std::string("internal error: ") + e.what();
    return r;
  }
}

json code_summary(const SelfDualCssCode& code) {
  json j = {{"n", code.n()}, {"k", code.k()}, {"r", code.r()}};
  if (!code.name().empty()) j["name"] = code.name();
  if (code.was_reduced()) j["check_matrix_reduced"] = true;
  return j;
}

json basis_to_json(const SymplecticBasis& basis) {
  json pairs = json::array();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    json p = {{"x", basis.pairs[j].x.to_string()}, {"z", basis.pairs[j].z.to_string()}};
    if (basis.structure[j].matched) {
      p["class"] = "matched";
    } else {
      p["class"] = "crossed";
      p["partner"] = basis.structure[j].partner + 1;
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

json report_to_json(const BasisReport& report) {
  json j = {{"pass", report.pass}, {"failures", report.failures}};
  json swaps = json::array();
  for (auto [a, b] : report.crossed_swaps) swaps.push_back({a, b});
  j["crossed_swaps"] = swaps;
  return j;
}

PhasePattern parse_signs(const std::string& signs, std::size_t k) {
  if (signs == "all+") return PhasePattern::all_plus(k);
  if (signs == "all-") return PhasePattern::all_minus(k);
  PhasePattern p = PhasePattern::from_pm_string(signs);
  if (p.size() != k) {
    throw ValidationError("expected " + std::to_string(k) + " signs, got " +
                          std::to_string(p.size()));
  }
  return p;
}

/// The basis used by phase/verify commands: an explicit basis file wins,
/// then the code file's own basis section, then fresh construction.
SymplecticBasis basis_for(const SelfDualCssCode& code, const std::string& basis_path) {
  if (!basis_path.empty()) return parse_basis_file(read_file(basis_path));
  if (code.reference_basis()) return classify_pairs(*code.reference_basis());
  return build_compatible_basis(code);
}

}  // namespace

CommandResult cmd_check(const std::string& code_path) {
  return run_guarded("check", [&] {
    SelfDualCssCode code = parse_code_file(read_file(code_path));
    ExistenceVerdict verdict = existence_check(code);
    CommandResult r;
    r.payload["code"] = code_summary(code);
    r.payload["exists"] = verdict.exists;
    std::ostringstream text;
    if (verdict.exists) {
      r.payload["witness"] = verdict.witness->to_string();
      r.payload["witness_weight"] = verdict.witness->weight();
      text << "compatible symplectic basis exists; witness " << verdict.witness->to_string()
           << " (weight " << verdict.witness->weight() << ")";
    } else {
      r.status = Status::Unsupported;
      text << "no compatible symplectic basis exists: every coset representative has even "
              "self-inner-product";
    }
    r.human_text = text.str();
    return r;
  });
}

CommandResult cmd_basis(const std::string& code_path, const std::string& output_path) {
  return run_guarded("basis", [&] {
    SelfDualCssCode code = parse_code_file(read_file(code_path));
    SymplecticBasis basis = build_compatible_basis(code);
    BasisReport report = verify_basis(code, basis, true);
    CommandResult r;
    r.payload["code"] = code_summary(code);
    r.payload["pairs"] = basis_to_json(basis);
    r.payload["verification"] = report_to_json(report);
    if (!output_path.empty()) {
      write_file(output_path, serialize_basis(basis));
      r.payload["output"] = output_path;
    }
    std::ostringstream text;
    text << basis.size() << " matched pairs, verification "
         << (report.pass ? "pass" : "FAIL");
    r.human_text = text.str();
    if (!report.pass) r.status = Status::InternalError;
    return r;
  });
}

CommandResult cmd_phase(const std::string& code_path, const std::string& signs,
                        const std::string& basis_path) {
  return run_guarded("phase", [&] {
    SelfDualCssCode code = parse_code_file(read_file(code_path));
    SymplecticBasis basis = basis_for(code, basis_path);
    PhasePattern target = parse_signs(signs, code.k());
    PhasePattern layer = synthesize_phase_layer(code, basis, target);
    PhasePattern natural = logical_phase_signs(code, basis, stabilizer_preserving_layer(code));
    CommandResult r;
    r.payload["code"] = code_summary(code);
    r.payload["target"] = target.to_pm_string();
    r.payload["layer"] = layer.to_pm_string();
    r.payload["layer_gates"] = layer.to_gate_string();
    r.payload["natural_signs"] = natural.to_pm_string();
    r.payload["verified"] = true;  // synthesize_phase_layer re-checks by conjugation
    json sdg = json::array();
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (layer.signs[i] == -1) sdg.push_back(i + 1);
    }
    r.payload["sdg_qubits"] = sdg;
    r.human_text = "layer " + layer.to_pm_string() + " (" + layer.to_gate_string() + ")";
    return r;
  });
}

CommandResult cmd_concat(const std::string& spec_path, bool verify, std::size_t samples,
                         uint64_t seed) {
  return run_guarded("concat", [&] {
    std::vector<SelfDualCssCode> codes = parse_concat_spec(read_file(spec_path));
    ConcatenatedCode cc = concatenate(codes);
    CommandResult r;
    r.payload["levels"] = json::array();
    for (const auto& c : cc.levels) r.payload["levels"].push_back(code_summary(c));
    r.payload["N"] = cc.N;
    r.payload["K"] = cc.K;
    r.payload["distance_lower_bound"] = cc.distance_lb;
    r.payload["level_widths"] = cc.level_widths;
    std::ostringstream text;
    text << "[[" << cc.N << "," << cc.K << ",>=" << cc.distance_lb << "]] with "
         << cc.depth() << " levels";
    if (verify) {
      MultilevelReport rep = verify_multilevel(cc, samples, seed);
      r.payload["verification"] = {{"pass", rep.pass},
                                   {"failures", rep.failures},
                                   {"sign_patterns_checked", rep.sign_patterns_checked}};
      text << "; verification " << (rep.pass ? "pass" : "FAIL") << " ("
           << rep.sign_patterns_checked << " sign patterns)";
      if (!rep.pass) r.status = Status::InternalError;
    }
    r.human_text = text.str();
    return r;
  });
}

CommandResult cmd_convert(std::size_t k, const std::string& source, const std::string& target,
                          std::size_t max_depth) {
  return run_guarded("convert", [&] {
    MeasurementTarget src = MeasurementTarget::parse(k, source);
    MeasurementTarget dst = MeasurementTarget::parse(k, target);
    auto word = conversion_chain(src, dst, max_depth);
    CommandResult r;
    r.payload["k"] = k;
    r.payload["source"] = src.label();
    r.payload["target"] = dst.label();
    r.payload["max_depth"] = max_depth;
    if (word) {
      json moves = json::array();
      for (LogicalMove m : *word) moves.push_back(move_name(m));
      r.payload["found"] = true;
      r.payload["word"] = moves;
      r.payload["chain"] = render_chain(src, *word);
      r.human_text = render_chain(src, *word);
    } else {
      r.status = Status::Unsupported;
      r.payload["found"] = false;
      r.human_text = "not found within depth " + std::to_string(max_depth);
    }
    return r;
  });
}

CommandResult cmd_catalog(const std::string& name, const std::string& output_path) {
  return run_guarded("catalog", [&] {
    SelfDualCssCode code = resolve_code_reference(name);
    std::string text = serialize_code(code);
    CommandResult r;
    r.payload["code"] = code_summary(code);
    r.payload["file"] = text;
    if (!output_path.empty()) {
      write_file(output_path, text);
      r.payload["output"] = output_path;
    }
    r.human_text = text;
    return r;
  });
}

CommandResult cmd_verify(const std::string& code_path, const std::string& basis_path) {
  return run_guarded("verify", [&] {
    SelfDualCssCode code = parse_code_file(read_file(code_path));
    SymplecticBasis basis = basis_for(code, basis_path);
    BasisReport report = verify_basis(code, basis, true);
    CommandResult r;
    r.payload["code"] = code_summary(code);
    r.payload["pairs"] = basis_to_json(basis);
    r.payload["verification"] = report_to_json(report);
    if (report.pass) {
      r.human_text = "verification pass";
    } else {
      r.status = Status::InvalidInput;
      std::ostringstream text;
      text << "verification FAIL (" << report.failures.size() << " findings)";
      for (const auto& f : report.failures) text << "\n  " << f;
      r.human_text = text.str();
    }
    return r;
  });
}

}  // namespace mlv
