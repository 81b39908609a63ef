#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "beliefkernel/json_io.hpp"
#include "beliefkernel/scenario.hpp"

// Exit codes: 0 holds/success, 1 postulate failure (witness printed),
// 2 usage or input error, 3 inconsistent revision input.
namespace {

constexpr int kOk = 0;
constexpr int kPostulateFails = 1;
constexpr int kUsage = 2;
constexpr int kInconsistent = 3;

bk::Signature generated_signature(int size) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  if (size < 1 || size > 6) throw bk::ScopeError("signature size must be 1..6");
  std::vector<std::string> atoms(names, names + size);
  return bk::Signature(atoms);
}

const bk::ChangeOperator& operator_for(const bk::PostulateInfo& p, const std::string& name) {
  return p.flavor == bk::OperatorFlavor::Contraction ? bk::contraction_strategy(name)
                                                     : bk::revision_strategy(name);
}

int cmd_eval(const std::string& path, const std::string& contraction, const std::string& revision,
             const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read scenario file '" << path << "'\n";
    return kUsage;
  }
  bk::json scenario_json;
  try {
    scenario_json = bk::json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "error: scenario is not valid JSON: " << e.what() << "\n";
    return kUsage;
  }
  std::optional<bk::Scenario> scenario;
  try {
    scenario = bk::scenario_from_json(scenario_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const bk::OperatorConfig config{&bk::contraction_strategy(contraction),
                                    &bk::revision_strategy(revision)};
    const bk::json report = bk::run_scenario(*scenario, config);
    if (out_path.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kUsage;
      }
      out << report.dump(2) << "\n";
    }
    return kOk;
  } catch (const bk::InconsistentInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const bk::ScriptStepError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Inconsistent revision inside the script also maps to exit 3.
    return std::string(e.what()).find("inconsistent") != std::string::npos ? kInconsistent
                                                                           : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_check(const std::string& op_name, const std::string& postulate, int size,
              const std::string& mode, std::uint64_t seed, std::uint64_t samples) {
  const bk::PostulateInfo* p = bk::find_postulate(postulate);
  if (!p) {
    std::cerr << "error: unknown postulate '" << postulate << "'\n";
    return kUsage;
  }
  try {
    const bk::Signature sig = generated_signature(size);
    bk::Quantification quant;
    if (mode == "sampled") {
      quant.mode = bk::QuantMode::Sampled;
      quant.seed = seed;
      quant.samples = samples;
    } else if (mode != "exhaustive") {
      std::cerr << "error: mode must be 'exhaustive' or 'sampled'\n";
      return kUsage;
    }
    const bk::ChangeOperator& op = operator_for(*p, op_name);
    const bk::PostulateVerdict v = bk::check_postulate(op, *p, sig, quant);
    std::cout << bk::verdict_to_json(v, sig).dump() << "\n";
    return v.holds() ? kOk : kPostulateFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_counterexample(const std::string& op_name, const std::string& postulate, int size) {
  const bk::PostulateInfo* p = bk::find_postulate(postulate);
  if (!p) {
    std::cerr << "error: unknown postulate '" << postulate << "'\n";
    return kUsage;
  }
  try {
    const bk::Signature sig = generated_signature(size);
    if (op_name == "any") {
      // Search over every contraction-compatible operator, not a strategy.
      const bk::ImpossibilityReport report = bk::verify_impossibility(*p, sig);
      std::cout << bk::impossibility_report_to_json(report, sig).dump() << "\n";
      return report.verified ? kPostulateFails : kOk;
    }
    const bk::ChangeOperator& op = operator_for(*p, op_name);
    const auto witness = bk::find_counterexample(op, *p, sig);
    bk::json out{{"postulate", p->name},
                 {"operator", op.name},
                 {"scope", bk::json{{"signature_size", size}, {"mode", "exhaustive"}}},
                 {"status", witness ? "fails" : "holds"}};
    if (witness) out["witness"] = bk::witness_to_json(*witness, *p, sig);
    std::cout << out.dump() << "\n";
    return witness ? kPostulateFails : kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_verify_theorem(const std::string& op_name, const std::string& theorem, int size) {
  try {
    const bk::TheoremId id = bk::theorem_from_name(theorem);
    const bk::Signature sig = generated_signature(size);
    const bk::ChangeOperator& op = bk::contraction_strategy(op_name);
    const bk::TheoremReport report = bk::verify_characterization(op, id, sig);
    std::cout << bk::theorem_report_to_json(report, sig).dump() << "\n";
    return report.pass ? kOk : kPostulateFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_enumerate(int size, bool count_only) {
  try {
    const bk::Signature sig = generated_signature(size);
    if (sig.world_count() > bk::kMaxEnumerationWorlds) {
      std::cerr << "error: world-space exceeds " << bk::kMaxEnumerationWorlds << " worlds\n";
      return kUsage;
    }
    if (count_only) {
      std::cout << bk::count_total_preorders(sig.world_count()) << "\n";
      return kOk;
    }
    bk::for_each_total_preorder(sig.world_count(), [&](const std::vector<std::uint8_t>& ranks) {
      std::cout << bk::preorder_to_json(bk::TotalPreorder{ranks}, sig).dump() << "\n";
    });
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief-kernel: AGM belief change engine and postulate laboratory"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  std::string contraction = "natural", revision = "natural";
  auto* eval = app.add_subcommand("eval", "evaluate a scenario file");
  eval->add_option("scenario", scenario_path, "scenario JSON file")->required();
  eval->add_option("--operator-contraction", contraction, "natural|moderate|trivial");
  eval->add_option("--operator-revision", revision, "natural|lex");
  eval->add_option("--out", out_path, "write the report here instead of stdout");

  std::string op_name = "natural", postulate, mode = "exhaustive", theorem;
  int size = 2;
  std::uint64_t seed = 0, samples = 10000;
  auto* check = app.add_subcommand("check", "check one postulate for one operator");
  check->add_option("--operator", op_name, "strategy name")->required();
  check->add_option("--postulate", postulate, "postulate id (e.g. C1, IC2-COND, KPP3)")->required();
  check->add_option("--signature-size", size, "number of atoms (<=2 exhaustive, <=3 sampled)");
  check->add_option("--mode", mode, "exhaustive|sampled");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--samples", samples, "sample count");

  auto* cx = app.add_subcommand("counterexample", "search for a violating instance");
  cx->add_option("--operator", op_name, "strategy name, or 'any' for impossibility results")
      ->required();
  cx->add_option("--postulate", postulate, "postulate id")->required();
  cx->add_option("--signature-size", size, "number of atoms (<= 2)");

  auto* vt = app.add_subcommand("verify-theorem", "check a characterization theorem's groups");
  vt->add_option("--operator", op_name, "contraction strategy")->required();
  vt->add_option("--theorem", theorem,
                 "thm1|prop9|prop13|prop17_18|prop25|prop31|prop34|prop35")
      ->required();
  vt->add_option("--signature-size", size, "number of atoms (<= 2)");

  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "stream every preorder on the world-space");
  en->add_option("--signature-size", size, "number of atoms (world-space <= 8)");
  en->add_flag("--count-only", count_only, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (eval->parsed()) return cmd_eval(scenario_path, contraction, revision, out_path);
  if (check->parsed()) return cmd_check(op_name, postulate, size, mode, seed, samples);
  if (cx->parsed()) return cmd_counterexample(op_name, postulate, size);
  if (vt->parsed()) return cmd_verify_theorem(op_name, theorem, size);
  if (en->parsed()) return cmd_enumerate(size, count_only);
  return kUsage;
}
