// Command-line driver: classification, axiom checks, witness construction,
// candidate sweeps and Condorcet-paradox simulation over the text formats
// described in the README.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrovian/arrovian.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 success, 1 negative verdict / failed precondition,
// 2 usage or input errors
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw arrovian::Error("cannot write file: " + out_path);
  out << text;
}

bool looks_like_literal(const std::string& arg) {
  if (arg.empty()) return false;
  for (char c : arg)
    if (c != '0' && c != 'e' && c != '1') return false;
  return true;
}

std::string classification_line(const arrovian::PreferenceRelation& t) {
  const auto c = arrovian::classify(t);
  return std::string(c.weak_order() ? "weak order: " : "cycle: ") +
         arrovian::render_chain(t);
}

int run_classify(const std::string& input, const std::string& out_path) {
  std::string text;
  if (looks_like_literal(input)) {
    const auto t = arrovian::PreferenceRelation::from_symbols(input);
    const auto c = arrovian::classify(t);
    text += "relation: " + input + "\n";
    text += classification_line(t) + "\n";
    text += std::string("strict: ") + (c.strict ? "yes" : "no") + "\n";
  } else {
    const auto doc = arrovian::read_profile_file(input);
    const auto& m = doc.profile;
    text += "profile: A=3 N=" + std::to_string(m.individuals()) + "\n";
    for (int i = 0; i < m.individuals(); ++i) {
      const auto col = m.column(i);
      const auto c = arrovian::classify(col);
      text += "column " + std::to_string(i + 1) + " (" + col.symbols() + "): " +
              classification_line(col) +
              (c.strict ? " [strict]" : "") + "\n";
    }
    if (doc.aggregate)
      text += "aggregate: " + doc.aggregate->symbols() + "\n";
    if (doc.provenance) text += "provenance: " + *doc.provenance + "\n";
  }
  emit(text, out_path);
  return kOk;
}

json verdict_json(const arrovian::AxiomVerdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.counterexample) {
    json c;
    c["description"] = v.counterexample->description;
    if (v.counterexample->profile)
      c["profile"] = v.counterexample->profile->column_symbols();
    if (v.counterexample->aggregate)
      c["aggregate"] = v.counterexample->aggregate->symbols();
    if (v.counterexample->row) c["row"] = v.counterexample->row->symbols();
    if (v.counterexample->observed)
      c["observed"] = std::string(1, arrovian::to_symbol(*v.counterexample->observed));
    if (v.counterexample->component) c["component"] = *v.counterexample->component;
    j["counterexample"] = c;
  }
  if (v.dictator) j["dictator"] = *v.dictator;
  return j;
}

int run_check(const std::string& swf_spec, const std::string& axiom,
              bool as_json, const std::string& out_path) {
  const arrovian::IiaSwf w = arrovian::load_swf(swf_spec);

  if (!axiom.empty()) {
    arrovian::AxiomVerdict v;
    if (axiom == "unanimity") v = arrovian::check_unanimity(w);
    else if (axiom == "non-dictatorship") v = arrovian::check_non_dictatorship(w);
    else if (axiom == "unrestricted-domain") v = arrovian::check_unrestricted_domain(w);
    else if (axiom == "strictness-preservation") v = arrovian::check_strictness_preservation(w);
    else if (axiom == "strict-neutrality") v = arrovian::check_strict_neutrality(w);
    else if (axiom == "pareto-indifference") v = arrovian::check_pareto_indifference(w);
    else if (axiom == "full-neutrality") v = arrovian::check_full_neutrality(w);
    else throw arrovian::ParseError("unknown axiom '" + axiom + "'");

    std::string text;
    if (as_json) {
      json j;
      j["swf"] = swf_spec;
      j[axiom] = verdict_json(v);
      text = j.dump(2) + "\n";
    } else {
      text = axiom + ": " + (v.holds ? "holds" : "fails") + "\n";
      if (!v.holds && v.counterexample)
        text += axiom + ".counterexample: " + v.counterexample->description + "\n";
      if (v.dictator)
        text += axiom + ".dictator: " + std::to_string(*v.dictator) + "\n";
    }
    emit(text, out_path);
    return v.holds ? kOk : kNegative;
  }

  const arrovian::FullReport rep = arrovian::full_report(w);
  std::string text;
  if (as_json) {
    json j;
    j["swf"] = swf_spec;
    j["individuals"] = rep.individuals;
    j["unanimity"] = verdict_json(rep.unanimity);
    j["non-dictatorship"] = verdict_json(rep.non_dictatorship);
    j["unrestricted-domain"] = verdict_json(rep.unrestricted_domain);
    j["strictness-preservation"] = verdict_json(rep.strictness_preservation);
    j["strict-neutrality"] = verdict_json(rep.strict_neutrality);
    j["pareto-indifference"] = verdict_json(rep.pareto_indifference);
    j["full-neutrality"] = verdict_json(rep.full_neutrality);
    if (!rep.arrow_applicable) {
      j["arrow-verdict"] = "not-applicable";
    } else {
      json a;
      a["dictator"] = rep.arrow_dictator ? json(*rep.arrow_dictator) : json();
      if (rep.arrow_cycle) {
        a["cycle-profile"] = rep.arrow_cycle->first.column_symbols();
        a["cycle-aggregate"] = rep.arrow_cycle->second.symbols();
      } else {
        a["cycle-profile"] = json();
      }
      j["arrow-verdict"] = a;
    }
    text = j.dump(2) + "\n";
  } else {
    text = arrovian::render_report(rep, swf_spec);
  }
  emit(text, out_path);

  const bool all_hold = rep.unanimity.holds && rep.non_dictatorship.holds &&
                        rep.unrestricted_domain.holds &&
                        rep.strictness_preservation.holds &&
                        rep.strict_neutrality.holds &&
                        rep.pareto_indifference.holds &&
                        rep.full_neutrality.holds;
  return all_hold ? kOk : kNegative;
}

std::string pair_document(const arrovian::Profile& m,
                          const arrovian::PreferenceRelation& aggregate) {
  return arrovian::write_profile(m) + "aggregate: " + aggregate.symbols() +
         "\nprovenance: contradictory-pair\n";
}

int run_witness(const std::string& swf_spec, const std::string& theorem,
                const std::string& out_path) {
  const arrovian::IiaSwf w = arrovian::load_swf(swf_spec);

  const auto emit_witness = [&](const arrovian::CycleWitness& witness) {
    emit(arrovian::write_witness(witness), out_path);
    return kOk;
  };
  const auto emit_not_applicable = [&](const char* property) {
    emit(std::string("not-applicable: ") + property + " holds\n", out_path);
    return kOk;
  };

  if (theorem == "strictness") {
    if (auto witness = arrovian::strictness_witness(w)) return emit_witness(*witness);
    return emit_not_applicable("strictness preservation");
  }
  if (theorem == "neutrality") {
    if (auto witness = arrovian::neutrality_witness(w)) return emit_witness(*witness);
    return emit_not_applicable("strict neutrality");
  }
  if (theorem == "pareto") {
    if (auto witness = arrovian::pareto_witness(w)) return emit_witness(*witness);
    return emit_not_applicable("full neutrality");
  }
  if (theorem == "arrow") {
    return emit_witness(arrovian::arrow_witness(w));
  }
  if (theorem == "contradictory-pair") {
    const auto pair = arrovian::contradictory_pair(w);
    const std::string doc_m = pair_document(pair.m, pair.aggregate_m);
    const std::string doc_p = pair_document(pair.m_prime, pair.aggregate_m_prime);
    if (out_path.empty()) {
      std::cout << doc_m << "\n" << doc_p;
    } else {
      emit(doc_m, out_path);
      emit(doc_p, out_path + ".prime");
    }
    return kOk;
  }
  throw arrovian::ParseError("unknown theorem '" + theorem + "'");
}

int run_enumerate(int individuals, const std::string& mode, std::uint64_t trials,
                  std::optional<std::uint64_t> seed, int workers,
                  const std::string& out_path) {
  arrovian::CandidateSpace space;
  space.individuals = individuals;
  space.mode = mode == "full" ? arrovian::SweepMode::FullTriples
                              : arrovian::SweepMode::Symmetric;

  const bool sampled =
      space.mode == arrovian::SweepMode::FullTriples || individuals != 2;
  arrovian::SweepOptions options;
  options.workers = workers;
  if (sampled) {
    if (!seed)
      throw arrovian::Error("sampled sweeps require --seed for reproducibility");
    options.trials = trials;
    options.seed = seed;
  }

  const auto report = arrovian::sweep_candidates(space, options);
  emit(arrovian::render_sweep(report), out_path);
  return report.discrepancies.empty() ? kOk : kNegative;
}

int run_simulate(int voters, std::uint64_t trials, std::optional<std::uint64_t> seed,
                 const std::string& culture, int workers,
                 const std::string& out_path) {
  if (!seed) throw arrovian::Error("simulate requires --seed for reproducibility");
  const auto report = arrovian::monte_carlo_condorcet(
      voters, trials, *seed,
      culture == "weak" ? arrovian::Culture::WeakImpartial
                        : arrovian::Culture::StrictImpartial,
      workers);
  emit(arrovian::render_monte_carlo(report), out_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arrovian: ternary preference aggregation toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a relation literal or profile file");
  std::string classify_input;
  classify_cmd->add_option("input", classify_input,
                           "relation literal (e.g. 0e1) or profile file")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "run axiom checkers on an SWF");
  std::string check_swf, check_axiom;
  bool check_all = false, check_json = false;
  check_cmd->add_option("swf", check_swf, "SWF file or builtin:<name>:<n>")
      ->required();
  check_cmd->add_option("--axiom", check_axiom, "run a single axiom checker");
  check_cmd->add_flag("--all", check_all, "run every checker (default)");
  check_cmd->add_flag("--json", check_json, "machine-readable report");

  auto* witness_cmd =
      app.add_subcommand("witness", "construct cycle-witness profiles");
  std::string witness_swf, witness_theorem;
  witness_cmd->add_option("swf", witness_swf, "SWF file or builtin:<name>:<n>")
      ->required();
  witness_cmd
      ->add_option("--theorem", witness_theorem,
                   "strictness | neutrality | arrow | contradictory-pair | pareto")
      ->required()
      ->check(CLI::IsMember({"strictness", "neutrality", "arrow",
                             "contradictory-pair", "pareto"}));

  auto* enum_cmd =
      app.add_subcommand("enumerate", "sweep the candidate space of SWFs");
  int enum_individuals = 2;
  std::string enum_mode = "symmetric";
  std::uint64_t enum_trials = 1000000;
  std::optional<std::uint64_t> enum_seed;
  int enum_workers = 1;
  enum_cmd->add_option("--individuals", enum_individuals, "individual count")
      ->required();
  enum_cmd->add_option("--mode", enum_mode, "symmetric | full")
      ->check(CLI::IsMember({"symmetric", "full"}));
  enum_cmd->add_option("--trials", enum_trials, "sample count for sampled modes");
  enum_cmd->add_option("--seed", enum_seed, "RNG seed (required when sampling)");
  enum_cmd->add_option("--workers", enum_workers, "worker thread count");

  auto* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo Condorcet-paradox frequency");
  int sim_voters = 0;
  std::uint64_t sim_trials = 1000000;
  std::optional<std::uint64_t> sim_seed;
  std::string sim_culture = "strict";
  int sim_workers = 1;
  sim_cmd->add_option("--voters", sim_voters, "voter count (>= 2)")->required();
  sim_cmd->add_option("--trials", sim_trials, "number of sampled profiles");
  sim_cmd->add_option("--seed", sim_seed, "RNG seed (required)");
  sim_cmd->add_option("--culture", sim_culture, "strict | weak")
      ->check(CLI::IsMember({"strict", "weak"}));
  sim_cmd->add_option("--workers", sim_workers, "worker thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_input, out_path);
    if (check_cmd->parsed())
      return run_check(check_swf, check_axiom, check_json, out_path);
    if (witness_cmd->parsed())
      return run_witness(witness_swf, witness_theorem, out_path);
    if (enum_cmd->parsed())
      return run_enumerate(enum_individuals, enum_mode, enum_trials, enum_seed,
                           enum_workers, out_path);
    if (sim_cmd->parsed())
      return run_simulate(sim_voters, sim_trials, sim_seed, sim_culture,
                          sim_workers, out_path);
  } catch (const arrovian::PreconditionFailed& e) {
    std::cerr << "precondition failed (" << e.axiom << "): " << e.what() << "\n";
    return kNegative;
  } catch (const arrovian::ParseError& e) {
    std::cerr << "parse error";
    if (e.line > 0) std::cerr << " at line " << e.line;
    if (e.column > 0) std::cerr << ", column " << e.column;
    std::cerr << ": " << e.what() << "\n";
    return kUsage;
  } catch (const arrovian::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
