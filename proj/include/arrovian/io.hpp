#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/axioms.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/profile.hpp"
#include "arrovian/search.hpp"
#include "arrovian/swf.hpp"
#include "arrovian/witness.hpp"

namespace arrovian {

// A profile file, optionally carrying the witness trailer lines.
struct ProfileDocument {
  Profile profile;
  std::optional<PreferenceRelation> aggregate;
  std::optional<std::string> provenance;
};

namespace detail {

// Content lines with their original 1-based numbers; '#' starts a comment.
inline std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++number;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const bool blank =
        line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.emplace_back(number, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline int parse_kv_int(const std::string& token, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0)
    throw ParseError("expected " + prefix + "<int>, got '" + token + "'", line);
  try {
    return std::stoi(token.substr(prefix.size()));
  } catch (const std::exception&) {
    throw ParseError("malformed integer in '" + token + "'", line);
  }
}

}  // namespace detail

inline std::string write_profile(const Profile& m) {
  std::string out = "profile A=3 N=" + std::to_string(m.individuals()) + "\n";
  for (int j = 0; j < 3; ++j) {
    const auto& row = m.row(j);
    for (int i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += to_symbol(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string write_witness(const CycleWitness& w) {
  std::string out = write_profile(w.profile);
  out += "aggregate: " + w.aggregate.symbols() + "\n";
  out += "provenance: " + std::string(provenance_name(w.provenance)) + "\n";
  return out;
}

inline ProfileDocument read_profile_text(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t at = 0;
  if (lines.empty()) throw ParseError("empty profile document", 1);

  auto header = detail::split_ws(lines[at].second);
  if (header.size() != 3 || header[0] != "profile")
    throw ParseError("expected header 'profile A=<a> N=<n>'", lines[at].first);
  const int a = detail::parse_kv_int(header[1], "A", lines[at].first);
  const int n = detail::parse_kv_int(header[2], "N", lines[at].first);
  if (a != 3)
    throw UnsupportedAlternativeCount("profile files must declare A=3, got A=" +
                                      std::to_string(a));
  if (n < 2) throw ParseError("profile needs N >= 2", lines[at].first);
  ++at;

  std::vector<PairwisePreferences> rows;
  for (int j = 0; j < a; ++j) {
    if (at >= lines.size())
      throw ParseError("expected " + std::to_string(a) + " rows, found " +
                           std::to_string(j),
                       lines.back().first);
    const auto tokens = detail::split_ws(lines[at].second);
    if (static_cast<int>(tokens.size()) != n)
      throw ParseError("row " + std::to_string(j + 1) + " has " +
                           std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(n),
                       lines[at].first);
    std::vector<Ternary> entries;
    for (int i = 0; i < n; ++i) {
      if (tokens[i].size() != 1 || !from_symbol(tokens[i][0]))
        throw ParseError("invalid symbol '" + tokens[i] + "' in row " +
                             std::to_string(j + 1),
                         lines[at].first, i + 1);
      entries.push_back(*from_symbol(tokens[i][0]));
    }
    rows.emplace_back(std::span<const Ternary>(entries));
    ++at;
  }

  ProfileDocument doc{Profile::from_rows(rows[0], rows[1], rows[2]), {}, {}};

  for (; at < lines.size(); ++at) {
    const auto tokens = detail::split_ws(lines[at].second);
    if (tokens.size() == 2 && tokens[0] == "aggregate:") {
      if (tokens[1].size() != 3)
        throw ParseError("aggregate trailer must hold 3 symbols", lines[at].first);
      doc.aggregate = PreferenceRelation::from_symbols(tokens[1]);
    } else if (tokens.size() == 2 && tokens[0] == "provenance:") {
      doc.provenance = tokens[1];
    } else {
      throw ParseError("unexpected trailer line", lines[at].first);
    }
  }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ProfileDocument read_profile_file(const std::string& path) {
  return read_profile_text(read_file(path));
}

// SWF text form. Builtins round-trip through their expanded tables.
inline std::string write_swf(const IiaSwf& w) {
  const int n = w.individuals();
  std::string out = "swf N=" + std::to_string(n) + "\n";
  for (int j = 0; j < 3; ++j) {
    out += "component " + std::to_string(j + 1) + "\n";
    for (const auto& r : enumerate_pairs(n)) {
      out += r.symbols();
      out += ' ';
      out += to_symbol(w.component(j)(r));
      out += '\n';
    }
  }
  return out;
}

// Builds a builtin from its name spec: "majority", "dictator:2",
// "hierarchical:2,1", "constant:0e1", "indifference".
inline IiaSwf builtin_swf(std::string_view name, int n) {
  const auto colon = name.find(':');
  const std::string head(name.substr(0, colon));
  const std::string args(colon == std::string_view::npos
                             ? ""
                             : std::string(name.substr(colon + 1)));
  if (head == "majority") return pairwise_majority(n);
  if (head == "indifference") return indifference_swf(n);
  if (head == "dictator") {
    if (args.empty()) throw ParseError("dictator:<i> needs an index");
    return dictator(std::stoi(args), n);
  }
  if (head == "hierarchical") {
    std::vector<int> order;
    std::istringstream in(args);
    std::string tok;
    while (std::getline(in, tok, ',')) order.push_back(std::stoi(tok));
    return hierarchical_dictator(order, n);
  }
  if (head == "constant") {
    if (args.size() != 3)
      throw ParseError("constant:<t1t2t3> needs 3 symbols, got '" + args + "'");
    return constant_swf(PreferenceRelation::from_symbols(args), n);
  }
  throw ParseError("unknown builtin '" + head + "'");
}

inline IiaSwf read_swf_text(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty swf document", 1);

  auto header = detail::split_ws(lines[0].second);
  if (header.size() != 2 || header[0] != "swf")
    throw ParseError("expected header 'swf N=<n>'", lines[0].first);
  const int n = detail::parse_kv_int(header[1], "N", lines[0].first);
  if (n < 2) throw ParseError("swf needs N >= 2", lines[0].first);

  std::size_t at = 1;
  if (at < lines.size()) {
    const auto tokens = detail::split_ws(lines[at].second);
    if (!tokens.empty() && tokens[0] == "builtin") {
      if (tokens.size() != 2)
        throw ParseError("expected 'builtin <name>'", lines[at].first);
      if (at + 1 != lines.size())
        throw ParseError("unexpected content after builtin line",
                         lines[at + 1].first);
      return builtin_swf(tokens[1], n);
    }
  }

  const std::uint64_t table_size = detail::pow_u64(3, n);
  std::vector<std::vector<Ternary>> tables;
  for (int j = 0; j < 3; ++j) {
    if (at >= lines.size())
      throw ParseError("expected 'component " + std::to_string(j + 1) + "'",
                       lines.back().first);
    const auto tokens = detail::split_ws(lines[at].second);
    if (tokens.size() != 2 || tokens[0] != "component" ||
        tokens[1] != std::to_string(j + 1))
      throw ParseError("expected 'component " + std::to_string(j + 1) + "'",
                       lines[at].first);
    ++at;

    std::vector<Ternary> table(table_size, Ternary::E);
    std::vector<bool> seen(table_size, false);
    while (at < lines.size()) {
      const auto entry = detail::split_ws(lines[at].second);
      if (entry.size() == 2 && entry[0] == "component") break;
      if (entry.size() != 2)
        throw ParseError("expected '<input-tuple> <output>'", lines[at].first);
      if (static_cast<int>(entry[0].size()) != n)
        throw ParseError("input tuple '" + entry[0] + "' must have " +
                             std::to_string(n) + " symbols",
                         lines[at].first);
      const PairwisePreferences input = PairwisePreferences::from_symbols(entry[0]);
      if (entry[1].size() != 1 || !from_symbol(entry[1][0]))
        throw ParseError("invalid output symbol '" + entry[1] + "'",
                         lines[at].first);
      if (seen[input.rank()])
        throw ParseError("duplicated input tuple " + entry[0] + " in component " +
                             std::to_string(j + 1),
                         lines[at].first);
      seen[input.rank()] = true;
      table[input.rank()] = *from_symbol(entry[1][0]);
      ++at;
    }
    for (std::uint64_t r = 0; r < table_size; ++r) {
      if (!seen[r])
        throw ParseError("component " + std::to_string(j + 1) +
                             " is missing input tuple " +
                             PairwisePreferences::from_rank(r, n).symbols(),
                         lines.back().first);
    }
    tables.push_back(std::move(table));
  }
  if (at != lines.size())
    throw ParseError("unexpected content after component tables",
                     lines[at].first);

  return IiaSwf(PairwiseComparisonFunction(n, std::move(tables[0])),
                PairwiseComparisonFunction(n, std::move(tables[1])),
                PairwiseComparisonFunction(n, std::move(tables[2])));
}

inline IiaSwf read_swf_file(const std::string& path) {
  return read_swf_text(read_file(path));
}

// Resolves a CLI-style SWF argument: "builtin:<name>[:<args>]:<n>" or a path.
inline IiaSwf load_swf(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string rest = spec.substr(8);
    const auto last_colon = rest.rfind(':');
    if (last_colon == std::string::npos)
      throw ParseError("builtin spec needs a trailing :<n>, got '" + spec + "'");
    int n = 0;
    try {
      n = std::stoi(rest.substr(last_colon + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed individual count in '" + spec + "'");
    }
    return builtin_swf(rest.substr(0, last_colon), n);
  }
  return read_swf_file(spec);
}

// ---- line-oriented reports ----

namespace detail {

inline std::string verdict_value(const AxiomVerdict& v) {
  return v.holds ? "holds" : "fails";
}

inline void append_counterexample(std::string& out, const std::string& key,
                                  const AxiomVerdict& v) {
  if (v.holds || !v.counterexample) return;
  const Counterexample& c = *v.counterexample;
  out += key + ".counterexample: " + c.description + "\n";
  if (c.profile)
    out += key + ".profile: columns " + c.profile->column_symbols() + "\n";
  if (c.aggregate) out += key + ".aggregate: " + c.aggregate->symbols() + "\n";
}

inline std::string format_fraction(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  return buffer;
}

}  // namespace detail

inline std::string render_report(const FullReport& rep, const std::string& source) {
  std::string out;
  out += "swf: " + source + "\n";
  out += "individuals: " + std::to_string(rep.individuals) + "\n";
  const std::pair<const char*, const AxiomVerdict*> rows[] = {
      {"unanimity", &rep.unanimity},
      {"non-dictatorship", &rep.non_dictatorship},
      {"unrestricted-domain", &rep.unrestricted_domain},
      {"strictness-preservation", &rep.strictness_preservation},
      {"strict-neutrality", &rep.strict_neutrality},
      {"pareto-indifference", &rep.pareto_indifference},
      {"full-neutrality", &rep.full_neutrality},
  };
  for (const auto& [key, verdict] : rows) {
    out += std::string(key) + ": " + detail::verdict_value(*verdict) + "\n";
    detail::append_counterexample(out, key, *verdict);
    if (verdict->dictator)
      out += std::string(key) + ".dictator: " + std::to_string(*verdict->dictator) + "\n";
  }
  if (!rep.arrow_applicable) {
    out += "arrow-verdict: not-applicable (unanimity fails)\n";
  } else {
    out += "arrow-verdict.dictator: " +
           (rep.arrow_dictator ? std::to_string(*rep.arrow_dictator)
                               : std::string("none")) +
           "\n";
    if (rep.arrow_cycle) {
      out += "arrow-verdict.cycle-profile: columns " +
             rep.arrow_cycle->first.column_symbols() + "\n";
      out += "arrow-verdict.cycle-aggregate: " +
             rep.arrow_cycle->second.symbols() + "\n";
    } else {
      out += "arrow-verdict.cycle-profile: none\n";
    }
  }
  return out;
}

inline std::string render_sweep(const SweepReport& rep) {
  std::string out;
  out += std::string("sweep: ") +
         (rep.mode == SweepMode::Symmetric ? "symmetric" : "full") + "\n";
  out += "individuals: " + std::to_string(rep.individuals) + "\n";
  out += std::string("exhaustive: ") + (rep.sampled ? "no" : "yes") + "\n";
  if (rep.sampled) {
    out += "trials: " + std::to_string(rep.trials) + "\n";
    out += "seed: " + std::to_string(rep.seed.value_or(0)) + "\n";
  }
  out += "total: " + std::to_string(rep.total) + "\n";
  out += "dictatorial: " + std::to_string(rep.dictatorial) + "\n";
  out += "ud-satisfying: " + std::to_string(rep.ud_satisfying) + "\n";
  out += "witnessed: " + std::to_string(rep.witnessed) + "\n";
  out += "dictatorial-cycling: " + std::to_string(rep.dictatorial_cycling) + "\n";
  for (int k = 0; k < 6; ++k) {
    out += "witnessed-by-" +
           std::string(provenance_name(static_cast<Provenance>(k))) + ": " +
           std::to_string(rep.provenance_counts[k]) + "\n";
  }
  out += "discrepancies: " + std::to_string(rep.discrepancies.size()) + "\n";
  for (const auto& d : rep.discrepancies)
    out += "discrepancy." + std::to_string(d.candidate) + ": " + d.reason + "\n";
  return out;
}

inline std::string render_monte_carlo(const MonteCarloReport& rep) {
  std::string out;
  out += "simulate: condorcet-paradox\n";
  out += "voters: " + std::to_string(rep.voters) + "\n";
  out += std::string("culture: ") +
         (rep.culture == Culture::StrictImpartial ? "strict" : "weak") + "\n";
  out += "trials: " + std::to_string(rep.trials) + "\n";
  out += "seed: " + std::to_string(rep.seed) + "\n";
  out += "cycles: " + std::to_string(rep.cycles) + "\n";
  out += "fraction: " + detail::format_fraction(rep.fraction) + "\n";
  out += "standard-error: " + detail::format_fraction(rep.standard_error) + "\n";
  out += "ci95-low: " + detail::format_fraction(rep.ci95_low) + "\n";
  out += "ci95-high: " + detail::format_fraction(rep.ci95_high) + "\n";
  return out;
}

inline std::string render_lemma_report(const LemmaReport& rep) {
  std::string out;
  out += "lemma-suite: unrestricted-domain-consequences\n";
  out += "individuals: " + std::to_string(rep.individuals) + "\n";
  out += "symmetric-candidates: " + std::to_string(rep.symmetric_candidates) + "\n";
  out += "sampled-candidates: " + std::to_string(rep.sampled_candidates) + "\n";
  out += "ud-satisfying: " + std::to_string(rep.ud_satisfying) + "\n";
  out += "pareto-indifferent: " + std::to_string(rep.pareto_indifferent) + "\n";
  out += "strictness-violations: " + std::to_string(rep.strictness_violations) + "\n";
  out += "strict-neutrality-violations: " +
         std::to_string(rep.strict_neutrality_violations) + "\n";
  out += "full-neutrality-violations: " +
         std::to_string(rep.full_neutrality_violations) + "\n";
  return out;
}

}  // namespace arrovian
