#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "arrovian/axioms.hpp"
#include "arrovian/enumerate.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/swf.hpp"
#include "arrovian/witness.hpp"

namespace arrovian {

// Counter-based generator: output = mix(mix(seed xor GOLDEN*(stream+1)) +
// GOLDEN*(counter+1)) with mix the SplitMix64 finalizer. Every draw is a pure
// function of (seed, stream, counter), so results do not depend on how work
// is split across threads. Streams are keyed by trial index, counters by
// draw index within the trial.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t draw(std::uint64_t stream, std::uint64_t counter) const {
    const std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
    return mix(mix(seed_ ^ (golden * (stream + 1))) + golden * (counter + 1));
  }

  // Uniform value in [0, bound) via the multiply-shift reduction.
  std::uint64_t bounded(std::uint64_t stream, std::uint64_t counter,
                        std::uint64_t bound) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(draw(stream, counter)) * bound) >> 64);
  }

private:
  std::uint64_t seed_;
};

namespace detail {

inline int clamp_workers(int workers, std::uint64_t jobs) {
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > jobs)
    workers = static_cast<int>(jobs ? jobs : 1);
  return workers;
}

// Runs fn(worker_index, begin, end) over a partition of [0, jobs).
template <class F>
void parallel_ranges(std::uint64_t jobs, int workers, F&& fn) {
  workers = clamp_workers(workers, jobs);
  if (workers == 1) {
    fn(0, std::uint64_t{0}, jobs);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = jobs / workers;
  const std::uint64_t rest = jobs % workers;
  std::uint64_t begin = 0;
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(t) < rest ? 1 : 0);
    pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Every profile whose aggregate classifies as a cycle, in enumeration order.
// The literal exhaustive test of unrestricted domain.
inline std::vector<std::pair<Profile, PreferenceRelation>> brute_force_cycle_search(
    const IiaSwf& w) {
  const int n = w.individuals();
  if (n > 4) throw TooLarge("cycle search materializes results; capped at n <= 4");
  std::vector<std::pair<Profile, PreferenceRelation>> out;
  const ProfileSpace space(n);
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Profile m = space.at(rank);
    const PreferenceRelation agg = w.apply(m);
    if (classify(agg).cycle()) out.emplace_back(m, agg);
  }
  return out;
}

inline std::optional<std::pair<Profile, PreferenceRelation>> first_cycle(
    const IiaSwf& w) {
  const int n = w.individuals();
  if (n > 6) throw TooLarge("cycle scan capped at n <= 6");
  const ProfileSpace space(n);
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Profile m = space.at(rank);
    const PreferenceRelation agg = w.apply(m);
    if (classify(agg).cycle()) return std::make_pair(m, agg);
  }
  return std::nullopt;
}

enum class SweepMode { Symmetric, FullTriples };

struct CandidateSpace {
  int individuals;
  SweepMode mode;
  bool unanimity_fixed = true;  // the only supported setting
};

struct SweepOptions {
  std::uint64_t trials = 0;             // sampled modes only
  std::optional<std::uint64_t> seed;    // required when sampling
  int workers = 1;
};

struct Discrepancy {
  std::uint64_t candidate;  // exhaustive: candidate rank; sampled: trial index
  std::string reason;
};

struct SweepReport {
  int individuals = 0;
  SweepMode mode = SweepMode::Symmetric;
  bool sampled = false;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;

  std::uint64_t total = 0;           // candidates examined (unanimity fixed)
  std::uint64_t dictatorial = 0;     // some individual dictates a component
  std::uint64_t ud_satisfying = 0;   // no profile aggregates to a cycle
  std::uint64_t witnessed = 0;       // a cycle witness was produced
  std::uint64_t dictatorial_cycling = 0;  // dictatorial yet failing UD
  std::array<std::uint64_t, 6> provenance_counts{};  // indexed by Provenance
  std::vector<Discrepancy> discrepancies;
};

// Unanimity-fixed symmetric candidate `rank`, numbered in base 3 over the
// free table entries (all input ranks except the two pinned unanimous rows),
// most significant first.
inline IiaSwf symmetric_candidate(int n, std::uint64_t rank) {
  const std::uint64_t inputs = detail::pow_u64(3, n);
  std::vector<Ternary> table(inputs, Ternary::E);
  table[0] = Ternary::Zero;           // all-zero row
  table[inputs - 1] = Ternary::One;   // all-one row
  for (std::uint64_t q = inputs - 2; q >= 1; --q) {
    table[q] = static_cast<Ternary>(rank % 3);
    rank /= 3;
  }
  return IiaSwf::uniform(PairwiseComparisonFunction(n, std::move(table)));
}

namespace detail {

inline PairwiseComparisonFunction sampled_component(int n, const CounterRng& rng,
                                                    std::uint64_t trial,
                                                    std::uint64_t counter_base) {
  const std::uint64_t inputs = pow_u64(3, n);
  std::vector<Ternary> table(inputs, Ternary::E);
  table[0] = Ternary::Zero;
  table[inputs - 1] = Ternary::One;
  for (std::uint64_t q = 1; q + 1 < inputs; ++q)
    table[q] = static_cast<Ternary>(rng.bounded(trial, counter_base + q, 3));
  return PairwiseComparisonFunction(n, std::move(table));
}

}  // namespace detail

// Unanimity-fixed candidate for sampled sweeps. Free entries of component j
// draw from (trial, j * 3^n + input_rank), so a trial's candidate is fixed by
// the seed alone.
inline IiaSwf sampled_candidate(int n, SweepMode mode, const CounterRng& rng,
                                std::uint64_t trial) {
  const std::uint64_t inputs = detail::pow_u64(3, n);
  if (mode == SweepMode::Symmetric)
    return IiaSwf::uniform(detail::sampled_component(n, rng, trial, 0));
  return IiaSwf(detail::sampled_component(n, rng, trial, 0),
                detail::sampled_component(n, rng, trial, inputs),
                detail::sampled_component(n, rng, trial, 2 * inputs));
}

namespace detail {

struct CandidateOutcome {
  bool dictatorial = false;
  bool ud = false;
  std::optional<Provenance> provenance;
  std::optional<std::string> discrepancy;
};

// Classifies one unanimity-satisfying candidate and cross-checks the witness
// pipeline against the exhaustive cycle scan:
//  - no cycle exists: the candidate must be dictatorial (Arrow's direction);
//  - a cycle exists and the candidate is non-dictatorial: the pipeline must
//    return a witness that re-validates.
inline CandidateOutcome classify_candidate(const IiaSwf& w) {
  CandidateOutcome out;
  out.dictatorial = !check_non_dictatorship(w).holds;
  const auto cycle = first_cycle(w);
  out.ud = !cycle.has_value();

  if (out.ud) {
    if (!out.dictatorial)
      out.discrepancy = "satisfies unrestricted domain without a dictator";
    return out;
  }
  if (out.dictatorial) return out;

  try {
    const CycleWitness witness = arrow_witness(w);
    if (w.apply(witness.profile) != witness.aggregate ||
        !classify(witness.aggregate).cycle()) {
      out.discrepancy = "witness failed to re-validate";
    } else {
      out.provenance = witness.provenance;
    }
  } catch (const Error& e) {
    out.discrepancy = std::string("witness pipeline error: ") + e.what();
  }
  return out;
}

}  // namespace detail

// Candidate-space sweep verifying the dictator-or-cycle dichotomy candidate
// by candidate. Symmetric n=2 is exhaustive (3^7 candidates); Symmetric n=3
// and FullTriples are sampled and require trials and a seed.
inline SweepReport sweep_candidates(const CandidateSpace& space,
                                    const SweepOptions& options = {}) {
  const int n = space.individuals;
  if (!space.unanimity_fixed)
    throw Error("only unanimity-fixed candidate spaces are supported");
  if (n < 2 || n > 3) throw TooLarge("candidate sweeps support n = 2 or 3");

  const bool exhaustive = space.mode == SweepMode::Symmetric && n == 2;
  SweepReport report;
  report.individuals = n;
  report.mode = space.mode;
  report.sampled = !exhaustive;

  std::uint64_t jobs;
  if (exhaustive) {
    jobs = detail::pow_u64(3, detail::pow_u64(3, n) - 2);
  } else {
    if (options.trials == 0 || !options.seed)
      throw Error("sampled sweeps require trials and a seed");
    jobs = options.trials;
    report.trials = options.trials;
    report.seed = options.seed;
  }
  report.total = jobs;

  const int workers = detail::clamp_workers(options.workers, jobs);
  std::vector<SweepReport> parts(workers);
  const CounterRng rng(options.seed.value_or(0));

  detail::parallel_ranges(jobs, workers, [&](int worker, std::uint64_t begin,
                                             std::uint64_t end) {
    SweepReport& part = parts[worker];
    for (std::uint64_t id = begin; id < end; ++id) {
      const IiaSwf w = exhaustive ? symmetric_candidate(n, id)
                                  : sampled_candidate(n, space.mode, rng, id);
      const auto outcome = detail::classify_candidate(w);
      if (outcome.dictatorial) ++part.dictatorial;
      if (outcome.ud) {
        ++part.ud_satisfying;
      } else {
        ++part.witnessed;
        if (outcome.dictatorial) ++part.dictatorial_cycling;
      }
      if (outcome.provenance)
        ++part.provenance_counts[static_cast<int>(*outcome.provenance)];
      if (outcome.discrepancy)
        part.discrepancies.push_back({id, *outcome.discrepancy});
    }
  });

  for (const auto& part : parts) {
    report.dictatorial += part.dictatorial;
    report.ud_satisfying += part.ud_satisfying;
    report.witnessed += part.witnessed;
    report.dictatorial_cycling += part.dictatorial_cycling;
    for (int k = 0; k < 6; ++k)
      report.provenance_counts[k] += part.provenance_counts[k];
    for (const auto& d : part.discrepancies) report.discrepancies.push_back(d);
  }
  return report;
}

// Lemma verification over unrestricted-domain-satisfying candidates: such a
// candidate must preserve strictness and be strictly neutral, and when it is
// Pareto indifferent it must be fully neutral.
struct LemmaReport {
  int individuals = 0;
  std::uint64_t symmetric_candidates = 0;
  std::uint64_t sampled_candidates = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t ud_satisfying = 0;
  std::uint64_t pareto_indifferent = 0;  // among the UD-satisfying
  std::uint64_t strictness_violations = 0;
  std::uint64_t strict_neutrality_violations = 0;
  std::uint64_t full_neutrality_violations = 0;
};

inline LemmaReport verify_lemmas_exhaustive(int n, std::uint64_t sampled_trials = 0,
                                            std::optional<std::uint64_t> seed = {},
                                            int workers = 1) {
  if (n != 2) throw TooLarge("lemma verification supports n = 2");
  if (sampled_trials > 0 && !seed)
    throw Error("sampled lemma verification requires a seed");

  LemmaReport report;
  report.individuals = n;
  report.symmetric_candidates = detail::pow_u64(3, detail::pow_u64(3, n) - 2);
  report.sampled_candidates = sampled_trials;
  report.seed = seed;

  const std::uint64_t jobs = report.symmetric_candidates + sampled_trials;
  const int nworkers = detail::clamp_workers(workers, jobs);
  std::vector<LemmaReport> parts(nworkers);
  const CounterRng rng(seed.value_or(0));

  detail::parallel_ranges(jobs, nworkers, [&](int worker, std::uint64_t begin,
                                              std::uint64_t end) {
    LemmaReport& part = parts[worker];
    for (std::uint64_t id = begin; id < end; ++id) {
      const bool from_symmetric = id < report.symmetric_candidates;
      const IiaSwf w = from_symmetric
                           ? symmetric_candidate(n, id)
                           : sampled_candidate(n, SweepMode::FullTriples, rng,
                                               id - report.symmetric_candidates);
      if (first_cycle(w).has_value()) continue;
      ++part.ud_satisfying;
      if (!check_strictness_preservation(w).holds) ++part.strictness_violations;
      if (!check_strict_neutrality(w).holds) ++part.strict_neutrality_violations;
      if (check_pareto_indifference(w).holds) {
        ++part.pareto_indifferent;
        if (!check_full_neutrality(w).holds) ++part.full_neutrality_violations;
      }
    }
  });

  for (const auto& part : parts) {
    report.ud_satisfying += part.ud_satisfying;
    report.pareto_indifferent += part.pareto_indifferent;
    report.strictness_violations += part.strictness_violations;
    report.strict_neutrality_violations += part.strict_neutrality_violations;
    report.full_neutrality_violations += part.full_neutrality_violations;
  }
  return report;
}

enum class Culture { StrictImpartial, WeakImpartial };

struct MonteCarloReport {
  int voters = 0;
  Culture culture = Culture::StrictImpartial;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t cycles = 0;
  double fraction = 0.0;
  double standard_error = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

namespace detail {

inline const std::vector<PreferenceRelation>& culture_orders(Culture c) {
  return c == Culture::StrictImpartial ? strict_orders3() : weak_orders3();
}

// Majority aggregate of sampled columns, without building tuples: counts
// strict votes per row. Matches pairwise_majority entry for entry.
template <class ColumnAt>
inline bool majority_cycles(int voters, ColumnAt&& column_at) {
  int zeros[3] = {0, 0, 0};
  int ones[3] = {0, 0, 0};
  for (int v = 0; v < voters; ++v) {
    const PreferenceRelation& c = column_at(v);
    for (int j = 0; j < 3; ++j) {
      if (c[j] == Ternary::Zero) ++zeros[j];
      else if (c[j] == Ternary::One) ++ones[j];
    }
  }
  bool has_zero = false, has_one = false;
  for (int j = 0; j < 3; ++j) {
    if (zeros[j] > ones[j]) has_zero = true;
    else if (ones[j] > zeros[j]) has_one = true;
  }
  const bool all_e = !has_zero && !has_one;
  return !(all_e || (has_zero && has_one));
}

}  // namespace detail

// Seeded estimate of the pairwise-majority cycle frequency under an impartial
// culture. Deterministic for a given seed, independent of the worker count.
inline MonteCarloReport monte_carlo_condorcet(int voters, std::uint64_t trials,
                                              std::uint64_t seed, Culture culture,
                                              int workers = 1) {
  if (voters < 2) throw BadDimension("simulation needs at least 2 voters");
  if (trials < 1) throw BadDimension("simulation needs at least 1 trial");

  const auto& orders = detail::culture_orders(culture);
  const std::uint64_t k = orders.size();
  const CounterRng rng(seed);

  const int nworkers = detail::clamp_workers(workers, trials);
  std::vector<std::uint64_t> cycle_counts(nworkers, 0);

  detail::parallel_ranges(trials, nworkers, [&](int worker, std::uint64_t begin,
                                                std::uint64_t end) {
    std::uint64_t cycles = 0;
    std::vector<int> sampled(voters);
    for (std::uint64_t t = begin; t < end; ++t) {
      for (int v = 0; v < voters; ++v)
        sampled[v] = static_cast<int>(rng.bounded(t, v, k));
      if (detail::majority_cycles(
              voters, [&](int v) -> const PreferenceRelation& {
                return orders[sampled[v]];
              }))
        ++cycles;
    }
    cycle_counts[worker] = cycles;
  });

  MonteCarloReport report;
  report.voters = voters;
  report.culture = culture;
  report.trials = trials;
  report.seed = seed;
  for (std::uint64_t c : cycle_counts) report.cycles += c;
  report.fraction = static_cast<double>(report.cycles) / static_cast<double>(trials);
  report.standard_error =
      std::sqrt(report.fraction * (1.0 - report.fraction) /
                static_cast<double>(trials));
  report.ci95_low = report.fraction - 1.96 * report.standard_error;
  report.ci95_high = report.fraction + 1.96 * report.standard_error;
  return report;
}

// Exact cycle fraction of pairwise majority under an impartial culture,
// by exhausting all |culture|^voters profiles.
inline std::pair<std::uint64_t, std::uint64_t> exact_cycle_count(int voters,
                                                                 Culture culture) {
  if (voters < 2) throw BadDimension("needs at least 2 voters");
  if (voters > 7) throw TooLarge("exact enumeration capped at 7 voters");
  const auto& orders = detail::culture_orders(culture);
  const std::uint64_t k = orders.size();
  const std::uint64_t total = detail::pow_u64(k, voters);

  std::uint64_t cycles = 0;
  std::vector<int> pick(voters, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int v = voters - 1; v >= 0; --v) {
      pick[v] = static_cast<int>(c % k);
      c /= k;
    }
    if (detail::majority_cycles(voters, [&](int v) -> const PreferenceRelation& {
          return orders[pick[v]];
        }))
      ++cycles;
  }
  return {cycles, total};
}

// Exhaustive enumeration of every unanimity-fixed FullTriples candidate at
// n = 2 that satisfies unrestricted domain, by depth-first search over table
// entries with forward checking: a partial assignment is abandoned as soon
// as some profile is forced to aggregate to a cycle.
struct PrunedSearchResult {
  std::vector<IiaSwf> ud_satisfying;
  std::uint64_t nodes_visited = 0;
};

inline PrunedSearchResult exhaustive_ud_satisfying_full_triples(int n) {
  if (n != 2) throw TooLarge("pruned full-triples search supports n = 2");
  constexpr int kInputs = 9;    // 3^2 rows
  constexpr int kVars = 3 * kInputs;

  // Profiles as row-rank triples.
  const ProfileSpace space(n);
  struct Constraint { int var[3]; };
  std::vector<Constraint> constraints;
  constraints.reserve(space.size());
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Profile m = space.at(rank);
    Constraint c{};
    for (int j = 0; j < 3; ++j)
      c.var[j] = j * kInputs + static_cast<int>(m.row(j).rank());
    constraints.push_back(c);
  }
  // constraints touching each variable
  std::array<std::vector<int>, kVars> touching;
  for (int ci = 0; ci < static_cast<int>(constraints.size()); ++ci)
    for (int j = 0; j < 3; ++j) touching[constraints[ci].var[j]].push_back(ci);

  bool cycle3[3][3][3];
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        cycle3[x][y][z] = classify(PreferenceRelation{static_cast<Ternary>(x),
                                                      static_cast<Ternary>(y),
                                                      static_cast<Ternary>(z)})
                              .cycle();

  std::array<int, kVars> value{};
  value.fill(-1);
  for (int j = 0; j < 3; ++j) {
    value[j * kInputs + 0] = 0;            // unanimity on the all-zero row
    value[j * kInputs + kInputs - 1] = 2;  // and on the all-one row
  }

  PrunedSearchResult result;

  // Variable order: free entries component-major. A constraint is checked as
  // soon as its last variable is assigned.
  std::vector<int> order;
  for (int v = 0; v < kVars; ++v)
    if (value[v] < 0) order.push_back(v);

  // A fresh assignment is rejected when it completes a cycling profile, or
  // when a profile with one entry left open has no non-cycling completion.
  const auto violates = [&](int var) {
    for (int ci : touching[var]) {
      const auto& c = constraints[ci];
      int vals[3];
      int missing = -1;
      bool overdetermined = false;
      for (int j = 0; j < 3; ++j) {
        vals[j] = value[c.var[j]];
        if (vals[j] < 0) {
          if (missing >= 0) {
            overdetermined = true;
            break;
          }
          missing = j;
        }
      }
      if (overdetermined) continue;
      if (missing < 0) {
        if (cycle3[vals[0]][vals[1]][vals[2]]) return true;
        continue;
      }
      bool any_ok = false;
      for (int cand = 0; cand < 3 && !any_ok; ++cand) {
        vals[missing] = cand;
        any_ok = !cycle3[vals[0]][vals[1]][vals[2]];
      }
      if (!any_ok) return true;
    }
    return false;
  };

  const auto emit = [&] {
    std::array<std::vector<Ternary>, 3> tables;
    for (int j = 0; j < 3; ++j) {
      tables[j].resize(kInputs);
      for (int q = 0; q < kInputs; ++q)
        tables[j][q] = static_cast<Ternary>(value[j * kInputs + q]);
    }
    result.ud_satisfying.emplace_back(
        PairwiseComparisonFunction(n, tables[0]),
        PairwiseComparisonFunction(n, tables[1]),
        PairwiseComparisonFunction(n, tables[2]));
  };

  // Iterative DFS over the free variables.
  const int depth_max = static_cast<int>(order.size());
  int depth = 0;
  std::vector<int> chosen(depth_max, -1);
  while (depth >= 0) {
    if (depth == depth_max) {
      emit();
      --depth;
      continue;
    }
    const int var = order[depth];
    int next = chosen[depth] + 1;
    if (next >= 3) {
      chosen[depth] = -1;
      value[var] = -1;
      --depth;
      continue;
    }
    chosen[depth] = next;
    value[var] = next;
    ++result.nodes_visited;
    if (!violates(var)) ++depth;
  }
  return result;
}

}  // namespace arrovian
