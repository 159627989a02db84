#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "arrovian/io.hpp"
#include "arrovian/search.hpp"
#include "arrovian/witness.hpp"

using namespace arrovian;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout (stderr discarded).
CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string(ARROVIAN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

Profile table2_profile() {
  return Profile::from_columns({PreferenceRelation::from_symbols("001"),
                                PreferenceRelation::from_symbols("100"),
                                PreferenceRelation::from_symbols("010")});
}

}  // namespace

TEST_CASE("profile text round-trip", "[io]") {
  const auto m = table2_profile();
  const std::string text = write_profile(m);
  CHECK(text == "profile A=3 N=3\n0 1 0\n0 0 1\n1 0 0\n");
  CHECK(read_profile_text(text).profile == m);
}

TEST_CASE("profile parser handles comments and trailers", "[io]") {
  const auto doc = read_profile_text(
      "# Condorcet configuration\n"
      "profile A=3 N=3\n"
      "0 1 0  # first pair\n"
      "\n"
      "0 0 1\n"
      "1 0 0\n"
      "aggregate: 000\n"
      "provenance: exhaustive-search\n");
  CHECK(doc.profile == table2_profile());
  CHECK(doc.aggregate == PreferenceRelation::from_symbols("000"));
  CHECK(doc.provenance == "exhaustive-search");
}

TEST_CASE("profile parse errors carry line numbers", "[io]") {
  try {
    read_profile_text("profile A=3 N=2\n0 0\nx 0\n1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(read_profile_text("profile A=4 N=2\n"), UnsupportedAlternativeCount);
  CHECK_THROWS_AS(read_profile_text("profile A=3 N=2\n0 0 0\n0 0\n1 1\n"), ParseError);
  CHECK_THROWS_AS(read_profile_text(""), ParseError);
  // a cycle column is rejected by profile validation
  CHECK_THROWS_AS(read_profile_text("profile A=3 N=2\n0 0\n0 0\n0 0\n"), CycleColumn);
}

TEST_CASE("witness documents round-trip", "[io]") {
  const auto w = pairwise_majority(3);
  const auto witness = arrow_witness(w);
  const auto doc = read_profile_text(write_witness(witness));
  CHECK(doc.profile == witness.profile);
  CHECK(doc.aggregate == witness.aggregate);
  CHECK(provenance_from_name(*doc.provenance) == witness.provenance);
}

TEST_CASE("swf text round-trip", "[io]") {
  for (const auto& w : {pairwise_majority(2), dictator(2, 2),
                        hierarchical_dictator({2, 1}, 2), indifference_swf(2)}) {
    CHECK(read_swf_text(write_swf(w)) == w);
  }
}

TEST_CASE("swf builtin documents", "[io]") {
  CHECK(read_swf_text("swf N=3\nbuiltin majority\n") == pairwise_majority(3));
  CHECK(read_swf_text("swf N=2\nbuiltin dictator:2\n") == dictator(2, 2));
  CHECK(read_swf_text("swf N=2\nbuiltin hierarchical:2,1\n") ==
        hierarchical_dictator({2, 1}, 2));
  CHECK(read_swf_text("swf N=2\nbuiltin constant:0e1\n") ==
        constant_swf(PreferenceRelation::from_symbols("0e1"), 2));
  CHECK(read_swf_text("swf N=2\nbuiltin indifference\n") == indifference_swf(2));
  CHECK_THROWS_AS(read_swf_text("swf N=2\nbuiltin borda\n"), ParseError);
}

TEST_CASE("swf table errors name the offending tuple", "[io]") {
  std::string text = write_swf(pairwise_majority(2));

  // duplicate a row of component 1
  const auto duplicated = text.find("00 0");
  std::string dup_text = text;
  dup_text.insert(duplicated, "00 0\n");
  try {
    read_swf_text(dup_text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("00") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicated") != std::string::npos);
  }

  // drop a row
  const auto at = text.find("0e 0\n");
  REQUIRE(at != std::string::npos);
  std::string missing_text = text;
  missing_text.erase(at, 5);
  try {
    read_swf_text(missing_text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing") != std::string::npos);
    CHECK(std::string(e.what()).find("0e") != std::string::npos);
  }
}

TEST_CASE("builtin specs resolve", "[io]") {
  CHECK(load_swf("builtin:majority:3") == pairwise_majority(3));
  CHECK(load_swf("builtin:dictator:1:3") == dictator(1, 3));
  CHECK(load_swf("builtin:hierarchical:2,1:2") == hierarchical_dictator({2, 1}, 2));
  CHECK(load_swf("builtin:constant:001:2") ==
        constant_swf(PreferenceRelation::from_symbols("001"), 2));
  CHECK_THROWS_AS(load_swf("builtin:majority"), ParseError);
}

TEST_CASE("report rendering is stable", "[io]") {
  const auto rep = full_report(dictator(1, 3));
  const std::string text = render_report(rep, "builtin:dictator:1:3");
  CHECK(text.find("unanimity: holds\n") != std::string::npos);
  CHECK(text.find("non-dictatorship: fails\n") != std::string::npos);
  CHECK(text.find("unrestricted-domain: holds\n") != std::string::npos);
  CHECK(text.find("arrow-verdict.dictator: 1\n") != std::string::npos);
  CHECK(render_report(rep, "builtin:dictator:1:3") == text);
}

TEST_CASE("cli classify exit codes and output", "[cli]") {
  const auto literal = run_cli("classify 0e1");
  CHECK(literal.exit_code == 0);
  CHECK(literal.output.find("weak order: a1 < a2 ~ a3") != std::string::npos);
  CHECK(literal.output.find("strict: no") != std::string::npos);

  CHECK(run_cli("classify eee").output.find("weak order: a1 ~ a2 ~ a3") !=
        std::string::npos);
  CHECK(run_cli("classify 000").output.find("cycle: a1 < a2 < a3 < a1") !=
        std::string::npos);
  CHECK(run_cli("classify 0x1").exit_code == 2);
  CHECK(run_cli("classify /nonexistent/profile.txt").exit_code == 2);
}

TEST_CASE("cli classify reads profile files", "[cli]") {
  const std::string path = "cli_profile_fixture.txt";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f);
    const std::string text = write_profile(table2_profile());
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const auto result = run_cli("classify " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("profile: A=3 N=3") != std::string::npos);
  CHECK(result.output.find("column 1 (001): weak order: a1 < a2 < a3 [strict]") !=
        std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli check verdicts drive the exit code", "[cli]") {
  const auto majority = run_cli("check builtin:majority:3 --all");
  CHECK(majority.exit_code == 1);  // unrestricted domain fails
  CHECK(majority.output.find("unrestricted-domain: fails") != std::string::npos);
  CHECK(majority.output.find("unanimity: holds") != std::string::npos);
  CHECK(majority.output.find("arrow-verdict.dictator: none") != std::string::npos);

  CHECK(run_cli("check builtin:dictator:1:3 --axiom unanimity").exit_code == 0);
  CHECK(run_cli("check builtin:majority:3 --axiom unrestricted-domain").exit_code == 1);
  CHECK(run_cli("check builtin:majority:3 --axiom nonsense").exit_code == 2);

  const auto json = run_cli("check builtin:majority:3 --all --json");
  CHECK(json.output.find("\"unanimity\"") != std::string::npos);
  CHECK(json.output.find("\"holds\": true") != std::string::npos);
}

TEST_CASE("cli witness writes re-validating documents", "[cli]") {
  const auto arrow = run_cli("witness builtin:majority:3 --theorem arrow");
  CHECK(arrow.exit_code == 0);
  const auto doc = read_profile_text(arrow.output);
  CHECK(pairwise_majority(3).apply(doc.profile) == *doc.aggregate);
  CHECK(classify(*doc.aggregate).cycle());

  CHECK(run_cli("witness builtin:dictator:1:3 --theorem arrow").exit_code == 1);
  CHECK(run_cli("witness builtin:majority:3 --theorem strictness")
            .output.find("not-applicable") != std::string::npos);

  const auto pair = run_cli("witness builtin:majority:3 --theorem contradictory-pair");
  CHECK(pair.exit_code == 0);
  const auto split = pair.output.find("\n\n");
  REQUIRE(split != std::string::npos);
  const auto doc_m = read_profile_text(pair.output.substr(0, split + 1));
  const auto doc_p = read_profile_text(pair.output.substr(split + 2));
  CHECK(*doc_m.aggregate == PreferenceRelation::from_symbols("111"));
  CHECK(*doc_p.aggregate == PreferenceRelation::from_symbols("000"));
  CHECK(contradicts(doc_m.profile, doc_p.profile));
}

TEST_CASE("cli enumerate and simulate argument contract", "[cli]") {
  CHECK(run_cli("enumerate --individuals 9").exit_code == 2);
  CHECK(run_cli("enumerate --individuals 2 --mode full --trials 100").exit_code == 2);
  CHECK(run_cli("simulate --voters 0 --seed 1").exit_code == 2);
  CHECK(run_cli("simulate --voters 3").exit_code == 2);
  CHECK(run_cli("totally-unknown-subcommand").exit_code == 2);
  CHECK(run_cli("classify 0e1 --bogus-flag").exit_code == 2);

  const auto sim = run_cli("simulate --voters 3 --trials 20000 --seed 42");
  CHECK(sim.exit_code == 0);
  CHECK(sim.output.find("culture: strict") != std::string::npos);
  // identical invocations are byte-identical
  CHECK(run_cli("simulate --voters 3 --trials 20000 --seed 42").output == sim.output);
  // worker count does not change the report
  const auto sim4 = run_cli("simulate --voters 3 --trials 20000 --seed 42 --workers 4");
  CHECK(sim4.output == sim.output);
}

TEST_CASE("cli out files round-trip", "[cli]") {
  const std::string path = "cli_witness_fixture.txt";
  const auto result =
      run_cli("--out " + path + " witness builtin:majority:3 --theorem arrow");
  CHECK(result.exit_code == 0);
  const auto doc = read_profile_file(path);
  CHECK(pairwise_majority(3).apply(doc.profile) == *doc.aggregate);
  std::remove(path.c_str());
}
