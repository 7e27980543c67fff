#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgs/automaton.hpp"
#include "lgs/error.hpp"
#include "lgs/oracle/oracle.hpp"
#include "lgs/report.hpp"
#include "lgs/verdict.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitReplayRejected = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lgs::Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lgs::LabelledGraph load_graph(const std::string& path) {
  try {
    return lgs::parse_graph(read_file(path));
  } catch (const lgs::ParseError& e) {
    throw lgs::Error(path + ": " + e.what());
  }
}

int verdict_exit(lgs::Verdict v) {
  switch (v) {
    case lgs::Verdict::kSimple:
    case lgs::Verdict::kNotSimple: return 0;
    case lgs::Verdict::kUnknown: return kExitUnknown;
    case lgs::Verdict::kNotApplicable: return kExitNotApplicable;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analyzer for finite labelled graphs and their labelled spaces"};
  app.require_subcommand(1);

  lgs::Limits limits;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap-states", limits.max_states, "Largest subset automaton to build")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap-family", limits.max_family, "Largest set family to materialize")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap-pairs", limits.max_pairs, "Most family pairs to search")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Decide the simplicity criteria and print a report");
  analyze->add_option("file", file, "Graph file")->required();
  add_common(analyze);

  std::string property;
  std::string replay;
  auto* check = app.add_subcommand("check", "Run one checker");
  check->add_option("property", property, "wlr | cofinal | strong-cofinal | disagreeable | accommodating | omega")
      ->required()
      ->check(CLI::IsMember({"wlr", "cofinal", "strong-cofinal", "disagreeable", "accommodating", "omega"}));
  check->add_option("file", file, "Graph file")->required();
  check->add_option("--replay", replay, "Re-verify the witnesses in this file instead of searching");
  add_common(check);

  auto* dot = app.add_subcommand("dot", "Print the subset automaton from all vertices in DOT");
  dot->add_option("file", file, "Graph file")->required();
  add_common(dot);

  lgs::oracle::SuiteConfig suite;
  bool verbose = false;
  auto* oracle = app.add_subcommand("oracle", "Compare every decider with its brute-force oracle on random graphs");
  oracle->add_option("--seed", suite.seed, "Random seed");
  oracle->add_option("--cases", suite.cases, "Number of random graphs");
  oracle->add_option("--max-vertices", suite.max_vertices, "Vertex bound")->check(CLI::PositiveNumber);
  oracle->add_option("--max-labels", suite.max_labels, "Label bound")->check(CLI::PositiveNumber);
  oracle->add_option("--depth", suite.depth, "Word and lasso length bound for the oracles");
  oracle->add_flag("-v,--verbose", verbose, "Log inconclusive cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors are ordinary errors.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      const auto g = load_graph(file);
      const auto report = lgs::simplicity_verdict(g, limits);
      if (format == "json")
        std::cout << lgs::analysis_json(g, report).dump(2) << "\n";
      else
        std::cout << lgs::analysis_text(g, report);
      return verdict_exit(report.verdict);
    }
    if (check->parsed()) {
      const auto g = load_graph(file);
      const auto prop = *lgs::parse_property(property);
      if (!replay.empty()) {
        const auto doc = lgs::Json::parse(read_file(replay));
        bool all = true;
        std::size_t seen = 0;
        for (const auto& w : lgs::witnesses_in(doc)) {
          const std::string kind = w.value("kind", "");
          const bool relevant = prop == lgs::Property::kWlr ? kind.starts_with("wlr:") : kind == property;
          if (!relevant) continue;
          ++seen;
          const auto outcome = lgs::replay_witness(g, w, limits);
          std::cout << (outcome.verified ? "verified: " : "rejected: ") << kind << ": " << outcome.message << "\n";
          all = all && outcome.verified;
        }
        if (seen == 0) throw lgs::Error("no " + property + " witness in '" + replay + "'");
        return all ? 0 : kExitReplayRejected;
      }
      const auto report = lgs::check_json(g, prop, limits);
      if (format == "json")
        std::cout << report.dump(2) << "\n";
      else
        std::cout << lgs::check_text(g, report);
      return 0;
    }
    if (dot->parsed()) {
      const auto g = load_graph(file);
      lgs::require_valid(g);
      const auto all = g.all_vertices();
      std::cout << lgs::SubsetAutomaton::build(g, std::span(&all, 1), limits.max_states).to_dot(g);
      return 0;
    }
    if (oracle->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = lgs::oracle::run_suite(suite);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (const auto& [name, t] : result.tallies)
        std::cout << name << ": " << t.match << " match, " << t.mismatch << " mismatch, " << t.inconclusive
                  << " inconclusive\n";
      if (verbose)
        for (const auto& line : result.inconclusive_log) std::cout << "inconclusive: " << line << "\n";
      for (const auto& m : result.mismatches)
        std::cout << "MISMATCH " << m.check << ": " << m.detail << "\n" << m.graph;
      std::cout << suite.cases << " graphs, seed " << suite.seed << ", " << secs << " s: "
                << (result.ok() ? "all match" : "mismatches found") << "\n";
      return result.ok() ? 0 : kExitError;
    }
  } catch (const lgs::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
