// domgame: exact values, winners, and outcomes for the domination game on
// vertex-colored graphs, plus the verification suites.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domgame/cgt/context.hpp"
#include "domgame/cgt/named.hpp"
#include "domgame/cgt/notation.hpp"
#include "domgame/engine/solver.hpp"
#include "domgame/forms/closed_forms.hpp"
#include "domgame/graph/colored_graph.hpp"
#include "domgame/graph/family.hpp"
#include "domgame/graph/parse.hpp"
#include "domgame/verify/suites.hpp"

namespace {

namespace cgt = domgame::cgt;

// Failed verification or a closed-form/oracle disagreement.
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

struct LoadedInput {
  std::string given;  // the argument as typed
  std::optional<domgame::FamilySpec> family;
  domgame::ColoredGraph graph;
};

// An input is a file path (contents are read), an inline edge list, or a
// family DSL string. Edge lists are recognized by their leading vertex line.
LoadedInput load_input(const std::string& arg) {
  LoadedInput input;
  input.given = arg;
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw std::invalid_argument("cannot read file '" + arg + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  const std::size_t head = text.find_first_not_of(" \t\r\n");
  const bool edge_list = head != std::string::npos && text[head] == 'v' &&
                         head + 1 < text.size() &&
                         (text[head + 1] == ' ' || text[head + 1] == '\t');
  if (edge_list) {
    input.graph = domgame::parse_graph(text);
  } else {
    domgame::FamilySpec spec = domgame::parse_family(text);
    input.graph = domgame::build(spec);
    input.family = std::move(spec);
  }
  return input;
}

std::uint64_t resolve_predominated(const domgame::ColoredGraph& graph,
                                   const std::vector<std::string>& labels) {
  std::uint64_t mask = 0;
  for (const std::string& entry : labels) {
    std::size_t start = 0;
    while (start <= entry.size()) {
      const std::size_t comma = entry.find(',', start);
      const std::string label =
          entry.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!label.empty()) {
        const auto vertex = graph.find_vertex(label);
        if (!vertex) throw std::invalid_argument("no vertex labeled '" + label + "'");
        mask |= std::uint64_t{1} << *vertex;
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return mask;
}

struct Report {
  std::string input;
  std::string value;
  std::string named;
  std::string outcome;
  std::string winner_first_alice;
  std::string winner_first_bob;
  std::optional<std::string> closed_form;
  bool oracle_checked = false;
  std::optional<bool> agree;
};

Report analyze(cgt::Context& ctx, const LoadedInput& input, std::uint64_t dominated,
               const domgame::SolveOptions& options) {
  Report report;
  report.input = input.given;

  // Closed forms describe whole families from the empty dominated set only.
  std::optional<domgame::forms::Result> closed;
  if (input.family && dominated == 0) {
    domgame::forms::Result result = domgame::forms::evaluate(ctx, *input.family);
    if (result.covered) closed = std::move(result);
  }

  cgt::GameId oracle = cgt::kNoGame;
  try {
    oracle = domgame::value_of_position(ctx, {input.graph, dominated}, options);
    report.oracle_checked = true;
  } catch (const domgame::SearchLimitError&) {
    if (!closed) throw;
  }

  if (closed) {
    report.closed_form = cgt::print_value(ctx, closed->value);
    if (report.oracle_checked) report.agree = ctx.eq(closed->value, oracle);
  }
  const cgt::GameId value = report.oracle_checked ? oracle : closed->value;
  report.value = cgt::print_value(ctx, value);
  report.named = cgt::describe(cgt::classify(ctx, value));
  const cgt::Outcome outcome = ctx.outcome(value);
  report.outcome = cgt::to_string(outcome);

  // The winner recursion is independent of the value machinery, so run it as
  // a cross-check whenever the whole graph is in bound; otherwise read the
  // winners off the outcome class.
  if (input.graph.vertex_count() <= options.max_vertices) {
    domgame::WinnerSearch search(input.graph, options);
    report.winner_first_alice = domgame::to_string(search.winner(dominated, domgame::Player::Alice));
    report.winner_first_bob = domgame::to_string(search.winner(dominated, domgame::Player::Bob));
  } else {
    const bool alice = outcome == cgt::Outcome::AliceAlways || outcome == cgt::Outcome::FirstPlayerWins;
    const bool bob = outcome == cgt::Outcome::BobAlways || outcome == cgt::Outcome::FirstPlayerWins;
    report.winner_first_alice = alice ? "Alice" : "Bob";
    report.winner_first_bob = bob ? "Bob" : "Alice";
  }
  return report;
}

nlohmann::json report_json(const Report& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["value"] = report.value;
  j["named"] = report.named;
  j["outcome"] = report.outcome;
  j["winner_first_alice"] = report.winner_first_alice;
  j["winner_first_bob"] = report.winner_first_bob;
  j["closed_form"] = report.closed_form ? nlohmann::json(*report.closed_form) : nullptr;
  j["oracle_checked"] = report.oracle_checked;
  j["agree"] = report.agree ? nlohmann::json(*report.agree) : nullptr;
  return j;
}

void print_report_text(const Report& report) {
  std::cout << "value: " << report.value << "\n";
  std::cout << "named: " << report.named << "\n";
  std::cout << "outcome: " << report.outcome << "\n";
  std::cout << "winner, Alice first: " << report.winner_first_alice << "\n";
  std::cout << "winner, Bob first: " << report.winner_first_bob << "\n";
  if (report.closed_form) std::cout << "closed form: " << *report.closed_form << "\n";
  std::cout << "oracle checked: " << (report.oracle_checked ? "yes" : "no") << "\n";
  if (report.agree) std::cout << "agree: " << (*report.agree ? "yes" : "no") << "\n";
}

int run_value(const std::string& arg, const std::vector<std::string>& predominate,
              const domgame::SolveOptions& options, bool json) {
  cgt::Context ctx;
  const LoadedInput input = load_input(arg);
  const std::uint64_t mask = resolve_predominated(input.graph, predominate);
  const Report report = analyze(ctx, input, mask, options);
  if (json) {
    std::cout << report_json(report).dump(2) << "\n";
  } else {
    print_report_text(report);
  }
  return report.agree && !*report.agree ? kExitFailure : 0;
}

int run_winner(const std::string& arg, const std::string& first,
               const std::vector<std::string>& predominate, const domgame::SolveOptions& options,
               bool json) {
  cgt::Context ctx;
  const LoadedInput input = load_input(arg);
  const std::uint64_t mask = resolve_predominated(input.graph, predominate);
  const Report report = analyze(ctx, input, mask, options);
  const std::string winner =
      first == "bob" ? report.winner_first_bob : report.winner_first_alice;
  if (json) {
    nlohmann::json j;
    j["input"] = report.input;
    j["first"] = first == "bob" ? "Bob" : "Alice";
    j["winner"] = winner;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << winner << "\n";
  }
  return report.agree && !*report.agree ? kExitFailure : 0;
}

int run_outcome(const std::string& arg, const std::vector<std::string>& predominate,
                const domgame::SolveOptions& options, bool json) {
  cgt::Context ctx;
  const LoadedInput input = load_input(arg);
  const std::uint64_t mask = resolve_predominated(input.graph, predominate);
  const Report report = analyze(ctx, input, mask, options);
  if (json) {
    nlohmann::json j;
    j["input"] = report.input;
    j["outcome"] = report.outcome;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.outcome << "\n";
  }
  return report.agree && !*report.agree ? kExitFailure : 0;
}

int run_sum(const std::vector<std::string>& args, const domgame::SolveOptions& options,
            bool json) {
  cgt::Context ctx;
  std::vector<std::string> parts;
  cgt::GameId total = ctx.zero();
  for (const std::string& arg : args) {
    const LoadedInput input = load_input(arg);
    cgt::GameId value = cgt::kNoGame;
    if (input.family) {
      const domgame::forms::Result closed = domgame::forms::evaluate(ctx, *input.family);
      if (closed.covered) value = closed.value;
    }
    if (value == cgt::kNoGame) value = domgame::value_of_graph(ctx, input.graph, options);
    parts.push_back(cgt::print_value(ctx, value));
    total = ctx.add(total, value);
  }
  const std::string named = cgt::describe(cgt::classify(ctx, total));
  const char* outcome = cgt::to_string(ctx.outcome(total));
  if (json) {
    nlohmann::json j;
    j["inputs"] = args;
    j["components"] = parts;
    j["value"] = cgt::print_value(ctx, total);
    j["named"] = named;
    j["outcome"] = outcome;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::cout << "component " << (i + 1) << ": " << parts[i] << "\n";
    }
    std::cout << "sum: " << cgt::print_value(ctx, total) << "\n";
    std::cout << "named: " << named << "\n";
    std::cout << "outcome: " << outcome << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const domgame::verify::SuiteOptions& options,
               bool json) {
  std::vector<domgame::verify::SuiteResult> results;
  if (suite.empty()) {
    results = domgame::verify::run_all(options);
  } else {
    auto result = domgame::verify::run_suite(suite, options);
    if (!result) {
      std::string names;
      for (const std::string& name : domgame::verify::suite_names()) {
        names += names.empty() ? name : ", " + name;
      }
      throw std::invalid_argument("unknown suite '" + suite + "' (available: " + names + ")");
    }
    results.push_back(std::move(*result));
  }
  bool all_passed = true;
  for (const auto& r : results) all_passed &= r.passed();
  if (json) {
    nlohmann::json j;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json s;
      s["number"] = r.number;
      s["name"] = r.name;
      s["cases"] = r.cases;
      s["failures"] = r.failures;
      s["passed"] = r.passed();
      s["messages"] = r.messages;
      j["suites"].push_back(std::move(s));
    }
    j["passed"] = all_passed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.passed()) {
        std::cout << "criterion " << r.number << " " << r.name << ": PASS (" << r.cases
                  << " cases)\n";
      } else {
        std::cout << "criterion " << r.number << " " << r.name << ": FAIL (" << r.failures
                  << " of " << r.cases << " cases failed)\n";
        for (const std::string& message : r.messages) std::cout << "  " << message << "\n";
      }
    }
  }
  return all_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the domination game on vertex-colored graphs"};
  app.require_subcommand(1);

  std::string input_arg;
  std::vector<std::string> sum_args;
  std::vector<std::string> predominate;
  std::string format = "text";
  std::string first = "alice";
  domgame::SolveOptions solve;
  const auto format_check = CLI::IsMember({"text", "json"});

  CLI::App* value_cmd = app.add_subcommand(
      "value", "Print the game value, its family, outcome, and winners");
  value_cmd->add_option("input", input_arg, "File path, edge list, or family DSL")->required();
  value_cmd->add_option("--predominate", predominate,
                        "Vertex labels (comma separated) dominated before play starts");
  value_cmd->add_option("--max-vertices", solve.max_vertices, "Exact-solve vertex bound");
  value_cmd->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* winner_cmd = app.add_subcommand("winner", "Print who wins under optimal play");
  winner_cmd->add_option("input", input_arg, "File path, edge list, or family DSL")->required();
  winner_cmd->add_option("--first", first, "Who moves first: alice or bob")
      ->check(CLI::IsMember({"alice", "bob"}));
  winner_cmd->add_option("--predominate", predominate,
                         "Vertex labels (comma separated) dominated before play starts");
  winner_cmd->add_option("--max-vertices", solve.max_vertices, "Exact-solve vertex bound");
  winner_cmd->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* outcome_cmd = app.add_subcommand("outcome", "Print the four-way outcome class");
  outcome_cmd->add_option("input", input_arg, "File path, edge list, or family DSL")->required();
  outcome_cmd->add_option("--predominate", predominate,
                          "Vertex labels (comma separated) dominated before play starts");
  outcome_cmd->add_option("--max-vertices", solve.max_vertices, "Exact-solve vertex bound");
  outcome_cmd->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* sum_cmd =
      app.add_subcommand("sum", "Evaluate several positions and their disjunctive sum");
  sum_cmd->add_option("inputs", sum_args, "File paths, edge lists, or family DSL strings")
      ->required();
  sum_cmd->add_option("--max-vertices", solve.max_vertices, "Exact-solve vertex bound");
  sum_cmd->add_option("--format", format, "text or json")->check(format_check);

  std::string suite;
  domgame::verify::SuiteOptions verify_options;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("suite", suite, "Suite name (default: all eight)");
  verify_cmd->add_option("--law-cases", verify_options.law_cases,
                         "Random positions for the algebraic-law suite");
  verify_cmd->add_option("--forest-cases", verify_options.forest_cases,
                         "Random star forests for the forest suite");
  verify_cmd->add_option("--star-budget", verify_options.star_leaf_budget,
                         "Leaf budget for the exhaustive star suite");
  verify_cmd->add_option("--seed", verify_options.seed, "Random seed");
  verify_cmd->add_option("--format", format, "text or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool json = format == "json";
  try {
    if (*value_cmd) return run_value(input_arg, predominate, solve, json);
    if (*winner_cmd) return run_winner(input_arg, first, predominate, solve, json);
    if (*outcome_cmd) return run_outcome(input_arg, predominate, solve, json);
    if (*sum_cmd) return run_sum(sum_args, solve, json);
    if (*verify_cmd) return run_verify(suite, verify_options, json);
  } catch (const domgame::SearchLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const domgame::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const domgame::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
