#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domgame::verify {

/// Bounds for the verification suites. The defaults are the documented
/// acceptance-scale settings; tests and the CLI may dial them down or up.
struct SuiteOptions {
  int star_leaf_budget = 7;       // stars: every (a,b,c) with a+b+c <= this
  int bipartite_max_part = 4;     // bipartite: part sizes 2..this
  int split_max_clique = 3;       // split: clique sizes 1..this
  int split_max_independent = 4;  // split: independent-set sizes 0..this
  int path_max = 12;              // paths/cycles up to this many vertices
  int law_cases = 500;            // random positions for the algebraic laws
  int law_max_vertices = 7;       // vertex cap for those positions
  int forest_cases = 100;         // random star forests
  int nimber_max = 8;             // nim addition checked for all m,n <= this
  std::uint64_t seed = 0x600d5eedULL;
  int search_bound = 22;          // exact-solver vertex bound
};

struct SuiteResult {
  int number = 0;
  std::string name;
  int cases = 0;
  int failures = 0;
  // First few failure descriptions, for diagnosis.
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
};

SuiteResult run_kernel_identities(const SuiteOptions& options = {});
SuiteResult run_star_exhaustive(const SuiteOptions& options = {});
SuiteResult run_bipartite(const SuiteOptions& options = {});
SuiteResult run_split(const SuiteOptions& options = {});
SuiteResult run_path_cycle_winners(const SuiteOptions& options = {});
SuiteResult run_algebraic_laws(const SuiteOptions& options = {});
SuiteResult run_star_forests(const SuiteOptions& options = {});
SuiteResult run_nimber_algebra(const SuiteOptions& options = {});

/// All eight suites in their numbered order.
std::vector<SuiteResult> run_all(const SuiteOptions& options = {});
/// One suite by name; nullopt if the name is unknown.
std::optional<SuiteResult> run_suite(std::string_view name, const SuiteOptions& options = {});
const std::vector<std::string>& suite_names();

}  // namespace domgame::verify
