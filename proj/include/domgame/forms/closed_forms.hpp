#pragma once

#include <optional>
#include <span>
#include <string>

#include "domgame/cgt/context.hpp"
#include "domgame/cgt/named.hpp"
#include "domgame/graph/family.hpp"

namespace domgame::forms {

/// Why a coloring has no constant-time value here.
enum class Reason {
  // A bipartite coloring in the genuinely unsolved region.
  kOpenBipartite,
  // Parameters outside a solved range (callers fall back to the exact solver).
  kRange,
  // Paths and cycles: only winner facts are known, not values.
  kNoClosedForm,
  kUnknownColoring,
};

const char* reason_code(Reason reason);

struct Result {
  bool covered = false;
  cgt::GameId value = cgt::kNoGame;
  std::optional<cgt::NamedValue> named;
  Reason reason = Reason::kUnknownColoring;
  std::string detail;

  static Result value_of(cgt::Context& ctx, cgt::GameId game);
  static Result not_covered(Reason reason, std::string detail = "");
};

/// Complete graph: 1 all-A, -1 all-B, * mixed. Empty input is not covered.
Result complete_value(cgt::Context& ctx, std::span<const Color> colors);

/// Complete bipartite K_{s,t} with s,t >= 2 (smaller shapes route through the
/// complete/star evaluators in evaluate()). Covered colorings: both parts
/// all A (max(s,t)) or all B (-max); each part has a C or both an A and a B
/// (value 0); one part monochrome A against the other monochrome B (0).
/// Everything else is the open region.
Result bipartite_value(cgt::Context& ctx, std::span<const Color> part_s,
                       std::span<const Color> part_t);

/// Star K_{1,n} with a A-leaves, b B-leaves, c C-leaves. Covers every
/// coloring except n == 0 and the single-leaf star with an A or B center and
/// no C leaf.
Result star_value(cgt::Context& ctx, Color center, int a, int b, int c);

/// Complete split graph: the clique collapses to one center vertex (A if the
/// clique is all A, B if all B, else C) and the rest is the star evaluator.
Result split_value(cgt::Context& ctx, std::span<const Color> clique,
                   std::span<const Color> independent);

/// Routes a family spec to its evaluator. Degenerate bipartite shapes reroute
/// (empty part: isolated vertices; 1x1: an edge; 1xt: a star). Unions sum the
/// part values; one uncovered part makes the union uncovered. Paths and
/// cycles report kNoClosedForm.
Result evaluate(cgt::Context& ctx, const FamilySpec& spec);

}  // namespace domgame::forms
