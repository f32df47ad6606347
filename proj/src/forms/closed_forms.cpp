#include "domgame/forms/closed_forms.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace domgame::forms {
namespace {

using cgt::Context;
using cgt::GameId;

bool all_of_color(std::span<const Color> colors, Color color) {
  return std::all_of(colors.begin(), colors.end(),
                     [color](Color c) { return c == color; });
}

bool has_color(std::span<const Color> colors, Color color) {
  return std::find(colors.begin(), colors.end(), color) != colors.end();
}

GameId isolated_vertex_value(Context& ctx, Color color) {
  if (color == Color::A) return ctx.integer(1);
  if (color == Color::B) return ctx.integer(-1);
  return ctx.star();
}

// Value of the star with an A center, a A-leaves, b B-leaves and no C leaves,
// for a+b >= 2: a-b when Alice has the leaf majority, the dyadic fraction
// 1/2^(b-a+1) when 1 <= a <= b, and the up-multiple ladder when a == 0.
GameId mixed_leaf_star(Context& ctx, int a, int b) {
  if (b < a) return ctx.integer(a - b);
  if (a >= 1) return ctx.dyadic(1, static_cast<std::uint32_t>(b - a + 1));
  return ctx.up_multiple(static_cast<std::uint32_t>(b - 1), b % 2 == 1);
}

// Star with a C center and no C leaves, a+b >= 1: *2 on balanced leaves, * at
// gap one, and the tower ladder beyond.
GameId c_center_leaf_value(Context& ctx, int a, int b) {
  if (a == b) return ctx.nimber(2);
  if (a - b == 1 || b - a == 1) return ctx.star();
  if (a > b) return ctx.up_tower(static_cast<std::uint32_t>(a - b - 1), true);
  return ctx.down_tower(static_cast<std::uint32_t>(b - a - 1), true);
}

Result star_value_a_center(Context& ctx, int a, int b, int c) {
  if (c == 0) {
    if (a + b < 2) {
      return Result::not_covered(
          Reason::kRange, "star with an A or B center and a single leaf of color A or B");
    }
    return Result::value_of(ctx, mixed_leaf_star(ctx, a, b));
  }
  if (a == 0) {
    // All leaves selectable by Bob: the value depends only on the leaf count.
    const int n = b + c;
    return Result::value_of(
        ctx, ctx.up_multiple(static_cast<std::uint32_t>(n - 1), n % 2 == 1));
  }
  // Dropping the C leaves leaves the a/b star; an odd count contributes a star.
  // The stripped star value extends to a+b == 1 (a == 1 means both players
  // race for the same two vertices and Alice can always bank the +1).
  const GameId stripped =
      a + b == 1 ? ctx.integer(1) : mixed_leaf_star(ctx, a, b);
  return Result::value_of(ctx,
                          c % 2 == 0 ? stripped : ctx.add(stripped, ctx.star()));
}

Result star_value_c_center(Context& ctx, int a, int b, int c) {
  if (a == 0 && b == 0) {
    // Fully impartial star: nim value alternates with the leaf parity.
    return Result::value_of(ctx, c % 2 == 1 ? ctx.star() : ctx.nimber(2));
  }
  if (c % 2 == 0) {
    // An even count of C leaves cancels out.
    return Result::value_of(ctx, c_center_leaf_value(ctx, a, b));
  }
  if (a == b) return Result::value_of(ctx, ctx.star());
  if (a - b == 1 || b - a == 1) return Result::value_of(ctx, ctx.nimber(2));
  // Beyond gap one the odd-C star keeps the bracket shape: both players may
  // either end the game or fall back to the leafless-C tower value.
  const GameId tower = a > b
                           ? ctx.up_tower(static_cast<std::uint32_t>(a - b - 1), true)
                           : ctx.down_tower(static_cast<std::uint32_t>(b - a - 1), true);
  const GameId zero = ctx.zero();
  return Result::value_of(ctx, ctx.make({zero, tower}, {zero, tower}));
}

}  // namespace

const char* reason_code(Reason reason) {
  switch (reason) {
    case Reason::kOpenBipartite: return "OPEN_BIPARTITE";
    case Reason::kRange: return "RANGE";
    case Reason::kNoClosedForm: return "NO_CLOSED_FORM";
    case Reason::kUnknownColoring: return "UNKNOWN_COLORING";
  }
  return "UNKNOWN_COLORING";
}

Result Result::value_of(Context& ctx, GameId game) {
  Result result;
  result.covered = true;
  result.value = game;
  result.named = cgt::classify(ctx, game);
  return result;
}

Result Result::not_covered(Reason reason, std::string detail) {
  Result result;
  result.covered = false;
  result.reason = reason;
  result.detail = std::move(detail);
  return result;
}

Result complete_value(Context& ctx, std::span<const Color> colors) {
  if (colors.empty()) {
    return Result::not_covered(Reason::kRange, "empty complete graph");
  }
  if (all_of_color(colors, Color::A)) return Result::value_of(ctx, ctx.integer(1));
  if (all_of_color(colors, Color::B)) return Result::value_of(ctx, ctx.integer(-1));
  return Result::value_of(ctx, ctx.star());
}

Result bipartite_value(Context& ctx, std::span<const Color> part_s,
                       std::span<const Color> part_t) {
  const int s = static_cast<int>(part_s.size());
  const int t = static_cast<int>(part_t.size());
  if (s < 2 || t < 2) {
    return Result::not_covered(Reason::kRange,
                               "bipartite parts must both have at least 2 vertices here");
  }
  if (all_of_color(part_s, Color::A) && all_of_color(part_t, Color::A)) {
    return Result::value_of(ctx, ctx.integer(std::max(s, t)));
  }
  if (all_of_color(part_s, Color::B) && all_of_color(part_t, Color::B)) {
    return Result::value_of(ctx, ctx.integer(-std::max(s, t)));
  }
  const auto balanced = [](std::span<const Color> part) {
    return has_color(part, Color::C) ||
           (has_color(part, Color::A) && has_color(part, Color::B));
  };
  if (balanced(part_s) && balanced(part_t)) {
    return Result::value_of(ctx, ctx.zero());
  }
  if ((all_of_color(part_s, Color::A) && all_of_color(part_t, Color::B)) ||
      (all_of_color(part_s, Color::B) && all_of_color(part_t, Color::A))) {
    return Result::value_of(ctx, ctx.zero());
  }
  return Result::not_covered(Reason::kOpenBipartite,
                             "one part is monochrome A or B against a mixed part");
}

Result star_value(Context& ctx, Color center, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) {
    return Result::not_covered(Reason::kRange, "negative leaf count");
  }
  if (a + b + c == 0) {
    return Result::not_covered(Reason::kRange, "star without leaves");
  }
  switch (center) {
    case Color::A: return star_value_a_center(ctx, a, b, c);
    case Color::B: {
      // Swapping colors swaps the players, so negate the mirrored star.
      Result mirrored = star_value_a_center(ctx, b, a, c);
      if (!mirrored.covered) return mirrored;
      return Result::value_of(ctx, ctx.neg(mirrored.value));
    }
    case Color::C: return star_value_c_center(ctx, a, b, c);
  }
  return Result::not_covered(Reason::kUnknownColoring);
}

Result split_value(Context& ctx, std::span<const Color> clique,
                   std::span<const Color> independent) {
  if (clique.empty()) {
    return Result::not_covered(Reason::kRange, "split graph without a clique");
  }
  // Any clique move ends the game, so the clique acts as one center vertex.
  Color center = Color::C;
  if (all_of_color(clique, Color::A)) {
    center = Color::A;
  } else if (all_of_color(clique, Color::B)) {
    center = Color::B;
  }
  int a = 0;
  int b = 0;
  int c = 0;
  for (const Color color : independent) {
    if (color == Color::A) {
      ++a;
    } else if (color == Color::B) {
      ++b;
    } else {
      ++c;
    }
  }
  return star_value(ctx, center, a, b, c);
}

Result evaluate(Context& ctx, const FamilySpec& spec) {
  return std::visit(
      [&ctx](const auto& node) -> Result {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CompleteSpec>) {
          if (node.colors.empty()) return Result::value_of(ctx, ctx.zero());
          return complete_value(ctx, node.colors);
        } else if constexpr (std::is_same_v<T, BipartiteSpec>) {
          const auto& s = node.part_s;
          const auto& t = node.part_t;
          if (s.empty() || t.empty()) {
            // No edges: a sum of isolated vertices.
            GameId sum = ctx.zero();
            for (const Color color : s.empty() ? t : s) {
              sum = ctx.add(sum, isolated_vertex_value(ctx, color));
            }
            return Result::value_of(ctx, sum);
          }
          if (s.size() == 1 && t.size() == 1) {
            const Color edge[2] = {s[0], t[0]};
            return complete_value(ctx, edge);
          }
          if (s.size() == 1 || t.size() == 1) {
            const Color center = s.size() == 1 ? s[0] : t[0];
            const auto& leaves = s.size() == 1 ? t : s;
            int a = 0;
            int b = 0;
            int c = 0;
            for (const Color color : leaves) {
              if (color == Color::A) {
                ++a;
              } else if (color == Color::B) {
                ++b;
              } else {
                ++c;
              }
            }
            return star_value(ctx, center, a, b, c);
          }
          return bipartite_value(ctx, s, t);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return star_value(ctx, node.center, node.a, node.b, node.c);
        } else if constexpr (std::is_same_v<T, SplitSpec>) {
          if (node.clique.empty() && node.independent.empty()) {
            return Result::value_of(ctx, ctx.zero());
          }
          if (node.clique.empty()) {
            GameId sum = ctx.zero();
            for (const Color color : node.independent) {
              sum = ctx.add(sum, isolated_vertex_value(ctx, color));
            }
            return Result::value_of(ctx, sum);
          }
          return split_value(ctx, node.clique, node.independent);
        } else if constexpr (std::is_same_v<T, PathSpec> ||
                             std::is_same_v<T, CycleSpec>) {
          return Result::not_covered(Reason::kNoClosedForm,
                                     "only winner facts are known for paths and cycles");
        } else {
          static_assert(std::is_same_v<T, UnionSpec>);
          GameId sum = ctx.zero();
          int index = 0;
          for (const FamilySpec& part : node.parts) {
            ++index;
            Result piece = evaluate(ctx, part);
            if (!piece.covered) {
              piece.detail = "component " + std::to_string(index) +
                             (piece.detail.empty() ? "" : ": " + piece.detail);
              return piece;
            }
            sum = ctx.add(sum, piece.value);
          }
          return Result::value_of(ctx, sum);
        }
      },
      spec.node);
}

}  // namespace domgame::forms
