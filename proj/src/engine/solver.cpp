#include "domgame/engine/solver.hpp"

#include <bit>
#include <cassert>
#include <utility>
#include <vector>

namespace domgame {
namespace {

void check_bound(const ColoredGraph& graph, const SolveOptions& options) {
  if (graph.vertex_count() > options.max_vertices) {
    throw SearchLimitError("graph has " + std::to_string(graph.vertex_count()) +
                           " vertices, over the exact-solve bound of " +
                           std::to_string(options.max_vertices) +
                           " (raise --max-vertices to override)");
  }
}

}  // namespace

const char* to_string(Player player) { return player == Player::Alice ? "Alice" : "Bob"; }

Player opponent(Player player) {
  return player == Player::Alice ? Player::Bob : Player::Alice;
}

bool can_select(Player player, Color color) {
  if (color == Color::C) return true;
  return player == Player::Alice ? color == Color::A : color == Color::B;
}

std::uint64_t playable_vertices(const Position& position, Player who) {
  const std::uint64_t undominated = position.graph.full_mask() & ~position.dominated;
  std::uint64_t result = 0;
  for (int v = 0; v < position.graph.vertex_count(); ++v) {
    if (!can_select(who, position.graph.color(v))) continue;
    if (position.graph.closed_neighborhood(v) & undominated) {
      result |= std::uint64_t{1} << v;
    }
  }
  return result;
}

Position apply_move(const Position& position, int vertex) {
  if (vertex < 0 || vertex >= position.graph.vertex_count()) {
    throw std::invalid_argument("vertex index out of range");
  }
  const std::uint64_t closed = position.graph.closed_neighborhood(vertex);
  if ((closed & position.graph.full_mask() & ~position.dominated) == 0) {
    throw std::invalid_argument("vertex " + position.graph.label(vertex) +
                                " dominates nothing new");
  }
  Position next{position.graph, position.dominated | closed};
  assert(next.dominated != position.dominated);
  return next;
}

Solver::Solver(cgt::Context& ctx, ColoredGraph graph, SolveOptions options)
    : ctx_(ctx), graph_(std::move(graph)) {
  check_bound(graph_, options);
}

cgt::GameId Solver::value(std::uint64_t dominated) {
  return value_rec(dominated & graph_.full_mask());
}

cgt::GameId Solver::value_rec(std::uint64_t dominated) {
  if (const auto it = memo_.find(dominated); it != memo_.end()) return it->second;
  const std::uint64_t undominated = graph_.full_mask() & ~dominated;
  std::vector<cgt::GameId> left;
  std::vector<cgt::GameId> right;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const std::uint64_t closed = graph_.closed_neighborhood(v);
    if ((closed & undominated) == 0) continue;
    const cgt::GameId child = value_rec(dominated | closed);
    const Color color = graph_.color(v);
    if (color != Color::B) left.push_back(child);
    if (color != Color::A) right.push_back(child);
  }
  const cgt::GameId result = ctx_.make(std::move(left), std::move(right));
  memo_.emplace(dominated, result);
  return result;
}

WinnerSearch::WinnerSearch(ColoredGraph graph, SolveOptions options)
    : graph_(std::move(graph)) {
  check_bound(graph_, options);
}

Player WinnerSearch::winner(std::uint64_t dominated, Player first) {
  return first_player_wins(dominated, first) ? first : opponent(first);
}

bool WinnerSearch::first_player_wins(std::uint64_t dominated, Player first) {
  return to_move_wins(dominated & graph_.full_mask(), first);
}

bool WinnerSearch::to_move_wins(std::uint64_t dominated, Player to_move) {
  const std::uint8_t computed_bit = to_move == Player::Alice ? 0x1 : 0x4;
  const std::uint8_t win_bit = to_move == Player::Alice ? 0x2 : 0x8;
  std::uint8_t& entry = memo_[dominated];
  if (entry & computed_bit) return entry & win_bit;

  const std::uint64_t undominated = graph_.full_mask() & ~dominated;
  bool wins = false;
  for (int v = 0; v < graph_.vertex_count() && !wins; ++v) {
    if (!can_select(to_move, graph_.color(v))) continue;
    const std::uint64_t closed = graph_.closed_neighborhood(v);
    if ((closed & undominated) == 0) continue;
    wins = !to_move_wins(dominated | closed, opponent(to_move));
  }
  // The map may rehash during recursion; entry could dangle, so look up again.
  std::uint8_t& fresh = memo_[dominated];
  fresh |= computed_bit;
  if (wins) fresh |= win_bit;
  return wins;
}

cgt::GameId game_value(cgt::Context& ctx, const Position& position, SolveOptions options) {
  Solver solver(ctx, position.graph, options);
  return solver.value(position.dominated);
}

Player winner(const Position& position, Player first, SolveOptions options) {
  WinnerSearch search(position.graph, options);
  return search.winner(position.dominated, first);
}

cgt::GameId value_of_graph(cgt::Context& ctx, const ColoredGraph& graph,
                           SolveOptions options) {
  return value_of_position(ctx, Position{graph, 0}, options);
}

cgt::GameId value_of_position(cgt::Context& ctx, const Position& position,
                              SolveOptions options) {
  cgt::GameId sum = ctx.zero();
  for (const Component& piece : components(position.graph)) {
    std::uint64_t dominated = 0;
    for (std::size_t i = 0; i < piece.original_index.size(); ++i) {
      if ((position.dominated >> piece.original_index[i]) & 1) {
        dominated |= std::uint64_t{1} << i;
      }
    }
    Solver solver(ctx, piece.graph, options);
    sum = ctx.add(sum, solver.value(dominated));
  }
  return sum;
}

}  // namespace domgame
