#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "domgame/cgt/context.hpp"
#include "domgame/graph/colored_graph.hpp"

namespace domgame {

enum class Player { Alice, Bob };

const char* to_string(Player player);
Player opponent(Player player);
/// Alice selects colors A and C, Bob selects B and C.
bool can_select(Player player, Color color);

/// A game state: the fixed colored graph plus the set of dominated vertices.
/// The position is terminal exactly when every vertex is dominated.
struct Position {
  ColoredGraph graph;
  std::uint64_t dominated = 0;
};

/// The requested solve is over the configured vertex bound.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  // Exact solves memoize on the dominated bitset, so 2^n states; 22 vertices
  // is the point where that stops being desk scale.
  int max_vertices = 22;
};

/// Vertices `who` may select right now: color allowed and the closed
/// neighborhood still contains an undominated vertex.
std::uint64_t playable_vertices(const Position& position, Player who);

/// Selects `vertex`, dominating its closed neighborhood. Throws
/// std::invalid_argument when the vertex dominates nothing new (contract
/// violation); color legality is the caller's lookup via playable_vertices.
Position apply_move(const Position& position, int vertex);

/// Exact game values for every dominated-set state of one graph, memoized on
/// the dominated bitset. Owns its memo; values live in the supplied context.
class Solver {
 public:
  Solver(cgt::Context& ctx, ColoredGraph graph, SolveOptions options = {});

  cgt::GameId value(std::uint64_t dominated = 0);
  std::size_t state_count() const { return memo_.size(); }

 private:
  cgt::GameId value_rec(std::uint64_t dominated);

  cgt::Context& ctx_;
  ColoredGraph graph_;
  std::unordered_map<std::uint64_t, cgt::GameId> memo_;
};

/// Win/loss recursion on (dominated set, player to move). Independent of the
/// value machinery: no Context, plain boolean minimax. The player unable to
/// move loses.
class WinnerSearch {
 public:
  explicit WinnerSearch(ColoredGraph graph, SolveOptions options = {});

  Player winner(std::uint64_t dominated, Player first);
  bool first_player_wins(std::uint64_t dominated, Player first);

 private:
  bool to_move_wins(std::uint64_t dominated, Player to_move);

  ColoredGraph graph_;
  // Two computed/result bit pairs per state, one per player to move.
  std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

cgt::GameId game_value(cgt::Context& ctx, const Position& position, SolveOptions options = {});
Player winner(const Position& position, Player first, SolveOptions options = {});

/// Value of a whole graph from the empty dominated set: the kernel sum of the
/// component values, each component solved on its own.
cgt::GameId value_of_graph(cgt::Context& ctx, const ColoredGraph& graph,
                           SolveOptions options = {});
/// Same component decomposition for an arbitrary starting dominated set.
cgt::GameId value_of_position(cgt::Context& ctx, const Position& position,
                              SolveOptions options = {});

}  // namespace domgame
