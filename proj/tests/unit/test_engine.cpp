#include <cstdint>

#include "doctest.h"
#include "domgame/cgt/context.hpp"
#include "domgame/engine/solver.hpp"
#include "domgame/graph/family.hpp"
#include "domgame/graph/parse.hpp"

using domgame::Color;
using domgame::ColoredGraph;
using domgame::FamilySpec;
using domgame::Player;
using domgame::Position;
using domgame::SearchLimitError;
using domgame::SolveOptions;
using domgame::StarSpec;
using domgame::cgt::Context;
using domgame::cgt::GameId;

namespace {

ColoredGraph single(Color color) {
  ColoredGraph g;
  g.add_vertex(color);
  return g;
}

}  // namespace

TEST_CASE("playable vertices obey colors and the domination rule") {
  const ColoredGraph star = build(FamilySpec{StarSpec{Color::C, 0, 0, 2}});
  Position p{star, 0};
  CHECK(domgame::playable_vertices(p, Player::Alice) == 0b111);
  CHECK(domgame::playable_vertices(p, Player::Bob) == 0b111);

  // Playing leaf c1 dominates the leaf and the center.
  p = apply_move(p, 1);
  CHECK(p.dominated == 0b011);
  CHECK(domgame::playable_vertices(p, Player::Alice) == 0b101);

  p = apply_move(p, 2);
  CHECK(p.dominated == star.full_mask());
  CHECK(domgame::playable_vertices(p, Player::Alice) == 0);
  CHECK(domgame::playable_vertices(p, Player::Bob) == 0);
  CHECK_THROWS_AS(apply_move(p, 0), std::invalid_argument);

  const ColoredGraph mixed = domgame::parse_graph("v 1 A\nv 2 B\ne 1 2");
  CHECK(domgame::playable_vertices(Position{mixed, 0}, Player::Alice) == 0b01);
  CHECK(domgame::playable_vertices(Position{mixed, 0}, Player::Bob) == 0b10);
}

TEST_CASE("single vertex values") {
  Context ctx;
  CHECK(game_value(ctx, Position{single(Color::A), 0}) == ctx.integer(1));
  CHECK(game_value(ctx, Position{single(Color::B), 0}) == ctx.integer(-1));
  CHECK(game_value(ctx, Position{single(Color::C), 0}) == ctx.star());
}

TEST_CASE("small star values match the known results") {
  Context ctx;
  const ColoredGraph impartial = build(FamilySpec{StarSpec{Color::C, 0, 0, 3}});
  CHECK(game_value(ctx, Position{impartial, 0}) == ctx.star());

  const ColoredGraph half = build(FamilySpec{StarSpec{Color::A, 1, 1, 0}});
  CHECK(game_value(ctx, Position{half, 0}) == ctx.dyadic(1, 1));
}

TEST_CASE("a pre-dominated part makes the half-open bipartite game an integer") {
  Context ctx;
  const ColoredGraph kst = build(domgame::parse_family("kst(S=AA,T=AAA)"));
  // Dominating part T up front leaves only S to cover; the value is |S|.
  std::uint64_t t_mask = 0;
  for (int v = 0; v < kst.vertex_count(); ++v) {
    if (kst.label(v)[0] == 't') t_mask |= std::uint64_t{1} << v;
  }
  CHECK(game_value(ctx, Position{kst, t_mask}) == ctx.integer(2));
  CHECK(game_value(ctx, Position{kst, 0}) == ctx.integer(3));
}

TEST_CASE("winner recursion matches the path and cycle facts") {
  const ColoredGraph p4 = build(domgame::parse_family("path(n=4,colors=C*4)"));
  CHECK(winner(Position{p4, 0}, Player::Alice) == Player::Bob);

  const ColoredGraph p5 = build(domgame::parse_family("path(n=5,colors=C*5)"));
  CHECK(winner(Position{p5, 0}, Player::Alice) == Player::Alice);

  const ColoredGraph c7 = build(domgame::parse_family("cycle(n=7,colors=C*7)"));
  CHECK(winner(Position{c7, 0}, Player::Alice) == Player::Alice);

  const ColoredGraph c8 = build(domgame::parse_family("cycle(n=8,colors=C*8)"));
  CHECK(winner(Position{c8, 0}, Player::Alice) == Player::Bob);
}

TEST_CASE("component sums equal whole-graph solves") {
  Context ctx;
  const ColoredGraph pair = build(
      domgame::parse_family("union(complete(colors=A), complete(colors=B))"));
  CHECK(value_of_graph(ctx, pair) == ctx.zero());

  const ColoredGraph stars = build(
      domgame::parse_family("union(star(center=C,a=0,b=0,c=1), star(center=C,a=0,b=0,c=1))"));
  CHECK(value_of_graph(ctx, stars) == ctx.zero());
  // The same answer without the component split.
  domgame::Solver whole(ctx, stars);
  CHECK(whole.value(0) == ctx.zero());

  // Predominated vertices are split along with their components.
  const ColoredGraph two = build(
      domgame::parse_family("union(complete(colors=AA), complete(colors=AA))"));
  const auto mask = std::uint64_t{0b0011};  // first K_2 fully dominated
  CHECK(value_of_position(ctx, Position{two, mask}) == ctx.integer(1));
}

TEST_CASE("winner and outcome agree on a mixed graph") {
  Context ctx;
  const ColoredGraph g = domgame::parse_graph(
      "v 1 A\nv 2 C\nv 3 B\nv 4 C\ne 1 2\ne 2 3\ne 3 4\ne 4 1");
  const GameId value = game_value(ctx, Position{g, 0});
  domgame::WinnerSearch search(g);
  const Player wa = search.winner(0, Player::Alice);
  const Player wb = search.winner(0, Player::Bob);
  const auto outcome = ctx.outcome(value);
  using domgame::cgt::Outcome;
  if (wa == Player::Alice && wb == Player::Bob) CHECK(outcome == Outcome::FirstPlayerWins);
  if (wa == Player::Alice && wb == Player::Alice) CHECK(outcome == Outcome::AliceAlways);
  if (wa == Player::Bob && wb == Player::Bob) CHECK(outcome == Outcome::BobAlways);
  if (wa == Player::Bob && wb == Player::Alice) CHECK(outcome == Outcome::SecondPlayerWins);
}

TEST_CASE("solves beyond the vertex bound are refused upfront") {
  Context ctx;
  const ColoredGraph p23 = build(domgame::parse_family("path(n=23,colors=C*23)"));
  CHECK_THROWS_AS(domgame::Solver(ctx, p23), SearchLimitError);
  CHECK_THROWS_AS(domgame::WinnerSearch{p23}, SearchLimitError);
  // An explicit higher bound lifts the refusal (winner search stays cheap).
  domgame::WinnerSearch search(p23, SolveOptions{.max_vertices = 23});
  CHECK(search.winner(0, Player::Alice) == Player::Alice);
}
