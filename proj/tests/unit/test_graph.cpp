#include <string>
#include <vector>

#include "doctest.h"
#include "domgame/graph/colored_graph.hpp"
#include "domgame/graph/family.hpp"
#include "domgame/graph/parse.hpp"

using domgame::BipartiteSpec;
using domgame::Color;
using domgame::ColoredGraph;
using domgame::CompleteSpec;
using domgame::CycleSpec;
using domgame::FamilySpec;
using domgame::GraphError;
using domgame::ParseError;
using domgame::PathSpec;
using domgame::SplitSpec;
using domgame::StarSpec;
using domgame::UnionSpec;

namespace {

bool same_graph(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (a.color(v) != b.color(v)) return false;
    if (a.label(v) != b.label(v)) return false;
    if (a.neighbors(v) != b.neighbors(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family builders produce the documented shapes") {
  const ColoredGraph star = build(FamilySpec{StarSpec{Color::C, 0, 0, 2}});
  CHECK(star.vertex_count() == 3);
  CHECK(star.edge_count() == 2);
  CHECK(star.label(0) == "u");
  CHECK(star.label(1) == "c1");
  CHECK(star.color(1) == Color::C);
  CHECK(star.has_edge(0, 1));
  CHECK(star.has_edge(0, 2));
  CHECK_FALSE(star.has_edge(1, 2));

  const ColoredGraph split = build(
      FamilySpec{SplitSpec{{Color::A, Color::B}, {Color::C, Color::C, Color::C}}});
  CHECK(split.vertex_count() == 5);
  CHECK(split.edge_count() == 7);
  CHECK(split.label(0) == "k1");
  CHECK(split.label(2) == "s1");
  CHECK(split.has_edge(0, 1));
  for (int k = 0; k < 2; ++k) {
    for (int s = 2; s < 5; ++s) CHECK(split.has_edge(k, s));
  }
  CHECK_FALSE(split.has_edge(2, 3));

  const ColoredGraph kst = build(FamilySpec{
      BipartiteSpec{{Color::A, Color::A}, {Color::A, Color::A, Color::A}}});
  CHECK(kst.vertex_count() == 5);
  CHECK(kst.edge_count() == 6);
  CHECK(kst.label(0) == "s1");
  CHECK(kst.label(2) == "t1");
  CHECK_FALSE(kst.has_edge(0, 1));
  CHECK(kst.has_edge(0, 2));

  const ColoredGraph cycle =
      build(FamilySpec{CycleSpec{{Color::C, Color::C, Color::C}}});
  CHECK(cycle.edge_count() == 3);
  CHECK(cycle.has_edge(0, 2));

  const ColoredGraph one = build(FamilySpec{PathSpec{{Color::A}}});
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
}

TEST_CASE("family size invariants are enforced") {
  CHECK_THROWS_AS(build(FamilySpec{PathSpec{{}}}), GraphError);
  CHECK_THROWS_AS(build(FamilySpec{CycleSpec{{Color::C, Color::C}}}), GraphError);
  CHECK_THROWS_AS(
      build(FamilySpec{StarSpec{Color::A, 70, 0, 0}}), GraphError);
}

TEST_CASE("union builder re-indexes and prefixes parts") {
  UnionSpec u;
  u.parts.push_back(FamilySpec{StarSpec{Color::C, 2, 0, 0}});
  u.parts.push_back(FamilySpec{CompleteSpec{{Color::A, Color::B}}});
  std::vector<int> starts;
  const ColoredGraph g = build(FamilySpec{std::move(u)}, &starts);
  CHECK(g.vertex_count() == 5);
  CHECK(starts == std::vector<int>{0, 3});
  CHECK(g.label(0) == "g1.u");
  CHECK(g.label(3) == "g2.v1");
  CHECK_FALSE(g.has_edge(2, 3));

  const auto pieces = components(g);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].graph.vertex_count() == 3);
  CHECK(pieces[1].graph.vertex_count() == 2);
  CHECK(pieces[1].original_index == std::vector<int>{3, 4});
  CHECK(pieces[1].graph.label(0) == "g2.v1");
}

TEST_CASE("components of an empty or connected graph") {
  CHECK(components(ColoredGraph{}).empty());
  const ColoredGraph k2 = build(FamilySpec{CompleteSpec{{Color::A, Color::B}}});
  const auto pieces = components(k2);
  REQUIRE(pieces.size() == 1);
  CHECK(same_graph(pieces[0].graph, k2));
}

TEST_CASE("color swap exchanges A and B only") {
  ColoredGraph g;
  g.add_vertex(Color::A);
  g.add_vertex(Color::B);
  g.add_vertex(Color::C);
  const ColoredGraph swapped = g.with_swapped_colors();
  CHECK(swapped.color(0) == Color::B);
  CHECK(swapped.color(1) == Color::A);
  CHECK(swapped.color(2) == Color::C);
}

TEST_CASE("edge list parsing accepts the documented format") {
  const ColoredGraph g = domgame::parse_graph(
      "# a two vertex graph\n"
      "v 1 A\n"
      "v 2 B\n"
      "\n"
      "e 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.color(0) == Color::A);
  CHECK(g.color(1) == Color::B);
  CHECK(g.has_edge(0, 1));
  CHECK(g.label(0) == "1");
}

TEST_CASE("edge list parse errors carry the offending line") {
  const auto line_of = [](const char* text) {
    try {
      domgame::parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("v 1 A\ne 1 1") == 2);                 // self-loop
  CHECK(line_of("v 1 A\nv 1 B") == 2);                 // duplicate label
  CHECK(line_of("v 1 X") == 1);                        // unknown color
  CHECK(line_of("v 1 A\ne 1 2") == 2);                 // undeclared endpoint
  CHECK(line_of("v 1 A\nv 2 A\ne 1 2\ne 2 1") == 4);   // duplicate edge
  CHECK(line_of("v 1 A\nw 2 B") == 2);                 // unknown directive
  CHECK(line_of("v 1\nv 2 A") == 1);                   // malformed vertex line
}

TEST_CASE("printing a graph round-trips through the parser") {
  UnionSpec u;
  u.parts.push_back(FamilySpec{StarSpec{Color::A, 1, 2, 1}});
  u.parts.push_back(FamilySpec{CycleSpec{{Color::C, Color::B, Color::A, Color::C}}});
  const ColoredGraph g = build(FamilySpec{std::move(u)});
  CHECK(same_graph(domgame::parse_graph(print_graph(g)), g));
}

TEST_CASE("family DSL parsing") {
  const FamilySpec star = domgame::parse_family("star(center=A,a=1,b=3,c=0)");
  const auto& star_node = std::get<StarSpec>(star.node);
  CHECK(star_node.center == Color::A);
  CHECK(star_node.a == 1);
  CHECK(star_node.b == 3);
  CHECK(star_node.c == 0);

  const FamilySpec nested =
      domgame::parse_family("union(star(center=C,a=2,b=0,c=0), kst(S=AA,T=BC))");
  const auto& parts = std::get<UnionSpec>(nested.node).parts;
  REQUIRE(parts.size() == 2);
  CHECK(std::holds_alternative<StarSpec>(parts[0].node));
  const auto& kst_node = std::get<BipartiteSpec>(parts[1].node);
  CHECK(kst_node.part_s == std::vector<Color>{Color::A, Color::A});
  CHECK(kst_node.part_t == std::vector<Color>{Color::B, Color::C});

  const FamilySpec cycle = domgame::parse_family("cycle(n=7,colors=C*7)");
  CHECK(std::get<CycleSpec>(cycle.node).colors ==
        std::vector<Color>(7, Color::C));

  const FamilySpec mixed = domgame::parse_family("complete(colors=A*3BC*2)");
  CHECK(std::get<CompleteSpec>(mixed.node).colors ==
        std::vector<Color>{Color::A, Color::A, Color::A, Color::B, Color::C, Color::C});
}

TEST_CASE("family DSL rejects malformed input") {
  CHECK_THROWS_AS(domgame::parse_family("triangle(colors=AAA)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("path(n=3,colors=CC)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("cycle(n=2,colors=CC)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("star(center=D,a=0,b=0,c=1)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("star(a=0,b=0,c=1)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("complete(colors=AA) extra"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("complete(colors=A*9999999)"), ParseError);
  CHECK_THROWS_AS(domgame::parse_family("union(star(center=A,a=1,b=0,c=0)"), ParseError);
}

TEST_CASE("printing a family spec round-trips through the DSL parser") {
  UnionSpec u;
  u.parts.push_back(FamilySpec{StarSpec{Color::B, 0, 2, 3}});
  u.parts.push_back(FamilySpec{
      BipartiteSpec{{Color::A, Color::A, Color::A}, {Color::B, Color::C}}});
  u.parts.push_back(FamilySpec{PathSpec{{Color::C, Color::C, Color::C, Color::C}}});
  const FamilySpec spec{std::move(u)};
  const ColoredGraph rebuilt = build(domgame::parse_family(print_family(spec)));
  CHECK(same_graph(rebuilt, build(spec)));
}

TEST_CASE("vertex cap is enforced with a line number when parsing") {
  std::string text;
  for (int i = 0; i < 65; ++i) {
    text += "v x" + std::to_string(i) + " A\n";
  }
  try {
    domgame::parse_graph(text);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 65);
  }
}
