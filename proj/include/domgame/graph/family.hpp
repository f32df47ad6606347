#pragma once

#include <string>
#include <variant>
#include <vector>

#include "domgame/graph/colored_graph.hpp"

namespace domgame {

struct FamilySpec;

struct CompleteSpec {
  std::vector<Color> colors;
};

/// Complete bipartite K_{s,t}; part S is laid out before part T.
struct BipartiteSpec {
  std::vector<Color> part_s;
  std::vector<Color> part_t;
};

/// Star K_{1,n} given by the center color and per-color leaf counts.
struct StarSpec {
  Color center = Color::C;
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Complete split graph: clique K, independent set S, all K-S edges.
struct SplitSpec {
  std::vector<Color> clique;
  std::vector<Color> independent;
};

struct PathSpec {
  std::vector<Color> colors;
};

struct CycleSpec {
  std::vector<Color> colors;
};

struct UnionSpec {
  std::vector<FamilySpec> parts;
};

struct FamilySpec {
  std::variant<CompleteSpec, BipartiteSpec, StarSpec, SplitSpec, PathSpec, CycleSpec, UnionSpec>
      node;
};

/// Builds the graph of a family with a fixed, documented vertex order:
///   complete  v1..vn
///   kst       s1..ss then t1..tt
///   star      center "u", then A-leaves a1.., B-leaves b1.., C-leaves c1..
///   split     clique k1..kk before independent s1..ss
///   path      v1..vn along the path
///   cycle     v1..vn around the cycle
///   union     parts in order, labels prefixed "g1.", "g2.", ...
/// Throws GraphError when a size invariant is violated (cycle shorter than 3,
/// empty path, vertex cap). When `part_starts` is given, the starting vertex
/// index of every union part is recorded there (a single entry 0 otherwise).
ColoredGraph build(const FamilySpec& spec, std::vector<int>* part_starts = nullptr);

/// Spec rendered back in the DSL accepted by parse_family(). Color runs are
/// compressed (`AAB` prints as `A*2B`).
std::string print_family(const FamilySpec& spec);

}  // namespace domgame
