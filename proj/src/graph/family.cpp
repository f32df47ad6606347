#include "domgame/graph/family.hpp"

#include <string>
#include <variant>
#include <vector>

namespace domgame {
namespace {

void build_into(ColoredGraph& g, const FamilySpec& spec, const std::string& prefix,
                std::vector<int>* part_starts);

void build_complete(ColoredGraph& g, const CompleteSpec& spec, const std::string& prefix) {
  const int base = g.vertex_count();
  for (std::size_t i = 0; i < spec.colors.size(); ++i) {
    g.add_vertex(spec.colors[i], prefix + "v" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < spec.colors.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.colors.size(); ++j) {
      g.add_edge(base + static_cast<int>(i), base + static_cast<int>(j));
    }
  }
}

void build_bipartite(ColoredGraph& g, const BipartiteSpec& spec, const std::string& prefix) {
  const int base = g.vertex_count();
  for (std::size_t i = 0; i < spec.part_s.size(); ++i) {
    g.add_vertex(spec.part_s[i], prefix + "s" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < spec.part_t.size(); ++j) {
    g.add_vertex(spec.part_t[j], prefix + "t" + std::to_string(j + 1));
  }
  const int t_base = base + static_cast<int>(spec.part_s.size());
  for (std::size_t i = 0; i < spec.part_s.size(); ++i) {
    for (std::size_t j = 0; j < spec.part_t.size(); ++j) {
      g.add_edge(base + static_cast<int>(i), t_base + static_cast<int>(j));
    }
  }
}

void build_star(ColoredGraph& g, const StarSpec& spec, const std::string& prefix) {
  if (spec.a < 0 || spec.b < 0 || spec.c < 0) {
    throw GraphError("star leaf counts must be nonnegative");
  }
  const int center = g.add_vertex(spec.center, prefix + "u");
  for (int i = 0; i < spec.a; ++i) {
    g.add_edge(center, g.add_vertex(Color::A, prefix + "a" + std::to_string(i + 1)));
  }
  for (int i = 0; i < spec.b; ++i) {
    g.add_edge(center, g.add_vertex(Color::B, prefix + "b" + std::to_string(i + 1)));
  }
  for (int i = 0; i < spec.c; ++i) {
    g.add_edge(center, g.add_vertex(Color::C, prefix + "c" + std::to_string(i + 1)));
  }
}

void build_split(ColoredGraph& g, const SplitSpec& spec, const std::string& prefix) {
  const int base = g.vertex_count();
  for (std::size_t i = 0; i < spec.clique.size(); ++i) {
    g.add_vertex(spec.clique[i], prefix + "k" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < spec.independent.size(); ++j) {
    g.add_vertex(spec.independent[j], prefix + "s" + std::to_string(j + 1));
  }
  const int s_base = base + static_cast<int>(spec.clique.size());
  for (std::size_t i = 0; i < spec.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.clique.size(); ++j) {
      g.add_edge(base + static_cast<int>(i), base + static_cast<int>(j));
    }
    for (std::size_t j = 0; j < spec.independent.size(); ++j) {
      g.add_edge(base + static_cast<int>(i), s_base + static_cast<int>(j));
    }
  }
}

void build_path(ColoredGraph& g, const PathSpec& spec, const std::string& prefix) {
  if (spec.colors.empty()) throw GraphError("path needs at least one vertex");
  const int base = g.vertex_count();
  for (std::size_t i = 0; i < spec.colors.size(); ++i) {
    g.add_vertex(spec.colors[i], prefix + "v" + std::to_string(i + 1));
  }
  for (std::size_t i = 1; i < spec.colors.size(); ++i) {
    g.add_edge(base + static_cast<int>(i) - 1, base + static_cast<int>(i));
  }
}

void build_cycle(ColoredGraph& g, const CycleSpec& spec, const std::string& prefix) {
  if (spec.colors.size() < 3) throw GraphError("cycle needs at least three vertices");
  const int base = g.vertex_count();
  for (std::size_t i = 0; i < spec.colors.size(); ++i) {
    g.add_vertex(spec.colors[i], prefix + "v" + std::to_string(i + 1));
  }
  for (std::size_t i = 1; i < spec.colors.size(); ++i) {
    g.add_edge(base + static_cast<int>(i) - 1, base + static_cast<int>(i));
  }
  g.add_edge(base + static_cast<int>(spec.colors.size()) - 1, base);
}

void build_into(ColoredGraph& g, const FamilySpec& spec, const std::string& prefix,
                std::vector<int>* part_starts) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, UnionSpec>) {
          int counter = 0;
          for (const FamilySpec& part : node.parts) {
            ++counter;
            if (part_starts != nullptr) part_starts->push_back(g.vertex_count());
            build_into(g, part, prefix + "g" + std::to_string(counter) + ".", nullptr);
          }
        } else {
          if (part_starts != nullptr) part_starts->push_back(g.vertex_count());
          if constexpr (std::is_same_v<T, CompleteSpec>) {
            build_complete(g, node, prefix);
          } else if constexpr (std::is_same_v<T, BipartiteSpec>) {
            build_bipartite(g, node, prefix);
          } else if constexpr (std::is_same_v<T, StarSpec>) {
            build_star(g, node, prefix);
          } else if constexpr (std::is_same_v<T, SplitSpec>) {
            build_split(g, node, prefix);
          } else if constexpr (std::is_same_v<T, PathSpec>) {
            build_path(g, node, prefix);
          } else if constexpr (std::is_same_v<T, CycleSpec>) {
            build_cycle(g, node, prefix);
          }
        }
      },
      spec.node);
}

void append_colors(std::string& out, const std::vector<Color>& colors) {
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    out += to_char(colors[i]);
    if (j - i > 1) {
      out += '*';
      out += std::to_string(j - i);
    }
    i = j;
  }
}

}  // namespace

ColoredGraph build(const FamilySpec& spec, std::vector<int>* part_starts) {
  ColoredGraph g;
  build_into(g, spec, "", part_starts);
  return g;
}

std::string print_family(const FamilySpec& spec) {
  std::string out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CompleteSpec>) {
          out += "complete(colors=";
          append_colors(out, node.colors);
          out += ')';
        } else if constexpr (std::is_same_v<T, BipartiteSpec>) {
          out += "kst(S=";
          append_colors(out, node.part_s);
          out += ",T=";
          append_colors(out, node.part_t);
          out += ')';
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          out += "star(center=";
          out += to_char(node.center);
          out += ",a=" + std::to_string(node.a);
          out += ",b=" + std::to_string(node.b);
          out += ",c=" + std::to_string(node.c);
          out += ')';
        } else if constexpr (std::is_same_v<T, SplitSpec>) {
          out += "split(K=";
          append_colors(out, node.clique);
          out += ",S=";
          append_colors(out, node.independent);
          out += ')';
        } else if constexpr (std::is_same_v<T, PathSpec>) {
          out += "path(n=" + std::to_string(node.colors.size()) + ",colors=";
          append_colors(out, node.colors);
          out += ')';
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          out += "cycle(n=" + std::to_string(node.colors.size()) + ",colors=";
          append_colors(out, node.colors);
          out += ')';
        } else if constexpr (std::is_same_v<T, UnionSpec>) {
          out += "union(";
          for (std::size_t i = 0; i < node.parts.size(); ++i) {
            if (i > 0) out += ", ";
            out += print_family(node.parts[i]);
          }
          out += ')';
        }
      },
      spec.node);
  return out;
}

}  // namespace domgame
