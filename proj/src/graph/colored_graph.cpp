#include "domgame/graph/colored_graph.hpp"

#include <bit>
#include <string>
#include <utility>
#include <vector>

namespace domgame {

char to_char(Color color) {
  switch (color) {
    case Color::A: return 'A';
    case Color::B: return 'B';
    case Color::C: return 'C';
  }
  return '?';
}

std::optional<Color> color_from_char(char ch) {
  switch (ch) {
    case 'A': return Color::A;
    case 'B': return Color::B;
    case 'C': return Color::C;
    default: return std::nullopt;
  }
}

int ColoredGraph::add_vertex(Color color, std::string label) {
  if (vertex_count() >= kMaxVertices) {
    throw GraphError("graph exceeds the " + std::to_string(kMaxVertices) +
                     " vertex representation limit");
  }
  const int index = vertex_count();
  if (label.empty()) label = std::to_string(index + 1);
  colors_.push_back(color);
  labels_.push_back(std::move(label));
  adjacency_.push_back(0);
  return index;
}

void ColoredGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw GraphError("edge endpoint out of range");
  }
  if (u == v) {
    throw GraphError("self-loop at vertex " + labels_[static_cast<std::size_t>(u)]);
  }
  if (has_edge(u, v)) {
    throw GraphError("duplicate edge " + labels_[static_cast<std::size_t>(u)] + " " +
                     labels_[static_cast<std::size_t>(v)]);
  }
  adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  ++edge_count_;
}

bool ColoredGraph::has_edge(int u, int v) const {
  return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t ColoredGraph::full_mask() const {
  const int n = vertex_count();
  if (n == 0) return 0;
  if (n == kMaxVertices) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

std::optional<int> ColoredGraph::find_vertex(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  }
  return std::nullopt;
}

ColoredGraph ColoredGraph::with_swapped_colors() const {
  ColoredGraph swapped = *this;
  for (Color& color : swapped.colors_) {
    if (color == Color::A) {
      color = Color::B;
    } else if (color == Color::B) {
      color = Color::A;
    }
  }
  return swapped;
}

int ColoredGraph::append_disjoint(const ColoredGraph& other, const std::string& label_prefix) {
  if (vertex_count() + other.vertex_count() > kMaxVertices) {
    throw GraphError("disjoint union exceeds the " + std::to_string(kMaxVertices) +
                     " vertex representation limit");
  }
  const int offset = vertex_count();
  for (int v = 0; v < other.vertex_count(); ++v) {
    add_vertex(other.color(v), label_prefix + other.label(v));
  }
  for (int u = 0; u < other.vertex_count(); ++u) {
    std::uint64_t mask = other.neighbors(u);
    while (mask != 0) {
      const int v = std::countr_zero(mask);
      mask &= mask - 1;
      if (u < v) add_edge(offset + u, offset + v);
    }
  }
  return offset;
}

std::vector<Component> components(const ColoredGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<Component> result;
  std::uint64_t seen = 0;
  for (int start = 0; start < n; ++start) {
    if ((seen >> start) & 1) continue;
    // Flood fill over the adjacency masks.
    std::uint64_t comp = std::uint64_t{1} << start;
    for (;;) {
      std::uint64_t grown = comp;
      std::uint64_t scan = comp;
      while (scan != 0) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        grown |= graph.neighbors(v);
      }
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;

    Component piece;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    std::uint64_t members = comp;
    while (members != 0) {
      const int v = std::countr_zero(members);
      members &= members - 1;
      local[static_cast<std::size_t>(v)] =
          piece.graph.add_vertex(graph.color(v), graph.label(v));
      piece.original_index.push_back(v);
    }
    members = comp;
    while (members != 0) {
      const int u = std::countr_zero(members);
      members &= members - 1;
      std::uint64_t mask = graph.neighbors(u) & comp;
      while (mask != 0) {
        const int v = std::countr_zero(mask);
        mask &= mask - 1;
        if (u < v) {
          piece.graph.add_edge(local[static_cast<std::size_t>(u)],
                               local[static_cast<std::size_t>(v)]);
        }
      }
    }
    result.push_back(std::move(piece));
  }
  return result;
}

std::string print_graph(const ColoredGraph& graph) {
  std::string out;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    out += "v ";
    out += graph.label(v);
    out += ' ';
    out += to_char(graph.color(v));
    out += '\n';
  }
  for (int u = 0; u < graph.vertex_count(); ++u) {
    std::uint64_t mask = graph.neighbors(u);
    while (mask != 0) {
      const int v = std::countr_zero(mask);
      mask &= mask - 1;
      if (u < v) {
        out += "e ";
        out += graph.label(u);
        out += ' ';
        out += graph.label(v);
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace domgame
