#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domgame {

/// Vertex color: A-vertices are selectable by Alice only, B by Bob only, C by
/// both players.
enum class Color : std::uint8_t { A, B, C };

char to_char(Color color);
std::optional<Color> color_from_char(char ch);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph with a color per vertex. Vertex indices are dense
/// 0..n-1; adjacency is kept as per-vertex bitmasks, which caps the size at 64
/// vertices (64 is already far beyond what any exact solve can visit).
class ColoredGraph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Returns the new vertex's index. An empty label defaults to the 1-based
  /// index in decimal. Labels are used for I/O and for --predominate lookups.
  int add_vertex(Color color, std::string label = "");
  /// Throws GraphError on self-loops, duplicate edges, or bad indices.
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  Color color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

  /// Open neighborhood of v as a bitmask.
  std::uint64_t neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_neighborhood(int v) const {
    return adjacency_[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
  }
  bool has_edge(int u, int v) const;
  /// Mask with one bit per vertex.
  std::uint64_t full_mask() const;

  std::optional<int> find_vertex(const std::string& label) const;

  /// Same graph with colors A and B exchanged (role swap of the players).
  ColoredGraph with_swapped_colors() const;

  /// Appends a disjoint copy of `other`, prefixing its labels. Returns the
  /// index offset the copy received.
  int append_disjoint(const ColoredGraph& other, const std::string& label_prefix = "");

 private:
  std::vector<Color> colors_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adjacency_;
  std::size_t edge_count_ = 0;
};

/// One connected component plus the map back to the parent graph's indices.
struct Component {
  ColoredGraph graph;
  std::vector<int> original_index;
};

/// Connected components in order of their smallest original vertex index.
/// Vertex order inside a component follows the original order, so labels and
/// colors survive the split.
std::vector<Component> components(const ColoredGraph& graph);

/// Edge-list text form: `v <label> <color>` lines then `e <label> <label>`
/// lines. parse_graph() accepts exactly this shape back.
std::string print_graph(const ColoredGraph& graph);

}  // namespace domgame
