#include "domgame/graph/parse.hpp"

#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace domgame {
namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Recursive descent over the family DSL. Keys of each family are fixed and
// ordered as documented; counts are capped to keep arithmetic safe long
// before the graph builder's own vertex cap applies.
class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  static constexpr long kMaxCount = 1000000;

  FamilySpec parse_spec() {
    skip_space();
    const std::string name = parse_name();
    expect('(');
    FamilySpec spec;
    if (name == "complete") {
      CompleteSpec node;
      expect_key("colors");
      node.colors = parse_colors();
      spec.node = std::move(node);
    } else if (name == "kst") {
      BipartiteSpec node;
      expect_key("S");
      node.part_s = parse_colors();
      expect(',');
      expect_key("T");
      node.part_t = parse_colors();
      spec.node = std::move(node);
    } else if (name == "star") {
      StarSpec node;
      expect_key("center");
      node.center = parse_color_letter();
      expect(',');
      expect_key("a");
      node.a = parse_count();
      expect(',');
      expect_key("b");
      node.b = parse_count();
      expect(',');
      expect_key("c");
      node.c = parse_count();
      spec.node = node;
    } else if (name == "split") {
      SplitSpec node;
      expect_key("K");
      node.clique = parse_colors();
      expect(',');
      expect_key("S");
      node.independent = parse_colors();
      spec.node = std::move(node);
    } else if (name == "path" || name == "cycle") {
      expect_key("n");
      const int n = parse_count();
      expect(',');
      expect_key("colors");
      std::vector<Color> colors = parse_colors();
      if (static_cast<int>(colors.size()) != n) {
        fail("colors length " + std::to_string(colors.size()) +
             " does not match n=" + std::to_string(n));
      }
      if (name == "path") {
        if (n < 1) fail("path needs n >= 1");
        spec.node = PathSpec{std::move(colors)};
      } else {
        if (n < 3) fail("cycle needs n >= 3");
        spec.node = CycleSpec{std::move(colors)};
      }
    } else if (name == "union") {
      UnionSpec node;
      skip_space();
      if (peek() != ')') {
        node.parts.push_back(parse_spec());
        skip_space();
        while (peek() == ',') {
          ++pos_;
          node.parts.push_back(parse_spec());
          skip_space();
        }
      }
      spec.node = std::move(node);
    } else {
      fail("unknown family '" + name + "'");
    }
    expect(')');
    return spec;
  }

  std::string parse_name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_key(const std::string& key) {
    skip_space();
    if (text_.substr(pos_).substr(0, key.size()) != key) {
      fail("expected key '" + key + "='");
    }
    pos_ += key.size();
    expect('=');
  }

  std::vector<Color> parse_colors() {
    skip_space();
    std::vector<Color> colors;
    for (;;) {
      const char ch = peek();
      const auto color = color_from_char(ch);
      if (!color.has_value()) break;
      ++pos_;
      long repeat = 1;
      if (peek() == '*') {
        ++pos_;
        repeat = parse_count();
      }
      if (static_cast<long>(colors.size()) + repeat > kMaxCount) fail("count overflow");
      colors.insert(colors.end(), static_cast<std::size_t>(repeat), *color);
      skip_space();
    }
    return colors;
  }

  Color parse_color_letter() {
    skip_space();
    const auto color = color_from_char(peek());
    if (!color.has_value()) fail("expected a color letter A, B or C");
    ++pos_;
    return *color;
  }

  int parse_count() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxCount) fail("count overflow");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  ColoredGraph graph;
  std::unordered_map<std::string, int> by_label;
  std::unordered_set<std::string> seen_edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 3) {
        throw ParseError("malformed line: expected 'v <label> <color>'", line_no, 1);
      }
      if (by_label.contains(tokens[1])) {
        throw ParseError("duplicate vertex label '" + tokens[1] + "'", line_no, 1);
      }
      const auto color =
          tokens[2].size() == 1 ? color_from_char(tokens[2][0]) : std::nullopt;
      if (!color.has_value()) {
        throw ParseError("unknown color '" + tokens[2] + "' (use A, B or C)", line_no, 1);
      }
      try {
        by_label.emplace(tokens[1], graph.add_vertex(*color, tokens[1]));
      } catch (const GraphError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) {
        throw ParseError("malformed line: expected 'e <label> <label>'", line_no, 1);
      }
      const auto u = by_label.find(tokens[1]);
      if (u == by_label.end()) {
        throw ParseError("undeclared edge endpoint '" + tokens[1] + "'", line_no, 1);
      }
      const auto v = by_label.find(tokens[2]);
      if (v == by_label.end()) {
        throw ParseError("undeclared edge endpoint '" + tokens[2] + "'", line_no, 1);
      }
      if (u->second == v->second) {
        throw ParseError("self-loop at vertex '" + tokens[1] + "'", line_no, 1);
      }
      if (graph.has_edge(u->second, v->second)) {
        throw ParseError("duplicate edge '" + tokens[1] + " " + tokens[2] + "'", line_no, 1);
      }
      graph.add_edge(u->second, v->second);
    } else {
      throw ParseError("malformed line: unknown directive '" + tokens[0] + "'", line_no, 1);
    }
  }
  return graph;
}

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse(); }

}  // namespace domgame
