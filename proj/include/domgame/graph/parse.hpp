#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "domgame/graph/colored_graph.hpp"
#include "domgame/graph/family.hpp"

namespace domgame {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Edge-list format: `v <label> <A|B|C>` and `e <label> <label>` lines;
/// `#` starts a comment line; blank lines are ignored. Every malformed input
/// (duplicate vertex label, unknown color, undeclared endpoint, self-loop,
/// duplicate edge, malformed line, vertex cap) raises a ParseError carrying
/// the offending line number.
ColoredGraph parse_graph(std::string_view text);

/// Family DSL: complete(colors=...), kst(S=...,T=...),
/// star(center=X,a=..,b=..,c=..), split(K=...,S=...), path(n=..,colors=...),
/// cycle(n=..,colors=...), union(spec, spec, ...). Color strings concatenate
/// atoms `A`, `B`, `C`, each optionally run-length repeated as `A*3`.
FamilySpec parse_family(std::string_view text);

}  // namespace domgame
