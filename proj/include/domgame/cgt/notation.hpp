#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "domgame/cgt/context.hpp"

namespace domgame::cgt {

class NotationError : public std::runtime_error {
 public:
  NotationError(std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column + 1) + ": " + message),
        column(column) {}

  std::size_t column;
};

/// Render g in value notation: integers "-3", dyadics "3/8", nimbers "*"/"*2",
/// up/down multiples "^", "^*", "2^", "3v*", towers "^[2]*", "v[3]", and the
/// bracket form "{a,b|c}" (options in stored canonical order) for everything
/// else.
std::string print_value(Context& ctx, GameId g);

/// Parse the notation produced by print_value. Bracket forms are
/// canonicalized, so parse_value(print_value(g)) == g.
GameId parse_value(Context& ctx, std::string_view text);

}  // namespace domgame::cgt
