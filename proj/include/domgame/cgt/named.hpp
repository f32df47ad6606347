#pragma once

#include <cstdint>
#include <string>

#include "domgame/cgt/context.hpp"

namespace domgame::cgt {

/// Symbolic description of a game value from one of the recognized families.
/// Canonical representatives: exponent-0 dyadics are reported as Integer,
/// *0 as Integer(0), and the one-step tower as UpMultiple(1, s).
struct NamedValue {
  enum class Kind {
    kInteger,
    kDyadic,
    kNimber,
    kUpMultiple,
    kDownMultiple,
    kUpTower,
    kDownTower,
    kOther,
  };

  Kind kind = Kind::kOther;
  // Integer value, dyadic numerator, nimber index, or multiple/tower height.
  std::int64_t value = 0;
  std::uint32_t exponent = 0;  // dyadic denominators are 2^exponent
  bool star = false;           // up/down families: an extra * component
  GameId game = kNoGame;       // kOther: the canonical id itself

  bool operator==(const NamedValue&) const = default;

  static NamedValue integer(std::int64_t n);
  static NamedValue dyadic(std::int64_t numerator, std::uint32_t exponent);
  static NamedValue nimber(std::uint32_t k);
  static NamedValue up_multiple(std::uint32_t n, bool star);
  static NamedValue down_multiple(std::uint32_t n, bool star);
  static NamedValue up_tower(std::uint32_t n, bool star);
  static NamedValue down_tower(std::uint32_t n, bool star);
  static NamedValue other(GameId g);
};

/// Identify g within the named families, searching in the order Integer,
/// Dyadic, Nimber, Up/DownMultiple, Up/DownTower with parameters bounded by
/// birthday(g); falls back to Other.
NamedValue classify(Context& ctx, GameId g);

/// Construct the game a NamedValue denotes. Inverse of classify on canonical
/// representatives.
GameId to_game(Context& ctx, const NamedValue& named);

/// Machine-friendly family tag, e.g. "up_multiple".
const char* kind_name(NamedValue::Kind kind);

/// Human-readable description, e.g. "up-multiple(2, star)".
std::string describe(const NamedValue& named);

}  // namespace domgame::cgt
