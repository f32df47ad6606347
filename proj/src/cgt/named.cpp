#include "domgame/cgt/named.hpp"

#include <algorithm>
#include <stdexcept>

namespace domgame::cgt {

NamedValue NamedValue::integer(std::int64_t n) {
  NamedValue v;
  v.kind = Kind::kInteger;
  v.value = n;
  return v;
}

NamedValue NamedValue::dyadic(std::int64_t numerator, std::uint32_t exponent) {
  NamedValue v;
  v.kind = Kind::kDyadic;
  v.value = numerator;
  v.exponent = exponent;
  return v;
}

NamedValue NamedValue::nimber(std::uint32_t k) {
  NamedValue v;
  v.kind = Kind::kNimber;
  v.value = k;
  return v;
}

NamedValue NamedValue::up_multiple(std::uint32_t n, bool star) {
  NamedValue v;
  v.kind = Kind::kUpMultiple;
  v.value = n;
  v.star = star;
  return v;
}

NamedValue NamedValue::down_multiple(std::uint32_t n, bool star) {
  NamedValue v;
  v.kind = Kind::kDownMultiple;
  v.value = n;
  v.star = star;
  return v;
}

NamedValue NamedValue::up_tower(std::uint32_t n, bool star) {
  NamedValue v;
  v.kind = Kind::kUpTower;
  v.value = n;
  v.star = star;
  return v;
}

NamedValue NamedValue::down_tower(std::uint32_t n, bool star) {
  NamedValue v;
  v.kind = Kind::kDownTower;
  v.value = n;
  v.star = star;
  return v;
}

NamedValue NamedValue::other(GameId g) {
  NamedValue v;
  v.kind = Kind::kOther;
  v.game = g;
  return v;
}

NamedValue classify(Context& ctx, GameId g) {
  if (auto number = ctx.as_number(g)) {
    if (number->exponent == 0) return NamedValue::integer(number->numerator);
    return NamedValue::dyadic(number->numerator, number->exponent);
  }
  // Nimbers present the same options to both players; check the shape first
  // so only one candidate needs constructing.
  bool impartial_shape = false;
  std::uint32_t option_count = 0;
  {
    const auto left = ctx.left_options(g);
    const auto right = ctx.right_options(g);
    impartial_shape = left.size() == right.size() &&
                      std::equal(left.begin(), left.end(), right.begin());
    option_count = static_cast<std::uint32_t>(left.size());
  }
  if (impartial_shape && option_count >= 1 && g == ctx.nimber(option_count)) {
    return NamedValue::nimber(option_count);
  }
  const std::uint32_t budget = ctx.birthday(g);
  for (std::uint32_t n = 1; n <= budget; ++n) {
    for (bool star : {false, true}) {
      if (g == ctx.up_multiple(n, star)) return NamedValue::up_multiple(n, star);
      if (g == ctx.down_multiple(n, star)) return NamedValue::down_multiple(n, star);
    }
  }
  // Height-1 towers are already covered as UpMultiple(1, s).
  for (std::uint32_t n = 2; n <= budget; ++n) {
    for (bool star : {false, true}) {
      if (g == ctx.up_tower(n, star)) return NamedValue::up_tower(n, star);
      if (g == ctx.down_tower(n, star)) return NamedValue::down_tower(n, star);
    }
  }
  return NamedValue::other(g);
}

GameId to_game(Context& ctx, const NamedValue& named) {
  switch (named.kind) {
    case NamedValue::Kind::kInteger:
      return ctx.integer(named.value);
    case NamedValue::Kind::kDyadic:
      return ctx.dyadic(named.value, named.exponent);
    case NamedValue::Kind::kNimber:
      if (named.value < 0) throw std::invalid_argument("negative nimber index");
      return ctx.nimber(static_cast<std::uint32_t>(named.value));
    case NamedValue::Kind::kUpMultiple:
    case NamedValue::Kind::kDownMultiple:
    case NamedValue::Kind::kUpTower:
    case NamedValue::Kind::kDownTower: {
      if (named.value < 1) {
        throw std::invalid_argument("up/down families need a positive count");
      }
      const auto n = static_cast<std::uint32_t>(named.value);
      switch (named.kind) {
        case NamedValue::Kind::kUpMultiple: return ctx.up_multiple(n, named.star);
        case NamedValue::Kind::kDownMultiple: return ctx.down_multiple(n, named.star);
        case NamedValue::Kind::kUpTower: return ctx.up_tower(n, named.star);
        default: return ctx.down_tower(n, named.star);
      }
    }
    case NamedValue::Kind::kOther:
      if (named.game == kNoGame) throw std::invalid_argument("missing game id");
      return named.game;
  }
  throw std::invalid_argument("unknown named value kind");
}

const char* kind_name(NamedValue::Kind kind) {
  switch (kind) {
    case NamedValue::Kind::kInteger: return "integer";
    case NamedValue::Kind::kDyadic: return "dyadic";
    case NamedValue::Kind::kNimber: return "nimber";
    case NamedValue::Kind::kUpMultiple: return "up_multiple";
    case NamedValue::Kind::kDownMultiple: return "down_multiple";
    case NamedValue::Kind::kUpTower: return "up_tower";
    case NamedValue::Kind::kDownTower: return "down_tower";
    case NamedValue::Kind::kOther: return "other";
  }
  return "?";
}

std::string describe(const NamedValue& named) {
  const std::string star = named.star ? ", star" : "";
  switch (named.kind) {
    case NamedValue::Kind::kInteger:
      return "integer(" + std::to_string(named.value) + ")";
    case NamedValue::Kind::kDyadic:
      return "dyadic(" + std::to_string(named.value) + "/" +
             std::to_string(std::uint64_t{1} << named.exponent) + ")";
    case NamedValue::Kind::kNimber:
      return "nimber(" + std::to_string(named.value) + ")";
    case NamedValue::Kind::kUpMultiple:
      return "up-multiple(" + std::to_string(named.value) + star + ")";
    case NamedValue::Kind::kDownMultiple:
      return "down-multiple(" + std::to_string(named.value) + star + ")";
    case NamedValue::Kind::kUpTower:
      return "up-tower(" + std::to_string(named.value) + star + ")";
    case NamedValue::Kind::kDownTower:
      return "down-tower(" + std::to_string(named.value) + star + ")";
    case NamedValue::Kind::kOther:
      return "other";
  }
  return "?";
}

}  // namespace domgame::cgt
