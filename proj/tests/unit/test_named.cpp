#include "domgame/cgt/named.hpp"

#include <vector>

#include "doctest.h"

using domgame::cgt::classify;
using domgame::cgt::Context;
using domgame::cgt::GameId;
using domgame::cgt::NamedValue;
using domgame::cgt::to_game;

TEST_CASE("named value construction fixtures") {
  Context ctx;
  CHECK(to_game(ctx, NamedValue::integer(1)) == ctx.make({ctx.zero()}, {}));
  CHECK(to_game(ctx, NamedValue::dyadic(1, 1)) ==
        ctx.make({ctx.zero()}, {ctx.integer(1)}));
  CHECK(to_game(ctx, NamedValue::up_tower(2, false)) ==
        ctx.make({ctx.up_multiple(1, false)}, {ctx.star()}));
  CHECK(to_game(ctx, NamedValue::nimber(0)) == ctx.zero());
  CHECK(to_game(ctx, NamedValue::dyadic(4, 2)) == ctx.integer(1));
}

TEST_CASE("classification fixtures") {
  Context ctx;
  CHECK(classify(ctx, ctx.zero()) == NamedValue::integer(0));
  CHECK(classify(ctx, ctx.make({ctx.zero()}, {ctx.zero()})) == NamedValue::nimber(1));
  CHECK(classify(ctx, ctx.make({ctx.zero()}, {ctx.star()})) ==
        NamedValue::up_multiple(1, false));
  CHECK(classify(ctx, ctx.make({ctx.zero()}, {ctx.up_multiple(2, false)})) ==
        NamedValue::up_multiple(3, true));
  CHECK(classify(ctx, ctx.dyadic(3, 3)) == NamedValue::dyadic(3, 3));
  CHECK(classify(ctx, ctx.integer(-5)) == NamedValue::integer(-5));
  CHECK(classify(ctx, ctx.up_tower(1, false)) == NamedValue::up_multiple(1, false));
  CHECK(classify(ctx, ctx.up_tower(1, true)) == NamedValue::up_multiple(1, true));
  CHECK(classify(ctx, ctx.down_tower(3, true)) == NamedValue::down_tower(3, true));
  // A switch like {2|*} belongs to no family.
  const GameId misc = ctx.make({ctx.integer(2)}, {ctx.star()});
  CHECK(classify(ctx, misc).kind == NamedValue::Kind::kOther);
  CHECK(classify(ctx, misc).game == misc);
}

TEST_CASE("classify inverts construction for canonical representatives") {
  Context ctx;
  std::vector<NamedValue> named;
  for (int n = -6; n <= 6; ++n) named.push_back(NamedValue::integer(n));
  for (std::uint32_t exp = 1; exp <= 6; ++exp) {
    for (std::int64_t num = -63; num <= 63; num += 2) {
      if (num == 0) continue;
      named.push_back(NamedValue::dyadic(num, exp));
    }
  }
  for (std::uint32_t k = 1; k <= 6; ++k) named.push_back(NamedValue::nimber(k));
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (bool star : {false, true}) {
      named.push_back(NamedValue::up_multiple(n, star));
      named.push_back(NamedValue::down_multiple(n, star));
      if (n >= 2) {
        named.push_back(NamedValue::up_tower(n, star));
        named.push_back(NamedValue::down_tower(n, star));
      }
    }
  }
  for (const NamedValue& v : named) {
    CHECK(classify(ctx, to_game(ctx, v)) == v);
  }
}
