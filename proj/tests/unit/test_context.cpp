#include "domgame/cgt/context.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "domgame/cgt/nim.hpp"
#include "naive_games.hpp"

using domgame::cgt::Context;
using domgame::cgt::DepthLimitError;
using domgame::cgt::DyadicRational;
using domgame::cgt::GameId;
using domgame::cgt::Outcome;
using domgame::cgt::StoreLimitError;

TEST_CASE("order facts pinned by the naive reference implementation") {
  // Raw option trees compared with the textbook recursion, independent of
  // interning and canonicalization.
  const naive::Tree zero = naive::zero();
  const naive::Tree star = naive::star();
  const naive::Tree up = naive::up();

  CHECK(naive::leq(zero, up));
  CHECK_FALSE(naive::leq(up, zero));
  CHECK_FALSE(naive::leq(star, zero));
  CHECK_FALSE(naive::leq(zero, star));
  CHECK_FALSE(naive::leq(up, star));
  CHECK_FALSE(naive::leq(star, up));
  CHECK_FALSE(naive::eq(star, naive::nim(2)));
  CHECK(naive::eq(naive::add(star, star), zero));
  CHECK(naive::eq(naive::add(naive::nim(2), naive::nim(3)), naive::nim(1)));
  for (int n = 0; n <= 3; ++n) {
    CHECK(naive::eq(naive::Tree{{naive::zero()}, {naive::half_power(n)}},
                    naive::half_power(n + 1)));
  }
  // {0 | up} is two ups plus star.
  CHECK(naive::eq(naive::Tree{{naive::zero()}, {naive::up()}},
                  naive::add(naive::add(up, up), star)));

  // The kernel agrees with every pinned fact.
  Context ctx;
  const GameId z = ctx.zero();
  const GameId s = ctx.star();
  const GameId u = ctx.up_multiple(1, false);
  CHECK(ctx.leq(z, u));
  CHECK_FALSE(ctx.leq(u, z));
  CHECK_FALSE(ctx.leq(s, z));
  CHECK_FALSE(ctx.leq(z, s));
  CHECK_FALSE(ctx.leq(u, s));
  CHECK_FALSE(ctx.leq(s, u));
  CHECK_FALSE(ctx.eq(s, ctx.nimber(2)));
  CHECK(ctx.add(s, s) == z);
  CHECK(ctx.add(ctx.nimber(2), ctx.nimber(3)) == ctx.nimber(1));
  for (std::uint32_t n = 0; n <= 3; ++n) {
    CHECK(ctx.make({z}, {ctx.dyadic(1, n)}) == ctx.dyadic(1, n + 1));
  }
  CHECK(ctx.make({z}, {u}) == ctx.up_multiple(2, true));
}

TEST_CASE("construction fixtures") {
  Context ctx;
  const GameId z = ctx.zero();
  CHECK(ctx.make({}, {}) == z);
  CHECK(ctx.make({z}, {z}) == ctx.star());
  CHECK(ctx.make({z}, {ctx.star()}) == ctx.up_multiple(1, false));
  CHECK(ctx.make({z}, {}) == ctx.integer(1));
  CHECK(ctx.make({}, {z}) == ctx.integer(-1));
  CHECK(ctx.make({z, ctx.up_multiple(1, true)}, {z}) == ctx.up_tower(2, true));
  // Canonicalization removes dominated and reversible options.
  CHECK(ctx.make({z, ctx.integer(1)}, {}) == ctx.integer(2));
  CHECK(ctx.make({ctx.integer(-3)}, {}) == z);
  CHECK(ctx.make({z, z}, {ctx.star(), ctx.star()}) == ctx.up_multiple(1, false));
}

TEST_CASE("integer and dyadic arithmetic identities") {
  Context ctx;
  CHECK(ctx.add(ctx.integer(2), ctx.integer(3)) == ctx.integer(5));
  CHECK(ctx.add(ctx.integer(-4), ctx.integer(4)) == ctx.zero());
  CHECK(ctx.add(ctx.dyadic(1, 1), ctx.dyadic(1, 1)) == ctx.integer(1));
  CHECK(ctx.add(ctx.dyadic(1, 2), ctx.dyadic(1, 2)) == ctx.dyadic(1, 1));
  CHECK(ctx.add(ctx.dyadic(3, 3), ctx.dyadic(1, 3)) == ctx.dyadic(1, 1));
  CHECK(ctx.dyadic(2, 1) == ctx.integer(1));
  CHECK(ctx.dyadic(6, 1) == ctx.integer(3));
  CHECK(ctx.dyadic(-1, 1) == ctx.neg(ctx.dyadic(1, 1)));
}

TEST_CASE("negation is an order anti-isomorphism and involution") {
  Context ctx;
  const GameId samples[] = {
      ctx.zero(),           ctx.star(),
      ctx.nimber(2),        ctx.integer(2),
      ctx.integer(-1),      ctx.dyadic(1, 1),
      ctx.dyadic(-3, 3),    ctx.up_multiple(1, false),
      ctx.up_multiple(2, true), ctx.up_tower(2, false),
      ctx.up_tower(3, true),    ctx.down_multiple(2, false),
      ctx.make({ctx.integer(2)}, {ctx.star()}),
  };
  for (GameId g : samples) {
    CHECK(ctx.neg(ctx.neg(g)) == g);
    CHECK(ctx.add(g, ctx.neg(g)) == ctx.zero());
    for (GameId h : samples) {
      CHECK(ctx.leq(g, h) == ctx.leq(ctx.neg(h), ctx.neg(g)));
    }
  }
  CHECK(ctx.neg(ctx.up_multiple(1, false)) == ctx.down_multiple(1, false));
  CHECK(ctx.neg(ctx.star()) == ctx.star());
  CHECK(ctx.neg(ctx.integer(7)) == ctx.integer(-7));
}

TEST_CASE("addition is commutative and associative on samples") {
  Context ctx;
  const GameId samples[] = {
      ctx.zero(),        ctx.star(),          ctx.nimber(3),
      ctx.integer(1),    ctx.integer(-2),     ctx.dyadic(1, 2),
      ctx.up_multiple(1, false), ctx.up_tower(2, true),
  };
  for (GameId g : samples) {
    CHECK(ctx.add(g, ctx.zero()) == g);
    for (GameId h : samples) {
      CHECK(ctx.add(g, h) == ctx.add(h, g));
      for (GameId k : samples) {
        CHECK(ctx.add(ctx.add(g, h), k) == ctx.add(g, ctx.add(h, k)));
      }
    }
  }
}

TEST_CASE("order is reflexive, antisymmetric, and transitive on the store") {
  Context ctx;
  // Seed a varied store.
  for (int n = 0; n <= 4; ++n) {
    ctx.up_multiple(static_cast<std::uint32_t>(n), n % 2 == 0);
    ctx.up_tower(static_cast<std::uint32_t>(n), n % 2 == 1);
    ctx.nimber(static_cast<std::uint32_t>(n));
    ctx.integer(n - 2);
    ctx.dyadic(2 * n + 1, 3);
  }
  std::mt19937_64 rng(7);
  const auto pick = [&] {
    return static_cast<GameId>(rng() % ctx.node_count());
  };
  for (int i = 0; i < 400; ++i) {
    const GameId g = pick();
    const GameId h = pick();
    const GameId k = pick();
    CHECK(ctx.leq(g, g));
    if (g != h) CHECK_FALSE((ctx.leq(g, h) && ctx.leq(h, g)));
    if (ctx.leq(g, h) && ctx.leq(h, k)) CHECK(ctx.leq(g, k));
    CHECK(ctx.eq(g, h) == (g == h));
  }
}

TEST_CASE("canonicalizing a stored canonical form is the identity") {
  Context ctx;
  for (int n = 0; n <= 3; ++n) {
    ctx.up_tower(static_cast<std::uint32_t>(n + 1), n % 2 == 0);
    ctx.nimber(static_cast<std::uint32_t>(n));
    ctx.dyadic(2 * n + 1, 2);
    ctx.add(ctx.up_multiple(static_cast<std::uint32_t>(n), false), ctx.nimber(2));
  }
  const std::size_t count = ctx.node_count();
  for (GameId g = 0; g < count; ++g) {
    const std::vector<GameId> left(ctx.left_options(g).begin(),
                                   ctx.left_options(g).end());
    const std::vector<GameId> right(ctx.right_options(g).begin(),
                                    ctx.right_options(g).end());
    CHECK(ctx.make(left, right) == g);
  }
}

TEST_CASE("outcome classification") {
  Context ctx;
  CHECK(ctx.outcome(ctx.zero()) == Outcome::SecondPlayerWins);
  CHECK(ctx.outcome(ctx.star()) == Outcome::FirstPlayerWins);
  CHECK(ctx.outcome(ctx.up_multiple(1, false)) == Outcome::AliceAlways);
  CHECK(ctx.outcome(ctx.integer(-1)) == Outcome::BobAlways);
  CHECK(ctx.outcome(ctx.dyadic(1, 3)) == Outcome::AliceAlways);
  CHECK(ctx.outcome(ctx.up_multiple(1, true)) == Outcome::FirstPlayerWins);
}

TEST_CASE("tower ordering facts") {
  Context ctx;
  const GameId star = ctx.star();
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const GameId t = ctx.up_tower(n, false);
    const GameId next = ctx.up_tower(n + 1, false);
    CHECK(ctx.leq(ctx.zero(), t));
    CHECK_FALSE(ctx.leq(t, ctx.zero()));
    CHECK(ctx.leq(t, next));
    CHECK_FALSE(ctx.leq(next, t));
    CHECK_FALSE(ctx.leq(t, star));
    CHECK_FALSE(ctx.leq(star, t));
  }
}

TEST_CASE("mex and nim addition") {
  using domgame::cgt::mex;
  using domgame::cgt::nim_add;
  const std::vector<std::uint32_t> a{0, 1, 2, 5};
  const std::vector<std::uint32_t> b{};
  const std::vector<std::uint32_t> c{0, 2};
  CHECK(mex(a) == 3);
  CHECK(mex(b) == 0);
  CHECK(mex(c) == 1);
  CHECK(nim_add(3, 5) == 6);
  CHECK(nim_add(4, 4) == 0);

  Context ctx;
  for (std::uint32_t m = 0; m <= 8; ++m) {
    for (std::uint32_t n = 0; n <= 8; ++n) {
      CHECK(ctx.add(ctx.nimber(m), ctx.nimber(n)) == ctx.nimber(nim_add(m, n)));
    }
  }
}

TEST_CASE("resource guards report errors instead of corrupting state") {
  Context small(Context::Options{.max_nodes = 40, .max_build_depth = 8192});
  CHECK_THROWS_AS(small.integer(1000), StoreLimitError);

  // Positive integers build iteratively; negating one recurses per unit.
  Context shallow(Context::Options{.max_nodes = 1u << 20, .max_build_depth = 4});
  CHECK(shallow.integer(64) != domgame::cgt::kNoGame);
  CHECK_THROWS_AS(shallow.integer(-64), DepthLimitError);
}

TEST_CASE("simplest dyadic selection") {
  using domgame::cgt::simplest_between;
  CHECK(simplest_between({0, 0}, {1, 0}) == DyadicRational{1, 1});
  CHECK(simplest_between({1, 2}, {1, 1}) == DyadicRational{3, 3});
  CHECK(simplest_between({-3, 2}, {-1, 2}) == DyadicRational{-1, 1});
  CHECK(simplest_between({5, 0}, {12, 0}) == DyadicRational{6, 0});
  CHECK(simplest_between({-10, 0}, {-5, 0}) == DyadicRational{-6, 0});
  CHECK(simplest_between({-2, 0}, {3, 0}) == DyadicRational{0, 0});
}
