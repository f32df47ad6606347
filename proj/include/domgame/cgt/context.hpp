#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace domgame::cgt {

/// Identifier of an interned canonical game inside one Context. Equal games
/// always receive the same id, so value equality of canonical forms is id
/// equality.
using GameId = std::uint32_t;
inline constexpr GameId kNoGame = 0xffffffffu;

/// Who wins under optimal play, as a function of who moves first.
enum class Outcome { AliceAlways, BobAlways, FirstPlayerWins, SecondPlayerWins };
const char* to_string(Outcome outcome);

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The interning store reached its configured node capacity.
class StoreLimitError : public KernelError {
 public:
  using KernelError::KernelError;
};

/// Construction recursed past the configured depth limit.
class DepthLimitError : public KernelError {
 public:
  using KernelError::KernelError;
};

/// numerator / 2^exponent in lowest terms (exponent == 0 for integers).
struct DyadicRational {
  std::int64_t numerator = 0;
  std::uint32_t exponent = 0;

  bool operator==(const DyadicRational&) const = default;
};

int compare(const DyadicRational& a, const DyadicRational& b);
/// Simplest number (fewest game-tree levels) strictly above / below / between.
DyadicRational simplest_above(const DyadicRational& x);
DyadicRational simplest_below(const DyadicRational& x);
DyadicRational simplest_between(const DyadicRational& a, const DyadicRational& b);

/// One arena of interned canonical game values plus the memo tables for the
/// operations on them.
///
/// All games handed out by a Context are in canonical form: no dominated
/// options, no reversible options, options stored in a deterministic
/// structural order. A context is confined to one thread at a time; values
/// are immutable once interned, so a context that is no longer mutated may be
/// shared read-only.
class Context final {
 public:
  struct Options {
    std::size_t max_nodes = 1u << 20;
    int max_build_depth = 8192;
  };

  Context();
  explicit Context(Options options);
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  /// The empty game { | }.
  GameId zero() const { return zero_; }

  /// Canonical form of {left | right}. The inputs must be ids from this
  /// context; the result is fully simplified and interned.
  GameId make(std::vector<GameId> left, std::vector<GameId> right);

  /// Partial order of games: g <= h.
  bool leq(GameId g, GameId h);
  /// Value equality (two-sided leq). Coincides with id equality here.
  bool eq(GameId g, GameId h);
  /// Disjunctive sum, canonicalized.
  GameId add(GameId g, GameId h);
  /// Role-swapped game -g, canonicalized.
  GameId neg(GameId g);
  /// Sign/comparability with zero.
  Outcome outcome(GameId g);

  // Named families.
  GameId integer(std::int64_t n);
  GameId dyadic(std::int64_t numerator, std::uint32_t exponent);
  GameId nimber(std::uint32_t k);
  GameId star() { return nimber(1); }
  /// n-fold sum of up = {0|*}; with_star adds a star component. n == 0 gives
  /// 0 (or * with the star flag).
  GameId up_multiple(std::uint32_t n, bool with_star);
  GameId down_multiple(std::uint32_t n, bool with_star);
  /// Tower recursion up[1] = {0|*}, up[n] = {up[n-1] | *}; with_star adds *.
  /// n == 0 is accepted with the convention up[0] = 0.
  GameId up_tower(std::uint32_t n, bool with_star);
  GameId down_tower(std::uint32_t n, bool with_star);

  /// Dyadic value of g when g is a number, otherwise nullopt.
  std::optional<DyadicRational> as_number(GameId g);

  std::span<const GameId> left_options(GameId g) const;
  std::span<const GameId> right_options(GameId g) const;
  /// Height of the canonical game tree (0 for the empty game).
  std::uint32_t birthday(GameId g) const;
  std::size_t node_count() const { return nodes_.size(); }

  /// Total structural order used for stored option lists: birthday first,
  /// then left and right option lists lexicographically.
  int structural_compare(GameId a, GameId b);

 private:
  struct Node {
    std::vector<GameId> left;
    std::vector<GameId> right;
    std::uint32_t birthday = 0;
  };

  struct NodeHash {
    const Context* ctx;
    std::size_t operator()(GameId id) const;
  };
  struct NodeEq {
    const Context* ctx;
    bool operator()(GameId a, GameId b) const;
  };

  friend struct NodeHash;
  friend struct NodeEq;

  class DepthGuard {
   public:
    explicit DepthGuard(Context& ctx);
    ~DepthGuard();

   private:
    Context& ctx_;
  };

  GameId intern(std::vector<GameId> left, std::vector<GameId> right);
  void normalize(std::vector<GameId>& options);
  void remove_dominated(std::vector<GameId>& options, bool left_side);
  bool bypass_reversible(std::vector<GameId>& left, std::vector<GameId>& right);
  // Comparisons between the in-progress game {left|right} (whose options are
  // canonical) and a canonical game.
  bool leq_temp_canon(std::span<const GameId> left, std::span<const GameId> right, GameId h);
  bool leq_canon_temp(GameId g, std::span<const GameId> left, std::span<const GameId> right);
  int compare_lists(std::span<const GameId> a, std::span<const GameId> b);

  Options options_;
  std::vector<Node> nodes_;
  std::unordered_set<GameId, NodeHash, NodeEq> intern_set_;
  std::unordered_map<std::uint64_t, bool> leq_memo_;
  std::unordered_map<std::uint64_t, GameId> add_memo_;
  std::unordered_map<GameId, GameId> neg_memo_;
  std::unordered_map<std::uint64_t, std::int8_t> cmp_memo_;
  std::unordered_map<GameId, std::optional<DyadicRational>> number_memo_;

  GameId zero_ = kNoGame;
  std::vector<GameId> positive_integers_;  // index n -> game n
  std::vector<GameId> nimbers_;            // index k -> *k
  std::vector<GameId> up_multiples_[2];    // [with_star][n]
  std::vector<GameId> up_towers_[2];       // [with_star][n]
  int depth_ = 0;
};

}  // namespace domgame::cgt
