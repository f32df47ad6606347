#include "domgame/cgt/context.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace domgame::cgt {

namespace {

constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 62;
constexpr std::uint32_t kMaxExponent = 62;

std::uint64_t pack_pair(GameId a, GameId b) {
  return (std::uint64_t{a} << 32) | b;
}

std::uint64_t pack_unordered(GameId a, GameId b) {
  return pack_pair(std::min(a, b), std::max(a, b));
}

}  // namespace

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::AliceAlways: return "AliceAlways";
    case Outcome::BobAlways: return "BobAlways";
    case Outcome::FirstPlayerWins: return "FirstPlayerWins";
    case Outcome::SecondPlayerWins: return "SecondPlayerWins";
  }
  return "?";
}

int compare(const DyadicRational& a, const DyadicRational& b) {
  // Compare a.num / 2^a.exp with b.num / 2^b.exp on a common denominator.
  // __int128 keeps the cross terms exact for the full 62-bit range.
  const std::uint32_t exp = std::max(a.exponent, b.exponent);
  const __int128 lhs = static_cast<__int128>(a.numerator) << (exp - a.exponent);
  const __int128 rhs = static_cast<__int128>(b.numerator) << (exp - b.exponent);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

namespace {

std::int64_t floor_value(const DyadicRational& x) {
  // Arithmetic shift would be implementation-defined for negatives; divide
  // and adjust instead.
  const std::int64_t den = std::int64_t{1} << x.exponent;
  std::int64_t q = x.numerator / den;
  if (x.numerator % den != 0 && x.numerator < 0) --q;
  return q;
}

std::int64_t ceil_value(const DyadicRational& x) {
  const std::int64_t den = std::int64_t{1} << x.exponent;
  std::int64_t q = x.numerator / den;
  if (x.numerator % den != 0 && x.numerator > 0) ++q;
  return q;
}

}  // namespace

DyadicRational simplest_above(const DyadicRational& x) {
  // Simplest number greater than x: 0 if x is negative, otherwise the next
  // integer up.
  if (x.numerator < 0) return DyadicRational{0, 0};
  return DyadicRational{floor_value(x) + 1, 0};
}

DyadicRational simplest_below(const DyadicRational& x) {
  if (x.numerator > 0) return DyadicRational{0, 0};
  return DyadicRational{ceil_value(x) - 1, 0};
}

namespace {

// floor(x * 2^exp) in exact arithmetic.
__int128 floor_scaled(const DyadicRational& x, std::uint32_t exp) {
  if (exp >= x.exponent) {
    return static_cast<__int128>(x.numerator) << (exp - x.exponent);
  }
  const __int128 den = __int128{1} << (x.exponent - exp);
  __int128 q = x.numerator / den;
  if (x.numerator % den != 0 && x.numerator < 0) --q;
  return q;
}

// ceil(x * 2^exp) in exact arithmetic.
__int128 ceil_scaled(const DyadicRational& x, std::uint32_t exp) {
  if (exp >= x.exponent) {
    return static_cast<__int128>(x.numerator) << (exp - x.exponent);
  }
  const __int128 den = __int128{1} << (x.exponent - exp);
  __int128 q = x.numerator / den;
  if (x.numerator % den != 0 && x.numerator > 0) ++q;
  return q;
}

}  // namespace

DyadicRational simplest_between(const DyadicRational& a, const DyadicRational& b) {
  assert(compare(a, b) < 0);
  // Prefer the integer of least magnitude strictly inside (a, b); otherwise
  // the dyadic with the smallest power-of-two denominator, which is unique.
  const std::int64_t lo = floor_value(a) + 1;  // least integer > a
  const std::int64_t hi = ceil_value(b) - 1;   // greatest integer < b
  if (lo <= hi) {
    if (lo <= 0 && 0 <= hi) return DyadicRational{0, 0};
    return DyadicRational{lo > 0 ? lo : hi, 0};
  }
  for (std::uint32_t exp = 1; exp <= kMaxExponent; ++exp) {
    const __int128 first = floor_scaled(a, exp) + 1;  // least k with k/2^exp > a
    const __int128 last = ceil_scaled(b, exp) - 1;    // greatest k with k/2^exp < b
    for (__int128 k = first; k <= last; ++k) {
      if (k % 2 != 0) {
        return DyadicRational{static_cast<std::int64_t>(k), exp};
      }
    }
  }
  throw KernelError("no dyadic between the given endpoints within the exponent limit");
}

std::size_t Context::NodeHash::operator()(GameId id) const {
  const Node& node = ctx->nodes_[id];
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (GameId o : node.left) mix(o);
  mix(0xffffffffffffffffull);
  for (GameId o : node.right) mix(o);
  return static_cast<std::size_t>(h);
}

bool Context::NodeEq::operator()(GameId a, GameId b) const {
  const Node& na = ctx->nodes_[a];
  const Node& nb = ctx->nodes_[b];
  return na.left == nb.left && na.right == nb.right;
}

Context::DepthGuard::DepthGuard(Context& ctx) : ctx_(ctx) {
  if (++ctx_.depth_ > ctx_.options_.max_build_depth) {
    --ctx_.depth_;
    throw DepthLimitError("game construction exceeded the recursion depth limit (" +
                          std::to_string(ctx_.options_.max_build_depth) + ")");
  }
}

Context::DepthGuard::~DepthGuard() { --ctx_.depth_; }

Context::Context() : Context(Options{}) {}

Context::Context(Options options)
    : options_(options), intern_set_(64, NodeHash{this}, NodeEq{this}) {
  zero_ = intern({}, {});
}

std::span<const GameId> Context::left_options(GameId g) const {
  return nodes_[g].left;
}

std::span<const GameId> Context::right_options(GameId g) const {
  return nodes_[g].right;
}

std::uint32_t Context::birthday(GameId g) const { return nodes_[g].birthday; }

GameId Context::intern(std::vector<GameId> left, std::vector<GameId> right) {
  std::uint32_t birthday = 0;
  for (GameId o : left) birthday = std::max(birthday, nodes_[o].birthday + 1);
  for (GameId o : right) birthday = std::max(birthday, nodes_[o].birthday + 1);
  nodes_.push_back(Node{std::move(left), std::move(right), birthday});
  const GameId candidate = static_cast<GameId>(nodes_.size() - 1);
  auto [it, inserted] = intern_set_.insert(candidate);
  if (!inserted) {
    nodes_.pop_back();
    return *it;
  }
  if (nodes_.size() > options_.max_nodes) {
    intern_set_.erase(candidate);
    nodes_.pop_back();
    throw StoreLimitError("interning store exceeded its capacity of " +
                          std::to_string(options_.max_nodes) + " games");
  }
  return candidate;
}

int Context::compare_lists(std::span<const GameId> a, std::span<const GameId> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = structural_compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int Context::structural_compare(GameId a, GameId b) {
  if (a == b) return 0;
  const std::uint64_t key = pack_pair(a, b);
  if (auto it = cmp_memo_.find(key); it != cmp_memo_.end()) return it->second;
  int result = 0;
  if (nodes_[a].birthday != nodes_[b].birthday) {
    result = nodes_[a].birthday < nodes_[b].birthday ? -1 : 1;
  }
  if (result == 0) result = compare_lists(nodes_[a].left, nodes_[b].left);
  if (result == 0) result = compare_lists(nodes_[a].right, nodes_[b].right);
  // Distinct interned nodes differ in some option list.
  assert(result != 0);
  cmp_memo_.emplace(key, static_cast<std::int8_t>(result));
  return result;
}

void Context::normalize(std::vector<GameId>& options) {
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());
  std::sort(options.begin(), options.end(),
            [this](GameId x, GameId y) { return structural_compare(x, y) < 0; });
}

void Context::remove_dominated(std::vector<GameId>& options, bool left_side) {
  if (options.size() < 2) return;
  std::vector<char> drop(options.size(), 0);
  for (std::size_t i = 0; i < options.size(); ++i) {
    for (std::size_t j = 0; j < options.size(); ++j) {
      if (i == j) continue;
      // A left option is dominated by any greater one, a right option by any
      // smaller one. Distinct canonical games are never equal, so <= between
      // different ids is strict.
      const bool dominated =
          left_side ? leq(options[i], options[j]) : leq(options[j], options[i]);
      if (dominated) {
        drop[i] = 1;
        break;
      }
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (!drop[i]) options[out++] = options[i];
  }
  options.resize(out);
}

bool Context::leq_temp_canon(std::span<const GameId> left,
                             std::span<const GameId> right, GameId h) {
  // {left|right} <= h fails iff some left option >= h or some right option
  // of h is <= {left|right}.
  for (GameId gl : left) {
    if (leq(h, gl)) return false;
  }
  for (GameId hr : nodes_[h].right) {
    if (leq_canon_temp(hr, left, right)) return false;
  }
  return true;
}

bool Context::leq_canon_temp(GameId g, std::span<const GameId> left,
                             std::span<const GameId> right) {
  for (GameId gl : nodes_[g].left) {
    if (leq_temp_canon(left, right, gl)) return false;
  }
  for (GameId hr : right) {
    if (leq(hr, g)) return false;
  }
  return true;
}

bool Context::bypass_reversible(std::vector<GameId>& left,
                                std::vector<GameId>& right) {
  // A left option L reverses through any of its right options r with
  // r <= {left|right}; L is then replaced by r's left options. Dually on the
  // right. One bypass per call; the caller re-normalizes and retries.
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (GameId r : nodes_[left[i]].right) {
      if (leq_canon_temp(r, left, right)) {
        const std::vector<GameId> replacement(nodes_[r].left.begin(),
                                              nodes_[r].left.end());
        left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
        left.insert(left.end(), replacement.begin(), replacement.end());
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    for (GameId l : nodes_[right[i]].left) {
      if (leq_temp_canon(left, right, l)) {
        const std::vector<GameId> replacement(nodes_[l].right.begin(),
                                              nodes_[l].right.end());
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(i));
        right.insert(right.end(), replacement.begin(), replacement.end());
        return true;
      }
    }
  }
  return false;
}

GameId Context::make(std::vector<GameId> left, std::vector<GameId> right) {
  DepthGuard guard(*this);
  normalize(left);
  normalize(right);
  for (;;) {
    remove_dominated(left, true);
    remove_dominated(right, false);
    if (!bypass_reversible(left, right)) break;
    normalize(left);
    normalize(right);
  }
  return intern(std::move(left), std::move(right));
}

bool Context::leq(GameId g, GameId h) {
  if (g == h) return true;
  const std::uint64_t key = pack_pair(g, h);
  if (auto it = leq_memo_.find(key); it != leq_memo_.end()) return it->second;
  bool result = true;
  for (GameId gl : nodes_[g].left) {
    if (leq(h, gl)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId hr : nodes_[h].right) {
      if (leq(hr, g)) {
        result = false;
        break;
      }
    }
  }
  leq_memo_.emplace(key, result);
  return result;
}

bool Context::eq(GameId g, GameId h) {
  const bool result = leq(g, h) && leq(h, g);
  // Canonical forms are unique, so value equality must equal identity.
  assert(result == (g == h));
  return result;
}

GameId Context::add(GameId g, GameId h) {
  if (g == zero_) return h;
  if (h == zero_) return g;
  const std::uint64_t key = pack_unordered(g, h);
  if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
  DepthGuard guard(*this);
  const std::vector<GameId> gl(nodes_[g].left.begin(), nodes_[g].left.end());
  const std::vector<GameId> gr(nodes_[g].right.begin(), nodes_[g].right.end());
  const std::vector<GameId> hl(nodes_[h].left.begin(), nodes_[h].left.end());
  const std::vector<GameId> hr(nodes_[h].right.begin(), nodes_[h].right.end());
  std::vector<GameId> left, right;
  left.reserve(gl.size() + hl.size());
  right.reserve(gr.size() + hr.size());
  for (GameId o : gl) left.push_back(add(o, h));
  for (GameId o : hl) left.push_back(add(g, o));
  for (GameId o : gr) right.push_back(add(o, h));
  for (GameId o : hr) right.push_back(add(g, o));
  const GameId result = make(std::move(left), std::move(right));
  add_memo_.emplace(key, result);
  return result;
}

GameId Context::neg(GameId g) {
  if (g == zero_) return zero_;
  if (auto it = neg_memo_.find(g); it != neg_memo_.end()) return it->second;
  DepthGuard guard(*this);
  const std::vector<GameId> gl(nodes_[g].left.begin(), nodes_[g].left.end());
  const std::vector<GameId> gr(nodes_[g].right.begin(), nodes_[g].right.end());
  std::vector<GameId> left, right;
  left.reserve(gr.size());
  right.reserve(gl.size());
  for (GameId o : gr) left.push_back(neg(o));
  for (GameId o : gl) right.push_back(neg(o));
  const GameId result = make(std::move(left), std::move(right));
  neg_memo_.emplace(g, result);
  neg_memo_.emplace(result, g);
  return result;
}

Outcome Context::outcome(GameId g) {
  const bool le = leq(g, zero_);
  const bool ge = leq(zero_, g);
  if (le && ge) return Outcome::SecondPlayerWins;
  if (ge) return Outcome::AliceAlways;
  if (le) return Outcome::BobAlways;
  return Outcome::FirstPlayerWins;
}

GameId Context::integer(std::int64_t n) {
  if (n <= -kMaxMagnitude || n >= kMaxMagnitude) {
    throw KernelError("integer magnitude exceeds the 62-bit limit");
  }
  if (n < 0) return neg(integer(-n));
  if (positive_integers_.empty()) positive_integers_.push_back(zero_);
  while (static_cast<std::int64_t>(positive_integers_.size()) <= n) {
    positive_integers_.push_back(make({positive_integers_.back()}, {}));
  }
  return positive_integers_[static_cast<std::size_t>(n)];
}

GameId Context::dyadic(std::int64_t numerator, std::uint32_t exponent) {
  if (numerator <= -kMaxMagnitude || numerator >= kMaxMagnitude) {
    throw KernelError("dyadic numerator exceeds the 62-bit limit");
  }
  if (exponent > kMaxExponent) {
    throw KernelError("dyadic exponent exceeds the limit of " +
                      std::to_string(kMaxExponent));
  }
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  if (exponent == 0) return integer(numerator);
  // num/2^e in lowest terms is {(num-1)/2^e | (num+1)/2^e}.
  const GameId lo = dyadic(numerator - 1, exponent);
  const GameId hi = dyadic(numerator + 1, exponent);
  return make({lo}, {hi});
}

GameId Context::nimber(std::uint32_t k) {
  if (nimbers_.empty()) nimbers_.push_back(zero_);
  while (nimbers_.size() <= k) {
    std::vector<GameId> options(nimbers_.begin(), nimbers_.end());
    std::vector<GameId> mirror = options;
    nimbers_.push_back(make(std::move(options), std::move(mirror)));
  }
  return nimbers_[k];
}

GameId Context::up_multiple(std::uint32_t n, bool with_star) {
  auto& plain = up_multiples_[0];
  auto& starred = up_multiples_[1];
  if (plain.empty()) {
    plain.push_back(zero_);
    starred.push_back(star());
  }
  const GameId up = up_tower(1, false);
  while (plain.size() <= n) {
    plain.push_back(add(plain.back(), up));
    starred.push_back(add(plain.back(), star()));
  }
  return with_star ? starred[n] : plain[n];
}

GameId Context::down_multiple(std::uint32_t n, bool with_star) {
  return neg(up_multiple(n, with_star));
}

GameId Context::up_tower(std::uint32_t n, bool with_star) {
  auto& plain = up_towers_[0];
  auto& starred = up_towers_[1];
  if (plain.empty()) {
    plain.push_back(zero_);
    starred.push_back(star());
  }
  while (plain.size() <= n) {
    const GameId previous = plain.back();
    plain.push_back(make({previous}, {star()}));
    starred.push_back(add(plain.back(), star()));
  }
  return with_star ? starred[n] : plain[n];
}

GameId Context::down_tower(std::uint32_t n, bool with_star) {
  return neg(up_tower(n, with_star));
}

std::optional<DyadicRational> Context::as_number(GameId g) {
  if (auto it = number_memo_.find(g); it != number_memo_.end()) return it->second;
  std::optional<DyadicRational> result;
  // Copy the option ids up front: the verification below may intern new nodes.
  const std::vector<GameId> left(nodes_[g].left.begin(), nodes_[g].left.end());
  const std::vector<GameId> right(nodes_[g].right.begin(), nodes_[g].right.end());
  if (g == zero_) {
    result = DyadicRational{0, 0};
  } else if (left.size() <= 1 && right.size() <= 1) {
    std::optional<DyadicRational> lo, hi;
    bool options_are_numbers = true;
    if (!left.empty()) {
      lo = as_number(left[0]);
      options_are_numbers = lo.has_value();
    }
    if (options_are_numbers && !right.empty()) {
      hi = as_number(right[0]);
      options_are_numbers = hi.has_value();
    }
    if (options_are_numbers) {
      std::optional<DyadicRational> candidate;
      if (lo && hi) {
        if (compare(*lo, *hi) < 0) candidate = simplest_between(*lo, *hi);
      } else if (lo) {
        candidate = simplest_above(*lo);
      } else if (hi) {
        candidate = simplest_below(*hi);
      }
      if (candidate && dyadic(candidate->numerator, candidate->exponent) == g) {
        result = candidate;
      }
    }
  }
  number_memo_.emplace(g, result);
  return result;
}

}  // namespace domgame::cgt
