#include "domgame/cgt/notation.hpp"

#include <cctype>
#include <vector>

#include "domgame/cgt/named.hpp"

namespace domgame::cgt {

namespace {

std::string print_named(Context& ctx, const NamedValue& named);

std::string print_bracket(Context& ctx, GameId g) {
  std::string out = "{";
  bool first = true;
  for (GameId o : std::vector<GameId>(ctx.left_options(g).begin(),
                                      ctx.left_options(g).end())) {
    if (!first) out += ",";
    out += print_value(ctx, o);
    first = false;
  }
  out += "|";
  first = true;
  for (GameId o : std::vector<GameId>(ctx.right_options(g).begin(),
                                      ctx.right_options(g).end())) {
    if (!first) out += ",";
    out += print_value(ctx, o);
    first = false;
  }
  out += "}";
  return out;
}

std::string print_named(Context& ctx, const NamedValue& named) {
  const std::string star = named.star ? "*" : "";
  switch (named.kind) {
    case NamedValue::Kind::kInteger:
      return std::to_string(named.value);
    case NamedValue::Kind::kDyadic:
      return std::to_string(named.value) + "/" +
             std::to_string(std::uint64_t{1} << named.exponent);
    case NamedValue::Kind::kNimber:
      return named.value == 1 ? "*" : "*" + std::to_string(named.value);
    case NamedValue::Kind::kUpMultiple:
      return (named.value == 1 ? "" : std::to_string(named.value)) + std::string("^") + star;
    case NamedValue::Kind::kDownMultiple:
      return (named.value == 1 ? "" : std::to_string(named.value)) + std::string("v") + star;
    case NamedValue::Kind::kUpTower:
      return "^[" + std::to_string(named.value) + "]" + star;
    case NamedValue::Kind::kDownTower:
      return "v[" + std::to_string(named.value) + "]" + star;
    case NamedValue::Kind::kOther:
      return print_bracket(ctx, named.game);
  }
  return "?";
}

class Parser {
 public:
  Parser(Context& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  GameId parse() {
    const GameId g = parse_value();
    skip_spaces();
    if (pos_ != text_.size()) throw error("trailing input after value");
    return g;
  }

 private:
  NotationError error(const std::string& message) const {
    return NotationError(pos_, message);
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::int64_t parse_digits() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw error("expected digits");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 62)) throw error("number too large");
      ++pos_;
    }
    return value;
  }

  GameId parse_value() {
    skip_spaces();
    if (consume('{')) return parse_bracket();
    return parse_simple();
  }

  GameId parse_bracket() {
    std::vector<GameId> left = parse_option_list('|');
    if (!consume('|')) throw error("expected '|'");
    std::vector<GameId> right = parse_option_list('}');
    if (!consume('}')) throw error("expected '}'");
    return ctx_.make(std::move(left), std::move(right));
  }

  std::vector<GameId> parse_option_list(char terminator) {
    std::vector<GameId> options;
    skip_spaces();
    if (peek() == terminator) return options;
    options.push_back(parse_value());
    skip_spaces();
    while (consume(',')) {
      options.push_back(parse_value());
      skip_spaces();
    }
    return options;
  }

  GameId parse_simple() {
    if (consume('*')) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        return ctx_.nimber(static_cast<std::uint32_t>(parse_digits()));
      }
      return ctx_.star();
    }
    if (peek() == '^' || peek() == 'v') return parse_up_down(1);
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      const bool negative = consume('-');
      const std::int64_t first = parse_digits();
      if (peek() == '/') {
        ++pos_;
        const std::int64_t den = parse_digits();
        if (den <= 0 || (den & (den - 1)) != 0) {
          throw error("denominator must be a power of two");
        }
        std::uint32_t exponent = 0;
        for (std::int64_t d = den; d > 1; d >>= 1) ++exponent;
        return ctx_.dyadic(negative ? -first : first, exponent);
      }
      if (!negative && (peek() == '^' || peek() == 'v')) {
        return parse_up_down(first);
      }
      return ctx_.integer(negative ? -first : first);
    }
    throw error("expected a value");
  }

  GameId parse_up_down(std::int64_t count) {
    const bool up = peek() == '^';
    ++pos_;
    if (consume('[')) {
      if (count != 1) throw error("towers take no leading count");
      const std::int64_t height = parse_digits();
      if (height < 1) throw error("tower height must be positive");
      if (!consume(']')) throw error("expected ']'");
      const bool star = consume('*');
      return up ? ctx_.up_tower(static_cast<std::uint32_t>(height), star)
                : ctx_.down_tower(static_cast<std::uint32_t>(height), star);
    }
    if (count < 1) throw error("multiple count must be positive");
    const bool star = consume('*');
    return up ? ctx_.up_multiple(static_cast<std::uint32_t>(count), star)
              : ctx_.down_multiple(static_cast<std::uint32_t>(count), star);
  }

  Context& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print_value(Context& ctx, GameId g) {
  return print_named(ctx, classify(ctx, g));
}

GameId parse_value(Context& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

}  // namespace domgame::cgt
