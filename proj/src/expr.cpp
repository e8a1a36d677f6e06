#include "symlap/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "symlap/error.hpp"

namespace symlap {

namespace {

enum class Tok { Number, S, CS, I, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  double number = 0.0;
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      const auto res = std::from_chars(src.data() + i, src.data() + src.size(), v);
      if (res.ec != std::errc{}) throw ParseError("malformed number", start);
      i = static_cast<std::size_t>(res.ptr - src.data());
      out.push_back({Tok::Number, start, v, src.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      const auto word = src.substr(start, i - start);
      if (word == "s") {
        out.push_back({Tok::S, start, 0.0, word});
      } else if (word == "cs") {
        out.push_back({Tok::CS, start, 0.0, word});
      } else if (word == "i") {
        out.push_back({Tok::I, start, 0.0, word});
      } else if (word == "conj") {
        // conj ( s ) collapses to the cs token.
        std::size_t j = i;
        const auto skip = [&] {
          while (j < src.size() && std::isspace(static_cast<unsigned char>(src[j]))) ++j;
        };
        skip();
        if (j >= src.size() || src[j] != '(') throw ParseError("expected '(' after conj", j);
        ++j;
        skip();
        if (j >= src.size() || src[j] != 's' ||
            (j + 1 < src.size() && std::isalpha(static_cast<unsigned char>(src[j + 1])))) {
          throw ParseError("conj() accepts only the variable s", j);
        }
        ++j;
        skip();
        if (j >= src.size() || src[j] != ')') throw ParseError("expected ')' to close conj", j);
        i = j + 1;
        out.push_back({Tok::CS, start, 0.0, src.substr(start, i - start)});
      } else {
        throw ParseError("unknown identifier '" + std::string(word) + "'", start);
      }
      continue;
    }
    Tok kind{};
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, start, 0.0, src.substr(start, 1)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), 0.0, {}});
  return out;
}

// value = g1(s) + g2(cs); g1 also holds constants.
struct Sided {
  RationalFunction g1;
  RationalFunction g2;

  bool depends_on_s() const { return !g1.is_constant(); }
  bool depends_on_cs() const { return !g2.is_zero(); }
  bool is_constant() const { return !depends_on_s() && !depends_on_cs(); }
  Complex constant() const { return g1.constant_value(); }
};

Sided scale(const Sided& v, Complex k) { return {k * v.g1, k * v.g2}; }

Sided multiply(const Sided& a, const Sided& b, std::size_t pos) {
  if (a.is_constant()) return scale(b, a.constant());
  if (b.is_constant()) return scale(a, b.constant());
  if (!a.depends_on_cs() && !b.depends_on_cs()) return {a.g1 * b.g1, {}};
  if (!a.depends_on_s() && !b.depends_on_s()) {
    // (ka + A(cs)) (kb + B(cs)) = ka kb + [ka B + kb A + A B](cs)
    const Complex ka = a.constant();
    const Complex kb = b.constant();
    return {RationalFunction::constant(ka * kb), ka * b.g2 + kb * a.g2 + a.g2 * b.g2};
  }
  throw SplitError("product couples s with cs; the expression is not separable", pos);
}

Sided divide(const Sided& a, const Sided& b, std::size_t pos) {
  if (b.is_constant()) {
    if (b.constant() == Complex{}) throw ParseError("division by zero", pos);
    return scale(a, 1.0 / b.constant());
  }
  if (b.depends_on_s() && b.depends_on_cs()) {
    throw SplitError("divisor mixes s and cs; the expression is not separable", pos);
  }
  try {
    if (b.depends_on_s()) {
      if (a.depends_on_cs()) throw SplitError("quotient couples cs with a divisor in s", pos);
      return {a.g1 / b.g1, {}};
    }
    if (a.depends_on_s()) throw SplitError("quotient couples s with a divisor in cs", pos);
    const RationalFunction num = RationalFunction::constant(a.constant()) + a.g2;
    const RationalFunction den = RationalFunction::constant(b.constant()) + b.g2;
    return {{}, num / den};
  } catch (const PoleError&) {
    throw ParseError("division by an identically zero polynomial", pos);
  }
}

Sided add(const Sided& a, const Sided& b) { return {a.g1 + b.g1, a.g2 + b.g2}; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Sided parse() {
    Sided v = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected token '" + std::string(peek().text) + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }

  Sided expr() {
    Sided v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Sided rhs = term();
      v = add(v, minus ? scale(rhs, -1.0) : rhs);
    }
    return v;
  }

  Sided term() {
    Sided v = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      Sided rhs = unary();
      v = op.kind == Tok::Star ? multiply(v, rhs, op.pos) : divide(v, rhs, op.pos);
    }
    return v;
  }

  Sided unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return scale(unary(), -1.0);
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  Sided power() {
    Sided base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token& caret = take();
    const Token& e = take();
    if (e.kind != Tok::Number) throw ParseError("exponent must be a nonnegative integer", e.pos);
    unsigned n = 0;
    const auto res = std::from_chars(e.text.data(), e.text.data() + e.text.size(), n);
    if (res.ec != std::errc{} || res.ptr != e.text.data() + e.text.size()) {
      throw ParseError("exponent must be a nonnegative integer", e.pos);
    }
    Sided out{RationalFunction::constant(1.0), {}};
    for (unsigned k = 0; k < n; ++k) out = multiply(out, base, caret.pos);
    return out;
  }

  Sided primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Number:
        return {RationalFunction::constant(t.number), {}};
      case Tok::I:
        return {RationalFunction::constant(kI), {}};
      case Tok::S:
        return {{Polynomial::monomial(1), Polynomial::constant(1.0)}, {}};
      case Tok::CS:
        return {{}, {Polynomial::monomial(1), Polynomial::constant(1.0)}};
      case Tok::LParen: {
        Sided v = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        take();
        return v;
      }
      case Tok::End:
        throw ParseError("unexpected end of expression", t.pos);
      default:
        throw ParseError("unexpected token '" + std::string(t.text) + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

SplitTransform parse_transform(std::string_view text) {
  Parser parser(tokenize(text));
  Sided v = parser.parse();
  return {std::move(v.g1), std::move(v.g2)};
}

std::string to_string(const SplitTransform& st) {
  return st.g1.to_string("s") + " + " + st.g2.to_string("cs");
}

}  // namespace symlap
