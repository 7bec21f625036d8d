#include "chow/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "chow/errors.hpp"

namespace chow {

namespace {

struct Token {
  enum Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::plus; break;
      case '-': k = Token::minus; break;
      case '*': k = Token::star; break;
      case '/': k = Token::slash; break;
      case '^': k = Token::caret; break;
      case '(': k = Token::lparen; break;
      case ')': k = Token::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

// Intermediate value: zero, or a factored element of K.
struct Value {
  std::optional<FracElement> frac;  // nullopt means 0
};

class Parser {
 public:
  Parser(std::string_view text, ContextPtr ctx) : toks_(tokenize(text)), ctx_(std::move(ctx)) {}

  Value parse_all() {
    Value v = expr();
    if (peek().kind != Token::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  Poly as_poly(const Value& v, std::size_t pos) const {
    if (!v.frac) return Poly(ctx_);
    if (!v.frac->is_integral()) throw ParseError("fraction inside a sum", pos);
    return expand(FactoredElement(*v.frac));
  }

  Value expr() {
    std::size_t start = peek().pos;
    bool negate = false;
    if (peek().kind == Token::plus || peek().kind == Token::minus) {
      negate = next().kind == Token::minus;
    }
    Value first = term();
    if (negate && first.frac) first.frac = *first.frac * FracElement::constant(ctx_, -1);
    if (peek().kind != Token::plus && peek().kind != Token::minus) return first;

    Poly sum = as_poly(first, start);
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool minus = next().kind == Token::minus;
      std::size_t pos = peek().pos;
      Poly t = as_poly(term(), pos);
      if (minus) {
        sum -= t;
      } else {
        sum += t;
      }
    }
    if (sum.is_zero()) return Value{};
    return Value{FracElement::from_poly(sum)};
  }

  static bool starts_atom(const Token& t) {
    return t.kind == Token::number || t.kind == Token::ident || t.kind == Token::lparen;
  }

  Value term() {
    Value acc = power();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::star) {
        next();
        acc = multiply(acc, power());
      } else if (t.kind == Token::slash) {
        std::size_t pos = next().pos;
        Value d = power();
        if (!d.frac) throw ParseError("division by zero", pos);
        if (acc.frac) acc.frac = *acc.frac / *d.frac;
      } else if (starts_atom(t)) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  static Value multiply(const Value& a, const Value& b) {
    if (!a.frac || !b.frac) return Value{};
    return Value{*a.frac * *b.frac};
  }

  Value power() {
    Value base = atom();
    if (peek().kind != Token::caret) return base;
    next();
    bool neg = false;
    bool paren = false;
    if (peek().kind == Token::lparen) {
      paren = true;
      next();
    }
    if (peek().kind == Token::minus || peek().kind == Token::plus) neg = next().kind == Token::minus;
    const Token& t = next();
    if (t.kind != Token::number) throw ParseError("expected integer exponent", t.pos);
    if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
    int e = std::stoi(t.text);
    if (neg) e = -e;
    if (paren) {
      const Token& r = next();
      if (r.kind != Token::rparen) throw ParseError("expected ')'", r.pos);
    }
    if (!base.frac) {
      if (e < 0) throw ParseError("zero raised to a negative power", t.pos);
      return e == 0 ? Value{FracElement(ctx_)} : Value{};
    }
    return Value{base.frac->pow(e)};
  }

  Value atom() {
    const Token& t = next();
    switch (t.kind) {
      case Token::number: {
        Rat r(Int(t.text));
        if (r == 0) return Value{};
        return Value{FracElement::constant(ctx_, r)};
      }
      case Token::ident: {
        auto idx = ctx_->index_of(t.text);
        if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return Value{FracElement::variable(ctx_, *idx)};
      }
      case Token::lparen: {
        Value v = expr();
        const Token& r = next();
        if (r.kind != Token::rparen) throw ParseError("expected ')'", r.pos);
        return v;
      }
      default:
        throw ParseError(t.kind == Token::end ? "unexpected end of input"
                                              : "unexpected '" + t.text + "'",
                         t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ContextPtr ctx_;
};

std::string mono_text(const Mono& m, const VarContext& ctx) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ctx.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string factor_text(const Factor& f, const VarContext& ctx, int exponent) {
  std::string base;
  if (auto v = f.poly.as_variable()) {
    base = ctx.name(*v);
  } else {
    base = "(" + to_string(f.poly) + ")";
  }
  if (exponent != 1) base += '^' + std::to_string(exponent);
  return base;
}

}  // namespace

Poly parse_poly(std::string_view text, const ContextPtr& ctx) {
  Parser p(text, ctx);
  Value v = p.parse_all();
  if (!v.frac) return Poly(ctx);
  if (!v.frac->is_integral()) throw ParseError("expression is not a polynomial", 0);
  return expand(FactoredElement(*v.frac));
}

FracElement parse_frac(std::string_view text, const ContextPtr& ctx) {
  Parser p(text, ctx);
  Value v = p.parse_all();
  if (!v.frac) throw ParseError("zero has no factored form", 0);
  return *v.frac;
}

FactoredElement parse_factored(std::string_view text, const ContextPtr& ctx) {
  FracElement f = parse_frac(text, ctx);
  if (!f.is_integral()) throw ParseError("negative exponent in a ring element", 0);
  return FactoredElement(f);
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const VarContext& ctx = *p.context();
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = abs(c);
    std::string body;
    if (m.is_one()) {
      body = to_string(a);
    } else if (a == 1) {
      body = mono_text(m, ctx);
    } else {
      body = to_string(a) + "*" + mono_text(m, ctx);
    }
    if (first) {
      s = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

std::string to_string(const FracElement& f) {
  const VarContext& ctx = *f.context();
  std::vector<std::string> num, den;
  for (const auto& fac : f.factors()) {
    if (fac.exponent > 0) {
      num.push_back(factor_text(fac, ctx, fac.exponent));
    } else {
      den.push_back(factor_text(fac, ctx, -fac.exponent));
    }
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
      if (!s.empty()) s += '*';
      s += p;
    }
    return s;
  };
  std::string s;
  if (num.empty()) {
    s = to_string(f.unit());
  } else if (f.unit() == 1) {
    s = join(num);
  } else if (f.unit() == -1) {
    s = "-" + join(num);
  } else {
    s = to_string(f.unit()) + "*" + join(num);
  }
  if (den.size() == 1) {
    s += "/" + den.front();
  } else if (den.size() > 1) {
    s += "/(" + join(den) + ")";
  }
  return s;
}

std::string to_string(const FactoredElement& f) { return to_string(f.as_fraction()); }

}  // namespace chow
