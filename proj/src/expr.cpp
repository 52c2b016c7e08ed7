#include "birat/expr.hpp"

#include <cctype>

namespace birat {

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = TokKind::integer;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      t.kind = TokKind::ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = TokKind::symbol;
      t.text = "->";
      advance(2);
    } else if (std::string("+-*^/()[]{},;=:").find(c) != std::string::npos) {
      t.kind = TokKind::symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = TokKind::end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

namespace {

// grammar: sum of products of powers; '/' only between integer literals;
// unary minus binds a whole product, '^' binds tightest
struct ExprParser {
  const RingPtr& ring;
  const std::vector<Token>& toks;
  std::size_t& pos;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  bool at_symbol(const char* s) const {
    return peek().kind == TokKind::symbol && peek().text == s;
  }

  Poly parse_sum() {
    bool negate = false;
    if (at_symbol("-")) {
      take();
      negate = true;
    } else if (at_symbol("+")) {
      take();
    }
    Poly acc = parse_product();
    if (negate) acc = neg(acc);
    while (at_symbol("+") || at_symbol("-")) {
      bool minus = take().text == "-";
      Poly rhs = parse_product();
      acc = minus ? sub(acc, rhs) : add(acc, rhs);
    }
    return acc;
  }

  Poly parse_product() {
    Poly acc = parse_power();
    while (at_symbol("*")) {
      take();
      acc = mul(acc, parse_power());
    }
    return acc;
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (at_symbol("^")) {
      take();
      if (peek().kind != TokKind::integer) fail("exponent must be a nonnegative integer");
      unsigned long e = std::stoul(take().text);
      return pow(base, e);
    }
    return base;
  }

  Poly parse_atom() {
    const Field& F = ring->field();
    if (peek().kind == TokKind::integer) {
      std::string num = take().text;
      if (at_symbol("/")) {
        take();
        if (peek().kind != TokKind::integer) fail("expected integer denominator");
        std::string den = take().text;
        mpq_class q(num + "/" + den);
        if (q.get_den() == 0) fail("zero denominator");
        q.canonicalize();
        return Poly::constant(ring, F.from_mpq(q));
      }
      return Poly::constant(ring, F.from_mpq(mpq_class(num)));
    }
    if (peek().kind == TokKind::ident) {
      Token t = take();
      long v = ring->var_index(t.text);
      if (v < 0) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      return Poly::variable(ring, static_cast<std::size_t>(v));
    }
    if (at_symbol("(")) {
      take();
      Poly inner = parse_sum();
      if (!at_symbol(")")) fail("expected ')'");
      take();
      return inner;
    }
    fail("expected a polynomial term");
  }
};

}  // namespace

Poly parse_poly_at(const RingPtr& ring, const std::vector<Token>& toks, std::size_t& pos) {
  ExprParser p{ring, toks, pos};
  return p.parse_sum();
}

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  std::size_t pos = 0;
  Poly out = parse_poly_at(ring, toks, pos);
  if (toks[pos].kind != TokKind::end)
    throw ParseError("trailing input after expression", toks[pos].line, toks[pos].col);
  return out;
}

}  // namespace birat
