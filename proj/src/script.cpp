#include "birat/script.hpp"

#include <set>

#include "birat/expr.hpp"

namespace birat {

namespace {

struct ScriptParser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  SessionScript out;

  const Token& cur() const { return toks[pos]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }

  bool is_sym(const char* s) const {
    return cur().kind == TokKind::symbol && cur().text == s;
  }

  void expect_sym(const char* s, const std::string& where) {
    if (!is_sym(s)) fail("expected '" + std::string(s) + "' " + where);
    ++pos;
  }

  std::string expect_ident(const std::string& what) {
    if (cur().kind != TokKind::ident) fail("expected " + what);
    return toks[pos++].text;
  }

  void run() {
    while (cur().kind != TokKind::end) {
      if (cur().kind != TokKind::ident) fail("expected a declaration or a command");
      if (cur().text == "ring")
        parse_ring();
      else if (cur().text == "map")
        parse_map();
      else
        parse_command();
    }
  }

  Field parse_field() {
    int line = cur().line, col = cur().col;
    std::string f = expect_ident("a coefficient field, QQ or GF(p)");
    if (f == "QQ") return Field::rationals();
    if (f == "GF") {
      expect_sym("(", "after GF");
      if (cur().kind != TokKind::integer) fail("expected a prime inside GF(...)");
      unsigned long p = 0;
      try {
        p = std::stoul(toks[pos].text);
      } catch (const std::exception&) {
        fail("prime out of range");
      }
      ++pos;
      expect_sym(")", "after the prime");
      try {
        return Field::prime(static_cast<std::uint32_t>(p > 0xffffffffUL ? 0 : p));
      } catch (const Error& e) {
        throw ParseError(e.what(), line, col);
      }
    }
    throw ParseError("unknown coefficient field '" + f + "'", line, col);
  }

  void parse_ring() {
    int line = cur().line, col = cur().col;
    ++pos;
    std::string name = expect_ident("a ring name");
    if (out.rings.count(name)) fail("ring '" + name + "' is already declared");
    expect_sym("=", "after the ring name");
    Field k = parse_field();
    expect_sym("[", "before the variable list");
    std::vector<std::string> vars;
    for (;;) {
      vars.push_back(expect_ident("a variable name"));
      if (!is_sym(",")) break;
      ++pos;
    }
    expect_sym("]", "after the variable list");
    RingPtr R;
    try {
      R = Ring::standard(k, std::move(vars));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, col);
    }
    std::vector<Poly> gens;
    if (is_sym("/")) {
      ++pos;
      expect_sym("(", "before the ideal generators");
      for (;;) {
        gens.push_back(parse_poly_at(R, toks, pos));
        if (!is_sym(",")) break;
        ++pos;
      }
      expect_sym(")", "after the ideal generators");
    }
    expect_sym(";", "after the ring declaration");
    try {
      out.rings.emplace(name, Variety(R, std::move(gens)));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, col);
    }
    out.ring_names.push_back(std::move(name));
  }

  void parse_map() {
    int line = cur().line, col = cur().col;
    ++pos;
    std::string name = expect_ident("a map name");
    if (out.maps.count(name)) fail("map '" + name + "' is already declared");
    expect_sym(":", "after the map name");
    std::string src = expect_ident("a source ring name");
    if (!out.rings.count(src)) fail("ring '" + src + "' is not declared");
    expect_sym("->", "between source and target");
    std::string dst = expect_ident("a target ring name");
    if (!out.rings.count(dst)) fail("ring '" + dst + "' is not declared");
    expect_sym("=", "before the defining forms");
    expect_sym("[", "before the defining forms");
    const RingPtr& R = out.rings.at(src).ring();
    std::vector<Poly> forms;
    for (;;) {
      forms.push_back(parse_poly_at(R, toks, pos));
      if (!is_sym(",")) break;
      ++pos;
    }
    expect_sym("]", "after the defining forms");
    expect_sym(";", "after the map declaration");
    try {
      out.maps.emplace(name,
                       RationalMap(out.rings.at(src), out.rings.at(dst), std::move(forms)));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, col);
    }
    out.map_names.push_back(std::move(name));
  }

  void parse_command() {
    SessionScript::Command c;
    c.line = cur().line;
    c.col = cur().col;
    c.name = expect_ident("a command");
    while (is_sym("-")) {
      ++pos;
      c.name += "-" + expect_ident("the rest of the command name");
    }
    while (cur().kind == TokKind::ident || cur().kind == TokKind::integer)
      c.args.push_back(toks[pos++].text);
    expect_sym(";", "after the command");
    validate_command(c);
    out.commands.push_back(std::move(c));
  }

  void validate_command(const SessionScript::Command& c) {
    static const std::set<std::string> one_map = {"base-locus",    "image",  "is-dominant",
                                                  "is-birational", "inverse", "is-embedding",
                                                  "rees",          "jacobian-dual"};
    auto check_map = [&](const std::string& m) {
      if (!out.maps.count(m))
        throw ParseError("map '" + m + "' is not declared", c.line, c.col);
    };
    if (one_map.count(c.name)) {
      if (c.args.size() != 1)
        throw ParseError("command '" + c.name + "' takes one map name", c.line, c.col);
      check_map(c.args[0]);
    } else if (c.name == "is-same") {
      if (c.args.size() != 2)
        throw ParseError("is-same takes two map names", c.line, c.col);
      check_map(c.args[0]);
      check_map(c.args[1]);
    } else if (c.name == "bench-gabber") {
      if (c.args.size() != 2)
        throw ParseError("bench-gabber takes two integers", c.line, c.col);
      for (const auto& a : c.args)
        if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bench-gabber takes two integers", c.line, c.col);
    } else {
      throw ParseError("unknown command '" + c.name + "'", c.line, c.col);
    }
  }
};

}  // namespace

const Variety& SessionScript::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw ValidationError("ring '" + name + "' is not declared");
  return it->second;
}

const RationalMap& SessionScript::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw ValidationError("map '" + name + "' is not declared");
  return it->second;
}

SessionScript parse_script(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  ScriptParser p{toks};
  p.run();
  return std::move(p.out);
}

}  // namespace birat
