#pragma once

#include <string>
#include <vector>

#include "birat/poly.hpp"

namespace birat {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

enum class TokKind { integer, ident, symbol, end };

struct Token {
  TokKind kind = TokKind::end;
  std::string text;
  int line = 1;
  int col = 1;
};

// shared tokenizer for polynomial expressions and session scripts;
// symbols: + - * ^ / ( ) [ ] { } , ; = : and the two-character arrow ->
std::vector<Token> tokenize(const std::string& text);

// parse one polynomial expression over the given ring; the whole string must
// be consumed
Poly parse_poly(const RingPtr& ring, const std::string& text);

// parser core shared with the script layer: parses an expression starting at
// tokens[pos], advancing pos
Poly parse_poly_at(const RingPtr& ring, const std::vector<Token>& toks, std::size_t& pos);

}  // namespace birat
