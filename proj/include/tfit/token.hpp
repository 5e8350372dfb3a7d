#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfit/source_loc.hpp"

namespace tfit {

enum class Tok {
  // keywords
  Let, Func, If, Else, For, In, Return, Assert, True, False, ShapeKw, RankKw,
  // literals / names
  Ident, IntLit, Hole,
  // punctuation and operators
  LParen, RParen, LBrack, RBrack, LBrace, RBrace, Comma, Colon, Dot,
  Arrow,        // ->
  ShapeAssert,  // |->
  Range,        // ..<
  Assign,       // =
  EqEq, NotEq, Lt, Le, Gt, Ge,
  Plus, Minus, Star, Slash,
  AndAnd, OrOr, Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;        // identifier spelling / literal spelling
  std::int64_t int_value = 0;
  SourceLoc loc;
};

const char* tok_name(Tok t);

// Lexes `source` into a token stream terminated by an End token. The
// four-underscore identifier `____` lexes as a Hole token; any other
// underscore-bearing name is an ordinary identifier.
std::vector<Token> tokenize(const std::string& source, const std::string& file);

}  // namespace tfit
