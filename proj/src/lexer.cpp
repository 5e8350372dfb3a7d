#include "tfit/token.hpp"

#include <cctype>
#include <unordered_map>

namespace tfit {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Let: return "'let'";
    case Tok::Func: return "'func'";
    case Tok::If: return "'if'";
    case Tok::Else: return "'else'";
    case Tok::For: return "'for'";
    case Tok::In: return "'in'";
    case Tok::Return: return "'return'";
    case Tok::Assert: return "'assert'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::ShapeKw: return "'shape'";
    case Tok::RankKw: return "'rank'";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::Hole: return "'____'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::ShapeAssert: return "'|->'";
    case Tok::Range: return "'..<'";
    case Tok::Assign: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Bang: return "'!'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string, Tok>& keywords() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"let", Tok::Let},       {"func", Tok::Func},     {"if", Tok::If},
      {"else", Tok::Else},     {"for", Tok::For},       {"in", Tok::In},
      {"return", Tok::Return}, {"assert", Tok::Assert}, {"true", Tok::True},
      {"false", Tok::False},   {"shape", Tok::ShapeKw}, {"rank", Tok::RankKw},
  };
  return kw;
}

}  // namespace

std::vector<Token> tokenize(const std::string& source, const std::string& file) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto loc_here = [&] { return SourceLoc{file, line, col}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (i < source.size() && source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto peek = [&](size_t off) -> char {
    return i + off < source.size() ? source[i + off] : '\0';
  };
  auto push = [&](Tok k, SourceLoc loc, std::string text = {}) {
    out.push_back(Token{k, std::move(text), 0, std::move(loc)});
  };

  while (i < source.size()) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    SourceLoc loc = loc_here();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
        num += source[i];
        advance(1);
      }
      Token t{Tok::IntLit, num, 0, loc};
      t.int_value = std::stoll(num);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
        id += source[i];
        advance(1);
      }
      if (id == "____") {
        push(Tok::Hole, loc, id);
      } else if (auto it = keywords().find(id); it != keywords().end()) {
        push(it->second, loc, id);
      } else {
        push(Tok::Ident, loc, id);
      }
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, loc); advance(1); continue;
      case ')': push(Tok::RParen, loc); advance(1); continue;
      case '[': push(Tok::LBrack, loc); advance(1); continue;
      case ']': push(Tok::RBrack, loc); advance(1); continue;
      case '{': push(Tok::LBrace, loc); advance(1); continue;
      case '}': push(Tok::RBrace, loc); advance(1); continue;
      case ',': push(Tok::Comma, loc); advance(1); continue;
      case ':': push(Tok::Colon, loc); advance(1); continue;
      case '+': push(Tok::Plus, loc); advance(1); continue;
      case '*': push(Tok::Star, loc); advance(1); continue;
      case '/': push(Tok::Slash, loc); advance(1); continue;
      case '.':
        if (peek(1) == '.' && peek(2) == '<') {
          push(Tok::Range, loc);
          advance(3);
        } else {
          push(Tok::Dot, loc);
          advance(1);
        }
        continue;
      case '-':
        if (peek(1) == '>') {
          push(Tok::Arrow, loc);
          advance(2);
        } else {
          push(Tok::Minus, loc);
          advance(1);
        }
        continue;
      case '|':
        if (peek(1) == '-' && peek(2) == '>') {
          push(Tok::ShapeAssert, loc);
          advance(3);
        } else if (peek(1) == '|') {
          push(Tok::OrOr, loc);
          advance(2);
        } else {
          throw CompileError(loc, "unrecognized character '|' (did you mean '||' or '|->'?)");
        }
        continue;
      case '&':
        if (peek(1) == '&') {
          push(Tok::AndAnd, loc);
          advance(2);
        } else {
          throw CompileError(loc, "unrecognized character '&' (did you mean '&&'?)");
        }
        continue;
      case '=':
        if (peek(1) == '=') {
          push(Tok::EqEq, loc);
          advance(2);
        } else {
          push(Tok::Assign, loc);
          advance(1);
        }
        continue;
      case '!':
        if (peek(1) == '=') {
          push(Tok::NotEq, loc);
          advance(2);
        } else {
          push(Tok::Bang, loc);
          advance(1);
        }
        continue;
      case '<':
        if (peek(1) == '=') {
          push(Tok::Le, loc);
          advance(2);
        } else {
          push(Tok::Lt, loc);
          advance(1);
        }
        continue;
      case '>':
        if (peek(1) == '=') {
          push(Tok::Ge, loc);
          advance(2);
        } else {
          push(Tok::Gt, loc);
          advance(1);
        }
        continue;
      default:
        throw CompileError(loc, std::string("unrecognized character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", 0, loc_here()});
  return out;
}

}  // namespace tfit
