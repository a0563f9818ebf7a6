#include "lpod/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace lpod {

namespace {

enum class Tok {
  Ident,
  NotKw,
  HashFalse,
  HashTrue,
  Dot,
  ColonDash,
  Arrow,
  Star,
  Semi,
  Pipe,
  Amp,
  Comma,
  Tilde,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "atom";
    case Tok::NotKw: return "'not'";
    case Tok::HashFalse: return "'#false'";
    case Tok::HashTrue: return "'#true'";
    case Tok::Dot: return "'.'";
    case Tok::ColonDash: return "':-'";
    case Tok::Arrow: return "'->'";
    case Tok::Star: return "'*'";
    case Tok::Semi: return "';'";
    case Tok::Pipe: return "'|'";
    case Tok::Amp: return "'&'";
    case Tok::Comma: return "','";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    int line = line_, col = col_;
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        word += text_[pos_];
        advance();
      }
      if (word == "not") return {Tok::NotKw, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    if (c == '#') {
      std::string word = "#";
      advance();
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        word += text_[pos_];
        advance();
      }
      if (word == "#false") return {Tok::HashFalse, word, line, col};
      if (word == "#true") return {Tok::HashTrue, word, line, col};
      throw SyntaxError("unknown token '" + word + "'", line, col);
    }
    switch (c) {
      case '.': advance(); return {Tok::Dot, ".", line, col};
      case '*': advance(); return {Tok::Star, "*", line, col};
      case ';': advance(); return {Tok::Semi, ";", line, col};
      case '|': advance(); return {Tok::Pipe, "|", line, col};
      case '&': advance(); return {Tok::Amp, "&", line, col};
      case ',': advance(); return {Tok::Comma, ",", line, col};
      case '~': advance(); return {Tok::Tilde, "~", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case ':':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          advance();
          return {Tok::ColonDash, ":-", line, col};
        }
        throw SyntaxError("expected ':-'", line, col);
      case '-':
        advance();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        throw SyntaxError("expected '->'", line, col);
      default:
        if (std::isupper(static_cast<unsigned char>(c)))
          throw SyntaxError("unexpected uppercase identifier (variables are not supported)",
                            line, col);
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program theory() {
    std::vector<FormulaPtr> statements;
    std::vector<SourcePos> positions;
    while (peek().kind != Tok::End) {
      SourcePos pos{peek().line, peek().column};
      statements.push_back(statement());
      positions.push_back(pos);
    }
    Program p = make_program(std::move(statements));
    p.statement_pos = std::move(positions);
    return p;
  }

  FormulaPtr single_formula() {
    FormulaPtr f = formula();
    expect(Tok::End);
    return f;
  }

 private:
  FormulaPtr statement() {
    if (peek().kind == Tok::ColonDash) {
      advance();
      FormulaPtr body = formula();
      expect(Tok::Dot);
      return implies(body, bottom());
    }
    FormulaPtr first = formula();
    if (peek().kind == Tok::ColonDash) {
      advance();
      FormulaPtr body = formula();
      expect(Tok::Dot);
      return implies(body, first);
    }
    expect(Tok::Dot);
    return first;
  }

  FormulaPtr formula() {  // impl, right-associative
    FormulaPtr l = disjunction();
    if (peek().kind == Tok::Arrow) {
      advance();
      return implies(l, formula());
    }
    return l;
  }

  FormulaPtr disjunction() {
    FormulaPtr acc = ordered_disjunction();
    while (peek().kind == Tok::Semi || peek().kind == Tok::Pipe) {
      advance();
      acc = disj(acc, ordered_disjunction());
    }
    return acc;
  }

  FormulaPtr ordered_disjunction() {
    FormulaPtr acc = conjunction();
    while (peek().kind == Tok::Star) {
      advance();
      acc = ordered(acc, conjunction());
    }
    return acc;
  }

  FormulaPtr conjunction() {
    FormulaPtr acc = negation();
    while (peek().kind == Tok::Amp || peek().kind == Tok::Comma) {
      advance();
      acc = conj(acc, negation());
    }
    return acc;
  }

  FormulaPtr negation() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
      case Tok::NotKw:
        advance();
        return neg(negation());
      case Tok::LParen: {
        advance();
        FormulaPtr f = formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Ident: {
        FormulaPtr f = atom(t.text);
        advance();
        return f;
      }
      case Tok::HashFalse:
        advance();
        return bottom();
      case Tok::HashTrue:
        advance();
        return top();
      default:
        throw SyntaxError(std::string("expected a formula, found ") + describe(t.kind),
                          t.line, t.column);
    }
  }

  const Token& peek() const { return toks_[i_]; }
  void advance() { ++i_; }

  void expect(Tok k) {
    if (peek().kind != k)
      throw SyntaxError(std::string("expected ") + describe(k) + ", found " +
                            describe(peek().kind),
                        peek().line, peek().column);
    if (k != Tok::End) advance();
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse_theory(std::string_view text) {
  return Parser(Lexer(text).run()).theory();
}

FormulaPtr parse_formula(std::string_view text) {
  return Parser(Lexer(text).run()).single_formula();
}

}  // namespace lpod
