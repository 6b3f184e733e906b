// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

// Private shared lexer for the theory, program, and non-ground grammars.

#ifndef HTEQ_SRC_LEXER_HPP
#define HTEQ_SRC_LEXER_HPP

#include <cctype>
#include <string>

#include "hteq/syntax.hpp"

namespace hteq::detail {

enum class Tok {
  End,
  Ident,
  Var,      // uppercase-initial identifier (non-ground grammar)
  Bottom,   // #f
  Top,      // #t
  And,      // &
  Or,       // |
  Impl,     // ->
  Equiv,    // <->
  Neg,      // -
  LParen,
  RParen,
  Dot,
  Comma,
  If,       // :-
  Not,      // keyword not
};

struct Lexer {
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  Tok tok = Tok::End;
  std::string ident;
  int line = 1, col = 1;       // position of current token
  int cur_line = 1, cur_col = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  void advance() {
    skip_ws();
    line = cur_line;
    col = cur_col;
    if (pos_ >= text_.size()) {
      tok = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word += text_[pos_];
        bump();
      }
      if (word == "not") {
        tok = Tok::Not;
      } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
        tok = Tok::Var;
        ident = word;
      } else {
        tok = Tok::Ident;
        ident = word;
      }
      return;
    }
    switch (c) {
      case '#':
        bump();
        if (pos_ < text_.size() && text_[pos_] == 'f') {
          bump();
          tok = Tok::Bottom;
        } else if (pos_ < text_.size() && text_[pos_] == 't') {
          bump();
          tok = Tok::Top;
        } else {
          throw ParseError("expected #f or #t", line, col);
        }
        return;
      case '&':
        bump();
        tok = Tok::And;
        return;
      case '|':
        bump();
        tok = Tok::Or;
        return;
      case '(':
        bump();
        tok = Tok::LParen;
        return;
      case ')':
        bump();
        tok = Tok::RParen;
        return;
      case '.':
        bump();
        tok = Tok::Dot;
        return;
      case ',':
        bump();
        tok = Tok::Comma;
        return;
      case '-':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          bump();
          tok = Tok::Impl;
        } else {
          tok = Tok::Neg;
        }
        return;
      case '<':
        bump();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
            text_[pos_ + 1] == '>') {
          bump();
          bump();
          tok = Tok::Equiv;
        } else {
          throw ParseError("expected <->", line, col);
        }
        return;
      case ':':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '-') {
          bump();
          tok = Tok::If;
        } else {
          throw ParseError("expected :-", line, col);
        }
        return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
  }

 private:
  void bump() {
    if (text_[pos_] == '\n') {
      ++cur_line;
      cur_col = 1;
    } else {
      ++cur_col;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};


}  // namespace hteq::detail

#endif  // HTEQ_SRC_LEXER_HPP
