#pragma once

// Tokenizer shared by the Kotlin and Java frontends. Keywords are plain
// identifiers; each parser decides what is reserved.

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "depends/errors.hpp"

namespace depends {

enum class TokenKind { Identifier, Integer, Decimal, String, Char, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
  bool newline_before = false;

  bool is(std::string_view s) const {
    return (kind == TokenKind::Symbol || kind == TokenKind::Identifier) && text == s;
  }
};

class Lexer {
 public:
  Lexer(std::string_view source, std::string path) : src_(source), path_(std::move(path)) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    bool newline = true;
    while (true) {
      newline = skip_trivia() || newline;
      Token tok;
      tok.line = line_;
      tok.column = column_;
      tok.newline_before = newline;
      newline = false;
      if (pos_ >= src_.size()) {
        tok.kind = TokenKind::End;
        out.push_back(std::move(tok));
        break;
      }
      char c = src_[pos_];
      if (is_ident_start(c)) {
        tok.kind = TokenKind::Identifier;
        tok.text = take_while([](char ch) { return is_ident_part(ch); });
      } else if (c == '`') {
        advance();
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '`' && src_[pos_] != '\n') advance();
        if (pos_ >= src_.size() || src_[pos_] != '`') fail(tok, "unterminated backtick identifier");
        tok.kind = TokenKind::Identifier;
        tok.text = std::string(src_.substr(start, pos_ - start));
        advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(tok);
      } else if (c == '"') {
        lex_string(tok);
      } else if (c == '\'') {
        lex_char(tok);
      } else {
        lex_symbol(tok);
      }
      out.push_back(std::move(tok));
    }
    check_balance(out);
    return out;
  }

 private:
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
           (static_cast<unsigned char>(c) & 0x80) != 0;
  }
  static bool is_ident_part(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::size_t start = pos_;
    while (pos_ < src_.size() && pred(src_[pos_])) advance();
    return std::string(src_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(path_, at.line, at.column, message);
  }

  // Returns true if a newline was crossed.
  bool skip_trivia() {
    bool newline = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        newline = true;
        advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        Token at;
        at.line = line_;
        at.column = column_;
        advance();
        advance();
        int depth = 1;  // Kotlin block comments nest
        while (depth > 0) {
          if (pos_ >= src_.size()) fail(at, "unterminated block comment");
          if (src_[pos_] == '*' && peek(1) == '/') {
            --depth;
            advance();
            advance();
          } else if (src_[pos_] == '/' && peek(1) == '*') {
            ++depth;
            advance();
            advance();
          } else {
            if (src_[pos_] == '\n') newline = true;
            advance();
          }
        }
      } else {
        break;
      }
    }
    return newline;
  }

  void lex_number(Token& tok) {
    std::size_t start = pos_;
    bool decimal = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      advance();
      advance();
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        decimal = true;
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        decimal = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    char suffix = peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      decimal = true;
      advance();
    } else if (suffix == 'L' || suffix == 'l') {
      advance();
    }
    tok.kind = decimal ? TokenKind::Decimal : TokenKind::Integer;
    tok.text = std::string(src_.substr(start, pos_ - start));
  }

  void lex_string(Token& tok) {
    std::size_t start = pos_;
    tok.kind = TokenKind::String;
    if (peek(1) == '"' && peek(2) == '"') {
      advance();
      advance();
      advance();
      while (!(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
        if (pos_ >= src_.size()) fail(tok, "unterminated raw string literal");
        advance();
      }
      advance();
      advance();
      advance();
      while (peek() == '"') advance();
    } else {
      advance();
      skip_string_body(tok);
    }
    tok.text = std::string(src_.substr(start, pos_ - start));
  }

  // Consumes up to and including the closing quote. Strings nested in a
  // ${...} template are consumed whole, so their braces and quotes do not
  // end the outer literal.
  void skip_string_body(Token& tok) {
    int template_depth = 0;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail(tok, "unterminated string literal");
      char c = src_[pos_];
      if (c == '\\') {
        advance();
        if (pos_ < src_.size()) advance();
        continue;
      }
      if (c == '$' && peek(1) == '{') {
        ++template_depth;
        advance();
        advance();
        continue;
      }
      advance();
      if (c == '"') {
        if (template_depth == 0) return;
        skip_string_body(tok);
        continue;
      }
      if (template_depth > 0 && c == '{') ++template_depth;
      if (template_depth > 0 && c == '}') --template_depth;
    }
  }

  void lex_char(Token& tok) {
    std::size_t start = pos_;
    tok.kind = TokenKind::Char;
    advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail(tok, "unterminated character literal");
      if (src_[pos_] == '\\') {
        advance();
        if (pos_ < src_.size()) advance();
        continue;
      }
      if (src_[pos_] == '\'') {
        advance();
        break;
      }
      advance();
    }
    tok.text = std::string(src_.substr(start, pos_ - start));
  }

  void lex_symbol(Token& tok) {
    static constexpr std::array<std::string_view, 25> kMulti{
        "===", "!==", "...", "?.", "?:", "!!", "->", "::", "==", "!=", "<=", ">=", "&&",
        "||",  "++",  "--",  "+=", "-=", "*=", "/=", "%=", "..", "&=", "|=", "^="};
    tok.kind = TokenKind::Symbol;
    for (std::string_view m : kMulti) {
      if (src_.substr(pos_, m.size()) == m) {
        for (std::size_t i = 0; i < m.size(); ++i) advance();
        tok.text = std::string(m);
        return;
      }
    }
    tok.text = std::string(1, src_[pos_]);
    advance();
  }

  void check_balance(const std::vector<Token>& tokens) const {
    std::vector<const Token*> stack;
    for (const Token& t : tokens) {
      if (t.kind != TokenKind::Symbol || t.text.size() != 1) continue;
      char c = t.text[0];
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(&t);
      } else if (c == ')' || c == ']' || c == '}') {
        char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (stack.empty()) fail(t, std::string("unmatched '") + c + "'");
        if (stack.back()->text[0] != open) {
          fail(t, std::string("mismatched '") + c + "' (opened '" + stack.back()->text + "' at line " +
                      std::to_string(stack.back()->line) + ")");
        }
        stack.pop_back();
      }
    }
    if (!stack.empty()) fail(*stack.back(), "unclosed '" + stack.back()->text + "'");
  }

  std::string_view src_;
  std::string path_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline std::vector<Token> tokenize(std::string_view source, const std::string& path) {
  return Lexer(source, path).tokenize();
}

}  // namespace depends
