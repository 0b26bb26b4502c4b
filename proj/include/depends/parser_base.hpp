#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "depends/ast.hpp"
#include "depends/lexer.hpp"

namespace depends::detail {

/// Recoverable syntax problem: the enclosing statement or member is skipped.
struct SyntaxIssue : std::runtime_error {
  SyntaxIssue(const Token& at, const std::string& message)
      : std::runtime_error(message), line(at.line), column(at.column) {}
  int line;
  int column;
};

class ParserBase {
 protected:
  ParserBase(std::vector<Token> tokens, std::string path)
      : tokens_(std::move(tokens)), path_(std::move(path)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool at(std::string_view text) const { return peek().is(text); }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool accept(std::string_view text) {
    if (!at(text)) return false;
    next();
    return true;
  }

  const Token& expect(std::string_view text) {
    if (!at(text)) fail("expected '" + std::string(text) + "' but found '" + describe(peek()) + "'");
    return next();
  }

  bool at_identifier() const { return peek().kind == TokenKind::Identifier; }

  std::string expect_identifier() {
    if (!at_identifier()) fail("expected identifier but found '" + describe(peek()) + "'");
    return next().text;
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxIssue(peek(), message); }

  static std::string describe(const Token& t) { return t.kind == TokenKind::End ? "<eof>" : t.text; }

  ast::Pos pos_of(const Token& t) const { return {t.line, t.column}; }
  ast::Pos here() const { return pos_of(peek()); }

  void diagnose(int line, int column, const std::string& message) {
    diagnostics_.push_back({path_, line, column, message});
  }
  void diagnose(const SyntaxIssue& issue) { diagnose(issue.line, issue.column, issue.what()); }

  /// Skips a balanced `open ... close` group starting at the current token.
  void skip_group() {
    int depth = 0;
    do {
      const Token& t = next();
      if (t.is("(") || t.is("[") || t.is("{")) ++depth;
      if (t.is(")") || t.is("]") || t.is("}")) --depth;
      if (t.kind == TokenKind::End) return;
    } while (depth > 0);
  }

  /// Skips `<...>` type arguments, tolerating nested brackets and `->`.
  void skip_angle_group() {
    int depth = 0;
    do {
      const Token& t = next();
      if (t.is("<")) ++depth;
      else if (t.is(">")) --depth;
      else if (t.is("(") || t.is("[") || t.is("{")) {
        --pos_;
        skip_group();
      } else if (t.kind == TokenKind::End) {
        return;
      }
    } while (depth > 0);
  }

  /// Consumes tokens up to the end of the current statement: a `;`, or a
  /// newline / closing brace at bracket depth zero. Always makes progress.
  void skip_statement(bool newline_terminates) {
    std::size_t start = pos_;
    while (!at_end()) {
      const Token& t = peek();
      if (pos_ != start) {
        if (t.is("}")) return;
        if (newline_terminates && t.newline_before) return;
      }
      if (t.is(";")) {
        next();
        return;
      }
      if (t.is("(") || t.is("[") || t.is("{")) {
        skip_group();
        if (!newline_terminates && previous().is("}")) return;
        continue;
      }
      if (t.is("}")) {
        // Unbalanced close at statement start belongs to the caller.
        return;
      }
      next();
    }
  }

  void record_issue_and_skip(const SyntaxIssue& issue, std::size_t restart, bool newline_terminates) {
    diagnose(issue);
    pos_ = restart;
    skip_statement(newline_terminates);
    if (pos_ == restart && !at_end() && !at("}")) next();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string path_;
  std::vector<ast::Diagnostic> diagnostics_;
};

}  // namespace depends::detail
