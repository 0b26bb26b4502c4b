#pragma once

// Recursive-descent parser for the Java subset: package/imports (incl.
// static), class/interface/enum/@interface declarations, fields, methods,
// constructors, annotations, and statement bodies with calls, `new`, casts,
// field access and local variables. No generics, inner classes or lambdas.

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "depends/ast.hpp"
#include "depends/lexer.hpp"
#include "depends/parser_base.hpp"

namespace depends {

using JavaAst = ast::SourceFile;

namespace detail {

class JavaParser : ParserBase {
 public:
  JavaParser(std::vector<Token> tokens, std::string path)
      : ParserBase(std::move(tokens), std::move(path)) {}

  ast::SourceFile parse() {
    ast::SourceFile file;
    file.path = path_;
    file.language = SourceLanguage::Java;
    file.line_count = tokens_.back().line;

    std::size_t start = pos_;
    parse_annotations();
    if (at("package")) {
      file.package_pos = here();
      next();
      file.package_name = dotted_name();
      expect_semicolon();
    } else {
      pos_ = start;
    }
    while (at("import")) {
      ast::Import imp;
      imp.pos = here();
      next();
      imp.is_static = accept("static");
      imp.path = dotted_name();
      if (at(".") && peek(1).is("*")) {
        next();
        next();
        imp.wildcard = true;
      }
      expect_semicolon();
      file.imports.push_back(std::move(imp));
    }
    while (!at_end()) {
      if (accept(";")) continue;
      std::size_t decl_start = pos_;
      try {
        if (!parse_member(file.decls, /*top_level=*/true))
          fail("expected a type declaration, found '" + describe(peek()) + "'");
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, decl_start, false);
        if (at("}")) next();
      }
    }
    file.diagnostics = std::move(diagnostics_);
    return file;
  }

 private:
  static bool is_modifier(std::string_view t) {
    static const std::unordered_set<std::string_view> kModifiers{
        "public", "private", "protected", "static",       "final",    "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default", "sealed", "non-sealed"};
    return kModifiers.count(t) != 0;
  }

  static bool is_primitive(std::string_view t) {
    static const std::unordered_set<std::string_view> kPrimitives{
        "int", "long", "double", "float", "boolean", "char", "byte", "short", "void"};
    return kPrimitives.count(t) != 0;
  }

  static bool is_keyword(std::string_view t) {
    static const std::unordered_set<std::string_view> kKeywords{
        "abstract", "assert", "break", "case", "catch", "class", "continue", "default", "do",
        "else", "enum", "extends", "final", "finally", "for", "if", "implements", "import",
        "instanceof", "interface", "native", "new", "package", "private", "protected", "public",
        "return", "static", "super", "switch", "synchronized", "this", "throw", "throws", "try",
        "volatile", "while", "true", "false", "null"};
    return kKeywords.count(t) != 0;
  }

  void expect_semicolon() { expect(";"); }

  std::string dotted_name() {
    std::string name = expect_identifier();
    while (at(".") && peek(1).kind == TokenKind::Identifier) {
      next();
      name += "." + next().text;
    }
    return name;
  }

  std::vector<ast::Annotation> parse_annotations() {
    std::vector<ast::Annotation> out;
    while (at("@") && !peek(1).is("interface")) {
      next();
      ast::Annotation a;
      a.pos = here();
      a.name = dotted_name();
      if (at("(")) skip_group();
      out.push_back(std::move(a));
    }
    return out;
  }

  std::vector<std::string> parse_modifiers(std::vector<ast::Annotation>& annotations) {
    std::vector<std::string> mods;
    while (true) {
      if (at("@") && !peek(1).is("interface")) {
        auto more = parse_annotations();
        annotations.insert(annotations.end(), more.begin(), more.end());
        continue;
      }
      if (at_identifier() && is_modifier(peek().text)) {
        mods.push_back(next().text);
        continue;
      }
      break;
    }
    return mods;
  }

  // ---- types ----------------------------------------------------------

  bool at_type_start() const {
    return at_identifier() && (is_primitive(peek().text) || !is_keyword(peek().text));
  }

  ast::TypeExpr parse_type() {
    ast::TypeExpr type;
    type.pos = here();
    if (!at_type_start()) fail("expected a type but found '" + describe(peek()) + "'");
    type.name = next().text;
    while (true) {
      if (at("<")) skip_angle_group();
      if (at(".") && peek(1).kind == TokenKind::Identifier) {
        next();
        type.name += "." + next().text;
        continue;
      }
      break;
    }
    while (at("[") && peek(1).is("]")) {
      next();
      next();
    }
    if (at("...")) next();
    return type;
  }

  /// Whether the tokens at `i` form `Type Identifier` (a declaration head).
  bool looks_like_declaration(std::size_t i) const {
    auto tok = [&](std::size_t k) -> const Token& { return k < tokens_.size() ? tokens_[k] : tokens_.back(); };
    if (tok(i).kind != TokenKind::Identifier) return false;
    if (!is_primitive(tok(i).text) && is_keyword(tok(i).text)) return false;
    ++i;
    while (true) {
      if (tok(i).is("<")) {
        int depth = 0;
        do {
          if (tok(i).is("<")) ++depth;
          else if (tok(i).is(">")) --depth;
          else if (!(tok(i).kind == TokenKind::Identifier || tok(i).is(",") || tok(i).is(".") ||
                     tok(i).is("?") || tok(i).is("[") || tok(i).is("]")))
            return false;
          ++i;
        } while (depth > 0);
        continue;
      }
      if (tok(i).is(".") && tok(i + 1).kind == TokenKind::Identifier) {
        i += 2;
        continue;
      }
      break;
    }
    while (tok(i).is("[") && tok(i + 1).is("]")) i += 2;
    if (tok(i).is("...")) ++i;
    return tok(i).kind == TokenKind::Identifier && !is_keyword(tok(i).text);
  }

  // ---- declarations -----------------------------------------------------

  bool parse_member(std::vector<ast::Decl>& out, bool top_level) {
    std::size_t start = pos_;
    std::vector<ast::Annotation> annotations;
    auto modifiers = parse_modifiers(annotations);
    if (at("class") || at("interface") || at("enum") || (at("@") && peek(1).is("interface"))) {
      out.push_back(parse_type_decl(std::move(annotations), std::move(modifiers)));
      return true;
    }
    if (top_level) {
      pos_ = start;
      return false;
    }
    if (at("{")) {
      diagnose(peek().line, peek().column, "initializer blocks are not supported; skipped");
      skip_group();
      return true;
    }
    if (at("<")) skip_angle_group();
    // Constructor: Name '('
    if (at_identifier() && peek(1).is("(") && peek().text == current_type_) {
      ast::Decl ctor;
      ctor.kind = ast::DeclKind::Function;
      ctor.is_constructor = true;
      ctor.annotations = std::move(annotations);
      ctor.modifiers = std::move(modifiers);
      ctor.pos = here();
      ctor.name = next().text;
      ctor.params = parse_params();
      finish_method(ctor);
      out.push_back(std::move(ctor));
      return true;
    }
    ast::TypeExpr type = parse_type();
    const Token& name_tok = peek();
    std::string name = expect_identifier();
    if (at("(")) {
      ast::Decl method;
      method.kind = ast::DeclKind::Function;
      method.annotations = std::move(annotations);
      method.modifiers = std::move(modifiers);
      method.pos = pos_of(name_tok);
      method.name = std::move(name);
      method.return_type = std::move(type);
      method.params = parse_params();
      while (at("[") && peek(1).is("]")) {
        next();
        next();
      }
      finish_method(method);
      out.push_back(std::move(method));
      return true;
    }
    // Field declarators
    while (true) {
      ast::Decl field;
      field.kind = ast::DeclKind::Property;
      field.annotations = annotations;
      field.modifiers = modifiers;
      field.pos = pos_of(name_tok);
      field.name = name;
      field.is_var = std::find(modifiers.begin(), modifiers.end(), "final") == modifiers.end();
      field.return_type = type;
      while (at("[") && peek(1).is("]")) {
        next();
        next();
      }
      if (accept("=")) field.initializer = parse_variable_initializer();
      field.end_line = previous().line;
      out.push_back(std::move(field));
      if (!accept(",")) break;
      name = expect_identifier();
    }
    expect_semicolon();
    return true;
  }

  ast::Expr parse_variable_initializer() {
    if (at("{")) {
      ast::Expr array;
      array.kind = ast::ExprKind::Unknown;
      array.pos = here();
      skip_group();
      return array;
    }
    return parse_expression();
  }

  void finish_method(ast::Decl& method) {
    if (accept("throws")) {
      do {
        parse_type();
      } while (accept(","));
    }
    if (accept("default")) parse_expression();  // annotation element default
    if (at("{")) {
      method.has_body = true;
      method.body = parse_block();
    } else {
      expect_semicolon();
    }
    method.end_line = previous().line;
  }

  std::vector<ast::Param> parse_params() {
    std::vector<ast::Param> params;
    expect("(");
    while (!at(")")) {
      ast::Param p;
      parse_modifiers(p.annotations);
      p.type = parse_type();
      p.pos = here();
      p.name = expect_identifier();
      while (at("[") && peek(1).is("]")) {
        next();
        next();
      }
      params.push_back(std::move(p));
      if (!accept(",")) break;
    }
    expect(")");
    return params;
  }

  ast::Decl parse_type_decl(std::vector<ast::Annotation> annotations, std::vector<std::string> modifiers) {
    ast::Decl decl;
    decl.kind = ast::DeclKind::Type;
    decl.annotations = std::move(annotations);
    decl.modifiers = std::move(modifiers);
    decl.pos = here();
    if (accept("@")) {
      next();  // interface
      decl.flavor = TypeFlavor::Annotation;
    } else {
      std::string head = next().text;
      decl.flavor = head == "interface" ? TypeFlavor::Interface
                    : head == "enum"    ? TypeFlavor::Enum
                                        : TypeFlavor::Class;
    }
    decl.name = expect_identifier();
    if (at("<")) skip_angle_group();
    if (accept("extends")) {
      do {
        ast::Supertype st;
        st.type = parse_type();
        st.clause = ast::Supertype::Clause::Extends;
        decl.supertypes.push_back(std::move(st));
      } while (accept(","));
    }
    if (accept("implements")) {
      do {
        ast::Supertype st;
        st.type = parse_type();
        st.clause = ast::Supertype::Clause::Implements;
        decl.supertypes.push_back(std::move(st));
      } while (accept(","));
    }
    if (at("permits")) fail("permits clauses are not supported");

    std::string saved_type = current_type_;
    current_type_ = decl.name;
    expect("{");
    if (decl.flavor == TypeFlavor::Enum) parse_enum_constants(decl);
    while (!at("}") && !at_end()) {
      if (accept(";")) continue;
      std::size_t start = pos_;
      try {
        std::vector<ast::Decl> members;
        parse_member(members, false);
        for (auto& m : members) {
          if (m.kind == ast::DeclKind::Type) {
            diagnose(m.pos.line, m.pos.column, "nested types are not supported; skipped");
            continue;
          }
          decl.members.push_back(std::move(m));
        }
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, start, false);
      }
    }
    decl.end_line = peek().line;
    expect("}");
    current_type_ = saved_type;
    return decl;
  }

  void parse_enum_constants(ast::Decl& decl) {
    while (true) {
      auto annotations = parse_annotations();
      if (!at_identifier() || is_keyword(peek().text) || looks_like_declaration(pos_)) break;
      ast::Decl constant;
      constant.kind = ast::DeclKind::Property;
      constant.is_enum_constant = true;
      constant.annotations = std::move(annotations);
      constant.pos = here();
      constant.name = next().text;
      constant.end_line = constant.pos.line;
      if (at("(")) {
        ast::Expr args;
        args.kind = ast::ExprKind::Unknown;
        args.pos = constant.pos;
        args.args = parse_args();
        constant.initializer = std::move(args);
      }
      if (at("{")) skip_group();
      decl.members.push_back(std::move(constant));
      if (!accept(",")) break;
    }
    accept(";");
  }

  // ---- statements -----------------------------------------------------

  std::vector<ast::Stmt> parse_block() {
    expect("{");
    std::vector<ast::Stmt> stmts;
    while (!at("}") && !at_end()) {
      std::size_t start = pos_;
      try {
        parse_statement(stmts);
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, start, false);
      }
    }
    expect("}");
    return stmts;
  }

  void parse_local_declarators(std::vector<ast::Stmt>& out) {
    std::vector<ast::Annotation> ignored;
    parse_modifiers(ignored);
    ast::TypeExpr type = parse_type();
    while (true) {
      ast::Stmt var;
      var.kind = ast::StmtKind::LocalVar;
      var.pos = here();
      var.name = expect_identifier();
      var.type = type;
      var.is_var = true;
      while (at("[") && peek(1).is("]")) {
        next();
        next();
      }
      if (accept("=")) var.exprs.push_back(parse_variable_initializer());
      out.push_back(std::move(var));
      if (!accept(",")) break;
    }
  }

  bool at_local_declaration() const {
    std::size_t i = pos_;
    while (i < tokens_.size() && (tokens_[i].is("final") || tokens_[i].is("@"))) {
      if (tokens_[i].is("@")) i += 2;
      else ++i;
    }
    return looks_like_declaration(i);
  }

  std::vector<ast::Stmt> parse_branch() {
    std::vector<ast::Stmt> out;
    if (at("{")) return parse_block();
    parse_statement(out);
    return out;
  }

  void parse_statement(std::vector<ast::Stmt>& out) {
    ast::Stmt stmt;
    stmt.pos = here();
    if (accept(";")) return;
    if (at("{")) {
      stmt.kind = ast::StmtKind::Block;
      stmt.body = parse_block();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("if")) {
      next();
      stmt.kind = ast::StmtKind::If;
      expect("(");
      stmt.exprs.push_back(parse_expression());
      expect(")");
      stmt.body = parse_branch();
      if (accept("else")) stmt.else_body = parse_branch();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("while")) {
      next();
      stmt.kind = ast::StmtKind::While;
      expect("(");
      stmt.exprs.push_back(parse_expression());
      expect(")");
      stmt.body = parse_branch();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("for")) {
      next();
      stmt.kind = ast::StmtKind::For;
      expect("(");
      if (at_local_declaration()) {
        std::size_t save = pos_;
        std::vector<ast::Annotation> ignored;
        parse_modifiers(ignored);
        ast::TypeExpr type = parse_type();
        const Token& name_tok = peek();
        std::string name = expect_identifier();
        if (accept(":")) {
          ast::Stmt var;
          var.kind = ast::StmtKind::LocalVar;
          var.pos = pos_of(name_tok);
          var.name = std::move(name);
          var.type = std::move(type);
          stmt.init.push_back(std::move(var));
          stmt.exprs.push_back(parse_expression());
          expect(")");
          stmt.body = parse_branch();
          out.push_back(std::move(stmt));
          return;
        }
        pos_ = save;
        parse_local_declarators(stmt.init);
      } else if (!at(";")) {
        do {
          ast::Stmt s;
          s.pos = here();
          parse_expression_statement(s);
          stmt.init.push_back(std::move(s));
        } while (accept(","));
      }
      expect(";");
      if (!at(";")) stmt.exprs.push_back(parse_expression());
      expect(";");
      while (!at(")")) {
        ast::Stmt s;
        s.pos = here();
        parse_expression_statement(s);
        if (!s.exprs.empty()) stmt.exprs.insert(stmt.exprs.end(), s.exprs.begin(), s.exprs.end());
        if (!accept(",")) break;
      }
      expect(")");
      stmt.body = parse_branch();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("return")) {
      next();
      stmt.kind = ast::StmtKind::Return;
      if (!at(";")) stmt.exprs.push_back(parse_expression());
      expect_semicolon();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("throw")) {
      next();
      stmt.kind = ast::StmtKind::Throw;
      stmt.exprs.push_back(parse_expression());
      expect_semicolon();
      out.push_back(std::move(stmt));
      return;
    }
    if (at("break") || at("continue")) {
      next();
      if (at_identifier()) next();
      expect_semicolon();
      return;
    }
    if (at("do") || at("switch") || at("try") || at("synchronized") || at("class") || at("assert")) {
      fail("'" + peek().text + "' statements are not supported");
    }
    if (at_local_declaration()) {
      parse_local_declarators(out);
      expect_semicolon();
      return;
    }
    parse_expression_statement(stmt);
    expect_semicolon();
    out.push_back(std::move(stmt));
  }

  void parse_expression_statement(ast::Stmt& stmt) {
    ast::Expr expr = parse_expression();
    static constexpr std::string_view kAssignOps[] = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};
    for (auto op : kAssignOps) {
      if (at(op)) {
        next();
        stmt.kind = ast::StmtKind::Assign;
        stmt.exprs.push_back(std::move(expr));
        stmt.exprs.push_back(parse_expression());
        return;
      }
    }
    stmt.kind = ast::StmtKind::Expr;
    stmt.exprs.push_back(std::move(expr));
  }

  // ---- expressions ----------------------------------------------------

  static ast::Expr binary(std::string op, ast::Expr lhs, ast::Expr rhs) {
    ast::Expr e;
    e.kind = ast::ExprKind::Binary;
    e.pos = lhs.pos;
    e.name = std::move(op);
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  ast::Expr parse_expression() {
    ast::Expr cond = parse_binary(0);
    if (at("?")) {
      ast::Expr e;
      e.kind = ast::ExprKind::If;
      e.pos = cond.pos;
      next();
      ast::Stmt then_stmt;
      then_stmt.kind = ast::StmtKind::Expr;
      then_stmt.pos = here();
      then_stmt.exprs.push_back(parse_expression());
      expect(":");
      ast::Stmt else_stmt;
      else_stmt.kind = ast::StmtKind::Expr;
      else_stmt.pos = here();
      else_stmt.exprs.push_back(parse_expression());
      e.operands.push_back(std::move(cond));
      e.body.push_back(std::move(then_stmt));
      e.else_body.push_back(std::move(else_stmt));
      return e;
    }
    return cond;
  }

  ast::Expr parse_binary(int level) {
    static const std::vector<std::vector<std::string_view>> kLevels{
        {"||"}, {"&&"}, {"|"}, {"^"}, {"&"}, {"==", "!="}, {"<", ">", "<=", ">=", "instanceof"},
        {"+", "-"}, {"*", "/", "%"},
    };
    if (level == static_cast<int>(kLevels.size())) return parse_unary();
    ast::Expr lhs = parse_binary(level + 1);
    while (true) {
      bool matched = false;
      for (auto op : kLevels[level]) {
        if (at(op)) {
          matched = true;
          break;
        }
      }
      if (!matched) break;
      std::string op = next().text;
      if (op == "instanceof") {
        ast::Expr check;
        check.kind = ast::ExprKind::Binary;
        check.pos = lhs.pos;
        check.name = "instanceof";
        check.type = parse_type();
        check.operands.push_back(std::move(lhs));
        lhs = std::move(check);
        continue;
      }
      lhs = binary(op, std::move(lhs), parse_binary(level + 1));
    }
    return lhs;
  }

  // `(Type) operand`, decided by what follows the closing parenthesis.
  bool at_cast() const {
    if (!at("(")) return false;
    const Token& first = peek(1);
    if (first.kind != TokenKind::Identifier) return false;
    if (is_primitive(first.text)) {
      std::size_t i = pos_ + 2;
      while (tokens_[i].is("[") && tokens_[i + 1].is("]")) i += 2;
      return tokens_[i].is(")");
    }
    if (is_keyword(first.text)) return false;
    std::size_t i = pos_ + 2;
    int depth = 0;
    while (i < tokens_.size()) {
      const Token& t = tokens_[i];
      if (t.is("<")) ++depth;
      else if (t.is(">")) --depth;
      else if (t.is(")") && depth == 0) break;
      else if (!(t.is(".") || t.is(",") || t.is("?") || t.is("[") || t.is("]") ||
                 t.kind == TokenKind::Identifier))
        return false;
      ++i;
    }
    if (i + 1 >= tokens_.size()) return false;
    const Token& after = tokens_[i + 1];
    if (after.kind == TokenKind::Identifier) return !after.is("instanceof");
    return after.kind == TokenKind::Integer || after.kind == TokenKind::Decimal ||
           after.kind == TokenKind::String || after.kind == TokenKind::Char || after.is("(") ||
           after.is("!") || after.is("~");
  }

  ast::Expr parse_unary() {
    if (at("+") || at("-") || at("!") || at("~") || at("++") || at("--")) {
      ast::Expr e;
      e.kind = ast::ExprKind::Unary;
      e.pos = here();
      e.name = next().text;
      e.operands.push_back(parse_unary());
      return e;
    }
    if (at_cast()) {
      ast::Expr cast;
      cast.kind = ast::ExprKind::Cast;
      cast.pos = here();
      next();
      cast.type = parse_type();
      expect(")");
      cast.operands.push_back(parse_unary());
      return cast;
    }
    return parse_postfix();
  }

  std::vector<ast::Expr> parse_args() {
    std::vector<ast::Expr> args;
    expect("(");
    while (!at(")")) {
      args.push_back(parse_expression());
      if (!accept(",")) break;
    }
    expect(")");
    return args;
  }

  ast::Expr parse_postfix() {
    ast::Expr e = parse_primary();
    while (true) {
      if (at(".") && peek(1).kind == TokenKind::Identifier) {
        next();
        const Token& name = next();
        ast::Expr m;
        m.pos = pos_of(name);
        m.name = name.text;
        m.operands.push_back(std::move(e));
        if (at("(")) {
          m.kind = ast::ExprKind::Call;
          m.args = parse_args();
        } else {
          m.kind = ast::ExprKind::Member;
        }
        e = std::move(m);
        continue;
      }
      if (at(".") && peek(1).is("<")) {
        next();
        skip_angle_group();
        continue;
      }
      if (at("[")) {
        ast::Expr idx;
        idx.kind = ast::ExprKind::Unknown;
        idx.pos = here();
        next();
        idx.operands.push_back(std::move(e));
        idx.operands.push_back(parse_expression());
        expect("]");
        e = std::move(idx);
        continue;
      }
      if (at("++") || at("--")) {
        ast::Expr u;
        u.kind = ast::ExprKind::Unary;
        u.pos = here();
        u.name = next().text;
        u.operands.push_back(std::move(e));
        e = std::move(u);
        continue;
      }
      if (at("::") || at("->")) fail("method references and lambdas are not supported");
      break;
    }
    return e;
  }

  ast::Expr literal(ast::LiteralKind kind) {
    ast::Expr e;
    e.kind = ast::ExprKind::Literal;
    e.literal = kind;
    e.pos = here();
    e.name = next().text;
    return e;
  }

  ast::Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer: {
        char last = t.text.back();
        return literal(last == 'L' || last == 'l' ? ast::LiteralKind::Long : ast::LiteralKind::Int);
      }
      case TokenKind::Decimal: {
        char last = t.text.back();
        return literal(last == 'f' || last == 'F' ? ast::LiteralKind::Float : ast::LiteralKind::Double);
      }
      case TokenKind::String: return literal(ast::LiteralKind::String);
      case TokenKind::Char: return literal(ast::LiteralKind::Char);
      default: break;
    }
    if (t.is("true") || t.is("false")) return literal(ast::LiteralKind::Boolean);
    if (t.is("null")) return literal(ast::LiteralKind::Null);
    if (t.is("this")) {
      ast::Expr e;
      e.kind = ast::ExprKind::This;
      e.pos = here();
      next();
      if (at("(")) fail("explicit constructor invocations are not supported");
      return e;
    }
    if (t.is("super")) fail("super references are not supported");
    if (t.is("(")) {
      next();
      ast::Expr inner = parse_expression();
      expect(")");
      return inner;
    }
    if (t.is("new")) {
      ast::Expr e;
      e.kind = ast::ExprKind::New;
      e.pos = here();
      next();
      e.type = parse_type();
      if (at("[")) {
        // array creation: dimensions and optional initializer
        while (at("[")) skip_group();
        if (at("{")) skip_group();
        e.kind = ast::ExprKind::Unknown;
        e.type.reset();
        return e;
      }
      e.args = parse_args();
      if (at("{")) fail("anonymous classes are not supported");
      return e;
    }
    if (t.kind == TokenKind::Identifier && (is_primitive(t.text) || !is_keyword(t.text))) {
      if (peek(1).is("->")) fail("lambdas are not supported");
      ast::Expr e;
      e.pos = here();
      e.name = next().text;
      if (at("(")) {
        e.kind = ast::ExprKind::Call;
        e.args = parse_args();
      } else {
        e.kind = ast::ExprKind::Name;
      }
      return e;
    }
    fail("unexpected '" + describe(t) + "' in expression");
  }

  std::string current_type_;
};

}  // namespace detail

/// Parses one Java source file; same error contract as parse_kotlin.
inline JavaAst parse_java(std::string_view source, const std::string& path) {
  return detail::JavaParser(tokenize(source, path), path).parse();
}

}  // namespace depends
