#pragma once

// Recursive-descent parser for the Kotlin subset: package/imports, classes,
// interfaces, objects, enums, functions (incl. extension functions and
// receiver-typed function types), properties with `by` delegation, lambdas,
// calls, navigation, `as` casts and local declarations.

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "depends/ast.hpp"
#include "depends/lexer.hpp"
#include "depends/parser_base.hpp"

namespace depends {

using KotlinAst = ast::SourceFile;

namespace detail {

class KotlinParser : ParserBase {
 public:
  KotlinParser(std::vector<Token> tokens, std::string path)
      : ParserBase(std::move(tokens), std::move(path)) {}

  ast::SourceFile parse() {
    ast::SourceFile file;
    file.path = path_;
    file.language = SourceLanguage::Kotlin;
    file.line_count = tokens_.back().line;

    skip_file_annotations();
    if (at("package")) {
      file.package_pos = here();
      next();
      file.package_name = dotted_name();
      accept(";");
    }
    while (at("import")) {
      ast::Import imp;
      imp.pos = here();
      next();
      imp.path = dotted_name();
      if (at(".") && peek(1).is("*")) {
        next();
        next();
        imp.wildcard = true;
      }
      if (accept("as")) imp.alias = expect_identifier();
      accept(";");
      file.imports.push_back(std::move(imp));
    }
    while (!at_end()) {
      if (accept(";")) continue;
      std::size_t start = pos_;
      try {
        if (!parse_declaration(file.decls)) fail("expected a declaration, found '" + describe(peek()) + "'");
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, start, true);
        if (at("}")) next();
      }
    }
    file.diagnostics = std::move(diagnostics_);
    return file;
  }

 private:
  static bool is_modifier(std::string_view t) {
    static const std::unordered_set<std::string_view> kModifiers{
        "public",   "private", "protected", "internal", "open",     "abstract", "final",
        "override", "data",    "sealed",    "inner",    "enum",     "annotation", "lateinit",
        "const",    "inline",  "suspend",   "external", "operator", "infix",    "tailrec",
        "vararg",   "noinline", "crossinline", "companion", "value", "expect", "actual", "fun"};
    return kModifiers.count(t) != 0;
  }

  static bool is_hard_keyword(std::string_view t) {
    static const std::unordered_set<std::string_view> kKeywords{
        "as", "break", "class", "continue", "do", "else", "false", "for", "fun", "if", "in",
        "interface", "is", "null", "object", "package", "return", "super", "this", "throw",
        "true", "try", "typealias", "val", "var", "when", "while", "by"};
    return kKeywords.count(t) != 0;
  }

  std::string dotted_name() {
    std::string name = expect_identifier();
    while (at(".") && peek(1).kind == TokenKind::Identifier) {
      next();
      name += "." + next().text;
    }
    return name;
  }

  void skip_file_annotations() {
    while (at("@") && peek(1).is("file")) {
      next();
      next();
      expect(":");
      parse_annotation_body();
    }
  }

  std::optional<ast::Annotation> parse_annotation_body() {
    ast::Annotation ann;
    ann.pos = here();
    if (at("[")) {
      skip_group();
      return std::nullopt;
    }
    ann.name = dotted_name();
    if (at("(") && !peek().newline_before) skip_group();
    return ann;
  }

  std::vector<ast::Annotation> parse_annotations() {
    std::vector<ast::Annotation> out;
    while (at("@")) {
      next();
      // Use-site targets: @get:Foo, @field:Foo
      if (at_identifier() && peek(1).is(":")) {
        next();
        next();
      }
      if (auto a = parse_annotation_body()) out.push_back(*a);
    }
    return out;
  }

  // Collects modifiers; a `fun` directly followed by `interface` is a modifier.
  std::vector<std::string> parse_modifiers() {
    std::vector<std::string> mods;
    while (at_identifier() && is_modifier(peek().text)) {
      const Token& t = peek();
      if (t.text == "fun" && !peek(1).is("interface")) break;
      // `enum`, `data`, ... used as plain names (e.g. `val data = 1`) are not modifiers
      const Token& after = peek(1);
      if (after.kind != TokenKind::Identifier && !after.is("@")) break;
      mods.push_back(next().text);
    }
    return mods;
  }

  bool parse_declaration(std::vector<ast::Decl>& out) {
    std::size_t start = pos_;
    auto annotations = parse_annotations();
    auto modifiers = parse_modifiers();
    const Token& head = peek();
    auto has = [&](std::string_view m) {
      for (const auto& x : modifiers)
        if (x == m) return true;
      return false;
    };
    if (head.is("class")) {
      TypeFlavor flavor = has("enum") ? TypeFlavor::Enum
                          : has("annotation") ? TypeFlavor::Annotation
                                              : TypeFlavor::Class;
      out.push_back(parse_type_decl(flavor, std::move(annotations), std::move(modifiers)));
      return true;
    }
    if (head.is("interface")) {
      out.push_back(parse_type_decl(TypeFlavor::Interface, std::move(annotations), std::move(modifiers)));
      return true;
    }
    if (head.is("object")) {
      if (has("companion")) {
        diagnose(head.line, head.column, "companion objects are not supported; skipped");
        next();
        while (!at("{") && !at("}") && !at_end() && !peek().newline_before) next();
        if (at("{")) skip_group();
        return true;
      }
      out.push_back(parse_type_decl(TypeFlavor::Object, std::move(annotations), std::move(modifiers)));
      return true;
    }
    if (head.is("fun")) {
      out.push_back(parse_function(std::move(annotations), std::move(modifiers)));
      return true;
    }
    if (head.is("val") || head.is("var")) {
      if (auto prop = parse_property(std::move(annotations), std::move(modifiers))) out.push_back(std::move(*prop));
      return true;
    }
    if (head.is("typealias")) {
      diagnose(head.line, head.column, "typealias is not supported; skipped");
      skip_statement(true);
      return true;
    }
    if (head.is("init") && peek(1).is("{")) {
      diagnose(head.line, head.column, "init blocks are not supported; skipped");
      next();
      skip_group();
      return true;
    }
    if (head.is("constructor")) {
      diagnose(head.line, head.column, "secondary constructors are not supported; skipped");
      next();
      skip_group();
      if (accept(":")) {
        next();
        if (at("(")) skip_group();
      }
      if (at("{")) skip_group();
      return true;
    }
    pos_ = start;
    return false;
  }

  ast::Decl parse_type_decl(TypeFlavor flavor, std::vector<ast::Annotation> annotations,
                            std::vector<std::string> modifiers) {
    ast::Decl decl;
    decl.kind = ast::DeclKind::Type;
    decl.flavor = flavor;
    decl.annotations = std::move(annotations);
    decl.modifiers = std::move(modifiers);
    decl.pos = here();
    next();  // class / interface / object
    decl.name = expect_identifier();
    if (at("<")) skip_angle_group();

    // Primary constructor
    if (at_identifier() && !peek().newline_before && (is_modifier(peek().text) || peek().is("constructor"))) {
      parse_annotations();
      parse_modifiers();
      expect("constructor");
    } else if (at("@") && !peek().newline_before) {
      parse_annotations();
      parse_modifiers();
      expect("constructor");
    }
    if (at("(") && !peek().newline_before) decl.constructor_params = parse_params(true);

    if (accept(":")) {
      do {
        decl.supertypes.push_back(parse_supertype());
      } while (accept(","));
    }
    if (at("where")) fail("where clauses are not supported");
    decl.end_line = previous().line;
    if (at("{")) parse_type_body(decl);
    return decl;
  }

  ast::Supertype parse_supertype() {
    ast::Supertype st;
    parse_annotations();
    st.type = parse_type();
    if (at("(") && !peek().newline_before) {
      st.constructor_call = true;
      st.args = parse_call_args();
    }
    if (accept("by")) st.delegate = parse_expression(/*allow_trailing_lambda=*/false);
    return st;
  }

  void parse_type_body(ast::Decl& decl) {
    expect("{");
    if (decl.flavor == TypeFlavor::Enum) parse_enum_entries(decl);
    while (!at("}") && !at_end()) {
      if (accept(";")) continue;
      std::size_t start = pos_;
      try {
        if (!parse_declaration(decl.members)) fail("unsupported member '" + describe(peek()) + "'");
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, start, true);
      }
    }
    decl.end_line = peek().line;
    expect("}");
  }

  void parse_enum_entries(ast::Decl& decl) {
    while (true) {
      auto annotations = parse_annotations();
      if (!at_identifier() || is_modifier(peek().text) || is_hard_keyword(peek().text)) break;
      if (peek(1).is(":") || peek(1).is("=")) break;
      ast::Decl entry;
      entry.kind = ast::DeclKind::Property;
      entry.is_enum_constant = true;
      entry.annotations = std::move(annotations);
      entry.pos = here();
      entry.name = next().text;
      entry.end_line = entry.pos.line;
      if (at("(")) entry.initializer = [&] {
        ast::Expr call;
        call.kind = ast::ExprKind::Unknown;
        call.pos = entry.pos;
        call.args = parse_call_args();
        return call;
      }();
      if (at("{")) skip_group();
      decl.members.push_back(std::move(entry));
      if (!accept(",")) break;
    }
    accept(";");
  }

  std::vector<ast::Param> parse_params(bool constructor) {
    std::vector<ast::Param> params;
    expect("(");
    while (!at(")")) {
      ast::Param p;
      p.annotations = parse_annotations();
      parse_modifiers();
      if (constructor && (at("val") || at("var"))) {
        p.is_property = true;
        p.is_var = next().text == "var";
      }
      p.pos = here();
      p.name = expect_identifier();
      expect(":");
      p.type = parse_type();
      if (accept("=")) parse_expression();
      params.push_back(std::move(p));
      if (!accept(",")) break;
    }
    expect(")");
    return params;
  }

  /// Reads `A.B.name` and splits it into an optional receiver type and the
  /// declared name.
  std::pair<std::optional<ast::TypeExpr>, std::string> receiver_and_name() {
    ast::TypeExpr receiver;
    receiver.pos = here();
    std::vector<std::string> segments{expect_identifier()};
    bool nullable = false;
    while (true) {
      if (at("<")) skip_angle_group();
      if (at("?") && peek(1).is(".")) {
        next();
        nullable = true;
      }
      if (at(".") && peek(1).kind == TokenKind::Identifier) {
        next();
        segments.push_back(next().text);
        continue;
      }
      break;
    }
    std::string name = segments.back();
    segments.pop_back();
    if (segments.empty()) return {std::nullopt, name};
    for (std::size_t i = 0; i < segments.size(); ++i) receiver.name += (i ? "." : "") + segments[i];
    receiver.nullable = nullable;
    return {receiver, name};
  }

  ast::Decl parse_function(std::vector<ast::Annotation> annotations, std::vector<std::string> modifiers) {
    ast::Decl decl;
    decl.kind = ast::DeclKind::Function;
    decl.annotations = std::move(annotations);
    decl.modifiers = std::move(modifiers);
    decl.pos = here();
    expect("fun");
    if (at("<")) skip_angle_group();
    if (at("(")) fail("function-typed receivers are not supported");
    auto [receiver, name] = receiver_and_name();
    decl.receiver = std::move(receiver);
    decl.name = std::move(name);
    decl.params = parse_params(false);
    if (accept(":")) decl.return_type = parse_type();
    if (at("where")) fail("where clauses are not supported");
    decl.end_line = previous().line;
    if (at("{")) {
      decl.has_body = true;
      decl.body = parse_block();
      decl.end_line = previous().line;
    } else if (accept("=")) {
      decl.has_body = true;
      decl.expression_body = parse_expression();
      decl.end_line = previous().line;
    }
    return decl;
  }

  std::optional<ast::Decl> parse_property(std::vector<ast::Annotation> annotations,
                                          std::vector<std::string> modifiers) {
    ast::Decl decl;
    decl.kind = ast::DeclKind::Property;
    decl.annotations = std::move(annotations);
    decl.modifiers = std::move(modifiers);
    decl.pos = here();
    decl.is_var = next().text == "var";
    if (at("<")) skip_angle_group();
    if (at("(")) fail("destructuring declarations are not supported");
    const Token& name_tok = peek();
    auto [receiver, name] = receiver_and_name();
    decl.name = std::move(name);
    if (accept(":")) decl.return_type = parse_type();
    if (accept("=")) {
      decl.initializer = parse_expression();
    } else if (accept("by")) {
      decl.delegate = parse_expression();
    }
    decl.end_line = previous().line;
    skip_custom_accessors();
    if (receiver) {
      diagnose(name_tok.line, name_tok.column, "extension properties are not supported; skipped");
      return std::nullopt;
    }
    return decl;
  }

  // Custom get()/set() accessors are outside the subset; they are skipped.
  void skip_custom_accessors() {
    while (peek().newline_before) {
      std::size_t start = pos_;
      parse_annotations();
      parse_modifiers();
      const Token& after = peek(1);
      bool accessor = (at("get") || at("set")) &&
                      (after.is("(") || after.is("=") || after.is("{") || after.is("}") ||
                       after.is(";") || after.newline_before || after.kind == TokenKind::End);
      if (!accessor) {
        pos_ = start;
        return;
      }
      diagnose(peek().line, peek().column, "custom property accessors are not supported; skipped");
      next();
      if (at("(")) skip_group();
      if (accept(":")) parse_type();
      if (accept("=")) {
        parse_expression();
      } else if (at("{")) {
        skip_group();
      }
    }
  }

  // ---- types ----------------------------------------------------------

  ast::TypeExpr parse_type() {
    parse_annotations();
    accept("suspend");
    ast::TypeExpr type;
    type.pos = here();
    if (at("(")) {
      next();
      std::vector<ast::TypeExpr> params;
      while (!at(")")) {
        if (at_identifier() && peek(1).is(":")) {
          next();
          next();
        }
        params.push_back(parse_type());
        if (!accept(",")) break;
      }
      expect(")");
      if (accept("->")) {
        type.is_function = true;
        type.parts = std::move(params);
        type.parts.push_back(parse_type());
        return type;
      }
      if (params.size() != 1) fail("malformed parenthesized type");
      type = std::move(params.front());
      if (accept("?")) type.nullable = true;
      return type;
    }
    if (at("*")) {
      next();
      type.name = "*";
      return type;
    }
    type.name = expect_identifier();
    while (true) {
      if (at("<")) skip_angle_group();
      if (at(".") && peek(1).kind == TokenKind::Identifier) {
        next();
        type.name += "." + next().text;
        continue;
      }
      break;
    }
    if (at(".") && peek(1).is("(")) {
      next();
      ast::TypeExpr receiver = std::move(type);
      ast::TypeExpr fn = parse_type();
      if (!fn.is_function) fail("expected a function type after receiver");
      fn.has_receiver = true;
      fn.parts.insert(fn.parts.begin(), std::move(receiver));
      fn.pos = fn.parts.front().pos;
      return fn;
    }
    if (at("?")) {
      next();
      type.nullable = true;
    }
    return type;
  }

  // ---- statements -----------------------------------------------------

  std::vector<ast::Stmt> parse_block() {
    expect("{");
    auto stmts = parse_statements();
    expect("}");
    return stmts;
  }

  std::vector<ast::Stmt> parse_statements() {
    std::vector<ast::Stmt> stmts;
    while (!at("}") && !at_end()) {
      if (accept(";")) continue;
      std::size_t start = pos_;
      try {
        stmts.push_back(parse_statement());
        if (!at("}") && !at(";") && !at_end() && !peek().newline_before)
          fail("unexpected '" + describe(peek()) + "' after statement");
      } catch (const SyntaxIssue& issue) {
        record_issue_and_skip(issue, start, true);
      }
    }
    return stmts;
  }

  ast::Stmt parse_statement() {
    ast::Stmt stmt;
    stmt.pos = here();
    if (at("@")) parse_annotations();
    if (at("val") || at("var")) {
      stmt.kind = ast::StmtKind::LocalVar;
      stmt.is_var = next().text == "var";
      if (at("(")) fail("destructuring declarations are not supported");
      stmt.pos = here();
      stmt.name = expect_identifier();
      if (accept(":")) stmt.type = parse_type();
      if (accept("=")) stmt.exprs.push_back(parse_expression());
      else if (accept("by")) stmt.exprs.push_back(parse_expression());
      return stmt;
    }
    if (at("return")) {
      next();
      if (at("@")) {
        next();
        expect_identifier();
      }
      stmt.kind = ast::StmtKind::Return;
      if (!at("}") && !at(";") && !at_end() && !peek().newline_before) stmt.exprs.push_back(parse_expression());
      return stmt;
    }
    if (at("throw")) {
      next();
      stmt.kind = ast::StmtKind::Throw;
      stmt.exprs.push_back(parse_expression());
      return stmt;
    }
    if (at("while")) {
      next();
      stmt.kind = ast::StmtKind::While;
      expect("(");
      stmt.exprs.push_back(parse_expression());
      expect(")");
      stmt.body = parse_branch();
      return stmt;
    }
    if (at("for")) {
      next();
      stmt.kind = ast::StmtKind::For;
      expect("(");
      ast::Stmt var;
      var.kind = ast::StmtKind::LocalVar;
      var.pos = here();
      if (at("(")) fail("destructuring loop variables are not supported");
      var.name = expect_identifier();
      if (accept(":")) var.type = parse_type();
      expect("in");
      stmt.exprs.push_back(parse_expression());
      expect(")");
      stmt.init.push_back(std::move(var));
      stmt.body = parse_branch();
      return stmt;
    }
    if (at("fun") || at("class") || at("do") || at("when") || at("try") || at("break") || at("continue")) {
      if (at("break") || at("continue")) {
        next();
        if (at("@")) {
          next();
          expect_identifier();
        }
        stmt.kind = ast::StmtKind::Block;
        return stmt;
      }
      fail("'" + peek().text + "' statements are not supported");
    }

    ast::Expr expr = parse_expression();
    static constexpr std::string_view kAssignOps[] = {"=", "+=", "-=", "*=", "/=", "%="};
    for (auto op : kAssignOps) {
      if (at(op)) {
        next();
        stmt.kind = ast::StmtKind::Assign;
        stmt.exprs.push_back(std::move(expr));
        stmt.exprs.push_back(parse_expression());
        return stmt;
      }
    }
    stmt.kind = ast::StmtKind::Expr;
    stmt.exprs.push_back(std::move(expr));
    return stmt;
  }

  // A loop / if branch: a braced block or a single statement.
  std::vector<ast::Stmt> parse_branch() {
    if (at("{")) return parse_block();
    std::vector<ast::Stmt> out;
    if (at(";")) {
      next();
      return out;
    }
    out.push_back(parse_statement());
    return out;
  }

  // ---- expressions ----------------------------------------------------

  ast::Expr parse_expression(bool allow_trailing_lambda = true) {
    bool saved = allow_trailing_lambda_;
    allow_trailing_lambda_ = allow_trailing_lambda;
    ast::Expr e = parse_binary(0);
    allow_trailing_lambda_ = saved;
    return e;
  }

  static ast::Expr binary(std::string op, ast::Expr lhs, ast::Expr rhs) {
    ast::Expr e;
    e.kind = ast::ExprKind::Binary;
    e.pos = lhs.pos;
    e.name = std::move(op);
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  // Precedence levels, loosest first.
  ast::Expr parse_binary(int level) {
    static const std::vector<std::vector<std::string_view>> kLevels{
        {"||"},
        {"&&"},
        {"==", "!=", "===", "!=="},
        {"<", ">", "<=", ">="},
        {"in", "is"},
        {"?:"},
        {"to", "until", "downTo", "step", "and", "or", "xor", "shl", "shr"},
        {".."},
        {"+", "-"},
        {"*", "/", "%"},
    };
    if (level == static_cast<int>(kLevels.size())) return parse_as();
    ast::Expr lhs = parse_binary(level + 1);
    while (true) {
      const Token& t = peek();
      if (t.newline_before) break;
      bool matched = false;
      for (auto op : kLevels[level]) {
        if (t.is(op)) {
          matched = true;
          break;
        }
      }
      // `!in` / `!is`
      bool negated = level == 4 && t.is("!") && (peek(1).is("in") || peek(1).is("is"));
      if (!matched && !negated) break;
      if (negated) next();
      std::string op = next().text;
      if (op == "is") {
        ast::Expr check;
        check.kind = ast::ExprKind::Binary;
        check.pos = lhs.pos;
        check.name = "is";
        check.type = parse_type();
        check.operands.push_back(std::move(lhs));
        lhs = std::move(check);
        continue;
      }
      lhs = binary(op, std::move(lhs), parse_binary(level + 1));
    }
    return lhs;
  }

  ast::Expr parse_as() {
    ast::Expr e = parse_prefix();
    while ((at("as")) && !peek().newline_before) {
      ast::Expr cast;
      cast.kind = ast::ExprKind::Cast;
      cast.pos = here();
      next();
      if (at("?")) {
        next();
        cast.safe_cast = true;
      }
      cast.type = parse_type();
      cast.operands.push_back(std::move(e));
      e = std::move(cast);
    }
    return e;
  }

  ast::Expr parse_prefix() {
    if (at("-") || at("+") || at("!") || at("++") || at("--")) {
      ast::Expr e;
      e.kind = ast::ExprKind::Unary;
      e.pos = here();
      e.name = next().text;
      e.operands.push_back(parse_prefix());
      return e;
    }
    if (at("@")) {
      // annotated or labelled expression
      next();
      expect_identifier();
    }
    return parse_postfix();
  }

  std::vector<ast::Expr> parse_call_args() {
    std::vector<ast::Expr> args;
    expect("(");
    bool saved = allow_trailing_lambda_;
    allow_trailing_lambda_ = true;
    while (!at(")")) {
      if (at_identifier() && peek(1).is("=")) {
        next();
        next();
      }
      accept("*");
      args.push_back(parse_binary(0));
      if (!accept(",")) break;
    }
    allow_trailing_lambda_ = saved;
    expect(")");
    return args;
  }

  ast::Expr parse_postfix() {
    ast::Expr e = parse_primary();
    while (true) {
      const Token& t = peek();
      if ((t.is(".") || t.is("?.")) && peek(1).kind == TokenKind::Identifier) {
        next();
        const Token& name = next();
        ast::Expr m;
        m.pos = pos_of(name);
        m.name = name.text;
        m.operands.push_back(std::move(e));
        if (at("<") && looks_like_call_type_args()) skip_angle_group();
        if (at("(") && !peek().newline_before) {
          m.kind = ast::ExprKind::Call;
          m.args = parse_call_args();
          attach_trailing_lambda(m);
        } else if (at("{") && !peek().newline_before && allow_trailing_lambda_) {
          m.kind = ast::ExprKind::Call;
          attach_trailing_lambda(m);
        } else {
          m.kind = ast::ExprKind::Member;
        }
        e = std::move(m);
        continue;
      }
      if (t.newline_before) break;
      if (t.is("(")) {
        ast::Expr call;
        call.kind = ast::ExprKind::Call;
        call.pos = e.pos;
        if (e.kind == ast::ExprKind::Name) {
          call.name = e.name;
        } else {
          call.operands.push_back(std::move(e));
          call.name.clear();
        }
        call.args = parse_call_args();
        attach_trailing_lambda(call);
        e = std::move(call);
        continue;
      }
      if (t.is("{") && allow_trailing_lambda_ && e.kind == ast::ExprKind::Name) {
        ast::Expr call;
        call.kind = ast::ExprKind::Call;
        call.pos = e.pos;
        call.name = e.name;
        attach_trailing_lambda(call);
        e = std::move(call);
        continue;
      }
      if (t.is("!!") || t.is("++") || t.is("--")) {
        ast::Expr u;
        u.kind = ast::ExprKind::Unary;
        u.pos = here();
        u.name = next().text;
        u.operands.push_back(std::move(e));
        e = std::move(u);
        continue;
      }
      if (t.is("[")) {
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
      if (t.is("::")) fail("callable references are not supported");
      break;
    }
    return e;
  }

  // `name<...>(` with only type-ish tokens between the angle brackets.
  bool looks_like_call_type_args() const {
    int depth = 0;
    for (std::size_t i = pos_; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.is("<")) {
        ++depth;
      } else if (t.is(">")) {
        if (--depth == 0) {
          const Token& after = i + 1 < tokens_.size() ? tokens_[i + 1] : t;
          return after.is("(") && !after.newline_before;
        }
      } else if (!(t.kind == TokenKind::Identifier || t.is(".") || t.is(",") || t.is("?") ||
                   t.is("*") || t.is("(") || t.is(")") || t.is("->"))) {
        return false;
      }
    }
    return false;
  }

  void attach_trailing_lambda(ast::Expr& call) {
    if (at("{") && !peek().newline_before && allow_trailing_lambda_) call.args.push_back(parse_lambda());
  }

  ast::Expr parse_lambda() {
    ast::Expr lambda;
    lambda.kind = ast::ExprKind::Lambda;
    lambda.pos = here();
    expect("{");
    std::size_t save = pos_;
    bool has_params = false;
    try {
      std::vector<ast::Param> params;
      while (at_identifier() && !is_hard_keyword(peek().text)) {
        ast::Param p;
        p.pos = here();
        p.name = next().text;
        if (accept(":")) p.type = parse_type();
        params.push_back(std::move(p));
        if (!accept(",")) break;
      }
      if (!params.empty() && accept("->")) {
        lambda.lambda_params = std::move(params);
        has_params = true;
      }
    } catch (const SyntaxIssue&) {
    }
    if (!has_params) pos_ = save;
    lambda.body = parse_statements();
    expect("}");
    return lambda;
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
      if (at("@") && !peek().newline_before) {
        next();
        expect_identifier();
      }
      return e;
    }
    if (t.is("(")) {
      next();
      ast::Expr inner = parse_expression();
      expect(")");
      return inner;
    }
    if (t.is("{")) return parse_lambda();
    if (t.is("if")) return parse_if();
    if (t.is("super") || t.is("when") || t.is("try") || t.is("object") || t.is("::")) {
      fail("'" + t.text + "' expressions are not supported");
    }
    if (t.kind == TokenKind::Identifier && !is_hard_keyword(t.text)) {
      ast::Expr e;
      e.kind = ast::ExprKind::Name;
      e.pos = here();
      e.name = next().text;
      if (at("<") && looks_like_call_type_args()) skip_angle_group();
      return e;
    }
    fail("unexpected '" + describe(t) + "' in expression");
  }

  ast::Expr parse_if() {
    ast::Expr e;
    e.kind = ast::ExprKind::If;
    e.pos = here();
    expect("if");
    expect("(");
    e.operands.push_back(parse_expression());
    expect(")");
    e.body = parse_branch();
    std::size_t save = pos_;
    accept(";");
    if (at("else")) {
      next();
      e.else_body = parse_branch();
    } else {
      pos_ = save;
    }
    return e;
  }

  bool allow_trailing_lambda_ = true;
};

}  // namespace detail

/// Parses one Kotlin source file. Throws ParseError on unbalanced delimiters
/// or unterminated literals; other unsupported constructs are skipped and
/// reported in `diagnostics`.
inline KotlinAst parse_kotlin(std::string_view source, const std::string& path) {
  return detail::KotlinParser(tokenize(source, path), path).parse();
}

}  // namespace depends
