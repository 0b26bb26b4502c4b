#pragma once

// Syntax tree shared by the Kotlin and Java subsets. Both frontends produce a
// SourceFile; declaration, statement and expression nodes carry slots the
// entity builder and resolver fill in (entity ids, inferred types).

#include <optional>
#include <string>
#include <vector>

#include "depends/model.hpp"

namespace depends::ast {

struct Pos {
  int line = 0;
  int column = 0;
};

struct TypeExpr {
  std::string name;  // dotted name; empty for function types
  Pos pos;
  bool nullable = false;
  bool is_function = false;
  bool has_receiver = false;
  std::vector<TypeExpr> parts;  // [receiver], parameters..., result

  std::string render() const {
    if (!is_function) return name + (nullable ? "?" : "");
    std::string out;
    std::size_t i = 0;
    if (has_receiver) out += parts[i++].render() + ".";
    out += "(";
    for (std::size_t first = i; i + 1 < parts.size(); ++i) {
      if (i != first) out += ", ";
      out += parts[i].render();
    }
    out += ") -> " + parts.back().render();
    return out;
  }
};

struct Annotation {
  std::string name;
  Pos pos;
};

enum class ExprKind { Name, Literal, This, Call, Member, New, Cast, Lambda, Binary, Unary, If, Unknown };

enum class LiteralKind { Int, Long, Double, Float, Boolean, Char, String, Null };

struct Stmt;
struct Expr;

struct Param {
  std::string name;
  std::optional<TypeExpr> type;
  Pos pos;
  std::vector<Annotation> annotations;
  bool is_property = false;  // Kotlin `val`/`var` constructor parameter
  bool is_var = false;
  std::optional<EntityId> entity;
};

struct Expr {
  ExprKind kind = ExprKind::Unknown;
  Pos pos;
  std::string name;  // identifier, member or callee name, operator text
  LiteralKind literal = LiteralKind::Null;
  std::vector<Expr> operands;  // receiver of Member/Call, Cast subject, Binary/Unary operands
  std::vector<Expr> args;      // call / creation arguments, trailing lambda last
  std::optional<TypeExpr> type;  // Cast and New target
  bool safe_cast = false;
  std::vector<Param> lambda_params;
  std::vector<Stmt> body;       // Lambda body, If then-branch
  std::vector<Stmt> else_body;  // If else-branch

  // Filled during resolution.
  std::optional<EntityId> inferred_type;
  std::optional<EntityId> target;
  bool names_type = false;
};

enum class StmtKind { Expr, LocalVar, Return, Assign, If, While, For, Block, Throw };

struct Stmt {
  StmtKind kind = StmtKind::Expr;
  Pos pos;
  // LocalVar (also the loop variable of For)
  std::string name;
  std::optional<TypeExpr> type;
  bool is_var = false;
  std::optional<EntityId> entity;
  // Expr: [e]; LocalVar: [init]; Return/Throw: [value]; Assign: [target, value];
  // If/While: [cond]; For: [iterable or condition, updates...]
  std::vector<Expr> exprs;
  std::vector<Stmt> init;  // For: loop variable / initializer statements
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
};

enum class DeclKind { Type, Function, Property };

struct Supertype {
  TypeExpr type;
  bool constructor_call = false;
  std::vector<Expr> args;
  std::optional<Expr> delegate;  // Kotlin `I by expr`
  enum class Clause { Kotlin, Extends, Implements } clause = Clause::Kotlin;
};

struct Decl {
  DeclKind kind = DeclKind::Type;
  std::string name;
  Pos pos;
  int end_line = 0;
  std::vector<Annotation> annotations;
  std::vector<std::string> modifiers;
  std::optional<EntityId> entity;

  // Type
  TypeFlavor flavor = TypeFlavor::Class;
  std::vector<Param> constructor_params;
  std::vector<Supertype> supertypes;
  std::vector<Decl> members;

  // Function
  std::optional<TypeExpr> receiver;
  std::vector<Param> params;
  std::optional<TypeExpr> return_type;
  bool has_body = false;
  std::vector<Stmt> body;
  std::optional<Expr> expression_body;
  bool is_constructor = false;

  // Property (type reuses return_type)
  bool is_var = false;
  bool is_enum_constant = false;
  std::optional<Expr> initializer;
  std::optional<Expr> delegate;

  bool has_modifier(std::string_view m) const {
    for (const auto& mod : modifiers)
      if (mod == m) return true;
    return false;
  }
};

struct Import {
  std::string path;
  bool wildcard = false;
  bool is_static = false;
  std::string alias;
  Pos pos;
};

struct Diagnostic {
  std::string path;
  int line = 0;
  int column = 0;
  std::string message;

  std::string str() const {
    return path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
};

struct SourceFile {
  std::string path;
  SourceLanguage language = SourceLanguage::Kotlin;
  std::string package_name;
  Pos package_pos;
  std::vector<Import> imports;
  std::vector<Decl> decls;
  std::vector<Diagnostic> diagnostics;
  int line_count = 0;
};

}  // namespace depends::ast
