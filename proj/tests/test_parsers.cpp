#include <gtest/gtest.h>

#include "support.hpp"

using namespace depends;

TEST(Lexer, KeepsMultiCharacterSymbolsTogether) {
  auto tokens = tokenize("a?.b ?: c!! -> d", "t.kt");
  std::vector<std::string> texts;
  for (const auto& t : tokens) texts.push_back(t.text);
  std::vector<std::string> expected{"a", "?.", "b", "?:", "c", "!!", "->", "d", ""};
  EXPECT_EQ(texts, expected);
}

TEST(Lexer, SkipsNestedCommentsAndTracksLines) {
  auto tokens = tokenize("/* a /* b */ c */\n// x\nval", "t.kt");
  ASSERT_GE(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].text, "val");
  EXPECT_EQ(tokens[0].line, 3);
  EXPECT_TRUE(tokens[0].newline_before);
}

TEST(Lexer, StringTemplatesAreOneToken) {
  auto tokens = tokenize("\"a ${b + \"}\"} c\" x", "t.kt");
  EXPECT_EQ(tokens[0].kind, TokenKind::String);
  EXPECT_EQ(tokens[1].text, "x");
}

TEST(KotlinParser, ClassWithConstructorProperty) {
  auto ast = parse_kotlin("class Bar(val x: Int)", "Bar.kt");
  ASSERT_EQ(ast.decls.size(), 1u);
  const auto& bar = ast.decls[0];
  EXPECT_EQ(bar.kind, ast::DeclKind::Type);
  EXPECT_EQ(bar.name, "Bar");
  ASSERT_EQ(bar.constructor_params.size(), 1u);
  EXPECT_TRUE(bar.constructor_params[0].is_property);
  EXPECT_FALSE(bar.constructor_params[0].is_var);
  EXPECT_EQ(bar.constructor_params[0].type->name, "Int");
}

TEST(KotlinParser, ReceiverFunctionTypeParameter) {
  auto ast = parse_kotlin("fun calculate(param: Bar.() -> Int) {}", "L.kt");
  ASSERT_EQ(ast.decls.size(), 1u);
  const auto& fn = ast.decls[0];
  EXPECT_EQ(fn.kind, ast::DeclKind::Function);
  ASSERT_EQ(fn.params.size(), 1u);
  const auto& type = *fn.params[0].type;
  EXPECT_TRUE(type.is_function);
  EXPECT_TRUE(type.has_receiver);
  ASSERT_EQ(type.parts.size(), 2u);
  EXPECT_EQ(type.parts[0].name, "Bar");
  EXPECT_EQ(type.parts[1].name, "Int");
  EXPECT_EQ(type.render(), "Bar.() -> Int");
}

TEST(KotlinParser, EmptyFileHasNoDeclarations) {
  auto ast = parse_kotlin("", "E.kt");
  EXPECT_TRUE(ast.decls.empty());
  EXPECT_TRUE(ast.diagnostics.empty());
}

TEST(KotlinParser, UnbalancedBraceReportsPosition) {
  try {
    parse_kotlin("class A {\n  fun f() {\n", "A.kt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "A.kt");
    EXPECT_GE(e.line(), 1);
    EXPECT_GE(e.column(), 1);
  }
  EXPECT_THROW(parse_kotlin("fun f() = (1 + 2]", "B.kt"), ParseError);
}

TEST(KotlinParser, UnsupportedStatementIsSkippedWithDiagnostic) {
  auto ast = parse_kotlin(
      "fun f(x: Int) {\n"
      "    when (x) { 1 -> g() }\n"
      "    g()\n"
      "}\n"
      "fun g() {}\n",
      "W.kt");
  ASSERT_EQ(ast.decls.size(), 2u);
  EXPECT_EQ(ast.diagnostics.size(), 1u);
  ASSERT_EQ(ast.decls[0].body.size(), 1u);
  EXPECT_EQ(ast.decls[0].body[0].exprs[0].name, "g");
}

TEST(KotlinParser, PackageImportsAndAliases) {
  auto ast = parse_kotlin("package a.b\n\nimport c.D\nimport e.*\nimport f.G as H\n", "P.kt");
  EXPECT_EQ(ast.package_name, "a.b");
  ASSERT_EQ(ast.imports.size(), 3u);
  EXPECT_EQ(ast.imports[0].path, "c.D");
  EXPECT_TRUE(ast.imports[1].wildcard);
  EXPECT_EQ(ast.imports[1].path, "e");
  EXPECT_EQ(ast.imports[2].alias, "H");
}

TEST(KotlinParser, ExtensionFunctionAndDelegation) {
  auto ast = parse_kotlin(
      "fun Int.twice(): Int = this * 2\n"
      "class A(b: B) : I by b\n"
      "class P { val v by Lazy() }\n",
      "X.kt");
  ASSERT_EQ(ast.decls.size(), 3u);
  ASSERT_TRUE(ast.decls[0].receiver.has_value());
  EXPECT_EQ(ast.decls[0].receiver->name, "Int");
  EXPECT_EQ(ast.decls[0].name, "twice");
  ASSERT_EQ(ast.decls[1].supertypes.size(), 1u);
  ASSERT_TRUE(ast.decls[1].supertypes[0].delegate.has_value());
  EXPECT_EQ(ast.decls[1].supertypes[0].delegate->name, "b");
  ASSERT_EQ(ast.decls[2].members.size(), 1u);
  EXPECT_TRUE(ast.decls[2].members[0].delegate.has_value());
}

TEST(KotlinParser, LambdaWithReceiverBodyAndCast) {
  auto ast = parse_kotlin("fun f(o: Any) { calculate { add(x) }\n val c = o as Bar }", "L.kt");
  const auto& body = ast.decls[0].body;
  ASSERT_EQ(body.size(), 2u);
  const auto& call = body[0].exprs[0];
  EXPECT_EQ(call.kind, ast::ExprKind::Call);
  EXPECT_EQ(call.name, "calculate");
  ASSERT_EQ(call.args.size(), 1u);
  EXPECT_EQ(call.args[0].kind, ast::ExprKind::Lambda);
  EXPECT_EQ(body[1].kind, ast::StmtKind::LocalVar);
  EXPECT_EQ(body[1].exprs[0].kind, ast::ExprKind::Cast);
  EXPECT_EQ(body[1].exprs[0].type->name, "Bar");
}

TEST(KotlinParser, ComparisonIsNotMistakenForTypeArguments) {
  auto ast = parse_kotlin("fun f(a: Int, b: Int) = a < b && b > a", "C.kt");
  ASSERT_EQ(ast.decls.size(), 1u);
  EXPECT_TRUE(ast.diagnostics.empty());
  EXPECT_EQ(ast.decls[0].expression_body->name, "&&");
}

TEST(KotlinParser, AnnotationsAndFlavors) {
  auto ast = parse_kotlin("@Marker\ninterface I\nobject O\nenum class E { A, B }\nannotation class M", "F.kt");
  ASSERT_EQ(ast.decls.size(), 4u);
  ASSERT_EQ(ast.decls[0].annotations.size(), 1u);
  EXPECT_EQ(ast.decls[0].annotations[0].name, "Marker");
  EXPECT_EQ(ast.decls[0].flavor, TypeFlavor::Interface);
  EXPECT_EQ(ast.decls[1].flavor, TypeFlavor::Object);
  EXPECT_EQ(ast.decls[2].flavor, TypeFlavor::Enum);
  EXPECT_EQ(ast.decls[2].members.size(), 2u);
  EXPECT_EQ(ast.decls[3].flavor, TypeFlavor::Annotation);
}

TEST(KotlinParser, NodesCarryPositions) {
  auto ast = parse_kotlin("\n\nclass Bar(val x: Int)", "Bar.kt");
  EXPECT_EQ(ast.decls[0].pos.line, 3);
  EXPECT_GT(ast.decls[0].pos.column, 0);
  EXPECT_EQ(ast.decls[0].constructor_params[0].pos.line, 3);
}

TEST(JavaParser, JavaCallerOfKotlinGetter) {
  auto ast = parse_java(
      "public class FooJava {\n"
      "    public static void func(BarKotlin bar) {\n"
      "        System.out.println(bar.getX());\n"
      "    }\n"
      "}\n",
      "FooJava.java");
  ASSERT_EQ(ast.decls.size(), 1u);
  EXPECT_EQ(ast.decls[0].name, "FooJava");
  ASSERT_EQ(ast.decls[0].members.size(), 1u);
  const auto& func = ast.decls[0].members[0];
  EXPECT_EQ(func.name, "func");
  EXPECT_TRUE(func.has_modifier("static"));
  ASSERT_EQ(func.params.size(), 1u);
  EXPECT_EQ(func.params[0].type->name, "BarKotlin");
  EXPECT_TRUE(ast.diagnostics.empty());
}

TEST(JavaParser, ExtendsAndImplementsClauses) {
  auto ast = parse_java("class A extends B implements C {}", "A.java");
  ASSERT_EQ(ast.decls[0].supertypes.size(), 2u);
  EXPECT_EQ(ast.decls[0].supertypes[0].type.name, "B");
  EXPECT_EQ(ast.decls[0].supertypes[0].clause, ast::Supertype::Clause::Extends);
  EXPECT_EQ(ast.decls[0].supertypes[1].type.name, "C");
  EXPECT_EQ(ast.decls[0].supertypes[1].clause, ast::Supertype::Clause::Implements);
}

TEST(JavaParser, EmptyFile) {
  auto ast = parse_java("", "E.java");
  EXPECT_TRUE(ast.decls.empty());
}

TEST(JavaParser, UnbalancedDelimiterIsFatal) {
  EXPECT_THROW(parse_java("class A { void f() { g(; }", "A.java"), ParseError);
  EXPECT_THROW(parse_java("class A {", "A.java"), ParseError);
}

TEST(JavaParser, FieldsConstructorsCastsAndStaticImports) {
  auto ast = parse_java(
      "package p;\n"
      "import static q.Util.helper;\n"
      "public class A {\n"
      "    private int count, total = 2;\n"
      "    public A(int c) { this.count = c; }\n"
      "    Object f(Object o) { return (A) o; }\n"
      "}\n",
      "A.java");
  EXPECT_EQ(ast.package_name, "p");
  ASSERT_EQ(ast.imports.size(), 1u);
  EXPECT_TRUE(ast.imports[0].is_static);
  const auto& members = ast.decls[0].members;
  ASSERT_EQ(members.size(), 4u);
  EXPECT_EQ(members[0].kind, ast::DeclKind::Property);
  EXPECT_EQ(members[1].name, "total");
  EXPECT_TRUE(members[2].is_constructor);
  const auto& ret = members[3].body[0];
  EXPECT_EQ(ret.kind, ast::StmtKind::Return);
  EXPECT_EQ(ret.exprs[0].kind, ast::ExprKind::Cast);
}

TEST(JavaParser, UnsupportedConstructsAreSkipped) {
  auto ast = parse_java(
      "class A {\n"
      "  void f() {\n"
      "    switch (x) { case 1: break; }\n"
      "    g();\n"
      "  }\n"
      "  class Inner {}\n"
      "  void g() {}\n"
      "}\n",
      "A.java");
  EXPECT_EQ(ast.diagnostics.size(), 2u);
  ASSERT_EQ(ast.decls[0].members.size(), 2u);
  EXPECT_EQ(ast.decls[0].members[0].body.size(), 1u);
}

TEST(JavaParser, AnnotationTypeAndEnum) {
  auto ast = parse_java("@interface Marker {}\nenum Color { RED, GREEN; }\n", "M.java");
  ASSERT_EQ(ast.decls.size(), 2u);
  EXPECT_EQ(ast.decls[0].flavor, TypeFlavor::Annotation);
  EXPECT_EQ(ast.decls[1].flavor, TypeFlavor::Enum);
  EXPECT_EQ(ast.decls[1].members.size(), 2u);
}
