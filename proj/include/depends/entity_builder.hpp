#pragma once

// Turns a parsed SourceFile into entities. Declarations are interned in
// depth-first pre-order; the AST's entity slots are filled so the resolver
// can map syntax back to entities.

#include <cctype>
#include <string>
#include <vector>

#include "depends/ast.hpp"
#include "depends/java_parser.hpp"
#include "depends/kotlin_parser.hpp"
#include "depends/model.hpp"

namespace depends {

/// JVM accessor names for a Kotlin property: `url` -> getUrl/setUrl,
/// `isOpen` -> isOpen/setOpen.
struct AccessorNames {
  std::string getter;
  std::string setter;
};

inline AccessorNames accessor_names(std::string_view property) {
  auto capitalize = [](std::string_view s) {
    std::string out(s);
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
  };
  if (property.size() > 2 && property.substr(0, 2) == "is" &&
      !std::islower(static_cast<unsigned char>(property[2]))) {
    return {std::string(property), "set" + std::string(property.substr(2))};
  }
  return {"get" + capitalize(property), "set" + capitalize(property)};
}

/// Interns the synthetic getter (and setter for `var`) of a Kotlin property
/// under the property's owner.
inline std::vector<EntityId> synthesize_accessors(EntityTree& tree, EntityId property) {
  const Entity prop = tree.at(property);
  if (prop.kind != EntityKind::Property || prop.language != SourceLanguage::Kotlin)
    throw DependsError("synthesize_accessors: '" + prop.qualified_name + "' is not a Kotlin property");

  AccessorNames names = accessor_names(prop.name);
  std::vector<EntityId> out;

  Entity getter;
  getter.name = names.getter;
  getter.kind = EntityKind::Function;
  getter.language = SourceLanguage::Kotlin;
  getter.parent = prop.parent;
  getter.is_synthetic = true;
  getter.raw_return_type = prop.raw_return_type;
  getter.accessor_of = property;
  out.push_back(tree.intern(std::move(getter)));

  if (prop.is_mutable) {
    Entity setter;
    setter.name = names.setter;
    setter.kind = EntityKind::Function;
    setter.language = SourceLanguage::Kotlin;
    setter.parent = prop.parent;
    setter.is_synthetic = true;
    setter.raw_parameter_types.push_back(prop.raw_return_type.value_or(TypeRef{}));
    setter.accessor_of = property;
    out.push_back(tree.intern(std::move(setter)));
  }
  return out;
}

namespace detail {

class EntityBuilder {
 public:
  EntityBuilder(EntityTree& tree, ast::SourceFile& file) : tree_(tree), file_(file) {}

  std::vector<EntityId> build() {
    std::optional<EntityId> package;
    if (!file_.package_name.empty()) {
      for (EntityId id : tree_.find_all_qualified(file_.package_name)) {
        if (tree_.at(id).kind == EntityKind::Package) package = id;
      }
      if (!package) {
        Entity pkg;
        pkg.name = file_.package_name;
        pkg.kind = EntityKind::Package;
        pkg.language = file_.language;
        package = intern(std::move(pkg));
      }
    }

    Entity file;
    auto slash = file_.path.find_last_of("/\\");
    file.name = slash == std::string::npos ? file_.path : file_.path.substr(slash + 1);
    file.kind = EntityKind::File;
    file.language = file_.language;
    file.parent = package;
    file.location = Location{file_.path, 1, std::max(1, file_.line_count)};
    EntityId file_id = intern(std::move(file));
    if (!package) tree_.note_root_file(file_id);

    for (const ast::Import& imp : file_.imports) {
      tree_.add_import(file_id, ImportDirective{imp.path, imp.wildcard, imp.is_static, imp.alias, imp.pos.line});
    }
    for (ast::Decl& decl : file_.decls) build_decl(decl, file_id, nullptr);
    return created_;
  }

 private:
  EntityId intern(Entity e) {
    EntityId id = tree_.intern(std::move(e));
    created_.push_back(id);
    return id;
  }

  Location location(const ast::Pos& pos, int end_line) const {
    return Location{file_.path, pos.line, std::max(pos.line, end_line)};
  }

  TypeRef type_ref(const ast::TypeExpr& type) const {
    TypeRef ref;
    ref.raw_name = type.is_function ? type.render() : type.name;
    ref.use_site = SourceSite{file_.path, type.pos.line};
    ref.is_function = type.is_function;
    ref.has_receiver = type.has_receiver;
    for (const auto& part : type.parts) ref.signature.push_back(type_ref(part));
    return ref;
  }

  Entity base(std::string name, EntityKind kind, EntityId parent, const ast::Pos& pos, int end_line) const {
    Entity e;
    e.name = std::move(name);
    e.kind = kind;
    e.language = file_.language;
    e.parent = parent;
    e.location = location(pos, end_line);
    return e;
  }

  static std::string render_delegate(const ast::Expr& e) {
    switch (e.kind) {
      case ast::ExprKind::Name: return e.name;
      case ast::ExprKind::Call: return e.name + "()";
      case ast::ExprKind::Member: return render_delegate(e.operands.front()) + "." + e.name;
      default: return "<expression>";
    }
  }

  void build_decl(ast::Decl& decl, EntityId parent, const ast::Decl* enclosing_type) {
    switch (decl.kind) {
      case ast::DeclKind::Type: build_type(decl, parent); break;
      case ast::DeclKind::Function: build_function(decl, parent); break;
      case ast::DeclKind::Property: build_property(decl, parent, enclosing_type); break;
    }
  }

  void build_type(ast::Decl& decl, EntityId parent) {
    Entity e = base(decl.name, EntityKind::Type, parent, decl.pos, decl.end_line);
    e.flavor = decl.flavor;
    for (const auto& st : decl.supertypes) {
      e.raw_supertypes.push_back(type_ref(st.type));
      if (st.delegate && !e.delegates_to) {
        TypeRef ref;
        ref.raw_name = render_delegate(*st.delegate);
        ref.use_site = SourceSite{file_.path, st.delegate->pos.line};
        e.delegates_to = std::move(ref);
      }
    }
    EntityId id = intern(std::move(e));
    decl.entity = id;

    for (ast::Param& p : decl.constructor_params) {
      if (p.is_property) {
        Entity prop = base(p.name, EntityKind::Property, id, p.pos, p.pos.line);
        prop.is_mutable = p.is_var;
        if (p.type) prop.raw_return_type = type_ref(*p.type);
        EntityId pid = intern(std::move(prop));
        p.entity = pid;
        if (file_.language == SourceLanguage::Kotlin) add_accessors(pid);
      } else {
        Entity param = base(p.name, EntityKind::Parameter, id, p.pos, p.pos.line);
        if (p.type) param.raw_return_type = type_ref(*p.type);
        p.entity = intern(std::move(param));
      }
    }
    for (ast::Supertype& st : decl.supertypes) {
      for (ast::Expr& arg : st.args) walk_expr(arg, id);
      if (st.delegate) walk_expr(*st.delegate, id);
    }
    for (ast::Decl& member : decl.members) build_decl(member, id, &decl);
  }

  void build_function(ast::Decl& decl, EntityId parent) {
    Entity e = base(decl.name, EntityKind::Function, parent, decl.pos, decl.end_line);
    if (decl.receiver) {
      e.is_extension = true;
      e.receiver_type = type_ref(*decl.receiver);
    }
    if (decl.return_type) e.raw_return_type = type_ref(*decl.return_type);
    for (const ast::Param& p : decl.params) e.raw_parameter_types.push_back(p.type ? type_ref(*p.type) : TypeRef{});
    EntityId id = intern(std::move(e));
    decl.entity = id;

    for (ast::Param& p : decl.params) {
      Entity param = base(p.name, EntityKind::Parameter, id, p.pos, p.pos.line);
      if (p.type) param.raw_return_type = type_ref(*p.type);
      p.entity = intern(std::move(param));
    }
    walk_stmts(decl.body, id);
    if (decl.expression_body) walk_expr(*decl.expression_body, id);
  }

  void build_property(ast::Decl& decl, EntityId parent, const ast::Decl* enclosing_type) {
    Entity e = base(decl.name, EntityKind::Property, parent, decl.pos, decl.end_line);
    e.is_mutable = decl.is_var;
    if (decl.return_type) {
      e.raw_return_type = type_ref(*decl.return_type);
    } else if (decl.is_enum_constant && enclosing_type) {
      TypeRef self;
      self.raw_name = enclosing_type->name;
      self.use_site = SourceSite{file_.path, decl.pos.line};
      e.raw_return_type = std::move(self);
    }
    EntityId id = intern(std::move(e));
    decl.entity = id;
    if (file_.language == SourceLanguage::Kotlin && !decl.is_enum_constant) add_accessors(id);
    if (decl.initializer) walk_expr(*decl.initializer, id);
    if (decl.delegate) walk_expr(*decl.delegate, id);
  }

  void add_accessors(EntityId property) {
    for (EntityId id : synthesize_accessors(tree_, property)) created_.push_back(id);
  }

  void walk_stmts(std::vector<ast::Stmt>& stmts, EntityId owner) {
    for (ast::Stmt& s : stmts) walk_stmt(s, owner);
  }

  void declare_local(ast::Stmt& s, EntityId owner) {
    Entity var = base(s.name, EntityKind::Variable, owner, s.pos, s.pos.line);
    var.is_mutable = s.is_var;
    if (s.type) var.raw_return_type = type_ref(*s.type);
    s.entity = intern(std::move(var));
  }

  void walk_stmt(ast::Stmt& s, EntityId owner) {
    if (s.kind == ast::StmtKind::LocalVar) declare_local(s, owner);
    for (ast::Stmt& init : s.init) walk_stmt(init, owner);
    for (ast::Expr& e : s.exprs) walk_expr(e, owner);
    walk_stmts(s.body, owner);
    walk_stmts(s.else_body, owner);
  }

  void walk_expr(ast::Expr& e, EntityId owner) {
    for (ast::Param& p : e.lambda_params) {
      Entity param = base(p.name, EntityKind::Parameter, owner, p.pos, p.pos.line);
      if (p.type) param.raw_return_type = type_ref(*p.type);
      p.entity = intern(std::move(param));
    }
    for (ast::Expr& op : e.operands) walk_expr(op, owner);
    for (ast::Expr& arg : e.args) walk_expr(arg, owner);
    walk_stmts(e.body, owner);
    walk_stmts(e.else_body, owner);
  }

  EntityTree& tree_;
  ast::SourceFile& file_;
  std::vector<EntityId> created_;
};

}  // namespace detail

/// Interns the entities of a parsed Kotlin file. Functions declared with a
/// receiver are marked as extensions; every property gains synthetic JVM
/// accessors.
inline std::vector<EntityId> build_kotlin_entities(KotlinAst& ast, EntityTree& tree) {
  if (ast.language != SourceLanguage::Kotlin) throw DependsError("build_kotlin_entities: not a Kotlin AST");
  return detail::EntityBuilder(tree, ast).build();
}

inline std::vector<EntityId> build_java_entities(JavaAst& ast, EntityTree& tree) {
  if (ast.language != SourceLanguage::Java) throw DependsError("build_java_entities: not a Java AST");
  return detail::EntityBuilder(tree, ast).build();
}

}  // namespace depends
