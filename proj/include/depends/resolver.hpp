#pragma once

// Expression analysis and relation resolution over the ASTs of one run.
//
// Inference proceeds in rounds. Each round walks every body and initializer
// in file order, filling expression types and targets that have become
// knowable; a slot that is set is never changed afterwards. The final walk
// records relations from the settled slots.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depends/ast.hpp"
#include "depends/model.hpp"
#include "depends/relations.hpp"

namespace depends {

struct InferenceConfig {
  int max_rounds = 5;
};

struct InferenceReport {
  int rounds_used = 0;
  std::vector<std::size_t> resolved_per_round;
  bool converged = false;
};

class Resolver {
 public:
  Resolver(EntityTree& tree, std::vector<ast::SourceFile>& files, InferenceConfig config = {})
      : tree_(tree), files_(files), config_(config) {
    if (config_.max_rounds < 1) throw DependsError("InferenceConfig: max_rounds must be at least 1");
    for (const Entity& e : tree_.entities()) {
      if (e.kind == EntityKind::File && e.location) file_ids_.emplace(e.location->file, e.id);
    }
  }

  /// Resolves every raw type name on entities. Returns how many resolved.
  std::size_t resolve_type_refs() {
    std::size_t count = 0;
    for (std::size_t i = 0; i < tree_.size(); ++i) {
      Entity& e = tree_.at(EntityId{static_cast<std::uint32_t>(i)});
      if (e.language == SourceLanguage::Builtin) continue;
      EntityId scope = e.kind == EntityKind::Function ? e.id : e.parent.value_or(e.id);
      for (TypeRef& ref : e.raw_supertypes) count += resolve_ref(ref, scope);
      if (e.raw_return_type) count += resolve_ref(*e.raw_return_type, scope);
      for (TypeRef& ref : e.raw_parameter_types) count += resolve_ref(ref, scope);
      if (e.receiver_type) count += resolve_ref(*e.receiver_type, scope);
    }
    refs_resolved_ = true;
    return count;
  }

  /// Runs rounds until one adds nothing or the bound is hit. The confirming
  /// zero-progress round counts as used.
  InferenceReport run_inference() {
    prepare();
    InferenceReport report;
    while (report.rounds_used < config_.max_rounds) {
      std::size_t added = run_round();
      ++report.rounds_used;
      report.resolved_per_round.push_back(added);
      if (added == 0) {
        report.converged = true;
        break;
      }
    }
    return report;
  }

  /// One inference pass; returns the number of newly settled facts.
  std::size_t run_round() {
    prepare();
    std::size_t before = facts_;
    walk_all(false);
    return facts_ - before;
  }

  /// Records Extension(function -> receiver type) for every extension
  /// function whose receiver resolved.
  std::vector<std::pair<EntityId, EntityId>> resolve_extensions() {
    prepare();
    std::vector<std::pair<EntityId, EntityId>> out;
    for (const Entity& e : tree_.entities()) {
      if (!e.is_extension) continue;
      if (!e.receiver_type || !e.receiver_type->resolved) {
        diagnostics_.push_back("unresolved receiver type '" +
                               (e.receiver_type ? e.receiver_type->raw_name : std::string()) +
                               "' for extension " + e.qualified_name);
        continue;
      }
      EntityId target = *e.receiver_type->resolved;
      out.emplace_back(e.id, target);
      store_.record(tree_, e.id, target, RelationKind::Extension, e.receiver_type->use_site);
    }
    extensions_recorded_ = true;
    return out;
  }

  RelationStore& collect_relations() {
    prepare();
    if (!extensions_recorded_) resolve_extensions();
    collect_declarations();
    walk_all(true);
    for (const auto& file : files_) collect_imports(file);
    return store_;
  }

  const RelationStore& relations() const { return store_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  /// Declared or inferred type of a value (property, variable, parameter)
  /// or the result type of a function.
  std::optional<EntityId> type_of(EntityId id) const {
    const Entity& e = tree_.at(id);
    if (e.kind == EntityKind::Type || e.kind == EntityKind::File || e.kind == EntityKind::Package) return std::nullopt;
    if (e.raw_return_type && !e.raw_return_type->is_function && e.raw_return_type->resolved)
      return e.raw_return_type->resolved;
    if (auto it = inferred_.find(id.value); it != inferred_.end()) return it->second;
    if (e.accessor_of && e.raw_parameter_types.empty()) return type_of(*e.accessor_of);
    return std::nullopt;
  }

  /// Extension functions keyed by receiver type id.
  const std::map<std::uint32_t, std::vector<EntityId>>& extension_index() const { return extension_index_; }

 private:
  struct Frame {
    std::optional<EntityId> receiver;
    std::vector<std::pair<std::string, EntityId>> locals;
  };

  struct Ctx {
    const ast::SourceFile* file = nullptr;
    EntityId owner;
    EntityId scope;
    std::optional<EntityId> function;
    std::vector<Frame> frames;
    bool java = false;
  };

  static constexpr KindMask kValues{EntityKind::Property, EntityKind::Variable, EntityKind::Parameter};
  static constexpr KindMask kMembers{EntityKind::Property, EntityKind::Function, EntityKind::Type};

  void prepare() {
    if (!refs_resolved_) resolve_type_refs();
    if (!index_built_) {
      for (const Entity& e : tree_.entities()) {
        if (e.is_extension && e.receiver_type && e.receiver_type->resolved)
          extension_index_[e.receiver_type->resolved->value].push_back(e.id);
      }
      index_built_ = true;
    }
  }

  std::size_t resolve_ref(TypeRef& ref, EntityId scope) {
    std::size_t count = 0;
    for (TypeRef& part : ref.signature) count += resolve_ref(part, scope);
    if (ref.is_function || ref.resolved || ref.raw_name.empty()) return count;
    if (auto hit = tree_.lookup(scope, ref.raw_name, KindMask{EntityKind::Type})) {
      ref.resolved = hit;
      ++count;
    }
    return count;
  }

  // ---- lookup ---------------------------------------------------------

  /// The type followed by its supertypes breadth-first, then Any.
  std::vector<EntityId> type_chain(EntityId type) const {
    std::vector<EntityId> chain{type};
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (const TypeRef& st : tree_.at(chain[i]).raw_supertypes) {
        if (st.resolved && std::find(chain.begin(), chain.end(), *st.resolved) == chain.end())
          chain.push_back(*st.resolved);
      }
    }
    if (auto any = tree_.builtin("Any"); any && std::find(chain.begin(), chain.end(), *any) == chain.end())
      chain.push_back(*any);
    return chain;
  }

  std::vector<EntityId> find_member(EntityId type, std::string_view name, KindMask mask, bool synthetic) const {
    if (tree_.at(type).kind != EntityKind::Type) return {};
    std::vector<EntityId> chain = type_chain(type);
    for (EntityId t : chain) {
      std::vector<EntityId> hits;
      for (EntityId child : tree_.children(t)) {
        const Entity& c = tree_.at(child);
        if (c.name == name && mask.contains(c.kind) && kMembers.contains(c.kind) && (synthetic || !c.is_synthetic))
          hits.push_back(child);
      }
      if (!hits.empty()) return hits;
    }
    if (mask.contains(EntityKind::Function)) {
      for (EntityId t : chain) {
        std::vector<EntityId> hits;
        auto it = extension_index_.find(t.value);
        if (it == extension_index_.end()) continue;
        for (EntityId fn : it->second)
          if (tree_.at(fn).name == name) hits.push_back(fn);
        if (!hits.empty()) return hits;
      }
    }
    return {};
  }

  /// Innermost frames first (lambda parameters, then pushed receivers),
  /// then the enclosing declarations outward.
  std::vector<EntityId> lookup_in(const Ctx& ctx, std::string_view name, KindMask mask) const {
    for (auto frame = ctx.frames.rbegin(); frame != ctx.frames.rend(); ++frame) {
      if (frame->receiver) {
        auto hits = find_member(*frame->receiver, name, mask, ctx.java);
        if (!hits.empty()) return hits;
        continue;
      }
      for (auto local = frame->locals.rbegin(); local != frame->locals.rend(); ++local) {
        if (local->first == name && mask.contains(tree_.at(local->second).kind)) return {local->second};
      }
    }
    std::optional<EntityId> cur = ctx.scope;
    while (cur) {
      const Entity& e = tree_.at(*cur);
      if (e.kind == EntityKind::Type) {
        auto hits = find_member(*cur, name, mask, ctx.java);
        if (!hits.empty()) return hits;
      } else if (e.kind == EntityKind::File || e.kind == EntityKind::Package) {
        return tree_.lookup_all(*cur, name, mask, ctx.java);
      }
      cur = e.parent;
    }
    return {};
  }

  std::optional<EntityId> resolve_type_expr(const ast::TypeExpr& type, EntityId scope) const {
    if (type.is_function || type.name.empty()) return std::nullopt;
    return tree_.lookup(scope, type.name, KindMask{EntityKind::Type});
  }

  std::optional<EntityId> enclosing_type(EntityId id) const {
    std::optional<EntityId> cur = id;
    while (cur) {
      if (tree_.at(*cur).kind == EntityKind::Type) return cur;
      cur = tree_.at(*cur).parent;
    }
    return std::nullopt;
  }

  std::optional<EntityId> this_type(const Ctx& ctx) const {
    for (auto frame = ctx.frames.rbegin(); frame != ctx.frames.rend(); ++frame)
      if (frame->receiver) return frame->receiver;
    return enclosing_type(ctx.scope);
  }

  static std::optional<std::string> dotted(const ast::Expr& e) {
    if (e.kind == ast::ExprKind::Name) return e.name;
    if (e.kind == ast::ExprKind::Member && e.operands.size() == 1) {
      if (auto head = dotted(e.operands.front())) return *head + "." + e.name;
    }
    return std::nullopt;
  }

  std::vector<EntityId> qualified(const std::string& name, KindMask mask) const {
    std::vector<EntityId> out;
    for (EntityId id : tree_.find_all_qualified(name))
      if (mask.contains(tree_.at(id).kind)) out.push_back(id);
    return out;
  }

  std::optional<EntityId> choose_overload(const std::vector<EntityId>& hits, std::size_t arity) const {
    std::optional<EntityId> first_fn;
    for (EntityId id : hits) {
      const Entity& e = tree_.at(id);
      if (e.kind != EntityKind::Function) continue;
      if (!first_fn) first_fn = id;
      if (e.raw_parameter_types.size() == arity) return id;
    }
    if (first_fn) return first_fn;
    if (hits.empty()) return std::nullopt;
    return hits.front();
  }

  // ---- settling ------------------------------------------------------

  // The collecting walk only reads what the rounds settled, except inside
  // lambda bodies that no round could reach.
  bool frozen() const { return collecting_ && deferred_lambdas_ == 0; }

  void settle(std::optional<EntityId>& slot, std::optional<EntityId> value) {
    if (frozen()) return;
    if (!slot && value) {
      slot = value;
      ++facts_;
    }
  }

  void infer_entity(EntityId id, std::optional<EntityId> type) {
    if (!type || frozen() || type_of(id)) return;
    const Entity& e = tree_.at(id);
    if (e.raw_return_type && e.raw_return_type->resolved) return;
    if (inferred_.emplace(id.value, *type).second) ++facts_;
  }

  void record(const Ctx& ctx, EntityId target, RelationKind kind, int line) {
    record_from(ctx.owner, ctx, target, kind, line);
  }

  void record_from(EntityId source, const Ctx& ctx, EntityId target, RelationKind kind, int line) {
    if (!collecting_) return;
    if (tree_.is_builtin(target) && kind != RelationKind::Call && kind != RelationKind::Extension) return;
    store_.record(tree_, source, target, kind, SourceSite{ctx.file->path, line});
  }

  // ---- walking -------------------------------------------------------

  void walk_all(bool collect) {
    collecting_ = collect;
    for (auto& file : files_) {
      for (auto& decl : file.decls) walk_decl(decl, file, nullptr);
    }
    collecting_ = false;
  }

  Ctx base_ctx(const ast::SourceFile& file, EntityId owner, EntityId scope) const {
    Ctx ctx;
    ctx.file = &file;
    ctx.owner = owner;
    ctx.scope = scope;
    ctx.java = file.language == SourceLanguage::Java;
    return ctx;
  }

  static Frame constructor_frame(const ast::Decl* type) {
    Frame frame;
    if (!type) return frame;
    for (const auto& p : type->constructor_params)
      if (p.entity) frame.locals.emplace_back(p.name, *p.entity);
    return frame;
  }

  void walk_decl(ast::Decl& decl, const ast::SourceFile& file, const ast::Decl* enclosing) {
    if (!decl.entity) return;
    switch (decl.kind) {
      case ast::DeclKind::Type: walk_type(decl, file); break;
      case ast::DeclKind::Function: walk_function(decl, file); break;
      case ast::DeclKind::Property: walk_property(decl, file, enclosing); break;
    }
  }

  void walk_type(ast::Decl& decl, const ast::SourceFile& file) {
    EntityId cls = *decl.entity;
    Ctx ctx = base_ctx(file, cls, cls);
    ctx.frames.push_back(constructor_frame(&decl));
    for (auto& st : decl.supertypes) {
      for (auto& arg : st.args) eval(arg, ctx);
      if (st.delegate) {
        auto type = eval(*st.delegate, ctx);
        Entity& e = tree_.at(cls);
        if (e.delegates_to && type) e.delegates_to->resolved = type;
        if (type) record(ctx, *type, RelationKind::Delegate, st.delegate->pos.line);
      }
    }
    for (auto& member : decl.members) walk_decl(member, file, &decl);
  }

  void walk_function(ast::Decl& decl, const ast::SourceFile& file) {
    EntityId fn = *decl.entity;
    Ctx ctx = base_ctx(file, fn, fn);
    ctx.function = fn;
    const Entity& e = tree_.at(fn);
    if (e.receiver_type && e.receiver_type->resolved) ctx.frames.push_back(Frame{e.receiver_type->resolved, {}});
    Frame params;
    for (const auto& p : decl.params)
      if (p.entity) params.locals.emplace_back(p.name, *p.entity);
    ctx.frames.push_back(std::move(params));
    walk_block(decl.body, ctx);
    if (decl.expression_body) {
      auto type = eval(*decl.expression_body, ctx);
      infer_entity(fn, type);
    }
  }

  void walk_property(ast::Decl& decl, const ast::SourceFile& file, const ast::Decl* enclosing) {
    EntityId prop = *decl.entity;
    EntityId scope = tree_.at(prop).parent.value_or(prop);
    Ctx ctx = base_ctx(file, prop, scope);
    ctx.frames.push_back(constructor_frame(enclosing));
    if (decl.initializer) {
      auto type = eval(*decl.initializer, ctx);
      if (!decl.is_enum_constant) infer_entity(prop, type);
    }
    if (decl.delegate) {
      auto type = eval(*decl.delegate, ctx);
      // Property delegation is attributed to the owning class.
      EntityId source = tree_.at(scope).kind == EntityKind::Type ? scope : prop;
      if (type) record_from(source, ctx, *type, RelationKind::Delegate, decl.delegate->pos.line);
    }
  }

  void walk_block(std::vector<ast::Stmt>& stmts, Ctx& ctx) {
    ctx.frames.emplace_back();
    for (auto& s : stmts) walk_stmt(s, ctx);
    ctx.frames.pop_back();
  }

  void declare(ast::Stmt& s, Ctx& ctx, std::optional<EntityId> init_type) {
    if (!s.entity) return;
    infer_entity(*s.entity, init_type);
    ctx.frames.back().locals.emplace_back(s.name, *s.entity);
  }

  void walk_stmt(ast::Stmt& s, Ctx& ctx) {
    switch (s.kind) {
      case ast::StmtKind::LocalVar: {
        std::optional<EntityId> type;
        for (auto& e : s.exprs) type = eval(e, ctx);
        declare(s, ctx, type);
        break;
      }
      case ast::StmtKind::For: {
        ctx.frames.emplace_back();
        for (auto& init : s.init) {
          if (init.kind == ast::StmtKind::LocalVar && init.exprs.empty()) declare(init, ctx, std::nullopt);
          else walk_stmt(init, ctx);
        }
        for (auto& e : s.exprs) eval(e, ctx);
        walk_block(s.body, ctx);
        ctx.frames.pop_back();
        break;
      }
      default:
        for (auto& e : s.exprs) eval(e, ctx);
        walk_block(s.body, ctx);
        walk_block(s.else_body, ctx);
        break;
    }
  }

  std::optional<EntityId> literal_type(ast::LiteralKind kind) const {
    switch (kind) {
      case ast::LiteralKind::Int: return tree_.builtin("Int");
      case ast::LiteralKind::Long: return tree_.builtin("Long");
      case ast::LiteralKind::Double: return tree_.builtin("Double");
      case ast::LiteralKind::Float: return tree_.builtin("Float");
      case ast::LiteralKind::Boolean: return tree_.builtin("Boolean");
      case ast::LiteralKind::Char: return tree_.builtin("Char");
      case ast::LiteralKind::String: return tree_.builtin("String");
      case ast::LiteralKind::Null: return std::nullopt;
    }
    return std::nullopt;
  }

  /// Result type of invoking a value of function type.
  std::optional<EntityId> invocation_type(EntityId value) const {
    const Entity& e = tree_.at(value);
    if (e.raw_return_type && e.raw_return_type->is_function) {
      if (const TypeRef* result = e.raw_return_type->result()) return result->resolved;
    }
    return std::nullopt;
  }

  /// Members reachable through a receiver expression: statically through a
  /// type name, otherwise through the receiver's inferred type.
  std::vector<EntityId> member_hits(const ast::Expr& recv, const Ctx& ctx, std::string_view name, KindMask mask) const {
    if (recv.names_type && recv.target) return find_member(*recv.target, name, mask, ctx.java);
    if (recv.inferred_type) return find_member(*recv.inferred_type, name, mask, ctx.java);
    return {};
  }

  std::optional<EntityId> eval(ast::Expr& e, Ctx& ctx) {
    switch (e.kind) {
      case ast::ExprKind::Literal: settle(e.inferred_type, literal_type(e.literal)); break;
      case ast::ExprKind::Name: eval_name(e, ctx); break;
      case ast::ExprKind::This: settle(e.inferred_type, this_type(ctx)); break;
      case ast::ExprKind::Member: eval_member(e, ctx); break;
      case ast::ExprKind::Call: eval_call(e, ctx); break;
      case ast::ExprKind::New: {
        if (!e.target && e.type) settle(e.target, resolve_type_expr(*e.type, ctx.scope));
        for (auto& arg : e.args) eval(arg, ctx);
        if (e.target) {
          record(ctx, *e.target, RelationKind::Create, e.pos.line);
          settle(e.inferred_type, e.target);
        }
        break;
      }
      case ast::ExprKind::Cast: {
        for (auto& op : e.operands) eval(op, ctx);
        if (!e.target && e.type) settle(e.target, resolve_type_expr(*e.type, ctx.scope));
        if (e.target) {
          record(ctx, *e.target, RelationKind::Cast, e.pos.line);
          settle(e.inferred_type, e.target);
        }
        break;
      }
      case ast::ExprKind::Lambda: eval_lambda(e, ctx, std::nullopt); break;
      case ast::ExprKind::Binary: eval_binary(e, ctx); break;
      case ast::ExprKind::Unary: {
        auto type = e.operands.empty() ? std::nullopt : eval(e.operands.front(), ctx);
        settle(e.inferred_type, e.name == "!" ? tree_.builtin("Boolean") : type);
        break;
      }
      case ast::ExprKind::If: {
        for (auto& op : e.operands) eval(op, ctx);
        walk_block(e.body, ctx);
        walk_block(e.else_body, ctx);
        settle(e.inferred_type, branch_type(e.body));
        settle(e.inferred_type, branch_type(e.else_body));
        break;
      }
      case ast::ExprKind::Unknown:
        for (auto& op : e.operands) eval(op, ctx);
        for (auto& arg : e.args) eval(arg, ctx);
        break;
    }
    return e.inferred_type;
  }

  static std::optional<EntityId> branch_type(const std::vector<ast::Stmt>& body) {
    if (body.empty() || body.back().kind != ast::StmtKind::Expr || body.back().exprs.empty()) return std::nullopt;
    return body.back().exprs.front().inferred_type;
  }

  void use_target(ast::Expr& e, const Ctx& ctx) {
    const Entity& t = tree_.at(*e.target);
    if (t.kind == EntityKind::Type) {
      e.names_type = true;
      return;
    }
    if (kValues.contains(t.kind)) {
      record(ctx, *e.target, RelationKind::Use, e.pos.line);
      settle(e.inferred_type, type_of(*e.target));
    }
  }

  void eval_name(ast::Expr& e, Ctx& ctx) {
    if (!e.target) {
      auto hits = lookup_in(ctx, e.name, kValues | KindMask{EntityKind::Type});
      if (!hits.empty()) settle(e.target, hits.front());
    }
    if (e.target) use_target(e, ctx);
  }

  void eval_member(ast::Expr& e, Ctx& ctx) {
    ast::Expr& recv = e.operands.front();
    eval(recv, ctx);
    if (!e.target) {
      auto hits = member_hits(recv, ctx, e.name, KindMask{EntityKind::Property, EntityKind::Type});
      if (hits.empty() && !recv.target && !recv.inferred_type) {
        if (auto path = dotted(e)) hits = qualified(*path, KindMask{EntityKind::Type});
      }
      if (!hits.empty()) settle(e.target, hits.front());
    }
    if (e.target) use_target(e, ctx);
  }

  void eval_call(ast::Expr& e, Ctx& ctx) {
    for (auto& op : e.operands) eval(op, ctx);
    for (auto& arg : e.args)
      if (arg.kind != ast::ExprKind::Lambda) eval(arg, ctx);

    if (e.name.empty()) {
      // Invocation of a value: `f()` where f is not a simple name.
      if (!e.operands.empty() && e.operands.front().target) {
        settle(e.inferred_type, invocation_type(*e.operands.front().target));
      }
      eval_lambda_args(e, ctx, true);
      return;
    }

    if (!e.target) {
      const KindMask callable{EntityKind::Function, EntityKind::Type};
      std::vector<EntityId> hits;
      if (!e.operands.empty()) {
        const ast::Expr& recv = e.operands.front();
        hits = member_hits(recv, ctx, e.name, callable);
        if (hits.empty() && !recv.target && !recv.inferred_type) {
          if (auto path = dotted(recv)) hits = qualified(*path + "." + e.name, callable);
        }
      } else {
        hits = lookup_in(ctx, e.name, callable);
        if (hits.empty()) hits = lookup_in(ctx, e.name, kValues);
      }
      settle(e.target, choose_overload(hits, e.args.size()));
    }

    if (e.target) {
      const Entity& t = tree_.at(*e.target);
      if (t.kind == EntityKind::Function) {
        record(ctx, *e.target, RelationKind::Call, e.pos.line);
        settle(e.inferred_type, type_of(*e.target));
      } else if (t.kind == EntityKind::Type) {
        record(ctx, *e.target, RelationKind::Create, e.pos.line);
        settle(e.inferred_type, e.target);
      } else {
        record(ctx, *e.target, RelationKind::Use, e.pos.line);
        settle(e.inferred_type, invocation_type(*e.target));
      }
    }
    eval_lambda_args(e, ctx, e.target.has_value());
  }

  /// Lambda arguments are evaluated once the callee is known, so a receiver
  /// declared by the parameter's function type can be put in scope. Bodies
  /// of unresolvable callees wait for the final walk.
  void eval_lambda_args(ast::Expr& call, Ctx& ctx, bool callee_known) {
    if (!callee_known && !collecting_) return;
    std::optional<EntityId> fn;
    if (call.target && tree_.at(*call.target).kind == EntityKind::Function) fn = call.target;
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      ast::Expr& arg = call.args[i];
      if (arg.kind != ast::ExprKind::Lambda) continue;
      std::optional<EntityId> receiver;
      if (fn) {
        const auto& params = tree_.at(*fn).raw_parameter_types;
        if (i < params.size()) {
          if (const TypeRef* r = params[i].receiver()) receiver = r->resolved;
        }
      }
      if (!callee_known) ++deferred_lambdas_;
      eval_lambda(arg, ctx, receiver);
      if (!callee_known) --deferred_lambdas_;
    }
  }

  void eval_lambda(ast::Expr& e, Ctx& ctx, std::optional<EntityId> receiver) {
    std::size_t depth = ctx.frames.size();
    if (receiver) ctx.frames.push_back(Frame{receiver, {}});
    Frame params;
    for (auto& p : e.lambda_params)
      if (p.entity) params.locals.emplace_back(p.name, *p.entity);
    ctx.frames.push_back(std::move(params));
    for (auto& s : e.body) walk_stmt(s, ctx);
    ctx.frames.resize(depth);
  }

  void eval_binary(ast::Expr& e, Ctx& ctx) {
    std::optional<EntityId> lhs, rhs;
    if (!e.operands.empty()) lhs = eval(e.operands[0], ctx);
    if (e.operands.size() > 1) rhs = eval(e.operands[1], ctx);
    static const std::vector<std::string_view> kBoolean{"==", "!=", "===", "!==", "<",  ">",   "<=",
                                                        ">=", "&&", "||",  "is",  "in", "instanceof"};
    static const std::vector<std::string_view> kArithmetic{"+", "-", "*", "/", "%", "&", "|", "^", "<<", ">>", ">>>"};
    if (std::find(kBoolean.begin(), kBoolean.end(), e.name) != kBoolean.end()) {
      settle(e.inferred_type, tree_.builtin("Boolean"));
    } else if (std::find(kArithmetic.begin(), kArithmetic.end(), e.name) != kArithmetic.end()) {
      settle(e.inferred_type, lhs);
    } else if (e.name == "?:") {
      settle(e.inferred_type, lhs ? lhs : rhs);
    }
  }

  // ---- declaration-level relations ------------------------------------

  void collect_declarations() {
    collecting_ = true;
    for (auto& file : files_)
      for (auto& decl : file.decls) collect_decl(decl, file);
    for (const Entity& e : tree_.entities()) {
      if (e.is_synthetic || e.language == SourceLanguage::Builtin) continue;
      switch (e.kind) {
        case EntityKind::Type: collect_type(e); break;
        case EntityKind::Function: collect_function(e); break;
        default: break;
      }
    }
    collecting_ = false;
  }

  void record_site(EntityId source, EntityId target, RelationKind kind, const SourceSite& site) {
    if (tree_.is_builtin(target) && kind != RelationKind::Call && kind != RelationKind::Extension) return;
    store_.record(tree_, source, target, kind, site);
  }

  static SourceSite site_of(const Entity& e) {
    return e.location ? SourceSite{e.location->file, e.location->start_line} : SourceSite{};
  }

  void collect_type(const Entity& e) {
    for (const TypeRef& st : e.raw_supertypes) {
      if (!st.resolved) continue;
      const Entity& target = tree_.at(*st.resolved);
      bool implement = target.flavor == TypeFlavor::Interface && e.flavor != TypeFlavor::Interface;
      record_site(e.id, *st.resolved, implement ? RelationKind::Implement : RelationKind::Extend, st.use_site);
    }
    for (EntityId child : tree_.children(e.id)) {
      const Entity& c = tree_.at(child);
      if (c.kind != EntityKind::Property || c.is_synthetic) continue;
      auto type = type_of(child);
      if (type && *type != e.id) record_site(e.id, *type, RelationKind::Contain, site_of(c));
    }
  }

  void record_signature(EntityId fn, const TypeRef& ref, RelationKind kind) {
    if (ref.resolved) record_site(fn, *ref.resolved, kind, ref.use_site);
    for (const TypeRef& part : ref.signature) record_signature(fn, part, kind);
  }

  void collect_function(const Entity& e) {
    for (const TypeRef& p : e.raw_parameter_types) record_signature(e.id, p, RelationKind::Parameter);
    if (e.raw_return_type) record_signature(e.id, *e.raw_return_type, RelationKind::Return);
  }

  void annotate(EntityId source, const std::vector<ast::Annotation>& annotations) {
    const Entity& e = tree_.at(source);
    EntityId scope = e.parent.value_or(source);
    for (const auto& a : annotations) {
      if (auto target = tree_.lookup(scope, a.name, KindMask{EntityKind::Type}))
        record_site(source, *target, RelationKind::Annotation, SourceSite{e.location ? e.location->file : "", a.pos.line});
    }
  }

  void collect_decl(ast::Decl& decl, const ast::SourceFile& file) {
    if (!decl.entity) return;
    annotate(*decl.entity, decl.annotations);
    for (const auto& p : decl.params) annotate(*decl.entity, p.annotations);
    for (const auto& p : decl.constructor_params) annotate(p.is_property && p.entity ? *p.entity : *decl.entity, p.annotations);
    for (auto& member : decl.members) collect_decl(member, file);
  }

  void collect_imports(const ast::SourceFile& file) {
    auto it = file_ids_.find(file.path);
    if (it == file_ids_.end()) return;
    EntityId file_id = it->second;
    for (const ImportDirective& imp : tree_.imports(file_id)) {
      if (imp.wildcard) continue;
      std::optional<EntityId> target;
      for (EntityId id : tree_.find_all_qualified(imp.path)) {
        EntityKind k = tree_.at(id).kind;
        if (k == EntityKind::Type) {
          target = id;
          break;
        }
        if (!target && (k == EntityKind::Function || k == EntityKind::Property)) target = id;
      }
      if (target) record_site(file_id, *target, RelationKind::Import, SourceSite{file.path, imp.line});
    }
  }

  EntityTree& tree_;
  std::vector<ast::SourceFile>& files_;
  InferenceConfig config_;
  RelationStore store_;
  std::map<std::string, EntityId> file_ids_;
  std::map<std::uint32_t, EntityId> inferred_;
  std::map<std::uint32_t, std::vector<EntityId>> extension_index_;
  std::vector<std::string> diagnostics_;
  std::size_t facts_ = 0;
  bool refs_resolved_ = false;
  bool index_built_ = false;
  bool extensions_recorded_ = false;
  bool collecting_ = false;
  int deferred_lambdas_ = 0;
};

}  // namespace depends
