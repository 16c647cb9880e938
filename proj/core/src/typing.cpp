#include "seal/typing.hpp"

#include "seal/print.hpp"

namespace seal {

std::optional<Type> unify(const Type& a, const Type& b) {
  if (a.tag() == Type::Tag::Hole) return b.tag() == Type::Tag::Hole ? a : b;
  if (b.tag() == Type::Tag::Hole) return a;
  if (a.tag() != b.tag()) return std::nullopt;
  switch (a.tag()) {
    case Type::Tag::Unit: return a;
    case Type::Tag::Base: return a.level() == b.level() ? std::optional<Type>(a) : std::nullopt;
    case Type::Tag::Arrow:
    case Type::Tag::Prod:
    case Type::Tag::Sum: {
      auto l = unify(a.left(), b.left());
      auto r = unify(a.right(), b.right());
      if (!l || !r) return std::nullopt;
      if (a.tag() == Type::Tag::Arrow) return Type::arrow(*l, *r);
      if (a.tag() == Type::Tag::Prod) return Type::prod(*l, *r);
      return Type::sum(*l, *r);
    }
    case Type::Tag::Seal:
    case Type::Tag::Monad: {
      if (a.level() != b.level()) return std::nullopt;
      auto body = unify(a.body(), b.body());
      if (!body) return std::nullopt;
      return a.tag() == Type::Tag::Seal ? Type::seal(a.level(), *body)
                                        : Type::monad(a.level(), *body);
    }
    case Type::Tag::Hole: return a;
  }
  return std::nullopt;
}

bool type_in_calculus(const LevelPoset& p, const Type& t, Calculus calc) {
  switch (t.tag()) {
    case Type::Tag::Unit: return true;
    case Type::Tag::Hole: return false;
    case Type::Tag::Base:
      return calc == Calculus::Stlc && p.contains(t.level());
    case Type::Tag::Arrow:
    case Type::Tag::Prod:
    case Type::Tag::Sum:
      return type_in_calculus(p, t.left(), calc) && type_in_calculus(p, t.right(), calc);
    case Type::Tag::Seal:
      return calc == Calculus::Dc && p.contains(t.level()) &&
             type_in_calculus(p, t.body(), calc);
    case Type::Tag::Monad:
      return calc == Calculus::Dpc && p.contains(t.level()) &&
             type_in_calculus(p, t.body(), calc);
  }
  return false;
}

bool protected_at(const LevelPoset& p, const std::string& l, const Type& t) {
  if (!p.contains(l)) fail(Err::UnknownLabel, l);
  switch (t.tag()) {
    case Type::Tag::Unit: return true;
    case Type::Tag::Prod:
      return protected_at(p, l, t.left()) && protected_at(p, l, t.right());
    case Type::Tag::Arrow: return protected_at(p, l, t.right());
    case Type::Tag::Monad:
      return p.leq(l, t.level()) || protected_at(p, l, t.body());
    case Type::Tag::Sum: return false;  // the tag itself leaks
    default: return false;
  }
}

namespace {

using Tag = Term::Tag;

struct Checker {
  const LevelPoset& poset;
  const NamedCtx& named;
  Calculus calc;
  Obs obs;                  // unused for stlc
  std::vector<Type> stack;  // binder types, outermost first

  std::vector<Type> ctx_snapshot() const {
    std::vector<Type> out;
    out.reserve(named.size() + stack.size());
    for (const auto& [_, ty] : named) out.push_back(ty);
    for (const auto& ty : stack) out.push_back(ty);
    return out;
  }

  void require_type(const Type& t) {
    if (!type_in_calculus(poset, t, calc))
      fail(Err::ForeignConstruct, "type " + print_type(t) + " is not valid here");
  }

  Derivation node(const char* rule, const Term& t, Type ty, std::string level = "",
                  std::vector<Derivation> kids = {}) {
    return Derivation{rule, t, std::move(ty), std::move(level), ctx_snapshot(),
                      std::move(kids)};
  }

  Type merge(const Type& got, const Type* target, const Term& at) {
    if (!target) return got;
    auto u = unify(got, *target);
    if (!u)
      fail(Err::TypeMismatch, "expected " + print_type(*target) + ", found " +
                                  print_type(got) + " in " + print_term(at));
    return *u;
  }

  Derivation check(const Term& t, const Type* target) {
    switch (t.tag()) {
      case Tag::Free: {
        auto it = named.find(t.name());
        if (it == named.end()) fail(Err::UnboundVariable, t.name());
        return node("Var", t, merge(it->second, target, t));
      }
      case Tag::Bound: {
        int i = t.index();
        if (i < 0 || i >= static_cast<int>(stack.size()))
          fail(Err::UnboundVariable, "index " + std::to_string(i));
        return node("Var", t, merge(stack[stack.size() - 1 - i], target, t));
      }
      case Tag::Unit:
        return node("Unit", t, merge(Type::unit(), target, t));
      case Tag::Lam: {
        require_type(t.anno());
        const Type* body_target = nullptr;
        if (target && target->tag() == Type::Tag::Arrow) {
          auto dom = unify(t.anno(), target->left());
          if (!dom)
            fail(Err::TypeMismatch, "binder " + print_type(t.anno()) +
                                        " does not match expected domain " +
                                        print_type(target->left()));
          body_target = &target->right();
        }
        stack.push_back(t.anno());
        Derivation body = check(t.sub1(), body_target);
        stack.pop_back();
        Type ty = merge(Type::arrow(t.anno(), body.type), target, t);
        return node("Abs", t, ty, "", {std::move(body)});
      }
      case Tag::App: {
        Derivation fun = check(t.sub1(), nullptr);
        if (fun.type.tag() != Type::Tag::Arrow)
          fail(Err::NotAFunction, print_term(t.sub1()) + " : " + print_type(fun.type));
        Derivation arg = check(t.sub2(), &fun.type.left());
        Type ty = merge(fun.type.right(), target, t);
        return node("App", t, ty, "", {std::move(fun), std::move(arg)});
      }
      case Tag::Pair: {
        const Type* t1 = nullptr;
        const Type* t2 = nullptr;
        if (target && target->tag() == Type::Tag::Prod) {
          t1 = &target->left();
          t2 = &target->right();
        }
        Derivation a = check(t.sub1(), t1);
        Derivation b = check(t.sub2(), t2);
        Type ty = merge(Type::prod(a.type, b.type), target, t);
        return node("Pair", t, ty, "", {std::move(a), std::move(b)});
      }
      case Tag::Proj1:
      case Tag::Proj2: {
        Derivation a = check(t.sub1(), nullptr);
        if (a.type.tag() != Type::Tag::Prod)
          fail(Err::NotAPair, print_term(t.sub1()) + " : " + print_type(a.type));
        bool first = t.tag() == Tag::Proj1;
        Type ty = merge(first ? a.type.left() : a.type.right(), target, t);
        return node(first ? "Proj1" : "Proj2", t, ty, "", {std::move(a)});
      }
      case Tag::Inj1:
      case Tag::Inj2: {
        bool first = t.tag() == Tag::Inj1;
        const Type* payload_target = nullptr;
        if (target && target->tag() == Type::Tag::Sum)
          payload_target = first ? &target->left() : &target->right();
        Derivation a = check(t.sub1(), payload_target);
        Type ty = first ? Type::sum(a.type, Type::hole())
                        : Type::sum(Type::hole(), a.type);
        ty = merge(ty, target, t);
        return node(first ? "Inj1" : "Inj2", t, ty, "", {std::move(a)});
      }
      case Tag::Case: {
        Derivation scrut = check(t.sub1(), nullptr);
        if (scrut.type.tag() != Type::Tag::Sum)
          fail(Err::NotASum, print_term(t.sub1()) + " : " + print_type(scrut.type));
        stack.push_back(scrut.type.left());
        Derivation b1 = check(t.sub2(), target);
        stack.pop_back();
        stack.push_back(scrut.type.right());
        Derivation b2 = check(t.sub3(), target);
        stack.pop_back();
        auto joined = unify(b1.type, b2.type);
        if (!joined)
          fail(Err::TypeMismatch, "case branches disagree: " + print_type(b1.type) +
                                      " vs " + print_type(b2.type));
        Type ty = merge(*joined, target, t);
        return node("Case", t, ty, "",
                    {std::move(scrut), std::move(b1), std::move(b2)});
      }
      case Tag::Seal: {
        if (calc != Calculus::Dc) fail(Err::ForeignConstruct, "seal@ outside the sealing calculus");
        if (!poset.contains(t.level())) fail(Err::UnknownLabel, t.level());
        const Type* body_target = nullptr;
        if (target && target->tag() == Type::Tag::Seal) {
          if (target->level() != t.level())
            fail(Err::TypeMismatch, "sealed at " + t.level() + " but expected " +
                                        print_type(*target));
          body_target = &target->body();
        }
        Obs saved = obs;
        obs = obs_with(obs, t.level());
        Derivation body = check(t.sub1(), body_target);
        obs = saved;
        Type ty = merge(Type::seal(t.level(), body.type), target, t);
        return node("Labs", t, ty, t.level(), {std::move(body)});
      }
      case Tag::Unseal: {
        if (calc != Calculus::Dc)
          fail(Err::ForeignConstruct, "unseal@ outside the sealing calculus");
        if (!poset.contains(t.level())) fail(Err::UnknownLabel, t.level());
        std::optional<Type> pushed;
        const Type* body_target = nullptr;
        if (target) {
          pushed = Type::seal(t.level(), *target);
          body_target = &*pushed;
        }
        Derivation body = check(t.sub1(), body_target);
        if (body.type.tag() != Type::Tag::Seal)
          fail(Err::NotASeal, print_term(t.sub1()) + " : " + print_type(body.type));
        if (body.type.level() != t.level())
          fail(Err::TypeMismatch, "sealed at " + body.type.level() +
                                      ", unsealed at " + t.level());
        if (!level_below_obs(poset, t.level(), obs))
          fail(Err::UnauthorizedUnseal,
               t.level() + " is not below observer " + obs_to_string(obs));
        Type ty = merge(body.type.body(), target, t);
        return node("Lapp", t, ty, t.level(), {std::move(body)});
      }
      case Tag::Eta: {
        if (calc != Calculus::Dpc) fail(Err::ForeignConstruct, "eta@ outside the monadic calculus");
        if (!poset.contains(t.level())) fail(Err::UnknownLabel, t.level());
        const Type* body_target = nullptr;
        if (target && target->tag() == Type::Tag::Monad) {
          if (target->level() != t.level())
            fail(Err::TypeMismatch, "eta@" + t.level() + " but expected " +
                                        print_type(*target));
          body_target = &target->body();
        }
        Obs saved = obs;
        obs = obs_with(obs, t.level());
        Derivation body = check(t.sub1(), body_target);
        obs = saved;
        Type ty = merge(Type::monad(t.level(), body.type), target, t);
        return node("Eta", t, ty, t.level(), {std::move(body)});
      }
      case Tag::Bind: {
        if (calc != Calculus::Dpc) fail(Err::ForeignConstruct, "bind outside the monadic calculus");
        Derivation rhs = check(t.sub1(), nullptr);
        if (rhs.type.tag() != Type::Tag::Monad)
          fail(Err::NotAMonad, print_term(t.sub1()) + " : " + print_type(rhs.type));
        std::string l = rhs.type.level();
        Obs saved = obs;
        obs = obs_with(obs, l);
        stack.push_back(rhs.type.body());
        Derivation body = check(t.sub2(), target);
        stack.pop_back();
        obs = saved;
        const char* rule;
        if (level_below_obs(poset, l, obs)) {
          rule = "Bind1";
        } else if (protected_at(poset, l, body.type)) {
          rule = "Bind2";
        } else {
          fail(Err::BindNotPermitted,
               l + " is not below " + obs_to_string(obs) + " and " +
                   print_type(body.type) + " is not protected at " + l);
        }
        Type ty = merge(body.type, target, t);
        return node(rule, t, ty, l, {std::move(rhs), std::move(body)});
      }
      case Tag::Protect: {
        if (calc != Calculus::Dpc)
          fail(Err::ForeignConstruct, "protect@ outside the monadic calculus");
        if (!poset.contains(t.level())) fail(Err::UnknownLabel, t.level());
        Obs saved = obs;
        obs = obs_with(obs, t.level());
        Derivation body = check(t.sub1(), target);
        obs = saved;
        if (!protected_at(poset, t.level(), body.type))
          fail(Err::NotProtected,
               print_type(body.type) + " is not protected at " + t.level());
        Type ty = merge(body.type, target, t);
        return node("Protect", t, ty, t.level(), {std::move(body)});
      }
    }
    fail(Err::InternalError, "check");
  }
};

Checked run(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi, const Term& e,
            Calculus calc, const Type* target) {
  for (const auto& [name, ty] : ctx)
    if (!type_in_calculus(p, ty, calc))
      fail(Err::ForeignConstruct,
           "context entry " + name + " : " + print_type(ty) + " is not valid here");
  for (const auto& l : pi)
    if (!p.contains(l)) fail(Err::UnknownLabel, l);
  if (target && !type_in_calculus(p, *target, calc))
    fail(Err::ForeignConstruct, "target type " + print_type(*target));
  Checker ck{p, ctx, calc, pi, {}};
  Derivation d = ck.check(e, target);
  if (d.type.has_holes())
    fail(Err::AmbiguousType,
         "a sum component cannot be inferred for " + print_term(e));
  return Checked{d.type, std::move(d)};
}

}  // namespace

Checked typecheck_dc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                     const Term& e) {
  return run(p, ctx, pi, e, Calculus::Dc, nullptr);
}
Checked check_dc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                 const Term& e, const Type& target) {
  return run(p, ctx, pi, e, Calculus::Dc, &target);
}
Checked typecheck_stlc(const LevelPoset& p, const NamedCtx& ctx, const Term& m) {
  return run(p, ctx, {}, m, Calculus::Stlc, nullptr);
}
Checked check_stlc(const LevelPoset& p, const NamedCtx& ctx, const Term& m,
                   const Type& target) {
  return run(p, ctx, {}, m, Calculus::Stlc, &target);
}
Checked typecheck_dpc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                      const Term& e) {
  return run(p, ctx, pi, e, Calculus::Dpc, nullptr);
}
Checked check_dpc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                  const Term& e, const Type& target) {
  return run(p, ctx, pi, e, Calculus::Dpc, &target);
}

namespace {

void deep_types(const Derivation& d, std::vector<Type>& out) {
  out.push_back(d.type);
  for (const auto& k : d.kids) deep_types(k, out);
}

bool within_budget(const Type& t, const std::vector<Type>& budget) {
  for (const auto& b : budget)
    if (b.has_subexpr(t)) return true;
  return false;
}

}  // namespace

bool subformula_ok(const Derivation& d) {
  std::vector<Type> budget = d.ctx_types;
  budget.push_back(d.type);
  std::vector<Type> inside;
  deep_types(d, inside);
  for (const auto& t : inside)
    if (!within_budget(t, budget)) return false;
  for (const auto& k : d.kids)
    if (!subformula_ok(k)) return false;
  return true;
}

}  // namespace seal
