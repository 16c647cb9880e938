#include "seal/dccpc.hpp"

#include "seal/print.hpp"

namespace seal {

Type dpc_type_to_dc(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return t;
    case Type::Tag::Arrow:
      return Type::arrow(dpc_type_to_dc(t.left()), dpc_type_to_dc(t.right()));
    case Type::Tag::Prod:
      return Type::prod(dpc_type_to_dc(t.left()), dpc_type_to_dc(t.right()));
    case Type::Tag::Sum:
      return Type::sum(dpc_type_to_dc(t.left()), dpc_type_to_dc(t.right()));
    case Type::Tag::Monad: return Type::seal(t.level(), dpc_type_to_dc(t.body()));
    default:
      fail(Err::ForeignConstruct, print_type(t) + " is not a monadic-calculus type");
  }
}

Type dc_type_to_dpc(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return t;
    case Type::Tag::Arrow:
      return Type::arrow(dc_type_to_dpc(t.left()), dc_type_to_dpc(t.right()));
    case Type::Tag::Prod:
      return Type::prod(dc_type_to_dpc(t.left()), dc_type_to_dpc(t.right()));
    case Type::Tag::Sum:
      return Type::sum(dc_type_to_dpc(t.left()), dc_type_to_dpc(t.right()));
    case Type::Tag::Seal: return Type::monad(t.level(), dc_type_to_dpc(t.body()));
    default:
      fail(Err::ForeignConstruct, print_type(t) + " is not a sealing-calculus type");
  }
}

NamedCtx dpc_ctx_to_dc(const NamedCtx& ctx) {
  NamedCtx out;
  for (const auto& [name, ty] : ctx) out.emplace(name, dpc_type_to_dc(ty));
  return out;
}

NamedCtx dc_ctx_to_dpc(const NamedCtx& ctx) {
  NamedCtx out;
  for (const auto& [name, ty] : ctx) out.emplace(name, dc_type_to_dpc(ty));
  return out;
}

Term unprotect(const LevelPoset& p, const std::string& l, const Type& t) {
  if (!protected_at(p, l, t))
    fail(Err::NotProtected, print_type(t) + " at " + l);
  Type shadow = dpc_type_to_dc(t);
  Term x = Term::free("$u$");
  auto close = [&](Term body) {
    return Term::lam("x", Type::seal(l, shadow), abstract_free(body, "$u$"));
  };
  Term opened = Term::unseal(x, l);  // : t° at any pi ∪ {l}
  switch (t.tag()) {
    case Type::Tag::Unit:
      return close(Term::unit());
    case Type::Tag::Prod: {
      Term lhs = Term::app(unprotect(p, l, t.left()),
                           Term::seal(l, Term::proj1(opened)));
      Term rhs = Term::app(unprotect(p, l, t.right()),
                           Term::seal(l, Term::proj2(opened)));
      return close(Term::pair(lhs, rhs));
    }
    case Type::Tag::Arrow: {
      Term y = Term::free("$v$");
      Term applied = Term::app(unprotect(p, l, t.right()),
                               Term::seal(l, Term::app(opened, y)));
      Term inner = Term::lam("y", dpc_type_to_dc(t.left()),
                             abstract_free(applied, "$v$"));
      return close(inner);
    }
    case Type::Tag::Monad: {
      const std::string& l2 = t.level();
      if (p.leq(l, l2))
        return close(Term::seal(l2, Term::unseal(opened, l2)));
      // protected_at guarantees the payload is protected here
      Term peeled = Term::seal(l, Term::unseal(opened, l2));
      return close(Term::seal(l2, Term::app(unprotect(p, l, t.body()), peeled)));
    }
    default:
      fail(Err::NotProtected, print_type(t) + " at " + l);
  }
}

namespace {

Term translate_dpc(const LevelPoset& p, const Derivation& d);

Term translate_kids_homomorphic(const LevelPoset& p, const Derivation& d) {
  const Term& t = d.term;
  switch (t.tag()) {
    case Term::Tag::Free:
    case Term::Tag::Bound:
    case Term::Tag::Unit: return t;
    case Term::Tag::Lam:
      return Term::lam(t.name(), dpc_type_to_dc(t.anno()),
                       translate_dpc(p, d.kids[0]));
    case Term::Tag::App:
      return Term::app(translate_dpc(p, d.kids[0]), translate_dpc(p, d.kids[1]));
    case Term::Tag::Pair:
      return Term::pair(translate_dpc(p, d.kids[0]), translate_dpc(p, d.kids[1]));
    case Term::Tag::Proj1: return Term::proj1(translate_dpc(p, d.kids[0]));
    case Term::Tag::Proj2: return Term::proj2(translate_dpc(p, d.kids[0]));
    case Term::Tag::Inj1: return Term::inj1(translate_dpc(p, d.kids[0]));
    case Term::Tag::Inj2: return Term::inj2(translate_dpc(p, d.kids[0]));
    case Term::Tag::Case:
      return Term::case_of(translate_dpc(p, d.kids[0]), t.name(),
                           translate_dpc(p, d.kids[1]), t.name2(),
                           translate_dpc(p, d.kids[2]));
    default:
      fail(Err::InvalidDerivation, "unexpected term under rule " + d.rule);
  }
}

Term translate_dpc(const LevelPoset& p, const Derivation& d) {
  const Term& t = d.term;
  if (d.rule == "Eta") {
    return Term::seal(d.level, translate_dpc(p, d.kids[0]));
  }
  if (d.rule == "Bind1" || d.rule == "Bind2") {
    const Derivation& rhs = d.kids[0];
    const Derivation& body = d.kids[1];
    if (rhs.type.tag() != Type::Tag::Monad) fail(Err::InvalidDerivation, "bind rhs");
    Type arg_ty = dpc_type_to_dc(rhs.type.body());
    Term fn = Term::lam(t.name(), arg_ty, translate_dpc(p, body));
    Term applied = Term::app(fn, Term::unseal(translate_dpc(p, rhs), d.level));
    if (d.rule == "Bind1") return applied;
    return Term::app(unprotect(p, d.level, body.type), Term::seal(d.level, applied));
  }
  if (d.rule == "Protect") {
    return Term::app(unprotect(p, d.level, d.type),
                     Term::seal(d.level, translate_dpc(p, d.kids[0])));
  }
  return translate_kids_homomorphic(p, d);
}

}  // namespace

Term dpc_to_dc(const LevelPoset& p, const Derivation& d) {
  return translate_dpc(p, d);
}

Term dc_to_dpc(const Term& e) {
  using Tag = Term::Tag;
  switch (e.tag()) {
    case Tag::Free:
    case Tag::Bound:
    case Tag::Unit: return e;
    case Tag::Lam:
      return Term::lam(e.name(), dc_type_to_dpc(e.anno()), dc_to_dpc(e.sub1()));
    case Tag::App: return Term::app(dc_to_dpc(e.sub1()), dc_to_dpc(e.sub2()));
    case Tag::Pair: return Term::pair(dc_to_dpc(e.sub1()), dc_to_dpc(e.sub2()));
    case Tag::Proj1: return Term::proj1(dc_to_dpc(e.sub1()));
    case Tag::Proj2: return Term::proj2(dc_to_dpc(e.sub1()));
    case Tag::Inj1: return Term::inj1(dc_to_dpc(e.sub1()));
    case Tag::Inj2: return Term::inj2(dc_to_dpc(e.sub1()));
    case Tag::Case:
      return Term::case_of(dc_to_dpc(e.sub1()), e.name(), dc_to_dpc(e.sub2()),
                           e.name2(), dc_to_dpc(e.sub3()));
    case Tag::Seal: return Term::eta(e.level(), dc_to_dpc(e.sub1()));
    case Tag::Unseal:
      return Term::bind("z", dc_to_dpc(e.sub1()), Term::bound(0, "z"));
    default:
      fail(Err::ForeignConstruct, "not a sealing-calculus term");
  }
}

}  // namespace seal
