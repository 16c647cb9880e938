#include "seal/translate.hpp"

#include <algorithm>

#include "seal/print.hpp"

namespace seal {

Obs KeyMap::domain() const {
  Obs out;
  for (const auto& [l, _] : level_to_key) out.insert(l);
  return out;
}

NamedCtx KeyMap::as_ctx() const {
  NamedCtx out;
  for (const auto& [l, k] : level_to_key) {
    if (out.count(k)) fail(Err::InternalError, "key map is not injective at " + k);
    out.emplace(k, Type::base(l));
  }
  return out;
}

KeyMap KeyMap::with(const std::string& level, const std::string& key) const {
  KeyMap out = *this;
  out.level_to_key[level] = key;  // shadowing replaces the old key
  return out;
}

KeyMap default_keymap(const LevelPoset& p, const Obs& pi) {
  KeyMap out;
  int n = 0;
  for (const auto& l : p.labels())
    if (pi.count(l)) out.level_to_key[l] = "k$" + l + "$" + std::to_string(n++);
  for (const auto& l : pi)
    if (!p.contains(l)) fail(Err::UnknownLabel, l);
  return out;
}

std::string CoercionContext::var_name(const std::string& hi, const std::string& lo) {
  return "c$" + hi + "$" + lo;
}

NamedCtx CoercionContext::as_ctx() const {
  NamedCtx out;
  for (const auto& [hi, lo] : pairs)
    out.emplace(var_name(hi, lo), Type::arrow(Type::base(hi), Type::base(lo)));
  return out;
}

CoercionContext build_kc(const LevelPoset& p) {
  CoercionContext kc;
  for (const auto& hi : p.labels())
    for (const auto& lo : p.labels())
      if (p.leq(lo, hi)) kc.pairs.emplace_back(hi, lo);
  return kc;
}

Type translate_type(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return t;
    case Type::Tag::Arrow:
      return Type::arrow(translate_type(t.left()), translate_type(t.right()));
    case Type::Tag::Prod:
      return Type::prod(translate_type(t.left()), translate_type(t.right()));
    case Type::Tag::Sum:
      return Type::sum(translate_type(t.left()), translate_type(t.right()));
    case Type::Tag::Seal:
      return Type::arrow(Type::base(t.level()), translate_type(t.body()));
    default:
      fail(Err::ForeignConstruct, print_type(t) + " is not a sealing-calculus type");
  }
}

NamedCtx translate_ctx(const NamedCtx& ctx) {
  NamedCtx out;
  for (const auto& [name, ty] : ctx) out.emplace(name, translate_type(ty));
  return out;
}

std::optional<Type> untranslate_type(const Type& a) {
  switch (a.tag()) {
    case Type::Tag::Unit: return a;
    case Type::Tag::Base: return std::nullopt;
    case Type::Tag::Arrow: {
      if (a.left().tag() == Type::Tag::Base) {
        auto body = untranslate_type(a.right());
        if (!body) return std::nullopt;
        return Type::seal(a.left().level(), *body);
      }
      auto dom = untranslate_type(a.left());
      auto cod = untranslate_type(a.right());
      if (!dom || !cod) return std::nullopt;
      return Type::arrow(*dom, *cod);
    }
    case Type::Tag::Prod: {
      auto l = untranslate_type(a.left());
      auto r = untranslate_type(a.right());
      if (!l || !r) return std::nullopt;
      return Type::prod(*l, *r);
    }
    case Type::Tag::Sum: {
      auto l = untranslate_type(a.left());
      auto r = untranslate_type(a.right());
      if (!l || !r) return std::nullopt;
      return Type::sum(*l, *r);
    }
    default: return std::nullopt;
  }
}

NamedCtx translation_target_ctx(const LevelPoset& p, const NamedCtx& g,
                                const KeyMap& sigma) {
  NamedCtx out = translate_ctx(g);
  for (const auto& [name, ty] : build_kc(p).as_ctx()) {
    if (out.count(name)) fail(Err::InternalError, "coercion name clash: " + name);
    out.emplace(name, ty);
  }
  for (const auto& [name, ty] : sigma.as_ctx()) {
    if (out.count(name)) fail(Err::InternalError, "key name clash: " + name);
    out.emplace(name, ty);
  }
  return out;
}

namespace {

struct Translator {
  const LevelPoset& poset;
  const std::set<std::string>& avoid;
  int counter = 0;

  std::string fresh_key(const std::string& level) {
    for (;;) {
      std::string cand = "k$" + level + "$" + std::to_string(counter++);
      if (!avoid.count(cand)) return cand;
    }
  }

  // Lexicographically least level in dom(sigma) dominating l.
  std::string eligible(const KeyMap& sigma, const std::string& l) {
    std::optional<std::string> best;
    for (const auto& [cand, _] : sigma.level_to_key)
      if (poset.leq(l, cand) && (!best || cand < *best)) best = cand;
    if (!best)
      fail(Err::NoEligibleKey, "no key for " + l + " in " +
                                   obs_to_string(sigma.domain()));
    return *best;
  }

  Term go(const Term& e, const KeyMap& sigma) {
    using Tag = Term::Tag;
    switch (e.tag()) {
      case Tag::Free:
      case Tag::Bound:
      case Tag::Unit: return e;
      case Tag::Lam:
        return Term::lam(e.name(), translate_type(e.anno()), go(e.sub1(), sigma));
      case Tag::App: return Term::app(go(e.sub1(), sigma), go(e.sub2(), sigma));
      case Tag::Pair: return Term::pair(go(e.sub1(), sigma), go(e.sub2(), sigma));
      case Tag::Proj1: return Term::proj1(go(e.sub1(), sigma));
      case Tag::Proj2: return Term::proj2(go(e.sub1(), sigma));
      case Tag::Inj1: return Term::inj1(go(e.sub1(), sigma));
      case Tag::Inj2: return Term::inj2(go(e.sub1(), sigma));
      case Tag::Case:
        return Term::case_of(go(e.sub1(), sigma), e.name(), go(e.sub2(), sigma),
                             e.name2(), go(e.sub3(), sigma));
      case Tag::Seal: {
        std::string k = fresh_key(e.level());
        Term body = go(e.sub1(), sigma.with(e.level(), k));
        return Term::lam(k, Type::base(e.level()), abstract_free(body, k));
      }
      case Tag::Unseal: {
        std::string hi = eligible(sigma, e.level());
        Term key = Term::app(Term::free(CoercionContext::var_name(hi, e.level())),
                             Term::free(sigma.level_to_key.at(hi)));
        return Term::app(go(e.sub1(), sigma), key);
      }
      default:
        fail(Err::ForeignConstruct, "not a sealing-calculus term");
    }
  }
};

}  // namespace

Term translate_dc_to_stlc(const LevelPoset& p, const NamedCtx& g,
                          const KeyMap& sigma, const Term& e) {
  try {
    typecheck_dc(p, g, sigma.domain(), e);
  } catch (const Error& err) {
    if (err.code == Err::AmbiguousType) {
      // tolerated: translation is syntax-directed and does not need the type
    } else {
      fail(Err::IllTyped, std::string("translation input: ") + err.what());
    }
  }
  std::set<std::string> avoid = free_names(e);
  for (const auto& [name, _] : g) avoid.insert(name);
  for (const auto& [_, k] : sigma.level_to_key) avoid.insert(k);
  Translator tr{p, avoid};
  return tr.go(e, sigma);
}

Type erase_seal_type(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return t;
    case Type::Tag::Arrow:
      return Type::arrow(erase_seal_type(t.left()), erase_seal_type(t.right()));
    case Type::Tag::Prod:
      return Type::prod(erase_seal_type(t.left()), erase_seal_type(t.right()));
    case Type::Tag::Sum:
      return Type::sum(erase_seal_type(t.left()), erase_seal_type(t.right()));
    case Type::Tag::Seal:
      return Type::arrow(Type::unit(), erase_seal_type(t.body()));
    default:
      fail(Err::ForeignConstruct, print_type(t) + " is not a sealing-calculus type");
  }
}

Term erase_seals(const Term& e) {
  using Tag = Term::Tag;
  switch (e.tag()) {
    case Tag::Free:
    case Tag::Bound:
    case Tag::Unit: return e;
    case Tag::Lam:
      return Term::lam(e.name(), erase_seal_type(e.anno()), erase_seals(e.sub1()));
    case Tag::App: return Term::app(erase_seals(e.sub1()), erase_seals(e.sub2()));
    case Tag::Pair: return Term::pair(erase_seals(e.sub1()), erase_seals(e.sub2()));
    case Tag::Proj1: return Term::proj1(erase_seals(e.sub1()));
    case Tag::Proj2: return Term::proj2(erase_seals(e.sub1()));
    case Tag::Inj1: return Term::inj1(erase_seals(e.sub1()));
    case Tag::Inj2: return Term::inj2(erase_seals(e.sub1()));
    case Tag::Case:
      return Term::case_of(erase_seals(e.sub1()), e.name(), erase_seals(e.sub2()),
                           e.name2(), erase_seals(e.sub3()));
    case Tag::Seal:
      return Term::lam("_", Type::unit(), shift(erase_seals(e.sub1()), 1));
    case Tag::Unseal: return Term::app(erase_seals(e.sub1()), Term::unit());
    default:
      fail(Err::ForeignConstruct, "not a sealing-calculus term");
  }
}

}  // namespace seal
