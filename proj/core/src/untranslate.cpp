#include "seal/untranslate.hpp"

#include <atomic>

#include "seal/print.hpp"

namespace seal {

namespace {

std::atomic<long> g_inv_counter{0};

struct Inverter {
  const LevelPoset& poset;
  const NamedCtx& dc_ctx;        // named sealing-calculus context
  NamedCtx stlc_named;           // dagger ctx + KC + sigma-dagger + opened keys
  std::vector<Type> dc_stack;    // binder types on the dc side
  std::vector<Type> stlc_stack;  // binder types on the stlc side

  std::string fresh_key(const std::string& level) {
    return "k$" + level + "$inv" + std::to_string(g_inv_counter.fetch_add(1));
  }

  Type synth(const Term& n) {
    // Minimal synthesizer over the stlc fragment; binder annotations
    // carry the types, so no inference holes can reach eliminations in
    // subformula-satisfying normal forms.
    using Tag = Term::Tag;
    switch (n.tag()) {
      case Tag::Free: {
        auto it = stlc_named.find(n.name());
        if (it == stlc_named.end()) fail(Err::UnboundVariable, n.name());
        return it->second;
      }
      case Tag::Bound: {
        int i = n.index();
        if (i < 0 || i >= static_cast<int>(stlc_stack.size()))
          fail(Err::UnboundVariable, "index " + std::to_string(i));
        return stlc_stack[stlc_stack.size() - 1 - i];
      }
      case Tag::Unit: return Type::unit();
      case Tag::Lam: {
        stlc_stack.push_back(n.anno());
        Type body = synth(n.sub1());
        stlc_stack.pop_back();
        return Type::arrow(n.anno(), body);
      }
      case Tag::App: {
        Type f = synth(n.sub1());
        if (f.tag() != Type::Tag::Arrow) fail(Err::NotAFunction, print_term(n.sub1()));
        return f.right();
      }
      case Tag::Pair: return Type::prod(synth(n.sub1()), synth(n.sub2()));
      case Tag::Proj1:
      case Tag::Proj2: {
        Type p = synth(n.sub1());
        if (p.tag() != Type::Tag::Prod) fail(Err::NotAPair, print_term(n.sub1()));
        return n.tag() == Tag::Proj1 ? p.left() : p.right();
      }
      case Tag::Inj1: return Type::sum(synth(n.sub1()), Type::hole());
      case Tag::Inj2: return Type::sum(Type::hole(), synth(n.sub1()));
      case Tag::Case: {
        Type s = synth(n.sub1());
        if (s.tag() != Type::Tag::Sum) fail(Err::NotASum, print_term(n.sub1()));
        stlc_stack.push_back(s.left());
        Type b1 = synth(n.sub2());
        stlc_stack.pop_back();
        return b1;
      }
      default:
        fail(Err::NoApplicableRule, "foreign construct in inversion input");
    }
  }

  Type dc_untranslate_or_fail(const Type& a, const Term& at) {
    auto t = untranslate_type(a);
    if (!t)
      fail(Err::NoApplicableRule, print_type(a) +
                                      " is outside the type translation image in " +
                                      print_term(at));
    return *t;
  }

  Term invert(const Term& n, const Type& t, const KeyMap& sigma) {
    using Tag = Term::Tag;
    switch (n.tag()) {
      case Tag::Unit:
        if (t != Type::unit()) fail(Err::TypeMismatch, "() at " + print_type(t));
        return n;
      case Tag::Free: {
        auto it = dc_ctx.find(n.name());
        if (it == dc_ctx.end())
          fail(Err::NoApplicableRule, "variable " + n.name() +
                                          " has no sealing-calculus counterpart");
        if (it->second != t)
          fail(Err::TypeMismatch, n.name() + " : " + print_type(it->second) +
                                      " used at " + print_type(t));
        return n;
      }
      case Tag::Bound: {
        int i = n.index();
        if (i < 0 || i >= static_cast<int>(dc_stack.size()))
          fail(Err::NoApplicableRule, "key variable used outside a key position");
        if (dc_stack[dc_stack.size() - 1 - i] != t)
          fail(Err::TypeMismatch, "bound variable at " + print_type(t));
        return n;
      }
      case Tag::Lam: {
        if (t.tag() == Type::Tag::Arrow) {
          if (n.anno() != translate_type(t.left()))
            fail(Err::TypeMismatch, "domain " + print_type(n.anno()) +
                                        " does not translate " + print_type(t.left()));
          dc_stack.push_back(t.left());
          stlc_stack.push_back(n.anno());
          Term body = invert(n.sub1(), t.right(), sigma);
          stlc_stack.pop_back();
          dc_stack.pop_back();
          return Term::lam(n.name(), t.left(), body);
        }
        if (t.tag() == Type::Tag::Seal) {
          const std::string& l = t.level();
          if (n.anno() != Type::base(l))
            fail(Err::TypeMismatch, "binder " + print_type(n.anno()) +
                                        " is not the key type of " + print_type(t));
          std::string k = fresh_key(l);
          Term body = open_bound(n.sub1(), Term::free(k));
          auto prev = sigma.level_to_key.find(l);
          if (prev != sigma.level_to_key.end()) {
            // the key being replaced stays well typed: swap it for the new one
            body = subst_free(body, prev->second, Term::free(k));
          }
          stlc_named.emplace(k, Type::base(l));
          Term inner = invert(body, t.body(), sigma.with(l, k));
          stlc_named.erase(k);
          return Term::seal(l, inner);
        }
        fail(Err::TypeMismatch, "abstraction at " + print_type(t));
      }
      case Tag::App: {
        Type fun_ty = synth(n.sub1());
        if (fun_ty.tag() != Type::Tag::Arrow)
          fail(Err::NotAFunction, print_term(n.sub1()));
        const Type& arg_ty = fun_ty.left();
        if (arg_ty.tag() == Type::Tag::Base) {
          const std::string& l = arg_ty.level();
          if (!unify(synth(n.sub2()), arg_ty))
            fail(Err::TypeMismatch, "key argument " + print_term(n.sub2()) +
                                        " is not of type " + print_type(arg_ty));
          Term fun = invert(n.sub1(), Type::seal(l, t), sigma);
          // the key argument itself is discarded; any key works
          return Term::unseal(fun, l);
        }
        Type dom = dc_untranslate_or_fail(arg_ty, n.sub2());
        Term fun = invert(n.sub1(), Type::arrow(dom, t), sigma);
        Term arg = invert(n.sub2(), dom, sigma);
        return Term::app(fun, arg);
      }
      case Tag::Pair: {
        if (t.tag() != Type::Tag::Prod)
          fail(Err::TypeMismatch, "pair at " + print_type(t));
        Term a = invert(n.sub1(), t.left(), sigma);
        Term b = invert(n.sub2(), t.right(), sigma);
        return Term::pair(a, b);
      }
      case Tag::Proj1:
      case Tag::Proj2: {
        Type p = synth(n.sub1());
        if (p.tag() != Type::Tag::Prod) fail(Err::NotAPair, print_term(n.sub1()));
        Type whole = dc_untranslate_or_fail(p, n.sub1());
        Term inner = invert(n.sub1(), whole, sigma);
        return n.tag() == Tag::Proj1 ? Term::proj1(inner) : Term::proj2(inner);
      }
      case Tag::Inj1:
      case Tag::Inj2: {
        if (t.tag() != Type::Tag::Sum)
          fail(Err::TypeMismatch, "injection at " + print_type(t));
        bool first = n.tag() == Tag::Inj1;
        Term payload = invert(n.sub1(), first ? t.left() : t.right(), sigma);
        return first ? Term::inj1(payload) : Term::inj2(payload);
      }
      case Tag::Case: {
        Type s = synth(n.sub1());
        if (s.tag() != Type::Tag::Sum) fail(Err::NotASum, print_term(n.sub1()));
        Type whole = dc_untranslate_or_fail(s, n.sub1());
        Term scrut = invert(n.sub1(), whole, sigma);
        dc_stack.push_back(whole.left());
        stlc_stack.push_back(s.left());
        Term b1 = invert(n.sub2(), t, sigma);
        stlc_stack.pop_back();
        dc_stack.pop_back();
        dc_stack.push_back(whole.right());
        stlc_stack.push_back(s.right());
        Term b2 = invert(n.sub3(), t, sigma);
        stlc_stack.pop_back();
        dc_stack.pop_back();
        return Term::case_of(scrut, n.name(), b1, n.name2(), b2);
      }
      default:
        fail(Err::NoApplicableRule, "foreign construct in inversion input");
    }
  }
};

}  // namespace

Term invert_stlc_to_dc(const LevelPoset& p, const NamedCtx& g, const KeyMap& sigma,
                       const Term& n, const Type& t) {
  Inverter inv{p, g, translation_target_ctx(p, g, sigma)};
  return inv.invert(n, t, sigma);
}

Term realize(const LevelPoset& p, const NamedCtx& g, const KeyMap& sigma,
             const Term& m, const Type& t, const Limits& limits) {
  Type target = translate_type(t);
  NamedCtx stlc_ctx = translation_target_ctx(p, g, sigma);
  try {
    check_stlc(p, stlc_ctx, m, target);
  } catch (const Error& err) {
    fail(Err::IllTyped, std::string("realize input: ") + err.what());
  }
  Term nf = normalize_stlc(m, limits.fuel);
  Checked again = check_stlc(p, stlc_ctx, nf, target);
  if (!subformula_ok(again.deriv))
    fail(Err::InternalSubformulaFailure,
         "normal form lost the subformula property: " + print_term(nf));
  Term e = invert_stlc_to_dc(p, g, sigma, nf, t);
  check_dc(p, g, sigma.domain(), e, t);
  return e;
}

}  // namespace seal
