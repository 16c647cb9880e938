#include "seal/keys.hpp"

#include "seal/print.hpp"

namespace seal {

std::string key_placeholder(const std::string& level) { return "$key$" + level; }

namespace {

struct Canon {
  const LevelPoset& poset;
  const NamedCtx& named;
  std::vector<Type> stack;

  Type type_of(const Term& m) {
    using Tag = Term::Tag;
    switch (m.tag()) {
      case Tag::Free: {
        auto it = named.find(m.name());
        if (it == named.end()) fail(Err::UnboundVariable, m.name());
        return it->second;
      }
      case Tag::Bound: {
        int i = m.index();
        if (i < 0 || i >= static_cast<int>(stack.size()))
          fail(Err::UnboundVariable, "index " + std::to_string(i));
        return stack[stack.size() - 1 - i];
      }
      case Tag::Unit: return Type::unit();
      case Tag::Lam: {
        stack.push_back(m.anno());
        Type body = type_of(m.sub1());
        stack.pop_back();
        return Type::arrow(m.anno(), body);
      }
      case Tag::App: {
        Type f = type_of(m.sub1());
        if (f.tag() != Type::Tag::Arrow) fail(Err::NotAFunction, print_term(m.sub1()));
        return f.right();
      }
      case Tag::Pair: return Type::prod(type_of(m.sub1()), type_of(m.sub2()));
      case Tag::Proj1:
      case Tag::Proj2: {
        Type p = type_of(m.sub1());
        if (p.tag() != Type::Tag::Prod) fail(Err::NotAPair, print_term(m.sub1()));
        return m.tag() == Tag::Proj1 ? p.left() : p.right();
      }
      case Tag::Inj1: return Type::sum(type_of(m.sub1()), Type::hole());
      case Tag::Inj2: return Type::sum(Type::hole(), type_of(m.sub1()));
      case Tag::Case: {
        Type s = type_of(m.sub1());
        if (s.tag() != Type::Tag::Sum) fail(Err::NotASum, print_term(m.sub1()));
        stack.push_back(s.left());
        Type b = type_of(m.sub2());
        stack.pop_back();
        return b;
      }
      default:
        fail(Err::ForeignConstruct, "not a simply typed term");
    }
  }

  Term go(const Term& m) {
    Type ty = type_of(m);
    if (ty.tag() == Type::Tag::Base) return Term::free(key_placeholder(ty.level()));
    using Tag = Term::Tag;
    switch (m.tag()) {
      case Tag::Free:
      case Tag::Bound:
      case Tag::Unit: return m;
      case Tag::Lam: {
        stack.push_back(m.anno());
        Term body = go(m.sub1());
        stack.pop_back();
        return Term::lam(m.name(), m.anno(), body);
      }
      case Tag::App: return Term::app(go(m.sub1()), go(m.sub2()));
      case Tag::Pair: return Term::pair(go(m.sub1()), go(m.sub2()));
      case Tag::Proj1: return Term::proj1(go(m.sub1()));
      case Tag::Proj2: return Term::proj2(go(m.sub1()));
      case Tag::Inj1: return Term::inj1(go(m.sub1()));
      case Tag::Inj2: return Term::inj2(go(m.sub1()));
      case Tag::Case: {
        Term scrut = go(m.sub1());
        Type s = type_of(m.sub1());
        stack.push_back(s.left());
        Term b1 = go(m.sub2());
        stack.pop_back();
        stack.push_back(s.right());
        Term b2 = go(m.sub3());
        stack.pop_back();
        return Term::case_of(scrut, m.name(), b1, m.name2(), b2);
      }
      default:
        fail(Err::ForeignConstruct, "not a simply typed term");
    }
  }
};

}  // namespace

Term key_canonicalize(const LevelPoset& p, const NamedCtx& g, const Term& m) {
  try {
    Canon c{p, g, {}};
    return c.go(m);
  } catch (const Error& err) {
    if (err.code == Err::ForeignConstruct || err.code == Err::UnboundVariable ||
        err.code == Err::NotAFunction || err.code == Err::NotAPair ||
        err.code == Err::NotASum)
      fail(Err::IllTyped, err.what());
    throw;
  }
}

bool key_equiv(const LevelPoset& p, const NamedCtx& g, const Term& m1,
               const Term& m2, const Type& a) {
  try {
    check_stlc(p, g, m1, a);
    check_stlc(p, g, m2, a);
  } catch (const Error& err) {
    if (err.code == Err::TypeMismatch) throw;
    fail(Err::IllTyped, err.what());
  }
  return key_canonicalize(p, g, m1) == key_canonicalize(p, g, m2);
}

}  // namespace seal
