#include "seal/reduce.hpp"

#include "seal/print.hpp"

namespace seal {

namespace {

using Tag = Term::Tag;

// Contracts a redex at the root, if any.
std::optional<Term> contract(const Term& t, Calculus calc) {
  switch (t.tag()) {
    case Tag::App: {
      const Term& f = t.sub1();
      if (f.tag() == Tag::Lam) return open_bound(f.sub1(), t.sub2());
      if (calc == Calculus::Stlc && f.tag() == Tag::Case) {
        // (case s of x1 => b1 | x2 => b2) N  ~>  case s of x1 => b1 N' | ...
        Term arg = shift(t.sub2(), 1);
        return Term::case_of(f.sub1(), f.name(), Term::app(f.sub2(), arg),
                             f.name2(), Term::app(f.sub3(), arg));
      }
      return std::nullopt;
    }
    case Tag::Proj1:
    case Tag::Proj2: {
      const Term& p = t.sub1();
      bool first = t.tag() == Tag::Proj1;
      if (p.tag() == Tag::Pair) return first ? p.sub1() : p.sub2();
      if (calc == Calculus::Stlc && p.tag() == Tag::Case) {
        auto wrap = [&](const Term& b) {
          return first ? Term::proj1(b) : Term::proj2(b);
        };
        return Term::case_of(p.sub1(), p.name(), wrap(p.sub2()), p.name2(),
                             wrap(p.sub3()));
      }
      return std::nullopt;
    }
    case Tag::Case: {
      const Term& s = t.sub1();
      if (s.tag() == Tag::Inj1) return open_bound(t.sub2(), s.sub1());
      if (s.tag() == Tag::Inj2) return open_bound(t.sub3(), s.sub1());
      if (calc == Calculus::Stlc && s.tag() == Tag::Case) {
        // case (case s0 of y1 => p1 | y2 => p2) of x1 => m1 | x2 => m2
        Term m1 = shift(t.sub2(), 1, 1);
        Term m2 = shift(t.sub3(), 1, 1);
        auto inner = [&](const Term& p) {
          return Term::case_of(p, t.name(), m1, t.name2(), m2);
        };
        return Term::case_of(s.sub1(), s.name(), inner(s.sub2()), s.name2(),
                             inner(s.sub3()));
      }
      return std::nullopt;
    }
    case Tag::Unseal:
      if (calc == Calculus::Dc) {
        const Term& s = t.sub1();
        if (s.tag() == Tag::Seal && s.level() == t.level()) return s.sub1();
      }
      return std::nullopt;
    case Tag::Bind:
      if (calc == Calculus::Dpc) {
        const Term& rhs = t.sub1();
        if (rhs.tag() == Tag::Eta) return open_bound(t.sub2(), rhs.sub1());
      }
      return std::nullopt;
    case Tag::Protect:
      // Typing annotation only; operationally the identity.
      if (calc == Calculus::Dpc) return t.sub1();
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

struct Child {
  int slot;
  const Term* term;
};

std::vector<Child> children_of(const Term& t) {
  std::vector<Child> out;
  switch (t.tag()) {
    case Tag::Free:
    case Tag::Bound:
    case Tag::Unit: break;
    case Tag::Lam:
      out = {{1, &t.sub1()}};
      break;
    case Tag::App:
    case Tag::Pair:
      out = {{1, &t.sub1()}, {2, &t.sub2()}};
      break;
    case Tag::Bind:
      out = {{1, &t.sub1()}, {2, &t.sub2()}};
      break;
    case Tag::Proj1:
    case Tag::Proj2:
    case Tag::Inj1:
    case Tag::Inj2:
    case Tag::Seal:
    case Tag::Unseal:
    case Tag::Eta:
    case Tag::Protect:
      out = {{1, &t.sub1()}};
      break;
    case Tag::Case:
      out = {{1, &t.sub1()}, {2, &t.sub2()}, {3, &t.sub3()}};
      break;
  }
  return out;
}

Term replace_child(const Term& t, int slot, const Term& nc) {
  switch (t.tag()) {
    case Tag::Lam: return Term::lam(t.name(), t.anno(), nc);
    case Tag::App: return slot == 1 ? Term::app(nc, t.sub2()) : Term::app(t.sub1(), nc);
    case Tag::Pair: return slot == 1 ? Term::pair(nc, t.sub2()) : Term::pair(t.sub1(), nc);
    case Tag::Proj1: return Term::proj1(nc);
    case Tag::Proj2: return Term::proj2(nc);
    case Tag::Inj1: return Term::inj1(nc);
    case Tag::Inj2: return Term::inj2(nc);
    case Tag::Case:
      if (slot == 1) return Term::case_of(nc, t.name(), t.sub2(), t.name2(), t.sub3());
      if (slot == 2) return Term::case_of(t.sub1(), t.name(), nc, t.name2(), t.sub3());
      return Term::case_of(t.sub1(), t.name(), t.sub2(), t.name2(), nc);
    case Tag::Seal: return Term::seal(t.level(), nc);
    case Tag::Unseal: return Term::unseal(nc, t.level());
    case Tag::Eta: return Term::eta(t.level(), nc);
    case Tag::Bind: return slot == 1 ? Term::bind(t.name(), nc, t.sub2())
                                     : Term::bind(t.name(), t.sub1(), nc);
    case Tag::Protect: return Term::protect(t.level(), nc);
    default: fail(Err::InternalError, "replace_child");
  }
}

std::optional<Term> step(const Term& t, Calculus calc, Strategy strat) {
  if (strat == Strategy::LeftOutermost) {
    if (auto r = contract(t, calc)) return r;
    for (const auto& [slot, child] : children_of(t))
      if (auto r = step(*child, calc, strat)) return replace_child(t, slot, *r);
    return std::nullopt;
  }
  // rightmost-innermost
  auto kids = children_of(t);
  for (auto it = kids.rbegin(); it != kids.rend(); ++it)
    if (auto r = step(*it->term, calc, strat)) return replace_child(t, it->slot, *r);
  return contract(t, calc);
}

}  // namespace

std::optional<Term> reduce_once(const Term& t, Calculus calc, Strategy strat) {
  return step(t, calc, strat);
}

Term normalize(const Term& t, Calculus calc, long fuel, Strategy strat) {
  Term cur = t;
  for (long i = 0; i < fuel; ++i) {
    auto next = reduce_once(cur, calc, strat);
    if (!next) return cur;
    cur = *next;
  }
  fail(Err::FuelExhausted, "no normal form within " + std::to_string(fuel) +
                               " steps for " + print_term(t));
}

}  // namespace seal
