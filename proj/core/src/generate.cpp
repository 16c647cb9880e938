#include "seal/generate.hpp"

#include <algorithm>

namespace seal {

namespace {

Term canonical_for(const LevelPoset& p, Calculus calc, const Obs& pi, const Type& t) {
  return calc == Calculus::Dpc ? canonical_dpc(p, pi, t) : canonical_dc(p, pi, t);
}

}  // namespace

Type TermGen::random_type(int depth) {
  const auto& labels = poset_.labels();
  auto level = [&] { return labels[static_cast<size_t>(pick(static_cast<int>(labels.size())))]; };
  if (depth <= 0) {
    switch (pick(3)) {
      case 0: return Type::unit();
      default: return Type::boolean();
    }
  }
  switch (pick(8)) {
    case 0: return Type::unit();
    case 1:
    case 2: return Type::boolean();
    case 3: return Type::prod(random_type(depth - 1), random_type(depth - 1));
    case 4: return Type::sum(random_type(depth - 1), random_type(depth - 1));
    case 5: return Type::arrow(random_type(depth - 1), random_type(depth - 1));
    default: {
      Type body = random_type(depth - 1);
      return calc_ == Calculus::Dpc ? Type::monad(level(), body)
                                    : Type::seal(level(), body);
    }
  }
}

Obs TermGen::random_obs() {
  Obs out;
  for (const auto& l : poset_.labels())
    if (coin()) out.insert(l);
  return out;
}

std::vector<std::pair<Term, Type>> TermGen::vars() const {
  std::vector<std::pair<Term, Type>> out;
  if (named_)
    for (const auto& [name, ty] : *named_) out.emplace_back(Term::free(name), ty);
  for (size_t d = 0; d < stack_.size(); ++d) {
    const Type& ty = stack_[d];
    if (ty.tag() == Type::Tag::Hole) continue;  // dead-branch binder
    out.emplace_back(Term::bound(static_cast<int>(stack_.size() - 1 - d)), ty);
  }
  return out;
}

Term TermGen::term_at(const NamedCtx& ctx, const Obs& pi, const Type& target,
                      int budget) {
  named_ = &ctx;
  stack_.clear();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Term t = gen(pi, target, budget);
    if (term_size(t) <= budget) return t;
  }
  return canonical_for(poset_, calc_, pi, target);
}

Term TermGen::spine_or_intro(const Obs& pi, const Type& target, int budget) {
  // try an elimination chain from a variable in scope
  auto vs = vars();
  std::shuffle(vs.begin(), vs.end(), rng_);
  for (const auto& [v, ty] : vs) {
    Term head = v;
    Type cur = ty;
    for (int steps = 0; steps < 4; ++steps) {
      if (cur == target && budget >= term_size(head)) return head;
      if (cur.tag() == Type::Tag::Arrow && budget >= 4) {
        Term arg = gen(pi, cur.left(), std::max(1, budget / 3));
        head = Term::app(head, arg);
        cur = cur.right();
        continue;
      }
      if (cur.tag() == Type::Tag::Prod) {
        bool first = coin();
        head = first ? Term::proj1(head) : Term::proj2(head);
        cur = first ? cur.left() : cur.right();
        continue;
      }
      if (cur.tag() == Type::Tag::Seal &&
          level_below_obs(poset_, cur.level(), pi)) {
        head = Term::unseal(head, cur.level());
        cur = cur.body();
        continue;
      }
      if (cur.tag() == Type::Tag::Monad &&
          level_below_obs(poset_, cur.level(), pi)) {
        head = Term::bind("z", head, Term::bound(0, "z"));
        cur = cur.body();
        continue;
      }
      break;
    }
  }
  return canonical_for(poset_, calc_, pi, target);
}

Term TermGen::gen(const Obs& pi, const Type& target, int budget) {
  if (budget <= 2) return canonical_for(poset_, calc_, pi, target);
  int choice = pick(10);
  switch (choice) {
    case 0:  // beta redex
      if (budget >= 6) {
        Type b = random_type(1);
        Term arg = gen(pi, b, budget / 3);
        stack_.push_back(b);
        Term body = gen(pi, target, budget / 2);
        stack_.pop_back();
        return Term::app(Term::lam("v", b, body), arg);
      }
      break;
    case 1:  // case on an injection; the dead binder stays unused
      if (budget >= 7) {
        Type live = random_type(1);
        bool left = coin();
        Term scrut = left ? Term::inj1(gen(pi, live, budget / 4))
                          : Term::inj2(gen(pi, live, budget / 4));
        stack_.push_back(left ? live : Type::hole());
        Term b1 = gen(pi, target, budget / 3);
        stack_.pop_back();
        stack_.push_back(left ? Type::hole() : live);
        Term b2 = gen(pi, target, budget / 3);
        stack_.pop_back();
        return Term::case_of(scrut, "a", b1, "b", b2);
      }
      break;
    case 2:  // unseal-of-seal / bind-of-eta redex
      if (budget >= 4) {
        std::vector<std::string> below;
        for (const auto& l : poset_.labels())
          if (level_below_obs(poset_, l, pi)) below.push_back(l);
        if (!below.empty()) {
          std::string l = below[static_cast<size_t>(pick(static_cast<int>(below.size())))];
          if (calc_ == Calculus::Dc) {
            Term body = gen(obs_with(pi, l), target, budget - 2);
            return Term::unseal(Term::seal(l, body), l);
          }
          Term rhs = Term::eta(l, gen(obs_with(pi, l), target, budget - 3));
          return Term::bind("z", rhs, Term::bound(0, "z"));
        }
      }
      break;
    case 3:  // case on a sum-typed variable, if one is reachable
      for (const auto& [v, ty] : vars()) {
        if (ty.tag() != Type::Tag::Sum || budget < 6) continue;
        stack_.push_back(ty.left());
        Term b1 = gen(pi, target, budget / 3);
        stack_.pop_back();
        stack_.push_back(ty.right());
        Term b2 = gen(pi, target, budget / 3);
        stack_.pop_back();
        return Term::case_of(v, "a", b1, "b", b2);
      }
      break;
    case 4:
    case 5:
      return spine_or_intro(pi, target, budget);
    default: break;
  }
  // introduction forms for the target
  switch (target.tag()) {
    case Type::Tag::Unit: return Term::unit();
    case Type::Tag::Arrow: {
      stack_.push_back(target.left());
      Term body = gen(pi, target.right(), budget - 1);
      stack_.pop_back();
      return Term::lam("x", target.left(), body);
    }
    case Type::Tag::Prod:
      return Term::pair(gen(pi, target.left(), (budget - 1) / 2),
                        gen(pi, target.right(), (budget - 1) / 2));
    case Type::Tag::Sum:
      return coin() ? Term::inj1(gen(pi, target.left(), budget - 1))
                    : Term::inj2(gen(pi, target.right(), budget - 1));
    case Type::Tag::Seal:
      return Term::seal(target.level(),
                        gen(obs_with(pi, target.level()), target.body(), budget - 1));
    case Type::Tag::Monad:
      return Term::eta(target.level(),
                       gen(obs_with(pi, target.level()), target.body(), budget - 1));
    default: return canonical_for(poset_, calc_, pi, target);
  }
}

}  // namespace seal
