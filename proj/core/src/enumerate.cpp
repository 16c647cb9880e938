#include "seal/enumerate.hpp"

#include <map>

namespace seal {

namespace {

struct Enumerator {
  const LevelPoset& poset;
  Calculus calc;
  const NamedCtx& named;
  std::vector<Type> stack;
  std::map<std::string, std::vector<Term>> memo;

  std::string memo_key(const Type& t, const Obs& pi, int n, bool neutral) {
    std::string k = neutral ? "n|" : "g|";
    k += obs_to_string(pi) + "|" + std::to_string(n) + "|" + structural_key(t) + "|";
    for (const auto& s : stack) k += structural_key(s) + ";";
    return k;
  }

  // Variables in scope with their types. Bound indices depend on the
  // current stack depth, so terms are rebuilt per call site.
  std::vector<std::pair<Term, Type>> vars() {
    std::vector<std::pair<Term, Type>> out;
    for (const auto& [name, ty] : named) out.emplace_back(Term::free(name), ty);
    for (size_t d = 0; d < stack.size(); ++d)
      out.emplace_back(Term::bound(static_cast<int>(stack.size() - 1 - d)),
                       stack[d]);
    return out;
  }

  // Elimination types reachable from the context; used to pick case
  // scrutinee types.
  std::set<std::string> reachable_keys;
  std::vector<Type> reachable_cache;
  void reach(const Type& t, const Obs& pi) {
    std::string k = structural_key(t) + "@" + obs_to_string(pi);
    if (!reachable_keys.insert(k).second) return;
    reachable_cache.push_back(t);
    switch (t.tag()) {
      case Type::Tag::Arrow: reach(t.right(), pi); break;
      case Type::Tag::Prod:
        reach(t.left(), pi);
        reach(t.right(), pi);
        break;
      case Type::Tag::Seal:
        if (calc == Calculus::Dc && level_below_obs(poset, t.level(), pi))
          reach(t.body(), pi);
        break;
      default: break;
    }
  }
  std::vector<Type> reachable_sums(const Obs& pi) {
    reachable_keys.clear();
    reachable_cache.clear();
    for (const auto& [_, ty] : named) reach(ty, pi);
    for (const auto& ty : stack) reach(ty, pi);
    std::vector<Type> sums;
    for (const auto& t : reachable_cache)
      if (t.tag() == Type::Tag::Sum) sums.push_back(t);
    return sums;
  }

  std::vector<Term> neutrals(const Type& t, const Obs& pi, int n) {
    std::string key = memo_key(t, pi, n, true);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    for (const auto& [v, ty] : vars()) spine(v, ty, 1, t, pi, n, out);
    memo[key] = out;
    return out;
  }

  void spine(const Term& head, const Type& ty, int sz, const Type& target,
             const Obs& pi, int n, std::vector<Term>& out) {
    if (sz == n && ty == target) out.push_back(head);
    if (sz >= n) return;
    switch (ty.tag()) {
      case Type::Tag::Arrow:
        for (int m = 1; sz + 1 + m <= n; ++m)
          for (const auto& arg : generate(ty.left(), pi, m))
            spine(Term::app(head, arg), ty.right(), sz + 1 + m, target, pi, n, out);
        break;
      case Type::Tag::Prod:
        spine(Term::proj1(head), ty.left(), sz + 1, target, pi, n, out);
        spine(Term::proj2(head), ty.right(), sz + 1, target, pi, n, out);
        break;
      case Type::Tag::Seal:
        if (calc == Calculus::Dc && level_below_obs(poset, ty.level(), pi))
          spine(Term::unseal(head, ty.level()), ty.body(), sz + 1, target, pi, n, out);
        break;
      default: break;
    }
  }

  std::vector<Term> generate(const Type& t, const Obs& pi, int n) {
    if (n <= 0) return {};
    std::string key = memo_key(t, pi, n, false);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    // introductions
    switch (t.tag()) {
      case Type::Tag::Unit:
        if (n == 1) out.push_back(Term::unit());
        break;
      case Type::Tag::Arrow: {
        stack.push_back(t.left());
        for (const auto& body : generate(t.right(), pi, n - 1))
          out.push_back(Term::lam("x", t.left(), body));
        stack.pop_back();
        break;
      }
      case Type::Tag::Prod:
        for (int i = 1; 1 + i < n; ++i)
          for (const auto& a : generate(t.left(), pi, i))
            for (const auto& b : generate(t.right(), pi, n - 1 - i))
              out.push_back(Term::pair(a, b));
        break;
      case Type::Tag::Sum:
        for (const auto& a : generate(t.left(), pi, n - 1))
          out.push_back(Term::inj1(a));
        for (const auto& b : generate(t.right(), pi, n - 1))
          out.push_back(Term::inj2(b));
        break;
      case Type::Tag::Seal:
        if (calc == Calculus::Dc)
          for (const auto& body : generate(t.body(), obs_with(pi, t.level()), n - 1))
            out.push_back(Term::seal(t.level(), body));
        break;
      default: break;
    }
    // neutrals
    if (t.tag() != Type::Tag::Hole)
      for (const auto& r : neutrals(t, pi, n)) out.push_back(r);
    // case dispatch on a neutral scrutinee of any reachable sum type
    for (const auto& s : reachable_sums(pi)) {
      for (int i = 1; 1 + i + 2 <= n; ++i) {
        auto scruts = neutrals(s, pi, i);
        if (scruts.empty()) continue;
        for (int j = 1; 1 + i + j + 1 <= n; ++j) {
          stack.push_back(s.left());
          auto b1s = generate(t, pi, j);
          stack.pop_back();
          if (b1s.empty()) continue;
          int k = n - 1 - i - j;
          stack.push_back(s.right());
          auto b2s = generate(t, pi, k);
          stack.pop_back();
          if (b2s.empty()) continue;
          for (const auto& sc : scruts)
            for (const auto& b1 : b1s)
              for (const auto& b2 : b2s)
                out.push_back(Term::case_of(sc, "y", b1, "z", b2));
        }
      }
    }
    memo[key] = out;
    return out;
  }
};

}  // namespace

std::vector<Term> enumerate_normal_dc(const LevelPoset& p, const NamedCtx& ctx,
                                      const Obs& pi, const Type& t, int max_size) {
  Enumerator en{p, Calculus::Dc, ctx};
  std::vector<Term> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& e : en.generate(t, pi, n))
      if (seen.insert(structural_key(e)).second) out.push_back(e);
  return out;
}

std::vector<Term> enumerate_normal_stlc(const LevelPoset& p, const NamedCtx& ctx,
                                        const Type& a, int max_size) {
  Enumerator en{p, Calculus::Stlc, ctx};
  std::vector<Term> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& e : en.generate(a, {}, n))
      if (seen.insert(structural_key(e)).second) out.push_back(e);
  return out;
}

Term canonical_dc(const LevelPoset& p, const Obs& pi, const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return Term::unit();
    case Type::Tag::Sum: return Term::inj1(canonical_dc(p, pi, t.left()));
    case Type::Tag::Prod:
      return Term::pair(canonical_dc(p, pi, t.left()), canonical_dc(p, pi, t.right()));
    case Type::Tag::Arrow:
      return Term::lam("x", t.left(), shift(canonical_dc(p, pi, t.right()), 1));
    case Type::Tag::Seal:
      return Term::seal(t.level(),
                        canonical_dc(p, obs_with(pi, t.level()), t.body()));
    default:
      fail(Err::ForeignConstruct, "no canonical inhabitant for this type here");
  }
}

namespace {

std::optional<Term> canonical_stlc_in(const LevelPoset& p, const NamedCtx& ctx,
                                      std::vector<Type>& stack, const Type& a) {
  switch (a.tag()) {
    case Type::Tag::Unit: return Term::unit();
    case Type::Tag::Base: {
      // least base-typed variable whose level dominates a's level
      std::optional<Term> best;
      std::string best_level;
      auto consider = [&](const Term& v, const Type& ty) {
        if (ty.tag() != Type::Tag::Base) return;
        if (!p.leq(a.level(), ty.level())) return;
        if (!best || ty.level() < best_level) {
          best = v;
          best_level = ty.level();
        }
      };
      for (const auto& [name, ty] : ctx) consider(Term::free(name), ty);
      for (size_t d = 0; d < stack.size(); ++d)
        consider(Term::bound(static_cast<int>(stack.size() - 1 - d)), stack[d]);
      if (!best) return std::nullopt;
      std::string coercion = "c$" + best_level + "$" + a.level();
      return Term::app(Term::free(coercion), *best);
    }
    case Type::Tag::Sum: {
      if (auto l = canonical_stlc_in(p, ctx, stack, a.left())) return Term::inj1(*l);
      if (auto r = canonical_stlc_in(p, ctx, stack, a.right())) return Term::inj2(*r);
      return std::nullopt;
    }
    case Type::Tag::Prod: {
      auto l = canonical_stlc_in(p, ctx, stack, a.left());
      auto r = canonical_stlc_in(p, ctx, stack, a.right());
      if (!l || !r) return std::nullopt;
      return Term::pair(*l, *r);
    }
    case Type::Tag::Arrow: {
      stack.push_back(a.left());
      auto body = canonical_stlc_in(p, ctx, stack, a.right());
      stack.pop_back();
      if (!body) return std::nullopt;
      return Term::lam("x", a.left(), *body);
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<Term> canonical_stlc(const LevelPoset& p, const NamedCtx& ctx,
                                   const Type& a) {
  std::vector<Type> stack;
  return canonical_stlc_in(p, ctx, stack, a);
}

Term canonical_dpc(const LevelPoset& p, const Obs& pi, const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return Term::unit();
    case Type::Tag::Sum: return Term::inj1(canonical_dpc(p, pi, t.left()));
    case Type::Tag::Prod:
      return Term::pair(canonical_dpc(p, pi, t.left()), canonical_dpc(p, pi, t.right()));
    case Type::Tag::Arrow:
      return Term::lam("x", t.left(), shift(canonical_dpc(p, pi, t.right()), 1));
    case Type::Tag::Monad:
      return Term::eta(t.level(),
                       canonical_dpc(p, obs_with(pi, t.level()), t.body()));
    default:
      fail(Err::ForeignConstruct, "no canonical inhabitant for this type here");
  }
}

}  // namespace seal
