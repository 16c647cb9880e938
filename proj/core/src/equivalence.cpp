#include "seal/equivalence.hpp"

#include <functional>

#include "seal/print.hpp"

namespace seal {

namespace {

Verdict lr_values_dc(const LevelPoset& p, const Obs& pi, const Term& v1,
                     const Term& v2, const Type& t, const Limits& limits);

// Builds the body of a representative function: case-analyzes `cur`
// (of type t at pi) down to its class index and plugs in the chosen
// closed output term.
Term selector(const LevelPoset& p, const Type& t, const Obs& pi, const Term& cur,
              const Limits& limits, const std::function<Term(int)>& choose,
              int& marker_counter) {
  switch (t.tag()) {
    case Type::Tag::Unit: return choose(0);
    case Type::Tag::Prod: {
      int nb = static_cast<int>(reps_dc(p, t.right(), pi, limits).reps.size());
      return selector(p, t.left(), pi, Term::proj1(cur), limits,
                      [&](int i) {
                        return selector(p, t.right(), pi, Term::proj2(cur), limits,
                                        [&](int j) { return choose(i * nb + j); },
                                        marker_counter);
                      },
                      marker_counter);
    }
    case Type::Tag::Sum: {
      int na = static_cast<int>(reps_dc(p, t.left(), pi, limits).reps.size());
      std::string m1 = "$s$" + std::to_string(marker_counter++);
      std::string m2 = "$s$" + std::to_string(marker_counter++);
      Term b1 = selector(p, t.left(), pi, Term::free(m1), limits, choose, marker_counter);
      Term b2 = selector(p, t.right(), pi, Term::free(m2), limits,
                         [&](int j) { return choose(na + j); }, marker_counter);
      return Term::case_of(cur, "y", abstract_free(b1, m1), "z",
                           abstract_free(b2, m2));
    }
    case Type::Tag::Seal: {
      if (!level_below_obs(p, t.level(), pi)) return choose(0);
      return selector(p, t.body(), obs_with(pi, t.level()),
                      Term::unseal(cur, t.level()), limits, choose, marker_counter);
    }
    case Type::Tag::Arrow: return choose(0);  // splittable arrows are singletons
    default: fail(Err::InternalError, "selector");
  }
}

}  // namespace

bool splittable(const LevelPoset& p, const Type& t, const Obs& pi) {
  switch (t.tag()) {
    case Type::Tag::Unit: return true;
    case Type::Tag::Sum:
    case Type::Tag::Prod:
      return splittable(p, t.left(), pi) && splittable(p, t.right(), pi);
    case Type::Tag::Seal:
      if (!level_below_obs(p, t.level(), pi)) return true;  // one class
      return splittable(p, t.body(), obs_with(pi, t.level()));
    case Type::Tag::Arrow: {
      RepSet cod = reps_dc(p, t.right(), pi);
      return cod.exact && cod.reps.size() == 1;
    }
    default: return false;
  }
}

RepSet reps_dc(const LevelPoset& p, const Type& t, const Obs& pi,
               const Limits& limits) {
  RepSet out{t, pi, {}, true};
  switch (t.tag()) {
    case Type::Tag::Unit:
      out.reps = {Term::unit()};
      return out;
    case Type::Tag::Sum: {
      RepSet l = reps_dc(p, t.left(), pi, limits);
      RepSet r = reps_dc(p, t.right(), pi, limits);
      for (const auto& a : l.reps) out.reps.push_back(Term::inj1(a));
      for (const auto& b : r.reps) out.reps.push_back(Term::inj2(b));
      out.exact = l.exact && r.exact;
      return out;
    }
    case Type::Tag::Prod: {
      RepSet l = reps_dc(p, t.left(), pi, limits);
      RepSet r = reps_dc(p, t.right(), pi, limits);
      for (const auto& a : l.reps)
        for (const auto& b : r.reps) out.reps.push_back(Term::pair(a, b));
      out.exact = l.exact && r.exact;
      return out;
    }
    case Type::Tag::Seal: {
      Obs inner = obs_with(pi, t.level());
      if (level_below_obs(p, t.level(), pi)) {
        RepSet body = reps_dc(p, t.body(), inner, limits);
        for (const auto& b : body.reps) out.reps.push_back(Term::seal(t.level(), b));
        out.exact = body.exact;
        return out;
      }
      out.reps = {Term::seal(t.level(), canonical_dc(p, inner, t.body()))};
      return out;
    }
    case Type::Tag::Arrow: {
      RepSet cod = reps_dc(p, t.right(), pi, limits);
      if (cod.exact && cod.reps.size() == 1) {
        // single-class codomain collapses the whole function space
        out.reps = {Term::lam("x", t.left(), shift(cod.reps[0], 1))};
        return out;
      }
      if (splittable(p, t.left(), pi) && cod.exact) {
        RepSet dom = reps_dc(p, t.left(), pi, limits);
        size_t nd = dom.reps.size(), nc = cod.reps.size();
        double tables = 1;
        for (size_t i = 0; i < nd; ++i) tables *= static_cast<double>(nc);
        if (tables <= limits.max_table_reps) {
          std::vector<size_t> assign(nd, 0);
          for (;;) {
            int markers = 0;
            Term body = selector(
                p, t.left(), pi, Term::free("$arg$"), limits,
                [&](int cls) { return cod.reps[assign[static_cast<size_t>(cls)]]; },
                markers);
            out.reps.push_back(Term::lam("x", t.left(), abstract_free(body, "$arg$")));
            size_t i = 0;
            while (i < nd && ++assign[i] == nc) assign[i++] = 0;
            if (i == nd) break;
          }
          return out;
        }
      }
      // bounded enumeration fallback; classes are not certified
      out.exact = false;
      auto all = enumerate_normal_dc(p, {}, pi, t, limits.term_size);
      for (const auto& cand : all) {
        bool fresh = true;
        for (const auto& have : out.reps) {
          Verdict v = lr_dc(p, pi, have, cand, t, limits);
          if (v.is_related()) {
            fresh = false;
            break;
          }
        }
        if (fresh) out.reps.push_back(cand);
        if (out.reps.size() > static_cast<size_t>(limits.max_table_reps)) break;
      }
      return out;
    }
    default:
      fail(Err::ForeignConstruct, print_type(t) + " has no representative set");
  }
}

namespace {

Verdict lr_values_dc(const LevelPoset& p, const Obs& pi, const Term& v1,
                     const Term& v2, const Type& t, const Limits& limits) {
  switch (t.tag()) {
    case Type::Tag::Unit: return Verdict::related();
    case Type::Tag::Sum: {
      bool i1a = v1.tag() == Term::Tag::Inj1, i2a = v1.tag() == Term::Tag::Inj2;
      bool i1b = v2.tag() == Term::Tag::Inj1, i2b = v2.tag() == Term::Tag::Inj2;
      if ((!i1a && !i2a) || (!i1b && !i2b))
        return Verdict::unknown("non-canonical normal form at sum type");
      if (i1a != i1b)
        return Verdict::not_related("tags differ at " + print_type(t) + ": " +
                                    print_term(v1) + " vs " + print_term(v2));
      return lr_values_dc(p, pi, v1.sub1(), v2.sub1(), i1a ? t.left() : t.right(),
                          limits);
    }
    case Type::Tag::Prod: {
      if (v1.tag() != Term::Tag::Pair || v2.tag() != Term::Tag::Pair)
        return Verdict::unknown("non-canonical normal form at product type");
      Verdict l = lr_values_dc(p, pi, v1.sub1(), v2.sub1(), t.left(), limits);
      if (!l.is_related()) return l;
      return lr_values_dc(p, pi, v1.sub2(), v2.sub2(), t.right(), limits);
    }
    case Type::Tag::Seal: {
      if (!level_below_obs(p, t.level(), pi)) return Verdict::related();
      if (v1.tag() != Term::Tag::Seal || v2.tag() != Term::Tag::Seal)
        return Verdict::unknown("non-canonical normal form at sealing type");
      return lr_values_dc(p, obs_with(pi, t.level()), v1.sub1(), v2.sub1(), t.body(),
                          limits);
    }
    case Type::Tag::Arrow: {
      RepSet dom = reps_dc(p, t.left(), pi, limits);
      if (!dom.exact)
        return Verdict::unknown("inexact representatives for " +
                                print_type(t.left()) + " at " + obs_to_string(pi));
      for (const auto& r : dom.reps) {
        Term a1 = normalize_dc(Term::app(v1, r), limits.fuel);
        Term a2 = normalize_dc(Term::app(v2, r), limits.fuel);
        Verdict v = lr_values_dc(p, pi, a1, a2, t.right(), limits);
        if (v.is_not_related())
          return Verdict::not_related("argument " + print_term(r) + ": " + v.detail);
        if (v.is_unknown()) return v;
      }
      return Verdict::related();
    }
    default:
      fail(Err::ForeignConstruct, print_type(t) + " outside the sealing calculus");
  }
}

}  // namespace

Verdict lr_dc(const LevelPoset& p, const Obs& pi, const Term& e1, const Term& e2,
              const Type& t, const Limits& limits) {
  if (!is_closed(e1) || !is_closed(e2))
    fail(Err::OpenTerm, "logical relation needs closed terms");
  try {
    check_dc(p, {}, pi, e1, t);
    check_dc(p, {}, pi, e2, t);
  } catch (const Error& err) {
    fail(Err::IllTyped, err.what());
  }
  Term v1 = normalize_dc(e1, limits.fuel);
  Term v2 = normalize_dc(e2, limits.fuel);
  return lr_values_dc(p, pi, v1, v2, t, limits);
}

// ---------- simply typed side ----------

namespace {

struct StlcReps {
  std::vector<Term> reps;
  bool exact = true;
};

std::optional<std::string> least_eligible(const LevelPoset& p, const KeyMap& sigma,
                                          const std::string& l) {
  std::optional<std::string> best;
  for (const auto& [lvl, _] : sigma.level_to_key)
    if (p.leq(l, lvl) && (!best || lvl < *best)) best = lvl;
  return best;
}

Term canonical_key(const LevelPoset& p, const KeyMap& sigma, const std::string& l) {
  auto hi = least_eligible(p, sigma, l);
  if (!hi) fail(Err::InternalError, "no key for " + l);
  return Term::app(Term::free(CoercionContext::var_name(*hi, l)),
                   Term::free(sigma.level_to_key.at(*hi)));
}

StlcReps reps_stlc(const LevelPoset& p, const NamedCtx& env, const KeyMap& sigma,
                   const Type& a, int& marker) {
  switch (a.tag()) {
    case Type::Tag::Unit: return {{Term::unit()}, true};
    case Type::Tag::Base:
      if (least_eligible(p, sigma, a.level()))
        return {{canonical_key(p, sigma, a.level())}, true};
      return {{}, true};  // uninhabited
    case Type::Tag::Sum: {
      StlcReps l = reps_stlc(p, env, sigma, a.left(), marker);
      StlcReps r = reps_stlc(p, env, sigma, a.right(), marker);
      StlcReps out;
      for (const auto& x : l.reps) out.reps.push_back(Term::inj1(x));
      for (const auto& x : r.reps) out.reps.push_back(Term::inj2(x));
      out.exact = l.exact && r.exact;
      return out;
    }
    case Type::Tag::Prod: {
      StlcReps l = reps_stlc(p, env, sigma, a.left(), marker);
      StlcReps r = reps_stlc(p, env, sigma, a.right(), marker);
      StlcReps out;
      for (const auto& x : l.reps)
        for (const auto& y : r.reps) out.reps.push_back(Term::pair(x, y));
      out.exact = l.exact && r.exact;
      return out;
    }
    case Type::Tag::Arrow: {
      if (a.left().tag() == Type::Tag::Base) {
        const std::string& l = a.left().level();
        std::string m = "$k$" + std::to_string(marker++);
        NamedCtx env2 = env;
        env2.emplace(m, a.left());
        KeyMap sg2 = sigma.with(l, m);
        if (least_eligible(p, sigma, l)) {
          StlcReps inner = reps_stlc(p, env2, sg2, a.right(), marker);
          StlcReps out;
          for (const auto& r : inner.reps)
            out.reps.push_back(Term::lam("k", a.left(), abstract_free(r, m)));
          out.exact = inner.exact;
          return out;
        }
        auto body = canonical_stlc(p, env2, a.right());
        if (!body) return {{}, false};
        return {{Term::lam("k", a.left(), abstract_free(*body, m))}, true};
      }
      StlcReps cod = reps_stlc(p, env, sigma, a.right(), marker);
      if (cod.exact && cod.reps.size() == 1)
        return {{Term::lam("x", a.left(), shift(cod.reps[0], 1))}, true};
      return {{}, false};  // higher-order domains are not certified here
    }
    default: return {{}, false};
  }
}

Verdict lr_values_stlc(const LevelPoset& p, const NamedCtx& env, const KeyMap& sigma,
                       const Term& v1, const Term& v2, const Type& a,
                       const Limits& limits) {
  switch (a.tag()) {
    case Type::Tag::Unit: return Verdict::related();
    case Type::Tag::Base: return Verdict::related();  // all keys identified
    case Type::Tag::Sum: {
      bool i1a = v1.tag() == Term::Tag::Inj1, i2a = v1.tag() == Term::Tag::Inj2;
      bool i1b = v2.tag() == Term::Tag::Inj1, i2b = v2.tag() == Term::Tag::Inj2;
      if ((!i1a && !i2a) || (!i1b && !i2b))
        return Verdict::unknown("non-canonical normal form at sum type");
      if (i1a != i1b)
        return Verdict::not_related("tags differ: " + print_term(v1) + " vs " +
                                    print_term(v2));
      return lr_values_stlc(p, env, sigma, v1.sub1(), v2.sub1(),
                            i1a ? a.left() : a.right(), limits);
    }
    case Type::Tag::Prod: {
      if (v1.tag() != Term::Tag::Pair || v2.tag() != Term::Tag::Pair)
        return Verdict::unknown("non-canonical normal form at product type");
      Verdict l = lr_values_stlc(p, env, sigma, v1.sub1(), v2.sub1(), a.left(), limits);
      if (!l.is_related()) return l;
      return lr_values_stlc(p, env, sigma, v1.sub2(), v2.sub2(), a.right(), limits);
    }
    case Type::Tag::Arrow: {
      if (a.left().tag() == Type::Tag::Base) {
        const std::string& l = a.left().level();
        if (!least_eligible(p, sigma, l)) return Verdict::related();  // vacuous
        Term k = canonical_key(p, sigma, l);
        Term r1 = normalize_stlc(Term::app(v1, k), limits.fuel);
        Term r2 = normalize_stlc(Term::app(v2, k), limits.fuel);
        return lr_values_stlc(p, env, sigma, r1, r2, a.right(), limits);
      }
      int marker = 0;
      StlcReps dom = reps_stlc(p, env, sigma, a.left(), marker);
      if (!dom.exact)
        return Verdict::unknown("inexact representatives for " + print_type(a.left()));
      for (const auto& r : dom.reps) {
        Term r1 = normalize_stlc(Term::app(v1, r), limits.fuel);
        Term r2 = normalize_stlc(Term::app(v2, r), limits.fuel);
        Verdict v = lr_values_stlc(p, env, sigma, r1, r2, a.right(), limits);
        if (v.is_not_related())
          return Verdict::not_related("argument " + print_term(r) + ": " + v.detail);
        if (v.is_unknown()) return v;
      }
      return Verdict::related();
    }
    default: return Verdict::unknown("unsupported type " + print_type(a));
  }
}

}  // namespace

Verdict lr_stlc(const LevelPoset& p, const NamedCtx& g, const Term& m1,
                const Term& m2, const Type& a, const Limits& limits) {
  // Validate the coercions-plus-keys shape and recover the key map.
  NamedCtx kc = build_kc(p).as_ctx();
  KeyMap sigma;
  for (const auto& [name, ty] : g) {
    auto it = kc.find(name);
    if (it != kc.end()) {
      if (it->second != ty)
        fail(Err::UnsupportedContext, name + " is not the expected coercion");
      continue;
    }
    if (ty.tag() == Type::Tag::Base) {
      if (sigma.level_to_key.count(ty.level()))
        fail(Err::UnsupportedContext, "two keys for level " + ty.level());
      sigma.level_to_key[ty.level()] = name;
      continue;
    }
    fail(Err::UnsupportedContext, name + " : " + print_type(ty));
  }
  for (const auto& [name, ty] : kc)
    if (!g.count(name))
      fail(Err::UnsupportedContext, "missing coercion " + name);
  try {
    check_stlc(p, g, m1, a);
    check_stlc(p, g, m2, a);
  } catch (const Error& err) {
    fail(Err::IllTyped, err.what());
  }
  Term v1 = normalize_stlc(m1, limits.fuel);
  Term v2 = normalize_stlc(m2, limits.fuel);
  return lr_values_stlc(p, g, sigma, v1, v2, a, limits);
}

// ---------- noninterference and contexts ----------

Verdict noninterference_check(const LevelPoset& p, const NamedCtx& g, const Obs& pi,
                              const Term& e, const Limits& limits) {
  Checked ck = [&] {
    try {
      return typecheck_dc(p, g, pi, e);
    } catch (const Error& err) {
      fail(Err::IllTyped, err.what());
    }
  }();
  // Per-variable pairs of related closed values.
  std::vector<std::string> names;
  std::vector<std::vector<std::pair<Term, Term>>> pairs;
  for (const auto& [name, ty] : g) {
    RepSet reps = reps_dc(p, ty, pi, limits);
    if (!reps.exact)
      return Verdict::unknown("inexact representatives for " + print_type(ty));
    std::vector<std::pair<Term, Term>> mine;
    for (const auto& r : reps.reps) mine.emplace_back(r, r);
    if (ty.tag() == Type::Tag::Seal && !level_below_obs(p, ty.level(), pi)) {
      // same class, syntactically different sealed payloads
      RepSet inner = reps_dc(p, ty.body(), obs_with(pi, ty.level()), limits);
      int added = 0;
      for (size_t i = 0; i < inner.reps.size() && added < limits.max_subst_pairs; ++i)
        for (size_t j = 0; j < inner.reps.size() && added < limits.max_subst_pairs; ++j)
          if (i != j) {
            mine.emplace_back(Term::seal(ty.level(), inner.reps[i]),
                              Term::seal(ty.level(), inner.reps[j]));
            ++added;
          }
    }
    if (mine.size() > static_cast<size_t>(limits.max_subst_pairs) + 2)
      mine.resize(static_cast<size_t>(limits.max_subst_pairs) + 2);
    names.push_back(name);
    pairs.push_back(std::move(mine));
  }
  // Cartesian product of the per-variable pairs.
  std::vector<size_t> idx(pairs.size(), 0);
  for (;;) {
    Term e1 = e, e2 = e;
    for (size_t i = 0; i < pairs.size(); ++i) {
      e1 = subst_free(e1, names[i], pairs[i][idx[i]].first);
      e2 = subst_free(e2, names[i], pairs[i][idx[i]].second);
    }
    Verdict v = lr_dc(p, pi, e1, e2, ck.type, limits);
    if (v.is_not_related()) {
      std::string w = "substitution pair";
      for (size_t i = 0; i < pairs.size(); ++i)
        w += " " + names[i] + " := " + print_term(pairs[i][idx[i]].first) + " / " +
             print_term(pairs[i][idx[i]].second) + ";";
      return Verdict::not_related(w + " " + v.detail);
    }
    if (v.is_unknown()) return v;
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == pairs[i].size()) idx[i++] = 0;
    if (i == idx.size() || idx.empty()) break;
  }
  return Verdict::related();
}

Verdict ctx_equiv_test(const LevelPoset& p, const Obs& pi, const Term& e1,
                       const Term& e2, const Type& t, int size_bound, bool strict,
                       long fuel) {
  if (!is_closed(e1) || !is_closed(e2))
    fail(Err::OpenTerm, "contextual equivalence needs closed terms");
  try {
    check_dc(p, {}, pi, e1, t);
    check_dc(p, {}, pi, e2, t);
  } catch (const Error& err) {
    fail(Err::IllTyped, err.what());
  }
  Type obs_fun = Type::arrow(t, Type::boolean());
  for (const auto& f : enumerate_normal_dc(p, {}, pi, obs_fun, size_bound)) {
    Term r1 = normalize_dc(Term::app(f, e1), fuel);
    Term r2 = normalize_dc(Term::app(f, e2), fuel);
    if (r1 != r2) return Verdict::not_related(print_term(f));
  }
  if (strict)
    return Verdict::unknown("no distinguisher up to size " +
                            std::to_string(size_bound));
  return {Verdict::V::Related,
          "up to distinguisher size " + std::to_string(size_bound)};
}

}  // namespace seal
