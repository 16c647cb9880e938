#include "seal/print.hpp"

#include <vector>

namespace seal {

namespace {

// Type precedence: -> (1, right assoc) < + (2) < * (3) < atoms (4).
std::string ptype(const Type& t, int min_prec) {
  auto wrap = [&](const std::string& s, int prec) {
    return prec < min_prec ? "(" + s + ")" : s;
  };
  switch (t.tag()) {
    case Type::Tag::Unit: return "unit";
    case Type::Tag::Base: return "a@" + t.level();
    case Type::Tag::Hole: return "?";
    case Type::Tag::Seal: return "[" + ptype(t.body(), 1) + "]@" + t.level();
    case Type::Tag::Monad: return "T@" + t.level() + " " + ptype(t.body(), 4);
    case Type::Tag::Arrow:
      return wrap(ptype(t.left(), 2) + " -> " + ptype(t.right(), 1), 1);
    case Type::Tag::Sum:  // + and * associate left
      return wrap(ptype(t.left(), 2) + " + " + ptype(t.right(), 3), 2);
    case Type::Tag::Prod:
      return wrap(ptype(t.left(), 3) + " * " + ptype(t.right(), 4), 3);
  }
  return "?";
}

// Term precedence: binders/case/bind (0) < prefix ops (1) < application (2) < atoms (3).
struct Printer {
  std::vector<std::string> scope;

  std::string pick_name(const std::string& hint, const Term& body) {
    std::string base = hint.empty() ? "x" : hint;
    auto taken = [&](const std::string& n) {
      for (const auto& s : scope)
        if (s == n) return true;
      return contains_free(body, n);
    };
    if (!taken(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!taken(cand)) return cand;
    }
  }

  std::string go(const Term& t, int min_prec) {
    auto wrap = [&](const std::string& s, int prec) {
      return prec < min_prec ? "(" + s + ")" : s;
    };
    using Tag = Term::Tag;
    switch (t.tag()) {
      case Tag::Free: return t.name();
      case Tag::Bound: {
        int i = t.index();
        if (i >= 0 && i < static_cast<int>(scope.size()))
          return scope[scope.size() - 1 - i];
        return "#" + std::to_string(i);
      }
      case Tag::Unit: return "()";
      case Tag::Lam: {
        std::string x = pick_name(t.name(), t.sub1());
        scope.push_back(x);
        std::string body = go(t.sub1(), 0);
        scope.pop_back();
        return wrap("\\" + x + ":" + print_type(t.anno()) + ". " + body, 0);
      }
      case Tag::App:
        return wrap(go(t.sub1(), 2) + " " + go(t.sub2(), 3), 2);
      case Tag::Pair:
        return "<" + go(t.sub1(), 0) + ", " + go(t.sub2(), 0) + ">";
      case Tag::Proj1: return wrap("p1 " + go(t.sub1(), 3), 1);
      case Tag::Proj2: return wrap("p2 " + go(t.sub1(), 3), 1);
      case Tag::Inj1: return wrap("i1 " + go(t.sub1(), 3), 1);
      case Tag::Inj2: return wrap("i2 " + go(t.sub1(), 3), 1);
      case Tag::Seal: return wrap("seal@" + t.level() + " " + go(t.sub1(), 3), 1);
      case Tag::Unseal: return wrap("unseal@" + t.level() + " " + go(t.sub1(), 3), 1);
      case Tag::Eta: return wrap("eta@" + t.level() + " " + go(t.sub1(), 3), 1);
      case Tag::Protect: return wrap("protect@" + t.level() + " " + go(t.sub1(), 3), 1);
      case Tag::Case: {
        std::string scrut = go(t.sub1(), 1);
        std::string x1 = pick_name(t.name(), t.sub2());
        scope.push_back(x1);
        std::string b1 = go(t.sub2(), 0);
        scope.pop_back();
        std::string x2 = pick_name(t.name2(), t.sub3());
        scope.push_back(x2);
        std::string b2 = go(t.sub3(), 0);
        scope.pop_back();
        return wrap("case " + scrut + " of " + x1 + " => " + b1 + " | " + x2 + " => " + b2, 0);
      }
      case Tag::Bind: {
        std::string rhs = go(t.sub1(), 1);
        std::string x = pick_name(t.name(), t.sub2());
        scope.push_back(x);
        std::string body = go(t.sub2(), 0);
        scope.pop_back();
        return wrap("bind " + x + " = " + rhs + " in " + body, 0);
      }
    }
    return "?";
  }
};

}  // namespace

std::string print_type(const Type& t) { return ptype(t, 1); }

std::string print_term(const Term& t) {
  Printer p;
  return p.go(t, 0);
}

}  // namespace seal
