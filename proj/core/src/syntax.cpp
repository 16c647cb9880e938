#include "seal/syntax.hpp"

#include <atomic>

namespace seal {

namespace {
std::atomic<int> g_hole_counter{1};
}

// ---------- Type ----------

Type Type::unit() {
  static Type u{std::make_shared<const Node>(Node{Tag::Unit, "", {}, {}, 0})};
  return u;
}
Type Type::base(std::string level) {
  return Type{std::make_shared<const Node>(Node{Tag::Base, std::move(level), {}, {}, 0})};
}
Type Type::arrow(Type dom, Type cod) {
  return Type{std::make_shared<const Node>(Node{Tag::Arrow, "", std::move(dom), std::move(cod), 0})};
}
Type Type::prod(Type a, Type b) {
  return Type{std::make_shared<const Node>(Node{Tag::Prod, "", std::move(a), std::move(b), 0})};
}
Type Type::sum(Type a, Type b) {
  return Type{std::make_shared<const Node>(Node{Tag::Sum, "", std::move(a), std::move(b), 0})};
}
Type Type::seal(std::string level, Type body) {
  return Type{std::make_shared<const Node>(Node{Tag::Seal, std::move(level), std::move(body), {}, 0})};
}
Type Type::monad(std::string level, Type body) {
  return Type{std::make_shared<const Node>(Node{Tag::Monad, std::move(level), std::move(body), {}, 0})};
}
Type Type::boolean() { return sum(unit(), unit()); }
Type Type::hole() {
  return Type{std::make_shared<const Node>(
      Node{Tag::Hole, "", {}, {}, g_hole_counter.fetch_add(1)})};
}

Type::Tag Type::tag() const { return n_->tag; }
const std::string& Type::level() const { return n_->level; }
const Type& Type::left() const { return n_->a; }
const Type& Type::right() const { return n_->b; }
const Type& Type::body() const { return n_->a; }
int Type::hole_id() const { return n_->hole; }

bool Type::operator==(const Type& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->tag != o.n_->tag) return false;
  switch (n_->tag) {
    case Tag::Unit: return true;
    case Tag::Base: return n_->level == o.n_->level;
    case Tag::Arrow:
    case Tag::Prod:
    case Tag::Sum: return n_->a == o.n_->a && n_->b == o.n_->b;
    case Tag::Seal:
    case Tag::Monad: return n_->level == o.n_->level && n_->a == o.n_->a;
    case Tag::Hole: return n_->hole == o.n_->hole;
  }
  return false;
}

bool Type::has_holes() const {
  switch (tag()) {
    case Tag::Hole: return true;
    case Tag::Unit:
    case Tag::Base: return false;
    case Tag::Arrow:
    case Tag::Prod:
    case Tag::Sum: return left().has_holes() || right().has_holes();
    case Tag::Seal:
    case Tag::Monad: return body().has_holes();
  }
  return false;
}

bool Type::has_subexpr(const Type& sub) const {
  if (*this == sub) return true;
  switch (tag()) {
    case Tag::Arrow:
    case Tag::Prod:
    case Tag::Sum: return left().has_subexpr(sub) || right().has_subexpr(sub);
    case Tag::Seal:
    case Tag::Monad: return body().has_subexpr(sub);
    default: return false;
  }
}

// ---------- Term ----------

Term Term::free(std::string name) {
  return Term{std::make_shared<const Node>(Node{Tag::Free, std::move(name)})};
}
Term Term::bound(int index, std::string hint) {
  Node n{Tag::Bound, std::move(hint)};
  n.index = index;
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::unit() {
  static Term u{std::make_shared<const Node>(Node{Tag::Unit})};
  return u;
}
Term Term::lam(std::string hint, Type anno, Term body) {
  Node n{Tag::Lam, std::move(hint)};
  n.anno = std::move(anno);
  n.a = std::move(body);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::app(Term f, Term a) {
  Node n{Tag::App};
  n.a = std::move(f);
  n.b = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::pair(Term a, Term b) {
  Node n{Tag::Pair};
  n.a = std::move(a);
  n.b = std::move(b);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::proj1(Term a) {
  Node n{Tag::Proj1};
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::proj2(Term a) {
  Node n{Tag::Proj2};
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::inj1(Term a) {
  Node n{Tag::Inj1};
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::inj2(Term a) {
  Node n{Tag::Inj2};
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::case_of(Term scrut, std::string hint1, Term branch1,
                   std::string hint2, Term branch2) {
  Node n{Tag::Case, std::move(hint1), std::move(hint2)};
  n.a = std::move(scrut);
  n.b = std::move(branch1);
  n.c = std::move(branch2);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::seal(std::string level, Term a) {
  Node n{Tag::Seal};
  n.level = std::move(level);
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::unseal(Term a, std::string level) {
  Node n{Tag::Unseal};
  n.level = std::move(level);
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::eta(std::string level, Term a) {
  Node n{Tag::Eta};
  n.level = std::move(level);
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::bind(std::string hint, Term rhs, Term body) {
  Node n{Tag::Bind, std::move(hint)};
  n.a = std::move(rhs);
  n.b = std::move(body);
  return Term{std::make_shared<const Node>(std::move(n))};
}
Term Term::protect(std::string level, Term a) {
  Node n{Tag::Protect};
  n.level = std::move(level);
  n.a = std::move(a);
  return Term{std::make_shared<const Node>(std::move(n))};
}

Term::Tag Term::tag() const { return n_->tag; }
const std::string& Term::name() const { return n_->name; }
const std::string& Term::name2() const { return n_->name2; }
int Term::index() const { return n_->index; }
const std::string& Term::level() const { return n_->level; }
const Type& Term::anno() const { return n_->anno; }
const Term& Term::sub1() const { return n_->a; }
const Term& Term::sub2() const { return n_->b; }
const Term& Term::sub3() const { return n_->c; }

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->tag != o.n_->tag) return false;
  switch (n_->tag) {
    case Tag::Free: return n_->name == o.n_->name;
    case Tag::Bound: return n_->index == o.n_->index;
    case Tag::Unit: return true;
    case Tag::Lam: return n_->anno == o.n_->anno && n_->a == o.n_->a;
    case Tag::App:
    case Tag::Pair:
    case Tag::Bind: return n_->a == o.n_->a && n_->b == o.n_->b;
    case Tag::Proj1:
    case Tag::Proj2:
    case Tag::Inj1:
    case Tag::Inj2: return n_->a == o.n_->a;
    case Tag::Case:
      return n_->a == o.n_->a && n_->b == o.n_->b && n_->c == o.n_->c;
    case Tag::Seal:
    case Tag::Unseal:
    case Tag::Eta:
    case Tag::Protect: return n_->level == o.n_->level && n_->a == o.n_->a;
  }
  return false;
}

int binder_count(Term::Tag parent, int child_slot) {
  switch (parent) {
    case Term::Tag::Lam: return child_slot == 1 ? 1 : 0;
    case Term::Tag::Case: return child_slot >= 2 ? 1 : 0;
    case Term::Tag::Bind: return child_slot == 2 ? 1 : 0;
    default: return 0;
  }
}

namespace {

template <typename F>
Term map_children(const Term& t, F&& f) {
  using Tag = Term::Tag;
  switch (t.tag()) {
    case Tag::Free:
    case Tag::Bound:
    case Tag::Unit: return t;
    case Tag::Lam: return Term::lam(t.name(), t.anno(), f(t.sub1(), 1));
    case Tag::App: return Term::app(f(t.sub1(), 0), f(t.sub2(), 0));
    case Tag::Pair: return Term::pair(f(t.sub1(), 0), f(t.sub2(), 0));
    case Tag::Proj1: return Term::proj1(f(t.sub1(), 0));
    case Tag::Proj2: return Term::proj2(f(t.sub1(), 0));
    case Tag::Inj1: return Term::inj1(f(t.sub1(), 0));
    case Tag::Inj2: return Term::inj2(f(t.sub1(), 0));
    case Tag::Case:
      return Term::case_of(f(t.sub1(), 0), t.name(), f(t.sub2(), 1), t.name2(),
                           f(t.sub3(), 1));
    case Tag::Seal: return Term::seal(t.level(), f(t.sub1(), 0));
    case Tag::Unseal: return Term::unseal(f(t.sub1(), 0), t.level());
    case Tag::Eta: return Term::eta(t.level(), f(t.sub1(), 0));
    case Tag::Bind: return Term::bind(t.name(), f(t.sub1(), 0), f(t.sub2(), 1));
    case Tag::Protect: return Term::protect(t.level(), f(t.sub1(), 0));
  }
  fail(Err::InternalError, "map_children");
}

}  // namespace

Term shift(const Term& t, int d, int cutoff) {
  if (t.tag() == Term::Tag::Bound)
    return t.index() >= cutoff ? Term::bound(t.index() + d, t.name()) : t;
  return map_children(t, [&](const Term& child, int binders) {
    return shift(child, d, cutoff + binders);
  });
}

namespace {

Term subst_bound(const Term& t, int j, const Term& s) {
  if (t.tag() == Term::Tag::Bound) {
    if (t.index() == j) return shift(s, j);
    if (t.index() > j) return Term::bound(t.index() - 1, t.name());
    return t;
  }
  return map_children(t, [&](const Term& child, int binders) {
    return subst_bound(child, j + binders, s);
  });
}

}  // namespace

Term open_bound(const Term& body, const Term& s) { return subst_bound(body, 0, s); }

Term subst_free(const Term& t, const std::string& name, const Term& s) {
  if (t.tag() == Term::Tag::Free)
    return t.name() == name ? s : t;
  return map_children(t, [&](const Term& child, int binders) {
    return binders == 0 ? subst_free(child, name, s)
                        : subst_free(child, name, shift(s, binders));
  });
}

namespace {

Term close_free(const Term& t, const std::string& name, int depth) {
  if (t.tag() == Term::Tag::Free && t.name() == name)
    return Term::bound(depth, name);
  if (t.tag() == Term::Tag::Bound)
    return t.index() >= depth ? Term::bound(t.index() + 1, t.name()) : t;
  return map_children(t, [&](const Term& child, int binders) {
    return close_free(child, name, depth + binders);
  });
}

}  // namespace

Term abstract_free(const Term& t, const std::string& name) {
  return close_free(t, name, 0);
}

namespace {

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t.tag() == Term::Tag::Free) {
    out.insert(t.name());
    return;
  }
  map_children(t, [&](const Term& child, int) {
    collect_free(child, out);
    return child;
  });
}

bool bound_above(const Term& t, int depth) {
  if (t.tag() == Term::Tag::Bound) return t.index() >= depth;
  bool found = false;
  map_children(t, [&](const Term& child, int binders) {
    if (!found) found = bound_above(child, depth + binders);
    return child;
  });
  return found;
}

}  // namespace

std::set<std::string> free_names(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

bool contains_free(const Term& t, const std::string& name) {
  return free_names(t).count(name) > 0;
}

bool is_closed(const Term& t) { return free_names(t).empty() && !bound_above(t, 0); }

int term_size(const Term& t) {
  int n = 1;
  map_children(t, [&](const Term& child, int) {
    n += term_size(child);
    return child;
  });
  return n;
}

std::set<std::string> type_levels(const Type& t) {
  std::set<std::string> out;
  switch (t.tag()) {
    case Type::Tag::Unit:
    case Type::Tag::Hole: break;
    case Type::Tag::Base: out.insert(t.level()); break;
    case Type::Tag::Arrow:
    case Type::Tag::Prod:
    case Type::Tag::Sum: {
      out = type_levels(t.left());
      auto r = type_levels(t.right());
      out.insert(r.begin(), r.end());
      break;
    }
    case Type::Tag::Seal:
    case Type::Tag::Monad: {
      out = type_levels(t.body());
      out.insert(t.level());
      break;
    }
  }
  return out;
}

std::string structural_key(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Unit: return "u";
    case Type::Tag::Base: return "a@" + t.level();
    case Type::Tag::Arrow: return "(" + structural_key(t.left()) + ">" + structural_key(t.right()) + ")";
    case Type::Tag::Prod: return "(" + structural_key(t.left()) + "*" + structural_key(t.right()) + ")";
    case Type::Tag::Sum: return "(" + structural_key(t.left()) + "+" + structural_key(t.right()) + ")";
    case Type::Tag::Seal: return "[" + structural_key(t.body()) + "]@" + t.level();
    case Type::Tag::Monad: return "T@" + t.level() + structural_key(t.body());
    case Type::Tag::Hole: return "?" + std::to_string(t.hole_id());
  }
  return "";
}

std::string structural_key(const Term& t) {
  using Tag = Term::Tag;
  switch (t.tag()) {
    case Tag::Free: return "f:" + t.name();
    case Tag::Bound: return "#" + std::to_string(t.index());
    case Tag::Unit: return "()";
    case Tag::Lam: return "(\\" + structural_key(t.anno()) + "." + structural_key(t.sub1()) + ")";
    case Tag::App: return "(" + structural_key(t.sub1()) + " " + structural_key(t.sub2()) + ")";
    case Tag::Pair: return "<" + structural_key(t.sub1()) + "," + structural_key(t.sub2()) + ">";
    case Tag::Proj1: return "p1" + structural_key(t.sub1());
    case Tag::Proj2: return "p2" + structural_key(t.sub1());
    case Tag::Inj1: return "i1" + structural_key(t.sub1());
    case Tag::Inj2: return "i2" + structural_key(t.sub1());
    case Tag::Case:
      return "(case" + structural_key(t.sub1()) + "|" + structural_key(t.sub2()) + "|" +
             structural_key(t.sub3()) + ")";
    case Tag::Seal: return "seal@" + t.level() + structural_key(t.sub1());
    case Tag::Unseal: return "unseal@" + t.level() + structural_key(t.sub1());
    case Tag::Eta: return "eta@" + t.level() + structural_key(t.sub1());
    case Tag::Bind: return "(bind" + structural_key(t.sub1()) + "in" + structural_key(t.sub2()) + ")";
    case Tag::Protect: return "protect@" + t.level() + structural_key(t.sub1());
  }
  return "";
}

}  // namespace seal
