#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "seal/errors.hpp"

namespace seal {

/// Types of all three calculi share one carrier; each checker rejects
/// the constructors that do not belong to its calculus.
class Type {
 public:
  enum class Tag { Unit, Base, Arrow, Prod, Sum, Seal, Monad, Hole };

  Type() = default;

  static Type unit();
  static Type base(std::string level);
  static Type arrow(Type dom, Type cod);
  static Type prod(Type a, Type b);
  static Type sum(Type a, Type b);
  static Type seal(std::string level, Type body);
  static Type monad(std::string level, Type body);
  static Type boolean();  // unit + unit
  static Type hole();     // inference placeholder, fresh identity

  bool ok() const { return n_ != nullptr; }
  Tag tag() const;
  const std::string& level() const;  // Base/Seal/Monad
  const Type& left() const;          // Arrow dom, Prod/Sum left
  const Type& right() const;         // Arrow cod, Prod/Sum right
  const Type& body() const;          // Seal/Monad payload
  int hole_id() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  /// True if a Hole occurs anywhere.
  bool has_holes() const;
  /// True if `sub` occurs as a subexpression (reflexive).
  bool has_subexpr(const Type& sub) const;

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Type::Node {
  Tag tag;
  std::string level;
  Type a, b;
  int hole = 0;
};

/// Terms of all three calculi, with de Bruijn indices for bound
/// variables so that alpha-equivalent terms compare equal. Binders keep
/// a printing hint that equality ignores.
class Term {
 public:
  enum class Tag {
    Free, Bound, Unit, Lam, App, Pair, Proj1, Proj2, Inj1, Inj2, Case,
    Seal, Unseal, Eta, Bind, Protect
  };

  Term() = default;

  static Term free(std::string name);
  static Term bound(int index, std::string hint = "");
  static Term unit();
  static Term lam(std::string hint, Type anno, Term body);
  static Term app(Term f, Term a);
  static Term pair(Term a, Term b);
  static Term proj1(Term a);
  static Term proj2(Term a);
  static Term inj1(Term a);
  static Term inj2(Term a);
  static Term case_of(Term scrut, std::string hint1, Term branch1,
                      std::string hint2, Term branch2);
  static Term seal(std::string level, Term a);
  static Term unseal(Term a, std::string level);
  static Term eta(std::string level, Term a);
  static Term bind(std::string hint, Term rhs, Term body);
  static Term protect(std::string level, Term a);

  bool ok() const { return n_ != nullptr; }
  Tag tag() const;
  const std::string& name() const;   // Free name; Lam/Bind hint; Case hint1
  const std::string& name2() const;  // Case hint2
  int index() const;                 // Bound
  const std::string& level() const;  // Seal/Unseal/Eta/Protect
  const Type& anno() const;          // Lam
  const Term& sub1() const;  // Lam body, App fun, Pair fst, unary child, Case scrut, Bind rhs
  const Term& sub2() const;  // App arg, Pair snd, Case branch1, Bind body
  const Term& sub3() const;  // Case branch2

  /// Alpha-equivalence: structural equality ignoring binder hints.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Term::Node {
  Tag tag;
  std::string name, name2, level;
  int index = 0;
  Type anno;
  Term a, b, c;
};

/// Number of binders a given child sits under (0 or 1 here).
int binder_count(Term::Tag parent, int child_slot);

/// Shift bound indices >= cutoff by d.
Term shift(const Term& t, int d, int cutoff = 0);

/// Beta-style instantiation: replace Bound(j) at the outermost binder
/// level by `s` (adjusting indices), removing the binder.
Term open_bound(const Term& body, const Term& s);

/// Replace free variable `name` by `s` (capture-avoiding; `s` is
/// shifted as binders are crossed).
Term subst_free(const Term& t, const std::string& name, const Term& s);

/// Wrap-in-a-binder helper: shifts indices up and turns Free(name)
/// into the new Bound(0).
Term abstract_free(const Term& t, const std::string& name);

std::set<std::string> free_names(const Term& t);
bool contains_free(const Term& t, const std::string& name);
bool is_closed(const Term& t);

/// AST node count.
int term_size(const Term& t);

/// All levels mentioned by a type (Base/Seal/Monad).
std::set<std::string> type_levels(const Type& t);

/// Deterministic structural key (hints ignored); usable for set keys.
std::string structural_key(const Term& t);
std::string structural_key(const Type& t);

using NamedCtx = std::map<std::string, Type>;

}  // namespace seal
