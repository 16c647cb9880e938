#pragma once

#include <optional>
#include <vector>

#include "seal/levels.hpp"
#include "seal/reduce.hpp"
#include "seal/syntax.hpp"

namespace seal {

/// One node per typing-rule application. `ctx_types` snapshots the
/// types in scope (named context then binder stack) at the node.
struct Derivation {
  std::string rule;
  Term term;
  Type type;
  std::string level;
  std::vector<Type> ctx_types;
  std::vector<Derivation> kids;
};

struct Checked {
  Type type;
  Derivation deriv;
};

/// Structural merge where inference holes yield to concrete types.
std::optional<Type> unify(const Type& a, const Type& b);

/// Replaces any remaining inference holes by unit. Sound only for
/// genuinely unconstrained holes, e.g. the dead component of an
/// injection that nothing ever eliminates.
Type ground_holes(const Type& t);

/// True when `t` uses only the type constructors of `calc` and all
/// mentioned levels belong to the poset.
bool type_in_calculus(const LevelPoset& p, const Type& t, Calculus calc);

// --- Sealing calculus ---
Checked typecheck_dc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                     const Term& e);
Checked check_dc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                 const Term& e, const Type& target);

// --- Simply typed calculus with per-level base types ---
Checked typecheck_stlc(const LevelPoset& p, const NamedCtx& ctx, const Term& m);
Checked check_stlc(const LevelPoset& p, const NamedCtx& ctx, const Term& m,
                   const Type& target);

// --- Monadic calculus with protection contexts ---
Checked typecheck_dpc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                      const Term& e);
Checked check_dpc(const LevelPoset& p, const NamedCtx& ctx, const Obs& pi,
                  const Term& e, const Type& target);

/// t is protected at l: values of t reveal nothing to observers
/// lacking l.
bool protected_at(const LevelPoset& p, const std::string& l, const Type& t);

/// Every type in the derivation is a subexpression of its root type or
/// of a type in scope at the root; checked on all subderivations.
bool subformula_ok(const Derivation& d);

}  // namespace seal
