#pragma once

#include <optional>
#include <vector>

#include "seal/typing.hpp"

namespace seal {

/// All normal inhabitants of a type up to the given AST size, under a
/// named context (plus the observer level for the sealing calculus).
/// Case scrutinees are neutral and cases never sit in elimination
/// position, which covers every behavior class.
std::vector<Term> enumerate_normal_dc(const LevelPoset& p, const NamedCtx& ctx,
                                      const Obs& pi, const Type& t, int max_size);
std::vector<Term> enumerate_normal_stlc(const LevelPoset& p, const NamedCtx& ctx,
                                        const Type& a, int max_size);

/// Deterministic least inhabitant: (), i1, left-leaning pairs, constant
/// functions, canonically sealed bodies. Every sealing-calculus type is
/// inhabited at every observer level.
Term canonical_dc(const LevelPoset& p, const Obs& pi, const Type& t);

/// As above on the simply typed side; base types may be uninhabited, so
/// this can fail.
std::optional<Term> canonical_stlc(const LevelPoset& p, const NamedCtx& ctx,
                                   const Type& a);

/// Monadic-calculus analogue of canonical_dc.
Term canonical_dpc(const LevelPoset& p, const Obs& pi, const Type& t);

}  // namespace seal
