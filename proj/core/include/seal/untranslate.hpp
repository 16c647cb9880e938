#pragma once

#include "seal/limits.hpp"
#include "seal/translate.hpp"

namespace seal {

/// Type-directed inversion of a simply typed term back into the sealing
/// calculus. `n` must typecheck at translate_type(t) under
/// translation_target_ctx(p, g, sigma) with a derivation whose
/// subderivations all satisfy the subformula property.
Term invert_stlc_to_dc(const LevelPoset& p, const NamedCtx& g, const KeyMap& sigma,
                       const Term& n, const Type& t);

/// Fullness pipeline: normalize, re-typecheck, verify the subformula
/// property, invert. The result types at (g, dom(sigma), t).
Term realize(const LevelPoset& p, const NamedCtx& g, const KeyMap& sigma,
             const Term& m, const Type& t, const Limits& limits = {});

}  // namespace seal
