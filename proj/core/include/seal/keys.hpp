#pragma once

#include "seal/typing.hpp"

namespace seal {

/// Type-directed, top-down rewrite replacing each outermost subterm of
/// base type a@l by the opaque placeholder variable for l. Placeholder
/// names use '$', which user identifiers cannot contain.
Term key_canonicalize(const LevelPoset& p, const NamedCtx& g, const Term& m);

/// The key-identification equivalence: true iff both terms canonicalize
/// to alpha-equal shapes. Both must have type `a` under g.
bool key_equiv(const LevelPoset& p, const NamedCtx& g, const Term& m1,
               const Term& m2, const Type& a);

std::string key_placeholder(const std::string& level);

}  // namespace seal
