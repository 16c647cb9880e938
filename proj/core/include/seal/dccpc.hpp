#pragma once

#include "seal/typing.hpp"

namespace seal {

/// Type maps between the monadic calculus and the sealing calculus:
/// T@l t <-> [t]@l, homomorphic elsewhere.
Type dpc_type_to_dc(const Type& t);
Type dc_type_to_dpc(const Type& t);
NamedCtx dpc_ctx_to_dc(const NamedCtx& ctx);
NamedCtx dc_ctx_to_dpc(const NamedCtx& ctx);

/// Closed sealing-calculus term of type [t°]@l -> t°, well typed at
/// every observer level. Requires protected_at(p, l, t).
Term unprotect(const LevelPoset& p, const std::string& l, const Type& t);

/// Derivation-directed translation into the sealing calculus. `d` must
/// come from typecheck_dpc/check_dpc on the same term.
Term dpc_to_dc(const LevelPoset& p, const Derivation& d);

/// Syntax-directed translation out of the sealing calculus:
/// seal -> eta, unseal -> bind.
Term dc_to_dpc(const Term& e);

}  // namespace seal
