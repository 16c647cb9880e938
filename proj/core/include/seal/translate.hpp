#pragma once

#include <map>

#include "seal/typing.hpp"

namespace seal {

/// Injective map from data levels to key variable names; its domain is
/// the observer level being represented.
struct KeyMap {
  std::map<std::string, std::string> level_to_key;

  Obs domain() const;
  /// sigma-dagger: each key variable at its base type.
  NamedCtx as_ctx() const;
  KeyMap with(const std::string& level, const std::string& key) const;
};

/// Builds a key map with deterministic names k$l$0, k$l$1, ... in label
/// declaration order.
KeyMap default_keymap(const LevelPoset& p, const Obs& pi);

/// Coercion variables c$l2$l1 : a@l2 -> a@l1, one per comparable pair
/// (including reflexive ones).
struct CoercionContext {
  std::vector<std::pair<std::string, std::string>> pairs;  // (hi, lo)

  static std::string var_name(const std::string& hi, const std::string& lo);
  NamedCtx as_ctx() const;
};

CoercionContext build_kc(const LevelPoset& p);

/// Type translation: [t]@l becomes a@l -> t, homomorphic elsewhere.
Type translate_type(const Type& t);
NamedCtx translate_ctx(const NamedCtx& ctx);

/// Inverse of translate_type on its image; nullopt off the image.
std::optional<Type> untranslate_type(const Type& a);

/// Context for typing translation results: G-dagger, KC, sigma-dagger.
NamedCtx translation_target_ctx(const LevelPoset& p, const NamedCtx& g,
                                const KeyMap& sigma);

/// Forward term translation. Requires the input to typecheck at
/// dom(sigma); seals become key abstractions, unseals become
/// applications to coerced keys (lexicographically least eligible).
Term translate_dc_to_stlc(const LevelPoset& p, const NamedCtx& g,
                          const KeyMap& sigma, const Term& e);

/// Seal erasure used for termination arguments: [t]@l -> unit -> t,
/// seal -> constant abstraction, unseal -> application to ().
Type erase_seal_type(const Type& t);
Term erase_seals(const Term& e);

}  // namespace seal
