#pragma once

#include <string>

#include "seal/syntax.hpp"

namespace seal {

/// Renders a type in the shared concrete grammar.
std::string print_type(const Type& t);

/// Renders a term with source names recovered from binder hints; hints
/// that would collide with names in scope get a numeric suffix.
std::string print_term(const Term& t);

}  // namespace seal
