#pragma once

#include <string>

#include "seal/syntax.hpp"

namespace seal {

/// Parses the shared concrete grammar. Throws Error{SyntaxError}.
Type parse_type(const std::string& text);
Term parse_term(const std::string& text);

/// Context entries "x:type,y:type" (whitespace tolerated).
NamedCtx parse_ctx(const std::string& text);

}  // namespace seal
