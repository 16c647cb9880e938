#pragma once

#include <string>

#include "seal/parse.hpp"
#include "seal/print.hpp"

namespace testsupport {

inline seal::LevelPoset p0() {
  return seal::parse_poset("levels: L H\norder: L <= H\n");
}

inline seal::LevelPoset pflat() { return seal::parse_poset("levels: L H\n"); }

inline seal::Term term(const std::string& s) { return seal::parse_term(s); }
inline seal::Type type(const std::string& s) { return seal::parse_type(s); }

inline seal::Obs obs(std::initializer_list<const char*> ls) {
  seal::Obs out;
  for (const char* l : ls) out.insert(l);
  return out;
}

}  // namespace testsupport
