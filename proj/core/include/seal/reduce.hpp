#pragma once

#include <optional>

#include "seal/syntax.hpp"

namespace seal {

enum class Calculus { Dc, Stlc, Dpc };
enum class Strategy { LeftOutermost, RightInnermost };

inline constexpr long kDefaultFuel = 1'000'000;

/// One full-reduction step at the first redex in strategy order, or
/// nullopt if the term is normal. Redexes under binders are eligible.
std::optional<Term> reduce_once(const Term& t, Calculus calc,
                                Strategy strat = Strategy::LeftOutermost);

/// Iterates reduce_once to the normal form. Throws FuelExhausted.
Term normalize(const Term& t, Calculus calc, long fuel = kDefaultFuel,
               Strategy strat = Strategy::LeftOutermost);

inline std::optional<Term> reduce_once_dc(const Term& t) {
  return reduce_once(t, Calculus::Dc);
}
inline Term normalize_dc(const Term& t, long fuel = kDefaultFuel) {
  return normalize(t, Calculus::Dc, fuel);
}
inline Term normalize_stlc(const Term& t, long fuel = kDefaultFuel) {
  return normalize(t, Calculus::Stlc, fuel);
}
inline Term normalize_dpc(const Term& t, long fuel = kDefaultFuel) {
  return normalize(t, Calculus::Dpc, fuel);
}

}  // namespace seal
