#pragma once

#include <random>

#include "seal/enumerate.hpp"

namespace seal {

/// Random well-typed term construction, used by the fuzz suites. All
/// output typechecks at the requested type and observer level by
/// construction; injection redexes never use the dead branch binder, so
/// the checker accepts them as well.
class TermGen {
 public:
  TermGen(const LevelPoset& p, Calculus calc, uint64_t seed)
      : poset_(p), calc_(calc), rng_(seed) {}

  Type random_type(int depth);
  Obs random_obs();

  /// A term of the given type under ctx at pi, of AST size <= budget.
  Term term_at(const NamedCtx& ctx, const Obs& pi, const Type& target, int budget);

  std::mt19937_64& rng() { return rng_; }

 private:
  Term gen(const Obs& pi, const Type& target, int budget);
  Term spine_or_intro(const Obs& pi, const Type& target, int budget);
  std::vector<std::pair<Term, Type>> vars() const;
  int pick(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }
  bool coin() { return pick(2) == 0; }

  const LevelPoset& poset_;
  Calculus calc_;
  std::mt19937_64 rng_;
  const NamedCtx* named_ = nullptr;
  std::vector<Type> stack_;
};

}  // namespace seal
