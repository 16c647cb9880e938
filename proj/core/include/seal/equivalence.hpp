#pragma once

#include "seal/enumerate.hpp"
#include "seal/limits.hpp"
#include "seal/translate.hpp"

namespace seal {

struct Verdict {
  enum class V { Related, NotRelated, Unknown };
  V v = V::Unknown;
  std::string detail;  // witness for NotRelated, reason for Unknown

  static Verdict related() { return {V::Related, ""}; }
  static Verdict not_related(std::string witness) {
    return {V::NotRelated, std::move(witness)};
  }
  static Verdict unknown(std::string reason) {
    return {V::Unknown, std::move(reason)};
  }
  bool is_related() const { return v == V::Related; }
  bool is_not_related() const { return v == V::NotRelated; }
  bool is_unknown() const { return v == V::Unknown; }
  const char* name() const {
    switch (v) {
      case V::Related: return "Related";
      case V::NotRelated: return "NotRelated";
      case V::Unknown: return "Unknown";
    }
    return "?";
  }
};

/// Closed normal representatives, one per equivalence class when
/// `exact` holds; pairwise distinguishable in that case.
struct RepSet {
  Type type;
  Obs obs;
  std::vector<Term> reps;
  bool exact = false;
};

/// Whether the class structure of t at pi is finitely presentable by
/// exact representatives that a term can case-analyze.
bool splittable(const LevelPoset& p, const Type& t, const Obs& pi);

RepSet reps_dc(const LevelPoset& p, const Type& t, const Obs& pi,
               const Limits& limits = {});

/// Observer-indexed logical relation on closed well-typed terms.
Verdict lr_dc(const LevelPoset& p, const Obs& pi, const Term& e1, const Term& e2,
              const Type& t, const Limits& limits = {});

/// The simply typed relation under contexts of the coercion-plus-keys
/// shape; any two keys of one level are identified.
Verdict lr_stlc(const LevelPoset& p, const NamedCtx& g, const Term& m1,
                const Term& m2, const Type& a, const Limits& limits = {});

/// Checks that every pair of related closing substitutions yields
/// related results.
Verdict noninterference_check(const LevelPoset& p, const NamedCtx& g, const Obs& pi,
                              const Term& e, const Limits& limits = {});

/// Bounded search for a boolean-valued distinguishing context.
Verdict ctx_equiv_test(const LevelPoset& p, const Obs& pi, const Term& e1,
                       const Term& e2, const Type& t, int size_bound,
                       bool strict = false, long fuel = kDefaultFuel);

}  // namespace seal
