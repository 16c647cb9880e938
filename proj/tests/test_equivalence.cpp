#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seal/equivalence.hpp"
#include "seal/generate.hpp"
#include "support.hpp"

using namespace seal;
using testsupport::obs;
using testsupport::term;
using testsupport::type;

TEST_CASE("splittable fixtures") {
  LevelPoset p = testsupport::p0();
  CHECK(splittable(p, Type::boolean(), {}));
  CHECK(splittable(p, type("[unit+unit]@H"), obs({"L"})));  // single class
  CHECK_FALSE(splittable(p, type("unit+unit -> unit+unit"), obs({"L"})));
  CHECK(splittable(p, type("[unit+unit]@L"), obs({"L"})));
  CHECK(splittable(p, type("unit+unit -> unit"), obs({"L"})));  // singleton codomain
}

TEST_CASE("representative sets") {
  LevelPoset p = testsupport::p0();
  RepSet booleans = reps_dc(p, Type::boolean(), {});
  CHECK(booleans.exact);
  REQUIRE(booleans.reps.size() == 2);
  CHECK(booleans.reps[0] == term("i1 ()"));
  CHECK(booleans.reps[1] == term("i2 ()"));

  RepSet opaque = reps_dc(p, type("[unit+unit]@H"), obs({"L"}));
  CHECK(opaque.exact);
  REQUIRE(opaque.reps.size() == 1);
  CHECK(opaque.reps[0] == term("seal@H (i1 ())"));

  RepSet funs = reps_dc(p, type("unit+unit -> unit+unit"), obs({"L"}));
  CHECK(funs.exact);
  CHECK(funs.reps.size() == 4);
  for (const auto& f : funs.reps)
    CHECK(check_dc(p, {}, obs({"L"}), f, type("unit+unit -> unit+unit")).type ==
          type("unit+unit -> unit+unit"));
}

TEST_CASE("one opaque class, verified by brute force") {
  LevelPoset p = testsupport::p0();
  Type t = type("[unit+unit]@H");
  auto inhabitants = enumerate_normal_dc(p, {}, obs({"L"}), t, 6);
  CHECK(inhabitants.size() >= 2);
  for (const auto& a : inhabitants)
    for (const auto& b : inhabitants)
      CHECK(lr_dc(p, obs({"L"}), a, b, t).is_related());
}

TEST_CASE("representatives are pairwise unrelated when exact") {
  LevelPoset p = testsupport::p0();
  for (const auto& t : {Type::boolean(), type("[unit+unit]@L"),
                        type("unit+unit -> unit+unit")}) {
    RepSet reps = reps_dc(p, t, obs({"L"}));
    REQUIRE(reps.exact);
    for (size_t i = 0; i < reps.reps.size(); ++i)
      for (size_t j = 0; j < reps.reps.size(); ++j) {
        Verdict v = lr_dc(p, obs({"L"}), reps.reps[i], reps.reps[j], t);
        CHECK(v.is_related() == (i == j));
      }
  }
}

TEST_CASE("sealed booleans: related below, distinguished at the level") {
  LevelPoset p = testsupport::p0();
  Term e1 = term("seal@H (i1 ())"), e2 = term("seal@H (i2 ())");
  Type t = type("[unit+unit]@H");
  CHECK(lr_dc(p, obs({"L"}), e1, e2, t).is_related());
  CHECK(lr_dc(p, obs({"H"}), e1, e2, t).is_not_related());
  CHECK(lr_dc(p, obs({}), e1, e2, t).is_related());
}

TEST_CASE("functions out of opaque inputs are constant") {
  LevelPoset p = testsupport::p0();
  Type t = type("[unit+unit]@H -> [unit+unit]@L");
  Term f = term("\\x:[unit+unit]@H. seal@L (i1 ())");
  CHECK(lr_dc(p, obs({"L"}), f, f, t).is_related());
  // a function that peeks would not even typecheck at {L}
  CHECK_THROWS_AS(
      lr_dc(p, obs({"L"}),
            term("\\x:[unit+unit]@H. seal@L (unseal@H x)"),
            f, t),
      Error);
  // enumerate every inhabitant and check self-relatedness plus constancy
  auto fs = enumerate_normal_dc(p, {}, obs({"L"}), t, 12);
  CHECK(!fs.empty());
  Term in1 = term("seal@H (i1 ())"), in2 = term("seal@H (i2 ())");
  for (const auto& g : fs) {
    CHECK(lr_dc(p, obs({"L"}), g, g, t).is_related());
    Term o1 = normalize_dc(Term::app(g, in1));
    Term o2 = normalize_dc(Term::app(g, in2));
    CHECK(lr_dc(p, obs({"L"}), o1, o2, type("[unit+unit]@L")).is_related());
  }
}

TEST_CASE("open terms and ill-typed inputs are rejected") {
  LevelPoset p = testsupport::p0();
  CHECK_THROWS_WITH_AS(lr_dc(p, {}, term("x"), term("x"), Type::unit()),
                       doctest::Contains("OpenTerm"), Error);
  CHECK_THROWS_WITH_AS(lr_dc(p, {}, term("()"), term("i1 ()"), Type::unit()),
                       doctest::Contains("IllTyped"), Error);
}

namespace {

NamedCtx stlc_ctx(const LevelPoset& p, std::initializer_list<std::pair<const char*, const char*>> keys) {
  NamedCtx g = build_kc(p).as_ctx();
  for (const auto& [name, ty] : keys) g.emplace(name, testsupport::type(ty));
  return g;
}

}  // namespace

TEST_CASE("simply typed relation: no key, vacuously related") {
  LevelPoset p = testsupport::p0();
  NamedCtx g = stlc_ctx(p, {{"k", "a@L"}});
  Term m1 = term("\\kp:a@H. i1 ()"), m2 = term("\\kp:a@H. i2 ()");
  Type a = type("a@H -> unit+unit");
  CHECK(lr_stlc(p, g, m1, m2, a).is_related());
}

TEST_CASE("simply typed relation: a key distinguishes") {
  LevelPoset p = testsupport::p0();
  NamedCtx g = stlc_ctx(p, {{"k", "a@H"}});
  Term m1 = term("\\kp:a@H. i1 ()"), m2 = term("\\kp:a@H. i2 ()");
  Type a = type("a@H -> unit+unit");
  Verdict v = lr_stlc(p, g, m1, m2, a);
  CHECK(v.is_not_related());
  CHECK(lr_stlc(p, g, term("()"), term("()"), Type::unit()).is_related());
  // any two well-typed key terms are related
  CHECK(lr_stlc(p, g, term("c$H$L k"), term("c$L$L (c$H$L k)"), type("a@L"))
            .is_related());
}

TEST_CASE("simply typed relation rejects other context shapes") {
  LevelPoset p = testsupport::p0();
  CHECK_THROWS_WITH_AS(
      lr_stlc(p, {{"x", Type::boolean()}}, term("x"), term("x"), Type::boolean()),
      doctest::Contains("UnsupportedContext"), Error);
}

TEST_CASE("noninterference check on fixtures") {
  LevelPoset p = testsupport::p0();
  NamedCtx g{{"x", type("[unit+unit]@H")}};
  // sealed result above the observer: related however x varies
  Term e = term("seal@H (case unseal@H x of a => i2 () | b => i1 ())");
  CHECK(noninterference_check(p, g, obs({"L"}), e).is_related());
  // identity on a visible boolean
  CHECK(noninterference_check(p, {{"x", Type::boolean()}}, {}, term("x"))
            .is_related());
}

TEST_CASE("contextual equivalence agrees with the logical relation") {
  LevelPoset p = testsupport::p0();
  Term e1 = term("seal@H (i1 ())"), e2 = term("seal@H (i2 ())");
  Type t = type("[unit+unit]@H");
  Verdict high = ctx_equiv_test(p, obs({"H"}), e1, e2, t, 8);
  CHECK(high.is_not_related());
  CHECK(term_size(parse_term(high.detail)) <= 8);
  CHECK(ctx_equiv_test(p, obs({"L"}), e1, e2, t, 8).is_related());
  CHECK(ctx_equiv_test(p, obs({"L"}), term("()"), term("()"), Type::unit(), 6)
            .is_related());
  // strict mode reports the bound instead
  CHECK(ctx_equiv_test(p, obs({"L"}), e1, e2, t, 6, true).is_unknown());
}

TEST_CASE("lower observers distinguish no more") {
  LevelPoset p = testsupport::p0();
  std::vector<std::pair<Term, Term>> pairs = {
      {term("seal@H (i1 ())"), term("seal@H (i2 ())")},
      {term("seal@L (i1 ())"), term("seal@L (i2 ())")},
      {term("i1 ()"), term("i1 ()")},
  };
  Type seal_h = type("[unit+unit]@H");
  std::vector<Type> types = {seal_h, type("[unit+unit]@L"), Type::boolean()};
  std::vector<Obs> chain = {obs({}), obs({"L"}), obs({"L", "H"})};
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t lo = 0; lo < chain.size(); ++lo)
      for (size_t hi = lo; hi < chain.size(); ++hi) {
        Verdict vh = lr_dc(p, chain[hi], pairs[i].first, pairs[i].second, types[i]);
        Verdict vl = lr_dc(p, chain[lo], pairs[i].first, pairs[i].second, types[i]);
        if (vh.is_related()) CHECK(vl.is_related());
      }
}

TEST_CASE("verdicts are equivalences on exact fixtures") {
  LevelPoset p = testsupport::p0();
  Type t = type("[unit+unit]@L");
  auto inhabitants = enumerate_normal_dc(p, {}, obs({"L"}), t, 5);
  REQUIRE(inhabitants.size() >= 2);
  for (const auto& a : inhabitants) CHECK(lr_dc(p, obs({"L"}), a, a, t).is_related());
  for (const auto& a : inhabitants)
    for (const auto& b : inhabitants) {
      CHECK(lr_dc(p, obs({"L"}), a, b, t).is_related() ==
            lr_dc(p, obs({"L"}), b, a, t).is_related());
      for (const auto& c : inhabitants)
        if (lr_dc(p, obs({"L"}), a, b, t).is_related() &&
            lr_dc(p, obs({"L"}), b, c, t).is_related())
          CHECK(lr_dc(p, obs({"L"}), a, c, t).is_related());
    }
}
