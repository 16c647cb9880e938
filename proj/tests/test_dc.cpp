#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seal/generate.hpp"
#include "support.hpp"

using namespace seal;
using testsupport::obs;
using testsupport::term;
using testsupport::type;

namespace {
const char* kExample22 =
    "\\x:[unit+unit]@L. seal@H (case unseal@L x of x1 => i1 (seal@H x1) | x2 => "
    "i2 (seal@H x2))";
}

TEST_CASE("sealing example typechecks exactly when the unseal is authorized") {
  LevelPoset p = testsupport::p0();
  Term e = term(kExample22);
  Checked ck = typecheck_dc(p, {}, {}, e);
  CHECK(ck.type == type("[unit+unit]@L -> [[unit]@H + [unit]@H]@H"));

  LevelPoset flat = testsupport::pflat();
  CHECK_THROWS_WITH_AS(typecheck_dc(flat, {}, {}, e),
                       doctest::Contains("UnauthorizedUnseal"), Error);
}

TEST_CASE("unseal above the observer level is rejected") {
  LevelPoset p = testsupport::p0();
  NamedCtx g{{"x", type("[unit]@H")}};
  CHECK_THROWS_WITH_AS(typecheck_dc(p, g, {}, term("unseal@H x")),
                       doctest::Contains("UnauthorizedUnseal"), Error);
  // fine once the observer holds H
  CHECK(typecheck_dc(p, g, obs({"H"}), term("unseal@H x")).type == Type::unit());
}

TEST_CASE("typing error taxonomy") {
  LevelPoset p = testsupport::p0();
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("x")),
                       doctest::Contains("UnboundVariable"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("() ()")),
                       doctest::Contains("NotAFunction"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("p1 ()")),
                       doctest::Contains("NotAPair"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("case () of a => () | b => ()")),
                       doctest::Contains("NotASum"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("unseal@L ()")),
                       doctest::Contains("NotASeal"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("(\\x:unit.x) (i1 ())")),
                       doctest::Contains("TypeMismatch"), Error);
  CHECK_THROWS_WITH_AS(typecheck_dc(p, {}, {}, term("eta@L ()")),
                       doctest::Contains("ForeignConstruct"), Error);
  // branches must agree
  CHECK_THROWS_AS(
      typecheck_dc(p, {{"z", Type::boolean()}}, {}, term("case z of a => () | b => i1 b")),
      Error);
}

TEST_CASE("single reduction steps") {
  CHECK(*reduce_once_dc(term("unseal@L (seal@L ())")) == term("()"));
  // full reduction reaches under binders
  CHECK(*reduce_once_dc(term("\\x:unit. unseal@L (seal@L x)")) == term("\\x:unit. x"));
  // mismatched levels do not step
  CHECK_FALSE(reduce_once_dc(term("unseal@H (seal@L ())")).has_value());
  CHECK_FALSE(reduce_once_dc(term("\\x:unit. x")).has_value());
}

TEST_CASE("normalization fixtures") {
  CHECK(normalize_dc(term("(\\x:unit.x) ()")) == term("()"));
  CHECK(normalize_dc(term("case i1 () of a => seal@L () | b => seal@L ()")) ==
        term("seal@L ()"));

  // two-step trace, checked step by step
  Term start = term("unseal@L (seal@L (case i2 () of a => () | b => ()))");
  Term one = *reduce_once_dc(start);
  CHECK(one == term("case i2 () of a => () | b => ()"));
  Term two = *reduce_once_dc(one);
  CHECK(two == term("()"));
  CHECK_FALSE(reduce_once_dc(two).has_value());
  CHECK(normalize_dc(start) == term("()"));
}

TEST_CASE("fuel exhaustion is reported") {
  CHECK_THROWS_WITH_AS(normalize_dc(term("(\\x:unit.x) ((\\x:unit.x) ())"), 1),
                       doctest::Contains("FuelExhausted"), Error);
}

TEST_CASE("projection and pairing reduce") {
  CHECK(normalize_dc(term("p1 <(), i1 ()>")) == term("()"));
  CHECK(normalize_dc(term("p2 <(), i1 ()>")) == term("i1 ()"));
}

TEST_CASE("subject reduction and confluence on random well-typed terms") {
  LevelPoset p = testsupport::p0();
  TermGen gen(p, Calculus::Dc, 11);
  for (int i = 0; i < 120; ++i) {
    Type t = gen.random_type(2);
    Obs pi = gen.random_obs();
    Term e = gen.term_at({}, pi, t, 12);
    CAPTURE(print_term(e));
    CHECK_NOTHROW(check_dc(p, {}, pi, e, t));
    Term cur = e;
    int steps = 0;
    while (auto next = reduce_once_dc(cur)) {
      cur = *next;
      CHECK_NOTHROW(check_dc(p, {}, pi, cur, t));
      if (++steps > 500) FAIL("did not normalize");
    }
    CHECK(cur == normalize(e, Calculus::Dc, kDefaultFuel, Strategy::RightInnermost));
  }
}

TEST_CASE("observer monotonicity on random terms") {
  LevelPoset p = testsupport::p0();
  TermGen gen(p, Calculus::Dc, 13);
  for (int i = 0; i < 80; ++i) {
    Type t = gen.random_type(2);
    Term e = gen.term_at({}, obs({"L"}), t, 12);
    CHECK_NOTHROW(check_dc(p, {}, obs({"L"}), e, t));
    CHECK_NOTHROW(check_dc(p, {}, obs({"L", "H"}), e, t));
    CHECK_NOTHROW(check_dc(p, {}, obs({"H"}), e, t));  // {L} is below {H}
  }
}

TEST_CASE("substitution property on random instances") {
  LevelPoset p = testsupport::p0();
  TermGen gen(p, Calculus::Dc, 17);
  for (int i = 0; i < 60; ++i) {
    Type t = gen.random_type(1);
    Type t2 = gen.random_type(1);
    Obs pi = gen.random_obs();
    Term s = gen.term_at({}, pi, t, 8);
    NamedCtx g{{"x", t}};
    Term e = gen.term_at(g, pi, t2, 10);
    CHECK_NOTHROW(check_dc(p, {}, pi, subst_free(e, "x", s), t2));
  }
}
