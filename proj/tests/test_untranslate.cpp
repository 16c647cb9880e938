#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seal/equivalence.hpp"
#include "seal/generate.hpp"
#include "seal/keys.hpp"
#include "seal/untranslate.hpp"
#include "support.hpp"

using namespace seal;
using testsupport::obs;
using testsupport::term;
using testsupport::type;

TEST_CASE("inversion rebuilds a sealed unsealing") {
  LevelPoset p = parse_poset("levels: H1 H2 L\norder: L <= H1\norder: L <= H2");
  NamedCtx g{{"x", type("[unit+unit]@L")}};
  KeyMap sigma;
  sigma.level_to_key["H1"] = "k1";
  sigma.level_to_key["H2"] = "k2";
  Type t = type("[unit+unit]@H1");
  // any key of type a@L works in the argument position
  for (const char* key : {"c$H2$L k2", "c$H1$L kp", "c$H1$L k1"}) {
    Term n = parse_term(std::string("\\kp:a@H1. x (") + key + ")");
    Term e = invert_stlc_to_dc(p, g, sigma, n, t);
    CHECK(e == term("seal@H1 (unseal@L x)"));
  }
}

TEST_CASE("inversion of the sealed-function witness") {
  LevelPoset p(std::vector<std::string>{"L"}, {});
  Term m = term("\\k:a@L. \\f:a@L -> unit + unit. f k");
  Type t = type("[([unit+unit]@L -> unit+unit)]@L");
  Term e = invert_stlc_to_dc(p, {}, {}, m, t);
  CHECK(e == term("seal@L (\\f:[unit+unit]@L. unseal@L f)"));
  CHECK(check_dc(p, {}, {}, e, t).type == t);
}

TEST_CASE("junk terms outside the image are rejected") {
  LevelPoset p = testsupport::p0();
  Term junk = term("(\\x:a@L -> a@L. ()) (\\k:a@L. k)");
  CHECK_THROWS_WITH_AS(invert_stlc_to_dc(p, {}, {}, junk, Type::unit()),
                       doctest::Contains("NoApplicableRule"), Error);
  // but its normal form realizes fine
  CHECK(realize(p, {}, {}, junk, Type::unit()) == term("()"));
}

TEST_CASE("realize fixtures") {
  LevelPoset p = testsupport::p0();
  CHECK(realize(p, {}, {}, term("\\k:a@L. ()"), type("[unit]@L")) ==
        term("seal@L ()"));
  KeyMap sigma;
  sigma.level_to_key["L"] = "k";
  CHECK(realize(p, {}, sigma, term("\\kp:a@L. ()"), type("[unit]@L")) ==
        term("seal@L ()"));
}

TEST_CASE("realize rejects ill-typed input") {
  LevelPoset p = testsupport::p0();
  CHECK_THROWS_WITH_AS(realize(p, {}, {}, term("\\k:a@L. k"), type("[unit]@L")),
                       doctest::Contains("IllTyped"), Error);
}

TEST_CASE("round trip through translation, inversion, and key equivalence") {
  LevelPoset p = testsupport::p0();
  TermGen gen(p, Calculus::Dc, 31);
  int related_checked = 0;
  for (int i = 0; i < 60; ++i) {
    Type t = gen.random_type(2);
    Obs pi = gen.random_obs();
    KeyMap sigma = default_keymap(p, pi);
    Term e = gen.term_at({}, pi, t, 12);
    Term m = translate_dc_to_stlc(p, {}, sigma, e);
    Term back = realize(p, {}, sigma, m, t);
    CAPTURE(print_term(e));
    // forward images agree up to key identification
    Term m2 = translate_dc_to_stlc(p, {}, sigma, back);
    NamedCtx target = translation_target_ctx(p, {}, sigma);
    CHECK(key_equiv(p, target, m2, m, translate_type(t)));
    // and the two sources are logically related where decidable
    Verdict v = lr_dc(p, pi, e, back, t);
    if (!v.is_unknown()) {
      CHECK(v.is_related());
      ++related_checked;
    }
  }
  CHECK(related_checked > 20);
}

TEST_CASE("every small normal inhabitant realizes") {
  LevelPoset p = testsupport::p0();
  Type t = type("[unit+unit]@L");
  for (const KeyMap& sigma : {KeyMap{}, default_keymap(p, obs({"L"}))}) {
    NamedCtx ctx = translation_target_ctx(p, {}, sigma);
    auto forms = enumerate_normal_stlc(p, ctx, translate_type(t), 8);
    CHECK(!forms.empty());
    for (const auto& n : forms) {
      CAPTURE(print_term(n));
      Term e = realize(p, {}, sigma, n, t);
      CHECK(check_dc(p, {}, sigma.domain(), e, t).type == t);
    }
  }
}
