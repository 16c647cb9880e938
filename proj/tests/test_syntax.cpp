#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seal/generate.hpp"
#include "support.hpp"

using namespace seal;
using testsupport::term;
using testsupport::type;

TEST_CASE("substitution for free variables") {
  CHECK(subst_free(term("x"), "x", Term::unit()) == term("()"));
  // shadowing: the binder's x is untouched
  CHECK(subst_free(term("\\x:unit. x"), "x", Term::unit()) == term("\\x:unit. x"));
  // no capture: substituting y under a y-binder leaves the free y free
  Term got = subst_free(term("\\y:unit. x"), "x", term("y"));
  CHECK(got == Term::lam("y", Type::unit(), Term::free("y")));
  // and the printer renames the binder so the output reparses correctly
  std::string printed = print_term(got);
  CHECK(parse_term(printed) == got);
  CHECK(printed != "\\y:unit. y");
}

TEST_CASE("alpha-equivalence ignores binder hints") {
  CHECK(term("\\x:unit. x") == term("\\y:unit. y"));
  CHECK(term("case z of a => a | b => i1 b") == term("case z of u => u | v => i1 v"));
  CHECK(term("\\x:unit. x") != term("\\x:unit. ()"));
  CHECK(term("bind a = y in a") == term("bind b = y in b"));
}

TEST_CASE("types parse with the documented precedences") {
  CHECK(type("unit -> unit -> unit") ==
        Type::arrow(Type::unit(), Type::arrow(Type::unit(), Type::unit())));
  CHECK(type("unit * unit + unit") ==
        Type::sum(Type::prod(Type::unit(), Type::unit()), Type::unit()));
  CHECK(type("unit + unit -> unit") ==
        Type::arrow(Type::boolean(), Type::unit()));
  CHECK(type("[unit]@L -> unit") ==
        Type::arrow(Type::seal("L", Type::unit()), Type::unit()));
  CHECK(type("T@L unit -> unit") ==
        Type::arrow(Type::monad("L", Type::unit()), Type::unit()));
}

TEST_CASE("application groups left and prefixes reach right") {
  CHECK(term("f x y") == Term::app(Term::app(term("f"), term("x")), term("y")));
  CHECK(term("p1 x y") == Term::proj1(Term::app(term("x"), term("y"))));
  CHECK(term("f (p1 x)") == Term::app(term("f"), Term::proj1(term("x"))));
  CHECK(term("unseal@L x") == Term::unseal(term("x"), "L"));
  CHECK(term("seal@H (i1 ())") == Term::seal("H", Term::inj1(Term::unit())));
}

TEST_CASE("print/parse round trip on a corpus of fixtures") {
  for (const char* src : {
           "\\x:[unit+unit]@L. seal@H (case unseal@L x of x1 => i1 (seal@H x1) | x2 => i2 (seal@H x2))",
           "\\k:a@L. \\f:a@L -> unit + unit. f k",
           "<p1 z, p2 z>",
           "bind x = eta@L () in x",
           "protect@H (eta@H (i1 ()))",
           "case f x of a => <a, ()> | b => <b, ()>",
           "(\\x:unit.x) ()",
           "unseal@L (seal@L ())",
       }) {
    Term t = parse_term(src);
    CHECK(parse_term(print_term(t)) == t);
  }
}

TEST_CASE("print/parse round trip on random well-typed terms") {
  LevelPoset p = testsupport::p0();
  TermGen gen(p, Calculus::Dc, 7);
  for (int i = 0; i < 200; ++i) {
    Type t = gen.random_type(2);
    Term e = gen.term_at({}, gen.random_obs(), t, 12);
    CAPTURE(print_term(e));
    CHECK(parse_term(print_term(e)) == e);
  }
}

TEST_CASE("term_size counts AST nodes") {
  CHECK(term_size(term("()")) == 1);
  CHECK(term_size(term("\\x:unit. x")) == 2);
  CHECK(term_size(term("f x")) == 3);
  CHECK(term_size(term("case x of a => i1 () | b => i2 ()")) == 6);
  // the canonical distinguisher for sealed booleans costs 8 nodes
  CHECK(term_size(term(
            "\\x:[unit+unit]@H. case unseal@H x of a => i1 () | b => i2 ()")) == 8);
}

TEST_CASE("abstract and open are mutually inverse") {
  Term body = term("f y");
  Term abstracted = abstract_free(body, "y");
  CHECK(abstracted == Term::app(Term::free("f"), Term::bound(0)));
  CHECK(open_bound(abstracted, Term::free("y")) == body);
}
