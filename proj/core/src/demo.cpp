#include "seal/demo.hpp"

#include <sstream>

#include "seal/equivalence.hpp"
#include "seal/parse.hpp"
#include "seal/print.hpp"
#include "seal/untranslate.hpp"

namespace seal {

std::string tz_counterexample_transcript() {
  LevelPoset p({"L"}, {});
  Type boolean = Type::boolean();
  Type fun_ty = Type::arrow(Type::seal("L", boolean), boolean);   // [bool]@L -> bool
  Type arg_ty = Type::seal("L", fun_ty);                          // [...]@L
  Type res_ty = Type::seal("L", boolean);
  Type whole = Type::arrow(arg_ty, res_ty);

  auto image = [&](Term c) {
    // \f. seal@L ((unseal@L f) (seal@L c))
    Term body = Term::seal(
        "L", Term::app(Term::unseal(Term::bound(0, "f"), "L"), Term::seal("L", c)));
    return Term::lam("f", arg_ty, body);
  };
  Term e1 = image(Term::inj1(Term::unit()));
  Term e2 = image(Term::inj2(Term::unit()));

  Term witness = parse_term("\\k:a@L. \\f:a@L -> unit + unit. f k");
  Term realized = realize(p, {}, KeyMap{}, witness, arg_ty);

  Verdict at_empty = lr_dc(p, {}, e1, e2, whole);
  Verdict at_l = lr_dc(p, {"L"}, e1, e2, whole);

  std::ostringstream out;
  out << "=== sealed-function counterexample (single level L) ===\n";
  out << "\n";
  out << "sealing-calculus images of the two programs:\n";
  out << "  e1 = " << print_term(e1) << "\n";
  out << "  e2 = " << print_term(e2) << "\n";
  out << "  type: " << print_type(whole) << "\n";
  out << "\n";
  out << "simply typed witness (applies its argument to a key):\n";
  out << "  M = " << print_term(witness) << "\n";
  out << "  realize(M) = " << print_term(realized) << "\n";
  out << "  realize(M) typechecks at " << print_type(arg_ty)
      << " under observer {L}\n";
  out << "\n";
  out << "verdicts for e1 vs e2 at " << print_type(whole) << ":\n";
  out << "  observer {}  : " << at_empty.name() << "\n";
  out << "  observer {L} : " << at_l.name() << "\n";
  if (at_l.is_not_related()) out << "  because: " << at_l.detail << "\n";
  out << "\n";
  out << "note: the monadic-calculus side of the published counterexample is\n";
  out << "not re-checked here; the calculus without protection contexts is\n";
  out << "out of scope.\n";
  return out.str();
}

}  // namespace seal
