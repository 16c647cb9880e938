// sealtc: command-line driver for the sealing-calculus toolchain.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seal/dccpc.hpp"
#include "seal/demo.hpp"
#include "seal/equivalence.hpp"
#include "seal/keys.hpp"
#include "seal/parse.hpp"
#include "seal/print.hpp"
#include "seal/untranslate.hpp"

namespace {

using namespace seal;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;      // type errors, NotRelated
constexpr int kExitUsage = 2;     // parse/config errors
constexpr int kExitUnknown = 3;   // Unknown verdicts, fuel exhaustion

struct Options {
  std::string poset_file;
  std::string obs;
  std::string ctx;
  std::string type;
  std::string calc = "dc";
  std::string level;
  long fuel = kDefaultFuel;
  int size_bound = 10;
  bool machine = false;
  bool strict = false;
  std::vector<std::string> inputs;
};

std::string slurp(const std::string& path_or_term) {
  std::ifstream in(path_or_term);
  if (!in.good()) return path_or_term;  // inline term text
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LevelPoset load_poset(const Options& opt) {
  if (opt.poset_file.empty()) fail(Err::SyntaxError, "--poset is required");
  std::ifstream in(opt.poset_file);
  if (!in.good()) fail(Err::SyntaxError, "cannot read poset file " + opt.poset_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

void emit(const Options& opt, const std::vector<std::pair<std::string, std::string>>& fields) {
  if (opt.machine) {
    bool first = true;
    for (const auto& [k, v] : fields) {
      if (!first) std::cout << ";";
      std::cout << k << "=" << v;
      first = false;
    }
    std::cout << "\n";
    return;
  }
  for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
}

int verdict_exit(const Verdict& v) {
  switch (v.v) {
    case Verdict::V::Related: return kExitOk;
    case Verdict::V::NotRelated: return kExitFail;
    case Verdict::V::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

std::vector<std::pair<std::string, std::string>> verdict_fields(const Verdict& v) {
  std::vector<std::pair<std::string, std::string>> fields{{"verdict", v.name()}};
  if (v.is_not_related()) fields.emplace_back("witness", v.detail);
  if (v.is_unknown()) fields.emplace_back("reason", v.detail);
  return fields;
}

int run_typecheck(const Options& opt) {
  LevelPoset p = load_poset(opt);
  NamedCtx ctx = parse_ctx(opt.ctx);
  Obs pi = parse_obs(p, opt.obs);
  Term e = parse_term(slurp(opt.inputs.at(0)));
  Checked ck = opt.calc == "stlc"  ? typecheck_stlc(p, ctx, e)
               : opt.calc == "dccpc" ? typecheck_dpc(p, ctx, pi, e)
                                     : typecheck_dc(p, ctx, pi, e);
  emit(opt, {{"type", print_type(ck.type)}});
  return kExitOk;
}

int run_normalize(const Options& opt) {
  Calculus c = opt.calc == "stlc"  ? Calculus::Stlc
               : opt.calc == "dccpc" ? Calculus::Dpc
                                     : Calculus::Dc;
  Term e = parse_term(slurp(opt.inputs.at(0)));
  emit(opt, {{"term", print_term(normalize(e, c, opt.fuel))}});
  return kExitOk;
}

int run_translate(const Options& opt) {
  LevelPoset p = load_poset(opt);
  NamedCtx ctx = parse_ctx(opt.ctx);
  Obs pi = parse_obs(p, opt.obs);
  KeyMap sigma = default_keymap(p, pi);
  Term e = parse_term(slurp(opt.inputs.at(0)));
  Term m = translate_dc_to_stlc(p, ctx, sigma, e);
  NamedCtx target = translation_target_ctx(p, ctx, sigma);
  std::string listing;
  for (const auto& [name, ty] : target) {
    if (!listing.empty()) listing += ", ";
    listing += name + ":" + print_type(ty);
  }
  emit(opt, {{"term", print_term(m)}, {"context", listing}});
  return kExitOk;
}

int run_untranslate(const Options& opt) {
  LevelPoset p = load_poset(opt);
  NamedCtx ctx = parse_ctx(opt.ctx);
  Obs pi = parse_obs(p, opt.obs);
  KeyMap sigma = default_keymap(p, pi);
  Type t = parse_type(opt.type);
  Term m = parse_term(slurp(opt.inputs.at(0)));
  Limits limits;
  limits.fuel = opt.fuel;
  Term e = realize(p, ctx, sigma, m, t, limits);
  emit(opt, {{"term", print_term(e)}, {"type", print_type(t)}});
  return kExitOk;
}

int run_to_dccpc(const Options& opt) {
  Term e = parse_term(slurp(opt.inputs.at(0)));
  emit(opt, {{"term", print_term(dc_to_dpc(e))}});
  return kExitOk;
}

int run_from_dccpc(const Options& opt) {
  LevelPoset p = load_poset(opt);
  NamedCtx ctx = parse_ctx(opt.ctx);
  Obs pi = parse_obs(p, opt.obs);
  Term e = parse_term(slurp(opt.inputs.at(0)));
  Checked ck = typecheck_dpc(p, ctx, pi, e);
  Term out = dpc_to_dc(p, ck.deriv);
  emit(opt, {{"term", print_term(out)},
             {"type", print_type(dpc_type_to_dc(ck.type))}});
  return kExitOk;
}

int run_unprotect(const Options& opt) {
  LevelPoset p = load_poset(opt);
  if (opt.level.empty()) fail(Err::SyntaxError, "--level is required");
  Type t = parse_type(opt.type);
  Term u = unprotect(p, opt.level, t);
  Type u_ty = Type::arrow(Type::seal(opt.level, dpc_type_to_dc(t)), dpc_type_to_dc(t));
  emit(opt, {{"term", print_term(u)}, {"type", print_type(u_ty)}});
  return kExitOk;
}

int run_equiv(const Options& opt) {
  LevelPoset p = load_poset(opt);
  Obs pi = parse_obs(p, opt.obs);
  Type t = parse_type(opt.type);
  Term e1 = parse_term(slurp(opt.inputs.at(0)));
  Term e2 = parse_term(slurp(opt.inputs.at(1)));
  Limits limits;
  limits.fuel = opt.fuel;
  Verdict v = lr_dc(p, pi, e1, e2, t, limits);
  emit(opt, verdict_fields(v));
  return verdict_exit(v);
}

int run_ni_check(const Options& opt) {
  LevelPoset p = load_poset(opt);
  Obs pi = parse_obs(p, opt.obs);
  NamedCtx ctx = parse_ctx(opt.ctx);
  Term e = parse_term(slurp(opt.inputs.at(0)));
  Limits limits;
  limits.fuel = opt.fuel;
  Verdict v = noninterference_check(p, ctx, pi, e, limits);
  emit(opt, verdict_fields(v));
  return verdict_exit(v);
}

int run_ctx_equiv(const Options& opt) {
  LevelPoset p = load_poset(opt);
  Obs pi = parse_obs(p, opt.obs);
  Type t = parse_type(opt.type);
  Term e1 = parse_term(slurp(opt.inputs.at(0)));
  Term e2 = parse_term(slurp(opt.inputs.at(1)));
  Verdict v = ctx_equiv_test(p, pi, e1, e2, t, opt.size_bound, opt.strict, opt.fuel);
  auto fields = verdict_fields(v);
  if (v.is_related() && !v.detail.empty()) fields.emplace_back("note", v.detail);
  emit(opt, fields);
  return verdict_exit(v);
}

int run_reps(const Options& opt) {
  LevelPoset p = load_poset(opt);
  Obs pi = parse_obs(p, opt.obs);
  Type t = parse_type(opt.type);
  RepSet reps = reps_dc(p, t, pi);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("count", std::to_string(reps.reps.size()));
  fields.emplace_back("exact", reps.exact ? "true" : "false");
  for (size_t i = 0; i < reps.reps.size(); ++i)
    fields.emplace_back("rep" + std::to_string(i), print_term(reps.reps[i]));
  emit(opt, fields);
  return kExitOk;
}

int run_demo(const Options& opt) {
  if (opt.inputs.empty() || opt.inputs[0] != "tz-counterexample")
    fail(Err::SyntaxError, "unknown demo; available: tz-counterexample");
  std::cout << tz_counterexample_transcript();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sealing-calculus toolchain"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, int n_inputs, bool needs_type = false) {
    sub->add_option("--poset", opt.poset_file, "poset config file");
    sub->add_option("--obs", opt.obs, "observer level, comma-separated labels");
    sub->add_option("--ctx", opt.ctx, "typing context, e.g. \"x:[unit+unit]@L\"");
    sub->add_option("--fuel", opt.fuel, "reduction step budget");
    sub->add_flag("--machine", opt.machine, "machine-readable key=value;... output");
    if (needs_type) sub->add_option("--type", opt.type, "type in the shared grammar");
    sub->add_option("input", opt.inputs, "term file or inline term")
        ->expected(n_inputs);
  };

  auto* tc = app.add_subcommand("typecheck", "typecheck a term");
  tc->add_option("--calc", opt.calc, "dc | stlc | dccpc");
  add_common(tc, 1);
  auto* nm = app.add_subcommand("normalize", "reduce to normal form");
  nm->add_option("--calc", opt.calc, "dc | stlc | dccpc");
  add_common(nm, 1);
  add_common(app.add_subcommand("translate", "sealing calculus to simply typed"), 1);
  add_common(app.add_subcommand("untranslate", "realize a simply typed term"), 1, true);
  add_common(app.add_subcommand("to-dccpc", "sealing calculus to monadic calculus"), 1);
  add_common(app.add_subcommand("from-dccpc", "monadic calculus to sealing calculus"), 1);
  auto* up = app.add_subcommand("unprotect", "anti-protection combinator");
  up->add_option("--level", opt.level, "data level");
  add_common(up, 0, true);
  add_common(app.add_subcommand("equiv", "logical relation on two closed terms"), 2, true);
  add_common(app.add_subcommand("ni-check", "noninterference over related inputs"), 1);
  auto* cx = app.add_subcommand("ctx-equiv", "bounded contextual equivalence");
  cx->add_option("--size-bound", opt.size_bound, "max distinguisher size");
  cx->add_flag("--strict", opt.strict, "report Unknown instead of Related-up-to-bound");
  add_common(cx, 2, true);
  auto* rp = app.add_subcommand("reps", "class representatives of a type");
  add_common(rp, 0, true);
  add_common(app.add_subcommand("demo", "built-in demos"), 1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("typecheck")) return run_typecheck(opt);
    if (app.got_subcommand("normalize")) return run_normalize(opt);
    if (app.got_subcommand("translate")) return run_translate(opt);
    if (app.got_subcommand("untranslate")) return run_untranslate(opt);
    if (app.got_subcommand("to-dccpc")) return run_to_dccpc(opt);
    if (app.got_subcommand("from-dccpc")) return run_from_dccpc(opt);
    if (app.got_subcommand("unprotect")) return run_unprotect(opt);
    if (app.got_subcommand("equiv")) return run_equiv(opt);
    if (app.got_subcommand("ni-check")) return run_ni_check(opt);
    if (app.got_subcommand("ctx-equiv")) return run_ctx_equiv(opt);
    if (app.got_subcommand("reps")) return run_reps(opt);
    if (app.got_subcommand("demo")) return run_demo(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code) {
      case Err::SyntaxError:
      case Err::DuplicateLabel:
      case Err::UnknownLabelInEdge:
      case Err::CycleAmongDistinctLabels:
      case Err::UnknownLabel:
        return kExitUsage;
      case Err::FuelExhausted:
        return kExitUnknown;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
