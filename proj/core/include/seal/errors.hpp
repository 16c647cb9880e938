#pragma once

#include <stdexcept>
#include <string>

namespace seal {

enum class Err {
  // poset loading
  DuplicateLabel,
  UnknownLabelInEdge,
  CycleAmongDistinctLabels,
  SyntaxError,
  UnknownLabel,
  // typing
  UnboundVariable,
  TypeMismatch,
  AmbiguousType,
  UnauthorizedUnseal,
  NotAFunction,
  NotAPair,
  NotASum,
  NotASeal,
  NotAMonad,
  ForeignConstruct,
  BindNotPermitted,
  NotProtected,
  // reduction
  FuelExhausted,
  // translation
  IllTyped,
  OpenTerm,
  NoEligibleKey,
  NoApplicableRule,
  SubformulaViolation,
  InternalSubformulaFailure,
  InvalidDerivation,
  // equivalence
  UnsupportedContext,
  InternalError,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

}  // namespace seal
