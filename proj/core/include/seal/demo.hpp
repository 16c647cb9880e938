#pragma once

#include <string>

namespace seal {

/// Deterministic transcript of the sealed-function counterexample on a
/// single-level poset: the two sealing-calculus programs, the simply
/// typed witness and its realization, and the verdict pair.
std::string tz_counterexample_transcript();

}  // namespace seal
