#pragma once

namespace seal {

/// Bounds for enumeration-backed checks.
struct Limits {
  int term_size = 12;          // bounded enumeration of inhabitants
  int distinguisher_bound = 10;
  long fuel = 1'000'000;
  int max_subst_pairs = 4;     // per-variable substitution pairs
  int max_table_reps = 256;    // function-table representatives
};

}  // namespace seal
