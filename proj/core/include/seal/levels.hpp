#pragma once

#include <set>
#include <string>
#include <vector>

#include "seal/errors.hpp"

namespace seal {

/// An observer level: a finite set of data-level labels.
using Obs = std::set<std::string>;

/// A finite poset of data levels. The order is stored fully closed
/// (reflexive-transitive), so leq is a set lookup.
class LevelPoset {
 public:
  LevelPoset() = default;
  LevelPoset(std::vector<std::string> labels,
             std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const;

  /// a ⊑ b. Throws UnknownLabel for labels outside the poset.
  bool leq(const std::string& a, const std::string& b) const;

 private:
  int index_of(const std::string& label) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> closed_;  // closed_[a][b] iff a ⊑ b
};

/// Parses the line-oriented poset config format:
///   levels: L H
///   order: L <= H
/// Blank lines and '#' comments are ignored.
LevelPoset parse_poset(const std::string& text);

/// Induced preorder on observer levels: every member of p1 is below
/// some member of p2. The empty set is below everything.
bool obs_leq(const LevelPoset& p, const Obs& p1, const Obs& p2);

/// l ⊑ π̄, i.e. some member of p dominates l.
bool level_below_obs(const LevelPoset& p, const std::string& l, const Obs& pi);

Obs obs_with(const Obs& pi, const std::string& l);

std::string obs_to_string(const Obs& pi);
Obs parse_obs(const LevelPoset& p, const std::string& comma_separated);

}  // namespace seal
