#include "seal/levels.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace seal {

const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::UnknownLabelInEdge: return "UnknownLabelInEdge";
    case Err::CycleAmongDistinctLabels: return "CycleAmongDistinctLabels";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownLabel: return "UnknownLabel";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::AmbiguousType: return "AmbiguousType";
    case Err::UnauthorizedUnseal: return "UnauthorizedUnseal";
    case Err::NotAFunction: return "NotAFunction";
    case Err::NotAPair: return "NotAPair";
    case Err::NotASum: return "NotASum";
    case Err::NotASeal: return "NotASeal";
    case Err::NotAMonad: return "NotAMonad";
    case Err::ForeignConstruct: return "ForeignConstruct";
    case Err::BindNotPermitted: return "BindNotPermitted";
    case Err::NotProtected: return "NotProtected";
    case Err::FuelExhausted: return "FuelExhausted";
    case Err::IllTyped: return "IllTyped";
    case Err::OpenTerm: return "OpenTerm";
    case Err::NoEligibleKey: return "NoEligibleKey";
    case Err::NoApplicableRule: return "NoApplicableRule";
    case Err::SubformulaViolation: return "SubformulaViolation";
    case Err::InternalSubformulaFailure: return "InternalSubformulaFailure";
    case Err::InvalidDerivation: return "InvalidDerivation";
    case Err::UnsupportedContext: return "UnsupportedContext";
    case Err::InternalError: return "InternalError";
  }
  return "Error";
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

LevelPoset::LevelPoset(std::vector<std::string> labels,
                       std::vector<std::pair<std::string, std::string>> edges)
    : labels_(std::move(labels)) {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) fail(Err::SyntaxError, "bad level label '" + labels_[i] + "'");
    for (size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) fail(Err::DuplicateLabel, labels_[i]);
  }
  const size_t n = labels_.size();
  closed_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) closed_[i][i] = true;
  for (const auto& [lo, hi] : edges) {
    int a = index_of(lo), b = index_of(hi);
    if (a < 0) fail(Err::UnknownLabelInEdge, lo);
    if (b < 0) fail(Err::UnknownLabelInEdge, hi);
    closed_[a][b] = true;
  }
  // Warshall closure.
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (closed_[i][k])
        for (size_t j = 0; j < n; ++j)
          if (closed_[k][j]) closed_[i][j] = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (closed_[i][j] && closed_[j][i])
        fail(Err::CycleAmongDistinctLabels, labels_[i] + " and " + labels_[j]);
}

int LevelPoset::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

bool LevelPoset::contains(const std::string& label) const { return index_of(label) >= 0; }

bool LevelPoset::leq(const std::string& a, const std::string& b) const {
  int i = index_of(a), j = index_of(b);
  if (i < 0) fail(Err::UnknownLabel, a);
  if (j < 0) fail(Err::UnknownLabel, b);
  return closed_[i][j];
}

LevelPoset parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  bool saw_levels = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "levels:") {
      if (saw_levels) fail(Err::SyntaxError, "duplicate levels: line");
      saw_levels = true;
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
    } else if (head == "order:") {
      if (!saw_levels) fail(Err::SyntaxError, "order: before levels:");
      std::string lo, arrow, hi;
      if (!(ls >> lo >> arrow >> hi) || arrow != "<=")
        fail(Err::SyntaxError, "expected 'order: <label> <= <label>'");
      std::string extra;
      if (ls >> extra) fail(Err::SyntaxError, "trailing tokens on order line");
      edges.emplace_back(lo, hi);
    } else {
      fail(Err::SyntaxError, "unrecognized line '" + head + "'");
    }
  }
  if (!saw_levels) fail(Err::SyntaxError, "missing levels: line");
  return LevelPoset(std::move(labels), std::move(edges));
}

bool obs_leq(const LevelPoset& p, const Obs& p1, const Obs& p2) {
  return std::all_of(p1.begin(), p1.end(), [&](const std::string& a) {
    return std::any_of(p2.begin(), p2.end(),
                       [&](const std::string& b) { return p.leq(a, b); });
  });
}

bool level_below_obs(const LevelPoset& p, const std::string& l, const Obs& pi) {
  return std::any_of(pi.begin(), pi.end(),
                     [&](const std::string& b) { return p.leq(l, b); });
}

Obs obs_with(const Obs& pi, const std::string& l) {
  Obs out = pi;
  out.insert(l);
  return out;
}

std::string obs_to_string(const Obs& pi) {
  std::string out = "{";
  for (auto it = pi.begin(); it != pi.end(); ++it) {
    if (it != pi.begin()) out += ",";
    out += *it;
  }
  return out + "}";
}

Obs parse_obs(const LevelPoset& p, const std::string& s) {
  Obs out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (!p.contains(cur)) fail(Err::UnknownLabel, cur);
    out.insert(cur);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace seal
