#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "seal/levels.hpp"
#include "support.hpp"

using namespace seal;
using testsupport::obs;

TEST_CASE("parse_poset closes declared edges") {
  LevelPoset p = parse_poset("levels: L H\norder: L <= H");
  CHECK(p.leq("L", "H"));
  CHECK(p.leq("L", "L"));
  CHECK(p.leq("H", "H"));
  CHECK_FALSE(p.leq("H", "L"));
}

TEST_CASE("parse_poset with no edges is discrete") {
  LevelPoset p = parse_poset("levels: L H\n");
  CHECK(p.leq("L", "L"));
  CHECK_FALSE(p.leq("L", "H"));
  CHECK_FALSE(p.leq("H", "L"));
}

TEST_CASE("antisymmetry violations are rejected at load time") {
  CHECK_THROWS_WITH_AS(parse_poset("levels: A B\norder: A <= B\norder: B <= A"),
                       doctest::Contains("CycleAmongDistinctLabels"), Error);
  // transitive cycles too
  CHECK_THROWS_AS(
      parse_poset("levels: A B C\norder: A <= B\norder: B <= C\norder: C <= A"),
      Error);
}

TEST_CASE("poset config errors") {
  CHECK_THROWS_AS(parse_poset("levels: A A\n"), Error);
  CHECK_THROWS_AS(parse_poset("levels: A\norder: A <= B\n"), Error);
  CHECK_THROWS_AS(parse_poset("order: A <= B\n"), Error);
  CHECK_THROWS_AS(parse_poset("levels: A B\norder: A < B\n"), Error);
}

TEST_CASE("comments and blank lines are ignored") {
  LevelPoset p = parse_poset("# two levels\n\nlevels: L H\norder: L <= H # edge\n");
  CHECK(p.leq("L", "H"));
}

TEST_CASE("leq rejects unknown labels") {
  LevelPoset p = parse_poset("levels: L H\n");
  CHECK_THROWS_AS(p.leq("L", "X"), Error);
}

TEST_CASE("observer preorder on the two-point chain") {
  LevelPoset p = testsupport::p0();
  CHECK(obs_leq(p, obs({"L"}), obs({"H"})));
  CHECK(obs_leq(p, obs({"L", "H"}), obs({"H"})));
  CHECK_FALSE(obs_leq(p, obs({"H"}), obs({"L"})));
  CHECK(obs_leq(p, obs({}), obs({})));
  CHECK(obs_leq(p, obs({}), obs({"L"})));
}

TEST_CASE("level_below_obs") {
  LevelPoset p = testsupport::p0();
  LevelPoset flat = testsupport::pflat();
  CHECK(level_below_obs(p, "L", obs({"H"})));
  CHECK_FALSE(level_below_obs(flat, "H", obs({"L"})));
  CHECK(level_below_obs(p, "H", obs({"H"})));
  CHECK_FALSE(level_below_obs(p, "H", obs({})));
}

namespace {

std::vector<Obs> all_subsets(const LevelPoset& p) {
  const auto& ls = p.labels();
  std::vector<Obs> out;
  for (size_t mask = 0; mask < (size_t{1} << ls.size()); ++mask) {
    Obs s;
    for (size_t i = 0; i < ls.size(); ++i)
      if (mask & (size_t{1} << i)) s.insert(ls[i]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("obs_leq is a preorder, exhaustively on small posets") {
  for (const auto& cfg :
       {"levels: L H\norder: L <= H", "levels: A B C D\norder: A <= B\norder: A <= C\norder: B <= D",
        "levels: A B C\n"}) {
    LevelPoset p = parse_poset(cfg);
    auto subsets = all_subsets(p);
    for (const auto& a : subsets) {
      CHECK(obs_leq(p, a, a));
      for (const auto& b : subsets)
        for (const auto& c : subsets)
          if (obs_leq(p, a, b) && obs_leq(p, b, c)) CHECK(obs_leq(p, a, c));
    }
  }
}

TEST_CASE("obs_leq is not antisymmetric") {
  LevelPoset p = testsupport::p0();
  Obs both = obs({"L", "H"}), high = obs({"H"});
  CHECK(obs_leq(p, both, high));
  CHECK(obs_leq(p, high, both));
  CHECK(both != high);
}

TEST_CASE("obs_leq is monotone under union") {
  LevelPoset p = parse_poset("levels: A B C\norder: A <= B");
  auto subsets = all_subsets(p);
  for (const auto& a : subsets)
    for (const auto& b : subsets) {
      if (!obs_leq(p, a, b)) continue;
      for (const auto& q : subsets) {
        Obs aq = a, bq = b;
        aq.insert(q.begin(), q.end());
        bq.insert(q.begin(), q.end());
        CHECK(obs_leq(p, aq, bq));
      }
    }
}
