#include <doctest.h>

#include "support/oracle.hpp"

using namespace orbitcalc;

namespace {

Clan C(const char* s) { return parse_clan(s); }

std::vector<int> plus_of(const RankTable& t) { return {t.plus.begin() + 1, t.plus.end()}; }
std::vector<int> minus_of(const RankTable& t) { return {t.minus.begin() + 1, t.minus.end()}; }

}  // namespace

TEST_SUITE("clans") {

TEST_CASE("parse_clan canonicalises pair labels") {
  const Clan c = parse_clan("1+1-", 2, 2);
  CHECK(c.is_number(0));
  CHECK(c.mate(0) == 2);
  CHECK(c.at(1) == Clan::kPlus);
  CHECK(c.at(3) == Clan::kMinus);
  CHECK(parse_clan("5757", 2, 2) == parse_clan("1212", 2, 2));
  CHECK(parse_clan("2121", 2, 2).str() == "1212");
  CHECK(parse_clan("11+", 2, 1).str() == "11+");
}

TEST_CASE("parse_clan rejects malformed input") {
  CHECK_THROWS_AS(parse_clan("1+", 1, 1), InputError);
  CHECK_THROWS_AS(parse_clan("++--", 3, 1), InputError);
  CHECK_THROWS_AS(parse_clan("1x1", 1, 1), InputError);
  CHECK_THROWS_AS(parse_clan("111+", 2, 2), InputError);
}

TEST_CASE("labels of ten or more print bracketed and round-trip") {
  std::vector<int> s;
  for (int k = 1; k <= 10; ++k) s.push_back(k);
  for (int k = 1; k <= 10; ++k) s.push_back(k);
  const Clan c(s);
  CHECK(c.str().find("[10]") != std::string::npos);
  CHECK(parse_clan(c.str()) == c);
}

TEST_CASE("rank numbers") {
  const RankTable t = rank_table(C("1+1-"));
  CHECK(plus_of(t) == std::vector<int>{0, 1, 2, 2});
  CHECK(minus_of(t) == std::vector<int>{0, 0, 1, 2});
  CHECK(t.cross(1, 2) == 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (i != 1 || j != 2) CHECK(t.cross(i, j) == 0);

  const RankTable s = rank_table(C("++--"));
  CHECK(plus_of(s) == std::vector<int>{1, 2, 2, 2});
  CHECK(minus_of(s) == std::vector<int>{0, 0, 1, 2});

  const RankTable d = rank_table(C("1221"));
  CHECK(d.cross(1, 2) == 1);
  CHECK(d.cross(1, 3) == 1);
  CHECK(d.cross(2, 3) == 1);
}

TEST_CASE("rank numbers agree with the string-level oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p)
      for (const Clan& c : enumerate_clans(p, n - p)) {
        const RankTable t = rank_table(c);
        const oracle::Ranks r = oracle::brute_ranks(c.str());
        for (int i = 1; i <= n; ++i) {
          REQUIRE(t.plus[static_cast<std::size_t>(i)] == r.plus[static_cast<std::size_t>(i)]);
          REQUIRE(t.minus[static_cast<std::size_t>(i)] == r.minus[static_cast<std::size_t>(i)]);
          for (int j = i + 1; j <= n; ++j)
            REQUIRE(t.cross(i, j) == r.cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
      }
}

TEST_CASE("clan_from_rank_table") {
  RankTable t = RankTable::zero(6);
  const int pm[] = {0, 0, 0, 1, 2, 2, 3};
  for (int i = 0; i <= 6; ++i) t.plus[static_cast<std::size_t>(i)] = t.minus[static_cast<std::size_t>(i)] = pm[i];
  t.cross(1, 2) = t.cross(1, 3) = t.cross(2, 3) = 1;
  CHECK(clan_from_rank_table(t).str() == "122133");
  CHECK(clan_from_rank_table(rank_table(C("+-"))).str() == "+-");

  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= n; ++p)
      for (const Clan& c : enumerate_clans(p, n - p)) REQUIRE(clan_from_rank_table(rank_table(c)) == c);
}

TEST_CASE("enumerate_clans") {
  CHECK(enumerate_clans(2, 2).size() == 21);
  const auto p0 = enumerate_clans(3, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].str() == "+++");
  std::set<std::string> one;
  for (const auto& c : enumerate_clans(1, 1)) one.insert(c.str());
  CHECK(one == std::set<std::string>{"+-", "-+", "11"});

  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      std::set<std::string> got;
      for (const auto& c : enumerate_clans(p, n - p)) got.insert(c.str());
      REQUIRE(got == oracle::brute_clans(p, n - p));
    }
}

TEST_CASE("symmetry predicates") {
  CHECK(is_symmetric(C("1212")));
  CHECK(is_skew_symmetric(C("1212")));
  CHECK_FALSE(is_symmetric(C("+-")));
  CHECK(is_skew_symmetric(C("+-")));
  CHECK(is_symmetric(C("+11-22+")));
  // Relabelling does not matter.
  CHECK(is_symmetric(C("+22-11+")));
  CHECK(is_symmetric(Clan({3, 4, 3, 4})) == is_symmetric(C("1212")));
}

TEST_CASE("clan families of the folded cases") {
  CHECK(enumerate_case_clans(CaseId::make(CaseTag::C_SpxSp, 2, 1)).size() == 9);
  CHECK(enumerate_case_clans(CaseId::make_n(CaseTag::C_Sp_GL, 2)).size() == 11);
  CHECK(enumerate_case_clans(CaseId::make(CaseTag::D_SO_OoddxOodd, 1, 2)).size() == 13);
  CHECK(enumerate_case_clans(CaseId::make(CaseTag::B_SO_OxO, 2, 1)).size() == 25);
}

TEST_CASE("leq") {
  CHECK(leq(C("+-"), C("11")));
  CHECK(leq(C("1+1-"), C("1+1-")));
  CHECK_FALSE(leq(C("++--"), C("+-+-")));
  CHECK_FALSE(leq(C("+-+-"), C("++--")));
  CHECK_THROWS_AS(leq(C("++-"), C("+--")), InputError);
}

TEST_CASE("leq is a partial order whose minima are the sign clans") {
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      const auto cl = enumerate_clans(p, n - p);
      for (const auto& a : cl) {
        REQUIRE(leq(a, a));
        bool minimal = true;
        for (const auto& b : cl) {
          if (a != b && leq(a, b) && leq(b, a)) FAIL("antisymmetry: " << a.str() << " " << b.str());
          if (b != a && leq(b, a)) minimal = false;
          REQUIRE(leq(a, b) == oracle::brute_leq(a.str(), b.str()));
          if (leq(a, b))
            for (const auto& c : cl)
              if (leq(b, c)) REQUIRE(leq(a, c));
        }
        REQUIRE(minimal == !a.has_pairs());
      }
    }
}

TEST_CASE("covering moves") {
  CHECK(covering_successors(C("+-")) == std::set<Clan>{C("11")});
  CHECK(covering_successors(C("1221")).empty());
  const auto up = covering_successors(C("1212"));
  CHECK(up.count(C("1221")) == 1);
  // Every covering move goes strictly up.
  for (const auto& c : enumerate_clans(3, 3))
    for (const auto& d : covering_successors(c)) {
      REQUIRE(leq(c, d));
      REQUIRE(c != d);
    }
}

TEST_CASE("the +- -> 11 move changes exactly the expected rank numbers") {
  // +-  at positions i < j with nothing in between: plus drops by one on
  // [i, j-1]; cross grows by one on the rectangle i <= a < b < j.
  for (const auto& c : enumerate_clans(3, 3)) {
    const int n = c.size();
    for (int i = 0; i + 1 < n; ++i) {
      if (c.at(i) != Clan::kPlus || c.at(i + 1) != Clan::kMinus) continue;
      auto s = c.symbols();
      s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i + 1)] = 99;
      const Clan d(s);
      REQUIRE(covering_successors(c).count(d) == 1);
      const RankTable a = rank_table(c), b = rank_table(d);
      for (int k = 1; k <= n; ++k) {
        REQUIRE(b.plus[static_cast<std::size_t>(k)] == a.plus[static_cast<std::size_t>(k)] - (k == i + 1 ? 1 : 0));
        REQUIRE(b.minus[static_cast<std::size_t>(k)] == a.minus[static_cast<std::size_t>(k)]);
      }
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) REQUIRE(b.cross(x, y) == a.cross(x, y));
    }
  }
}

TEST_CASE("underlying involution") {
  CHECK(underlying_involution(C("12+-12")) == std::vector<int>{5, 6, 3, 4, 1, 2});
  CHECK(underlying_involution(C("++--")) == std::vector<int>{1, 2, 3, 4});
  CHECK(underlying_involution(C("1221")) == std::vector<int>{4, 3, 2, 1});
}

}  // TEST_SUITE
