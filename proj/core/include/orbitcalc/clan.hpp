#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcalc/case.hpp"

namespace orbitcalc {

// A clan: a string of signs and pairs of matching natural numbers.
// Pair labels are always canonical (numbered 1,2,... by first occurrence),
// so two clans are equal exactly when their symbol vectors are equal.
// Encoding: '+' = -2, '-' = -1, pair k = k >= 1; the integer order is the
// enumeration order '+' < '-' < pairs.
class Clan {
 public:
  static constexpr int kPlus = -2;
  static constexpr int kMinus = -1;

  Clan() = default;
  // Accepts any labels; relabels canonically.  Throws InputError if a
  // label does not occur exactly twice.
  explicit Clan(std::vector<int> symbols);

  int size() const { return static_cast<int>(sym_.size()); }
  int p() const { return (size() + plus_count_ - minus_count_) / 2; }
  int q() const { return (size() - plus_count_ + minus_count_) / 2; }
  int pair_count() const { return pairs_; }

  // 0-based accessors.
  int at(int i) const { return sym_[static_cast<std::size_t>(i)]; }
  bool is_sign(int i) const { return at(i) < 0; }
  bool is_number(int i) const { return at(i) > 0; }
  int mate(int i) const { return mate_[static_cast<std::size_t>(i)]; }  // -1 for signs
  const std::vector<int>& symbols() const { return sym_; }
  bool has_pairs() const { return pairs_ > 0; }

  std::string str() const;
  std::string json() const;

  Clan reversed() const;
  Clan negated() const;  // flip every sign

  friend bool operator==(const Clan& a, const Clan& b) { return a.sym_ == b.sym_; }
  friend std::strong_ordering operator<=>(const Clan& a, const Clan& b) {
    return a.sym_ <=> b.sym_;
  }

 private:
  std::vector<int> sym_;
  std::vector<int> mate_;
  int plus_count_ = 0;
  int minus_count_ = 0;
  int pairs_ = 0;
};

struct ClanHash {
  std::size_t operator()(const Clan& c) const noexcept;
};

// Rank numbers, 1-based as in the definitions: plus(i), minus(i) for
// i = 1..n (index 0 holds 0), cross(i,j) for 1 <= i < j <= n.
struct RankTable {
  int n = 0;
  std::vector<int> plus;
  std::vector<int> minus;
  std::vector<int> cross_;  // (n+1)*(n+1), row-major

  int cross(int i, int j) const { return cross_[static_cast<std::size_t>(i * (n + 1) + j)]; }
  int& cross(int i, int j) { return cross_[static_cast<std::size_t>(i * (n + 1) + j)]; }
  static RankTable zero(int n);
  friend bool operator==(const RankTable&, const RankTable&) = default;
};

Clan parse_clan(std::string_view text, int p, int q);
// Parses without checking (p,q); the parameters are whatever the text has.
Clan parse_clan(std::string_view text);

RankTable rank_table(const Clan& c);
Clan clan_from_rank_table(const RankTable& t);

std::vector<Clan> enumerate_clans(int p, int q);

bool is_symmetric(const Clan& c);
bool is_skew_symmetric(const Clan& c);

// All clans of the case's family in enumeration order.
std::vector<Clan> enumerate_case_clans(const CaseId& cs);
bool in_case_family(const CaseId& cs, const Clan& c);

// Combinatorial Bruhat order.  Throws InputError if (p,q) differ.
bool leq(const Clan& a, const Clan& b);
bool leq(const RankTable& a, const RankTable& b);

// One application of any of the ten covering moves.
std::set<Clan> covering_successors(const Clan& c);

// One-line notation of the underlying involution (1-based values).
std::vector<int> underlying_involution(const Clan& c);

}  // namespace orbitcalc
