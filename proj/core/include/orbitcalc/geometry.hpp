#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbitcalc/clan.hpp"

namespace orbitcalc {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;  // rows

// F_i = span of the first i vectors.
struct Flag {
  std::vector<QVector> vectors;
  int n() const { return static_cast<int>(vectors.size()); }
  std::string json() const;
};

// Exact rank via fraction-free (Bareiss) elimination.
int exact_rank(const QMatrix& rows);

Flag standard_flag(int n);
Flag representative_flag(const Clan& c);
RankTable measure_rank_numbers(const Flag& f, int p, int q);
bool in_closure(const Flag& f, const Clan& target);

// g . F for g = diag(A, B) with A p x p, B q x q (the group K).
Flag apply_block_matrix(const Flag& f, const QMatrix& a, const QMatrix& b);

}  // namespace orbitcalc
