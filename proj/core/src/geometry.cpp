#include "orbitcalc/geometry.hpp"

#include "orbitcalc/case.hpp"

namespace orbitcalc {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

QVector unit(int n, int k) {  // e_k, 1-based
  QVector v(ix(n), 0);
  v[ix(k - 1)] = 1;
  return v;
}

}  // namespace

int exact_rank(const QMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  // Clear denominators row by row, then Bareiss over the integers.
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& v : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> ir;
    for (const auto& v : r) ir.push_back(v.get_num() * (l / v.get_den()));
    m.push_back(std::move(ir));
  }
  const std::size_t R = m.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::string Flag::json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < vectors[i].size(); ++j) {
      const auto& v = vectors[i][j];
      out += (j ? "," : "") + std::string("[") + v.get_num().get_str() + "," + v.get_den().get_str() + "]";
    }
    out += "]";
  }
  return out + "]";
}

Flag standard_flag(int n) {
  Flag f;
  for (int k = 1; k <= n; ++k) f.vectors.push_back(unit(n, k));
  return f;
}

Flag representative_flag(const Clan& c) {
  const int n = c.size(), p = c.p();
  // Signature '+' on the first occurrence of each pair; sigma fills '+'
  // slots with 1..p and '-' slots with p+1..n, left to right.
  std::vector<int> sigma(ix(n));
  int plus = 1, minus = p + 1;
  for (int i = 0; i < n; ++i) {
    const bool pos = c.at(i) == Clan::kPlus || (c.is_number(i) && c.mate(i) > i);
    sigma[ix(i)] = pos ? plus++ : minus++;
  }
  Flag f;
  for (int i = 0; i < n; ++i) {
    QVector v = unit(n, sigma[ix(i)]);
    if (c.is_number(i)) {
      const int j = c.mate(i);
      if (j < i) v[ix(sigma[ix(i)] - 1)] = -1;
      v[ix(sigma[ix(j)] - 1)] += 1;
    }
    f.vectors.push_back(std::move(v));
  }
  return f;
}

RankTable measure_rank_numbers(const Flag& f, int p, int q) {
  const int n = f.n();
  if (p + q != n) throw InputError("measure_rank_numbers: p+q must equal the dimension");
  RankTable t = RankTable::zero(n);
  QMatrix ep, eq;
  for (int k = 1; k <= p; ++k) ep.push_back(unit(n, k));
  for (int k = p + 1; k <= n; ++k) eq.push_back(unit(n, k));
  auto proj = [&](const QVector& v) {
    QVector r = v;
    for (int k = p; k < n; ++k) r[ix(k)] = 0;
    return r;
  };
  for (int i = 1; i <= n; ++i) {
    QMatrix fi(f.vectors.begin(), f.vectors.begin() + i);
    QMatrix a = fi, b = fi;
    a.insert(a.end(), ep.begin(), ep.end());
    b.insert(b.end(), eq.begin(), eq.end());
    t.plus[ix(i)] = i + p - exact_rank(a);
    t.minus[ix(i)] = i + q - exact_rank(b);
    for (int j = i + 1; j <= n; ++j) {
      QMatrix m;
      for (int k = 0; k < i; ++k) m.push_back(proj(f.vectors[ix(k)]));
      m.insert(m.end(), f.vectors.begin(), f.vectors.begin() + j);
      t.cross(i, j) = exact_rank(m) - j;
    }
  }
  return t;
}

bool in_closure(const Flag& f, const Clan& target) {
  const RankTable have = measure_rank_numbers(f, target.p(), target.q());
  return leq(have, rank_table(target));
}

Flag apply_block_matrix(const Flag& f, const QMatrix& a, const QMatrix& b) {
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size()), n = f.n();
  if (p + q != n) throw InputError("apply_block_matrix: block sizes do not match");
  Flag g;
  for (const auto& v : f.vectors) {
    QVector w(ix(n), 0);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) w[ix(i)] += a[ix(i)][ix(j)] * v[ix(j)];
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) w[ix(p + i)] += b[ix(i)][ix(j)] * v[ix(p + j)];
    g.vectors.push_back(std::move(w));
  }
  return g;
}

}  // namespace orbitcalc
