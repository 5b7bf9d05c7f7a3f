#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcalc/case.hpp"
#include "orbitcalc/clan.hpp"

namespace orbitcalc {

// A signed permutation in one-line notation: values[i-1] = w(i), each a
// nonzero integer whose absolute values form a permutation of 1..n.
struct WeylElement {
  RootType type = RootType::A;
  std::vector<int> values;

  int n() const { return static_cast<int>(values.size()); }
  int operator()(int i) const { return values[static_cast<std::size_t>(i - 1)]; }

  static WeylElement identity(RootType type, int n);
  // "-2,-4,1,3,-5" or, for n < 10, also "-2-413-5" / "2413".
  static WeylElement parse(std::string_view text, RootType type);
  std::string str() const;
  bool valid() const;  // permutation + sign restrictions of the type

  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& u, const WeylElement& w);  // u o w
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.values == b.values; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.values <=> b.values; }
};

using Perm = std::vector<int>;  // unsigned one-line notation, 1-based values

// sigma: the image of w in S_{2n} (odd = false) or S_{2n+1} (odd = true).
Perm embed_in_ambient(const WeylElement& w, bool odd);

Perm abs_perm(const WeylElement& w);
std::set<int> neg_set(const WeylElement& w);

int stat_lp(const Perm& w, int p);
int stat_phip(const WeylElement& w, int p);
int stat_psi(const WeylElement& w);
int stat_sigma(const WeylElement& w);
int stat_tau(const WeylElement& w, int p);

// Whole Weyl group of the given type and rank.
std::vector<WeylElement> weyl_group(RootType type, int n);
int simple_root_count(RootType type, int n);
WeylElement simple_reflection(RootType type, int n, int i);

bool wk_member(const CaseId& cs, const WeylElement& w);
std::vector<WeylElement> wk_elements(const CaseId& cs);

// Elements u such that {u w} is the set of fixed points of the closed
// K-orbit through w.  Differs from W_K in cases 2 and 5 where K is
// disconnected and the closed K-orbits have two K^0-components.
std::vector<WeylElement> orbit_stabilizer_group(const CaseId& cs);

bool is_closed_clan(const CaseId& cs, const Clan& c);
std::vector<Clan> closed_clans(const CaseId& cs);

struct FixedPointSet {
  WeylElement distinguished;
  std::vector<WeylElement> all;  // sorted
};

FixedPointSet closed_orbit_fixed_points(const CaseId& cs, const Clan& c);
WeylElement distinguished_representative(const CaseId& cs, const Clan& c);

// Closed clan of the orbit through the fixed point w.  Case 7 is only
// supported for closed-orbit fixed points (|w(n)| = p+1).
Clan fixed_point_to_clan(const CaseId& cs, const WeylElement& w);
bool in_closed_orbit(const CaseId& cs, const WeylElement& w);  // case 7 criterion; true elsewhere

// Cross action of w on a clan of the case (symbols permuted by the
// ambient image of w).
Clan cross_action(const CaseId& cs, const Clan& c, const WeylElement& w);

// Linear forms with integer coefficients on X_1..X_n (or Y_1..Y_n).
using Root = std::vector<int>;

std::vector<Root> positive_roots(RootType type, int n);
std::vector<Root> k_roots(const CaseId& cs);  // both signs, each once
Root act_on_root(const WeylElement& w, const Root& r);
Root restrict_root(const CaseId& cs, const Root& r);  // rho
std::vector<Root> restriction_weights(const CaseId& cs, const WeylElement& w);  // rho(w Phi+) - Phi_K

}  // namespace orbitcalc
