#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcalc/orbits.hpp"
#include "orbitcalc/poly.hpp"

namespace orbitcalc {

struct FormulaOptions {
  DeltaC0 c0 = DeltaC0::Two;
  int threads = 1;
};

// Closed-orbit class, evaluated at the fixed point w of the orbit (case 7:
// w must be the standard representative).
Factored closed_class_at(const CaseId& cs, const WeylElement& w, const FormulaOptions& opt = {});
// Evaluated at the orbit's distinguished representative.
Factored closed_class_factored(const CaseId& cs, const Clan& c, const FormulaOptions& opt = {});
Polynomial closed_class(const CaseId& cs, const Clan& c, const FormulaOptions& opt = {});

struct ClassTable {
  CaseId cs;
  std::vector<Polynomial> classes;             // by poset node id
  std::vector<std::optional<Factored>> closed;  // factored seeds for closed nodes
  std::vector<std::string> provenance;
  int path_checks = 0;  // extra incoming edges whose result was compared
  // ... of which only agreed modulo the relations of the cohomology ring
  int path_checks_modulo_relations = 0;

  const Polynomial& of(const OrbitPoset& P, const Clan& c) const { return classes[static_cast<std::size_t>(P.id(c))]; }
};

// a and b represent the same equivariant class: their restrictions agree at
// every fixed point w in W.
bool same_localization(const CaseId& cs, const std::vector<WeylElement>& W, const Polynomial& a,
                       const Polynomial& b);

// Seeds closed orbits and propagates [Y'] = (1/d) d_alpha [Y] along weak
// edges in rank order.  Throws InternalError if two paths disagree.
ClassTable all_classes(const OrbitPoset& P, const FormulaOptions& opt = {});

// Product over the multiset rho(w Phi+) - Phi_K.
Polynomial closed_restriction_product(const CaseId& cs, const WeylElement& w);

struct LocalizationFailure {
  std::string clan;
  std::string point;
  std::string what;
};

struct LocalizationReport {
  std::size_t closed_checks = 0;
  std::size_t support_checks = 0;
  std::size_t dense_checks = 0;
  std::vector<LocalizationFailure> failures;
  bool ok() const { return failures.empty(); }
};

LocalizationReport verify_localization(const OrbitPoset& P, const ClassTable& t, int threads = 1);

std::vector<ChernBlock> chern_blocks(const CaseId& cs);
Polynomial chern_formula(const OrbitPoset& P, const ClassTable& t, const Clan& c);
// Keeps the closed-orbit factorization when every factor group rewrites on
// its own; otherwise the expanded chern_formula.
std::string chern_formula_str(const OrbitPoset& P, const ClassTable& t, const Clan& c);

}  // namespace orbitcalc
