#include "orbitcalc/formulas.hpp"

#include <cstdlib>

#include "orbitcalc/parallel.hpp"

namespace orbitcalc {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// x_{w^{-1}(i)} with the sign convention of signed permutations.
Polynomial x_winv(const WeylElement& w, int i) {
  const int n = w.n();
  for (int k = 1; k <= n; ++k)
    if (std::abs(w(k)) == i) return w(k) > 0 ? Polynomial::x(n, k) : -Polynomial::x(n, k);
  throw InternalError("x_winv: value not found");
}

mpq_class parity_sign(int k) { return k % 2 ? mpq_class(-1) : mpq_class(1); }

// prod_{j in js} (x_{w^{-1}(i)} - y_j) (and (x + y_j) if both) grouped per i.
void append_products(Factored& f, const WeylElement& w, const std::vector<int>& is, const std::vector<int>& js,
                     bool with_plus) {
  const int n = w.n();
  for (int i : is) {
    std::vector<Polynomial> group;
    const Polynomial xi = x_winv(w, i);
    for (int j : js) {
      group.push_back(xi - Polynomial::y(n, j));
      if (with_plus) group.push_back(xi + Polynomial::y(n, j));
    }
    if (!group.empty()) f.groups.push_back(std::move(group));
  }
}

std::vector<int> span(int a, int b) {
  std::vector<int> r;
  for (int i = a; i <= b; ++i) r.push_back(i);
  return r;
}

}  // namespace

bool same_localization(const CaseId& cs, const std::vector<WeylElement>& W, const Polynomial& a,
                       const Polynomial& b) {
  const Polynomial d = a - b;
  for (const auto& w : W)
    if (!restrict_at(cs, w, d).is_zero()) return false;
  return true;
}

Factored closed_class_at(const CaseId& cs, const WeylElement& w, const FormulaOptions& opt) {
  const int n = cs.n(), p = cs.p;
  if (w.n() != n) throw InputError("closed_class_at: rank mismatch");
  Factored f;
  f.n = n;
  switch (cs.tag) {
    case CaseTag::A_GLpq:
      f.scalar = parity_sign(stat_lp(abs_perm(w), p));
      append_products(f, w, span(1, p), span(p + 1, n), false);
      break;
    case CaseTag::B_SO_OxO: {
      const Perm a = abs_perm(w);
      f.scalar = parity_sign(stat_lp(a, p));
      std::vector<Polynomial> monos;
      for (int i = 1; i <= p; ++i)
        for (int k = 1; k <= n; ++k)
          if (a[ix(k - 1)] == i) monos.push_back(Polynomial::x(n, k));
      f.groups.push_back(std::move(monos));
      append_products(f, w, span(1, p), span(p + 1, n), true);
      break;
    }
    case CaseTag::C_SpxSp:
    case CaseTag::D_SO_OevenxOeven:
      f.scalar = parity_sign(stat_lp(abs_perm(w), p));
      append_products(f, w, span(1, p), span(p + 1, n), true);
      break;
    case CaseTag::C_Sp_GL:
      f.scalar = parity_sign(stat_psi(w) + stat_sigma(w));
      f.groups.push_back({delta(n, w, n, opt.c0)});
      break;
    case CaseTag::D_SO_GL: {
      mpq_class half(1, 2), s = parity_sign(stat_sigma(w));
      for (int k = 0; k < n - 1; ++k) s *= half;
      f.scalar = s;
      f.groups.push_back({delta(n - 1, w, n, opt.c0)});
      break;
    }
    case CaseTag::D_SO_OoddxOodd: {
      if (std::abs(w(n)) != p + 1) throw InputError("closed_class_at: w is not in a closed orbit");
      f.scalar = parity_sign(stat_tau(w, p));
      std::vector<Polynomial> monos;
      for (int k = 1; k <= n - 1; ++k) monos.push_back(Polynomial::x(n, k));
      f.groups.push_back(std::move(monos));
      append_products(f, w, span(1, p), span(p + 2, n), true);
      break;
    }
  }
  return f;
}

Factored closed_class_factored(const CaseId& cs, const Clan& c, const FormulaOptions& opt) {
  return closed_class_at(cs, distinguished_representative(cs, c), opt);
}

Polynomial closed_class(const CaseId& cs, const Clan& c, const FormulaOptions& opt) {
  return closed_class_factored(cs, c, opt).expand();
}

ClassTable all_classes(const OrbitPoset& P, const FormulaOptions& opt) {
  const CaseId& cs = P.cs;
  const int n = cs.n();
  ClassTable t;
  t.cs = cs;
  const std::size_t V = ix(P.size());
  t.classes.assign(V, Polynomial(n));
  t.closed.assign(V, std::nullopt);
  t.provenance.assign(V, "");
  std::vector<bool> done(V, false);

  // Closed orbits.
  std::vector<int> seeds;
  for (int v = 0; v < P.size(); ++v)
    if (P.in_edges[ix(v)].empty()) {
      if (!is_closed_clan(cs, P.nodes[ix(v)]))
        throw InternalError("minimal node " + P.nodes[ix(v)].str() + " is not a closed orbit");
      seeds.push_back(v);
    }
  parallel_for(seeds.size(), opt.threads, [&](std::size_t k) {
    const int v = seeds[k];
    Factored f = closed_class_factored(cs, P.nodes[ix(v)], opt);
    t.classes[ix(v)] = f.expand();
    t.closed[ix(v)] = std::move(f);
    t.provenance[ix(v)] = "closed formula at " + distinguished_representative(cs, P.nodes[ix(v)]).str();
  });
  for (int v : seeds) done[ix(v)] = true;

  const auto W = weyl_group(cs.type(), n);
  // Level by level: every in-edge of a rank-r node starts at rank < r.
  const int R = P.max_rank();
  for (int r = 1; r <= R; ++r) {
    std::vector<int> level;
    for (int v : P.by_rank)
      if (P.rank[ix(v)] == r) level.push_back(v);
    std::vector<std::vector<Polynomial>> results(level.size());
    parallel_for(level.size(), opt.threads, [&](std::size_t k) {
      const int v = level[k];
      for (int eid : P.in_edges[ix(v)]) {
        const auto& e = P.edges[ix(eid)];
        if (!done[ix(e.from)]) throw InternalError("source of an edge not computed before its target");
        Polynomial d = divided_difference(cs.type(), e.root, t.classes[ix(e.from)]);
        if (e.degree == 2) d *= mpq_class(1, 2);
        results[k].push_back(std::move(d));
      }
    });
    for (std::size_t k = 0; k < level.size(); ++k) {
      const int v = level[k];
      const auto& in = P.in_edges[ix(v)];
      for (std::size_t m = 1; m < results[k].size(); ++m) {
        ++t.path_checks;
        if (results[k][m] == results[k][0]) continue;
        // Different representatives of the same class: equal after
        // restriction to every fixed point.
        if (same_localization(cs, W, results[k][m], results[k][0])) {
          ++t.path_checks_modulo_relations;
          continue;
        }
        const auto& e0 = P.edges[ix(in[0])];
        const auto& em = P.edges[ix(in[m])];
        throw InternalError("path disagreement at " + P.nodes[ix(v)].str() + ": via s" + std::to_string(e0.root) +
                            " from " + P.nodes[ix(e0.from)].str() + " gives " + results[k][0].str() + ", via s" +
                            std::to_string(em.root) + " from " + P.nodes[ix(em.from)].str() + " gives " +
                            results[k][m].str());
      }
      const auto& e0 = P.edges[ix(in[0])];
      t.classes[ix(v)] = std::move(results[k][0]);
      t.provenance[ix(v)] = std::string(e0.degree == 2 ? "(1/2)" : "") + "d" + std::to_string(e0.root) + " of " +
                            P.nodes[ix(e0.from)].str();
      done[ix(v)] = true;
    }
  }
  return t;
}

Polynomial closed_restriction_product(const CaseId& cs, const WeylElement& w) {
  const int n = cs.n();
  Polynomial r(n, 1);
  for (const auto& root : restriction_weights(cs, w)) {
    Polynomial l(n);
    for (int i = 1; i <= n; ++i)
      if (root[ix(i - 1)]) l += Polynomial::y(n, i) * mpq_class(root[ix(i - 1)]);
    r *= l;
  }
  return r;
}

LocalizationReport verify_localization(const OrbitPoset& P, const ClassTable& t, int threads) {
  const CaseId& cs = P.cs;
  const int n = cs.n();
  LocalizationReport rep;
  const auto W = weyl_group(cs.type(), n);
  if (P.down.empty()) throw InputError("verify_localization: closure order not computed");

  // (a) closed-orbit restrictions.
  for (int v = 0; v < P.size(); ++v) {
    const Clan& c = P.nodes[ix(v)];
    if (!is_closed_clan(cs, c)) continue;
    for (const auto& w : closed_orbit_fixed_points(cs, c).all) {
      ++rep.closed_checks;
      const Polynomial got = restrict_at(cs, w, t.classes[ix(v)]);
      const Polynomial want = closed_restriction_product(cs, w);
      if (!(got == want)) rep.failures.push_back({c.str(), w.str(), "closed restriction " + got.str() + " != " + want.str()});
    }
  }

  // (b) support: restriction vanishes at fixed points outside the closure.
  const bool has_dictionary = cs.tag != CaseTag::D_SO_OoddxOodd;
  if (has_dictionary) {
    std::vector<std::vector<LocalizationFailure>> fails(W.size());
    std::vector<std::size_t> counts(W.size(), 0);
    parallel_for(W.size(), threads, [&](std::size_t k) {
      const auto& w = W[k];
      const int z = P.id(fixed_point_to_clan(cs, w));
      for (int v = 0; v < P.size(); ++v) {
        if (P.below(z, v)) continue;
        ++counts[k];
        const Polynomial got = restrict_at(cs, w, t.classes[ix(v)]);
        if (!got.is_zero())
          fails[k].push_back({P.nodes[ix(v)].str(), w.str(), "expected vanishing restriction, got " + got.str()});
      }
    });
    for (std::size_t k = 0; k < W.size(); ++k) {
      rep.support_checks += counts[k];
      for (auto& f : fails[k]) rep.failures.push_back(std::move(f));
    }
  }

  // (c) dense orbit class is 1 everywhere.
  const Polynomial one(n, 1);
  if (!(t.classes[ix(P.top)] == one))
    rep.failures.push_back({P.nodes[ix(P.top)].str(), "-", "dense class is " + t.classes[ix(P.top)].str()});
  for (const auto& w : W) {
    ++rep.dense_checks;
    if (!(restrict_at(cs, w, t.classes[ix(P.top)]) == one))
      rep.failures.push_back({P.nodes[ix(P.top)].str(), w.str(), "dense class does not restrict to 1"});
  }
  return rep;
}

std::vector<ChernBlock> chern_blocks(const CaseId& cs) {
  const int n = cs.n(), p = cs.p;
  switch (cs.tag) {
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL: return {{span(1, n), span(1, n)}};
    case CaseTag::D_SO_OoddxOodd: return {{span(1, p), span(1, p)}, {span(p + 2, n), span(p + 2, n)}};
    default: return {{span(1, p), span(1, p)}, {span(p + 1, n), span(p + 1, n)}};
  }
}

Polynomial chern_formula(const OrbitPoset& P, const ClassTable& t, const Clan& c) {
  return chern_substitute(t.of(P, c), chern_blocks(P.cs));
}

std::string chern_formula_str(const OrbitPoset& P, const ClassTable& t, const Clan& c) {
  const auto& seed = t.closed[ix(P.id(c))];
  const Polynomial whole = chern_formula(P, t, c);
  if (seed) {
    try {
      Factored f;
      f.n = seed->n;
      f.scalar = seed->scalar;
      for (const auto& g : seed->groups) {
        Polynomial prod(seed->n, 1);
        for (const auto& x : g) prod *= x;
        f.groups.push_back({chern_substitute(prod, chern_blocks(P.cs))});
      }
      if (f.expand() == whole) return f.str();
    } catch (const InputError&) {
      // A factor group that is not block-symmetric on its own.
    }
  }
  return whole.str();
}

}  // namespace orbitcalc
