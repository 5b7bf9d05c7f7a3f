#include "orbitcalc/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "orbitcalc/parallel.hpp"

namespace orbitcalc {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

Clan swap_at(const Clan& c, int a, int b) {
  auto s = c.symbols();
  std::swap(s[ix(a)], s[ix(b)]);
  return Clan(std::move(s));
}

}  // namespace

Clan ambient_move(const Clan& c, int i) {
  const int a = i - 1, b = i;
  if (a < 0 || b >= c.size()) throw InputError("ambient move index out of range");
  const bool na = c.is_number(a), nb = c.is_number(b);
  if (na && nb) {
    if (c.mate(a) != b && c.mate(a) < c.mate(b)) return swap_at(c, a, b);
    return c;
  }
  if (!na && nb) return c.mate(b) > b ? swap_at(c, a, b) : c;
  if (na && !nb) return c.mate(a) < a ? swap_at(c, a, b) : c;
  if (c.at(a) != c.at(b)) {
    auto s = c.symbols();
    s[ix(a)] = s[ix(b)] = 1000;
    return Clan(std::move(s));
  }
  return c;
}

namespace {

// Cases whose clans never contain a pair at mirrored positions (i, N+1-i).
bool forbids_mirrored_pairs(const CaseId& cs) {
  return cs.tag == CaseTag::C_SpxSp || cs.tag == CaseTag::D_SO_GL;
}

// c_i, c_{i+1} paired with the mirrors of c_{i+1}, c_i: the folded root is
// imaginary.  The ambient double move would create two mirrored pairs.
bool crossing_mirror(const Clan& c, int i) {
  const int N = c.size(), a = i - 1, b = i;
  return c.is_number(a) && c.is_number(b) && c.mate(a) == N - 1 - b && c.mate(b) == N - 1 - a;
}

Clan folded_pair_move(const CaseId& cs, const Clan& c, int i) {
  const int N = c.size();
  if (forbids_mirrored_pairs(cs) && crossing_mirror(c, i)) return c;  // compact imaginary
  return ambient_move(ambient_move(c, i), N - i);
}

Clan swap_middle(const Clan& c, int n) { return swap_at(c, n - 1, n); }

}  // namespace

Clan weak_move(const CaseId& cs, const Clan& c, int i) {
  const int n = cs.n();
  if (i < 1 || i > simple_root_count(cs.type(), n))
    throw InputError("simple root index " + std::to_string(i) + " out of range for " + cs.describe());
  if (cs.tag == CaseTag::A_GLpq) return ambient_move(c, i);
  Clan r;
  if (i < n) {
    r = folded_pair_move(cs, c, i);
  } else {
    switch (cs.type()) {
      case RootType::B:
        r = ambient_move(ambient_move(ambient_move(c, n), n + 1), n);
        break;
      case RootType::C:
        r = ambient_move(c, n);
        break;
      case RootType::D:
        r = swap_middle(folded_pair_move(cs, swap_middle(c, n), n - 1), n);
        break;
      case RootType::A:
        break;
    }
  }
  if (!in_case_family(cs, r))
    throw InternalError("folded move s" + std::to_string(i) + " on " + c.str() + " left the clan family: " +
                        r.str());
  return r;
}

int edge_degree(const CaseId& cs, const Clan& c, int i) {
  if (weak_move(cs, c, i) == c) throw InputError("edge_degree: root is not an ascent for " + c.str());
  const auto s = simple_reflection(cs.type(), cs.n(), i);
  return cross_action(cs, c, s) == c ? 2 : 1;
}

int OrbitPoset::id(const Clan& c) const {
  auto it = index.find(c);
  if (it == index.end()) throw InputError("clan " + c.str() + " is not a node of " + cs.describe());
  return it->second;
}

int OrbitPoset::max_rank() const { return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()); }

std::vector<int> OrbitPoset::minimal_nodes() const {
  std::vector<int> r;
  for (int v = 0; v < size(); ++v)
    if (in_edges[ix(v)].empty()) r.push_back(v);
  return r;
}

OrbitPoset weak_order_graph(const CaseId& cs, int threads) {
  OrbitPoset P;
  P.cs = cs;
  P.nodes = enumerate_case_clans(cs);
  const int V = P.size();
  for (int v = 0; v < V; ++v) P.index.emplace(P.nodes[ix(v)], v);
  const int S = simple_root_count(cs.type(), cs.n());
  P.moves.assign(ix(S), std::vector<int>(ix(V), -1));
  std::vector<std::vector<WeakEdge>> per_node(ix(V));
  parallel_for(ix(V), threads, [&](std::size_t v) {
    const Clan& c = P.nodes[v];
    for (int s = 1; s <= S; ++s) {
      const Clan r = weak_move(cs, c, s);
      const int to = P.id(r);
      P.moves[ix(s - 1)][v] = to;
      if (to != static_cast<int>(v))
        per_node[v].push_back({static_cast<int>(v), to, s, edge_degree(cs, c, s)});
    }
  });
  P.in_edges.assign(ix(V), {});
  P.out_edges.assign(ix(V), {});
  for (auto& list : per_node)
    for (auto& e : list) {
      const int eid = static_cast<int>(P.edges.size());
      P.in_edges[ix(e.to)].push_back(eid);
      P.out_edges[ix(e.from)].push_back(eid);
      P.edges.push_back(e);
    }
  // Longest path ranks via Kahn's algorithm.
  std::vector<int> indeg(ix(V), 0);
  for (const auto& e : P.edges) ++indeg[ix(e.to)];
  std::deque<int> queue;
  for (int v = 0; v < V; ++v)
    if (!indeg[ix(v)]) queue.push_back(v);
  P.rank.assign(ix(V), 0);
  int seen = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++seen;
    for (int eid : P.out_edges[ix(v)]) {
      const auto& e = P.edges[ix(eid)];
      P.rank[ix(e.to)] = std::max(P.rank[ix(e.to)], P.rank[ix(v)] + 1);
      if (--indeg[ix(e.to)] == 0) queue.push_back(e.to);
    }
  }
  if (seen != V) throw InternalError("weak order graph has a cycle for " + cs.describe());
  P.by_rank.resize(ix(V));
  for (int v = 0; v < V; ++v) P.by_rank[ix(v)] = v;
  std::stable_sort(P.by_rank.begin(), P.by_rank.end(),
                   [&](int a, int b) { return P.rank[ix(a)] < P.rank[ix(b)]; });
  for (int v = 0; v < V; ++v)
    if (P.out_edges[ix(v)].empty()) {
      if (P.top >= 0) throw InternalError("weak order has more than one maximal node for " + cs.describe());
      P.top = v;
    }
  return P;
}

void full_closure_order(OrbitPoset& P) {
  const std::size_t V = ix(P.size());
  P.down.assign(V, boost::dynamic_bitset<>(V));
  for (std::size_t v = 0; v < V; ++v) P.down[v].set(v);
  P.edge_disagreements = 0;
  P.saturation_rounds = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++P.saturation_rounds;
    for (int v : P.by_rank) {
      boost::dynamic_bitset<> acc = P.down[ix(v)];
      boost::dynamic_bitset<> first;
      for (std::size_t k = 0; k < P.in_edges[ix(v)].size(); ++k) {
        const auto& e = P.edges[ix(P.in_edges[ix(v)][k])];
        const auto& mv = P.moves[ix(e.root - 1)];
        // Tops reached by s from down(Q), then everything sharing a top.
        boost::dynamic_bitset<> tops(V);
        const auto& dq = P.down[ix(e.from)];
        for (auto z = dq.find_first(); z != boost::dynamic_bitset<>::npos; z = dq.find_next(z))
          tops.set(ix(mv[z]));
        boost::dynamic_bitset<> d(V);
        for (std::size_t z = 0; z < V; ++z)
          if (tops.test(ix(mv[z]))) d.set(z);
        d.set(ix(v));
        if (k == 0)
          first = d;
        else if (d != first)
          ++P.edge_disagreements;
        acc |= d;
      }
      if (acc != P.down[ix(v)]) {
        P.down[ix(v)] = std::move(acc);
        changed = true;
      }
    }
    if (P.saturation_rounds > static_cast<int>(V) + 2) throw InternalError("closure saturation did not converge");
  }
  // Must be a partial order: transitive and antisymmetric.
  for (std::size_t v = 0; v < V; ++v) {
    const auto& dv = P.down[v];
    for (auto u = dv.find_first(); u != boost::dynamic_bitset<>::npos; u = dv.find_next(u)) {
      if (!P.down[u].is_subset_of(dv)) throw InternalError("closure order is not transitive");
      if (u != v && P.down[u].test(v)) throw InternalError("closure order is not antisymmetric");
    }
  }
}

OrbitPoset build_poset(const CaseId& cs, int threads) {
  OrbitPoset P = weak_order_graph(cs, threads);
  full_closure_order(P);
  return P;
}

ConjectureReport check_conjecture(const OrbitPoset& P) {
  if (P.down.empty()) throw InputError("check_conjecture: closure order not computed");
  ConjectureReport r;
  std::vector<RankTable> tables;
  for (const auto& c : P.nodes) tables.push_back(rank_table(c));
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b) {
      const bool induced = leq(tables[ix(a)], tables[ix(b)]);
      const bool computed = P.below(a, b);
      r.induced_relations += induced;
      r.computed_relations += computed;
      if (induced && !computed) r.witnesses.emplace_back(P.nodes[ix(a)], P.nodes[ix(b)]);
      if (computed && !induced) r.violations.emplace_back(P.nodes[ix(a)], P.nodes[ix(b)]);
    }
  r.coincides = r.witnesses.empty() && r.violations.empty();
  return r;
}

double estimate_node_count(const CaseId& cs) {
  const int N = cs.ambient_length(), P = cs.ambient_p(), Q = cs.ambient_q();
  auto lf = [](int k) { return std::lgamma(static_cast<double>(k) + 1.0); };
  double total = 0;
  for (int k = 0; k <= std::min(P, Q); ++k)
    total += std::exp(lf(N) - lf(k) - k * std::log(2.0) - lf(P - k) - lf(Q - k));
  return total;
}

std::string OrbitPoset::dot() const {
  std::string out = "digraph orbits {\n  label=\"" + cs.group_name() + "\";\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int v = 0; v < size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + nodes[ix(v)].str() + "\"];\n";
  for (int r = 0; r <= max_rank(); ++r) {
    out += "  { rank=same;";
    for (int v : by_rank)
      if (rank[ix(v)] == r) out += " n" + std::to_string(v) + ";";
    out += " }\n";
  }
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.root) +
           "\"";
    if (e.degree == 2) out += ", color=blue";
    out += "];\n";
  }
  return out + "}\n";
}

std::string OrbitPoset::json() const {
  std::string out = "{\"case\":\"" + cs.selector() + "\",\"group\":\"" + cs.group_name() + "\",\"nodes\":[";
  for (int v = 0; v < size(); ++v) {
    if (v) out += ',';
    out += "{\"id\":" + std::to_string(v) + ",\"clan\":\"" + nodes[ix(v)].str() + "\",\"rank\":" +
           std::to_string(rank[ix(v)]) + "}";
  }
  out += "],\"edges\":[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (k) out += ',';
    out += "{\"from\":" + std::to_string(e.from) + ",\"to\":" + std::to_string(e.to) + ",\"root\":" +
           std::to_string(e.root) + ",\"degree\":" + std::to_string(e.degree) + "}";
  }
  out += "]";
  if (!down.empty()) {
    out += ",\"down\":{";
    for (int v = 0; v < size(); ++v) {
      if (v) out += ',';
      out += "\"" + nodes[ix(v)].str() + "\":[";
      bool first = true;
      for (int u = 0; u < size(); ++u)
        if (below(u, v)) {
          out += (first ? "\"" : ",\"") + nodes[ix(u)].str() + "\"";
          first = false;
        }
      out += "]";
    }
    out += "}";
  }
  return out + "}\n";
}

}  // namespace orbitcalc
