#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitcalc/case.hpp"
#include "orbitcalc/clan.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

// The type-A operator s_i on a clan of any length: a complex ascent swaps
// c_i and c_{i+1}; opposite signs become a new pair; otherwise no change.
Clan ambient_move(const Clan& c, int i);

// s_{alpha_i} . Q_c for the case's simple root i (folded for cases 2-7).
Clan weak_move(const CaseId& cs, const Clan& c, int i);
// Degree of the edge c -> weak_move(c, i); requires the move to ascend.
int edge_degree(const CaseId& cs, const Clan& c, int i);

struct WeakEdge {
  int from = 0;
  int to = 0;
  int root = 0;    // simple root index of G
  int degree = 1;  // 2 for type II non-compact roots
};

struct OrbitPoset {
  CaseId cs;
  std::vector<Clan> nodes;  // enumeration order
  std::unordered_map<Clan, int, ClanHash> index;
  std::vector<WeakEdge> edges;
  std::vector<std::vector<int>> in_edges;   // edge ids per target
  std::vector<std::vector<int>> out_edges;  // edge ids per source
  std::vector<int> rank;                    // longest weak path from a closed orbit
  std::vector<int> by_rank;                 // node ids sorted by (rank, id)
  std::vector<std::vector<int>> moves;      // moves[s-1][v] = id of s.v
  int top = -1;                             // unique maximal node

  // Full closure order: down[v] = { u : u <= v }.  Empty until computed.
  std::vector<boost::dynamic_bitset<>> down;
  int saturation_rounds = 0;
  int edge_disagreements = 0;  // incoming edges predicting different down-sets

  int id(const Clan& c) const;
  int size() const { return static_cast<int>(nodes.size()); }
  int max_rank() const;
  bool below(int u, int v) const { return down[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(u)); }
  std::vector<int> minimal_nodes() const;

  std::string dot() const;
  std::string json() const;
};

OrbitPoset weak_order_graph(const CaseId& cs, int threads = 1);
void full_closure_order(OrbitPoset& poset);
OrbitPoset build_poset(const CaseId& cs, int threads = 1);  // both steps

struct ConjectureReport {
  bool coincides = false;
  std::vector<std::pair<Clan, Clan>> witnesses;   // induced-related but not computed-related
  std::vector<std::pair<Clan, Clan>> violations;  // computed-related but not induced (bug)
  std::size_t computed_relations = 0;
  std::size_t induced_relations = 0;
};

ConjectureReport check_conjecture(const OrbitPoset& poset);

// Rough node-count estimate for the desk-scale guardrail.
double estimate_node_count(const CaseId& cs);

}  // namespace orbitcalc
