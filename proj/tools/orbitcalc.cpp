#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orbitcalc/formulas.hpp"
#include "orbitcalc/geometry.hpp"

using namespace orbitcalc;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string selector;
  int p = -1, q = -1, n = -1;
  std::string format = "text";
  std::string output;
  bool factored = false;
  bool verify = false;
  int threads = 1;
  int delta_c0 = 2;
  double max_nodes = 50000;
  std::string clan;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CaseId make_case(const RunConfig& cfg) {
  const CaseTag tag = CaseId::parse_selector(cfg.selector);
  const bool by_n = tag == CaseTag::C_Sp_GL || tag == CaseTag::D_SO_GL;
  if (by_n) {
    if (cfg.n < 0) throw UsageError("case " + cfg.selector + " takes --n");
    if (cfg.p >= 0 || cfg.q >= 0) throw UsageError("case " + cfg.selector + " takes --n, not --p/--q");
    return CaseId::make_n(tag, cfg.n);
  }
  if (cfg.p < 0 || cfg.q < 0) throw UsageError("case " + cfg.selector + " takes --p and --q");
  if (cfg.n >= 0) throw UsageError("case " + cfg.selector + " takes --p/--q, not --n");
  return CaseId::make(tag, cfg.p, cfg.q);
}

FormulaOptions formula_options(const RunConfig& cfg) {
  return {cfg.delta_c0 == 1 ? DeltaC0::One : DeltaC0::Two, cfg.threads};
}

void guardrail(const RunConfig& cfg, const CaseId& cs) {
  const double est = estimate_node_count(cs);
  if (est > cfg.max_nodes)
    std::cerr << "warning: " << cs.describe() << " has about " << static_cast<long long>(est)
              << " orbits (cap " << static_cast<long long>(cfg.max_nodes) << "); this may take a while\n";
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format " + cfg.format + " is not supported by this command");
}

// ---- commands; each writes to `out` and returns an exit code ----

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  guardrail(cfg, cs);
  const auto clans = enumerate_case_clans(cs);
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["group"] = cs.group_name();
    j["count"] = clans.size();
    j["clans"] = ordered_json::array();
    for (const auto& c : clans) j["clans"].push_back({{"clan", c.str()}, {"closed", is_closed_clan(cs, c)}});
    out << j.dump(2) << "\n";
  } else {
    out << "# " << cs.describe() << ": " << clans.size() << " orbits\n";
    for (const auto& c : clans) out << c.str() << (is_closed_clan(cs, c) ? "  closed" : "") << "\n";
  }
  return kOk;
}

int cmd_poset(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"dot", "json", "text"});
  const CaseId cs = make_case(cfg);
  guardrail(cfg, cs);
  const OrbitPoset P = build_poset(cs, cfg.threads);
  if (cfg.format == "dot") {
    out << P.dot();
  } else if (cfg.format == "json") {
    out << P.json() << "\n";
  } else {
    out << "# " << cs.describe() << ": " << P.size() << " orbits, " << P.edges.size() << " weak edges\n";
    for (const auto& e : P.edges)
      out << P.nodes[static_cast<std::size_t>(e.from)].str() << " -> " << P.nodes[static_cast<std::size_t>(e.to)].str()
          << "  s" << e.root << (e.degree == 2 ? "  degree 2" : "") << "\n";
  }
  return kOk;
}

int report_localization(const CaseId& cs, const LocalizationReport& rep, std::ostream& err) {
  if (rep.ok()) return kOk;
  for (const auto& f : rep.failures)
    err << "localization failure: " << cs.describe() << " " << f.clan << " at " << f.point << ": " << f.what << "\n";
  return kVerifyFailed;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  guardrail(cfg, cs);
  const OrbitPoset P = build_poset(cs, cfg.threads);
  const ClassTable t = all_classes(P, formula_options(cfg));
  auto formula = [&](int v) {
    const auto& seed = t.closed[static_cast<std::size_t>(v)];
    return cfg.factored && seed ? seed->str() : t.classes[static_cast<std::size_t>(v)].str();
  };
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["group"] = cs.group_name();
    j["rows"] = ordered_json::array();
    for (int v = 0; v < P.size(); ++v)
      j["rows"].push_back({{"clan", P.nodes[static_cast<std::size_t>(v)].str()},
                           {"formula", formula(v)},
                           {"terms", ordered_json::parse(t.classes[static_cast<std::size_t>(v)].json())}});
    out << j.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& c : P.nodes) width = std::max(width, c.str().size());
    out << "# " << cs.describe() << "\n";
    for (int v = 0; v < P.size(); ++v) {
      const std::string c = P.nodes[static_cast<std::size_t>(v)].str();
      out << c << std::string(width - c.size(), ' ') << " | " << formula(v) << "\n";
    }
  }
  if (cfg.verify) return report_localization(cs, verify_localization(P, t, cfg.threads), std::cerr);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  guardrail(cfg, cs);
  const OrbitPoset P = build_poset(cs, cfg.threads);
  const ClassTable t = all_classes(P, formula_options(cfg));
  const LocalizationReport rep = verify_localization(P, t, cfg.threads);
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["orbits"] = P.size();
    j["path_checks"] = t.path_checks;
    j["path_checks_modulo_relations"] = t.path_checks_modulo_relations;
    j["closed_checks"] = rep.closed_checks;
    j["support_checks"] = rep.support_checks;
    j["dense_checks"] = rep.dense_checks;
    j["failures"] = ordered_json::array();
    for (const auto& f : rep.failures) j["failures"].push_back({{"clan", f.clan}, {"point", f.point}, {"what", f.what}});
    j["ok"] = rep.ok();
    out << j.dump(2) << "\n";
  } else {
    out << cs.describe() << "\n"
        << "  orbits:                 " << P.size() << "\n"
        << "  path checks:            " << t.path_checks << " (" << t.path_checks_modulo_relations
        << " modulo relations)\n"
        << "  closed-orbit checks:    " << rep.closed_checks << "\n"
        << "  support checks:         " << rep.support_checks << "\n"
        << "  dense-orbit checks:     " << rep.dense_checks << "\n"
        << "  result:                 " << (rep.ok() ? "ok" : "FAILED") << "\n";
  }
  return report_localization(cs, rep, std::cerr);
}

// Geometric oracle; type A only.
int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  if (cs.tag != CaseTag::A_GLpq) throw UsageError("the geometric oracle is only available for case a");
  const auto clans = enumerate_clans(cs.p, cs.q);
  std::vector<std::string> problems;
  std::size_t pairs = 0;
  for (const auto& g : clans) {
    const Flag f = representative_flag(g);
    if (measure_rank_numbers(f, cs.p, cs.q) != rank_table(g)) problems.push_back(g.str() + ": measured rank numbers differ");
    for (const auto& t : clans) {
      ++pairs;
      if (in_closure(f, t) != leq(g, t))
        problems.push_back(g.str() + " vs " + t.str() + ": geometric and combinatorial order disagree");
    }
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["clans"] = clans.size();
    j["pairs"] = pairs;
    j["problems"] = problems;
    j["ok"] = problems.empty();
    out << j.dump(2) << "\n";
  } else {
    out << cs.describe() << ": " << clans.size() << " clans, " << pairs << " pairs checked, "
        << (problems.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& s : problems) out << "  " << s << "\n";
  }
  return problems.empty() ? kOk : kVerifyFailed;
}

// Orders are expected to coincide for cases 1-4; a pair ordered by the
// computation but not by the induced order is always a failure.
int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  guardrail(cfg, cs);
  const OrbitPoset P = build_poset(cs, cfg.threads);
  const ConjectureReport rep = check_conjecture(P);
  const bool expect_coincidence = cs.number() <= 4;
  const bool ok = rep.violations.empty() && (!expect_coincidence || rep.coincides);
  auto pairs_json = [](const std::vector<std::pair<Clan, Clan>>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& [x, y] : v) a.push_back({x.str(), y.str()});
    return a;
  };
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["computed_relations"] = rep.computed_relations;
    j["induced_relations"] = rep.induced_relations;
    j["coincides"] = rep.coincides;
    j["witnesses"] = pairs_json(rep.witnesses);
    j["violations"] = pairs_json(rep.violations);
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << cs.describe() << "\n"
        << "  computed relations: " << rep.computed_relations << "\n"
        << "  induced relations:  " << rep.induced_relations << "\n"
        << "  orders coincide:    " << (rep.coincides ? "yes" : "no") << "\n";
    for (const auto& [x, y] : rep.witnesses) out << "  witness   " << x.str() << " < " << y.str() << "\n";
    for (const auto& [x, y] : rep.violations) out << "  violation " << x.str() << " < " << y.str() << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_chern(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const CaseId cs = make_case(cfg);
  if (cfg.clan.empty()) throw UsageError("chern needs --clan");
  guardrail(cfg, cs);
  const OrbitPoset P = build_poset(cs, cfg.threads);
  const Clan c = parse_clan(cfg.clan, cs.ambient_p(), cs.ambient_q());
  if (!in_case_family(cs, c)) throw UsageError("clan " + cfg.clan + " does not belong to " + cs.describe());
  const ClassTable t = all_classes(P, formula_options(cfg));
  const std::string f = chern_formula_str(P, t, c);
  if (cfg.format == "json") {
    ordered_json j;
    j["case"] = cs.selector();
    j["clan"] = c.str();
    j["formula"] = f;
    j["terms"] = ordered_json::parse(chern_formula(P, t, c).json());
    out << j.dump(2) << "\n";
  } else {
    out << f << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit closures on classical flag varieties, indexed by clans."};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.selector, "a, b-so, c-spxsp, c-sp-gl, d-oxo-even, d-so-gl, d-oxo-odd")->required();
    sub->add_option("--p", cfg.p, "rank parameter p");
    sub->add_option("--q", cfg.q, "rank parameter q");
    sub->add_option("--n", cfg.n, "rank for c-sp-gl and d-so-gl");
    sub->add_option("--format", cfg.format, "text, json or dot");
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->add_option("--threads", cfg.threads, "worker threads for per-orbit work")->check(CLI::PositiveNumber);
    sub->add_option("--delta-c0", cfg.delta_c0, "constant term of the Delta determinant")->check(CLI::IsMember({1, 2}));
    sub->add_option("--max-nodes", cfg.max_nodes, "warn when the estimated orbit count exceeds this");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"enumerate", "list the orbits (clans) of a case", cmd_enumerate},
      {"poset", "weak order graph and closure order (dot or json)", cmd_poset},
      {"classes", "equivariant classes of all orbit closures", cmd_classes},
      {"verify", "localization checks of the class table", cmd_verify},
      {"oracle", "geometric rank-number oracle (case a)", cmd_oracle},
      {"conjecture", "compare computed and induced closure orders", cmd_conjecture},
      {"chern", "degeneracy-locus formula for one clan", cmd_chern},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs.emplace_back(sub, &c);
  }
  for (auto& [sub, c] : subs) {
    if (std::string(c->name) == "classes") {
      sub->add_flag("--factored", cfg.factored, "print closed orbits in factored form");
      sub->add_flag("--verify", cfg.verify, "also run the localization checks");
    }
    if (std::string(c->name) == "chern") sub->add_option("--clan", cfg.clan, "clan of the locus")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Command* chosen = nullptr;
  for (auto& [sub, c] : subs)
    if (sub->parsed()) chosen = c;

  try {
    std::ostringstream buffer;
    const int code = chosen->run(cfg, buffer);
    if (cfg.output.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return kUsage;
      }
    }
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
