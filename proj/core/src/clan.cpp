#include "orbitcalc/clan.hpp"

#include <algorithm>
#include <map>

namespace orbitcalc {

Clan::Clan(std::vector<int> symbols) : sym_(std::move(symbols)) {
  const std::size_t n = sym_.size();
  mate_.assign(n, -1);
  std::map<int, int> first;   // raw label -> first position
  std::map<int, int> relabel; // raw label -> canonical label
  int next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sym_[i];
    if (s == kPlus) {
      ++plus_count_;
    } else if (s == kMinus) {
      ++minus_count_;
    } else if (s > 0) {
      auto it = first.find(s);
      if (it == first.end()) {
        first[s] = static_cast<int>(i);
        relabel[s] = next++;
      } else {
        if (it->second < 0) throw InputError("pair label occurs more than twice");
        mate_[i] = it->second;
        mate_[static_cast<std::size_t>(it->second)] = static_cast<int>(i);
        it->second = -1;
        ++pairs_;
      }
    } else {
      throw InputError("invalid clan symbol");
    }
  }
  for (const auto& [label, pos] : first)
    if (pos >= 0) throw InputError("pair label occurs only once");
  for (auto& s : sym_)
    if (s > 0) s = relabel[s];
}

std::size_t ClanHash::operator()(const Clan& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int s : c.symbols()) {
    h ^= static_cast<std::size_t>(s + 3);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Clan::str() const {
  std::string r;
  for (int s : sym_) {
    if (s == kPlus)
      r += '+';
    else if (s == kMinus)
      r += '-';
    else if (s < 10)
      r += static_cast<char>('0' + s);
    else
      r += "[" + std::to_string(s) + "]";
  }
  return r;
}

std::string Clan::json() const {
  std::string r = "{\"symbols\":[";
  for (std::size_t i = 0; i < sym_.size(); ++i) {
    if (i) r += ',';
    const int s = sym_[i];
    r += '"';
    r += s == kPlus ? "+" : s == kMinus ? "-" : std::to_string(s);
    r += '"';
  }
  r += "],\"p\":" + std::to_string(p()) + ",\"q\":" + std::to_string(q()) + "}";
  return r;
}

Clan Clan::reversed() const {
  std::vector<int> s(sym_.rbegin(), sym_.rend());
  return Clan(std::move(s));
}

Clan Clan::negated() const {
  std::vector<int> s = sym_;
  for (auto& x : s)
    if (x == kPlus)
      x = kMinus;
    else if (x == kMinus)
      x = kPlus;
  return Clan(std::move(s));
}

Clan parse_clan(std::string_view text) {
  std::vector<int> sym;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == '+') {
      sym.push_back(Clan::kPlus);
      ++i;
    } else if (ch == '-') {
      sym.push_back(Clan::kMinus);
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      sym.push_back(Clan::kMinus);
      i += 3;
    } else if (ch >= '1' && ch <= '9') {
      sym.push_back(ch - '0');
      ++i;
    } else if (ch == '[' || ch == '(') {
      const auto close = text.find(ch == '[' ? ']' : ')', i);
      if (close == std::string_view::npos || close == i + 1)
        throw InputError("malformed bracketed pair token in clan '" + std::string(text) + "'");
      int k = 0;
      for (std::size_t j = i + 1; j < close; ++j) {
        if (text[j] < '0' || text[j] > '9' || k > 100000)
          throw InputError("malformed bracketed pair token in clan '" + std::string(text) + "'");
        k = k * 10 + (text[j] - '0');
      }
      if (k < 1) throw InputError("pair label must be positive");
      sym.push_back(k);
      i = close + 1;
    } else if (ch == ' ' || ch == '\t') {
      ++i;
    } else {
      throw InputError("malformed token '" + std::string(1, static_cast<char>(ch)) + "' in clan '" +
                       std::string(text) + "'");
    }
  }
  if (sym.empty()) throw InputError("empty clan");
  try {
    return Clan(std::move(sym));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " in clan '" + std::string(text) + "'");
  }
}

Clan parse_clan(std::string_view text, int p, int q) {
  Clan c = parse_clan(text);
  if (c.p() != p || c.q() != q)
    throw InputError("clan '" + std::string(text) + "' is a (" + std::to_string(c.p()) + "," +
                     std::to_string(c.q()) + ")-clan, expected (" + std::to_string(p) + "," +
                     std::to_string(q) + ")");
  return c;
}

RankTable RankTable::zero(int n) {
  RankTable t;
  t.n = n;
  t.plus.assign(static_cast<std::size_t>(n + 1), 0);
  t.minus.assign(static_cast<std::size_t>(n + 1), 0);
  t.cross_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  return t;
}

RankTable rank_table(const Clan& c) {
  const int n = c.size();
  RankTable t = RankTable::zero(n);
  for (int i = 1; i <= n; ++i) {
    const int k = i - 1;
    int dp = 0, dm = 0;
    if (c.at(k) == Clan::kPlus) dp = 1;
    if (c.at(k) == Clan::kMinus) dm = 1;
    if (c.is_number(k) && c.mate(k) < k) dp = dm = 1;
    t.plus[static_cast<std::size_t>(i)] = t.plus[static_cast<std::size_t>(i - 1)] + dp;
    t.minus[static_cast<std::size_t>(i)] = t.minus[static_cast<std::size_t>(i - 1)] + dm;
  }
  // cross(i,j) = #pairs (s,t) with s <= i < j < t.
  for (int s0 = 0; s0 < n; ++s0) {
    if (!c.is_number(s0) || c.mate(s0) < s0) continue;
    const int s = s0 + 1, e = c.mate(s0) + 1;
    for (int i = s; i < e; ++i)
      for (int j = i + 1; j < e; ++j) ++t.cross(i, j);
  }
  return t;
}

Clan clan_from_rank_table(const RankTable& t) {
  const int n = t.n;
  if (n < 1 || static_cast<int>(t.plus.size()) != n + 1 || static_cast<int>(t.minus.size()) != n + 1)
    throw InputError("rank table has inconsistent sizes");
  std::vector<int> sym(static_cast<std::size_t>(n), 0);
  std::vector<int> open;  // positions (1-based) of unmatched first occurrences
  int next = 1;
  for (int i = 1; i <= n; ++i) {
    const int dp = t.plus[static_cast<std::size_t>(i)] - t.plus[static_cast<std::size_t>(i - 1)];
    const int dm = t.minus[static_cast<std::size_t>(i)] - t.minus[static_cast<std::size_t>(i - 1)];
    auto& s = sym[static_cast<std::size_t>(i - 1)];
    if (dp == 1 && dm == 0) {
      s = Clan::kPlus;
    } else if (dp == 0 && dm == 1) {
      s = Clan::kMinus;
    } else if (dp == 0 && dm == 0) {
      s = next++;
      open.push_back(i);
    } else if (dp == 1 && dm == 1) {
      // The mate is the first open i_l with cross(i_l, i) < l.
      int chosen = -1;
      for (std::size_t l = 0; l < open.size(); ++l) {
        const int il = open[l];
        if (t.cross(il, i) < static_cast<int>(l) + 1) {
          chosen = static_cast<int>(l);
          break;
        }
      }
      if (chosen < 0) throw InputError("inconsistent rank table: no mate for second occurrence");
      s = sym[static_cast<std::size_t>(open[static_cast<std::size_t>(chosen)] - 1)];
      open.erase(open.begin() + chosen);
    } else {
      throw InputError("inconsistent rank table: invalid jump");
    }
  }
  if (!open.empty()) throw InputError("inconsistent rank table: unmatched first occurrence");
  Clan c(std::move(sym));
  if (!(rank_table(c) == t)) throw InputError("inconsistent rank table: no clan realizes it");
  return c;
}

namespace {

void enumerate_rec(int n, std::vector<int>& cur, std::vector<int>& open, int a, int b, int next,
                   std::vector<Clan>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.emplace_back(cur);
    return;
  }
  const int o = static_cast<int>(open.size());
  if (a > 0) {
    cur.push_back(Clan::kPlus);
    enumerate_rec(n, cur, open, a - 1, b, next, out);
    cur.pop_back();
  }
  if (b > 0) {
    cur.push_back(Clan::kMinus);
    enumerate_rec(n, cur, open, a, b - 1, next, out);
    cur.pop_back();
  }
  // Close an open pair: labels ascend with position, so ascending label order
  // is ascending open-list order.
  for (int k = 0; k < o; ++k) {
    const int label = open[static_cast<std::size_t>(k)];
    open.erase(open.begin() + k);
    cur.push_back(label);
    enumerate_rec(n, cur, open, a, b, next, out);
    cur.pop_back();
    open.insert(open.begin() + k, label);
  }
  if (a > 0 && b > 0) {
    cur.push_back(next);
    open.push_back(next);
    enumerate_rec(n, cur, open, a - 1, b - 1, next + 1, out);
    open.pop_back();
    cur.pop_back();
  }
}

int mirror(int n, int i) { return n - 1 - i; }

bool mirror_structure(const Clan& c, bool skew) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    const int m = mirror(n, i);
    if (c.is_sign(i)) {
      if (!c.is_sign(m)) return false;
      if ((c.at(i) == c.at(m)) == skew) return false;
    } else {
      if (!c.is_number(m)) return false;
      if (c.mate(m) != mirror(n, c.mate(i))) return false;
    }
  }
  return true;
}

bool has_mirrored_pair(const Clan& c) {
  for (int i = 0; i < c.size(); ++i)
    if (c.is_number(i) && c.mate(i) == mirror(c.size(), i)) return true;
  return false;
}

}  // namespace

std::vector<Clan> enumerate_clans(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw InputError("enumerate_clans: need p,q >= 0, p+q >= 1");
  std::vector<Clan> out;
  std::vector<int> cur, open;
  cur.reserve(static_cast<std::size_t>(p + q));
  enumerate_rec(p + q, cur, open, p, q, 1, out);
  return out;
}

bool is_symmetric(const Clan& c) { return mirror_structure(c, false); }
bool is_skew_symmetric(const Clan& c) { return mirror_structure(c, true); }

bool in_case_family(const CaseId& cs, const Clan& c) {
  if (c.size() != cs.ambient_length() || c.p() != cs.ambient_p() || c.q() != cs.ambient_q())
    return false;
  switch (cs.tag) {
    case CaseTag::A_GLpq: return true;
    case CaseTag::B_SO_OxO:
    case CaseTag::D_SO_OevenxOeven:
    case CaseTag::D_SO_OoddxOodd: return is_symmetric(c);
    case CaseTag::C_SpxSp: return is_symmetric(c) && !has_mirrored_pair(c);
    case CaseTag::C_Sp_GL: return is_skew_symmetric(c);
    case CaseTag::D_SO_GL: {
      if (!is_skew_symmetric(c) || has_mirrored_pair(c)) return false;
      const auto t = rank_table(c);
      return t.minus[static_cast<std::size_t>(cs.n())] % 2 == 0;
    }
  }
  return false;
}

std::vector<Clan> enumerate_case_clans(const CaseId& cs) {
  auto all = enumerate_clans(cs.ambient_p(), cs.ambient_q());
  if (cs.tag == CaseTag::A_GLpq) return all;
  std::vector<Clan> out;
  for (auto& c : all)
    if (in_case_family(cs, c)) out.push_back(std::move(c));
  return out;
}

bool leq(const RankTable& a, const RankTable& b) {
  if (a.n != b.n) throw InputError("leq: clans of different length");
  for (int i = 1; i <= a.n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (a.plus[k] < b.plus[k] || a.minus[k] < b.minus[k]) return false;
  }
  for (int i = 1; i <= a.n; ++i)
    for (int j = i + 1; j <= a.n; ++j)
      if (a.cross(i, j) > b.cross(i, j)) return false;
  return true;
}

bool leq(const Clan& a, const Clan& b) {
  if (a.size() != b.size() || a.p() != b.p() || a.q() != b.q())
    throw InputError("leq: parameter mismatch between " + a.str() + " and " + b.str());
  return leq(rank_table(a), rank_table(b));
}

std::set<Clan> covering_successors(const Clan& c) {
  const int n = c.size();
  std::set<Clan> out;
  constexpr int A = 1001, B = 1002;  // fresh labels, canonicalized away
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    if (c.is_number(i) && c.mate(i) > i) pairs.emplace_back(i, c.mate(i));
  const auto& s0 = c.symbols();
  auto emit = [&](std::vector<int> s) { out.insert(Clan(std::move(s))); };

  // (1), (2): opposite signs -> pair.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.is_sign(i) && c.is_sign(j) && c.at(i) != c.at(j)) {
        auto s = s0;
        s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(j)] = A;
        emit(std::move(s));
      }
  for (auto [a, b] : pairs) {
    for (int k = 0; k < n; ++k) {
      if (!c.is_sign(k)) continue;
      // (3), (4): 11± -> 1±1.
      if (k > b) {
        auto s = s0;
        s[static_cast<std::size_t>(b)] = c.at(k);
        s[static_cast<std::size_t>(a)] = s[static_cast<std::size_t>(k)] = A;
        emit(std::move(s));
      }
      // (5), (6): ±11 -> 1±1.
      if (k < a) {
        auto s = s0;
        s[static_cast<std::size_t>(a)] = c.at(k);
        s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(b)] = A;
        emit(std::move(s));
      }
    }
  }
  for (auto [a, b] : pairs)
    for (auto [cc, d] : pairs) {
      auto put = [](std::vector<int>& s, int i, int v) { s[static_cast<std::size_t>(i)] = v; };
      if (b < cc) {  // 1122
        auto s = s0;
        put(s, a, A), put(s, cc, A), put(s, b, B), put(s, d, B);  // (7) 1212
        emit(s);
        put(s, a, A), put(s, d, A), put(s, b, Clan::kPlus), put(s, cc, Clan::kMinus);  // (8)
        emit(s);
        put(s, b, Clan::kMinus), put(s, cc, Clan::kPlus);  // (9)
        emit(s);
      }
      if (a < cc && cc < b && b < d) {  // 1212 at a < c < b < d
        auto s = s0;
        put(s, a, A), put(s, d, A), put(s, cc, B), put(s, b, B);  // (10) 1221
        emit(std::move(s));
      }
    }
  return out;
}

std::vector<int> underlying_involution(const Clan& c) {
  std::vector<int> w(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i)
    w[static_cast<std::size_t>(i)] = (c.is_number(i) ? c.mate(i) : i) + 1;
  return w;
}

}  // namespace orbitcalc
