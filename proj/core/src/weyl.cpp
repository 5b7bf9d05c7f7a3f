#include "orbitcalc/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace orbitcalc {

namespace {

int sgn(int v) { return v < 0 ? -1 : 1; }

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

WeylElement WeylElement::identity(RootType type, int n) {
  WeylElement w{type, std::vector<int>(ix(n))};
  std::iota(w.values.begin(), w.values.end(), 1);
  return w;
}

WeylElement WeylElement::parse(std::string_view text, RootType type) {
  WeylElement w{type, {}};
  const bool commas = text.find(',') != std::string_view::npos;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw InputError("malformed signed permutation '" + std::string(text) + "'");
    int v = 0;
    if (commas) {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
    } else {
      v = text[i++] - '0';
    }
    w.values.push_back(sign * v);
    skip_ws();
    if (commas && i < text.size()) {
      if (text[i] != ',') throw InputError("malformed signed permutation '" + std::string(text) + "'");
      ++i;
    }
  }
  if (!w.valid())
    throw InputError("'" + std::string(text) + "' is not a valid Weyl group element of this type");
  return w;
}

std::string WeylElement::str() const {
  std::string r;
  const bool commas = n() >= 10;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (commas && i) r += ',';
    r += std::to_string(values[i]);
  }
  return r;
}

bool WeylElement::valid() const {
  std::vector<bool> seen(values.size() + 1, false);
  int negs = 0;
  for (int v : values) {
    const int a = std::abs(v);
    if (a < 1 || a > n() || seen[ix(a)]) return false;
    seen[ix(a)] = true;
    if (v < 0) ++negs;
  }
  if (type == RootType::A && negs > 0) return false;
  if (type == RootType::D && negs % 2 != 0) return false;
  return true;
}

WeylElement WeylElement::inverse() const {
  WeylElement r{type, std::vector<int>(values.size())};
  for (int i = 1; i <= n(); ++i) {
    const int v = (*this)(i);
    r.values[ix(std::abs(v) - 1)] = sgn(v) * i;
  }
  return r;
}

WeylElement operator*(const WeylElement& u, const WeylElement& w) {
  WeylElement r{w.type, std::vector<int>(w.values.size())};
  for (int i = 1; i <= w.n(); ++i) {
    const int v = w(i);
    r.values[ix(i - 1)] = sgn(v) * u(std::abs(v));
  }
  return r;
}

Perm embed_in_ambient(const WeylElement& w, bool odd) {
  const int n = w.n();
  const int N = odd ? 2 * n + 1 : 2 * n;
  Perm s(ix(N));
  for (int i = 1; i <= n; ++i) {
    const int v = w(i);
    const int si = v > 0 ? v : N + 1 - std::abs(v);
    s[ix(i - 1)] = si;
    s[ix(N - i)] = N + 1 - si;
  }
  if (odd) s[ix(n)] = n + 1;
  return s;
}

Perm abs_perm(const WeylElement& w) {
  Perm r(w.values.size());
  std::transform(w.values.begin(), w.values.end(), r.begin(), [](int v) { return std::abs(v); });
  return r;
}

std::set<int> neg_set(const WeylElement& w) {
  std::set<int> r;
  for (int i = 1; i <= w.n(); ++i)
    if (w(i) < 0) r.insert(i);
  return r;
}

int stat_lp(const Perm& w, int p) {
  int count = 0;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[ix(j)] <= p && p < w[ix(i)]) ++count;
  return count;
}

int stat_phip(const WeylElement& w, int p) {
  int count = 0;
  for (int v : w.values)
    if (v < 0 && -v <= p) ++count;
  return count;
}

int stat_psi(const WeylElement& w) { return static_cast<int>(neg_set(w).size()); }

int stat_sigma(const WeylElement& w) {
  int s = 0;
  for (int i : neg_set(w)) s += w.n() - i;
  return s;
}

int stat_tau(const WeylElement& w, int p) {
  const int n = w.n();
  int tau = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (w(i) <= p + 1) continue;
    for (int j = i + 1; j <= n - 1; ++j)
      if (w(j) <= p) ++tau;
  }
  return tau;
}

namespace {

// All signed permutations of n acting on the given value blocks separately;
// keep(u) filters.
template <class Keep>
std::vector<WeylElement> block_signed_perms(RootType type, int n, const std::vector<std::vector<int>>& blocks,
                                            bool allow_signs, Keep keep) {
  std::vector<WeylElement> out;
  // Build the unsigned block-preserving permutations first.
  std::vector<Perm> perms{Perm(ix(n))};
  for (int i = 0; i < n; ++i) perms[0][ix(i)] = i + 1;
  for (const auto& b : blocks) {
    std::vector<Perm> next;
    for (const auto& base : perms) {
      std::vector<int> img = b;
      do {
        Perm u = base;
        for (std::size_t k = 0; k < b.size(); ++k) u[ix(b[k] - 1)] = img[k];
        next.push_back(std::move(u));
      } while (std::next_permutation(img.begin(), img.end()));
    }
    perms = std::move(next);
  }
  const unsigned masks = allow_signs ? (1u << n) : 1u;
  for (const auto& u : perms)
    for (unsigned m = 0; m < masks; ++m) {
      WeylElement w{type, u};
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) w.values[ix(i)] = -w.values[ix(i)];
      if (keep(w)) out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> range(int a, int b) {  // [a, b]
  std::vector<int> r;
  for (int i = a; i <= b; ++i) r.push_back(i);
  return r;
}

// Number of sign changes u makes on the values in [a, b].
int signs_on(const WeylElement& u, int a, int b) {
  int c = 0;
  for (int i = a; i <= b; ++i)
    if (u(i) < 0) ++c;
  return c;
}

bool preserves_block(const WeylElement& u, int a, int b) {
  for (int i = a; i <= b; ++i) {
    const int v = std::abs(u(i));
    if (v < a || v > b) return false;
  }
  return true;
}

}  // namespace

std::vector<WeylElement> weyl_group(RootType type, int n) {
  return block_signed_perms(type, n, {range(1, n)}, type != RootType::A,
                            [](const WeylElement& w) { return w.valid(); });
}

int simple_root_count(RootType type, int n) { return type == RootType::A ? n - 1 : n; }

WeylElement simple_reflection(RootType type, int n, int i) {
  if (i < 1 || i > simple_root_count(type, n))
    throw InputError("invalid simple root index " + std::to_string(i));
  WeylElement s = WeylElement::identity(type, n);
  if (i < n) {
    std::swap(s.values[ix(i - 1)], s.values[ix(i)]);
  } else if (type == RootType::D) {
    s.values[ix(n - 2)] = -n;
    s.values[ix(n - 1)] = -(n - 1);
  } else {
    s.values[ix(n - 1)] = -n;
  }
  return s;
}

bool wk_member(const CaseId& cs, const WeylElement& w) {
  const int n = cs.n(), p = cs.p;
  if (w.n() != n) return false;
  const RootType t = cs.type();
  if (!WeylElement{t, w.values}.valid()) return false;
  switch (cs.tag) {
    case CaseTag::A_GLpq: return preserves_block(w, 1, p);
    case CaseTag::B_SO_OxO: return preserves_block(w, 1, p) && signs_on(w, 1, p) % 2 == 0;
    case CaseTag::C_SpxSp: return preserves_block(w, 1, p);
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL: return neg_set(w).empty();
    case CaseTag::D_SO_OevenxOeven:
      return preserves_block(w, 1, p) && signs_on(w, 1, p) % 2 == 0 && signs_on(w, p + 1, n) % 2 == 0;
    case CaseTag::D_SO_OoddxOodd:
      return preserves_block(w, 1, p) && std::abs(w(p + 1)) == p + 1;
  }
  return false;
}

std::vector<WeylElement> wk_elements(const CaseId& cs) {
  const int n = cs.n(), p = cs.p;
  std::vector<std::vector<int>> blocks;
  switch (cs.tag) {
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL: blocks = {range(1, n)}; break;
    case CaseTag::D_SO_OoddxOodd: blocks = {range(1, p), {p + 1}, range(p + 2, n)}; break;
    default: blocks = {range(1, p), range(p + 1, n)};
  }
  const RootType t = cs.type();
  return block_signed_perms(t, n, blocks, t != RootType::A,
                            [&](const WeylElement& u) { return wk_member(cs, u); });
}

std::vector<WeylElement> orbit_stabilizer_group(const CaseId& cs) {
  const int n = cs.n(), p = cs.p;
  const RootType t = cs.type();
  if (cs.tag == CaseTag::B_SO_OxO || cs.tag == CaseTag::D_SO_OevenxOeven)
    return block_signed_perms(t, n, {range(1, p), range(p + 1, n)}, true,
                              [](const WeylElement& u) { return u.valid(); });
  return wk_elements(cs);
}

bool is_closed_clan(const CaseId& cs, const Clan& c) {
  if (!in_case_family(cs, c)) return false;
  if (cs.tag != CaseTag::D_SO_OoddxOodd) return !c.has_pairs();
  const int n = cs.n();
  return c.pair_count() == 1 && c.is_number(n - 1) && c.mate(n - 1) == n;
}

std::vector<Clan> closed_clans(const CaseId& cs) {
  std::vector<Clan> out;
  for (auto& c : enumerate_case_clans(cs))
    if (is_closed_clan(cs, c)) out.push_back(std::move(c));
  return out;
}

WeylElement distinguished_representative(const CaseId& cs, const Clan& c) {
  if (!is_closed_clan(cs, c))
    throw InputError("clan " + c.str() + " is not a closed orbit of case " + cs.describe());
  const int n = cs.n(), p = cs.p;
  WeylElement w{cs.type(), std::vector<int>(ix(n))};
  switch (cs.tag) {
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL:
      for (int i = 1; i <= n; ++i) w.values[ix(i - 1)] = c.at(i - 1) == Clan::kPlus ? i : -i;
      break;
    case CaseTag::D_SO_OoddxOodd: {
      int plus = 1, minus = p + 2;
      for (int i = 1; i <= n - 1; ++i) w.values[ix(i - 1)] = c.at(i - 1) == Clan::kPlus ? plus++ : minus++;
      w.values[ix(n - 1)] = p + 1;
      break;
    }
    default: {
      int plus = 1, minus = p + 1;
      for (int i = 1; i <= n; ++i) w.values[ix(i - 1)] = c.at(i - 1) == Clan::kPlus ? plus++ : minus++;
    }
  }
  return w;
}

FixedPointSet closed_orbit_fixed_points(const CaseId& cs, const Clan& c) {
  FixedPointSet r{distinguished_representative(cs, c), {}};
  for (const auto& u : orbit_stabilizer_group(cs)) r.all.push_back(u * r.distinguished);
  std::sort(r.all.begin(), r.all.end());
  return r;
}

bool in_closed_orbit(const CaseId& cs, const WeylElement& w) {
  if (cs.tag != CaseTag::D_SO_OoddxOodd) return true;
  return std::abs(w(cs.n())) == cs.p + 1;
}

Clan fixed_point_to_clan(const CaseId& cs, const WeylElement& w) {
  const int n = cs.n(), p = cs.p;
  if (w.n() != n) throw InputError("fixed point has the wrong rank");
  if (cs.tag == CaseTag::A_GLpq) {
    std::vector<int> s;
    for (int v : w.values) s.push_back(v <= p ? Clan::kPlus : Clan::kMinus);
    return Clan(std::move(s));
  }
  const int N = cs.ambient_length();
  std::vector<int> s(ix(N), 0);
  const bool skew = cs.tag == CaseTag::C_Sp_GL || cs.tag == CaseTag::D_SO_GL;
  int half = n;
  if (cs.tag == CaseTag::D_SO_OoddxOodd) {
    if (!in_closed_orbit(cs, w))
      throw InputError("fixed-point dictionary for case 7 only covers closed orbits (|w(n)| = p+1)");
    half = n - 1;
    s[ix(n - 1)] = s[ix(n)] = 1;
  }
  for (int i = 1; i <= half; ++i) {
    const bool plus = skew ? w(i) > 0 : std::abs(w(i)) <= p;
    const int a = plus ? Clan::kPlus : Clan::kMinus;
    const int b = skew ? (plus ? Clan::kMinus : Clan::kPlus) : a;
    s[ix(i - 1)] = a;
    s[ix(N - i)] = b;
  }
  if (cs.tag == CaseTag::B_SO_OxO) s[ix(n)] = Clan::kMinus;
  return Clan(std::move(s));
}

Clan cross_action(const CaseId& cs, const Clan& c, const WeylElement& w) {
  Perm sigma = cs.tag == CaseTag::A_GLpq ? abs_perm(w) : embed_in_ambient(w, cs.type() == RootType::B);
  if (static_cast<int>(sigma.size()) != c.size()) throw InputError("cross action: size mismatch");
  std::vector<int> s(ix(c.size()));
  for (int i = 0; i < c.size(); ++i) s[ix(sigma[ix(i)] - 1)] = c.at(i);
  return Clan(std::move(s));
}

std::vector<Root> positive_roots(RootType type, int n) {
  std::vector<Root> out;
  auto make = [n](int i, int a, int j, int b) {
    Root r(ix(n), 0);
    r[ix(i)] += a;
    if (j >= 0) r[ix(j)] += b;
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(make(i, 1, j, -1));
      if (type != RootType::A) out.push_back(make(i, 1, j, 1));
    }
  if (type == RootType::B)
    for (int i = 0; i < n; ++i) out.push_back(make(i, 1, -1, 0));
  if (type == RootType::C)
    for (int i = 0; i < n; ++i) out.push_back(make(i, 2, -1, 0));
  return out;
}

std::vector<Root> k_roots(const CaseId& cs) {
  const int n = cs.n(), p = cs.p;
  std::vector<Root> out;
  auto add = [&](int i, int a, int j, int b) {  // adds +r and -r; 1-based indices, j = 0 for none
    Root r(ix(n), 0);
    r[ix(i - 1)] += a;
    if (j > 0) r[ix(j - 1)] += b;
    out.push_back(r);
    for (auto& v : r) v = -v;
    out.push_back(std::move(r));
  };
  auto same_block = [&](int i, int j) { return (i <= p) == (j <= p); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      switch (cs.tag) {
        case CaseTag::A_GLpq:
          if (same_block(i, j)) add(i, 1, j, -1);
          break;
        case CaseTag::B_SO_OxO:
        case CaseTag::C_SpxSp:
        case CaseTag::D_SO_OevenxOeven:
          if (same_block(i, j)) add(i, 1, j, -1), add(i, 1, j, 1);
          break;
        case CaseTag::C_Sp_GL:
        case CaseTag::D_SO_GL: add(i, 1, j, -1); break;
        case CaseTag::D_SO_OoddxOodd:
          if ((j <= p) || (i > p + 1)) add(i, 1, j, -1), add(i, 1, j, 1);
          break;
      }
    }
  for (int i = 1; i <= n; ++i) {
    if (cs.tag == CaseTag::B_SO_OxO && i > p) add(i, 1, 0, 0);
    if (cs.tag == CaseTag::C_SpxSp) add(i, 2, 0, 0);
    if (cs.tag == CaseTag::D_SO_OoddxOodd && i != p + 1) add(i, 1, 0, 0);
  }
  return out;
}

Root act_on_root(const WeylElement& w, const Root& r) {
  Root out(r.size(), 0);
  for (int i = 1; i <= w.n(); ++i) out[ix(std::abs(w(i)) - 1)] += sgn(w(i)) * r[ix(i - 1)];
  return out;
}

Root restrict_root(const CaseId& cs, const Root& r) {
  Root out = r;
  if (cs.tag == CaseTag::D_SO_OoddxOodd) out[ix(cs.p)] = 0;
  return out;
}

std::vector<Root> restriction_weights(const CaseId& cs, const WeylElement& w) {
  std::map<Root, int> kmult;
  for (auto& r : k_roots(cs)) ++kmult[r];
  std::vector<Root> out;
  for (const auto& a : positive_roots(cs.type(), cs.n())) {
    Root r = restrict_root(cs, act_on_root(w, a));
    auto it = kmult.find(r);
    if (it != kmult.end() && it->second > 0) {
      --it->second;
      continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace orbitcalc
