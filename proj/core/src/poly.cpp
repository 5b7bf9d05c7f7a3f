#include "orbitcalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace orbitcalc {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

const char kVarChar[3] = {'x', 'y', 'z'};

}  // namespace

bool GrlexDesc::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::string rational_str(const mpq_class& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Polynomial::Polynomial(int n) : n_(n) {}

Polynomial::Polynomial(int n, const mpq_class& c) : n_(n) {
  if (c != 0) terms_.emplace(Exponent(ix(3 * n), 0), c);
}

Polynomial Polynomial::var(int n, VarKind k, int i) {
  if (i < 1 || i > n) throw InputError("variable index out of range");
  Polynomial p(n);
  Exponent e(ix(3 * n), 0);
  e[ix(static_cast<int>(k) * n + i - 1)] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

void Polynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

mpq_class Polynomial::constant_term() const {
  auto it = terms_.find(Exponent(ix(3 * n_), 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

bool Polynomial::uses(VarKind k) const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < n_; ++i)
      if (e[ix(static_cast<int>(k) * n_ + i)]) return true;
  return false;
}

Polynomial Polynomial::with_rank(int m) const {
  if (m == n_) return *this;
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Exponent f(ix(3 * m), 0);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < n_; ++i) {
        const auto v = e[ix(k * n_ + i)];
        if (!v) continue;
        if (i >= m) throw InputError("with_rank: variable index exceeds target rank");
        f[ix(k * m + i)] = v;
      }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) {
    const int m = std::max(n_, o.n_);
    if (n_ != m) *this = with_rank(m);
    return *this += o.with_rank(m);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) {
    const int m = std::max(a.n_, b.n_);
    return a.with_rank(m) * b.with_rank(m);
  }
  Polynomial r(a.n_);
  Exponent e(ix(3 * a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) {
    const int m = std::max(a.n_, b.n_);
    return a.with_rank(m).terms_ == b.with_rank(m).terms_;
  }
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r(n_, 1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  if (d.is_zero()) throw InternalError("division by the zero polynomial");
  if (d.n_ != n_) {
    const int m = std::max(n_, d.n_);
    return with_rank(m).exact_div(d.with_rank(m));
  }
  Polynomial rem = *this, quo(n_);
  const auto& [lead_e, lead_c] = *d.terms_.begin();
  Exponent e(ix(3 * n_));
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.begin();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (re[k] < lead_e[k]) throw InternalError("exact division failed: divisor does not divide");
      e[k] = static_cast<std::uint8_t>(re[k] - lead_e[k]);
    }
    Polynomial t(n_);
    t.terms_.emplace(e, rc / lead_c);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images) const {
  if (images.size() != ix(3 * n_)) throw InputError("substitute: image vector has the wrong size");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int k) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial(n_, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * *images[v]);
    return pw[ix(k)];
  };
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent kept(e.size(), 0);
    Polynomial term(n_, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (images[v])
        term *= power(v, e[v]);
      else
        kept[v] = e[v];
    }
    Polynomial mono(n_);
    mono.terms_.emplace(std::move(kept), 1);
    r += term * mono;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < n_; ++i) {
        const int v = e[ix(k * n_ + i)];
        if (!v) continue;
        if (!mono.empty()) mono += '*';
        mono += kVarChar[k] + std::to_string(i + 1);
        if (v > 1) mono += "^" + std::to_string(v);
      }
    const bool neg = c < 0;
    const mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += rational_str(a);
    else if (a == 1)
      out += mono;
    else
      out += rational_str(a) + "*" + mono;
  }
  return out;
}

std::string Polynomial::json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += ',';
    first = false;
    out += "{\"exps\":[";
    for (std::size_t k = 0; k < e.size(); ++k) out += (k ? "," : "") + std::to_string(e[k]);
    out += "],\"num\":" + c.get_num().get_str() + ",\"den\":" + c.get_den().get_str() + "}";
  }
  return out + "]";
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n) : s_(s), n_(n) {}

  Polynomial run() {
    Polynomial r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts(std::string_view w) {
    skip();
    return s_.substr(pos_, w.size()) == w;
  }
  mpz_class integer() {
    skip();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(b, pos_ - b)));
  }
  int small_int_braced() {
    if (eat('{')) {
      const auto v = integer();
      if (!eat('}')) fail("expected '}'");
      return static_cast<int>(v.get_si());
    }
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected digit");
    return s_[pos_++] - '0';
  }

  Polynomial expr() {
    Polynomial r(n_);
    bool first = true;
    while (true) {
      const char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        ++pos_;
        sign = c == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      Polynomial t = term();
      if (sign < 0)
        r -= t;
      else
        r += t;
    }
    return r;
  }

  bool factor_start() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(' ||
           c == '\\' || c == '{';
  }

  Polynomial term() {
    Polynomial r = factor();
    while (true) {
      if (eat('*')) {
        r *= factor();
      } else if (peek() == '/') {
        ++pos_;
        const mpz_class d = integer();
        if (d == 0) fail("division by zero");
        r *= mpq_class(1, d);
      } else if (factor_start()) {
        r *= factor();
      } else {
        break;
      }
    }
    return r;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(small_int_braced());
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '{') {
      ++pos_;
      Polynomial r = expr();
      if (!eat('}')) fail("expected '}'");
      return r;
    }
    if (c == '\\') {
      if (starts("\\frac")) {
        pos_ += 5;
        if (!eat('{')) fail("expected '{'");
        Polynomial num = expr();
        if (!eat('}') || !eat('{')) fail("malformed \\frac");
        Polynomial den = expr();
        if (!eat('}')) fail("malformed \\frac");
        if (!den.is_constant() || den.is_zero()) fail("\\frac denominator must be a nonzero constant");
        return num * mpq_class(1 / den.constant_term());
      }
      if (starts("\\left") || starts("\\right")) {
        pos_ += starts("\\left") ? 5 : 6;
        return atom();
      }
      fail("unknown command");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(integer());
      return Polynomial(n_, v);
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      const VarKind k = c == 'x' ? VarKind::X : c == 'y' ? VarKind::Y : VarKind::Z;
      int idx;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        idx = small_int_braced();
      } else {
        idx = static_cast<int>(integer().get_si());
      }
      if (idx < 1 || idx > n_) fail("variable index out of range");
      return Polynomial::var(n_, k, idx);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int n) { return Parser(text, n).run(); }

// ---------------------------------------------------------------- factored

Polynomial Factored::expand() const {
  Polynomial r(n, scalar);
  for (const auto& g : groups)
    for (const auto& f : g) r *= f;
  return r;
}

std::string Factored::str() const {
  if (scalar == 0) return "0";
  std::string monos, parens;
  for (const auto& g : groups)
    for (const auto& f : g) {
      const bool bare = f.terms().size() == 1 && f.terms().begin()->second == 1;
      if (bare) {
        if (!monos.empty()) monos += '*';
        monos += f.str();
      } else {
        parens += "(" + f.str() + ")";
      }
    }
  std::string body = monos + parens;
  std::string pre;
  if (scalar == -1)
    pre = "-";
  else if (scalar != 1)
    pre = rational_str(scalar) + (body.empty() ? "" : "*");
  if (body.empty()) return scalar == -1 ? "-1" : rational_str(scalar);
  return pre + body;
}

// ---------------------------------------------------------------- Weyl action

Polynomial act(const WeylElement& w, const Polynomial& f) {
  const int n = f.rank();
  if (w.n() != n) throw InputError("act: rank mismatch");
  Polynomial r(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    int odd = 0;
    for (int i = 1; i <= n; ++i) {
      const int v = w(i);
      const auto k = e[ix(i - 1)];
      g[ix(std::abs(v) - 1)] = k;
      if (v < 0) odd += k;
    }
    r.add_term(g, odd % 2 ? mpq_class(-c) : c);
  }
  return r;
}

Polynomial weyl_act(RootType type, int s_index, const Polynomial& f) {
  return act(simple_reflection(type, f.rank(), s_index), f);
}

Polynomial simple_root(RootType type, int n, int i) {
  if (i < 1 || i > simple_root_count(type, n)) throw InputError("invalid simple root index");
  if (i < n) return Polynomial::x(n, i) - Polynomial::x(n, i + 1);
  switch (type) {
    case RootType::B: return Polynomial::x(n, n);
    case RootType::C: return Polynomial::x(n, n) * mpq_class(2);
    default: return Polynomial::x(n, n - 1) + Polynomial::x(n, n);
  }
}

Polynomial divided_difference(RootType type, int s_index, const Polynomial& f) {
  const Polynomial diff = f - weyl_act(type, s_index, f);
  return diff.exact_div(simple_root(type, f.rank(), s_index));
}

Polynomial restrict_at(const CaseId& cs, const WeylElement& w, const Polynomial& f) {
  const int n = f.rank();
  if (w.n() != n) throw InputError("restrict_at: rank mismatch");
  if (f.uses(VarKind::Z)) throw InputError("restrict_at: polynomial contains z-variables");
  const int dead = cs.tag == CaseTag::D_SO_OoddxOodd ? cs.p + 1 : 0;
  Polynomial r(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent g(e.size(), 0);
    for (int i = 0; i < n; ++i) g[ix(n + i)] = e[ix(n + i)];
    int odd = 0;
    bool zero = false;
    for (int i = 1; i <= n; ++i) {
      const auto k = e[ix(i - 1)];
      if (!k) continue;
      const int v = w(i);
      if (std::abs(v) == dead) {
        zero = true;
        break;
      }
      g[ix(n + std::abs(v) - 1)] = static_cast<std::uint8_t>(g[ix(n + std::abs(v) - 1)] + k);
      if (v < 0) odd += k;
    }
    if (zero) continue;
    r.add_term(g, odd % 2 ? mpq_class(-c) : c);
  }
  return r;
}

Polynomial elem_sym(int k, const std::vector<Polynomial>& vars, int n) {
  if (k < 0) return Polynomial(n);
  // e[j] after processing a prefix of vars.
  std::vector<Polynomial> e(ix(k + 1), Polynomial(n));
  e[0] = Polynomial(n, 1);
  for (const auto& v : vars)
    for (int j = k; j >= 1; --j) e[ix(j)] += e[ix(j - 1)] * v;
  return e[ix(k)];
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> m, int n) {
  const std::size_t size = m.size();
  if (size == 0) return Polynomial(n, 1);
  if (size == 1) return m[0][0];
  Polynomial r(n);
  for (std::size_t j = 0; j < size; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < size; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < size; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial t = m[0][j] * determinant(std::move(minor), n);
    if (j % 2)
      r -= t;
    else
      r += t;
  }
  return r;
}

}  // namespace

Polynomial delta(int m, const WeylElement& w, int n, DeltaC0 c0) {
  if (m < 0 || m > n || w.n() != n) throw InputError("delta: invalid sizes");
  const WeylElement winv = w.inverse();
  std::vector<Polynomial> xs, ys;
  for (int i = 1; i <= n; ++i) {
    const int v = winv(i);
    Polynomial xv = Polynomial::x(n, std::abs(v));
    xs.push_back(v < 0 ? -xv : xv);
    ys.push_back(Polynomial::y(n, i));
  }
  auto c = [&](int k) -> Polynomial {
    if (k < 0 || k > n) return Polynomial(n);
    if (k == 0) return Polynomial(n, static_cast<int>(c0));
    return elem_sym(k, xs, n) + elem_sym(k, ys, n);
  };
  std::vector<std::vector<Polynomial>> mat(ix(m), std::vector<Polynomial>(ix(m), Polynomial(n)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) mat[ix(i - 1)][ix(j - 1)] = c(m + 1 + j - 2 * i);
  return determinant(std::move(mat), n);
}

Polynomial chern_substitute(const Polynomial& f, const std::vector<ChernBlock>& blocks) {
  const int n = f.rank();
  Polynomial cur = f;
  for (const auto& b : blocks) {
    const int len = static_cast<int>(b.y.size());
    if (static_cast<int>(b.z.size()) != len) throw InputError("chern block: y and z lists differ in size");
    std::vector<Polynomial> yv;
    for (int i : b.y) yv.push_back(Polynomial::y(n, i));
    std::vector<Polynomial> e;
    for (int j = 1; j <= len; ++j) e.push_back(elem_sym(j, yv, n));
    auto block_exp = [&](const Exponent& ex) {
      std::vector<int> a;
      for (int i : b.y) a.push_back(ex[ix(n + i - 1)]);
      return a;
    };
    Polynomial rest = cur, out(n);
    while (!rest.is_zero()) {
      // Lex-largest block exponent among the remaining terms.
      std::vector<int> best;
      for (const auto& [ex, c] : rest.terms()) {
        auto a = block_exp(ex);
        if (best.empty() || a > best) best = a;
      }
      for (int j = 0; j + 1 < len; ++j)
        if (best[ix(j)] < best[ix(j + 1)])
          throw InputError("polynomial is not symmetric in the block of y-variables");
      // Coefficient polynomial (block variables stripped) of y^best.
      Polynomial coeff(n);
      for (const auto& [ex, c] : rest.terms())
        if (block_exp(ex) == best) {
          Exponent g = ex;
          for (int i : b.y) g[ix(n + i - 1)] = 0;
          coeff.add_term(g, c);
        }
      Polynomial prod_e(n, 1), prod_z(n, 1);
      for (int j = 1; j <= len; ++j) {
        const int mult = best[ix(j - 1)] - (j < len ? best[ix(j)] : 0);
        if (mult > 0) {
          prod_e *= e[ix(j - 1)].pow(mult);
          prod_z *= Polynomial::z(n, b.z[ix(j - 1)]).pow(mult);
        }
      }
      rest -= coeff * prod_e;
      out += coeff * prod_z;
    }
    cur = out;
  }
  return cur;
}

Polynomial chern_expand(const Polynomial& f, const std::vector<ChernBlock>& blocks) {
  const int n = f.rank();
  std::vector<std::optional<Polynomial>> images(ix(3 * n));
  for (const auto& b : blocks) {
    std::vector<Polynomial> yv;
    for (int i : b.y) yv.push_back(Polynomial::y(n, i));
    for (std::size_t j = 0; j < b.z.size(); ++j)
      images[ix(2 * n + b.z[j] - 1)] = elem_sym(static_cast<int>(j) + 1, yv, n);
  }
  return f.substitute(images);
}

}  // namespace orbitcalc
