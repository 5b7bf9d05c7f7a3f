#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcalc/case.hpp"
#include "orbitcalc/weyl.hpp"

namespace orbitcalc {

// Exponent vector over x_1..x_n, y_1..y_n, z_1..z_n (dense, width 3n).
using Exponent = std::vector<std::uint8_t>;

// Graded lexicographic, largest first; this is both the storage order and
// the print order.
struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

enum class VarKind { X = 0, Y = 1, Z = 2 };

class Polynomial {
 public:
  using Terms = std::map<Exponent, mpq_class, GrlexDesc>;

  explicit Polynomial(int n = 0);
  Polynomial(int n, const mpq_class& c);

  static Polynomial var(int n, VarKind k, int i);  // 1-based index
  static Polynomial x(int n, int i) { return var(n, VarKind::X, i); }
  static Polynomial y(int n, int i) { return var(n, VarKind::Y, i); }
  static Polynomial z(int n, int i) { return var(n, VarKind::Z, i); }

  // Accepts e.g. "x1^2 - x1*z3 + z4", "(x_1-y_3)(x_1+y_{4})", "1/2*(x1+x2)",
  // "\frac{1}{2}(x_1+x_2)".  Variables must have index <= n.
  static Polynomial parse(std::string_view text, int n);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool uses(VarKind k) const;

  Polynomial with_rank(int m) const;  // re-embed in a ring of rank m >= used indices

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int k) const;

  // Exact quotient; throws InternalError if d does not divide *this.
  Polynomial exact_div(const Polynomial& d) const;

  // Replace variable v by *images[v] where set (images.size() == 3n).
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images) const;

  std::string str() const;
  std::string json() const;

  void add_term(const Exponent& e, const mpq_class& c);

 private:
  int n_ = 0;
  Terms terms_;
};

// A product scalar * prod_g prod_f factors[g][f], kept as built so that
// closed-orbit formulas can be printed in the factored style.  Factors are
// grouped (e.g. per x-variable) so that block-symmetric groups can be
// rewritten separately.
struct Factored {
  mpq_class scalar = 1;
  std::vector<std::vector<Polynomial>> groups;
  int n = 0;

  Polynomial expand() const;
  std::string str() const;
};

// The signed action x_i -> sign(w(i)) x_{|w(i)|}; y, z untouched.
Polynomial act(const WeylElement& w, const Polynomial& f);
Polynomial weyl_act(RootType type, int s_index, const Polynomial& f);
Polynomial simple_root(RootType type, int n, int s_index);
Polynomial divided_difference(RootType type, int s_index, const Polynomial& f);

// x_i -> sign(w(i)) y_{|w(i)|}; in case 7 y_{p+1} restricts to zero.
Polynomial restrict_at(const CaseId& cs, const WeylElement& w, const Polynomial& f);

Polynomial elem_sym(int k, const std::vector<Polynomial>& vars, int n);

// Constant term convention for the Delta determinant.
enum class DeltaC0 { One = 1, Two = 2 };

// det(c_{m+1+j-2i})_{1<=i,j<=m} with c_k = e_k(signed x_{w^{-1}(1..n)}) +
// e_k(y_1..y_n), c_k = 0 outside [0, n], and c_0 = 2 by default.
Polynomial delta(int m, const WeylElement& w, int n, DeltaC0 c0 = DeltaC0::Two);

struct ChernBlock {
  std::vector<int> y;  // 1-based y indices
  std::vector<int> z;  // 1-based z indices; z[j-1] stands for e_j(block)
};

// Rewrites each block's elementary symmetric polynomials as z-variables.
// Throws InputError if f is not symmetric in some block.
Polynomial chern_substitute(const Polynomial& f, const std::vector<ChernBlock>& blocks);
// Inverse: z[j-1] -> e_j(y in block).
Polynomial chern_expand(const Polynomial& f, const std::vector<ChernBlock>& blocks);

std::string rational_str(const mpq_class& c);

}  // namespace orbitcalc
