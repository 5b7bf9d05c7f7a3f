#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitcalc {

// Raised on malformed input (bad clan text, invalid parameters, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal consistency check fails.  Seeing one of these
// means a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class RootType { A, B, C, D };

enum class CaseTag {
  A_GLpq,           // (GL(n), GL(p) x GL(q))
  B_SO_OxO,         // (SO(2n+1), S(O(2p) x O(2q+1)))
  C_SpxSp,          // (Sp(2n), Sp(2p) x Sp(2q))
  C_Sp_GL,          // (Sp(2n), GL(n))
  D_SO_OevenxOeven, // (SO(2n), S(O(2p) x O(2q)))
  D_SO_GL,          // (SO(2n), GL(n))
  D_SO_OoddxOodd,   // (SO(2n), S(O(2p+1) x O(2q-1)))
};

// A symmetric pair together with its rank parameters.  For the two
// GL(n) cases p = q = n is stored.
struct CaseId {
  CaseTag tag = CaseTag::A_GLpq;
  int p = 0;
  int q = 0;

  static CaseId make(CaseTag tag, int p, int q);
  static CaseId make_n(CaseTag tag, int n);  // C_Sp_GL, D_SO_GL
  // Selector strings: a, b-so, c-spxsp, c-sp-gl, d-oxo-even, d-so-gl, d-oxo-odd.
  static CaseTag parse_selector(std::string_view s);

  int number() const;  // 1..7
  int n() const;       // rank of G
  RootType type() const;
  int ambient_length() const;
  int ambient_p() const;
  int ambient_q() const;
  bool uses_n_only() const;
  std::string selector() const;
  std::string group_name() const;  // e.g. "(Sp(4),GL(2))"
  std::string describe() const;

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

const char* selector_of(CaseTag tag);

}  // namespace orbitcalc
