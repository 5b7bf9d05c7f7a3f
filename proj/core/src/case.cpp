#include "orbitcalc/case.hpp"

#include <array>

namespace orbitcalc {

namespace {

struct TagInfo {
  CaseTag tag;
  const char* selector;
};

constexpr std::array<TagInfo, 7> kTags{{
    {CaseTag::A_GLpq, "a"},
    {CaseTag::B_SO_OxO, "b-so"},
    {CaseTag::C_SpxSp, "c-spxsp"},
    {CaseTag::C_Sp_GL, "c-sp-gl"},
    {CaseTag::D_SO_OevenxOeven, "d-oxo-even"},
    {CaseTag::D_SO_GL, "d-so-gl"},
    {CaseTag::D_SO_OoddxOodd, "d-oxo-odd"},
}};

}  // namespace

const char* selector_of(CaseTag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t.selector;
  return "?";
}

CaseTag CaseId::parse_selector(std::string_view s) {
  for (const auto& t : kTags)
    if (s == t.selector) return t.tag;
  throw InputError("unknown case selector '" + std::string(s) + "'");
}

CaseId CaseId::make(CaseTag tag, int p, int q) {
  CaseId c{tag, p, q};
  auto bad = [&](const std::string& why) {
    throw InputError("invalid parameters for case " + std::string(selector_of(tag)) + ": " + why);
  };
  switch (tag) {
    case CaseTag::A_GLpq:
      if (p < 0 || q < 0 || p + q < 1) bad("need p,q >= 0 and p+q >= 1");
      break;
    case CaseTag::B_SO_OxO:
      if (p < 1 || q < 0) bad("need p >= 1, q >= 0");
      break;
    case CaseTag::C_SpxSp:
      if (p < 1 || q < 1) bad("need p,q >= 1");
      break;
    case CaseTag::D_SO_OevenxOeven:
      if (p < 1 || q < 1) bad("need p,q >= 1");
      break;
    case CaseTag::D_SO_OoddxOodd:
      if (p < 0 || q < 1 || p + q < 2) bad("need p >= 0, q >= 1, p+q >= 2");
      break;
    case CaseTag::C_Sp_GL:
      if (p != q || p < 1) bad("need n >= 1");
      break;
    case CaseTag::D_SO_GL:
      if (p != q || p < 2) bad("need n >= 2");
      break;
  }
  return c;
}

CaseId CaseId::make_n(CaseTag tag, int n) {
  if (tag != CaseTag::C_Sp_GL && tag != CaseTag::D_SO_GL)
    throw InputError("case " + std::string(selector_of(tag)) + " takes --p/--q, not --n");
  return make(tag, n, n);
}

bool CaseId::uses_n_only() const { return tag == CaseTag::C_Sp_GL || tag == CaseTag::D_SO_GL; }

int CaseId::number() const { return static_cast<int>(tag) + 1; }

int CaseId::n() const { return uses_n_only() ? p : p + q; }

RootType CaseId::type() const {
  switch (tag) {
    case CaseTag::A_GLpq: return RootType::A;
    case CaseTag::B_SO_OxO: return RootType::B;
    case CaseTag::C_SpxSp:
    case CaseTag::C_Sp_GL: return RootType::C;
    default: return RootType::D;
  }
}

int CaseId::ambient_length() const {
  switch (tag) {
    case CaseTag::A_GLpq: return p + q;
    case CaseTag::B_SO_OxO: return 2 * n() + 1;
    default: return 2 * n();
  }
}

int CaseId::ambient_p() const {
  switch (tag) {
    case CaseTag::A_GLpq: return p;
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL: return p;
    case CaseTag::D_SO_OoddxOodd: return 2 * p + 1;
    default: return 2 * p;
  }
}

int CaseId::ambient_q() const {
  switch (tag) {
    case CaseTag::A_GLpq: return q;
    case CaseTag::B_SO_OxO: return 2 * q + 1;
    case CaseTag::C_Sp_GL:
    case CaseTag::D_SO_GL: return q;
    case CaseTag::D_SO_OoddxOodd: return 2 * q - 1;
    default: return 2 * q;
  }
}

std::string CaseId::selector() const { return selector_of(tag); }

std::string CaseId::group_name() const {
  auto s = [](int k) { return std::to_string(k); };
  const int n = this->n();
  switch (tag) {
    case CaseTag::A_GLpq: return "(GL(" + s(n) + "),GL(" + s(p) + ")xGL(" + s(q) + "))";
    case CaseTag::B_SO_OxO:
      return "(SO(" + s(2 * n + 1) + "),S(O(" + s(2 * p) + ")xO(" + s(2 * q + 1) + ")))";
    case CaseTag::C_SpxSp: return "(Sp(" + s(2 * n) + "),Sp(" + s(2 * p) + ")xSp(" + s(2 * q) + "))";
    case CaseTag::C_Sp_GL: return "(Sp(" + s(2 * n) + "),GL(" + s(n) + "))";
    case CaseTag::D_SO_OevenxOeven:
      return "(SO(" + s(2 * n) + "),S(O(" + s(2 * p) + ")xO(" + s(2 * q) + ")))";
    case CaseTag::D_SO_GL: return "(SO(" + s(2 * n) + "),GL(" + s(n) + "))";
    case CaseTag::D_SO_OoddxOodd:
      return "(SO(" + s(2 * n) + "),S(O(" + s(2 * p + 1) + ")xO(" + s(2 * q - 1) + ")))";
  }
  return "?";
}

std::string CaseId::describe() const {
  std::string r = selector() + " ";
  if (uses_n_only())
    r += "n=" + std::to_string(n());
  else
    r += "p=" + std::to_string(p) + " q=" + std::to_string(q);
  return r + " " + group_name();
}

}  // namespace orbitcalc
