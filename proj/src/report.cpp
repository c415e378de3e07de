#include "binoconv/report.hpp"

#include <json.hpp>

namespace binoconv {

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Eq1: return "eq1";
    case IdentityId::Thm1: return "thm1";
    case IdentityId::Eq3: return "eq3";
    case IdentityId::Eq4: return "eq4";
    case IdentityId::Lemma1: return "lemma1";
    case IdentityId::Lemma2: return "lemma2";
    case IdentityId::Lemma3: return "lemma3";
    case IdentityId::Thm2: return "thm2";
    case IdentityId::A3Forms: return "a3forms";
    case IdentityId::A4Forms: return "a4forms";
  }
  return "?";
}

const char* to_string(CheckMode mode) {
  return mode == CheckMode::Symbolic ? "symbolic" : "grid";
}

std::string IdentityReport::describe() const {
  std::string out = to_string(id);
  for (const auto& [name, value] : params) out += " " + name + "=" + to_string(value);
  if (mode) out += std::string(" mode=") + to_string(*mode);
  out += holds ? ": holds" : ": FAIL";
  if (!holds && witness) out += " (" + witness->where + ")";
  if (!note.empty()) out += " [" + note + "]";
  return out;
}

std::string IdentityReport::witness_json() const {
  if (holds || !witness) return "";
  nlohmann::ordered_json j;
  j["target"] = to_string(id);
  nlohmann::ordered_json p;
  for (const auto& [name, value] : params) p[name] = to_string(value);
  j["params"] = p;
  if (mode) j["mode"] = to_string(*mode);
  j["where"] = witness->where;
  j["lhs"] = witness->lhs;
  j["rhs"] = witness->rhs;
  return j.dump();
}

}  // namespace binoconv
