#ifndef BINOCONV_REPORT_HPP
#define BINOCONV_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binoconv/numeric.hpp"

namespace binoconv {

enum class IdentityId { Eq1, Thm1, Eq3, Eq4, Lemma1, Lemma2, Lemma3, Thm2, A3Forms, A4Forms };

enum class CheckMode { Symbolic, Grid };

const char* to_string(IdentityId id);
const char* to_string(CheckMode mode);

// The two sides that disagree, printed canonically, plus where they came from.
// Together with the report parameters this re-evaluates to the same inequality.
struct Witness {
  std::string where;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id{};
  std::vector<std::pair<std::string, Int>> params;  // ordered, e.g. {{"a",3},{"n",2}}
  std::optional<CheckMode> mode;
  bool holds = false;
  std::optional<Witness> witness;
  std::string note;

  // One verdict line, e.g. "thm1 a=2 n=4 mode=symbolic: holds".
  std::string describe() const;
  // Single-line JSON witness block; empty string when the check holds.
  std::string witness_json() const;
};

}  // namespace binoconv

#endif
