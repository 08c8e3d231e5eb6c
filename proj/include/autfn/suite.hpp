#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "autfn/endo.hpp"
#include "autfn/genexpr.hpp"
#include "autfn/matrix.hpp"

namespace autfn {

enum class Orientation { Left, Right, Both, Neither };
std::string to_string(Orientation o);

// Evaluates both g x g^{-1} (Left) and g^{-1} x g (Right) against expected.
// When g is an involution the two coincide and the result is Both.
Orientation sandwich_orientation(const Endo& g, const Endo& x, const Endo& expected);

// Same, but throws NoOrientationMatches instead of returning Neither.
Orientation check_orientation(const Endo& g, const Endo& x, const Endo& expected);
Orientation check_orientation(const GenExpr& g, const GenExpr& x, const GenExpr& expected,
                              int n);

enum class CheckStatus { Pass, Fail, Report };
std::string to_string(CheckStatus s);

// One matrix of the computed abelianization report: the same commutator
// abelianized through composition and through an independent per-letter
// substitution engine, compared against the reference matrix I + 2E21 in
// both row/column conventions.
struct ReportMatrix {
  std::string expr;
  IntMatrix by_compose;
  IntMatrix by_substitution;
  bool dual_path_agree = false;
  bool matches_reference = false;   // equals I + 2E21 as written
  bool matches_transposed = false;  // equals I + 2E12

  ReportMatrix() : by_compose(1), by_substitution(1) {}
};

struct IdentityOutcome {
  IdentityOutcome() = default;
  IdentityOutcome(std::string name_, std::string title_, std::string ranks_)
      : name(std::move(name_)), title(std::move(title_)), ranks(std::move(ranks_)) {}

  std::string name;   // catalog key, "R1".."R17"
  std::string title;
  std::string ranks;  // ranks the entry ran at, e.g. "3..6" or "3"
  CheckStatus status = CheckStatus::Pass;
  std::string orientation;  // "", "left", "right", "both"
  long cases = 0;
  std::string witness;  // first failure, empty otherwise
  std::vector<ReportMatrix> report;
};

struct SuiteReport {
  int rank_lo = 0;
  int rank_hi = 0;
  std::vector<IdentityOutcome> entries;

  long passed() const;
  long failed() const;
  long reports() const;
  bool all_passed() const { return failed() == 0; }
  const IdentityOutcome* find(const std::string& name) const;
};

// Runs the compiled-in catalog R1..R17 over ranks n_lo..n_hi (n_lo >= 3).
// Rank-pinned entries (R8, R9, R10, R16, R17 at 3; R7 from 4) run at their
// own ranks. Deterministic: two runs produce byte-identical reports.
SuiteReport run_suite(int n_lo, int n_hi);

std::string to_text(const SuiteReport& report);
nlohmann::json to_json(const SuiteReport& report);

// User suite files: one check per line as `name : LHS == RHS` with an
// optional trailing `[orient]`, `#` comments, and `n = <int>` directives
// selecting the rank for the following lines. Orientation lines need an
// LHS of the sandwich shape `g x g` or `g x g'`.
struct UserCheck {
  std::string name;
  int rank = 3;
  std::string lhs_text, rhs_text;
  bool orient = false;
};

std::vector<UserCheck> parse_user_suite(std::istream& in);
SuiteReport run_user_checks(const std::vector<UserCheck>& checks);

}  // namespace autfn
