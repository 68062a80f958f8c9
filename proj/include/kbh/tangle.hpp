#pragma once

#include "kbh/beta.hpp"
#include "kbh/mma.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kbh {

enum class CrossingKind { positive, negative, virtual_ };

/// A classical crossing: the over strand acts on the under strand.
/// For a virtual crossing over/under are just the two strands.
struct Crossing {
  CrossingKind kind;
  Letter over, under;
  int line = 0;
};

/// dm^{a b}_c: the end of strand a is joined to the start of strand b.
struct SewStep {
  Letter a, b, c;
  int line = 0;
};

struct Tangle {
  std::vector<Crossing> crossings;
  /// Strands with no crossing on them.
  std::vector<Letter> strands;
  std::vector<SewStep> plan;
  /// Labels expected to remain after the plan, when declared.
  std::optional<std::vector<Letter>> open;
};

/// Text format, one statement per line, '#' starts a comment:
///   X+ over under | X- over under | V a b | strand a | sew a b c | open a ...
/// Input whose first non-blank character is '{' is read as JSON instead.
/// Errors are ParseError with the offending line (or JSON item).
Tangle parse_tangle(std::string_view text);
/// Reads a file and parses it; a missing file is a ParseError too.
Tangle load_tangle(const std::string& path);

/// Labels alive after the plan, in order of appearance.
std::vector<Letter> final_strands(const Tangle& t);

MMAElement delta_crossing(const Crossing& c, int degree);
/// Entry t^{+-1} - 1 in the variable of the over strand, or in `variable`.
BetaElement beta_crossing(const Crossing& c, std::optional<Letter> variable = std::nullopt);
MMAElement zeta_of_tangle(const Tangle& t, int degree);
/// Every strand's variable is replaced from the start by the variable of the
/// strand it is sewn into at the end of the plan. The substitution is a ring
/// homomorphism that commutes with the operations of the plan and fixes the
/// result, and it keeps the intermediate fractions in few variables.
BetaElement beta_of_tangle(const Tangle& t);
/// The same evaluation with one variable per original strand.
BetaElement beta_of_tangle_full(const Tangle& t);

/// Integer Laurent polynomial sum_k c_k t^k.
struct LaurentPoly {
  int low = 0;
  std::vector<Z> coeffs;  // c_{low}, c_{low+1}, ...
  Z at(int k) const;
  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// "-t^-3 + 4*t^-2 - 8*t^-1 + 11 - 8*t + 4*t^2 - t^3"
  std::string to_string(const std::string& var = "t") const;
};

/// omega of a single-strand beta element times +-t^k: symmetric under
/// t <-> 1/t and positive at t = 1.
LaurentPoly normalize_alexander(const BetaElement& e);
LaurentPoly alexander(const Tangle& t);

/// Coefficients of c^0..c^D in log r(e^c), r a rational function of one
/// variable t with r(1) = 1.
std::vector<Q> log_expansion(const RatFun& r, Letter t, int D);

}  // namespace kbh
