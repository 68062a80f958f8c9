#pragma once

#include "kbh/beta.hpp"
#include "kbh/mma.hpp"

#include <json.hpp>

#include <string>

namespace kbh {

/// {"degree": D, "tails": [...], "lambda": {head: [[coeff, [labels...]], ...]},
///  "omega": [[coeff, [labels...]], ...]}; lambda words are Lyndon basis
/// words, omega words are canonical rotations, coefficients are "p/q" strings.
nlohmann::json to_json(const MMAElement& e);
MMAElement mma_from_json(const nlohmann::json& j);

/// {"tails": [...], "heads": [...], "omega": "...", "matrix": {tail: {head: "..."}}}
/// with rational functions written in the variables t_<label>.
nlohmann::json to_json(const BetaElement& e);
BetaElement beta_from_json(const nlohmann::json& j);

/// "u - 1/2*[u,v] + ..." up to grade show_degree.
std::string render(const LieSeries& s, int show_degree);
/// "1/2*tr(uv) - ..." up to grade show_degree.
std::string render(const CyclicSeries& w, int show_degree);
/// One line per head, then omega; wheels_only prints omega alone.
std::string render(const MMAElement& e, int show_degree, bool wheels_only = false);
std::string render(const BetaElement& e);

/// Resolves "t_<label>" to the letter <label>.
Letter variable_letter(std::string_view name);

}  // namespace kbh
