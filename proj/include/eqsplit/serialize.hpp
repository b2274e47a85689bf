#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "eqsplit/verify.hpp"

namespace eqsplit {

/// Decomposition model: group, target, n, method, rep (label list) and
/// summands, each with kind, sphere rep, chain, derived base/bundle and trace.
nlohmann::json decomposition_to_json(const RepContext& ctx, const WedgeDecomposition& d);
/// Inverse of decomposition_to_json; rejects unknown labels and summands
/// whose stated kind or sphere disagrees with their chain.
WedgeDecomposition decomposition_from_json(const RepContext& ctx, const nlohmann::json& j);

/// Emitters read only the JSON model.
std::string decomposition_text(const nlohmann::json& j);
std::string decomposition_latex(const nlohmann::json& j);
std::string latex_label(const std::string& label);

nlohmann::json report_to_json(const VerificationReport& r, bool timing = false);
/// One line per subgroup; `details` adds components and per-summand terms.
std::string report_text(const nlohmann::json& report, bool details = false);
nlohmann::json sweep_to_json(const SweepResult& r, bool timing = false);
std::string junit_xml(const SweepResult& r);

}  // namespace eqsplit
