#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmix/em.hpp"
#include "gmix/mixture.hpp"
#include "gmix/model_selection.hpp"

namespace gmix {

// Model document:
// { "configuration": {"negative": int, "nearzero": int, "positive": int},
//   "weights": [...],
//   "components": [ {"role": "negative", "gamma": {"shape":, "rate":}},
//                   {"role": "nearzero", "gaussian": {"mean":, "variance":}},
//                   ... ] }
nlohmann::json model_to_json(const MixtureModel& model);

// Validates the document and rebuilds the model; throws SchemaError with the
// offending field path.
MixtureModel model_from_json(const nlohmann::json& doc);

// Ordered array of { "config", "negative", "nearzero", "positive",
// "loglik", "params", "bic", "failed", "best_seed" }; loglik/bic are null
// for failed entries.
nlohmann::json sweep_report_json(const std::vector<PenalizedScore>& scores);

nlohmann::json fit_report_json(const FitReport& report, Eigen::Index n_obs);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace gmix
