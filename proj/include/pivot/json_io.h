#pragma once

// JSON schemas for every report and serialized artifact. Object keys are
// emitted in sorted order and word lists are explicitly sorted, so a given
// input always serializes to identical bytes.

#include <string>
#include <utility>

#include "json.hpp"

#include "pivot/audit.h"
#include "pivot/classifier.h"
#include "pivot/config.h"
#include "pivot/corpus.h"
#include "pivot/discovery.h"
#include "pivot/logistic.h"
#include "pivot/stats.h"

namespace pivot {

nlohmann::json load_report_json(const LoadReport& report);

nlohmann::json config_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

// One object per class: {class, f0, p0, words: [{token, count0, count1,
// precision}]}, words sorted by precision descending then token ascending.
nlohmann::json pivots_json(const PivotSet& pivots, const PrecisionMatrix& matrix);

// Reads back a pivot class object written by pivots_json.
PivotSet pivots_from_json(const nlohmann::json& j);

nlohmann::json eval_report_json(const EvalReport& report);

nlohmann::json audit_report_json(const AuditReport& report);

nlohmann::json correlation_json(const CorrelationResult& result);

// {bias, l2, binary_features, weights} with weights keyed (hence sorted) by
// token.
nlohmann::json model_json(const LogisticModel& model);
LogisticModel model_from_json(const nlohmann::json& j);

// Reads a whole file / writes bytes exactly as given.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace pivot
