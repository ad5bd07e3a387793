#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sdfa/classify.hpp"
#include "sdfa/harness.hpp"

namespace sdfa {

constexpr int kFormatVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
    bool raw = false;  // element indices instead of construction-specific rendering
};

// Deterministic documents: nlohmann::json objects keep sorted keys, arrays
// keep corpus/lattice order, so identical inputs serialize byte-identically.
nlohmann::json classify_report(const RingAnalysis& a, const ReportOptions& opt = {});
nlohmann::json verify_report(const Corpus& corpus, const std::vector<PropertyResult>& results);

std::string to_json_string(const nlohmann::json& doc);
std::string classify_csv(const RingAnalysis& a, const ReportOptions& opt = {});
std::string classify_text(const RingAnalysis& a, const ReportOptions& opt = {});
std::string verify_text(const Corpus& corpus, const std::vector<PropertyResult>& results);

}  // namespace sdfa
