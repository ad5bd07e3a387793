#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdfa/classify.hpp"

namespace sdfa {

struct CorpusSpec {
    int zn_max = 120;
    bool include_products = true;
    bool include_poly_quotients = true;
    bool include_idealizations = true;
    bool include_amalgamations = true;
    std::uint64_t seed = 0;  // reaches only the sampled checks
};

// Deterministic ring corpus with memoized per-ring classification. Identical
// spec (and seed, for sampled properties) reproduces identical results.
class Corpus {
public:
    explicit Corpus(CorpusSpec spec);

    const CorpusSpec& spec() const { return spec_; }
    const std::vector<RingPtr>& rings() const { return rings_; }
    std::size_t size() const { return rings_.size(); }
    const RingAnalysis& analysis(std::size_t idx) const;
    const RingAnalysis* find(const std::string& label) const;

private:
    CorpusSpec spec_;
    std::vector<RingPtr> rings_;
    mutable std::vector<std::unique_ptr<RingAnalysis>> memo_;
};

Corpus build_corpus(const CorpusSpec& spec = {});

struct Counterexample {
    std::string ring_label;
    std::vector<int> ideal_elements;
    std::string detail;
};

struct PropertyResult {
    std::string property_id;
    enum class Status { pass, fail, inapplicable } status = Status::pass;
    long checked_instances = 0;
    bool sampled = false;
    std::optional<Counterexample> counterexample;
};

// Registered property ids, in execution order.
std::vector<std::string> property_ids();
const std::string& property_description(const std::string& id);

// theorem tag -> property ids exercising it; every in-scope theorem appears
const std::map<std::string, std::vector<std::string>>& theorem_coverage();

// Throws input_error for an unregistered id.
PropertyResult run_property(const std::string& id, const Corpus& corpus);

std::vector<PropertyResult> run_all(const Corpus& corpus);

inline bool all_passed(const std::vector<PropertyResult>& rs) {
    for (const auto& r : rs)
        if (r.status == PropertyResult::Status::fail) return false;
    return true;
}

}  // namespace sdfa
