#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kansei/catalog.hpp"
#include "kansei/pca.hpp"
#include "kansei/survey.hpp"

namespace kansei {

// A named principal component with the Kansei words that drive it.
struct ComponentProfile {
    std::size_t pc_index = 0;
    std::string name;
    std::vector<std::string> defining_words;
    std::vector<std::pair<std::string, double>> word_weights; // declared word order
};

struct SampleRanking {
    std::size_t pc_index = 0;
    std::vector<std::pair<std::string, double>> rows; // (sample id, mean), descending
};

struct FeatureMatch {
    DesignFeatureId feature = DesignFeatureId::SaturationIntensity;
    std::string value;
    std::size_t support = 0;
};

// Per-word contribution to one component: the mean |loading| over that
// word's (sample, word) variables. Words come back in declared pair order.
std::vector<std::pair<std::string, double>> word_weights(const PcaResult& result, std::size_t pc_index);

// Top-n words by weight, descending; equal weights keep declared order.
ComponentProfile define_component(const std::vector<std::pair<std::string, double>>& weights,
                                  std::size_t top_n, std::string_view name, std::size_t pc_index = 0);

// Samples ordered by their mean rating over the defining words; equal means
// order by sample id.
SampleRanking rank_samples(const MeanTable& table, const std::vector<std::string>& defining_words,
                           std::size_t pc_index = 0);

// Canonical attribute values shared by at least ceil(min_share * n) of the
// given samples, ordered by support then feature order.
std::vector<FeatureMatch> common_attributes(const AttributeCatalog& catalog,
                                            const std::vector<std::string>& top_samples,
                                            double min_share);

struct InterpretationReport {
    std::vector<ComponentProfile> components;
    std::vector<SampleRanking> rankings;
    std::vector<std::pair<std::size_t, FeatureMatch>> features; // (pc_index, match)
};

std::string interpretation_to_json(const InterpretationReport& report);
InterpretationReport interpretation_from_json(const std::string& json_text);

} // namespace kansei
