#include "kansei/interpret.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<std::string, double>> word_weights(const PcaResult& result, std::size_t pc_index) {
    if (pc_index >= result.loadings.cols()) {
        throw Error(ErrorCode::BadComponentIndex,
                    "component " + std::to_string(pc_index) + " out of range");
    }
    std::vector<std::string> words;
    std::vector<double> sums;
    std::vector<std::size_t> counts;
    for (std::size_t var = 0; var < result.column_labels.size(); ++var) {
        const auto [sample, word] = split_variable_label(result.column_labels[var]);
        std::size_t slot = words.size();
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (equals_ci(words[w], word)) {
                slot = w;
                break;
            }
        }
        if (slot == words.size()) {
            words.push_back(word);
            sums.push_back(0.0);
            counts.push_back(0);
        }
        sums[slot] += std::fabs(result.loadings(var, pc_index));
        counts[slot] += 1;
    }
    std::vector<std::pair<std::string, double>> weights;
    weights.reserve(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        weights.emplace_back(words[w], sums[w] / static_cast<double>(counts[w]));
    }
    return weights;
}

ComponentProfile define_component(const std::vector<std::pair<std::string, double>>& weights,
                                  std::size_t top_n, std::string_view name, std::size_t pc_index) {
    if (trim(name).empty()) {
        throw Error(ErrorCode::EmptyName, "component name is blank");
    }
    if (top_n < 1) {
        throw Error(ErrorCode::InvalidSetting, "top_n must be at least 1");
    }
    ComponentProfile profile;
    profile.pc_index = pc_index;
    profile.name = trim(name);
    profile.word_weights = weights;

    std::vector<std::size_t> order(weights.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return weights[lhs].second > weights[rhs].second;
    });
    const std::size_t take = std::min(top_n, order.size());
    for (std::size_t i = 0; i < take; ++i) profile.defining_words.push_back(weights[order[i]].first);
    return profile;
}

SampleRanking rank_samples(const MeanTable& table, const std::vector<std::string>& defining_words,
                           std::size_t pc_index) {
    if (defining_words.empty()) {
        throw Error(ErrorCode::UnknownWord, "no defining words given");
    }
    SampleRanking ranking;
    ranking.pc_index = pc_index;
    for (std::size_t s = 0; s < table.sample_ids.size(); ++s) {
        double sum = 0.0;
        for (const std::string& word : defining_words) {
            auto value = table.find(table.sample_ids[s], word);
            if (!value) {
                throw Error(ErrorCode::UnknownWord,
                            "word \"" + word + "\" is not in the mean table");
            }
            sum += *value;
        }
        ranking.rows.emplace_back(table.sample_ids[s], sum / static_cast<double>(defining_words.size()));
    }
    std::stable_sort(ranking.rows.begin(), ranking.rows.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second) return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });
    return ranking;
}

std::vector<FeatureMatch> common_attributes(const AttributeCatalog& catalog,
                                            const std::vector<std::string>& top_samples,
                                            double min_share) {
    if (!(min_share > 0.0 && min_share <= 1.0)) {
        throw Error(ErrorCode::InvalidSetting, "min_share must be in (0, 1]");
    }
    std::vector<std::size_t> indices;
    for (const std::string& id : top_samples) {
        auto index = catalog.sample_index_of(id);
        if (!index) {
            throw Error(ErrorCode::UnknownSample, "sample \"" + id + "\" is not in the catalog");
        }
        indices.push_back(*index);
    }
    if (indices.empty()) {
        throw Error(ErrorCode::UnknownSample, "no top samples given");
    }
    // Small epsilon keeps e.g. 2/3 * 3 from rounding up to 3.
    const auto needed = static_cast<std::size_t>(
        std::ceil(min_share * static_cast<double>(indices.size()) - 1e-9));

    std::vector<FeatureMatch> matches;
    for (DesignFeatureId feature : kAllFeatures) {
        std::vector<std::string> values;
        std::vector<std::size_t> counts;
        for (std::size_t index : indices) {
            const std::string& canonical = catalog.value(index, feature).canonical;
            bool found = false;
            for (std::size_t v = 0; v < values.size(); ++v) {
                if (values[v] == canonical) {
                    ++counts[v];
                    found = true;
                    break;
                }
            }
            if (!found) {
                values.push_back(canonical);
                counts.push_back(1);
            }
        }
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (counts[v] >= needed) {
                matches.push_back({feature, values[v], counts[v]});
            }
        }
    }
    std::stable_sort(matches.begin(), matches.end(),
                     [](const FeatureMatch& lhs, const FeatureMatch& rhs) {
                         return lhs.support > rhs.support;
                     });
    return matches;
}

std::string interpretation_to_json(const InterpretationReport& report) {
    ordered_json doc;
    doc["components"] = ordered_json::array();
    for (const ComponentProfile& component : report.components) {
        ordered_json weights = ordered_json::object();
        for (const auto& [word, weight] : component.word_weights) weights[word] = weight;
        doc["components"].push_back({{"pc_index", component.pc_index},
                                     {"name", component.name},
                                     {"defining_words", component.defining_words},
                                     {"weights", weights}});
    }
    doc["rankings"] = ordered_json::array();
    for (const SampleRanking& ranking : report.rankings) {
        ordered_json rows = ordered_json::array();
        for (const auto& [sample, mean] : ranking.rows) {
            rows.push_back({{"sample", sample}, {"mean", mean}});
        }
        doc["rankings"].push_back({{"pc_index", ranking.pc_index}, {"rows", rows}});
    }
    doc["features"] = ordered_json::array();
    for (const auto& [pc_index, match] : report.features) {
        doc["features"].push_back({{"pc_index", pc_index},
                                   {"feature", std::string(to_string(match.feature))},
                                   {"value", match.value},
                                   {"support", match.support}});
    }
    return doc.dump(2) + "\n";
}

InterpretationReport interpretation_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidValue, std::string("interpretation is not valid JSON: ") + e.what());
    }
    InterpretationReport report;
    for (const auto& entry : doc.value("components", ordered_json::array())) {
        ComponentProfile component;
        component.pc_index = entry.at("pc_index").get<std::size_t>();
        component.name = entry.at("name").get<std::string>();
        component.defining_words = entry.at("defining_words").get<std::vector<std::string>>();
        for (const auto& [word, weight] : entry.at("weights").items()) {
            component.word_weights.emplace_back(word, weight.get<double>());
        }
        report.components.push_back(std::move(component));
    }
    for (const auto& entry : doc.value("rankings", ordered_json::array())) {
        SampleRanking ranking;
        ranking.pc_index = entry.at("pc_index").get<std::size_t>();
        for (const auto& row : entry.at("rows")) {
            ranking.rows.emplace_back(row.at("sample").get<std::string>(), row.at("mean").get<double>());
        }
        report.rankings.push_back(std::move(ranking));
    }
    for (const auto& entry : doc.value("features", ordered_json::array())) {
        auto feature = feature_from_string(entry.at("feature").get<std::string>());
        if (!feature) {
            throw Error(ErrorCode::UnknownFeature,
                        "unknown feature \"" + entry.at("feature").get<std::string>() + "\"");
        }
        report.features.emplace_back(
            entry.at("pc_index").get<std::size_t>(),
            FeatureMatch{*feature, entry.at("value").get<std::string>(),
                         entry.at("support").get<std::size_t>()});
    }
    return report;
}

} // namespace kansei
