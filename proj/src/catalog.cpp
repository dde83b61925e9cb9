#include "kansei/catalog.hpp"

#include <algorithm>

#include "json.hpp"

#include "kansei/csv.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(DesignFeatureId id) {
    switch (id) {
    case DesignFeatureId::SaturationIntensity: return "SaturationIntensity";
    case DesignFeatureId::DominantColor: return "DominantColor";
    case DesignFeatureId::ColorCount: return "ColorCount";
    case DesignFeatureId::LogoVisibility: return "LogoVisibility";
    case DesignFeatureId::FontSize: return "FontSize";
    case DesignFeatureId::ImagePresence: return "ImagePresence";
    }
    return "SaturationIntensity";
}

std::optional<DesignFeatureId> feature_from_string(std::string_view text) {
    for (DesignFeatureId id : kAllFeatures) {
        if (text == to_string(id)) return id;
    }
    return std::nullopt;
}

std::vector<DesignFeature> default_features() {
    return {
        {DesignFeatureId::SaturationIntensity, {"High", "ModerateHigh", "Moderate"}},
        {DesignFeatureId::DominantColor, {}},
        {DesignFeatureId::ColorCount, {"High", "Moderate", "Limited"}},
        {DesignFeatureId::LogoVisibility, {"InHeader", "TopLeft", "Top"}},
        {DesignFeatureId::FontSize, {"Large", "VariedLarge", "Varied"}},
        {DesignFeatureId::ImagePresence, {"Dominant", "Significant", "Substantial", "Major", "Minimal"}},
    };
}

AttributeCatalog::AttributeCatalog(std::vector<ProductSample> samples, std::vector<AttributeValue> values)
    : samples_(std::move(samples)), values_(std::move(values)) {
    if (values_.size() != samples_.size() * kAllFeatures.size()) {
        throw Error(ErrorCode::MissingCell, "catalog value count does not match sample count");
    }
}

std::optional<std::size_t> AttributeCatalog::sample_index_of(std::string_view sample_id) const {
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (samples_[i].id == sample_id) return i;
    }
    return std::nullopt;
}

const AttributeValue& AttributeCatalog::value(std::size_t sample_index, DesignFeatureId feature) const {
    return values_[sample_index * kAllFeatures.size() + static_cast<std::size_t>(feature)];
}

const AttributeValue& AttributeCatalog::value(std::string_view sample_id, DesignFeatureId feature) const {
    auto index = sample_index_of(sample_id);
    if (!index) {
        throw Error(ErrorCode::UnknownSample, "sample \"" + std::string(sample_id) + "\" is not in the catalog");
    }
    return value(*index, feature);
}

AttributeCatalog parse_catalog(std::string_view csv_text, const std::vector<DesignFeature>& features,
                               Diagnostics* diag, const std::string& file) {
    auto rows = csv::parse(csv_text);
    const std::vector<std::string> expected_header{"sample", "feature", "canonical", "note"};
    if (rows.empty() || rows.front().fields != expected_header) {
        detail::report(diag, file, rows.empty() ? 0 : rows.front().line, ErrorCode::BadHeader,
                       "catalog header must be \"sample,feature,canonical,note\"");
        return {};
    }

    std::vector<ProductSample> samples;
    struct Cell {
        bool present = false;
        AttributeValue value;
    };
    std::vector<std::array<Cell, 6>> grid;

    auto sample_slot = [&](const std::string& id) -> std::array<Cell, 6>& {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (samples[i].id == id) return grid[i];
        }
        samples.push_back({id, id});
        grid.emplace_back();
        return grid.back();
    };

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 4) {
            detail::report(diag, file, row.line, ErrorCode::MissingCell,
                           "row has " + std::to_string(row.fields.size()) + " fields, expected 4");
            continue;
        }
        const std::string sample_id = trim(row.fields[0]);
        const std::string feature_text = trim(row.fields[1]);
        const std::string canonical = trim(row.fields[2]);
        const std::string& note = row.fields[3];

        if (sample_id.empty() || sample_id.find('|') != std::string::npos) {
            detail::report(diag, file, row.line, ErrorCode::InvalidValue,
                           "sample id \"" + sample_id + "\" must be nonempty and free of '|'");
            continue;
        }
        auto feature = feature_from_string(feature_text);
        if (!feature) {
            detail::report(diag, file, row.line, ErrorCode::UnknownFeature,
                           "unknown feature \"" + feature_text + "\"");
            continue;
        }
        const DesignFeature* spec = nullptr;
        for (const DesignFeature& f : features) {
            if (f.id == *feature) {
                spec = &f;
                break;
            }
        }
        if (spec != nullptr && !spec->vocabulary.empty() &&
            std::find(spec->vocabulary.begin(), spec->vocabulary.end(), canonical) ==
                spec->vocabulary.end()) {
            detail::report(diag, file, row.line, ErrorCode::UnknownCanonicalValue,
                           "value \"" + canonical + "\" is not in the " + feature_text + " vocabulary");
            continue;
        }
        if (canonical.empty()) {
            detail::report(diag, file, row.line, ErrorCode::MissingCell, "blank canonical value");
            continue;
        }
        Cell& cell = sample_slot(sample_id)[static_cast<std::size_t>(*feature)];
        if (cell.present) {
            detail::report(diag, file, row.line, ErrorCode::DuplicateAssignment,
                           "duplicate cell for (" + sample_id + ", " + feature_text + ")");
            continue;
        }
        cell.present = true;
        cell.value = {canonical, note};
    }

    if (samples.empty()) {
        detail::report(diag, file, 0, ErrorCode::MissingCell, "catalog has no sample rows");
        return {};
    }

    std::vector<AttributeValue> values;
    values.reserve(samples.size() * kAllFeatures.size());
    bool complete = true;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        for (DesignFeatureId id : kAllFeatures) {
            const Cell& cell = grid[s][static_cast<std::size_t>(id)];
            if (!cell.present) {
                detail::report(diag, file, 0, ErrorCode::MissingCell,
                               "missing cell (" + samples[s].id + ", " + std::string(to_string(id)) + ")");
                complete = false;
                values.push_back({});
                continue;
            }
            values.push_back(cell.value);
        }
    }
    if (!complete) return {};
    return AttributeCatalog(std::move(samples), std::move(values));
}

const std::string& value_of(const AttributeCatalog& catalog, std::string_view sample_id,
                            DesignFeatureId feature) {
    return catalog.value(sample_id, feature).canonical;
}

std::string catalog_to_json(const AttributeCatalog& catalog) {
    ordered_json doc;
    doc["samples"] = ordered_json::array();
    for (const ProductSample& sample : catalog.samples()) {
        doc["samples"].push_back({{"id", sample.id}, {"label", sample.label}});
    }
    doc["values"] = ordered_json::array();
    for (const ProductSample& sample : catalog.samples()) {
        for (DesignFeatureId id : kAllFeatures) {
            const AttributeValue& value = catalog.value(sample.id, id);
            doc["values"].push_back({{"sample", sample.id},
                                     {"feature", std::string(to_string(id))},
                                     {"canonical", value.canonical},
                                     {"note", value.note}});
        }
    }
    return doc.dump(2) + "\n";
}

AttributeCatalog catalog_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidValue, std::string("catalog is not valid JSON: ") + e.what());
    }
    std::vector<ProductSample> samples;
    for (const auto& entry : doc.at("samples")) {
        samples.push_back({entry.at("id").get<std::string>(), entry.value("label", "")});
    }
    std::vector<AttributeValue> values(samples.size() * kAllFeatures.size());
    std::vector<bool> present(values.size(), false);
    for (const auto& entry : doc.at("values")) {
        const std::string sample_id = entry.at("sample").get<std::string>();
        auto feature = feature_from_string(entry.at("feature").get<std::string>());
        if (!feature) {
            throw Error(ErrorCode::UnknownFeature,
                        "unknown feature \"" + entry.at("feature").get<std::string>() + "\"");
        }
        std::size_t sample_index = samples.size();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (samples[i].id == sample_id) {
                sample_index = i;
                break;
            }
        }
        if (sample_index == samples.size()) {
            throw Error(ErrorCode::UnknownSample, "value entry names unknown sample \"" + sample_id + "\"");
        }
        const std::size_t slot = sample_index * kAllFeatures.size() + static_cast<std::size_t>(*feature);
        values[slot] = {entry.at("canonical").get<std::string>(), entry.value("note", "")};
        present[slot] = true;
    }
    for (std::size_t i = 0; i < present.size(); ++i) {
        if (!present[i]) {
            throw Error(ErrorCode::MissingCell, "catalog JSON is missing a (sample, feature) cell");
        }
    }
    return AttributeCatalog(std::move(samples), std::move(values));
}

} // namespace kansei
