#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kansei/error.hpp"
#include "kansei/survey.hpp"

namespace kansei {

enum class DesignFeatureId {
    SaturationIntensity,
    DominantColor,
    ColorCount,
    LogoVisibility,
    FontSize,
    ImagePresence,
};

inline constexpr std::array<DesignFeatureId, 6> kAllFeatures = {
    DesignFeatureId::SaturationIntensity, DesignFeatureId::DominantColor,
    DesignFeatureId::ColorCount,          DesignFeatureId::LogoVisibility,
    DesignFeatureId::FontSize,            DesignFeatureId::ImagePresence,
};

std::string_view to_string(DesignFeatureId id);
std::optional<DesignFeatureId> feature_from_string(std::string_view text);

// A feature with its closed value vocabulary. An empty vocabulary means the
// feature takes free-form values (DominantColor).
struct DesignFeature {
    DesignFeatureId id = DesignFeatureId::SaturationIntensity;
    std::vector<std::string> vocabulary;
};

// The six per-sample design attributes with their canonical vocabularies.
std::vector<DesignFeature> default_features();

struct AttributeValue {
    std::string canonical;
    std::string note; // source prose kept verbatim
};

// Complete (sample, feature) grid of canonicalized design attributes.
class AttributeCatalog {
public:
    AttributeCatalog() = default;
    AttributeCatalog(std::vector<ProductSample> samples, std::vector<AttributeValue> values);

    const std::vector<ProductSample>& samples() const { return samples_; }

    const AttributeValue& value(std::string_view sample_id, DesignFeatureId feature) const;
    const AttributeValue& value(std::size_t sample_index, DesignFeatureId feature) const;

    std::optional<std::size_t> sample_index_of(std::string_view sample_id) const;

private:
    std::vector<ProductSample> samples_;
    std::vector<AttributeValue> values_; // sample-major, kAllFeatures order
};

// CSV layout: header "sample,feature,canonical,note", one row per cell.
// Every (sample, feature) cell must be present exactly once.
AttributeCatalog parse_catalog(std::string_view csv_text, const std::vector<DesignFeature>& features,
                               Diagnostics* diag = nullptr, const std::string& file = "");

const std::string& value_of(const AttributeCatalog& catalog, std::string_view sample_id,
                            DesignFeatureId feature);

std::string catalog_to_json(const AttributeCatalog& catalog);
AttributeCatalog catalog_from_json(const std::string& json_text);

} // namespace kansei
