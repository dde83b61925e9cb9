#include "doctest.h"

#include <cmath>
#include <random>

#include "kansei/interpret.hpp"
#include "kansei/project.hpp"
#include "oracles.hpp"

using namespace kansei;

namespace {

AttributeCatalog fixture_catalog() {
    return parse_catalog(read_text_file(std::string(KANSEI_FIXTURE_DIR) + "/catalog.csv"),
                         default_features());
}

// PcaResult with hand-picked loadings for one component.
PcaResult fake_result(const std::vector<std::string>& labels, const std::vector<double>& pc0_loadings) {
    PcaResult result;
    result.column_labels = labels;
    result.eigenvalues.assign(labels.size(), 1.0);
    result.loadings = Matrix(labels.size(), labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) result.loadings(v, 0) = pc0_loadings[v];
    return result;
}

} // namespace

TEST_CASE("word_weights averages |loading| per word") {
    const std::vector<std::string> labels{"S1|Beautiful", "S1|Clear", "S2|Beautiful", "S2|Clear"};

    SUBCASE("single nonzero loading") {
        PcaResult result = fake_result(labels, {-0.8, 0, 0, 0});
        auto weights = word_weights(result, 0);
        REQUIRE(weights.size() == 2);
        CHECK(weights[0].first == "Beautiful");
        CHECK(weights[0].second == doctest::Approx(0.4)); // |−0.8| over 2 samples
        CHECK(weights[1].second == 0.0);
    }
    SUBCASE("uniform magnitude") {
        PcaResult result = fake_result(labels, {0.3, -0.3, -0.3, 0.3});
        for (const auto& [word, weight] : word_weights(result, 0)) {
            CHECK(weight == doctest::Approx(0.3));
        }
    }
    SUBCASE("bad component") {
        PcaResult result = fake_result(labels, {0.3, -0.3, -0.3, 0.3});
        try {
            word_weights(result, 4);
            FAIL("expected BadComponentIndex");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadComponentIndex);
        }
    }
}

TEST_CASE("word_weights matches a label-grouping oracle on random loadings") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::vector<std::string> samples{"S1", "S2", "S3"};
    const std::vector<std::string> words{"Beautiful", "Clear", "Bright", "Reliable"};

    std::vector<std::string> labels;
    for (const auto& s : samples) {
        for (const auto& w : words) labels.push_back(s + "|" + w);
    }
    std::vector<double> loadings(labels.size());
    for (double& v : loadings) v = dist(rng);
    PcaResult result = fake_result(labels, loadings);
    auto weights = word_weights(result, 0);

    for (const auto& [word, weight] : weights) {
        double sum = 0.0;
        int count = 0;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            const std::string suffix = "|" + word;
            if (labels[v].size() > suffix.size() &&
                labels[v].compare(labels[v].size() - suffix.size(), suffix.size(), suffix) == 0) {
                sum += std::fabs(loadings[v]);
                ++count;
            }
        }
        CHECK(count == 3);
        CHECK(weight == doctest::Approx(sum / count).epsilon(1e-12));
    }
}

TEST_CASE("word_weights is invariant under column permutation") {
    std::mt19937 rng(654);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::string> labels{"S1|A", "S1|B", "S2|A", "S2|B", "S3|A", "S3|B"};
    std::vector<double> loadings(labels.size());
    for (double& v : loadings) v = dist(rng);

    auto base = word_weights(fake_result(labels, loadings), 0);

    std::vector<std::size_t> order{3, 0, 5, 2, 1, 4};
    std::vector<std::string> shuffled_labels;
    std::vector<double> shuffled_loadings;
    for (std::size_t i : order) {
        shuffled_labels.push_back(labels[i]);
        shuffled_loadings.push_back(loadings[i]);
    }
    auto shuffled = word_weights(fake_result(shuffled_labels, shuffled_loadings), 0);

    for (const auto& [word, weight] : base) {
        bool found = false;
        for (const auto& [other_word, other_weight] : shuffled) {
            if (other_word == word) {
                CHECK(other_weight == doctest::Approx(weight).epsilon(1e-12));
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("define_component picks top-n words") {
    const std::vector<std::pair<std::string, double>> weights{
        {"Beautiful", 0.9}, {"Clear", 0.8}, {"Innovative", 0.7}, {"Bright", 0.1}};

    ComponentProfile profile = define_component(weights, 3, "Elegant Innovation");
    CHECK(profile.name == "Elegant Innovation");
    CHECK(profile.defining_words == std::vector<std::string>{"Beautiful", "Clear", "Innovative"});

    // top_n covering everything returns the full ordering
    profile = define_component(weights, 99, "All");
    CHECK(profile.defining_words ==
          std::vector<std::string>{"Beautiful", "Clear", "Innovative", "Bright"});

    // equal weights keep declared order
    profile = define_component({{"B", 0.5}, {"A", 0.5}}, 2, "Tie");
    CHECK(profile.defining_words == std::vector<std::string>{"B", "A"});

    try {
        define_component(weights, 3, "   ");
        FAIL("expected EmptyName");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyName);
    }
}

TEST_CASE("define_component ordering survives positive rescaling") {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<std::pair<std::string, double>> weights;
    for (int i = 0; i < 10; ++i) weights.emplace_back("w" + std::to_string(i), dist(rng));

    ComponentProfile base = define_component(weights, 10, "x");
    for (double factor : {0.25, 3.0, 1000.0}) {
        auto scaled = weights;
        for (auto& [word, weight] : scaled) weight *= factor;
        CHECK(define_component(scaled, 10, "x").defining_words == base.defining_words);
    }
}

TEST_CASE("rank_samples reproduces the documented averages") {
    // means over {Beautiful, Clear, Innovative}: S5 4.30, S4 3.97, S3 3.88
    MeanTable table;
    table.sample_ids = {"S1", "S2", "S3", "S4", "S5"};
    table.words = {"Beautiful", "Innovative", "Comprehensive", "Bright", "Clear", "Reliable"};
    auto set = [&](const std::string& s, const std::string& w, double v) {
        for (std::size_t i = 0; i < table.sample_ids.size(); ++i) {
            for (std::size_t j = 0; j < table.words.size(); ++j) {
                if (table.sample_ids[i] == s && table.words[j] == w) {
                    table.values[i * table.words.size() + j] = v;
                }
            }
        }
    };
    table.values.assign(30, 3.0);
    set("S5", "Beautiful", 4.30);
    set("S5", "Clear", 4.30);
    set("S5", "Innovative", 4.30);
    set("S4", "Beautiful", 3.97);
    set("S4", "Clear", 3.97);
    set("S4", "Innovative", 3.97);
    set("S3", "Beautiful", 3.88);
    set("S3", "Clear", 3.88);
    set("S3", "Innovative", 3.88);

    SampleRanking ranking = rank_samples(table, {"Beautiful", "Clear", "Innovative"});
    REQUIRE(ranking.rows.size() == 5);
    CHECK(ranking.rows[0].first == "S5");
    CHECK(ranking.rows[0].second == doctest::Approx(4.30));
    CHECK(ranking.rows[1].first == "S4");
    CHECK(ranking.rows[1].second == doctest::Approx(3.97));
    CHECK(ranking.rows[2].first == "S3");
    CHECK(ranking.rows[2].second == doctest::Approx(3.88));

    // identical means rank by sample id
    MeanTable flat;
    flat.sample_ids = {"S3", "S1", "S2"};
    flat.words = {"Beautiful"};
    flat.values = {3.0, 3.0, 3.0};
    SampleRanking tie = rank_samples(flat, {"Beautiful"});
    CHECK(tie.rows[0].first == "S1");
    CHECK(tie.rows[1].first == "S2");
    CHECK(tie.rows[2].first == "S3");

    try {
        rank_samples(flat, {"Missing"});
        FAIL("expected UnknownWord");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownWord);
    }
}

TEST_CASE("common_attributes finds the shared design features") {
    AttributeCatalog catalog = fixture_catalog();

    SUBCASE("top samples by the first triad") {
        auto matches = common_attributes(catalog, {"S3", "S4", "S5"}, 2.0 / 3.0);
        bool saturation = false;
        bool logo = false;
        for (const FeatureMatch& match : matches) {
            if (match.feature == DesignFeatureId::SaturationIntensity && match.value == "High") {
                saturation = true;
                CHECK(match.support == 2);
            }
            if (match.feature == DesignFeatureId::LogoVisibility && match.value == "InHeader") {
                logo = true;
                CHECK(match.support == 3);
            }
        }
        CHECK(saturation);
        CHECK(logo);
        // full support sorts first
        CHECK(matches.front().feature == DesignFeatureId::LogoVisibility);
    }
    SUBCASE("top samples by the second triad") {
        auto matches = common_attributes(catalog, {"S2", "S4", "S5"}, 2.0 / 3.0);
        bool colors = false;
        bool fonts = false;
        for (const FeatureMatch& match : matches) {
            if (match.feature == DesignFeatureId::ColorCount && match.value == "High") colors = true;
            if (match.feature == DesignFeatureId::FontSize && match.value == "VariedLarge") fonts = true;
        }
        CHECK(colors);
        CHECK(fonts);
    }
    SUBCASE("unanimity over disjoint values is empty") {
        auto matches = common_attributes(catalog, {"S1", "S2"}, 1.0);
        for (const FeatureMatch& match : matches) {
            CHECK(match.support == 2); // only truly shared values may appear
        }
        bool dominant_color = false;
        for (const FeatureMatch& match : matches) {
            if (match.feature == DesignFeatureId::DominantColor) dominant_color = true;
        }
        CHECK_FALSE(dominant_color);
    }
    SUBCASE("low threshold output is a superset of unanimity output") {
        auto strict = common_attributes(catalog, {"S3", "S4", "S5"}, 1.0);
        auto loose = common_attributes(catalog, {"S3", "S4", "S5"}, 0.01);
        for (const FeatureMatch& want : strict) {
            bool found = false;
            for (const FeatureMatch& have : loose) {
                if (have.feature == want.feature && have.value == want.value) found = true;
            }
            CHECK(found);
        }
        CHECK(loose.size() >= strict.size());
    }
    SUBCASE("unknown sample") {
        try {
            common_attributes(catalog, {"S9"}, 0.5);
            FAIL("expected UnknownSample");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownSample);
        }
    }
    SUBCASE("every reported value appears verbatim in some catalog cell") {
        auto matches = common_attributes(catalog, {"S1", "S2", "S3", "S4", "S5"}, 0.2);
        for (const FeatureMatch& match : matches) {
            bool found = false;
            for (const ProductSample& sample : catalog.samples()) {
                if (catalog.value(sample.id, match.feature).canonical == match.value) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("interpretation JSON round-trip") {
    InterpretationReport report;
    report.components.push_back(
        {0, "Elegant Innovation", {"Beautiful", "Clear"}, {{"Beautiful", 0.5}, {"Clear", 0.25}}});
    report.rankings.push_back({0, {{"S5", 4.3}, {"S4", 3.97}}});
    report.features.emplace_back(0, FeatureMatch{DesignFeatureId::LogoVisibility, "InHeader", 3});

    const std::string once = interpretation_to_json(report);
    InterpretationReport reparsed = interpretation_from_json(once);
    CHECK(interpretation_to_json(reparsed) == once);
    CHECK(reparsed.components.size() == 1);
    CHECK(reparsed.components[0].defining_words == report.components[0].defining_words);
    CHECK(reparsed.features[0].second.support == 3);
}
