#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "kansei/project.hpp"
#include "kansei/survey.hpp"
#include "oracles.hpp"

using namespace kansei;

namespace {

std::vector<BipolarPair> two_pairs() {
    Lexicon lexicon;
    lexicon.add_word("Beautiful", WordSource::RelatedStudies);
    lexicon.add_word("Clear", WordSource::RelatedStudies);
    return {make_bipolar(lexicon, "Beautiful", "Not Beautiful", EmotionCategory::BroadlyEvaluative),
            make_bipolar(lexicon, "Clear", "Obscure", EmotionCategory::Unity)};
}

std::vector<ProductSample> two_samples() {
    return {{"S1", "S1"}, {"S2", "S2"}};
}

RatingMatrix fixture_matrix() {
    Lexicon lexicon = lexicon_from_json(read_text_file(std::string(KANSEI_FIXTURE_DIR) + "/lexicon.json"));
    std::vector<ProductSample> samples;
    for (int i = 1; i <= 5; ++i) samples.push_back({"S" + std::to_string(i), ""});
    return parse_responses(read_text_file(std::string(KANSEI_FIXTURE_DIR) + "/responses.csv"),
                           lexicon.pairs(), samples);
}

} // namespace

TEST_CASE("parse_responses reads the 30-respondent fixture") {
    RatingMatrix matrix = fixture_matrix();
    CHECK(matrix.respondent_count() == 30);
    CHECK(matrix.sample_count() == 5);
    CHECK(matrix.pair_count() == 6);
    CHECK_FALSE(matrix.has_missing());

    int males = 0;
    int females = 0;
    for (const Respondent& r : matrix.respondents()) {
        if (r.gender == Gender::Male) ++males;
        if (r.gender == Gender::Female) ++females;
    }
    CHECK(males == 17);
    CHECK(females == 13);
}

TEST_CASE("parse_responses validates input") {
    auto pairs = two_pairs();
    auto samples = two_samples();
    const std::string header = "respondent,gender,S1|Beautiful,S1|Clear,S2|Beautiful,S2|Clear\n";

    SUBCASE("single respondent of neutral threes") {
        RatingMatrix m = parse_responses(header + "R1,Female,3,3,3,3\n", pairs, samples);
        MeanTable table = mean_ratings(m);
        for (double v : table.values) CHECK(v == doctest::Approx(3.0));
    }
    SUBCASE("out-of-range rating") {
        try {
            parse_responses(header + "R1,Male,3,6,3,3\n", pairs, samples);
            FAIL("expected OutOfRangeRating");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::OutOfRangeRating);
        }
    }
    SUBCASE("non-numeric rating") {
        CHECK_THROWS_AS(parse_responses(header + "R1,Male,3,x,3,3\n", pairs, samples), Error);
    }
    SUBCASE("bad header") {
        try {
            parse_responses("respondent,gender,S1|Clear,S1|Beautiful,S2|Beautiful,S2|Clear\nR1,Male,3,3,3,3\n",
                            pairs, samples);
            FAIL("expected BadHeader");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadHeader);
        }
    }
    SUBCASE("duplicate respondent") {
        try {
            parse_responses(header + "R1,Male,3,3,3,3\nR1,Male,2,2,2,2\n", pairs, samples);
            FAIL("expected DuplicateRespondent");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DuplicateRespondent);
        }
    }
    SUBCASE("missing cell rejected by default") {
        try {
            parse_responses(header + "R1,Male,3,,3,3\n", pairs, samples);
            FAIL("expected MissingCell");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MissingCell);
        }
    }
    SUBCASE("missing cell imputed on request") {
        ParseOptions options;
        options.impute_mean = true;
        RatingMatrix m = parse_responses(header + "R1,Male,3,,3,3\nR2,Male,2,4,3,3\nR3,Male,4,5,3,3\n",
                                         pairs, samples, options);
        CHECK_FALSE(m.has_missing());
        CHECK(m.rating(0, 0, 1) == doctest::Approx(4.5)); // mean of 4 and 5
    }
    SUBCASE("diagnostics mode collects every issue") {
        Diagnostics diag;
        parse_responses(header + "R1,Male,3,6,3,3\nR2,Male,0,2,,3\n", pairs, samples, {}, &diag);
        CHECK(diag.size() == 3);
    }
}

TEST_CASE("mean_ratings basics") {
    auto pairs = two_pairs();
    auto samples = two_samples();
    const std::string header = "respondent,gender,S1|Beautiful,S1|Clear,S2|Beautiful,S2|Clear\n";

    SUBCASE("constant fives") {
        RatingMatrix m = parse_responses(header + "R1,Male,5,5,5,5\nR2,Male,5,5,5,5\n", pairs, samples);
        for (double v : mean_ratings(m).values) CHECK(v == 5.0);
    }
    SUBCASE("two-point average") {
        RatingMatrix m = parse_responses(header + "R1,Male,2,3,3,3\nR2,Male,4,3,3,3\n", pairs, samples);
        MeanTable table = mean_ratings(m);
        CHECK(*table.find("S1", "Beautiful") == doctest::Approx(3.0));
    }
    SUBCASE("empty matrix") {
        RatingMatrix empty;
        CHECK_THROWS_AS(mean_ratings(empty), Error);
    }
}

TEST_CASE("mean_ratings matches per-column summation oracle on the fixture") {
    RatingMatrix matrix = fixture_matrix();
    MeanTable table = mean_ratings(matrix);
    for (std::size_t s = 0; s < matrix.sample_count(); ++s) {
        for (std::size_t p = 0; p < matrix.pair_count(); ++p) {
            double sum = 0.0;
            for (std::size_t r = 0; r < matrix.respondent_count(); ++r) sum += matrix.rating(r, s, p);
            CHECK(table.at(s, p) == doctest::Approx(sum / 30.0).epsilon(1e-12));
            CHECK(table.at(s, p) >= 1.0);
            CHECK(table.at(s, p) <= 5.0);
        }
    }
}

TEST_CASE("mean_ratings is invariant under respondent permutation") {
    RatingMatrix matrix = fixture_matrix();
    MeanTable before = mean_ratings(matrix);

    std::vector<std::size_t> order(matrix.respondent_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937 rng(7);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Respondent> respondents;
    std::vector<double> cells;
    for (std::size_t r : order) {
        respondents.push_back(matrix.respondents()[r]);
        for (std::size_t s = 0; s < matrix.sample_count(); ++s) {
            for (std::size_t p = 0; p < matrix.pair_count(); ++p) {
                cells.push_back(matrix.rating(r, s, p));
            }
        }
    }
    RatingMatrix shuffled(respondents, matrix.samples(), matrix.pairs(), cells);
    MeanTable after = mean_ratings(shuffled);
    for (std::size_t i = 0; i < before.values.size(); ++i) {
        CHECK(after.values[i] == before.values[i]);
    }
}

TEST_CASE("box_stats worked examples") {
    BoxStats five = box_stats({1, 2, 3, 4, 5});
    CHECK(five.median == 3.0);
    CHECK(five.q1 == 2.0);
    CHECK(five.q3 == 4.0);
    CHECK(five.outliers.empty());
    CHECK(five.whisker_low == 1.0);
    CHECK(five.whisker_high == 5.0);

    BoxStats flat = box_stats({3, 3, 3, 3});
    CHECK(flat.median == 3.0);
    CHECK(flat.q1 == 3.0);
    CHECK(flat.q3 == 3.0);
    CHECK(flat.whisker_low == 3.0);
    CHECK(flat.whisker_high == 3.0);
}

TEST_CASE("box_stats matches the sort-based oracle on random samples") {
    std::mt19937 rng(553311);
    std::uniform_int_distribution<int> rating(1, 5);
    std::uniform_int_distribution<int> length(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> values(length(rng));
        for (double& v : values) v = rating(rng);
        BoxStats got = box_stats(values);
        oracles::QuartileSummary want = oracles::quartiles_by_sorting(values);
        CHECK(got.median == want.median);
        CHECK(got.q1 == want.q1);
        CHECK(got.q3 == want.q3);
        CHECK(got.whisker_low == want.whisker_low);
        CHECK(got.whisker_high == want.whisker_high);
        CHECK(got.outliers == want.outliers);
    }
}

TEST_CASE("gender_distribution") {
    RatingMatrix matrix = fixture_matrix();
    auto pair_index = matrix.pair_index_of("Beautiful");
    REQUIRE(pair_index.has_value());

    auto male = gender_distribution(matrix, *pair_index, Gender::Male);
    auto female = gender_distribution(matrix, *pair_index, Gender::Female);
    REQUIRE(male.size() == 5);
    REQUIRE(female.size() == 5);
    // the fixture hands males the higher Beautiful ratings
    for (std::size_t s = 0; s < 5; ++s) CHECK(male[s].median >= female[s].median);

    // pooled median lies within the pooled range
    for (std::size_t s = 0; s < 5; ++s) {
        std::vector<double> pooled;
        for (std::size_t r = 0; r < matrix.respondent_count(); ++r) {
            pooled.push_back(matrix.rating(r, s, *pair_index));
        }
        BoxStats all = box_stats(pooled);
        CHECK(all.median >= *std::min_element(pooled.begin(), pooled.end()));
        CHECK(all.median <= *std::max_element(pooled.begin(), pooled.end()));
    }

    try {
        gender_distribution(matrix, *pair_index, Gender::Unspecified);
        FAIL("expected NoSuchGender");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoSuchGender);
    }
}

TEST_CASE("flatten produces a labelled observation matrix") {
    RatingMatrix matrix = fixture_matrix();
    ObservationMatrix obs = flatten(matrix);
    CHECK(obs.x.rows() == 30);
    CHECK(obs.x.cols() == 30);
    REQUIRE(obs.labels.size() == 30);
    CHECK(obs.labels[0] == "S1|Beautiful");
    CHECK(obs.labels[29] == "S5|Reliable");

    // label round-trip is the identity on (sample, pair)
    for (std::size_t v = 0; v < obs.labels.size(); ++v) {
        const auto [sample, word] = split_variable_label(obs.labels[v]);
        auto s = matrix.sample_index_of(sample);
        auto p = matrix.pair_index_of(word);
        REQUIRE(s.has_value());
        REQUIRE(p.has_value());
        CHECK(*s * matrix.pair_count() + *p == v);
        CHECK(obs.x(3, v) == matrix.rating(3, *s, *p));
    }
}

TEST_CASE("flatten on degenerate and incomplete matrices") {
    auto pairs = two_pairs();
    pairs.resize(1);
    RatingMatrix tiny({{"R1", Gender::Male}}, {{"S1", ""}}, pairs, {4.0});
    ObservationMatrix obs = flatten(tiny);
    CHECK(obs.x.rows() == 1);
    CHECK(obs.x.cols() == 1);
    CHECK(obs.x(0, 0) == 4.0);

    RatingMatrix holes({{"R1", Gender::Male}}, {{"S1", ""}}, pairs,
                       {std::numeric_limits<double>::quiet_NaN()});
    try {
        flatten(holes);
        FAIL("expected IncompleteMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompleteMatrix);
    }
}
