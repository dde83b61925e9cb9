#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kansei/error.hpp"
#include "kansei/lexicon.hpp"
#include "kansei/matrix.hpp"

namespace kansei {

enum class Gender { Male, Female, Unspecified };

std::string_view to_string(Gender gender);
std::optional<Gender> gender_from_string(std::string_view text);

struct ProductSample {
    std::string id;
    std::string label;

    friend bool operator==(const ProductSample&, const ProductSample&) = default;
};

struct Respondent {
    std::string id;
    Gender gender = Gender::Unspecified;
};

// Ratings on the 5-point semantic-differential scale, one cell per
// (respondent, sample, pair). Cells are stored as doubles so mean-imputed
// values fit; raw survey input is validated to integers 1..5. A NaN cell
// marks an explicit hole (sparse matrix).
class RatingMatrix {
public:
    RatingMatrix() = default;
    RatingMatrix(std::vector<Respondent> respondents, std::vector<ProductSample> samples,
                 std::vector<BipolarPair> pairs, std::vector<double> cells);

    std::size_t respondent_count() const { return respondents_.size(); }
    std::size_t sample_count() const { return samples_.size(); }
    std::size_t pair_count() const { return pairs_.size(); }

    const std::vector<Respondent>& respondents() const { return respondents_; }
    const std::vector<ProductSample>& samples() const { return samples_; }
    const std::vector<BipolarPair>& pairs() const { return pairs_; }

    double rating(std::size_t respondent, std::size_t sample, std::size_t pair) const {
        return cells_[(respondent * samples_.size() + sample) * pairs_.size() + pair];
    }

    bool has_missing() const;
    std::optional<std::size_t> pair_index_of(std::string_view positive_word) const;
    std::optional<std::size_t> sample_index_of(std::string_view sample_id) const;

private:
    std::vector<Respondent> respondents_;
    std::vector<ProductSample> samples_;
    std::vector<BipolarPair> pairs_;
    std::vector<double> cells_; // respondent-major, then sample, then pair
};

struct ParseOptions {
    // Replace empty cells with the per-column mean of the present values
    // instead of rejecting them.
    bool impute_mean = false;
};

// CSV layout: header "respondent,gender," then one column per variable named
// "<sampleId>|<positiveWord>", samples outer and pairs inner, both in
// declared order. Values are integers 1..5.
RatingMatrix parse_responses(std::string_view csv_text, const std::vector<BipolarPair>& pairs,
                             const std::vector<ProductSample>& samples, ParseOptions options = {},
                             Diagnostics* diag = nullptr, const std::string& file = "");

// Per-(sample, pair) arithmetic means over respondents.
struct MeanTable {
    std::vector<std::string> sample_ids;
    std::vector<std::string> words; // positive pole texts, declared order
    std::vector<double> values;     // sample-major

    double at(std::size_t sample, std::size_t word) const { return values[sample * words.size() + word]; }
    std::optional<double> find(std::string_view sample_id, std::string_view word) const;
};

MeanTable mean_ratings(const RatingMatrix& matrix);

// Five-number box summary using Tukey hinges: quartiles are medians of the
// lower/upper halves, with the overall median shared by both halves when the
// count is odd. Outliers sit beyond 1.5 IQR from the hinges; whiskers stop at
// the most extreme points inside the fences.
struct BoxStats {
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<double> outliers;
};

BoxStats box_stats(std::vector<double> values);

// One BoxStats per sample over the respondents of the queried gender.
std::vector<BoxStats> gender_distribution(const RatingMatrix& matrix, std::size_t pair_index,
                                          Gender gender);

// Observation matrix for PCA: one row per respondent, one column per
// (sample, pair) variable labelled "<sampleId>|<positiveWord>".
struct ObservationMatrix {
    Matrix x;
    std::vector<std::string> labels;
};

ObservationMatrix flatten(const RatingMatrix& matrix);

std::string make_variable_label(std::string_view sample_id, std::string_view word);
std::pair<std::string, std::string> split_variable_label(std::string_view label);

} // namespace kansei
