#include "kansei/survey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kansei/csv.hpp"

namespace kansei {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

bool is_missing(double v) {
    return std::isnan(v);
}

} // namespace

std::string_view to_string(Gender gender) {
    switch (gender) {
    case Gender::Male: return "Male";
    case Gender::Female: return "Female";
    case Gender::Unspecified: return "Unspecified";
    }
    return "Unspecified";
}

std::optional<Gender> gender_from_string(std::string_view text) {
    if (equals_ci(text, "Male")) return Gender::Male;
    if (equals_ci(text, "Female")) return Gender::Female;
    if (equals_ci(text, "Unspecified") || text.empty()) return Gender::Unspecified;
    return std::nullopt;
}

RatingMatrix::RatingMatrix(std::vector<Respondent> respondents, std::vector<ProductSample> samples,
                           std::vector<BipolarPair> pairs, std::vector<double> cells)
    : respondents_(std::move(respondents)),
      samples_(std::move(samples)),
      pairs_(std::move(pairs)),
      cells_(std::move(cells)) {
    if (cells_.size() != respondents_.size() * samples_.size() * pairs_.size()) {
        throw Error(ErrorCode::InvalidValue, "cell count does not match matrix dimensions");
    }
    for (double v : cells_) {
        if (is_missing(v)) continue;
        if (!(v >= 1.0 && v <= 5.0)) {
            throw Error(ErrorCode::OutOfRangeRating, "cell value outside [1,5]");
        }
    }
}

bool RatingMatrix::has_missing() const {
    return std::any_of(cells_.begin(), cells_.end(), [](double v) { return is_missing(v); });
}

std::optional<std::size_t> RatingMatrix::pair_index_of(std::string_view positive_word) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (equals_ci(pairs_[i].positive.text, positive_word)) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> RatingMatrix::sample_index_of(std::string_view sample_id) const {
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (samples_[i].id == sample_id) return i;
    }
    return std::nullopt;
}

std::string make_variable_label(std::string_view sample_id, std::string_view word) {
    std::string label(sample_id);
    label.push_back('|');
    label += word;
    return label;
}

std::pair<std::string, std::string> split_variable_label(std::string_view label) {
    std::size_t pos = label.find('|');
    if (pos == std::string_view::npos) {
        throw Error(ErrorCode::InvalidValue, "variable label \"" + std::string(label) + "\" has no '|'");
    }
    return {std::string(label.substr(0, pos)), std::string(label.substr(pos + 1))};
}

RatingMatrix parse_responses(std::string_view csv_text, const std::vector<BipolarPair>& pairs,
                             const std::vector<ProductSample>& samples, ParseOptions options,
                             Diagnostics* diag, const std::string& file) {
    auto rows = csv::parse(csv_text);
    if (rows.empty()) {
        detail::report(diag, file, 0, ErrorCode::BadHeader, "responses CSV is empty");
        return {};
    }

    std::vector<std::string> expected{"respondent", "gender"};
    for (const ProductSample& sample : samples) {
        for (const BipolarPair& pair : pairs) {
            expected.push_back(make_variable_label(sample.id, pair.positive.text));
        }
    }
    const std::vector<std::string>& header = rows.front().fields;
    if (header != expected) {
        std::string message = "header does not match the declared (sample, pair) grid";
        if (header.size() != expected.size()) {
            message += " (expected " + std::to_string(expected.size()) + " columns, got " +
                       std::to_string(header.size()) + ")";
        } else {
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] != expected[i]) {
                    message += " (column " + std::to_string(i + 1) + ": expected \"" + expected[i] +
                               "\", got \"" + header[i] + "\")";
                    break;
                }
            }
        }
        detail::report(diag, file, rows.front().line, ErrorCode::BadHeader, message);
        return {};
    }

    const std::size_t var_count = samples.size() * pairs.size();
    std::vector<Respondent> respondents;
    std::vector<double> cells;

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != expected.size()) {
            detail::report(diag, file, row.line, ErrorCode::MissingCell,
                           "row has " + std::to_string(row.fields.size()) + " fields, expected " +
                               std::to_string(expected.size()));
            continue;
        }
        Respondent respondent;
        respondent.id = trim(row.fields[0]);
        if (respondent.id.empty()) {
            detail::report(diag, file, row.line, ErrorCode::MissingCell, "blank respondent id");
            continue;
        }
        bool duplicate = false;
        for (const Respondent& seen : respondents) {
            if (seen.id == respondent.id) {
                detail::report(diag, file, row.line, ErrorCode::DuplicateRespondent,
                               "respondent \"" + respondent.id + "\" appears more than once");
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        auto gender = gender_from_string(trim(row.fields[1]));
        if (!gender) {
            detail::report(diag, file, row.line, ErrorCode::InvalidValue,
                           "unknown gender \"" + row.fields[1] + "\"");
            gender = Gender::Unspecified;
        }
        respondent.gender = *gender;

        std::vector<double> row_cells(var_count, kMissing);
        for (std::size_t v = 0; v < var_count; ++v) {
            const std::string cell = trim(row.fields[v + 2]);
            if (cell.empty()) {
                if (!options.impute_mean) {
                    detail::report(diag, file, row.line, ErrorCode::MissingCell,
                                   "missing rating in column \"" + expected[v + 2] + "\"");
                }
                continue;
            }
            int value = 0;
            bool numeric = !cell.empty();
            for (char c : cell) {
                if (c < '0' || c > '9') {
                    numeric = false;
                    break;
                }
            }
            if (numeric) value = std::stoi(cell);
            if (!numeric || value < 1 || value > 5) {
                detail::report(diag, file, row.line, ErrorCode::OutOfRangeRating,
                               "rating \"" + cell + "\" in column " + std::to_string(v + 3) + " (\"" +
                                   expected[v + 2] + "\") is not an integer in 1..5");
                continue;
            }
            row_cells[v] = static_cast<double>(value);
        }
        respondents.push_back(std::move(respondent));
        cells.insert(cells.end(), row_cells.begin(), row_cells.end());
    }

    if (options.impute_mean) {
        const std::size_t n = respondents.size();
        for (std::size_t v = 0; v < var_count; ++v) {
            double sum = 0.0;
            std::size_t present = 0;
            for (std::size_t r = 0; r < n; ++r) {
                double value = cells[r * var_count + v];
                if (!is_missing(value)) {
                    sum += value;
                    ++present;
                }
            }
            if (present == 0) {
                if (n > 0) {
                    detail::report(diag, file, 0, ErrorCode::MissingCell,
                                   "column \"" + expected[v + 2] + "\" has no ratings to impute from");
                }
                continue;
            }
            const double mean = sum / static_cast<double>(present);
            for (std::size_t r = 0; r < n; ++r) {
                double& value = cells[r * var_count + v];
                if (is_missing(value)) value = mean;
            }
        }
    }

    return RatingMatrix(std::move(respondents), std::vector<ProductSample>(samples),
                        std::vector<BipolarPair>(pairs), std::move(cells));
}

std::optional<double> MeanTable::find(std::string_view sample_id, std::string_view word) const {
    for (std::size_t s = 0; s < sample_ids.size(); ++s) {
        if (sample_ids[s] != sample_id) continue;
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (equals_ci(words[w], word)) return at(s, w);
        }
    }
    return std::nullopt;
}

MeanTable mean_ratings(const RatingMatrix& matrix) {
    if (matrix.respondent_count() == 0 || matrix.sample_count() == 0 || matrix.pair_count() == 0) {
        throw Error(ErrorCode::EmptyMatrix, "mean_ratings needs at least one respondent, sample and pair");
    }
    MeanTable table;
    for (const ProductSample& sample : matrix.samples()) table.sample_ids.push_back(sample.id);
    for (const BipolarPair& pair : matrix.pairs()) table.words.push_back(pair.positive.text);
    table.values.resize(matrix.sample_count() * matrix.pair_count(), 0.0);

    for (std::size_t s = 0; s < matrix.sample_count(); ++s) {
        for (std::size_t p = 0; p < matrix.pair_count(); ++p) {
            double sum = 0.0;
            std::size_t count = 0;
            for (std::size_t r = 0; r < matrix.respondent_count(); ++r) {
                double value = matrix.rating(r, s, p);
                if (is_missing(value)) continue;
                sum += value;
                ++count;
            }
            if (count == 0) {
                throw Error(ErrorCode::MissingCell,
                            "no ratings for (" + matrix.samples()[s].id + ", " +
                                matrix.pairs()[p].positive.text + ")");
            }
            table.values[s * matrix.pair_count() + p] = sum / static_cast<double>(count);
        }
    }
    return table;
}

namespace {

double median_of_range(const std::vector<double>& sorted, std::size_t begin, std::size_t end) {
    const std::size_t n = end - begin;
    if (n % 2 == 1) return sorted[begin + n / 2];
    return 0.5 * (sorted[begin + n / 2 - 1] + sorted[begin + n / 2]);
}

} // namespace

BoxStats box_stats(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyMatrix, "box_stats needs at least one value");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();

    BoxStats stats;
    stats.median = median_of_range(values, 0, n);
    // Tukey hinge halves: odd counts keep the median in both halves.
    const std::size_t half = (n + 1) / 2;
    stats.q1 = median_of_range(values, 0, half);
    stats.q3 = median_of_range(values, n - half, n);

    const double iqr = stats.q3 - stats.q1;
    const double low_fence = stats.q1 - 1.5 * iqr;
    const double high_fence = stats.q3 + 1.5 * iqr;

    stats.whisker_low = stats.q1;
    stats.whisker_high = stats.q3;
    bool any_inside = false;
    for (double v : values) {
        if (v < low_fence || v > high_fence) {
            stats.outliers.push_back(v);
            continue;
        }
        if (!any_inside) {
            stats.whisker_low = v;
            stats.whisker_high = v;
            any_inside = true;
        } else {
            stats.whisker_low = std::min(stats.whisker_low, v);
            stats.whisker_high = std::max(stats.whisker_high, v);
        }
    }
    return stats;
}

std::vector<BoxStats> gender_distribution(const RatingMatrix& matrix, std::size_t pair_index,
                                          Gender gender) {
    if (pair_index >= matrix.pair_count()) {
        throw Error(ErrorCode::BadComponentIndex,
                    "pair index " + std::to_string(pair_index) + " out of range");
    }
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < matrix.respondent_count(); ++r) {
        if (matrix.respondents()[r].gender == gender) rows.push_back(r);
    }
    if (rows.empty()) {
        throw Error(ErrorCode::NoSuchGender,
                    "no respondent with gender " + std::string(to_string(gender)));
    }

    std::vector<BoxStats> result;
    result.reserve(matrix.sample_count());
    for (std::size_t s = 0; s < matrix.sample_count(); ++s) {
        std::vector<double> values;
        values.reserve(rows.size());
        for (std::size_t r : rows) {
            double value = matrix.rating(r, s, pair_index);
            if (!is_missing(value)) values.push_back(value);
        }
        if (values.empty()) {
            throw Error(ErrorCode::MissingCell,
                        "no ratings for sample " + matrix.samples()[s].id + " and gender " +
                            std::string(to_string(gender)));
        }
        result.push_back(box_stats(std::move(values)));
    }
    return result;
}

ObservationMatrix flatten(const RatingMatrix& matrix) {
    if (matrix.has_missing()) {
        throw Error(ErrorCode::IncompleteMatrix, "matrix has missing cells; flatten needs complete data");
    }
    ObservationMatrix out;
    out.x = Matrix(matrix.respondent_count(), matrix.sample_count() * matrix.pair_count());
    for (const ProductSample& sample : matrix.samples()) {
        for (const BipolarPair& pair : matrix.pairs()) {
            out.labels.push_back(make_variable_label(sample.id, pair.positive.text));
        }
    }
    for (std::size_t r = 0; r < matrix.respondent_count(); ++r) {
        for (std::size_t s = 0; s < matrix.sample_count(); ++s) {
            for (std::size_t p = 0; p < matrix.pair_count(); ++p) {
                out.x(r, s * matrix.pair_count() + p) = matrix.rating(r, s, p);
            }
        }
    }
    return out;
}

} // namespace kansei
