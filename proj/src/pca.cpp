#include "kansei/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"

#include "kansei/log.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::pair<Matrix, std::vector<double>> center(const Matrix& x) {
    if (x.rows() < 1 || x.cols() < 1) {
        throw Error(ErrorCode::EmptyMatrix, "cannot center an empty matrix");
    }
    if (!x.all_finite()) {
        throw Error(ErrorCode::InvalidValue, "matrix contains non-finite entries");
    }
    std::vector<double> mean(x.cols(), 0.0);
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < x.rows(); ++r) sum += x(r, c);
        mean[c] = sum / static_cast<double>(x.rows());
    }
    Matrix centered(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) centered(r, c) = x(r, c) - mean[c];
    }
    return {std::move(centered), std::move(mean)};
}

namespace {

// Sample covariance of already-centered data, accumulated per entry over
// the observation index so the rounding matches a direct definitional sum.
Matrix covariance_of_centered(const Matrix& centered) {
    const std::size_t n = centered.rows();
    const std::size_t p = centered.cols();
    Matrix sigma(p, p);
    const double scale = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i; j < p; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += centered(k, i) * centered(k, j);
            const double value = sum * scale;
            sigma(i, j) = value;
            sigma(j, i) = value;
        }
    }
    return sigma;
}

} // namespace

Matrix covariance(const Matrix& x) {
    if (x.rows() < 2) {
        throw Error(ErrorCode::TooFewRows,
                    "covariance needs at least 2 rows, got " + std::to_string(x.rows()));
    }
    auto [centered, mean] = center(x);
    return covariance_of_centered(centered);
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Index of the largest-magnitude entry in column j; first index wins ties
// so the sign convention is deterministic.
std::size_t dominant_index(const Matrix& vectors, std::size_t j) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
        const double a = std::fabs(vectors(i, j));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

} // namespace

EigResult eig_sym(const Matrix& sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() == 0) {
        throw Error(ErrorCode::InvalidValue, "eig_sym needs a nonempty square matrix");
    }
    const std::size_t n = sigma.rows();

    double asymmetry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            asymmetry = std::max(asymmetry, std::fabs(sigma(i, j) - sigma(j, i)));
        }
    }
    if (asymmetry > 1e-9) {
        throw Error(ErrorCode::NotSymmetric, "matrix is asymmetric beyond tolerance");
    }

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (sigma(i, j) + sigma(j, i));
    }

    Matrix v = Matrix::identity(n);
    const double norm = frobenius_norm(a);
    const double threshold = 1e-12 * norm;
    constexpr int kMaxSweeps = 100;

    bool converged = (n == 1) || norm == 0.0 || off_diagonal_norm(a) <= threshold;
    int sweeps = 0;
    while (!converged && sweeps < kMaxSweeps) {
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = akp - s * (akq + tau * akp);
                    a(p, k) = a(k, p);
                    a(k, q) = akq + s * (akp - tau * akq);
                    a(q, k) = a(k, q);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = vkp - s * (vkq + tau * vkp);
                    v(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "Jacobi sweeps did not converge after " + std::to_string(sweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> dominant(n);
    for (std::size_t j = 0; j < n; ++j) dominant[j] = dominant_index(v, j);
    std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        if (a(lhs, lhs) != a(rhs, rhs)) return a(lhs, lhs) > a(rhs, rhs);
        return dominant[lhs] < dominant[rhs];
    });

    EigResult result;
    result.values.resize(n);
    result.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        result.values[j] = a(src, src);
        const double sign = v(dominant[src], src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) result.vectors(i, j) = sign * v(i, src);
    }
    return result;
}

PcaResult pca(const Matrix& x, std::vector<std::string> column_labels, PcaOptions options) {
    if (x.cols() < 1) {
        throw Error(ErrorCode::EmptyMatrix, "pca needs at least one column");
    }
    if (x.rows() < 2) {
        throw Error(ErrorCode::TooFewRows, "pca needs at least 2 rows, got " + std::to_string(x.rows()));
    }
    if (!column_labels.empty() && column_labels.size() != x.cols()) {
        throw Error(ErrorCode::InvalidValue, "column label count does not match column count");
    }
    if (column_labels.empty()) {
        for (std::size_t c = 0; c < x.cols(); ++c) column_labels.push_back("x" + std::to_string(c));
    }

    auto [centered, mean] = center(x);
    if (options.correlation) {
        for (std::size_t c = 0; c < centered.cols(); ++c) {
            double sum = 0.0;
            for (std::size_t r = 0; r < centered.rows(); ++r) sum += centered(r, c) * centered(r, c);
            const double stddev = std::sqrt(sum / static_cast<double>(centered.rows() - 1));
            if (stddev == 0.0) continue;
            for (std::size_t r = 0; r < centered.rows(); ++r) centered(r, c) /= stddev;
        }
    }

    Matrix sigma = covariance_of_centered(centered);
    EigResult eig = eig_sym(sigma);

    PcaResult result;
    result.column_labels = std::move(column_labels);
    result.mean_vector = std::move(mean);
    result.loadings = std::move(eig.vectors);
    result.eigenvalues = std::move(eig.values);
    for (double& value : result.eigenvalues) {
        if (value < 0.0) value = 0.0; // covariance is PSD; clip rounding noise
    }
    result.scores = multiply(centered, result.loadings);

    const double total = std::accumulate(result.eigenvalues.begin(), result.eigenvalues.end(), 0.0);
    const std::size_t p = result.eigenvalues.size();
    result.explained_ratio.resize(p);
    result.cumulative.resize(p);
    if (total <= 0.0) {
        log::info("total variance is zero; reporting uniform explained ratios");
        const double uniform = 1.0 / static_cast<double>(p);
        for (std::size_t i = 0; i < p; ++i) result.explained_ratio[i] = uniform;
    } else {
        for (std::size_t i = 0; i < p; ++i) result.explained_ratio[i] = result.eigenvalues[i] / total;
    }
    double running = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        running += result.explained_ratio[i];
        result.cumulative[i] = running;
    }
    return result;
}

BiplotData biplot_data(const PcaResult& result, std::size_t i, std::size_t j, ArrowScaleMode mode) {
    const std::size_t p = result.eigenvalues.size();
    if (i == j || i >= p || j >= p) {
        throw Error(ErrorCode::BadComponentIndex,
                    "component pair (" + std::to_string(i) + ", " + std::to_string(j) + ") is invalid");
    }
    BiplotData data;
    data.points.reserve(result.scores.rows());
    for (std::size_t r = 0; r < result.scores.rows(); ++r) {
        data.points.emplace_back(result.scores(r, i), result.scores(r, j));
    }
    const double scale_i = mode == ArrowScaleMode::Correlation ? std::sqrt(result.eigenvalues[i]) : 1.0;
    const double scale_j = mode == ArrowScaleMode::Correlation ? std::sqrt(result.eigenvalues[j]) : 1.0;
    for (std::size_t var = 0; var < p; ++var) {
        data.arrows.push_back({result.loadings(var, i) * scale_i, result.loadings(var, j) * scale_j,
                               result.column_labels[var]});
    }
    return data;
}

namespace {

ordered_json matrix_columns_json(const Matrix& m) {
    ordered_json cols = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ordered_json col = ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m(i, j));
        cols.push_back(std::move(col));
    }
    return cols;
}

ordered_json matrix_rows_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string pca_result_to_json(const PcaResult& result) {
    ordered_json doc;
    doc["eigenvalues"] = result.eigenvalues;
    doc["explained_ratio"] = result.explained_ratio;
    doc["cumulative"] = result.cumulative;
    doc["loadings"] = matrix_columns_json(result.loadings);
    doc["scores"] = matrix_rows_json(result.scores);
    doc["column_labels"] = result.column_labels;
    doc["mean_vector"] = result.mean_vector;
    return doc.dump(2) + "\n";
}

PcaResult pca_result_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidValue, std::string("pca result is not valid JSON: ") + e.what());
    }
    PcaResult result;
    result.eigenvalues = doc.at("eigenvalues").get<std::vector<double>>();
    result.explained_ratio = doc.at("explained_ratio").get<std::vector<double>>();
    result.cumulative = doc.at("cumulative").get<std::vector<double>>();
    result.column_labels = doc.at("column_labels").get<std::vector<std::string>>();
    result.mean_vector = doc.at("mean_vector").get<std::vector<double>>();

    const auto& loadings = doc.at("loadings");
    const std::size_t p = loadings.size();
    if (p > 0) {
        result.loadings = Matrix(loadings.at(0).size(), p);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < loadings.at(j).size(); ++i) {
                result.loadings(i, j) = loadings.at(j).at(i).get<double>();
            }
        }
    }
    const auto& scores = doc.at("scores");
    if (!scores.empty()) {
        result.scores = Matrix(scores.size(), scores.at(0).size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            for (std::size_t j = 0; j < scores.at(i).size(); ++j) {
                result.scores(i, j) = scores.at(i).at(j).get<double>();
            }
        }
    }
    return result;
}

} // namespace kansei
