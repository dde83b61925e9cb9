#include "kansei/matrix.hpp"

#include <cmath>
#include <cstdio>

#include "kansei/csv.hpp"
#include "kansei/error.hpp"

namespace kansei {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw Error(ErrorCode::InvalidValue, "ragged row in matrix literal");
        }
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::InvalidValue, "matrix product dimension mismatch");
    }
    Matrix out(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    }
    return out;
}

double frobenius_norm(const Matrix& m) {
    double sum = 0.0;
    for (double v : m.data()) sum += v * v;
    return std::sqrt(sum);
}

double max_abs(const Matrix& m) {
    double best = 0.0;
    for (double v : m.data()) best = std::max(best, std::fabs(v));
    return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::InvalidValue, "matrix difference dimension mismatch");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        best = std::max(best, std::fabs(a.data()[i] - b.data()[i]));
    }
    return best;
}

std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& column_labels) {
    if (column_labels.size() != m.cols()) {
        throw Error(ErrorCode::InvalidValue, "label count does not match column count");
    }
    std::string out = csv::join_row(column_labels);
    out.push_back('\n');
    char buf[64];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out.push_back(',');
            std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

std::pair<Matrix, std::vector<std::string>> matrix_from_csv(const std::string& csv_text) {
    auto rows = csv::parse(csv_text);
    if (rows.empty()) {
        throw Error(ErrorCode::EmptyMatrix, "matrix CSV has no header row");
    }
    std::vector<std::string> labels = rows.front().fields;
    Matrix m(rows.size() - 1, labels.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].fields.size() != labels.size()) {
            throw Error(ErrorCode::MissingCell,
                        "row " + std::to_string(rows[r].line) + " has wrong field count");
        }
        for (std::size_t c = 0; c < labels.size(); ++c) {
            try {
                m(r - 1, c) = std::stod(rows[r].fields[c]);
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidValue,
                            "row " + std::to_string(rows[r].line) + " column " + std::to_string(c + 1) +
                                " is not numeric");
            }
        }
    }
    if (!m.all_finite()) {
        throw Error(ErrorCode::InvalidValue, "matrix CSV contains non-finite values");
    }
    return {std::move(m), std::move(labels)};
}

} // namespace kansei
