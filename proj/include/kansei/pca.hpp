#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kansei/error.hpp"
#include "kansei/matrix.hpp"

namespace kansei {

// Subtracts the per-column mean. Returns the centered matrix and the mean
// vector; X reconstructs as X_c + broadcast(mean).
std::pair<Matrix, std::vector<double>> center(const Matrix& x);

// Sample covariance: (1/(n-1)) (X - mean)^T (X - mean). Needs n >= 2.
Matrix covariance(const Matrix& x);

struct EigResult {
    std::vector<double> values; // descending
    Matrix vectors;             // column j pairs with values[j]; orthonormal
};

// Cyclic Jacobi rotations for symmetric matrices. Input must be symmetric
// within 1e-9 (it is symmetrized by averaging before the sweeps). Converged
// when the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F; capped at
// 100 sweeps. Eigenvalues come back descending, ties ordered by the index of
// the eigenvector's dominant entry, and each eigenvector is flipped so its
// largest-magnitude entry is positive.
EigResult eig_sym(const Matrix& sigma);

struct PcaResult {
    std::vector<double> eigenvalues;     // descending, clamped at zero
    std::vector<double> explained_ratio; // eigenvalue / total (uniform if total is zero)
    std::vector<double> cumulative;      // prefix sums of explained_ratio
    Matrix loadings;                     // cols x cols, column j = eigenvector j
    Matrix scores;                       // rows x cols, centered data times loadings
    std::vector<std::string> column_labels;
    std::vector<double> mean_vector;
};

struct PcaOptions {
    // Rescale centered columns to unit variance first (principal components
    // of the correlation matrix). Zero-variance columns are left untouched.
    bool correlation = false;
};

PcaResult pca(const Matrix& x, std::vector<std::string> column_labels, PcaOptions options = {});

enum class ArrowScaleMode { Loading, Correlation };

struct BiplotArrow {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

struct BiplotData {
    std::vector<std::pair<double, double>> points; // score columns i, j per observation
    std::vector<BiplotArrow> arrows;               // one per variable
};

// Arrow coordinates are the loading entries for components i and j, scaled
// by sqrt(eigenvalue) in correlation mode.
BiplotData biplot_data(const PcaResult& result, std::size_t i, std::size_t j, ArrowScaleMode mode);

std::string pca_result_to_json(const PcaResult& result);
PcaResult pca_result_from_json(const std::string& json_text);

} // namespace kansei
