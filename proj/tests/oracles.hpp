#pragma once

// Test-only reference implementations. Everything here recomputes results
// by a route independent of the library code it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kansei/matrix.hpp"
#include "kansei/survey.hpp"

namespace oracles {

// Definitional covariance: sigma_ij = sum_k (x_ki - mean_i)(x_kj - mean_j) / (n-1),
// one nested loop per entry.
kansei::Matrix brute_covariance(const kansei::Matrix& x);

// Determinant by Gaussian elimination with partial pivoting.
double determinant(kansei::Matrix a);

// All real eigenvalues of a symmetric matrix, found by scanning
// det(A - t I) for sign changes over the Gershgorin interval and bisecting
// each bracket. Returns them descending. Only reliable when the eigenvalues
// are distinct at the scan resolution, which holds for the random matrices
// the tests feed it; the caller asserts the expected count.
std::vector<double> eigenvalues_by_bisection(const kansei::Matrix& a, double tolerance);

// Quartiles by direct index arithmetic on the sorted data (Tukey hinges:
// odd-length halves include the overall median).
struct QuartileSummary {
    double median;
    double q1;
    double q3;
    double whisker_low;
    double whisker_high;
    std::vector<double> outliers;
};
QuartileSummary quartiles_by_sorting(std::vector<double> values);

// Random matrix with entries uniform in [lo, hi].
kansei::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double lo,
                             double hi);

// Random symmetric matrix with entries in [-scale, scale].
kansei::Matrix random_symmetric(std::mt19937& rng, std::size_t n, double scale);

// 30x30 dataset whose sample covariance is exactly diagonal with the first
// two variances carrying the requested shares of the total. Built by
// orthonormalizing centered Gaussian columns, so the planted shares hold to
// rounding error.
kansei::Matrix planted_two_factor_dataset(std::uint32_t seed, double share1, double share2);

// Minimal XML well-formedness check: tags balance and exactly one root
// element. Good enough for the SVG this project emits.
bool xml_well_formed(const std::string& text, std::string* error = nullptr);

} // namespace oracles
