#pragma once

#include <string>
#include <vector>

#include "kansei/colorvote.hpp"
#include "kansei/pca.hpp"
#include "kansei/survey.hpp"

namespace kansei {

// All charts render onto a fixed 800x600 canvas with fixed styling; for the
// same inputs the byte stream is identical run to run.
inline constexpr int kPlotWidth = 800;
inline constexpr int kPlotHeight = 600;

std::string plot_scree(const PcaResult& result);
std::string plot_cumulative(const PcaResult& result);

// Scores as grey points, variables as red arrows with labels. Raw data
// coordinates ride along in data-* attributes.
std::string plot_biplot(const PcaResult& result, std::size_t i, std::size_t j, ArrowScaleMode mode);

// Sample x word grid of mean ratings; each cell carries its value as a
// <title> child and a data-value attribute.
std::string plot_heatmap(const MeanTable& table);

// One box per (sample, gender) for a single bipolar pair.
std::string plot_box(const RatingMatrix& matrix, std::size_t pair_index);

// Vote-ordered grid of color squares.
std::string plot_swatches(const TallyResult& result);

} // namespace kansei
