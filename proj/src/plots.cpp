#include "kansei/plots.hpp"

#include <algorithm>
#include <cmath>

#include "kansei/svg.hpp"

namespace kansei {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;
constexpr double kPlotLeft = kMarginLeft;
constexpr double kPlotRight = kPlotWidth - kMarginRight;
constexpr double kPlotTop = kMarginTop;
constexpr double kPlotBottom = kPlotHeight - kMarginBottom;

void draw_frame(SvgDocument& svg, const std::string& title) {
    svg.rect(0, 0, kPlotWidth, kPlotHeight, {{"fill", "white"}});
    svg.text(kPlotWidth / 2.0, 24.0, title,
             {{"text-anchor", "middle"}, {"font-size", "16"}, {"font-family", "sans-serif"}});
    svg.line(kPlotLeft, kPlotBottom, kPlotRight, kPlotBottom, {{"stroke", "black"}});
    svg.line(kPlotLeft, kPlotTop, kPlotLeft, kPlotBottom, {{"stroke", "black"}});
}

void y_axis_ticks(SvgDocument& svg, const LinearScale& scale, double lo, double hi, int steps) {
    for (int i = 0; i <= steps; ++i) {
        const double value = lo + (hi - lo) * i / steps;
        const double y = scale(value);
        svg.line(kPlotLeft - 5.0, y, kPlotLeft, y, {{"stroke", "black"}});
        svg.text(kPlotLeft - 9.0, y + 4.0, svg_num(value),
                 {{"text-anchor", "end"}, {"font-size", "10"}, {"font-family", "sans-serif"}});
    }
}

std::string heat_color(double value) {
    // Ratings 1..5 mapped from near-white to a saturated blue.
    const double t = std::clamp((value - 1.0) / 4.0, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(245.0 - 200.0 * t));
    const int g = static_cast<int>(std::lround(247.0 - 143.0 * t));
    const int b = 254;
    return "rgb(" + std::to_string(r) + "," + std::to_string(g) + "," + std::to_string(b) + ")";
}

} // namespace

std::string plot_scree(const PcaResult& result) {
    SvgDocument svg(kPlotWidth, kPlotHeight);
    draw_frame(svg, "Explained Variance Ratio");

    const std::size_t n = result.explained_ratio.size();
    double max_ratio = 0.0;
    for (double r : result.explained_ratio) max_ratio = std::max(max_ratio, r);
    if (max_ratio == 0.0) max_ratio = 1.0;

    LinearScale y(0.0, max_ratio, kPlotBottom, kPlotTop);
    y_axis_ticks(svg, y, 0.0, max_ratio, 5);
    const double slot = (kPlotRight - kPlotLeft) / static_cast<double>(n);
    const double bar_width = slot * 0.8;

    for (std::size_t i = 0; i < n; ++i) {
        const double ratio = result.explained_ratio[i];
        const double x = kPlotLeft + slot * static_cast<double>(i) + slot * 0.1;
        svg.rect(x, y(ratio), bar_width, kPlotBottom - y(ratio),
                 {{"fill", "steelblue"},
                  {"data-index", std::to_string(i)},
                  {"data-value", svg_num(ratio)}});
        if (n <= 12 || i % 5 == 0) {
            svg.text(x + bar_width / 2.0, kPlotBottom + 16.0, "PC" + std::to_string(i + 1),
                     {{"text-anchor", "middle"}, {"font-size", "10"}, {"font-family", "sans-serif"}});
        }
    }
    return svg.str();
}

std::string plot_cumulative(const PcaResult& result) {
    SvgDocument svg(kPlotWidth, kPlotHeight);
    draw_frame(svg, "Cumulative Variance");

    const std::size_t n = result.cumulative.size();
    LinearScale y(0.0, 1.0, kPlotBottom, kPlotTop);
    LinearScale x(1.0, static_cast<double>(std::max<std::size_t>(n, 2)), kPlotLeft, kPlotRight);
    y_axis_ticks(svg, y, 0.0, 1.0, 5);

    std::vector<std::pair<double, double>> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        points.emplace_back(x(static_cast<double>(i + 1)), y(result.cumulative[i]));
    }
    svg.polyline(points, {{"fill", "none"}, {"stroke", "steelblue"}, {"stroke-width", "2"}});
    for (std::size_t i = 0; i < n; ++i) {
        svg.circle(points[i].first, points[i].second, 3.0,
                   {{"fill", "steelblue"},
                    {"data-index", std::to_string(i)},
                    {"data-value", svg_num(result.cumulative[i])}});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (n <= 12 || i % 5 == 0) {
            svg.text(points[i].first, kPlotBottom + 16.0, std::to_string(i + 1),
                     {{"text-anchor", "middle"}, {"font-size", "10"}, {"font-family", "sans-serif"}});
        }
    }
    return svg.str();
}

std::string plot_biplot(const PcaResult& result, std::size_t i, std::size_t j, ArrowScaleMode mode) {
    const BiplotData data = biplot_data(result, i, j, mode);

    SvgDocument svg(kPlotWidth, kPlotHeight);
    draw_frame(svg, "PCA Biplot (PC" + std::to_string(i + 1) + " vs PC" + std::to_string(j + 1) + ")");
    svg.add_marker_defs();

    double score_extent = 0.0;
    for (const auto& [sx, sy] : data.points) {
        score_extent = std::max({score_extent, std::fabs(sx), std::fabs(sy)});
    }
    if (score_extent == 0.0) score_extent = 1.0;
    double arrow_extent = 0.0;
    for (const BiplotArrow& arrow : data.arrows) {
        arrow_extent = std::max({arrow_extent, std::fabs(arrow.x), std::fabs(arrow.y)});
    }
    if (arrow_extent == 0.0) arrow_extent = 1.0;

    const double cx = (kPlotLeft + kPlotRight) / 2.0;
    const double cy = (kPlotTop + kPlotBottom) / 2.0;
    const double half = std::min(kPlotRight - cx, kPlotBottom - cy);
    LinearScale sx(-score_extent, score_extent, cx - half, cx + half);
    LinearScale sy(-score_extent, score_extent, cy + half, cy - half);
    // Arrows use their own scale so loadings stay visible next to scores.
    const double arrow_gain = half * 0.8 / arrow_extent;

    svg.line(cx - half, cy, cx + half, cy, {{"stroke", "#cccccc"}});
    svg.line(cx, cy - half, cx, cy + half, {{"stroke", "#cccccc"}});

    std::size_t index = 0;
    for (const auto& [px, py] : data.points) {
        svg.circle(sx(px), sy(py), 3.0,
                   {{"fill", "grey"},
                    {"data-index", std::to_string(index)},
                    {"data-x", svg_num(px)},
                    {"data-y", svg_num(py)}});
        ++index;
    }
    for (const BiplotArrow& arrow : data.arrows) {
        const double ax = cx + arrow.x * arrow_gain;
        const double ay = cy - arrow.y * arrow_gain;
        svg.line(cx, cy, ax, ay,
                 {{"stroke", "red"},
                  {"stroke-width", "1.5"},
                  {"marker-end", "url(#arrow)"},
                  {"data-label", arrow.label},
                  {"data-x", svg_num(arrow.x)},
                  {"data-y", svg_num(arrow.y)}});
        svg.text(ax, ay - 4.0, arrow.label,
                 {{"fill", "red"}, {"font-size", "9"}, {"font-family", "sans-serif"},
                  {"text-anchor", "middle"}});
    }
    svg.text(kPlotWidth / 2.0, kPlotHeight - 20.0, "PC" + std::to_string(i + 1),
             {{"text-anchor", "middle"}, {"font-size", "12"}, {"font-family", "sans-serif"}});
    svg.text(20.0, kPlotHeight / 2.0, "PC" + std::to_string(j + 1),
             {{"text-anchor", "middle"},
              {"font-size", "12"},
              {"font-family", "sans-serif"},
              {"transform", "rotate(-90 20 " + svg_num(kPlotHeight / 2.0) + ")"}});
    return svg.str();
}

std::string plot_heatmap(const MeanTable& table) {
    SvgDocument svg(kPlotWidth, kPlotHeight);
    draw_frame(svg, "Average Ratings by Sample and Kansei Word");

    const std::size_t rows = table.sample_ids.size();
    const std::size_t cols = table.words.size();
    const double cell_w = (kPlotRight - kPlotLeft) / static_cast<double>(cols);
    const double cell_h = (kPlotBottom - kPlotTop) / static_cast<double>(rows);

    for (std::size_t s = 0; s < rows; ++s) {
        for (std::size_t w = 0; w < cols; ++w) {
            const double value = table.at(s, w);
            const double x = kPlotLeft + cell_w * static_cast<double>(w);
            const double y = kPlotTop + cell_h * static_cast<double>(s);
            svg.rect(x, y, cell_w, cell_h,
                     {{"fill", heat_color(value)},
                      {"stroke", "white"},
                      {"data-sample", table.sample_ids[s]},
                      {"data-word", table.words[w]},
                      {"data-value", svg_num(value)}},
                     svg_num(value));
            svg.text(x + cell_w / 2.0, y + cell_h / 2.0 + 4.0, svg_num(value),
                     {{"text-anchor", "middle"}, {"font-size", "11"}, {"font-family", "sans-serif"}});
        }
    }
    for (std::size_t s = 0; s < rows; ++s) {
        svg.text(kPlotLeft - 9.0, kPlotTop + cell_h * (static_cast<double>(s) + 0.5) + 4.0,
                 table.sample_ids[s],
                 {{"text-anchor", "end"}, {"font-size", "11"}, {"font-family", "sans-serif"}});
    }
    for (std::size_t w = 0; w < cols; ++w) {
        svg.text(kPlotLeft + cell_w * (static_cast<double>(w) + 0.5), kPlotBottom + 16.0,
                 table.words[w],
                 {{"text-anchor", "middle"}, {"font-size", "11"}, {"font-family", "sans-serif"}});
    }
    return svg.str();
}

std::string plot_box(const RatingMatrix& matrix, std::size_t pair_index) {
    if (pair_index >= matrix.pair_count()) {
        throw Error(ErrorCode::BadComponentIndex, "pair index out of range");
    }
    const std::string& word = matrix.pairs()[pair_index].positive.text;

    SvgDocument svg(kPlotWidth, kPlotHeight);
    draw_frame(svg, "Rating Distribution by Gender: " + word);

    struct GenderStyle {
        Gender gender;
        const char* fill;
    };
    const GenderStyle styles[] = {{Gender::Male, "#7fa8d9"},
                                  {Gender::Female, "#e8a86c"},
                                  {Gender::Unspecified, "#b0b0b0"}};

    std::vector<std::pair<GenderStyle, std::vector<BoxStats>>> series;
    for (const GenderStyle& style : styles) {
        bool present = std::any_of(matrix.respondents().begin(), matrix.respondents().end(),
                                   [&](const Respondent& r) { return r.gender == style.gender; });
        if (!present) continue;
        series.emplace_back(style, gender_distribution(matrix, pair_index, style.gender));
    }

    LinearScale y(0.5, 5.5, kPlotBottom, kPlotTop);
    for (int tick = 1; tick <= 5; ++tick) {
        const double ty = y(tick);
        svg.line(kPlotLeft - 5.0, ty, kPlotLeft, ty, {{"stroke", "black"}});
        svg.text(kPlotLeft - 9.0, ty + 4.0, std::to_string(tick),
                 {{"text-anchor", "end"}, {"font-size", "10"}, {"font-family", "sans-serif"}});
    }

    const std::size_t sample_count = matrix.sample_count();
    const std::size_t lanes = std::max<std::size_t>(series.size(), 1);
    const double slot = (kPlotRight - kPlotLeft) / static_cast<double>(sample_count);
    const double box_w = slot / static_cast<double>(lanes) * 0.6;

    for (std::size_t s = 0; s < sample_count; ++s) {
        for (std::size_t g = 0; g < series.size(); ++g) {
            const auto& [style, stats_per_sample] = series[g];
            const BoxStats& stats = stats_per_sample[s];
            const double center = kPlotLeft + slot * static_cast<double>(s) +
                                  slot * (static_cast<double>(g) + 0.5) / static_cast<double>(lanes);
            const std::string gender_name(to_string(style.gender));

            svg.line(center, y(stats.whisker_low), center, y(stats.q1), {{"stroke", "black"}});
            svg.line(center, y(stats.q3), center, y(stats.whisker_high), {{"stroke", "black"}});
            svg.line(center - box_w / 4.0, y(stats.whisker_low), center + box_w / 4.0,
                     y(stats.whisker_low), {{"stroke", "black"}});
            svg.line(center - box_w / 4.0, y(stats.whisker_high), center + box_w / 4.0,
                     y(stats.whisker_high), {{"stroke", "black"}});
            svg.rect(center - box_w / 2.0, y(stats.q3), box_w, y(stats.q1) - y(stats.q3),
                     {{"fill", style.fill},
                      {"stroke", "black"},
                      {"data-sample", matrix.samples()[s].id},
                      {"data-gender", gender_name},
                      {"data-median", svg_num(stats.median)},
                      {"data-q1", svg_num(stats.q1)},
                      {"data-q3", svg_num(stats.q3)}});
            svg.line(center - box_w / 2.0, y(stats.median), center + box_w / 2.0, y(stats.median),
                     {{"stroke", "black"}, {"stroke-width", "2"}});
            for (double outlier : stats.outliers) {
                svg.circle(center, y(outlier), 2.5,
                           {{"fill", "none"}, {"stroke", "black"}, {"data-outlier", svg_num(outlier)}});
            }
        }
        svg.text(kPlotLeft + slot * (static_cast<double>(s) + 0.5), kPlotBottom + 16.0,
                 matrix.samples()[s].id,
                 {{"text-anchor", "middle"}, {"font-size", "11"}, {"font-family", "sans-serif"}});
    }

    double legend_x = kPlotLeft;
    for (const auto& [style, stats] : series) {
        svg.rect(legend_x, kPlotHeight - 34.0, 12.0, 12.0, {{"fill", style.fill}, {"stroke", "black"}});
        svg.text(legend_x + 16.0, kPlotHeight - 24.0, std::string(to_string(style.gender)),
                 {{"font-size", "11"}, {"font-family", "sans-serif"}});
        legend_x += 110.0;
    }
    return svg.str();
}

std::string plot_swatches(const TallyResult& result) {
    SvgDocument svg(kPlotWidth, kPlotHeight);
    svg.rect(0, 0, kPlotWidth, kPlotHeight, {{"fill", "white"}});
    svg.text(kPlotWidth / 2.0, 24.0, "Kansei Color Votes",
             {{"text-anchor", "middle"}, {"font-size", "16"}, {"font-family", "sans-serif"}});

    constexpr int kPerRow = 3;
    constexpr double kCellW = 240.0;
    constexpr double kCellH = 150.0;
    constexpr double kSwatch = 90.0;
    const double origin_x = (kPlotWidth - kPerRow * kCellW) / 2.0;
    const double origin_y = 50.0;

    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        const RankedBallot& entry = result.entries[i];
        const double cell_x = origin_x + kCellW * static_cast<double>(i % kPerRow);
        const double cell_y = origin_y + kCellH * static_cast<double>(i / kPerRow);
        const std::string fill = "rgb(" + std::to_string(entry.ballot.rgb[0]) + "," +
                                 std::to_string(entry.ballot.rgb[1]) + "," +
                                 std::to_string(entry.ballot.rgb[2]) + ")";
        svg.rect(cell_x + (kCellW - kSwatch) / 2.0, cell_y, kSwatch, kSwatch,
                 {{"fill", fill},
                  {"stroke", "black"},
                  {"data-name", entry.ballot.name},
                  {"data-votes", std::to_string(entry.ballot.votes)},
                  {"data-rank", std::to_string(entry.rank)}});
        svg.text(cell_x + kCellW / 2.0, cell_y + kSwatch + 16.0, entry.ballot.name,
                 {{"text-anchor", "middle"}, {"font-size", "11"}, {"font-family", "sans-serif"}});
        svg.text(cell_x + kCellW / 2.0, cell_y + kSwatch + 32.0,
                 "rank " + std::to_string(entry.rank) + ", " + std::to_string(entry.ballot.votes) +
                     " votes",
                 {{"text-anchor", "middle"}, {"font-size", "10"}, {"font-family", "sans-serif"}});
    }
    return svg.str();
}

} // namespace kansei
