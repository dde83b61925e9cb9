#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kansei {

// Formats a number for SVG output: fixed 4 decimals, so repeated runs emit
// identical bytes.
std::string svg_num(double value);

std::string xml_escape(std::string_view text);

// Minimal push-style SVG writer. Elements appear in emission order; nothing
// is reordered, so output is deterministic by construction.
class SvgDocument {
public:
    SvgDocument(int width, int height);

    using Attrs = std::vector<std::pair<std::string, std::string>>;

    void add_marker_defs(); // arrowhead used by biplot arrows
    void open_group(const Attrs& attrs = {});
    void close_group();

    void line(double x1, double y1, double x2, double y2, const Attrs& attrs = {});
    void rect(double x, double y, double w, double h, const Attrs& attrs = {},
              const std::string& title = "");
    void circle(double cx, double cy, double r, const Attrs& attrs = {});
    void text(double x, double y, std::string_view content, const Attrs& attrs = {});
    void polyline(const std::vector<std::pair<double, double>>& points, const Attrs& attrs = {});

    std::string str() const;

private:
    void write_attrs(const Attrs& attrs);

    int width_;
    int height_;
    int open_groups_ = 0;
    std::string body_;
};

// Maps a data interval onto a pixel interval (pixel axes may run downward).
class LinearScale {
public:
    LinearScale(double domain_min, double domain_max, double range_min, double range_max);
    double operator()(double value) const;

private:
    double domain_min_;
    double domain_span_;
    double range_min_;
    double range_span_;
};

} // namespace kansei
