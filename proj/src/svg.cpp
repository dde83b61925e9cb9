#include "kansei/svg.hpp"

#include <cstdio>

namespace kansei {

std::string svg_num(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    // "-0.0000" and "0.0000" must serialize identically.
    if (std::string_view(buf) == "-0.0000") return "0.0000";
    return buf;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c); break;
        }
    }
    return out;
}

SvgDocument::SvgDocument(int width, int height) : width_(width), height_(height) {}

void SvgDocument::write_attrs(const Attrs& attrs) {
    for (const auto& [key, value] : attrs) {
        body_ += " ";
        body_ += key;
        body_ += "=\"";
        body_ += xml_escape(value);
        body_ += "\"";
    }
}

void SvgDocument::add_marker_defs() {
    body_ += "<defs>\n"
             "<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
             "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
             "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"red\"/>\n"
             "</marker>\n"
             "</defs>\n";
}

void SvgDocument::open_group(const Attrs& attrs) {
    body_ += "<g";
    write_attrs(attrs);
    body_ += ">\n";
    ++open_groups_;
}

void SvgDocument::close_group() {
    body_ += "</g>\n";
    --open_groups_;
}

void SvgDocument::line(double x1, double y1, double x2, double y2, const Attrs& attrs) {
    body_ += "<line x1=\"" + svg_num(x1) + "\" y1=\"" + svg_num(y1) + "\" x2=\"" + svg_num(x2) +
             "\" y2=\"" + svg_num(y2) + "\"";
    write_attrs(attrs);
    body_ += "/>\n";
}

void SvgDocument::rect(double x, double y, double w, double h, const Attrs& attrs,
                       const std::string& title) {
    body_ += "<rect x=\"" + svg_num(x) + "\" y=\"" + svg_num(y) + "\" width=\"" + svg_num(w) +
             "\" height=\"" + svg_num(h) + "\"";
    write_attrs(attrs);
    if (title.empty()) {
        body_ += "/>\n";
    } else {
        body_ += "><title>" + xml_escape(title) + "</title></rect>\n";
    }
}

void SvgDocument::circle(double cx, double cy, double r, const Attrs& attrs) {
    body_ += "<circle cx=\"" + svg_num(cx) + "\" cy=\"" + svg_num(cy) + "\" r=\"" + svg_num(r) + "\"";
    write_attrs(attrs);
    body_ += "/>\n";
}

void SvgDocument::text(double x, double y, std::string_view content, const Attrs& attrs) {
    body_ += "<text x=\"" + svg_num(x) + "\" y=\"" + svg_num(y) + "\"";
    write_attrs(attrs);
    body_ += ">" + xml_escape(content) + "</text>\n";
}

void SvgDocument::polyline(const std::vector<std::pair<double, double>>& points, const Attrs& attrs) {
    body_ += "<polyline points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) body_ += " ";
        body_ += svg_num(points[i].first) + "," + svg_num(points[i].second);
    }
    body_ += "\"";
    write_attrs(attrs);
    body_ += "/>\n";
}

std::string SvgDocument::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
                      "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
                      std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
    out += body_;
    for (int i = 0; i < open_groups_; ++i) out += "</g>\n";
    out += "</svg>\n";
    return out;
}

LinearScale::LinearScale(double domain_min, double domain_max, double range_min, double range_max)
    : domain_min_(domain_min),
      domain_span_(domain_max - domain_min),
      range_min_(range_min),
      range_span_(range_max - range_min) {
    if (domain_span_ == 0.0) domain_span_ = 1.0;
}

double LinearScale::operator()(double value) const {
    return range_min_ + (value - domain_min_) / domain_span_ * range_span_;
}

} // namespace kansei
