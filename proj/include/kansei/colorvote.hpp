#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kansei/error.hpp"

namespace kansei {

enum class ColorSource { IdeasVisions, RelatedStudies, Survey };

std::string_view to_string(ColorSource source);
std::optional<ColorSource> color_source_from_string(std::string_view text);

struct ColorBallot {
    std::string name;
    std::array<int, 3> rgb{0, 0, 0};
    int votes = 0;
    ColorSource source = ColorSource::Survey;

    friend bool operator==(const ColorBallot&, const ColorBallot&) = default;
};

struct RankedBallot {
    ColorBallot ballot;
    int rank = 0; // competition style: 1, 2, 2, 4
};

struct TallyResult {
    std::vector<RankedBallot> entries;            // votes descending, ties in input order
    std::vector<std::vector<std::string>> groups; // ballot names per rank group
};

// Competition ranking: a ballot's rank is 1 plus the number of ballots with
// strictly more votes.
TallyResult tally(const std::vector<ColorBallot>& ballots);

struct TopColors {
    std::vector<ColorBallot> ballots;
    // True when a tie group straddled the cutoff and the whole group was
    // kept, so more than n ballots came back.
    bool oversized = false;
};

TopColors top_colors(const TallyResult& ranking, std::size_t n);

// CSV layout: header "name,r,g,b,votes,source".
std::vector<ColorBallot> parse_colors(std::string_view csv_text, Diagnostics* diag = nullptr,
                                      const std::string& file = "");

std::string tally_to_json(const TallyResult& result);
TallyResult tally_from_json(const std::string& json_text);

} // namespace kansei
