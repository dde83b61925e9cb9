#include "kansei/colorvote.hpp"

#include <algorithm>

#include "json.hpp"

#include "kansei/csv.hpp"
#include "kansei/lexicon.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(ColorSource source) {
    switch (source) {
    case ColorSource::IdeasVisions: return "IdeasVisions";
    case ColorSource::RelatedStudies: return "RelatedStudies";
    case ColorSource::Survey: return "Survey";
    }
    return "Survey";
}

std::optional<ColorSource> color_source_from_string(std::string_view text) {
    if (text == "IdeasVisions") return ColorSource::IdeasVisions;
    if (text == "RelatedStudies") return ColorSource::RelatedStudies;
    if (text == "Survey") return ColorSource::Survey;
    return std::nullopt;
}

TallyResult tally(const std::vector<ColorBallot>& ballots) {
    if (ballots.empty()) {
        throw Error(ErrorCode::EmptyBallots, "no ballots to tally");
    }
    for (std::size_t i = 0; i < ballots.size(); ++i) {
        for (std::size_t j = i + 1; j < ballots.size(); ++j) {
            if (ballots[i].name == ballots[j].name) {
                throw Error(ErrorCode::DuplicateColorName,
                            "ballot name \"" + ballots[i].name + "\" appears more than once");
            }
        }
    }

    std::vector<std::size_t> order(ballots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return ballots[lhs].votes > ballots[rhs].votes;
    });

    TallyResult result;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const ColorBallot& ballot = ballots[order[pos]];
        int rank = 1;
        for (const ColorBallot& other : ballots) {
            if (other.votes > ballot.votes) ++rank;
        }
        result.entries.push_back({ballot, rank});
        if (!result.groups.empty() &&
            result.entries[result.entries.size() - 2].rank == rank) {
            result.groups.back().push_back(ballot.name);
        } else {
            result.groups.push_back({ballot.name});
        }
    }
    return result;
}

TopColors top_colors(const TallyResult& ranking, std::size_t n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidSetting, "n must be at least 1");
    }
    TopColors result;
    std::size_t take = std::min(n, ranking.entries.size());
    // Extend across a tie group that straddles the cutoff.
    while (take < ranking.entries.size() &&
           ranking.entries[take].rank == ranking.entries[take - 1].rank) {
        ++take;
        result.oversized = true;
    }
    result.ballots.reserve(take);
    for (std::size_t i = 0; i < take; ++i) result.ballots.push_back(ranking.entries[i].ballot);
    return result;
}

std::vector<ColorBallot> parse_colors(std::string_view csv_text, Diagnostics* diag,
                                      const std::string& file) {
    auto rows = csv::parse(csv_text);
    const std::vector<std::string> expected_header{"name", "r", "g", "b", "votes", "source"};
    if (rows.empty() || rows.front().fields != expected_header) {
        detail::report(diag, file, rows.empty() ? 0 : rows.front().line, ErrorCode::BadHeader,
                       "colors header must be \"name,r,g,b,votes,source\"");
        return {};
    }

    std::vector<ColorBallot> ballots;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 6) {
            detail::report(diag, file, row.line, ErrorCode::MissingCell,
                           "row has " + std::to_string(row.fields.size()) + " fields, expected 6");
            continue;
        }
        ColorBallot ballot;
        ballot.name = trim(row.fields[0]);
        if (ballot.name.empty()) {
            detail::report(diag, file, row.line, ErrorCode::InvalidValue, "blank color name");
            continue;
        }
        bool duplicate = false;
        for (const ColorBallot& seen : ballots) {
            if (seen.name == ballot.name) {
                detail::report(diag, file, row.line, ErrorCode::DuplicateColorName,
                               "color \"" + ballot.name + "\" appears more than once");
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        bool ok = true;
        auto read_int = [&](const std::string& text, int low, int high, const char* what) -> int {
            try {
                std::size_t used = 0;
                int value = std::stoi(text, &used);
                if (used != text.size() || value < low || value > high) throw std::invalid_argument("");
                return value;
            } catch (const std::exception&) {
                detail::report(diag, file, row.line, ErrorCode::InvalidValue,
                               std::string(what) + " \"" + text + "\" must be an integer in " +
                                   std::to_string(low) + ".." + std::to_string(high));
                ok = false;
                return low;
            }
        };
        ballot.rgb[0] = read_int(trim(row.fields[1]), 0, 255, "red");
        ballot.rgb[1] = read_int(trim(row.fields[2]), 0, 255, "green");
        ballot.rgb[2] = read_int(trim(row.fields[3]), 0, 255, "blue");
        ballot.votes = read_int(trim(row.fields[4]), 0, 1000000, "votes");

        auto source = color_source_from_string(trim(row.fields[5]));
        if (!source) {
            detail::report(diag, file, row.line, ErrorCode::InvalidValue,
                           "unknown color source \"" + row.fields[5] + "\"");
            ok = false;
        } else {
            ballot.source = *source;
        }
        if (ok) ballots.push_back(std::move(ballot));
    }
    return ballots;
}

std::string tally_to_json(const TallyResult& result) {
    ordered_json doc;
    doc["ranking"] = ordered_json::array();
    for (const RankedBallot& entry : result.entries) {
        doc["ranking"].push_back({{"name", entry.ballot.name},
                                  {"rgb", entry.ballot.rgb},
                                  {"votes", entry.ballot.votes},
                                  {"source", std::string(to_string(entry.ballot.source))},
                                  {"rank", entry.rank}});
    }
    doc["tie_groups"] = result.groups;
    return doc.dump(2) + "\n";
}

TallyResult tally_from_json(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidValue, std::string("tally is not valid JSON: ") + e.what());
    }
    TallyResult result;
    for (const auto& entry : doc.at("ranking")) {
        RankedBallot ranked;
        ranked.ballot.name = entry.at("name").get<std::string>();
        auto rgb = entry.at("rgb").get<std::vector<int>>();
        if (rgb.size() != 3) {
            throw Error(ErrorCode::InvalidValue, "rgb must have three components");
        }
        ranked.ballot.rgb = {rgb[0], rgb[1], rgb[2]};
        ranked.ballot.votes = entry.at("votes").get<int>();
        auto source = color_source_from_string(entry.at("source").get<std::string>());
        if (!source) {
            throw Error(ErrorCode::InvalidValue,
                        "unknown color source \"" + entry.at("source").get<std::string>() + "\"");
        }
        ranked.ballot.source = *source;
        ranked.rank = entry.at("rank").get<int>();
        result.entries.push_back(std::move(ranked));
    }
    result.groups = doc.at("tie_groups").get<std::vector<std::vector<std::string>>>();
    return result;
}

} // namespace kansei
