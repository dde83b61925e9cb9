#include "kansei/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace kansei {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(WordSource source) {
    switch (source) {
    case WordSource::Experts: return "Experts";
    case WordSource::ExperiencedUsers: return "ExperiencedUsers";
    case WordSource::RelatedStudies: return "RelatedStudies";
    case WordSource::IdeasVisions: return "IdeasVisions";
    case WordSource::Literature: return "Literature";
    }
    return "Experts";
}

std::optional<WordSource> word_source_from_string(std::string_view text) {
    if (text == "Experts") return WordSource::Experts;
    if (text == "ExperiencedUsers") return WordSource::ExperiencedUsers;
    if (text == "RelatedStudies") return WordSource::RelatedStudies;
    if (text == "IdeasVisions") return WordSource::IdeasVisions;
    if (text == "Literature") return WordSource::Literature;
    return std::nullopt;
}

std::string_view to_string(EmotionCategory category) {
    switch (category) {
    case EmotionCategory::BroadlyEvaluative: return "BroadlyEvaluative";
    case EmotionCategory::Novelty: return "Novelty";
    case EmotionCategory::Complexity: return "Complexity";
    case EmotionCategory::Intensity: return "Intensity";
    case EmotionCategory::Unity: return "Unity";
    case EmotionCategory::Prototypicality: return "Prototypicality";
    }
    return "BroadlyEvaluative";
}

std::optional<EmotionCategory> emotion_category_from_string(std::string_view text) {
    if (text == "BroadlyEvaluative") return EmotionCategory::BroadlyEvaluative;
    if (text == "Novelty") return EmotionCategory::Novelty;
    if (text == "Complexity") return EmotionCategory::Complexity;
    if (text == "Intensity") return EmotionCategory::Intensity;
    if (text == "Unity") return EmotionCategory::Unity;
    if (text == "Prototypicality") return EmotionCategory::Prototypicality;
    return std::nullopt;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

bool equals_ci(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

const KanseiWord& Lexicon::add_word(std::string_view text, WordSource source) {
    std::string cleaned = trim(text);
    if (cleaned.empty()) {
        throw Error(ErrorCode::EmptyWord, "word text is blank");
    }
    for (const KanseiWord& existing : words_) {
        if (equals_ci(existing.text, cleaned)) return existing;
    }
    words_.push_back({std::move(cleaned), source});
    return words_.back();
}

const KanseiWord* Lexicon::find(std::string_view text) const {
    std::string cleaned = trim(text);
    for (const KanseiWord& word : words_) {
        if (equals_ci(word.text, cleaned)) return &word;
    }
    return nullptr;
}

std::vector<WordGroup> group_words(const Lexicon& lexicon,
                                   const std::vector<std::pair<std::string, std::string>>& assignments,
                                   const std::vector<std::pair<std::string, std::string>>& representatives) {
    std::vector<WordGroup> groups;
    std::vector<std::string> assigned_texts;

    for (const auto& [word_text, group_name] : assignments) {
        const KanseiWord* word = lexicon.find(word_text);
        if (word == nullptr) {
            throw Error(ErrorCode::UnknownWord, "assigned word \"" + word_text + "\" is not in the lexicon");
        }
        for (const std::string& seen : assigned_texts) {
            if (equals_ci(seen, word->text)) {
                throw Error(ErrorCode::DuplicateAssignment,
                            "word \"" + word->text + "\" is assigned to more than one group");
            }
        }
        assigned_texts.push_back(word->text);

        WordGroup* group = nullptr;
        for (WordGroup& existing : groups) {
            if (existing.name == group_name) {
                group = &existing;
                break;
            }
        }
        if (group == nullptr) {
            groups.push_back({group_name, {}, {}});
            group = &groups.back();
        }
        group->members.push_back(*word);
    }

    for (WordGroup& group : groups) {
        const std::string* rep_text = nullptr;
        for (const auto& [group_name, word_text] : representatives) {
            if (group_name == group.name) {
                rep_text = &word_text;
                break;
            }
        }
        if (rep_text == nullptr) {
            if (group.members.size() == 1) {
                group.representative = group.members.front();
                continue;
            }
            throw Error(ErrorCode::RepresentativeNotInGroup,
                        "group \"" + group.name + "\" has no representative");
        }
        const KanseiWord* rep = nullptr;
        for (const KanseiWord& member : group.members) {
            if (equals_ci(member.text, *rep_text)) {
                rep = &member;
                break;
            }
        }
        if (rep == nullptr) {
            throw Error(ErrorCode::RepresentativeNotInGroup,
                        "representative \"" + *rep_text + "\" is not a member of group \"" + group.name + "\"");
        }
        group.representative = *rep;
    }

    for (const auto& [group_name, word_text] : representatives) {
        bool known = std::any_of(groups.begin(), groups.end(),
                                 [&](const WordGroup& g) { return g.name == group_name; });
        if (!known) {
            throw Error(ErrorCode::RepresentativeNotInGroup,
                        "representative entry names unknown group \"" + group_name + "\"");
        }
    }
    return groups;
}

BipolarPair make_bipolar(const Lexicon& lexicon, std::string_view word_text,
                         std::string_view negative_text, EmotionCategory category) {
    const KanseiWord* word = lexicon.find(word_text);
    if (word == nullptr) {
        throw Error(ErrorCode::UnknownWord, "word \"" + std::string(word_text) + "\" is not in the lexicon");
    }
    std::string negative = trim(negative_text);
    if (negative.empty()) {
        throw Error(ErrorCode::EmptyWord, "negative pole text is blank");
    }
    return {*word, std::move(negative), category};
}

std::string lexicon_to_json(const Lexicon& lexicon) {
    ordered_json doc;
    doc["words"] = ordered_json::array();
    for (const KanseiWord& word : lexicon.words()) {
        doc["words"].push_back({{"text", word.text}, {"source", std::string(to_string(word.source))}});
    }
    doc["groups"] = ordered_json::array();
    for (const WordGroup& group : lexicon.groups()) {
        ordered_json members = ordered_json::array();
        for (const KanseiWord& member : group.members) members.push_back(member.text);
        doc["groups"].push_back({{"name", group.name},
                                 {"members", members},
                                 {"representative", group.representative.text}});
    }
    doc["pairs"] = ordered_json::array();
    for (const BipolarPair& pair : lexicon.pairs()) {
        doc["pairs"].push_back({{"positive", pair.positive.text},
                                {"negative", pair.negative},
                                {"category", std::string(to_string(pair.category))}});
    }
    return doc.dump(2) + "\n";
}

Lexicon lexicon_from_json(std::string_view json_text, Diagnostics* diag, const std::string& file) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        detail::report(diag, file, 0, ErrorCode::InvalidValue, std::string("not valid JSON: ") + e.what());
        return {};
    }

    Lexicon lexicon;
    if (!doc.contains("words") || !doc["words"].is_array()) {
        detail::report(diag, file, 0, ErrorCode::InvalidValue, "missing \"words\" array");
        return lexicon;
    }
    for (const auto& entry : doc["words"]) {
        std::string text = entry.value("text", "");
        std::string source_text = entry.value("source", "");
        auto source = word_source_from_string(source_text);
        if (!source) {
            detail::report(diag, file, 0, ErrorCode::InvalidValue,
                           "unknown word source \"" + source_text + "\" for \"" + text + "\"");
            continue;
        }
        if (trim(text).empty()) {
            detail::report(diag, file, 0, ErrorCode::EmptyWord, "word entry with blank text");
            continue;
        }
        lexicon.add_word(text, *source);
    }

    if (doc.contains("groups")) {
        std::vector<std::pair<std::string, std::string>> assignments;
        std::vector<std::pair<std::string, std::string>> representatives;
        for (const auto& entry : doc["groups"]) {
            std::string name = entry.value("name", "");
            for (const auto& member : entry.value("members", ordered_json::array())) {
                assignments.emplace_back(member.get<std::string>(), name);
            }
            if (entry.contains("representative")) {
                representatives.emplace_back(name, entry["representative"].get<std::string>());
            }
        }
        try {
            lexicon.set_groups(group_words(lexicon, assignments, representatives));
        } catch (const Error& e) {
            detail::report(diag, file, 0, e.code(), e.what());
        }
    }

    if (doc.contains("pairs")) {
        for (const auto& entry : doc["pairs"]) {
            std::string positive = entry.value("positive", "");
            std::string negative = entry.value("negative", "");
            std::string category_text = entry.value("category", "");
            auto category = emotion_category_from_string(category_text);
            if (!category) {
                detail::report(diag, file, 0, ErrorCode::InvalidValue,
                               "unknown emotion category \"" + category_text + "\"");
                continue;
            }
            if (positive.find('|') != std::string::npos) {
                detail::report(diag, file, 0, ErrorCode::InvalidValue,
                               "word \"" + positive + "\" must not contain '|'");
                continue;
            }
            try {
                lexicon.add_pair(make_bipolar(lexicon, positive, negative, *category));
            } catch (const Error& e) {
                detail::report(diag, file, 0, e.code(), e.what());
            }
        }
    }
    return lexicon;
}

} // namespace kansei
