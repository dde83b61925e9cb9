#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kansei/error.hpp"

namespace kansei {

enum class WordSource { Experts, ExperiencedUsers, RelatedStudies, IdeasVisions, Literature };

std::string_view to_string(WordSource source);
std::optional<WordSource> word_source_from_string(std::string_view text);

enum class EmotionCategory { BroadlyEvaluative, Novelty, Complexity, Intensity, Unity, Prototypicality };

std::string_view to_string(EmotionCategory category);
std::optional<EmotionCategory> emotion_category_from_string(std::string_view text);

struct KanseiWord {
    std::string text;
    WordSource source = WordSource::Experts;

    friend bool operator==(const KanseiWord&, const KanseiWord&) = default;
};

struct WordGroup {
    std::string name;
    std::vector<KanseiWord> members;
    KanseiWord representative;
};

// A semantic-differential anchor: the positive pole is a collected word,
// the negative pole is free antonym text.
struct BipolarPair {
    KanseiWord positive;
    std::string negative;
    EmotionCategory category = EmotionCategory::BroadlyEvaluative;

    friend bool operator==(const BipolarPair&, const BipolarPair&) = default;
};

std::string trim(std::string_view text);
bool equals_ci(std::string_view a, std::string_view b);

// Word collection with case-insensitive dedup; the first-seen casing wins.
// Groups and pairs live here too so one file round-trips the whole lexicon.
class Lexicon {
public:
    // Trims, then inserts unless a case-insensitive duplicate exists.
    // Returns the stored word. Throws EmptyWord on blank input.
    const KanseiWord& add_word(std::string_view text, WordSource source);

    const KanseiWord* find(std::string_view text) const; // case-insensitive
    bool contains(std::string_view text) const { return find(text) != nullptr; }

    const std::vector<KanseiWord>& words() const { return words_; }
    const std::vector<WordGroup>& groups() const { return groups_; }
    const std::vector<BipolarPair>& pairs() const { return pairs_; }

    void set_groups(std::vector<WordGroup> groups) { groups_ = std::move(groups); }
    void add_pair(BipolarPair pair) { pairs_.push_back(std::move(pair)); }

private:
    std::vector<KanseiWord> words_;
    std::vector<WordGroup> groups_;
    std::vector<BipolarPair> pairs_;
};

// (word, group-name) assignments in input order and (group-name, word)
// representative picks. Groups come back in first-appearance order.
// Singleton groups get their only member as representative automatically.
std::vector<WordGroup> group_words(const Lexicon& lexicon,
                                   const std::vector<std::pair<std::string, std::string>>& assignments,
                                   const std::vector<std::pair<std::string, std::string>>& representatives);

BipolarPair make_bipolar(const Lexicon& lexicon, std::string_view word_text,
                         std::string_view negative_text, EmotionCategory category);

// JSON file layout: {"words":[{text,source}],"groups":[{name,members,representative}],
// "pairs":[{positive,negative,category}]}. Members reference word texts.
std::string lexicon_to_json(const Lexicon& lexicon);
Lexicon lexicon_from_json(std::string_view json_text, Diagnostics* diag = nullptr,
                          const std::string& file = "");

} // namespace kansei
