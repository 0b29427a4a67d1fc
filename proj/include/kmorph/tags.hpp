#ifndef KMORPH_TAGS_HPP
#define KMORPH_TAGS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmorph {

// The closed set of 16 general part-of-speech tags.
enum class GeneralTag : uint8_t {
    A,      // adjective
    ADV,    // adverb
    DET,    // determiner
    N,      // noun
    NI,     // bound noun
    PRO,    // pronoun
    V,      // verb
    INT,    // interjection
    Sfx,    // derivational suffix
    Morph,  // pre-final verb/adjective ending
    Post,   // postposition
    Sc,     // conjunctive suffix
    Sd,     // determinative suffix
    Sncomp, // nominalization suffix
    St,     // final ending
    Suf,    // pre-final nominal ending
};

std::string_view to_string(GeneralTag g);
bool general_tag_from_string(std::string_view s, GeneralTag& out);

// Data-driven inventory of subcategory features and their allowed values.
struct FeatureRegistry {
    std::map<std::string, std::set<std::string>> features;

    bool has(const std::string& name, const std::string& value) const {
        auto it = features.find(name);
        return it != features.end() && it->second.count(value) > 0;
    }
    bool operator==(const FeatureRegistry&) const = default;
};

// One general tag plus 0..4 (feature, value) pairs. Feature order is
// preserved for formatting but ignored by equality.
struct Tag {
    GeneralTag general = GeneralTag::N;
    std::vector<std::pair<std::string, std::string>> features;

    bool operator==(const Tag& o) const;
    bool operator!=(const Tag& o) const { return !(*this == o); }
};

inline constexpr size_t kMaxTagFeatures = 4;

// Parses `GENERAL(+name=value)*`, validating features against the registry.
// Throws Error with the offending condition.
Tag parse_tag(std::string_view text, const FeatureRegistry& registry);

// Grammar-and-general-tag parse without feature validation; used when reading
// records that were validated when the lexicon was compiled.
Tag parse_tag(std::string_view text);

std::string format_tag(const Tag& tag);

// Ordering helper for canonical sorts (compares formatted form).
bool tag_less(const Tag& a, const Tag& b);

} // namespace kmorph

#endif
