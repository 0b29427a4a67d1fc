#include "kmorph/tags.hpp"

#include <algorithm>
#include <array>

#include "kmorph/error.hpp"

namespace kmorph {

namespace {

struct TagName {
    std::string_view name;
    GeneralTag tag;
};

constexpr std::array<TagName, 16> kGeneralTags = {{
    {"A", GeneralTag::A},
    {"ADV", GeneralTag::ADV},
    {"DET", GeneralTag::DET},
    {"N", GeneralTag::N},
    {"NI", GeneralTag::NI},
    {"PRO", GeneralTag::PRO},
    {"V", GeneralTag::V},
    {"INT", GeneralTag::INT},
    {"Sfx", GeneralTag::Sfx},
    {"Morph", GeneralTag::Morph},
    {"Post", GeneralTag::Post},
    {"Sc", GeneralTag::Sc},
    {"Sd", GeneralTag::Sd},
    {"Sncomp", GeneralTag::Sncomp},
    {"St", GeneralTag::St},
    {"Suf", GeneralTag::Suf},
}};

} // namespace

std::string_view to_string(GeneralTag g) {
    for (const auto& e : kGeneralTags)
        if (e.tag == g) return e.name;
    return "?";
}

bool general_tag_from_string(std::string_view s, GeneralTag& out) {
    for (const auto& e : kGeneralTags) {
        if (e.name == s) {
            out = e.tag;
            return true;
        }
    }
    return false;
}

bool Tag::operator==(const Tag& o) const {
    if (general != o.general || features.size() != o.features.size()) return false;
    auto a = features;
    auto b = o.features;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

namespace {

Tag parse_tag_impl(std::string_view text, const FeatureRegistry* registry) {
    Tag tag;
    size_t plus = text.find('+');
    std::string_view head = plus == std::string_view::npos ? text : text.substr(0, plus);
    if (!general_tag_from_string(head, tag.general))
        throw Error(errc::unknown_general_tag,
                    "unknown general tag '" + std::string(head) + "'");
    size_t pos = head.size();
    while (pos < text.size()) {
        if (text[pos] != '+')
            throw Error(errc::tag_syntax, "expected '+' in tag '" + std::string(text) + "'");
        ++pos;
        size_t next = text.find('+', pos);
        std::string_view pair =
            text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        size_t eq = pair.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == pair.size())
            throw Error(errc::tag_syntax,
                        "malformed feature '" + std::string(pair) + "' in tag");
        std::string name(pair.substr(0, eq));
        std::string value(pair.substr(eq + 1));
        if (registry) {
            auto it = registry->features.find(name);
            if (it == registry->features.end())
                throw Error(errc::unknown_feature, "unknown feature '" + name + "'");
            if (it->second.count(value) == 0)
                throw Error(errc::unknown_feature_value,
                            "unknown value '" + value + "' for feature '" + name + "'");
        }
        for (const auto& f : tag.features)
            if (f.first == name)
                throw Error(errc::duplicate_feature, "duplicate feature '" + name + "'");
        if (tag.features.size() == kMaxTagFeatures)
            throw Error(errc::too_many_features, "tag has more than 4 features");
        tag.features.emplace_back(std::move(name), std::move(value));
        pos += pair.size();
    }
    return tag;
}

} // namespace

Tag parse_tag(std::string_view text, const FeatureRegistry& registry) {
    return parse_tag_impl(text, &registry);
}

Tag parse_tag(std::string_view text) { return parse_tag_impl(text, nullptr); }

std::string format_tag(const Tag& tag) {
    std::string out(to_string(tag.general));
    for (const auto& [name, value] : tag.features) {
        out += '+';
        out += name;
        out += '=';
        out += value;
    }
    return out;
}

bool tag_less(const Tag& a, const Tag& b) { return format_tag(a) < format_tag(b); }

} // namespace kmorph
