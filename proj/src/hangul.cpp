#include "kmorph/hangul.hpp"

#include <array>

namespace kmorph::hangul {

namespace {

// Compatibility jamo for the 19 leading consonants ᄀ..ᄒ.
constexpr std::array<char32_t, 19> kLeadCompat = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141, 0x3142, 0x3143,
    0x3145, 0x3146, 0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D,
    0x314E};

// Compatibility jamo for the 27 trailing consonants ᆨ..ᇂ.
constexpr std::array<char32_t, 27> kTrailCompat = {
    0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139, 0x313A,
    0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142, 0x3144,
    0x3145, 0x3146, 0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E};

} // namespace

void decompose_syllable(char32_t c, std::u32string& out) {
    if (!is_syllable(c)) {
        out.push_back(c);
        return;
    }
    char32_t index = c - kSyllableFirst;
    out.push_back(kLeadFirst + index / (kVowelCount * kTrailCount));
    out.push_back(kVowelFirst + (index % (kVowelCount * kTrailCount)) / kTrailCount);
    char32_t trail = index % kTrailCount;
    if (trail != 0) out.push_back(kTrailFirst + trail - 1);
}

std::u32string decompose_syllable(char32_t c) {
    std::u32string out;
    decompose_syllable(c, out);
    return out;
}

std::u32string decompose_text(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size() * 2);
    for (char32_t c : text) decompose_syllable(c, out);
    return out;
}

std::u32string compose_letters(std::u32string_view letters) {
    std::u32string out;
    out.reserve(letters.size());
    size_t i = 0;
    while (i < letters.size()) {
        char32_t c = letters[i];
        if (is_lead(c) && i + 1 < letters.size() && is_vowel(letters[i + 1])) {
            char32_t lead = c - kLeadFirst;
            char32_t vowel = letters[i + 1] - kVowelFirst;
            char32_t trail = 0;
            i += 2;
            if (i < letters.size() && is_trail(letters[i])) {
                trail = letters[i] - kTrailFirst + 1;
                ++i;
            }
            out.push_back(kSyllableFirst + (lead * kVowelCount + vowel) * kTrailCount + trail);
        } else if (is_conjoining(c)) {
            out.push_back(to_compat(c));
            ++i;
        } else {
            out.push_back(c);
            ++i;
        }
    }
    return out;
}

char32_t to_compat(char32_t c) {
    if (is_lead(c)) return kLeadCompat[c - kLeadFirst];
    if (is_vowel(c)) return 0x314F + (c - kVowelFirst);
    if (is_trail(c)) return kTrailCompat[c - kTrailFirst];
    return 0;
}

char32_t compat_lead(char32_t c) {
    for (size_t i = 0; i < kLeadCompat.size(); ++i)
        if (kLeadCompat[i] == c) return kLeadFirst + static_cast<char32_t>(i);
    return 0;
}

char32_t compat_vowel(char32_t c) {
    if (c >= 0x314F && c <= 0x3163) return kVowelFirst + (c - 0x314F);
    return 0;
}

char32_t compat_trail(char32_t c) {
    for (size_t i = 0; i < kTrailCompat.size(); ++i)
        if (kTrailCompat[i] == c) return kTrailFirst + static_cast<char32_t>(i);
    return 0;
}

namespace {

// True if the scalar begins with a vowel sound slot once decomposed: a bare
// vowel in either jamo block. Full syllables begin with a leading consonant.
bool starts_with_vowel(char32_t c) {
    return is_vowel(c) || compat_vowel(c) != 0;
}

} // namespace

std::u32string normalize_field(std::u32string_view text, FieldSide side) {
    std::u32string out;
    out.reserve(text.size() * 2);
    for (size_t i = 0; i < text.size(); ++i) {
        char32_t c = text[i];
        if (is_syllable(c) || is_conjoining(c) || !is_compat_jamo(c)) {
            decompose_syllable(c, out);
            continue;
        }
        if (char32_t v = compat_vowel(c)) {
            out.push_back(v);
            continue;
        }
        char32_t lead = compat_lead(c);
        char32_t trail = compat_trail(c);
        bool prefer_lead;
        if (i + 1 < text.size())
            prefer_lead = starts_with_vowel(text[i + 1]);
        else
            prefer_lead = (side == FieldSide::stem);
        char32_t pick = prefer_lead ? (lead ? lead : trail) : (trail ? trail : lead);
        out.push_back(pick ? pick : c);
    }
    return out;
}

} // namespace kmorph::hangul
