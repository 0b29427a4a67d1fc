#ifndef KMORPH_HANGUL_HPP
#define KMORPH_HANGUL_HPP

#include <string>
#include <string_view>

namespace kmorph::hangul {

// Unicode blocks involved. The lexicon alphabet is the modern conjoining
// jamo set; compatibility jamo appear only in display output and in
// hand-authored resource files.
inline constexpr char32_t kSyllableFirst = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr char32_t kLeadFirst = 0x1100;   // ᄀ
inline constexpr char32_t kLeadLast = 0x1112;    // ᄒ
inline constexpr char32_t kVowelFirst = 0x1161;  // ᅡ
inline constexpr char32_t kVowelLast = 0x1175;   // ᅵ
inline constexpr char32_t kTrailFirst = 0x11A8;  // ᆨ
inline constexpr char32_t kTrailLast = 0x11C2;   // ᇂ
inline constexpr char32_t kCompatFirst = 0x3131; // ㄱ
inline constexpr char32_t kCompatLast = 0x3163;  // ㅣ

inline constexpr int kVowelCount = 21;
inline constexpr int kTrailCount = 28; // slot count including "no trailing"

inline bool is_syllable(char32_t c) { return c >= kSyllableFirst && c <= kSyllableLast; }
inline bool is_lead(char32_t c) { return c >= kLeadFirst && c <= kLeadLast; }
inline bool is_vowel(char32_t c) { return c >= kVowelFirst && c <= kVowelLast; }
inline bool is_trail(char32_t c) { return c >= kTrailFirst && c <= kTrailLast; }
inline bool is_conjoining(char32_t c) { return is_lead(c) || is_vowel(c) || is_trail(c); }
inline bool is_compat_jamo(char32_t c) { return c >= kCompatFirst && c <= kCompatLast; }
inline bool is_hangul(char32_t c) { return is_syllable(c) || is_conjoining(c) || is_compat_jamo(c); }

// Precomposed syllable -> conjoining jamo; any other scalar is appended as-is.
void decompose_syllable(char32_t c, std::u32string& out);
std::u32string decompose_syllable(char32_t c);

// Per-character decomposition of a whole text, order preserved.
std::u32string decompose_text(std::u32string_view text);

// Greedy left-to-right recomposition of maximal L(+V(+T)) groups. Jamo that
// cannot join a full syllable are emitted in compatibility form; output never
// contains conjoining jamo.
std::u32string compose_letters(std::u32string_view letters);

// Conjoining jamo -> compatibility display form (0 if c is not conjoining).
char32_t to_compat(char32_t c);

// Compatibility jamo -> positional conjoining forms; 0 where a class has no
// such form (e.g. ㄳ has no leading form, ㄸ no trailing form).
char32_t compat_lead(char32_t c);
char32_t compat_vowel(char32_t c);
char32_t compat_trail(char32_t c);

// When normalizing authored resource text, a lone compatibility consonant at
// the end of a field is read as leading in stem-side fields (it will head the
// next syllable: 크 -> ㅋ) and as trailing in ending-side fields (it closes
// the previous syllable: -ㄴ).
enum class FieldSide { stem, ending };

// Decomposes a resource field to the conjoining alphabet: syllables are
// decomposed, conjoining jamo pass through, compatibility jamo are resolved
// by position (leading before a vowel, trailing otherwise, field side rule at
// the end of the string). Non-hangul characters pass through verbatim.
std::u32string normalize_field(std::u32string_view text, FieldSide side);

} // namespace kmorph::hangul

#endif
