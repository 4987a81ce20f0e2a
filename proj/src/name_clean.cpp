#include "geogap/name_clean.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "geogap/errors.hpp"

namespace geogap {

namespace utf8 {

bool is_valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        if (!decode_next(s, i)) return false;
    }
    return true;
}

std::optional<char32_t> decode_next(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return std::nullopt;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) {
        ++i;
        return std::nullopt;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return std::nullopt;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong forms and surrogates
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
        ++i;
        return std::nullopt;
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

namespace {

struct ComposePair {
    char32_t base;
    char32_t mark;
    char32_t composed;
};

// Latin precompositions for the combining marks seen in author and
// institution strings. Pairs outside the table are left decomposed.
constexpr ComposePair kCompose[] = {
    {'A', 0x300, 0xC0},  {'E', 0x300, 0xC8},  {'I', 0x300, 0xCC},  {'O', 0x300, 0xD2},
    {'U', 0x300, 0xD9},  {'a', 0x300, 0xE0},  {'e', 0x300, 0xE8},  {'i', 0x300, 0xEC},
    {'o', 0x300, 0xF2},  {'u', 0x300, 0xF9},
    {'A', 0x301, 0xC1},  {'C', 0x301, 0x106}, {'E', 0x301, 0xC9},  {'I', 0x301, 0xCD},
    {'L', 0x301, 0x139}, {'N', 0x301, 0x143}, {'O', 0x301, 0xD3},  {'R', 0x301, 0x154},
    {'S', 0x301, 0x15A}, {'U', 0x301, 0xDA},  {'Y', 0x301, 0xDD},  {'Z', 0x301, 0x179},
    {'a', 0x301, 0xE1},  {'c', 0x301, 0x107}, {'e', 0x301, 0xE9},  {'i', 0x301, 0xED},
    {'l', 0x301, 0x13A}, {'n', 0x301, 0x144}, {'o', 0x301, 0xF3},  {'r', 0x301, 0x155},
    {'s', 0x301, 0x15B}, {'u', 0x301, 0xFA},  {'y', 0x301, 0xFD},  {'z', 0x301, 0x17A},
    {'A', 0x302, 0xC2},  {'E', 0x302, 0xCA},  {'I', 0x302, 0xCE},  {'O', 0x302, 0xD4},
    {'U', 0x302, 0xDB},  {'a', 0x302, 0xE2},  {'e', 0x302, 0xEA},  {'i', 0x302, 0xEE},
    {'o', 0x302, 0xF4},  {'u', 0x302, 0xFB},
    {'A', 0x303, 0xC3},  {'N', 0x303, 0xD1},  {'O', 0x303, 0xD5},  {'a', 0x303, 0xE3},
    {'n', 0x303, 0xF1},  {'o', 0x303, 0xF5},
    {'A', 0x304, 0x100}, {'E', 0x304, 0x112}, {'I', 0x304, 0x12A}, {'O', 0x304, 0x14C},
    {'U', 0x304, 0x16A}, {'a', 0x304, 0x101}, {'e', 0x304, 0x113}, {'i', 0x304, 0x12B},
    {'o', 0x304, 0x14D}, {'u', 0x304, 0x16B},
    {'A', 0x306, 0x102}, {'G', 0x306, 0x11E}, {'a', 0x306, 0x103}, {'g', 0x306, 0x11F},
    {'I', 0x307, 0x130}, {'Z', 0x307, 0x17B}, {'z', 0x307, 0x17C},
    {'A', 0x308, 0xC4},  {'E', 0x308, 0xCB},  {'I', 0x308, 0xCF},  {'O', 0x308, 0xD6},
    {'U', 0x308, 0xDC},  {'Y', 0x308, 0x178}, {'a', 0x308, 0xE4},  {'e', 0x308, 0xEB},
    {'i', 0x308, 0xEF},  {'o', 0x308, 0xF6},  {'u', 0x308, 0xFC},  {'y', 0x308, 0xFF},
    {'A', 0x30A, 0xC5},  {'U', 0x30A, 0x16E}, {'a', 0x30A, 0xE5},  {'u', 0x30A, 0x16F},
    {'O', 0x30B, 0x150}, {'U', 0x30B, 0x170}, {'o', 0x30B, 0x151}, {'u', 0x30B, 0x171},
    {'C', 0x30C, 0x10C}, {'D', 0x30C, 0x10E}, {'E', 0x30C, 0x11A}, {'L', 0x30C, 0x13D},
    {'N', 0x30C, 0x147}, {'R', 0x30C, 0x158}, {'S', 0x30C, 0x160}, {'T', 0x30C, 0x164},
    {'Z', 0x30C, 0x17D}, {'c', 0x30C, 0x10D}, {'d', 0x30C, 0x10F}, {'e', 0x30C, 0x11B},
    {'l', 0x30C, 0x13E}, {'n', 0x30C, 0x148}, {'r', 0x30C, 0x159}, {'s', 0x30C, 0x161},
    {'t', 0x30C, 0x165}, {'z', 0x30C, 0x17E},
    {'C', 0x327, 0xC7},  {'G', 0x327, 0x122}, {'K', 0x327, 0x136}, {'L', 0x327, 0x13B},
    {'N', 0x327, 0x145}, {'R', 0x327, 0x156}, {'S', 0x327, 0x15E}, {'T', 0x327, 0x162},
    {'c', 0x327, 0xE7},  {'g', 0x327, 0x123}, {'k', 0x327, 0x137}, {'l', 0x327, 0x13C},
    {'n', 0x327, 0x146}, {'r', 0x327, 0x157}, {'s', 0x327, 0x15F}, {'t', 0x327, 0x163},
    {'A', 0x328, 0x104}, {'E', 0x328, 0x118}, {'I', 0x328, 0x12E}, {'U', 0x328, 0x172},
    {'a', 0x328, 0x105}, {'e', 0x328, 0x119}, {'i', 0x328, 0x12F}, {'u', 0x328, 0x173},
};

std::optional<char32_t> compose_pair(char32_t base, char32_t mark) {
    for (const auto& p : kCompose) {
        if (p.base == base && p.mark == mark) return p.composed;
    }
    return std::nullopt;
}

bool is_combining_mark(char32_t cp) { return cp >= 0x300 && cp <= 0x36F; }

// ASCII base form of a precomposed Latin letter, or nullptr.
const char* latin_base(char32_t cp) {
    if (cp >= 0xC0 && cp <= 0xC5) return "a";
    if (cp == 0xC6) return "ae";
    if (cp == 0xC7) return "c";
    if (cp >= 0xC8 && cp <= 0xCB) return "e";
    if (cp >= 0xCC && cp <= 0xCF) return "i";
    if (cp == 0xD0) return "d";
    if (cp == 0xD1) return "n";
    if ((cp >= 0xD2 && cp <= 0xD6) || cp == 0xD8) return "o";
    if (cp >= 0xD9 && cp <= 0xDC) return "u";
    if (cp == 0xDD) return "y";
    if (cp == 0xDE) return "th";
    if (cp == 0xDF) return "ss";
    if (cp >= 0xE0 && cp <= 0xE5) return "a";
    if (cp == 0xE6) return "ae";
    if (cp == 0xE7) return "c";
    if (cp >= 0xE8 && cp <= 0xEB) return "e";
    if (cp >= 0xEC && cp <= 0xEF) return "i";
    if (cp == 0xF0) return "d";
    if (cp == 0xF1) return "n";
    if ((cp >= 0xF2 && cp <= 0xF6) || cp == 0xF8) return "o";
    if (cp >= 0xF9 && cp <= 0xFC) return "u";
    if (cp == 0xFD || cp == 0xFF) return "y";
    if (cp == 0xFE) return "th";
    if (cp >= 0x100 && cp <= 0x105) return "a";
    if (cp >= 0x106 && cp <= 0x10D) return "c";
    if (cp >= 0x10E && cp <= 0x111) return "d";
    if (cp >= 0x112 && cp <= 0x11B) return "e";
    if (cp >= 0x11C && cp <= 0x123) return "g";
    if (cp >= 0x124 && cp <= 0x127) return "h";
    if (cp >= 0x128 && cp <= 0x131) return "i";
    if (cp == 0x132 || cp == 0x133) return "ij";
    if (cp == 0x134 || cp == 0x135) return "j";
    if (cp >= 0x136 && cp <= 0x138) return "k";
    if (cp >= 0x139 && cp <= 0x142) return "l";
    if (cp >= 0x143 && cp <= 0x14B) return "n";
    if (cp >= 0x14C && cp <= 0x151) return "o";
    if (cp == 0x152 || cp == 0x153) return "oe";
    if (cp >= 0x154 && cp <= 0x159) return "r";
    if (cp >= 0x15A && cp <= 0x161) return "s";
    if (cp >= 0x162 && cp <= 0x167) return "t";
    if (cp >= 0x168 && cp <= 0x173) return "u";
    if (cp == 0x174 || cp == 0x175) return "w";
    if (cp >= 0x176 && cp <= 0x178) return "y";
    if (cp >= 0x179 && cp <= 0x17E) return "z";
    if (cp == 0x17F) return "s";
    if (cp == 0x218 || cp == 0x219) return "s";
    if (cp == 0x21A || cp == 0x21B) return "t";
    return nullptr;
}

bool is_space_cp(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\r' || cp == '\n' || cp == '\v' || cp == '\f' ||
           cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F || cp == 0x3000;
}

bool is_letter_cp(char32_t cp) {
    if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
    if (is_combining_mark(cp)) return false;
    if (cp == 0xD7 || cp == 0xF7) return false;                // multiplication/division signs
    if (cp >= 0x2000 && cp <= 0x206F) return false;            // general punctuation
    return cp >= 0xC0;
}

std::vector<char32_t> decode_all(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (auto cp = decode_next(s, i)) {
            cps.push_back(*cp);
        } else {
            cps.push_back(0xFFFD);
        }
    }
    return cps;
}

}  // namespace

std::string compose_nfc_latin(std::string_view s) {
    auto cps = decode_all(s);
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        std::size_t j = i + 1;
        while (j < cps.size() && is_combining_mark(cps[j])) {
            if (auto composed = compose_pair(cp, cps[j])) {
                cp = *composed;
                ++j;
            } else {
                break;
            }
        }
        append(out, cp);
        while (j < cps.size() && is_combining_mark(cps[j])) {
            append(out, cps[j]);
            ++j;
        }
        i = j;
    }
    return out;
}

std::string fold_to_key(std::string_view s) {
    std::string composed = compose_nfc_latin(s);
    std::string out;
    out.reserve(composed.size());
    std::size_t i = 0;
    while (i < composed.size()) {
        auto cp = decode_next(composed, i);
        if (!cp) continue;
        if (is_combining_mark(*cp)) continue;
        if (*cp < 0x80) {
            out += static_cast<char>(std::tolower(static_cast<int>(*cp)));
        } else if (const char* base = latin_base(*cp)) {
            out += base;
        } else {
            append(out, *cp);
        }
    }
    return out;
}

}  // namespace utf8

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < s.size()) {
        auto cp = utf8::decode_next(s, i);
        if (!cp) continue;
        if (utf8::is_space_cp(*cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            utf8::append(current, *cp);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

// A token is an initial when it is a single letter optionally followed by '.'.
bool is_initial_token(std::string_view token) {
    std::size_t i = 0;
    auto first = utf8::decode_next(token, i);
    if (!first || !utf8::is_letter_cp(*first)) return false;
    if (i == token.size()) return true;
    return token.substr(i) == ".";
}

}  // namespace

CleanName normalize_name(std::string_view raw, NameOrder order) {
    auto result = try_normalize_name(raw, order);
    if (!result) throw EmptyNameError();
    return *result;
}

std::optional<CleanName> try_normalize_name(std::string_view raw, NameOrder order) {
    std::string composed = utf8::compose_nfc_latin(raw);
    auto tokens = split_tokens(composed);
    if (tokens.empty()) return std::nullopt;

    // With two or more tokens, one token is the family name: the last under
    // "given family" order, the first under "family given".
    std::size_t begin = 0;
    std::size_t end = tokens.size();
    if (tokens.size() >= 2) {
        if (order == NameOrder::GivenFamily) {
            end = tokens.size() - 1;
        } else {
            begin = 1;
        }
    }

    CleanName out;
    out.raw.assign(raw);
    out.initials_only = true;
    for (std::size_t i = begin; i < end; ++i) {
        if (!is_initial_token(tokens[i])) {
            out.initials_only = false;
            out.first_token = tokens[i];
            break;
        }
    }
    if (!out.initials_only) {
        out.normalized = utf8::fold_to_key(out.first_token);
    }
    return out;
}

CleanInstitution clean_institution(std::string_view raw) {
    auto result = try_clean_institution(raw);
    if (!result) throw EmptyInstitutionError();
    return *result;
}

std::optional<CleanInstitution> try_clean_institution(std::string_view raw) {
    std::string composed = utf8::compose_nfc_latin(raw);
    std::string collapsed;
    collapsed.reserve(composed.size());

    bool pending_space = false;
    bool any_letter = false;
    char32_t last_punct = 0;
    std::size_t i = 0;
    while (i < composed.size()) {
        auto cp = utf8::decode_next(composed, i);
        if (!cp) continue;
        if (*cp < 0x20 || *cp == 0x7F || utf8::is_space_cp(*cp)) {
            pending_space = !collapsed.empty();
            last_punct = 0;
            continue;
        }
        const bool is_ascii_punct = *cp < 0x80 && std::ispunct(static_cast<int>(*cp)) != 0;
        if (is_ascii_punct && *cp == last_punct && !pending_space) {
            continue;  // e.g. "---" -> "-"
        }
        if (pending_space) {
            collapsed += ' ';
            pending_space = false;
        }
        utf8::append(collapsed, *cp);
        last_punct = is_ascii_punct ? *cp : 0;
        if (utf8::is_letter_cp(*cp)) any_letter = true;
    }
    if (!any_letter) return std::nullopt;
    CleanInstitution out;
    out.raw.assign(raw);
    out.normalized = std::move(collapsed);
    return out;
}

NameKeySets distinct_name_keys(
    std::span<const AuthorshipRecord> authorships, NameOrder order,
    const std::function<std::optional<std::string>(const AuthorshipRecord&)>& country_of) {
    NameKeySets sets;
    for (const auto& rec : authorships) {
        auto name = try_normalize_name(rec.author_name_raw, order);
        if (!name || name->initials_only) continue;
        sets.names.insert(name->normalized);
        if (country_of) {
            if (auto cc = country_of(rec)) {
                sets.name_country_pairs.emplace(name->normalized, *cc);
            }
        }
    }
    return sets;
}

}  // namespace geogap
