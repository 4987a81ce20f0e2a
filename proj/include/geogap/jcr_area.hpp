#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geogap {

// The seven Computer Science subject categories of the 2016 JCR release.
enum class JcrArea : std::uint8_t {
    CS_AI,
    CS_CYB,
    CS_HA,
    CS_INTER,
    CS_IS,
    CS_SE,
    CS_TM,
};

inline constexpr std::array<JcrArea, 7> kAllAreas = {
    JcrArea::CS_AI,  JcrArea::CS_CYB, JcrArea::CS_HA, JcrArea::CS_INTER,
    JcrArea::CS_IS,  JcrArea::CS_SE,  JcrArea::CS_TM,
};

constexpr std::string_view area_name(JcrArea a) {
    switch (a) {
        case JcrArea::CS_AI: return "CS_AI";
        case JcrArea::CS_CYB: return "CS_CYB";
        case JcrArea::CS_HA: return "CS_HA";
        case JcrArea::CS_INTER: return "CS_INTER";
        case JcrArea::CS_IS: return "CS_IS";
        case JcrArea::CS_SE: return "CS_SE";
        case JcrArea::CS_TM: return "CS_TM";
    }
    return "?";
}

constexpr std::optional<JcrArea> parse_area(std::string_view s) {
    for (JcrArea a : kAllAreas) {
        if (area_name(a) == s) return a;
    }
    return std::nullopt;
}

// Small set of areas; a journal may be indexed in several.
class AreaSet {
public:
    void insert(JcrArea a) { bits_ |= mask(a); }
    bool contains(JcrArea a) const { return bits_ & mask(a); }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool operator==(const AreaSet&) const = default;

    std::vector<JcrArea> values() const {
        std::vector<JcrArea> out;
        for (JcrArea a : kAllAreas) {
            if (contains(a)) out.push_back(a);
        }
        return out;
    }

private:
    static constexpr std::uint8_t mask(JcrArea a) {
        return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(a));
    }
    std::uint8_t bits_ = 0;
};

}  // namespace geogap
