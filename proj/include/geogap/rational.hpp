#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace geogap {

// Exact rational on int64. Always reduced, denominator > 0.
// Aggregates over desk-scale corpora stay far below the int64 range;
// intermediates use 128-bit arithmetic and overflow throws.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator);

    static Rational integer(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    double to_double() const;

    // Fixed-point rendering: round half to even, '.' separator,
    // no thousands grouping, exactly `places` fraction digits.
    std::string to_decimal(int places) const;

    // Lossless "num/den" form for intermediate files.
    std::string to_fraction() const;
    static std::optional<Rational> parse_fraction(std::string_view s);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace geogap
