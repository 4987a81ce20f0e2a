#include "geogap/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace geogap {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational overflow");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(checked_narrow(num), checked_narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("rational: zero denominator");
    i128 num = numerator;
    i128 den = denominator;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = checked_narrow(num);
    den_ = checked_narrow(den);
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_decimal(int places) const {
    if (places < 0 || places > 18) throw std::domain_error("rational: bad places");
    i128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    bool negative = num_ < 0;
    i128 abs_num = negative ? -i128(num_) : i128(num_);
    i128 scaled = abs_num * scale;
    i128 q = scaled / den_;
    i128 r = scaled % den_;

    // round half to even on the remainder
    i128 twice = r * 2;
    if (twice > den_ || (twice == den_ && (q % 2) != 0)) ++q;

    i128 int_part = q / scale;
    i128 frac_part = q % scale;

    std::string out;
    if (negative && q != 0) out += '-';
    {
        char buf[48];
        auto v = static_cast<unsigned long long>(int_part);
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
        (void)ec;
        out.append(buf, p);
    }
    if (places > 0) {
        std::string frac(static_cast<size_t>(places), '0');
        auto v = static_cast<unsigned long long>(frac_part);
        for (int i = places - 1; i >= 0 && v > 0; --i) {
            frac[static_cast<size_t>(i)] = static_cast<char>('0' + v % 10);
            v /= 10;
        }
        out += '.';
        out += frac;
    }
    return out;
}

std::string Rational::to_fraction() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse_fraction(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 >= s.size()) {
        return std::nullopt;
    }
    std::int64_t num = 0;
    std::int64_t den = 0;
    auto r1 = std::from_chars(s.data(), s.data() + slash, num);
    auto r2 = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != s.data() + slash) return std::nullopt;
    if (r2.ec != std::errc{} || r2.ptr != s.data() + s.size()) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

}  // namespace geogap
