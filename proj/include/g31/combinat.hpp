#ifndef G31_COMBINAT_HPP
#define G31_COMBINAT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

namespace g31 {

// All counts are exact 64-bit integers; n is capped at 1000 so every
// quantity up to n^5/8 scale stays representable. Anything past that
// throws std::overflow_error instead of wrapping.
inline constexpr int kMaxGroundSet = 1000;

std::int64_t binomial(int n, int k);

// A vertex of G(n,3,1): a 3-element subset of {1..n}, stored sorted.
struct Triple {
    std::array<int, 3> e;

    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

// Number of common elements of two sorted triples.
int intersection_size(const Triple& a, const Triple& b);

bool valid_triple(const Triple& t, int n);

// Colexicographic rank: monotone in the largest element, so vertices of
// G(n,3,1) embed into those of G(n+1,3,1) with unchanged indices.
std::int64_t rank_triple(const Triple& t, int n);
Triple unrank_triple(std::int64_t index, int n);

// Reduced fraction, denominator > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational integer(std::int64_t v) { return Rational(v, 1); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    auto operator<=>(const Rational& o) const {
        return static_cast<__int128>(num) * o.den <=> static_cast<__int128>(o.num) * den;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// c_n = 1 - l / C(n,3), exact.
Rational c_fraction(int n, std::int64_t l);

} // namespace g31

#endif
