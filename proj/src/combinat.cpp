#include "g31/combinat.hpp"

#include <limits>
#include <numeric>

namespace g31 {

std::int64_t binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("binomial: negative argument");
    if (n > kMaxGroundSet)
        throw std::invalid_argument("binomial: n exceeds cap of 1000");
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: product of i consecutive ints divisible by i!
        if (r > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("binomial: result exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(r);
}

int intersection_size(const Triple& a, const Triple& b) {
    int i = 0, j = 0, c = 0;
    while (i < 3 && j < 3) {
        if (a.e[i] == b.e[j]) { ++c; ++i; ++j; }
        else if (a.e[i] < b.e[j]) ++i;
        else ++j;
    }
    return c;
}

bool valid_triple(const Triple& t, int n) {
    return t.e[0] >= 1 && t.e[0] < t.e[1] && t.e[1] < t.e[2] && t.e[2] <= n;
}

std::int64_t rank_triple(const Triple& t, int n) {
    if (!valid_triple(t, n))
        throw std::invalid_argument("rank_triple: malformed triple");
    // colex: C(a-1,1) + C(b-1,2) + C(c-1,3)
    return (t.e[0] - 1) + binomial(t.e[1] - 1, 2) + binomial(t.e[2] - 1, 3);
}

Triple unrank_triple(std::int64_t index, int n) {
    if (index < 0 || index >= binomial(n, 3))
        throw std::out_of_range("unrank_triple: index out of range");
    Triple t{};
    std::int64_t r = index;
    int c = 3;
    while (binomial(c, 3) <= r) ++c;
    r -= binomial(c - 1, 3);
    int b = 2;
    while (binomial(b, 2) <= r) ++b;
    r -= binomial(b - 1, 2);
    t.e = {static_cast<int>(r) + 1, b, c};
    return t;
}

namespace {
std::int64_t checked_narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(what);
    return static_cast<std::int64_t>(v);
}

Rational make_reduced(__int128 num, __int128 den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a != 0) { num /= a; den /= a; }
    Rational r;
    r.num = checked_narrow(num, "Rational: numerator overflow");
    r.den = checked_narrow(den, "Rational: denominator overflow");
    return r;
}
} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make_reduced(n, d);
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                        static_cast<__int128>(den) * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                        static_cast<__int128>(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num) * o.num,
                        static_cast<__int128>(den) * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0)
        throw std::invalid_argument("Rational: division by zero");
    return make_reduced(static_cast<__int128>(num) * o.den,
                        static_cast<__int128>(den) * o.num);
}

Rational c_fraction(int n, std::int64_t l) {
    std::int64_t total = binomial(n, 3);
    if (l < 0 || l > total)
        throw std::invalid_argument("c_fraction: l outside [0, C(n,3)]");
    return Rational(total - l, total);
}

} // namespace g31
