#ifndef G31_BOUNDS_HPP
#define G31_BOUNDS_HPP

#include "g31/bounds_types.hpp"
#include "g31/combinat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace g31 {

// Theorem 1 evaluators. alpha defaults to the asymptotic proxy n.
std::vector<BoundEstimate> eval_T1(int point, int n, std::int64_t l,
                                   std::optional<std::int64_t> alpha = std::nullopt);

// 3 l^2 / (2 n), lower, asymptotic-reference.
BoundEstimate eval_T2(int n, std::int64_t l);

// Theorem 3 evaluators. Points 2-4 are 0 for n <= 10; point 4 is an exact
// finite-n lower bound, points 1-3 are asymptotic references with the unknown
// o(1) slack exposed as h_param.
BoundEstimate eval_T3(int point, int n, std::int64_t l, double h_param = 0.0);

// Exact rational value of the Theorem 3 point 4 bound,
// n^5/8 * (1 - 2c - 10/n + 20c/n), 0 for n <= 10. May be negative.
Rational t3_point4_exact(int n, std::int64_t l);

// Envelope formulas (1)-(2): n^5/8 * (1 - 2c + c^2) upper and
// n^5/8 * (1/3 - 2c/3 + c^2/3) lower.
std::pair<BoundEstimate, BoundEstimate> eval_envelope(int n, std::int64_t l);

// Bracket polynomials in c. Asymptotic form drops the 1/n correction terms;
// the finite form keeps them (n > 10 expected for the T3 brackets).
Rational bracket_asymptotic(Source s, const Rational& c);
Rational bracket_finite(Source s, const Rational& c, int n);

// c* solving c^2 + 18c - 9 = 0, i.e. 3*sqrt(10) - 9 ~ 0.48683: the point
// where the T3.3 bracket comparison against 3l^2/(2n) changes sign.
double crossover_normalized();
// Alternative reading equating the T3.4 bracket (1 - 2c) with c^2/3:
// sqrt(12) - 3 ~ 0.46410.
double crossover_alternative();
// The inequality as printed, n^5/8*(1-2c-10/n+20c/n) >= 3(c*C(n,3))^2/2.
// Degree-mismatched (n^5 vs n^6); false for any fixed c > 0 once n is large.
bool crossover_literal_holds(double n, double c);

enum class Regime {
    sub_quadratic,
    quadratic,
    between_quadratic_and_cubic,
    cubic_minus_gap,
    cubic_minus_linear,
    trivial_zero,
};

std::string to_string(Regime r);

// The theorems quantify over constants and gap functions existentially, so
// the caller supplies them.
struct RegimeThresholds {
    double quad_c1 = 1.0;     // quadratic band [C1 n^2, C2 n^2]
    double quad_c2 = 1.0;
    double cubic_c = 1.0 / 12.0;  // dense regime from C n^3 up
    double gap = 0.0;             // g(n) in l <= C(n,3) - g(n)
    double linear_c = 1.0;        // l >= C(n,3) - C n for the cubic-minus-linear tag
    std::optional<std::int64_t> alpha;  // exact alpha if known; proxy n - 2 otherwise
};

// All matching tags; more than one entry when the supplied constants overlap.
std::vector<Regime> classify_regime(int n, std::int64_t l, const RegimeThresholds& th);

} // namespace g31

#endif
