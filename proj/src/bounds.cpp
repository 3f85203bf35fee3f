#include "g31/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace g31 {

std::string to_string(Direction d) {
    switch (d) {
    case Direction::lower: return "lower";
    case Direction::upper: return "upper";
    case Direction::asymptotic_equality: return "asymptotic-equality";
    }
    return "?";
}

std::string to_string(Validity v) {
    switch (v) {
    case Validity::exact_finite_n: return "exact-finite-n";
    case Validity::asymptotic_reference: return "asymptotic-reference";
    }
    return "?";
}

std::string to_string(Source s) {
    switch (s) {
    case Source::T1_1: return "T1.1";
    case Source::T1_2: return "T1.2";
    case Source::T1_3_low: return "T1.3-low";
    case Source::T1_3_up: return "T1.3-up";
    case Source::T1_4: return "T1.4";
    case Source::T2: return "T2";
    case Source::T3_1: return "T3.1";
    case Source::T3_2: return "T3.2";
    case Source::T3_3: return "T3.3";
    case Source::T3_4: return "T3.4";
    case Source::F1: return "F1";
    case Source::F2: return "F2";
    case Source::construction: return "construction";
    case Source::heuristic: return "heuristic";
    case Source::exact_solver: return "exact";
    }
    return "?";
}

std::vector<BoundEstimate> eval_T1(int point, int n, std::int64_t l,
                                   std::optional<std::int64_t> alpha) {
    if (point < 1 || point > 4)
        throw std::invalid_argument("eval_T1: point must be 1..4");
    double a = static_cast<double>(alpha.value_or(n));
    double ld = static_cast<double>(l);
    std::vector<BoundEstimate> out;
    switch (point) {
    case 1:
        out.push_back({ld * ld / (2.0 * a), Direction::asymptotic_equality,
                       Validity::asymptotic_reference, Source::T1_1, 0.0});
        break;
    case 2:
        out.push_back({ld * ld / (2.0 * a), Direction::asymptotic_equality,
                       Validity::asymptotic_reference, Source::T1_2, 0.0});
        break;
    case 3:
        out.push_back({ld * ld / a, Direction::lower,
                       Validity::asymptotic_reference, Source::T1_3_low, 0.0});
        out.push_back({5.0 * ld * ld / a, Direction::upper,
                       Validity::asymptotic_reference, Source::T1_3_up, 0.0});
        break;
    case 4: {
        double c = c_fraction(n, l).to_double();
        double n5 = std::pow(static_cast<double>(n), 5);
        out.push_back({n5 * (1.0 / 8.0 - c / 4.0 + c * c / 72.0), Direction::lower,
                       Validity::asymptotic_reference, Source::T1_4, 0.0});
        break;
    }
    }
    return out;
}

BoundEstimate eval_T2(int n, std::int64_t l) {
    double ld = static_cast<double>(l);
    return {3.0 * ld * ld / (2.0 * n), Direction::lower,
            Validity::asymptotic_reference, Source::T2, 0.0};
}

BoundEstimate eval_T3(int point, int n, std::int64_t l, double h_param) {
    double ld = static_cast<double>(l);
    double c = c_fraction(n, l).to_double();
    double n5 = std::pow(static_cast<double>(n), 5);
    switch (point) {
    case 1:
        return {9.0 * ld * ld / (2.0 * n), Direction::upper,
                Validity::asymptotic_reference, Source::T3_1, h_param};
    case 2: {
        if (n <= 10)
            return {0.0, Direction::lower, Validity::asymptotic_reference,
                    Source::T3_2, h_param};
        double bracket = 1.0 - 2.0 * c + (c * c / 3.0) * (1.0 + h_param) -
                         10.0 / n + 20.0 * c / n -
                         (10.0 * c * c / (3.0 * n)) * (1.0 + h_param);
        return {n5 / 8.0 * bracket, Direction::lower,
                Validity::asymptotic_reference, Source::T3_2, h_param};
    }
    case 3: {
        if (n <= 10)
            return {0.0, Direction::lower, Validity::asymptotic_reference,
                    Source::T3_3, h_param};
        double bracket = 1.0 - 2.0 * c + (2.0 * c * c / 9.0) * (1.0 + h_param) -
                         10.0 / n + 20.0 * c / n -
                         (20.0 * c * c / (9.0 * n)) * (1.0 + h_param);
        return {n5 / 8.0 * bracket, Direction::lower,
                Validity::asymptotic_reference, Source::T3_3, h_param};
    }
    case 4:
        return {t3_point4_exact(n, l).to_double(), Direction::lower,
                Validity::exact_finite_n, Source::T3_4, 0.0};
    }
    throw std::invalid_argument("eval_T3: point must be 1..4");
}

Rational t3_point4_exact(int n, std::int64_t l) {
    if (n <= 10)
        return Rational::integer(0);
    Rational c = c_fraction(n, l);
    Rational bracket = bracket_finite(Source::T3_4, c, n);
    std::int64_t n5 = static_cast<std::int64_t>(n) * n * n * n * n;
    return Rational(n5, 8) * bracket;
}

std::pair<BoundEstimate, BoundEstimate> eval_envelope(int n, std::int64_t l) {
    Rational c = c_fraction(n, l);
    double n5 = std::pow(static_cast<double>(n), 5);
    BoundEstimate upper{n5 / 8.0 * bracket_asymptotic(Source::F1, c).to_double(),
                        Direction::upper, Validity::asymptotic_reference,
                        Source::F1, 0.0};
    BoundEstimate lower{n5 / 8.0 * bracket_asymptotic(Source::F2, c).to_double(),
                        Direction::lower, Validity::asymptotic_reference,
                        Source::F2, 0.0};
    return {upper, lower};
}

Rational bracket_asymptotic(Source s, const Rational& c) {
    Rational one = Rational::integer(1);
    Rational c2 = c * c;
    switch (s) {
    case Source::F1:
        return one - Rational::integer(2) * c + c2;
    case Source::F2:
        return Rational(1, 3) - Rational(2, 3) * c + Rational(1, 3) * c2;
    case Source::T3_2:
        return one - Rational::integer(2) * c + Rational(1, 3) * c2;
    case Source::T3_3:
        return one - Rational::integer(2) * c + Rational(2, 9) * c2;
    case Source::T3_4:
        return one - Rational::integer(2) * c;
    case Source::T1_4:
        // n^5 * (1/8 - c/4 + c^2/72), rescaled to the n^5/8 convention
        return one - Rational::integer(2) * c + Rational(1, 9) * c2;
    default:
        throw std::invalid_argument("bracket_asymptotic: no bracket for this source");
    }
}

Rational bracket_finite(Source s, const Rational& c, int n) {
    Rational base = bracket_asymptotic(s, c);
    Rational c2 = c * c;
    Rational nn = Rational::integer(n);
    switch (s) {
    case Source::T3_2:
        return base - Rational(10, 1) / nn + Rational(20, 1) * c / nn -
               Rational(10, 3) * c2 / nn;
    case Source::T3_3:
        return base - Rational(10, 1) / nn + Rational(20, 1) * c / nn -
               Rational(20, 9) * c2 / nn;
    case Source::T3_4:
        return base - Rational(10, 1) / nn + Rational(20, 1) * c / nn;
    default:
        return base;  // F1/F2 carry no 1/n correction
    }
}

double crossover_normalized() {
    return 3.0 * std::sqrt(10.0) - 9.0;
}

double crossover_alternative() {
    return std::sqrt(12.0) - 3.0;
}

bool crossover_literal_holds(double n, double c) {
    double lhs = std::pow(n, 5) / 8.0 * (1.0 - 2.0 * c - 10.0 / n + 20.0 * c / n);
    double cn3 = n * (n - 1.0) * (n - 2.0) / 6.0;
    double rhs = 1.5 * (c * cn3) * (c * cn3);
    return lhs >= rhs;
}

std::string to_string(Regime r) {
    switch (r) {
    case Regime::sub_quadratic: return "sub-quadratic";
    case Regime::quadratic: return "quadratic";
    case Regime::between_quadratic_and_cubic: return "between-quadratic-and-cubic";
    case Regime::cubic_minus_gap: return "cubic-minus-gap";
    case Regime::cubic_minus_linear: return "cubic-minus-linear";
    case Regime::trivial_zero: return "trivial-zero";
    }
    return "?";
}

std::vector<Regime> classify_regime(int n, std::int64_t l, const RegimeThresholds& th) {
    std::vector<Regime> tags;
    double nd = static_cast<double>(n);
    double ld = static_cast<double>(l);
    double total = static_cast<double>(binomial(n, 3));
    std::int64_t alpha = th.alpha.value_or(n - 2);
    if (l <= alpha)
        tags.push_back(Regime::trivial_zero);
    if (ld < th.quad_c1 * nd * nd)
        tags.push_back(Regime::sub_quadratic);
    if (ld >= th.quad_c1 * nd * nd && ld <= th.quad_c2 * nd * nd)
        tags.push_back(Regime::quadratic);
    if (ld > th.quad_c2 * nd * nd && ld < nd * nd * nd)
        tags.push_back(Regime::between_quadratic_and_cubic);
    if (ld >= th.cubic_c * nd * nd * nd && ld <= total - th.gap)
        tags.push_back(Regime::cubic_minus_gap);
    if (ld >= total - th.linear_c * nd)
        tags.push_back(Regime::cubic_minus_linear);
    return tags;
}

} // namespace g31
