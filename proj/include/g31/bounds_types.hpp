#ifndef G31_BOUNDS_TYPES_HPP
#define G31_BOUNDS_TYPES_HPP

#include <string>

namespace g31 {

enum class Direction { lower, upper, asymptotic_equality };

// exact_finite_n: a guaranteed inequality at the given n.
// asymptotic_reference: leading-order form only, no finite-n guarantee.
enum class Validity { exact_finite_n, asymptotic_reference };

enum class Source {
    T1_1, T1_2, T1_3_low, T1_3_up, T1_4,
    T2,
    T3_1, T3_2, T3_3, T3_4,
    F1, F2,
    construction,
    heuristic,
    exact_solver,
};

std::string to_string(Direction d);
std::string to_string(Validity v);
std::string to_string(Source s);

struct BoundEstimate {
    double value = 0.0;
    Direction direction = Direction::lower;
    Validity validity = Validity::asymptotic_reference;
    Source source = Source::T2;
    double h_param = 0.0;  // stand-in for the unknown o(1) slack
};

} // namespace g31

#endif
