#pragma once

#include <vector>

namespace whsolve {

// Composite closed rules on P equally spaced points, unit spacing.
enum class QuadRule {
    Trapezoid,  // order 2
    Order3,     // ends 5/12, 13/12
    Simpson,    // alternative extended form: 17/48, 59/48, 43/48, 49/48, then 1
    Order4,     // ends 3/8, 7/6, 23/24
};

// Weights for P points. Throws std::invalid_argument if P is too small for the rule.
std::vector<double> closed_weights(int P, QuadRule rule);

// Rule matching a convergence order in {2,3,4}.
QuadRule rule_for_order(int order);

}  // namespace whsolve
