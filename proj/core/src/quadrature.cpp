#include "whsolve/quadrature.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace whsolve {

std::vector<double> closed_weights(int P, QuadRule rule) {
    if (P < 2) throw std::invalid_argument("quadrature needs at least 2 points");
    std::vector<double> w(static_cast<size_t>(P), 1.0);
    auto ends = [&](std::initializer_list<double> e) {
        const int k = static_cast<int>(e.size());
        if (P < 2 * k) throw std::invalid_argument("too few points for rule: " + std::to_string(P));
        int j = 0;
        for (double v : e) {
            w[static_cast<size_t>(j)] = v;
            w[static_cast<size_t>(P - 1 - j)] = v;
            ++j;
        }
    };
    switch (rule) {
        case QuadRule::Trapezoid:
            ends({0.5});
            break;
        case QuadRule::Order3:
            ends({5.0 / 12.0, 13.0 / 12.0});
            break;
        case QuadRule::Order4:
            ends({3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0});
            break;
        case QuadRule::Simpson:
            ends({17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0});
            break;
    }
    return w;
}

QuadRule rule_for_order(int order) {
    switch (order) {
        case 2: return QuadRule::Trapezoid;
        case 3: return QuadRule::Order3;
        case 4: return QuadRule::Order4;
        default: throw std::invalid_argument("quadrature order must be 2, 3 or 4");
    }
}

}  // namespace whsolve
