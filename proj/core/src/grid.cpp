#include "whsolve/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "whsolve/errors.hpp"

namespace whsolve {

std::vector<double> Grid::x_nodes() const {
    std::vector<double> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) v[static_cast<size_t>(i)] = x(i);
    return v;
}

std::vector<double> Grid::xi_nodes() const {
    std::vector<double> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) v[static_cast<size_t>(i)] = xi(i);
    return v;
}

int Grid::find_node(double xq, double tol) const {
    const double r = (xq - center) / dx;
    const double n = std::round(r);
    if (std::abs(r - n) * dx > tol) return -1;
    const int i = static_cast<int>(n) + N / 2;
    if (i < 0 || i >= N) return -1;
    return i;
}

int Grid::nearest_node(double xq) const {
    int i = static_cast<int>(std::lround((xq - center) / dx)) + N / 2;
    if (i < 0) i = 0;
    if (i >= N) i = N - 1;
    return i;
}

Grid Grid::centered_at_origin() const {
    Grid g = *this;
    g.center = 0.0;
    return g;
}

Grid make_grid(int N, double x_max, double center) {
    if (N < 8 || N % 2 != 0)
        throw GridError("invalid grid: N must be even and >= 8, got " + std::to_string(N));
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        throw GridError("invalid grid: x_max must be positive");
    if (!std::isfinite(center)) throw GridError("invalid grid: center must be finite");
    Grid g;
    g.N = N;
    g.x_max = x_max;
    g.center = center;
    g.dx = 2.0 * x_max / N;
    g.dxi = std::numbers::pi / x_max;
    g.xi_max = std::numbers::pi / g.dx;
    return g;
}

Grid grid_for_interval(double a, double b, int N, int m_trunc) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw GridError("invalid interval: need finite a < b");
    if (m_trunc < 1) throw GridError("invalid grid: m_trunc must be >= 1");
    if (N <= 0 || N % (4 * m_trunc) != 0)
        throw GridError("invalid grid: N=" + std::to_string(N) + " is not a multiple of 4*m_trunc=" +
                        std::to_string(4 * m_trunc));
    return make_grid(N, m_trunc * (b - a), 0.5 * (a + b));
}

}  // namespace whsolve
