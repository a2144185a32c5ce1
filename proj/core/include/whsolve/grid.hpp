#pragma once

#include <vector>

namespace whsolve {

// Paired uniform lattices: x_n = center + n*dx and xi_m = m*dxi, n,m = -N/2 .. N/2-1.
// Storage index i corresponds to n = i - N/2.
struct Grid {
    int N = 0;
    double x_max = 0.0;
    double dx = 0.0;
    double dxi = 0.0;
    double xi_max = 0.0;
    double center = 0.0;

    double x(int i) const { return center + static_cast<double>(i - N / 2) * dx; }
    double xi(int i) const { return static_cast<double>(i - N / 2) * dxi; }
    int zero_index() const { return N / 2; }

    std::vector<double> x_nodes() const;
    std::vector<double> xi_nodes() const;

    // Index of the state node within tol of x, or -1.
    int find_node(double x, double tol) const;
    // Index of the state node nearest to x (clamped to the grid).
    int nearest_node(double x) const;

    // Same lattice spacing, centred on the origin.
    Grid centered_at_origin() const;
};

Grid make_grid(int N, double x_max, double center = 0.0);

// Grid centred on (a+b)/2 with x_max = m_trunc*(b-a). Both a and b land on nodes,
// which requires N to be a multiple of 4*m_trunc.
Grid grid_for_interval(double a, double b, int N, int m_trunc);

}  // namespace whsolve
