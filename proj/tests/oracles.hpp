#pragma once

// Reference constructions built directly from the defining equations: exact rational stencil
// composition and dense pinned-boundary systems for one time step.

#include <array>
#include <iterator>
#include <map>

#include "hocd/solver2d.hpp"
#include "support.hpp"

namespace testing {

// Linear form over named samples with exact rational weights. Keys: node offset relative to j,
// plus kG1 / kG2 for the boundary data.
using Form = std::map<int, Rational>;
inline constexpr int kG1 = 100;
inline constexpr int kG2 = 200;

inline Form add(Form a, const Form& b, Rational scale) {
    for (const auto& [k, v] : b) a[k] = a[k] + scale * v;
    for (auto it = a.begin(); it != a.end();) it = it->second.num == 0 ? a.erase(it) : std::next(it);
    return a;
}

// h * P at node offset `o` for the three gradient formulas.
inline Form hp_interior(int o) { return {{o - 2, {1, 12}}, {o - 1, {-8, 12}}, {o + 1, {8, 12}}, {o + 2, {-1, 12}}}; }
inline Form hp_left(int o) { return {{kG1, {-2, 6}}, {o, {-3, 6}}, {o + 1, {6, 6}}, {o + 2, {-1, 6}}}; }
inline Form hp_right(int o) { return {{kG2, {2, 6}}, {o, {3, 6}}, {o - 1, {-6, 6}}, {o - 2, {1, 6}}}; }

// (u_j + u_{j+1})/2 + (1/8)(hP_j - hP_{j+1}) with j at offset 0.
inline Form compose(const Form& hp_j, const Form& hp_j1) {
    Form f{{0, {1, 2}}, {1, {1, 2}}};
    f = add(f, hp_j, {1, 8});
    return add(f, hp_j1, {-1, 8});
}

inline Rational sum(const Form& f) {
    Rational s;
    for (const auto& [k, v] : f) s = s + v;
    return s;
}

// Full (N+1)-node system of one 1D step: boundary rows pinned to g(t_{k+1}), interior rows
//   (u_{j-1} + 10u_j + u_{j+1})^{k+1} - (same)^k = s (d2 u^{k+1} + d2 u^k),  d2 = (1, -2, 1).
inline std::vector<double> pinned_step_oracle(const std::vector<double>& uk, double s, double g1_k1, double g2_k1) {
    const std::size_t nodes = uk.size();
    Dense a(nodes);
    std::vector<double> b(nodes, 0.0);
    a(0, 0) = 1.0;
    b[0] = g1_k1;
    a(nodes - 1, nodes - 1) = 1.0;
    b[nodes - 1] = g2_k1;
    const double avg[3] = {1.0, 10.0, 1.0};
    const double d2[3] = {1.0, -2.0, 1.0};
    for (std::size_t j = 1; j + 1 < nodes; ++j) {
        for (int o = -1; o <= 1; ++o) {
            a(j, j + o) += avg[o + 1] - s * d2[o + 1];
            b[j] += (avg[o + 1] + s * d2[o + 1]) * uk[j + o];
        }
    }
    return gauss_solve(a, b);
}

using Stencil = std::array<std::array<double, 3>, 3>;  // [di + 1][dj + 1]

// sign = -1: I + (dxx + dyy)/12 - r (dxx + dyy + dxx dyy / 6); sign = +1 for the explicit side.
inline Stencil compact_stencil(double r, double sign) {
    const double d2[3] = {1.0, -2.0, 1.0};
    const double id[3] = {0.0, 1.0, 0.0};
    Stencil s{};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const double lap = d2[a] * id[b] + id[a] * d2[b];
            const double mixed = d2[a] * d2[b];
            s[a][b] = id[a] * id[b] + lap / 12.0 + sign * r * (lap + mixed / 6.0);
        }
    }
    return s;
}

// Interior-only matrix of a stencil in the solver's y-row ordering.
inline Dense stencil_matrix(const Stencil& s, int n) {
    Dense m(static_cast<std::size_t>(n * n));
    auto idx = [n](int i, int j) { return static_cast<std::size_t>((j - 1) * n + (i - 1)); };
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            for (int di = -1; di <= 1; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    const int ii = i + di, jj = j + dj;
                    if (ii < 1 || ii > n || jj < 1 || jj > n) continue;
                    m(idx(i, j), idx(ii, jj)) = s[di + 1][dj + 1];
                }
            }
        }
    }
    return m;
}

// One 2D step on the full node lattice with every boundary node pinned to its level-(k+1) value.
inline hocd::Field2D pinned_step_oracle(const hocd::Field2D& uk, const hocd::HeatProblem2D& p, double tau, double t1) {
    const int nn = uk.nx();
    const double h = uk.grid.x().h();
    const double r = tau / (2.0 * h * h);
    const Stencil lhs = compact_stencil(r, -1.0);
    const Stencil rhs = compact_stencil(r, +1.0);
    const auto nodes = static_cast<std::size_t>((nn + 1) * (nn + 1));
    Dense a(nodes);
    std::vector<double> b(nodes, 0.0);
    auto idx = [nn](int i, int j) { return static_cast<std::size_t>(i * (nn + 1) + j); };
    for (int i = 0; i <= nn; ++i) {
        for (int j = 0; j <= nn; ++j) {
            const double x = uk.grid.x().node(i), y = uk.grid.y().node(j);
            if (i == 0 || i == nn || j == 0 || j == nn) {
                a(idx(i, j), idx(i, j)) = 1.0;
                b[idx(i, j)] = i == 0 ? p.g1(y, t1) : i == nn ? p.g2(y, t1) : j == 0 ? p.g3(x, t1) : p.g4(x, t1);
                continue;
            }
            for (int di = -1; di <= 1; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    a(idx(i, j), idx(i + di, j + dj)) = lhs[di + 1][dj + 1];
                    b[idx(i, j)] += rhs[di + 1][dj + 1] * uk(i + di, j + dj);
                }
            }
        }
    }
    return hocd::Field2D(uk.grid, gauss_solve(a, b), t1);
}

}  // namespace testing
