#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's eigensolver or lattice builder.

#include "latenergy/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using latenergy::Edge;
using latenergy::Graph;
using latenergy::Vertex;

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const Graph& g) {
    Matrix a(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
    for (const Edge& e : g.edges()) {
        a[e.u][e.v] = 1.0;
        a[e.v][e.u] = 1.0;
    }
    return a;
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
/// Eigenvalues sorted descending.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

inline std::size_t triangle_count(const Graph& g) {
    const auto a = adjacency(g);
    const std::size_t n = g.vertex_count();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0.0)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (a[i][k] != 0.0 && a[j][k] != 0.0) ++count;
    return count;
}

// Toroidal lattices assembled from the block-circulant adjacency forms:
//   triangular  I_n (x) A(C_m) + B_n (x) (I_m + B_m) + B_n^T (x) (I_m + B_m^T)
//   3^3.4^2     I_n (x) A(C_2k) + B_n (x) (I_2k + F_2k) + transpose
//   hexagonal   I_n (x) A(C_2m) + B_n (x) F_2m + transpose
// B_n is the cyclic shift (i -> i+1), F has ones at (2t+1, 2t) (0-based).
inline Graph from_blocks(std::size_t n, std::size_t width,
                         const std::function<bool(std::size_t, std::size_t)>& coupling) {
    std::vector<Edge> edges;
    auto id = [width](std::size_t r, std::size_t x) { return static_cast<Vertex>(r * width + x); };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t x = 0; x < width; ++x) {
            edges.emplace_back(id(r, x), id(r, (x + 1) % width));  // A(C_width)
            for (std::size_t y = 0; y < width; ++y) {
                if (coupling(x, y)) edges.emplace_back(id(r, x), id((r + 1) % n, y));
            }
        }
    }
    return Graph(n * width, std::move(edges));
}

inline Graph triangular_torus(std::size_t n, std::size_t m) {
    return from_blocks(n, m, [m](std::size_t x, std::size_t y) {
        return y == x || y == (x + 1) % m;  // I_m + B_m
    });
}

inline Graph trisquare_torus(std::size_t n, std::size_t cols) {
    return from_blocks(n, cols, [](std::size_t x, std::size_t y) {
        return y == x || (x % 2 == 1 && y == x - 1);  // I + F
    });
}

inline Graph hexagonal_torus(std::size_t n, std::size_t cells) {
    return from_blocks(n, 2 * cells, [](std::size_t x, std::size_t y) {
        return x % 2 == 1 && y == x - 1;  // F
    });
}

} // namespace oracle
