#pragma once

#include "latenergy/lattice.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace latenergy {

enum class IntegrandFamily { Square, Triangular, TriSquare33_42, Hexagonal, Hypercubic };

/// Which limiting energy-per-vertex integral to evaluate. `dimension` is
/// 2 for the planar families and k >= 1 for Hypercubic.
struct IntegrandId {
    IntegrandFamily family = IntegrandFamily::Square;
    std::size_t dimension = 2;

    static IntegrandId planar(Family f);
    static IntegrandId hypercubic(std::size_t k);

    friend bool operator==(const IntegrandId&, const IntegrandId&) = default;
};

std::string to_string(const IntegrandId& id);

/// Energy density per vertex at a point of the Bloch torus [0, 2pi)^d, so
/// that its mean over the torus is the asymptotic energy per vertex:
///   square       |2cos x + 2cos y|
///   triangular   |2cos x + 2cos y + 2cos(x + y)|
///   3^3.4^2      (|2cos x + r| + |2cos x - r|) / 2
///   hexagonal    r
///   hypercubic   |sum_i 2cos x_i|
/// with r = sqrt(3 + 2cos x + 2cos y + 2cos(x + y)).
double integrand(const IntegrandId& id, std::span<const double> point);

/// Mean of `integrand` over the tensor midpoint grid with `points_per_axis`
/// nodes per axis.
double midpoint_mean(const IntegrandId& id, std::size_t points_per_axis);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // last doubling difference, not a rigorous bound
    std::size_t grid_points_per_axis = 0;
    bool converged = false;
};

inline constexpr std::size_t kQuadratureStartPoints = 64;
inline constexpr std::size_t kQuadratureMaxPoints = 4096;
inline constexpr double kMinQuadratureTolerance = 1e-6;

/// Largest grid per axis the doubling loop may reach for `id`: 4096, reduced
/// for d > 2 so the full grid stays within 4096^2 nodes.
std::size_t max_points_per_axis(const IntegrandId& id);

/// Doubling midpoint rule from 64 points per axis until successive
/// estimates differ by less than `tol`.
QuadratureResult asymptotic_constant(const IntegrandId& id, double tol);

/// Energy per vertex of a finite lattice from its closed-form spectrum.
double riemann_energy_per_vertex(const LatticeSpec& spec);

} // namespace latenergy
