#include "latenergy/quadrature.hpp"

#include "latenergy/energy.hpp"
#include "latenergy/error.hpp"
#include "latenergy/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace latenergy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRadicandClamp = -1e-12;

double clamped_sqrt(double radicand) {
    if (radicand < kRadicandClamp) {
        throw std::domain_error("negative Bloch radicand " + std::to_string(radicand));
    }
    return radicand <= 0.0 ? 0.0 : std::sqrt(radicand);
}

// Planar densities from cos/sin of both coordinates; cos(x + y) by the
// addition formula so grid sweeps can reuse tabulated trig values.
double planar_density(IntegrandFamily f, double cx, double sx, double cy, double sy) {
    const double cxy = cx * cy - sx * sy;
    switch (f) {
    case IntegrandFamily::Square: return std::abs(2.0 * cx + 2.0 * cy);
    case IntegrandFamily::Triangular: return std::abs(2.0 * cx + 2.0 * cy + 2.0 * cxy);
    case IntegrandFamily::TriSquare33_42: {
        const double r = clamped_sqrt(3.0 + 2.0 * cx + 2.0 * cy + 2.0 * cxy);
        return 0.5 * (std::abs(2.0 * cx + r) + std::abs(2.0 * cx - r));
    }
    case IntegrandFamily::Hexagonal: return clamped_sqrt(3.0 + 2.0 * cx + 2.0 * cy + 2.0 * cxy);
    case IntegrandFamily::Hypercubic: break;
    }
    throw std::logic_error("planar_density called for a non-planar integrand");
}

struct TrigTable {
    std::vector<double> c;
    std::vector<double> s;

    explicit TrigTable(std::size_t n) : c(n), s(n) {
        const double h = kTwoPi / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = (static_cast<double>(i) + 0.5) * h;
            c[i] = std::cos(x);
            s[i] = std::sin(x);
        }
    }
};

double planar_mean(IntegrandFamily f, std::size_t n) {
    const TrigTable t(n);
    // Row sums first, then rows in fixed order.
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += planar_density(f, t.c[i], t.s[i], t.c[j], t.s[j]);
        }
        total += row;
    }
    return total / (static_cast<double>(n) * static_cast<double>(n));
}

double hypercubic_mean(std::size_t k, std::size_t n) {
    const TrigTable t(n);
    std::vector<std::size_t> idx(k, 0);
    double total = 0.0;
    std::size_t count = 0;
    while (true) {
        double sum = 0.0;
        for (std::size_t a = 0; a < k; ++a) sum += 2.0 * t.c[idx[a]];
        total += std::abs(sum);
        ++count;
        std::size_t a = 0;
        while (a < k && ++idx[a] == n) {
            idx[a] = 0;
            ++a;
        }
        if (a == k) break;
    }
    return total / static_cast<double>(count);
}

} // namespace

IntegrandId IntegrandId::planar(Family f) {
    switch (f) {
    case Family::Square: return {IntegrandFamily::Square, 2};
    case Family::Triangular: return {IntegrandFamily::Triangular, 2};
    case Family::TriSquare33_42: return {IntegrandFamily::TriSquare33_42, 2};
    case Family::Hexagonal: return {IntegrandFamily::Hexagonal, 2};
    }
    throw std::invalid_argument("unknown lattice family");
}

IntegrandId IntegrandId::hypercubic(std::size_t k) {
    if (k < 1) {
        throw std::invalid_argument("hypercubic integrand needs dimension k >= 1");
    }
    return {IntegrandFamily::Hypercubic, k};
}

std::string to_string(const IntegrandId& id) {
    switch (id.family) {
    case IntegrandFamily::Square: return "square";
    case IntegrandFamily::Triangular: return "triangular";
    case IntegrandFamily::TriSquare33_42: return "trisquare";
    case IntegrandFamily::Hexagonal: return "hexagonal";
    case IntegrandFamily::Hypercubic: return "hypercubic" + std::to_string(id.dimension);
    }
    return "?";
}

double integrand(const IntegrandId& id, std::span<const double> point) {
    if (point.size() != id.dimension) {
        throw std::invalid_argument(to_string(id) + " integrand expects a point of dimension " +
                                    std::to_string(id.dimension) + ", got " +
                                    std::to_string(point.size()));
    }
    if (id.family == IntegrandFamily::Hypercubic) {
        double sum = 0.0;
        for (double x : point) sum += 2.0 * std::cos(x);
        return std::abs(sum);
    }
    return planar_density(id.family, std::cos(point[0]), std::sin(point[0]), std::cos(point[1]),
                          std::sin(point[1]));
}

double midpoint_mean(const IntegrandId& id, std::size_t points_per_axis) {
    if (points_per_axis == 0) {
        throw std::invalid_argument("midpoint grid needs at least one point per axis");
    }
    if (id.family == IntegrandFamily::Hypercubic) {
        if (id.dimension < 1) throw std::invalid_argument("hypercubic dimension must be >= 1");
        return hypercubic_mean(id.dimension, points_per_axis);
    }
    if (id.dimension != 2) {
        throw std::invalid_argument("planar integrands are two-dimensional");
    }
    return planar_mean(id.family, points_per_axis);
}

std::size_t max_points_per_axis(const IntegrandId& id) {
    if (id.dimension <= 2) return kQuadratureMaxPoints;
    const double budget = static_cast<double>(kQuadratureMaxPoints) *
                          static_cast<double>(kQuadratureMaxPoints);
    std::size_t n = 1;
    while (std::pow(static_cast<double>(2 * n), static_cast<double>(id.dimension)) <= budget) {
        n *= 2;
    }
    return n;
}

QuadratureResult asymptotic_constant(const IntegrandId& id, double tol) {
    if (!(tol >= kMinQuadratureTolerance)) {
        throw std::invalid_argument("quadrature tolerance must be >= 1e-6");
    }
    const std::size_t cap = max_points_per_axis(id);
    std::size_t n = std::min(kQuadratureStartPoints, cap);
    double prev = midpoint_mean(id, n);
    QuadratureResult r{prev, 0.0, n, false};
    while (2 * n <= cap) {
        n *= 2;
        const double cur = midpoint_mean(id, n);
        r = {cur, std::abs(cur - prev), n, false};
        if (r.error_estimate < tol) {
            r.converged = true;
            break;
        }
        prev = cur;
    }
    return r;
}

double riemann_energy_per_vertex(const LatticeSpec& spec) {
    const Spectrum s = closed_form_spectrum(spec);
    return energy(s) / static_cast<double>(s.source_vertex_count);
}

} // namespace latenergy
