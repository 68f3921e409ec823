#include "latenergy/spectrum.hpp"

#include "latenergy/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace latenergy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |1 + e^{ix} + e^{iy}|^2, clamped at the conical zeros.
double bloch_radicand(double x, double y) {
    const double r = 3.0 + 2.0 * std::cos(x) + 2.0 * std::cos(y) + 2.0 * std::cos(x + y);
    return r < 0.0 ? 0.0 : r;
}

void sort_descending(std::vector<double>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

} // namespace

bool has_closed_form(const LatticeSpec& spec) noexcept {
    if (spec.boundary == Boundary::Toroidal) return true;
    return spec.family == Family::Square &&
           (spec.boundary == Boundary::Cylindrical || spec.boundary == Boundary::Free);
}

Spectrum closed_form_spectrum(const LatticeSpec& spec) {
    validate(spec);
    if (!has_closed_form(spec)) {
        throw UnsupportedSpectrumError("no closed-form spectrum for " + describe(spec));
    }
    const std::size_t n = spec.rows;
    const std::size_t m = spec.cols;
    Spectrum s;
    s.provenance = Provenance::ClosedForm;
    s.source_vertex_count = vertex_count(spec);
    auto& ev = s.eigenvalues;
    ev.reserve(s.source_vertex_count);

    // Cycle factor 2cos(2 pi i / len), i = 0..len-1; path factor
    // 2cos(i pi / (len + 1)), i = 1..len.
    auto cycle = [](std::size_t len) {
        std::vector<double> f(len);
        for (std::size_t i = 0; i < len; ++i) {
            f[i] = 2.0 * std::cos(kTwoPi * static_cast<double>(i) / static_cast<double>(len));
        }
        return f;
    };
    auto path = [](std::size_t len) {
        std::vector<double> f(len);
        for (std::size_t i = 1; i <= len; ++i) {
            f[i - 1] = 2.0 * std::cos(std::numbers::pi * static_cast<double>(i) /
                                      static_cast<double>(len + 1));
        }
        return f;
    };

    switch (spec.family) {
    case Family::Square: {
        const auto rf = spec.boundary == Boundary::Free ? path(n) : cycle(n);
        const auto cf = spec.boundary == Boundary::Toroidal ? cycle(m) : path(m);
        for (double a : rf) {
            for (double b : cf) ev.push_back(a + b);
        }
        break;
    }
    case Family::Triangular:
        for (std::size_t i = 0; i < n; ++i) {
            const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
            for (std::size_t j = 0; j < m; ++j) {
                const double y = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
                ev.push_back(2.0 * std::cos(x) + 2.0 * std::cos(y) + 2.0 * std::cos(x + y));
            }
        }
        break;
    case Family::TriSquare33_42: {
        const std::size_t cells = m / 2;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
            for (std::size_t j = 0; j < cells; ++j) {
                const double y = kTwoPi * static_cast<double>(j) / static_cast<double>(cells);
                const double root = std::sqrt(bloch_radicand(x, y));
                ev.push_back(2.0 * std::cos(x) + root);
                ev.push_back(2.0 * std::cos(x) - root);
            }
        }
        break;
    }
    case Family::Hexagonal:
        for (std::size_t i = 0; i < n; ++i) {
            const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
            for (std::size_t j = 0; j < m; ++j) {
                const double y = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
                const double root = std::sqrt(bloch_radicand(x, y));
                ev.push_back(root);
                ev.push_back(-root);
            }
        }
        break;
    }
    sort_descending(ev);
    return s;
}

Spectrum numeric_spectrum(const Graph& g, std::size_t size_cap) {
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        throw GraphError("numeric_spectrum needs at least one vertex");
    }
    if (n > size_cap) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                            std::to_string(size_cap));
    }
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolver did not converge");
    }
    Spectrum s;
    s.provenance = Provenance::Numeric;
    s.source_vertex_count = n;
    const auto& vals = solver.eigenvalues();
    s.eigenvalues.assign(vals.data(), vals.data() + vals.size());
    sort_descending(s.eigenvalues);
    return s;
}

Spectrum lattice_spectrum(const LatticeSpec& spec, bool force_numeric, std::size_t size_cap) {
    if (!force_numeric && has_closed_form(spec)) {
        return closed_form_spectrum(spec);
    }
    validate(spec);
    if (vertex_count(spec) > size_cap) {
        throw ResourceError(describe(spec) + " has " + std::to_string(vertex_count(spec)) +
                            " vertices, above the cap of " + std::to_string(size_cap));
    }
    return numeric_spectrum(build_lattice(spec), size_cap);
}

double spectral_moment(const Spectrum& s, int k) {
    if (k < 1) {
        throw std::invalid_argument("spectral moment order must be positive");
    }
    long double sum = 0.0L;
    for (double lambda : s.eigenvalues) {
        sum += std::pow(static_cast<long double>(lambda), k);
    }
    return static_cast<double>(sum);
}

double max_abs_difference(const Spectrum& a, const Spectrum& b) {
    if (a.eigenvalues.size() != b.eigenvalues.size()) {
        throw InconsistentInputError("spectra have different lengths");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i) {
        worst = std::max(worst, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
    }
    return worst;
}

} // namespace latenergy
