#include "latenergy/energy.hpp"

#include "latenergy/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace latenergy {

double energy(const Spectrum& s) {
    std::vector<double> mags;
    mags.reserve(s.eigenvalues.size());
    for (double l : s.eigenvalues) mags.push_back(std::abs(l));
    std::sort(mags.begin(), mags.end(), std::greater<>());

    // Neumaier-compensated sum, largest magnitudes first.
    double sum = 0.0;
    double comp = 0.0;
    for (double x : mags) {
        const double t = sum + x;
        comp += (std::abs(sum) >= x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double koolen_moulton_bound(std::size_t vertices, std::size_t edges) {
    const double n = static_cast<double>(vertices);
    const double two_m = 2.0 * static_cast<double>(edges);
    if (vertices == 0 || two_m < n) {
        return two_m;
    }
    const double avg = two_m / n;
    const double radicand = (n - 1.0) * (two_m - avg * avg);
    return avg + std::sqrt(std::max(radicand, 0.0));
}

EnergyReport energy_report(const Graph& g, const Spectrum& s) {
    if (s.eigenvalues.size() != g.vertex_count() || s.source_vertex_count != g.vertex_count()) {
        throw InconsistentInputError("spectrum has " + std::to_string(s.eigenvalues.size()) +
                                     " eigenvalues for a graph on " +
                                     std::to_string(g.vertex_count()) + " vertices");
    }
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    const double second = spectral_moment(s, 2);
    if (std::abs(second - two_m) > 1e-6 * std::max(1.0, two_m)) {
        throw InconsistentInputError("sum of squared eigenvalues " + std::to_string(second) +
                                     " does not match 2|E| = " + std::to_string(two_m));
    }

    EnergyReport r;
    r.energy = energy(s);
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.energy_per_vertex = g.vertex_count() > 0 ? r.energy / static_cast<double>(r.vertex_count)
                                               : 0.0;
    r.trivial_bound = two_m;
    if (g.vertex_count() > 0) {
        r.km_bound = koolen_moulton_bound(g.vertex_count(), g.edge_count());
    }
    r.bounds_satisfied = r.energy <= r.trivial_bound + kInequalitySlack &&
                         (!r.km_bound || r.energy <= *r.km_bound + kInequalitySlack);
    return r;
}

DaySoReport verify_day_so(const Graph& g, std::span<const Edge> h_edges, std::size_t size_cap) {
    const Graph h = spanning_subgraph(g, h_edges);
    const Graph rest = remove_edges(g, h.edges());

    DaySoReport r;
    r.energy_g = energy(numeric_spectrum(g, size_cap));
    r.energy_h = energy(numeric_spectrum(h, size_cap));
    r.energy_g_minus_eh = energy(numeric_spectrum(rest, size_cap));
    r.lower = std::abs(r.energy_g - r.energy_h);
    r.upper = r.energy_g + r.energy_h;
    r.holds = r.lower <= r.energy_g_minus_eh + kInequalitySlack &&
              r.energy_g_minus_eh <= r.upper + kInequalitySlack;
    return r;
}

RatioBoundReport ratio_bound_check(const Graph& g, const Graph& h, std::size_t size_cap) {
    RatioBoundReport r;
    r.delta = edge_delta(g, h).delta;
    r.energy_g = energy(numeric_spectrum(g, size_cap));
    const double energy_h = energy(numeric_spectrum(h, size_cap));

    // Any graph with an edge has energy >= 2, so this only catches the empty graph.
    constexpr double kZeroEnergy = 1e-6;
    if (r.energy_g <= kZeroEnergy) {
        r.bound = std::numeric_limits<double>::infinity();
        if (energy_h <= kZeroEnergy) {
            r.ratio_deviation = 0.0;
            r.holds = true;
        } else {
            r.ratio_deviation = std::numeric_limits<double>::infinity();
            r.holds = false;
        }
        return r;
    }
    r.ratio_deviation = std::abs(energy_h / r.energy_g - 1.0);
    r.bound = 2.0 * static_cast<double>(r.delta) / r.energy_g;
    r.holds = r.ratio_deviation <= r.bound + kRatioSlack;
    return r;
}

double degree_preserved_fraction(const Graph& g, const Graph& g_sub) {
    if (g.vertex_count() != g_sub.vertex_count()) {
        throw GraphError("not a spanning subgraph: vertex counts differ");
    }
    if (!std::includes(g.edges().begin(), g.edges().end(), g_sub.edges().begin(),
                       g_sub.edges().end())) {
        throw GraphError("not a subgraph: some edges are absent from the host graph");
    }
    if (g.vertex_count() == 0) return 1.0;
    const auto dg = g.degrees();
    const auto ds = g_sub.degrees();
    std::size_t same = 0;
    for (std::size_t v = 0; v < dg.size(); ++v) {
        if (dg[v] == ds[v]) ++same;
    }
    return static_cast<double>(same) / static_cast<double>(g.vertex_count());
}

} // namespace latenergy
