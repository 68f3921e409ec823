#pragma once

#include "latenergy/graph.hpp"
#include "latenergy/spectrum.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace latenergy {

/// Slack applied to every energy inequality check.
inline constexpr double kInequalitySlack = 1e-8;
/// Slack for the edge-difference ratio bound.
inline constexpr double kRatioSlack = 1e-10;

/// Sum of |lambda|.
double energy(const Spectrum& s);

struct EnergyReport {
    double energy = 0.0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    double energy_per_vertex = 0.0;
    double trivial_bound = 0.0;         // 2|E|
    std::optional<double> km_bound;     // Koolen-Moulton; 2|E| when 2|E| < |V|
    bool bounds_satisfied = false;
};

/// Koolen-Moulton upper bound for a graph with the given counts.
double koolen_moulton_bound(std::size_t vertices, std::size_t edges);

/// Throws InconsistentInputError if `s` cannot be the spectrum of `g`
/// (length or second moment mismatch).
EnergyReport energy_report(const Graph& g, const Spectrum& s);

/// |E(G) - E(H)| <= E(G - E(H)) <= E(G) + E(H), H the spanning subgraph on
/// `h_edges`.
struct DaySoReport {
    double energy_g = 0.0;
    double energy_h = 0.0;
    double energy_g_minus_eh = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool holds = false;
};

DaySoReport verify_day_so(const Graph& g, std::span<const Edge> h_edges,
                          std::size_t size_cap = kDefaultSizeCap);

/// |E(H)/E(G) - 1| <= 2 Delta(G, H) / E(G).
///
/// When E(G) is zero the bound is +inf; deviation is 0 (holds) if E(H) is
/// also zero, otherwise +inf (fails).
struct RatioBoundReport {
    std::size_t delta = 0;
    double energy_g = 0.0;
    double ratio_deviation = 0.0;
    double bound = 0.0;
    bool holds = false;
};

RatioBoundReport ratio_bound_check(const Graph& g, const Graph& h,
                                   std::size_t size_cap = kDefaultSizeCap);

/// Fraction of vertices whose degree in `g_sub` equals their degree in `g`.
/// Throws GraphError unless g_sub is a spanning subgraph of g.
double degree_preserved_fraction(const Graph& g, const Graph& g_sub);

} // namespace latenergy
