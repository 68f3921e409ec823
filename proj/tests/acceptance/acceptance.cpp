// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include "cli.hpp"
#include "latenergy/energy.hpp"
#include "latenergy/lattice.hpp"
#include "latenergy/quadrature.hpp"
#include "latenergy/spectrum.hpp"
#include "support/oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace latenergy;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Toroidal specs of criterion 2. The 3^3.4^2 family needs an even column count.
std::vector<LatticeSpec> oracle_specs() {
    std::vector<LatticeSpec> specs;
    for (Family f : kAllFamilies)
        for (std::size_t n = 3; n <= 12; ++n)
            for (std::size_t m = 3; m <= 12; ++m)
                if (f != Family::TriSquare33_42 || m % 2 == 0)
                    specs.push_back({f, Boundary::Toroidal, n, m});
    return specs;
}

struct SpecData {
    LatticeSpec spec;
    Graph graph;
    Spectrum closed;
    Spectrum numeric;
};

std::vector<SpecData> g_specs;

Outcome ac1_constants() {
    Outcome o;
    const auto t0 = Clock::now();
    struct Row {
        const char* family;
        double expected;
    };
    for (const Row& row : {Row{"square", 1.6211}, Row{"triangular", 2.065},
                           Row{"trisquare", 1.8471}, Row{"hexagonal", 1.5746}}) {
        const char* argv[] = {"latenergy", "constant", "--family", row.family, "--tol", "1e-4"};
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::main_entry(6, argv, out, err);
        o.require(status == 0, std::string("constant --family ") + row.family + " failed");
        if (status != 0) continue;
        const double value = nlohmann::json::parse(out.str())["value"].get<double>();
        o.require(std::abs(value - row.expected) <= 1e-3,
                  std::string(row.family) + " value " + fmt("%.6f", value));
        o.detail += std::string(o.detail.empty() ? "" : " ") + row.family + "=" + fmt("%.5f", value);
    }
    const double sq4096 = midpoint_mean(IntegrandId::planar(Family::Square), 4096);
    const double analytic = 16.0 / (kPi * kPi);
    o.require(std::abs(sq4096 - analytic) <= 1e-6, "square@4096 off analytic by " +
                                                       fmt("%.3g", std::abs(sq4096 - analytic)));
    const double t = seconds_since(t0);
    o.require(t < 30.0, "runtime " + fmt("%.1f", t) + " s");
    if (o.pass) {
        o.detail += " |sq4096-16/pi^2|=" + fmt("%.2g", std::abs(sq4096 - analytic)) +
                    " t=" + fmt("%.2f", t) + "s";
    }
    return o;
}

Outcome ac2_oracle_equivalence() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const LatticeSpec& spec : oracle_specs()) {
        SpecData d{spec, build_lattice(spec), closed_form_spectrum(spec), {}};
        d.numeric = numeric_spectrum(d.graph);
        const double diff = max_abs_difference(d.closed, d.numeric);
        worst = std::max(worst, diff);
        o.require(diff <= 1e-8, describe(spec) + " differs by " + fmt("%.3g", diff));
        g_specs.push_back(std::move(d));
    }
    const double t = seconds_since(t0);
    o.require(t < 120.0, "runtime " + fmt("%.1f", t) + " s");
    if (o.pass) {
        o.detail = std::to_string(g_specs.size()) + " lattices, max diff " + fmt("%.2g", worst) +
                   ", t=" + fmt("%.2f", t) + "s";
    }
    return o;
}

Outcome ac3_moments() {
    Outcome o;
    for (const SpecData& d : g_specs) {
        const double two_e = 2.0 * static_cast<double>(d.graph.edge_count());
        for (const Spectrum* s : {&d.closed, &d.numeric}) {
            const double m1 = spectral_moment(*s, 1);
            const double m2 = spectral_moment(*s, 2);
            o.require(std::abs(m1) <= 1e-8, describe(d.spec) + " trace " + fmt("%.3g", m1));
            o.require(std::abs(m2 - two_e) <= 1e-6 * two_e,
                      describe(d.spec) + " second moment " + fmt("%.10g", m2));
        }
    }
    const LatticeSpec tri{Family::Triangular, Boundary::Toroidal, 4, 4};
    const std::size_t triangles = oracle::triangle_count(build_lattice(tri));
    const double m3 = spectral_moment(closed_form_spectrum(tri), 3);
    o.require(std::abs(m3 - 6.0 * static_cast<double>(triangles)) <= 1e-8,
              "triangular third moment " + fmt("%.10g", m3));
    const LatticeSpec hex{Family::Hexagonal, Boundary::Toroidal, 4, 4};
    const double h3 = spectral_moment(numeric_spectrum(build_lattice(hex)), 3);
    o.require(std::abs(h3) <= 1e-8, "hexagonal third moment " + fmt("%.3g", h3));
    if (o.pass) {
        o.detail = "T(4,4): m3=" + fmt("%.6g", m3) + " = 6*" + std::to_string(triangles) +
                   "; H(4,4): m3=" + fmt("%.2g", h3);
    }
    return o;
}

Outcome ac4_bounds() {
    Outcome o;
    for (const SpecData& d : g_specs) {
        const EnergyReport r = energy_report(d.graph, d.numeric);
        o.require(r.bounds_satisfied, describe(d.spec) + " violates an energy bound");
        o.require(r.energy <= r.trivial_bound, describe(d.spec) + " above 2m");
        o.require(r.km_bound && r.energy <= *r.km_bound, describe(d.spec) + " above Koolen-Moulton");
    }
    const Graph k2(2, {{0, 1}});
    const EnergyReport r = energy_report(k2, numeric_spectrum(k2));
    o.require(r.km_bound && std::abs(r.energy - *r.km_bound) <= 1e-9, "single edge not tight");
    if (o.pass) {
        o.detail = std::to_string(g_specs.size()) + " lattices within 2m and KM; K2 gap " +
                   fmt("%.2g", std::abs(r.energy - *r.km_bound));
    }
    return o;
}

Outcome ac5_day_so() {
    Outcome o;
    std::mt19937_64 rng(20100513);
    std::size_t checked = 0;
    for (Family f : kAllFamilies) {
        for (int trial = 0; trial < 100; ++trial) {
            const Boundary b = kAllBoundaries[trial % 5];
            const Graph g = build_lattice({f, b, 6, 6});
            std::vector<Edge> h;
            const double keep = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
            std::bernoulli_distribution coin(keep);
            for (const Edge& e : g.edges())
                if (coin(rng)) h.push_back(e);
            const DaySoReport r = verify_day_so(g, h);
            o.require(r.holds, std::string(to_string(f)) + " trial " + std::to_string(trial));
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " random subsets";
    return o;
}

Outcome ac6_ratio_bound() {
    Outcome o;
    std::size_t checked = 0;
    double tightest = 0.0;
    for (Family f : kAllFamilies) {
        std::vector<Graph> g;
        for (Boundary b : kAllBoundaries) g.push_back(build_lattice({f, b, 8, 8}));
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = 0; b < g.size(); ++b) {
                if (a == b) continue;
                const RatioBoundReport r = ratio_bound_check(g[a], g[b]);
                o.require(r.holds, std::string(to_string(f)) + " " +
                                       std::string(to_string(kAllBoundaries[a])) + " vs " +
                                       std::string(to_string(kAllBoundaries[b])));
                if (r.bound > 0) tightest = std::max(tightest, r.ratio_deviation / r.bound);
                ++checked;
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checked) + " pairs, max deviation/bound " + fmt("%.3f", tightest);
    }
    return o;
}

Outcome ac7_boundary_invariance() {
    Outcome o;
    for (Family f : kAllFamilies) {
        std::vector<double> gaps;
        for (std::size_t n : {10, 20, 40}) {
            const double tor = riemann_energy_per_vertex({f, Boundary::Toroidal, n, n});
            const Graph free = build_lattice({f, Boundary::Free, n, n});
            const double fr =
                energy(numeric_spectrum(free)) / static_cast<double>(free.vertex_count());
            gaps.push_back(std::abs(tor - fr));
        }
        const std::string name(to_string(f));
        o.require(gaps[1] < gaps[0] && gaps[2] < gaps[1], name + " gaps not decreasing");
        o.require(gaps[2] < 0.1, name + " gap at 40 is " + fmt("%.4f", gaps[2]));
        o.detail += (o.detail.empty() ? "" : " ") + name + ":" + fmt("%.4f", gaps[0]) + ">" +
                    fmt("%.4f", gaps[1]) + ">" + fmt("%.4f", gaps[2]);
    }
    return o;
}

Outcome ac8_convergence() {
    Outcome o;
    const auto t0 = Clock::now();
    std::vector<double> dev;
    for (std::size_t n : {16, 32, 64, 128}) {
        dev.push_back(std::abs(riemann_energy_per_vertex({Family::Triangular, Boundary::Toroidal, n, n}) -
                               2.065));
    }
    std::size_t violations = 0;
    for (std::size_t i = 1; i < dev.size(); ++i)
        if (dev[i] >= dev[i - 1]) ++violations;
    o.require(dev.back() <= 0.02, "n=128 deviation " + fmt("%.4g", dev.back()));
    o.require(violations <= 1, std::to_string(violations) + " non-decreasing steps");
    const double t = seconds_since(t0);
    o.require(t < 10.0, "runtime " + fmt("%.1f", t) + " s");
    o.detail = "deviations " + fmt("%.2e", dev[0]) + " " + fmt("%.2e", dev[1]) + " " +
               fmt("%.2e", dev[2]) + " " + fmt("%.2e", dev[3]) + ", t=" + fmt("%.2f", t) + "s";
    return o;
}

Outcome ac9_exact_values() {
    Outcome o;
    const LatticeSpec tri{Family::Triangular, Boundary::Toroidal, 3, 3};
    const double tri_closed = energy(closed_form_spectrum(tri));
    const double tri_numeric = energy(numeric_spectrum(build_lattice(tri)));
    o.require(std::abs(tri_closed - 12.0) <= 1e-9, "T(3,3) closed " + fmt("%.12g", tri_closed));
    o.require(std::abs(tri_numeric - 12.0) <= 1e-9, "T(3,3) numeric " + fmt("%.12g", tri_numeric));

    // C4 is the free 2x2 square patch, which also has a product formula.
    const LatticeSpec c4{Family::Square, Boundary::Free, 2, 2};
    const double c4_closed = energy(closed_form_spectrum(c4));
    const double c4_numeric =
        energy(numeric_spectrum(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
    o.require(std::abs(c4_closed - 4.0) <= 1e-9, "C4 closed " + fmt("%.12g", c4_closed));
    o.require(std::abs(c4_numeric - 4.0) <= 1e-9, "C4 numeric " + fmt("%.12g", c4_numeric));
    o.detail = "T(3,3)=" + fmt("%.12g", tri_closed) + "/" + fmt("%.12g", tri_numeric) +
               " C4=" + fmt("%.12g", c4_closed) + "/" + fmt("%.12g", c4_numeric);
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "asymptotic constants", ac1_constants},
        {"AC2", "closed-form vs numeric spectra", ac2_oracle_equivalence},
        {"AC3", "spectral moments", ac3_moments},
        {"AC4", "energy upper bounds", ac4_bounds},
        {"AC5", "edge-deletion inequality (random subsets)", ac5_day_so},
        {"AC6", "edge-difference ratio bound", ac6_ratio_bound},
        {"AC7", "boundary invariance of energy per vertex", ac7_boundary_invariance},
        {"AC8", "triangular Riemann-sum convergence", ac8_convergence},
        {"AC9", "desk-scale exact energies", ac9_exact_values},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
