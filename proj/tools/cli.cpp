#include "cli.hpp"

#include "latenergy/energy.hpp"
#include "latenergy/error.hpp"
#include "latenergy/graph.hpp"
#include "latenergy/quadrature.hpp"
#include "latenergy/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace latenergy::cli {

namespace {

struct RawArgs {
    std::string family;
    std::string boundary;
    std::string format;
    std::string output;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t dim = 0;
    double tol = 1e-4;
    std::size_t size_cap = kDefaultSizeCap;
    std::size_t max_n = 128;
    bool numeric = false;
};

Family require_family(const RawArgs& raw) {
    if (raw.family.empty()) throw UsageError("--family is required");
    if (auto f = parse_family(raw.family)) return *f;
    throw UsageError("unknown family '" + raw.family +
                     "' (expected square, triangular, trisquare, hexagonal)");
}

std::optional<Boundary> optional_boundary(const RawArgs& raw) {
    if (raw.boundary.empty()) return std::nullopt;
    if (auto b = parse_boundary(raw.boundary)) return b;
    throw UsageError("unknown boundary '" + raw.boundary +
                     "' (expected toroidal, cylindrical, mobius, klein, free)");
}

std::optional<OutputFormat> optional_format(const RawArgs& raw) {
    if (raw.format.empty()) return std::nullopt;
    if (raw.format == "json") return OutputFormat::Json;
    if (raw.format == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format '" + raw.format + "' (expected json or csv)");
}

LatticeSpec lattice_spec(const RunConfig& c) {
    LatticeSpec spec{*c.family, c.boundary.value_or(Boundary::Toroidal), c.rows, c.cols};
    try {
        validate(spec);
    } catch (const SpecError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

void emit_csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << '\n';
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_lattice(const RunConfig& c, std::ostream& out) {
    if (c.format) throw UsageError("lattice writes the edge-list format; --format is not accepted");
    write_edge_list(out, build_lattice(lattice_spec(c)));
    return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    const LatticeSpec spec = lattice_spec(c);
    const Spectrum s = lattice_spectrum(spec, c.force_numeric, c.size_cap);
    if (c.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
        write_spectrum_csv(out, s);
        return kExitOk;
    }
    out << JsonObjectWriter{}
               .add("lattice", describe(spec))
               .add("provenance", s.provenance == Provenance::ClosedForm ? "closed_form" : "numeric")
               .add("source_vertex_count", s.source_vertex_count)
               .add_raw("eigenvalues", json_number_array(s.eigenvalues))
               .str()
        << '\n';
    return kExitOk;
}

int cmd_energy(const RunConfig& c, std::ostream& out) {
    const LatticeSpec spec = lattice_spec(c);
    const Graph g = build_lattice(spec);
    const EnergyReport r = energy_report(g, lattice_spectrum(spec, c.force_numeric, c.size_cap));
    if (c.format.value_or(OutputFormat::Json) == OutputFormat::Json) {
        out << to_json(r) << '\n';
    } else {
        emit_csv_row(out, {"energy", "vertex_count", "edge_count", "energy_per_vertex",
                           "trivial_bound", "km_bound", "bounds_satisfied"});
        emit_csv_row(out, {format_number(r.energy), std::to_string(r.vertex_count),
                           std::to_string(r.edge_count), format_number(r.energy_per_vertex),
                           format_number(r.trivial_bound),
                           r.km_bound ? format_number(*r.km_bound) : "",
                           bool_text(r.bounds_satisfied)});
    }
    return r.bounds_satisfied ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.format && *c.format != OutputFormat::Json) {
        throw UsageError("verify emits newline-delimited JSON only");
    }
    const Family family = *c.family;
    std::vector<LatticeSpec> specs;
    std::vector<Graph> graphs;
    for (Boundary b : kAllBoundaries) {
        LatticeSpec spec{family, b, c.rows, c.cols};
        try {
            validate(spec);
        } catch (const SpecError& e) {
            throw UsageError(e.what());
        }
        specs.push_back(spec);
        graphs.push_back(build_lattice(spec));
    }

    auto envelope = [&](std::string_view check) {
        JsonObjectWriter j;
        j.add("check", check).add("family", to_string(family)).add("rows", c.rows).add("cols", c.cols);
        return j;
    };

    bool all_ok = true;
    for (std::size_t a = 0; a < specs.size(); ++a) {
        const EnergyReport r = energy_report(graphs[a], numeric_spectrum(graphs[a], c.size_cap));
        all_ok = all_ok && r.bounds_satisfied;
        out << envelope("energy_bounds")
                   .add("boundary", to_string(specs[a].boundary))
                   .add_raw("report", to_json(r))
                   .str()
            << '\n';
    }
    for (std::size_t a = 0; a < specs.size(); ++a) {
        for (std::size_t b = 0; b < specs.size(); ++b) {
            if (a == b) continue;
            const auto shared = common_edges(graphs[a], graphs[b]);
            const DaySoReport r = verify_day_so(graphs[a], shared, c.size_cap);
            all_ok = all_ok && r.holds;
            const std::string h = "common(" + std::string(to_string(specs[a].boundary)) + "," +
                                  std::string(to_string(specs[b].boundary)) + ")";
            out << envelope("day_so")
                       .add("g", to_string(specs[a].boundary))
                       .add("h", h)
                       .add_raw("report", to_json(r))
                       .str()
                << '\n';
        }
    }
    for (std::size_t a = 0; a < specs.size(); ++a) {
        for (std::size_t b = 0; b < specs.size(); ++b) {
            if (a == b) continue;
            const RatioBoundReport r = ratio_bound_check(graphs[a], graphs[b], c.size_cap);
            all_ok = all_ok && r.holds;
            out << envelope("ratio_bound")
                       .add("g", to_string(specs[a].boundary))
                       .add("h", to_string(specs[b].boundary))
                       .add_raw("report", to_json(r))
                       .str()
                << '\n';
        }
    }
    if (!all_ok) err << "verify: at least one check failed\n";
    return all_ok ? kExitOk : kExitFailure;
}

IntegrandId integrand_for(const RunConfig& c) {
    if (c.hypercubic_dim > 0) return IntegrandId::hypercubic(c.hypercubic_dim);
    return IntegrandId::planar(*c.family);
}

int cmd_constant(const RunConfig& c, std::ostream& out) {
    const IntegrandId id = integrand_for(c);
    const QuadratureResult r = asymptotic_constant(id, c.tol);
    if (c.format.value_or(OutputFormat::Json) == OutputFormat::Json) {
        out << to_json(r, id) << '\n';
    } else {
        emit_csv_row(out, {"integrand", "value", "error_estimate", "grid_points_per_axis",
                           "converged"});
        emit_csv_row(out, {to_string(id), format_number(r.value), format_number(r.error_estimate),
                           std::to_string(r.grid_points_per_axis), bool_text(r.converged)});
    }
    return kExitOk;
}

int cmd_converge(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Family family = *c.family;
    const IntegrandId id = IntegrandId::planar(family);
    const QuadratureResult limit = asymptotic_constant(id, c.tol);
    const bool csv = c.format.value_or(OutputFormat::Csv) == OutputFormat::Csv;
    if (csv) out << "n,energy_per_vertex,deviation\n";

    for (std::size_t n = 16; n <= c.max_n; n *= 2) {
        double epv = 0.0;
        if (!c.boundary) {
            epv = riemann_energy_per_vertex({family, Boundary::Toroidal, n, n});
        } else {
            const LatticeSpec spec{family, *c.boundary, n, n};
            if (vertex_count(spec) > c.size_cap) {
                err << "converge: stopping before n=" << n << " (" << vertex_count(spec)
                    << " vertices exceeds the size cap " << c.size_cap << ")\n";
                break;
            }
            const Spectrum s = numeric_spectrum(build_lattice(spec), c.size_cap);
            epv = energy(s) / static_cast<double>(s.source_vertex_count);
        }
        const double dev = std::abs(epv - limit.value);
        if (csv) {
            out << n << ',' << format_number(epv) << ',' << format_number(dev) << '\n';
        } else {
            out << JsonObjectWriter{}
                       .add("n", n)
                       .add("energy_per_vertex", epv)
                       .add("deviation", dev)
                       .str()
                << '\n';
        }
    }
    return kExitOk;
}

void require_lattice_dims(const RunConfig& c) {
    if (c.rows == 0 || c.cols == 0) throw UsageError("-n/--rows and -m/--cols are required");
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    switch (c.command) {
    case Command::Lattice: require_lattice_dims(c); return cmd_lattice(c, out);
    case Command::Spectrum: require_lattice_dims(c); return cmd_spectrum(c, out);
    case Command::Energy: require_lattice_dims(c); return cmd_energy(c, out);
    case Command::Verify: require_lattice_dims(c); return cmd_verify(c, out, err);
    case Command::Constant: return cmd_constant(c, out);
    case Command::Converge: return cmd_converge(c, out, err);
    }
    throw UsageError("unknown command");
}

} // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Lattice graph energy: spectra, bounds and asymptotic constants", "latenergy"};
    app.require_subcommand(1);
    RawArgs raw;

    auto add_spec = [&raw](CLI::App* sub, bool need_boundary) {
        sub->add_option("--family", raw.family,
                        "square | triangular | trisquare | hexagonal");
        if (need_boundary) {
            sub->add_option("--boundary", raw.boundary,
                            "toroidal | cylindrical | mobius | klein | free");
        }
        sub->add_option("-n,--rows", raw.rows, "Rows");
        sub->add_option("-m,--cols", raw.cols, "Columns (cells per row for hexagonal)");
        sub->add_option("-o,--output", raw.output, "Write the artifact to this file");
        sub->add_option("--size-cap", raw.size_cap, "Maximum vertex count for dense eigensolves");
    };

    auto* lattice = app.add_subcommand("lattice", "Write the lattice as an edge list");
    add_spec(lattice, true);
    auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues as CSV");
    add_spec(spectrum, true);
    spectrum->add_flag("--numeric", raw.numeric, "Force the dense eigensolver");
    auto* energy = app.add_subcommand("energy", "Energy report as JSON");
    add_spec(energy, true);
    energy->add_flag("--numeric", raw.numeric, "Force the dense eigensolver");
    auto* verify = app.add_subcommand("verify", "Check energy inequalities across boundaries");
    add_spec(verify, false);
    auto* constant = app.add_subcommand("constant", "Asymptotic energy per vertex by quadrature");
    constant->add_option("--family", raw.family,
                         "square | triangular | trisquare | hexagonal | hypercubic");
    constant->add_option("--dim", raw.dim, "Dimension k for --family hypercubic");
    constant->add_option("-o,--output", raw.output, "Write the artifact to this file");
    auto* converge = app.add_subcommand("converge", "Finite-size energy per vertex vs the limit");
    add_spec(converge, true);
    converge->add_option("--max-n", raw.max_n, "Largest n (sizes double from 16)");
    for (auto* sub : {lattice, spectrum, energy, verify, constant, converge}) {
        sub->add_option("--format", raw.format, "json | csv");
        sub->add_option("--tol", raw.tol, "Quadrature tolerance (>= 1e-6)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "lattice") c.command = Command::Lattice;
    else if (name == "spectrum") c.command = Command::Spectrum;
    else if (name == "energy") c.command = Command::Energy;
    else if (name == "verify") c.command = Command::Verify;
    else if (name == "constant") c.command = Command::Constant;
    else c.command = Command::Converge;

    if (c.command == Command::Constant && raw.family == "hypercubic") {
        if (raw.dim == 0) throw UsageError("--family hypercubic needs --dim k (k >= 1)");
        c.hypercubic_dim = raw.dim;
    } else {
        c.family = require_family(raw);
        if (raw.dim != 0) throw UsageError("--dim only applies to --family hypercubic");
    }
    c.boundary = optional_boundary(raw);
    c.rows = raw.rows;
    c.cols = raw.cols;
    c.tol = raw.tol;
    c.format = optional_format(raw);
    if (!raw.output.empty()) c.output_path = raw.output;
    c.size_cap = raw.size_cap;
    c.force_numeric = raw.numeric;
    c.max_n = raw.max_n;

    if (!(c.tol >= kMinQuadratureTolerance)) throw UsageError("--tol must be >= 1e-6");
    if (c.size_cap == 0) throw UsageError("--size-cap must be positive");
    return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.output_path) return dispatch(config, out, err);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer, err);
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
        err << "latenergy: cannot open " << *config.output_path << " for writing\n";
        return kExitFailure;
    }
    file << buffer.str();
    return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        auto config = parse_args(argc, argv, out);
        if (!config) return kExitOk;
        return run(*config, out, err);
    } catch (const UsageError& e) {
        err << "latenergy: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "latenergy: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace latenergy::cli
