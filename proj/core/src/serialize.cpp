#include "latenergy/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace latenergy {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void JsonObjectWriter::key(std::string_view k) {
    if (body_.size() > 1) body_ += ',';
    body_ += nlohmann::json(std::string(k)).dump();
    body_ += ':';
}

JsonObjectWriter& JsonObjectWriter::add(std::string_view k, double value) {
    if (!std::isfinite(value)) return add_null(k);
    key(k);
    body_ += format_number(value);
    return *this;
}

JsonObjectWriter& JsonObjectWriter::add(std::string_view k, std::size_t value) {
    key(k);
    body_ += std::to_string(value);
    return *this;
}

JsonObjectWriter& JsonObjectWriter::add(std::string_view k, bool value) {
    key(k);
    body_ += value ? "true" : "false";
    return *this;
}

JsonObjectWriter& JsonObjectWriter::add(std::string_view k, std::string_view value) {
    key(k);
    body_ += nlohmann::json(std::string(value)).dump();
    return *this;
}

JsonObjectWriter& JsonObjectWriter::add_null(std::string_view k) {
    key(k);
    body_ += "null";
    return *this;
}

JsonObjectWriter& JsonObjectWriter::add_raw(std::string_view k, std::string_view json) {
    key(k);
    body_ += json;
    return *this;
}

std::string json_number_array(std::span<const double> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::isfinite(values[i]) ? format_number(values[i]) : "null";
    }
    return out + "]";
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        out << i << ',' << format_number(s.eigenvalues[i]) << '\n';
    }
}

std::string to_json(const EnergyReport& r) {
    JsonObjectWriter j;
    j.add("energy", r.energy)
        .add("vertex_count", r.vertex_count)
        .add("edge_count", r.edge_count)
        .add("energy_per_vertex", r.energy_per_vertex)
        .add("trivial_bound", r.trivial_bound);
    if (r.km_bound) {
        j.add("km_bound", *r.km_bound);
    } else {
        j.add_null("km_bound");
    }
    j.add("bounds_satisfied", r.bounds_satisfied);
    return j.str();
}

std::string to_json(const DaySoReport& r) {
    return JsonObjectWriter{}
        .add("energy_g", r.energy_g)
        .add("energy_h", r.energy_h)
        .add("energy_g_minus_eh", r.energy_g_minus_eh)
        .add("lower", r.lower)
        .add("upper", r.upper)
        .add("holds", r.holds)
        .str();
}

std::string to_json(const RatioBoundReport& r) {
    return JsonObjectWriter{}
        .add("delta", r.delta)
        .add("energy_g", r.energy_g)
        .add("ratio_deviation", r.ratio_deviation)
        .add("bound", r.bound)
        .add("holds", r.holds)
        .str();
}

std::string to_json(const QuadratureResult& r, const IntegrandId& id) {
    return JsonObjectWriter{}
        .add("integrand", to_string(id))
        .add("value", r.value)
        .add("error_estimate", r.error_estimate)
        .add("grid_points_per_axis", r.grid_points_per_axis)
        .add("converged", r.converged)
        .str();
}

} // namespace latenergy
