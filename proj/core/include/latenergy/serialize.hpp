#pragma once

#include "latenergy/energy.hpp"
#include "latenergy/quadrature.hpp"
#include "latenergy/spectrum.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace latenergy {

/// Shortest decimal carrying 15 significant digits ("%.15g").
std::string format_number(double x);

/// Builds one single-line JSON object. Numbers are written with
/// format_number; non-finite numbers become null.
class JsonObjectWriter {
public:
    JsonObjectWriter& add(std::string_view key, double value);
    JsonObjectWriter& add(std::string_view key, std::size_t value);
    JsonObjectWriter& add(std::string_view key, bool value);
    JsonObjectWriter& add(std::string_view key, std::string_view value);
    JsonObjectWriter& add(std::string_view key, const char* value) {
        return add(key, std::string_view(value));
    }
    JsonObjectWriter& add_null(std::string_view key);
    /// `json` must already be valid JSON text.
    JsonObjectWriter& add_raw(std::string_view key, std::string_view json);

    std::string str() const { return body_ + "}"; }

private:
    void key(std::string_view k);
    std::string body_ = "{";
};

/// JSON array of numbers, 15 significant digits.
std::string json_number_array(std::span<const double> values);

/// `index,eigenvalue` CSV, descending order, 15 significant digits.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

// Single-line JSON objects with exactly the report fields, in declaration
// order. Non-finite numbers are emitted as null.
std::string to_json(const EnergyReport& r);
std::string to_json(const DaySoReport& r);
std::string to_json(const RatioBoundReport& r);
std::string to_json(const QuadratureResult& r, const IntegrandId& id);

} // namespace latenergy
