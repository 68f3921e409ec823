#pragma once

#include "latenergy/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace latenergy {

enum class Family { Square, Triangular, TriSquare33_42, Hexagonal };

enum class Boundary { Toroidal, Cylindrical, MobiusBand, KleinBottle, Free };

inline constexpr Family kAllFamilies[] = {Family::Square, Family::Triangular,
                                          Family::TriSquare33_42, Family::Hexagonal};
inline constexpr Boundary kAllBoundaries[] = {Boundary::Toroidal, Boundary::Cylindrical,
                                              Boundary::MobiusBand, Boundary::KleinBottle,
                                              Boundary::Free};

/// Input to build_lattice.
///
/// `rows` indexes the vertical direction, `cols` the horizontal one.
///  - Square, Triangular: rows x cols vertices.
///  - TriSquare33_42: rows x cols vertices, cols even; columns 2k and 2k+1
///    form the k-th two-vertex cell.
///  - Hexagonal: rows x cols two-vertex cells (2 * rows * cols vertices).
///
/// Toroidal wraps both directions. Cylindrical wraps the row direction only
/// (each column closes into a cycle of length `rows`). Möbius is the
/// cylinder whose row seam reverses the cell column; Klein is the torus with
/// that same reversed row seam. Free wraps nothing.
struct LatticeSpec {
    Family family = Family::Square;
    Boundary boundary = Boundary::Toroidal;
    std::size_t rows = 0;
    std::size_t cols = 0;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

bool wraps_rows(Boundary b) noexcept;
bool wraps_cols(Boundary b) noexcept;
bool twisted(Boundary b) noexcept;

/// Throws SpecError when the spec violates its invariants.
void validate(const LatticeSpec& spec);

std::size_t vertex_count(const LatticeSpec& spec);

/// Canonical vertex order: row-major, with the two-vertex cell as the
/// innermost index for the Hexagonal and TriSquare33_42 families.
Graph build_lattice(const LatticeSpec& spec);

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Boundary b) noexcept;
std::optional<Family> parse_family(std::string_view name);
std::optional<Boundary> parse_boundary(std::string_view name);

std::string describe(const LatticeSpec& spec);

} // namespace latenergy
