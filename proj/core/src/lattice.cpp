#include "latenergy/lattice.hpp"

#include "latenergy/error.hpp"

#include <array>
#include <span>

namespace latenergy {

bool wraps_rows(Boundary b) noexcept { return b != Boundary::Free; }

bool wraps_cols(Boundary b) noexcept {
    return b == Boundary::Toroidal || b == Boundary::KleinBottle;
}

bool twisted(Boundary b) noexcept {
    return b == Boundary::MobiusBand || b == Boundary::KleinBottle;
}

namespace {

// One bond of the cell-level stencil: from sublattice `from` of cell (r, c)
// to sublattice `to` of cell (r + dr, c + dc). Every bond points forward so
// each edge is emitted once.
struct Bond {
    int dr;
    int dc;
    int from;
    int to;
};

struct Stencil {
    std::size_t cell_size;
    std::span<const Bond> bonds;
};

constexpr std::array<Bond, 2> kSquareBonds{{{0, 1, 0, 0}, {1, 0, 0, 0}}};
constexpr std::array<Bond, 3> kTriangularBonds{{{0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0}}};
// Cell = (A, B) = columns (2k, 2k+1); rows are cycles A0 B0 A1 B1 ...,
// vertical bonds on both sublattices, diagonal B(r) -> A(r+1) inside a cell.
constexpr std::array<Bond, 5> kTriSquareBonds{
    {{0, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 0}}};
// Brick-wall honeycomb: rows are cycles A0 B0 A1 B1 ..., rungs B(r) -> A(r+1).
constexpr std::array<Bond, 3> kHexagonalBonds{{{0, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}}};

Stencil stencil_for(Family f) {
    switch (f) {
    case Family::Square: return {1, kSquareBonds};
    case Family::Triangular: return {1, kTriangularBonds};
    case Family::TriSquare33_42: return {2, kTriSquareBonds};
    case Family::Hexagonal: return {2, kHexagonalBonds};
    }
    throw SpecError("unknown lattice family");
}

std::size_t cell_cols(const LatticeSpec& spec) {
    return spec.family == Family::TriSquare33_42 ? spec.cols / 2 : spec.cols;
}

} // namespace

void validate(const LatticeSpec& spec) {
    if (spec.rows == 0 || spec.cols == 0) {
        throw SpecError("lattice dimensions must be positive, got " + describe(spec));
    }
    if (spec.family == Family::TriSquare33_42 && spec.cols % 2 != 0) {
        throw SpecError("3^3.4^2 lattice needs an even column count, got " + describe(spec));
    }
    if (wraps_rows(spec.boundary) && spec.rows < 3) {
        throw SpecError("wrapped row dimension must be at least 3, got " + describe(spec));
    }
    if (wraps_cols(spec.boundary) && spec.cols < 3) {
        throw SpecError("wrapped column dimension must be at least 3, got " + describe(spec));
    }
    if (vertex_count(spec) > std::size_t{1} << 31) {
        throw SpecError("lattice too large: " + describe(spec));
    }
}

std::size_t vertex_count(const LatticeSpec& spec) {
    const std::size_t per_cell = spec.family == Family::Hexagonal ? 2 : 1;
    return spec.rows * spec.cols * per_cell;
}

Graph build_lattice(const LatticeSpec& spec) {
    validate(spec);
    const Stencil st = stencil_for(spec.family);
    const auto rows = static_cast<long>(spec.rows);
    const auto cols = static_cast<long>(cell_cols(spec));
    const bool row_wrap = wraps_rows(spec.boundary);
    const bool col_wrap = wraps_cols(spec.boundary);
    const bool twist = twisted(spec.boundary);

    auto index = [&](long r, long c, int s) {
        return static_cast<Vertex>((r * cols + c) * static_cast<long>(st.cell_size) + s);
    };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(rows * cols) * st.bonds.size());
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            for (const Bond& b : st.bonds) {
                long r2 = r + b.dr;
                long c2 = c + b.dc;
                if (c2 < 0 || c2 >= cols) {
                    if (!col_wrap) continue;
                    c2 = (c2 + cols) % cols;
                }
                if (r2 >= rows) {
                    if (!row_wrap) continue;
                    r2 -= rows;
                    if (twist) c2 = cols - 1 - c2;
                }
                edges.emplace_back(index(r, c, b.from), index(r2, c2, b.to));
            }
        }
    }
    return Graph(vertex_count(spec), std::move(edges));
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::Square: return "square";
    case Family::Triangular: return "triangular";
    case Family::TriSquare33_42: return "trisquare";
    case Family::Hexagonal: return "hexagonal";
    }
    return "?";
}

std::string_view to_string(Boundary b) noexcept {
    switch (b) {
    case Boundary::Toroidal: return "toroidal";
    case Boundary::Cylindrical: return "cylindrical";
    case Boundary::MobiusBand: return "mobius";
    case Boundary::KleinBottle: return "klein";
    case Boundary::Free: return "free";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<Boundary> parse_boundary(std::string_view name) {
    for (Boundary b : kAllBoundaries) {
        if (to_string(b) == name) return b;
    }
    return std::nullopt;
}

std::string describe(const LatticeSpec& spec) {
    return std::string(to_string(spec.family)) + "/" + std::string(to_string(spec.boundary)) +
           " " + std::to_string(spec.rows) + "x" + std::to_string(spec.cols);
}

} // namespace latenergy
