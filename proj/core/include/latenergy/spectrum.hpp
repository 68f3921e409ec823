#pragma once

#include "latenergy/graph.hpp"
#include "latenergy/lattice.hpp"

#include <cstddef>
#include <vector>

namespace latenergy {

enum class Provenance { ClosedForm, Numeric };

/// Multiset of adjacency eigenvalues, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;
    Provenance provenance = Provenance::Numeric;
    std::size_t source_vertex_count = 0;
};

inline constexpr std::size_t kDefaultSizeCap = 6000;

/// True when closed_form_spectrum accepts (family, boundary): every family
/// on the torus, plus the square lattice on the cylinder and free patch.
bool has_closed_form(const LatticeSpec& spec) noexcept;

/// Eigenvalues enumerated from the Bloch/product formulas. Throws
/// UnsupportedSpectrumError when has_closed_form(spec) is false.
Spectrum closed_form_spectrum(const LatticeSpec& spec);

/// Full dense symmetric eigendecomposition of the adjacency matrix.
/// Throws ResourceError above `size_cap` vertices.
Spectrum numeric_spectrum(const Graph& g, std::size_t size_cap = kDefaultSizeCap);

/// Closed form when available, numeric otherwise.
Spectrum lattice_spectrum(const LatticeSpec& spec, bool force_numeric = false,
                          std::size_t size_cap = kDefaultSizeCap);

/// Sum of lambda^k. k = 1 gives the trace (0), k = 2 gives 2|E|,
/// k = 3 gives 6 times the triangle count.
double spectral_moment(const Spectrum& s, int k);

/// Largest entrywise difference between two sorted spectra of equal length.
double max_abs_difference(const Spectrum& a, const Spectrum& b);

} // namespace latenergy
