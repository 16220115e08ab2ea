#pragma once

#include <string>

#include "starlat/coxeter.hpp"
#include "starlat/fuchsian.hpp"
#include "starlat/lattice.hpp"
#include "starlat/series.hpp"

namespace starlat {

// Lattice file format: {"labels": [...], "gram": [[...], ...]}. Gram entries
// are emitted as JSON numbers; the loader also accepts decimal strings.
// Loading validates symmetry and even diagonal.
std::string lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);

// Lattice file format plus {"roots": [indices], "e": index} (0-based). The
// loader accepts the flat object or one nested under a "vminus" key, and
// permutes the basis into (roots..., e) order, so the roots list fixes the
// reflection order.
std::string basis_to_json(const AlmostRootBasis& basis);
AlmostRootBasis basis_from_json(const std::string& text);

// {"order": N, "coeffs": [...]} with decimal-string integer coefficients.
std::string series_to_json(const TruncatedSeries& s);

// Full report object; every integer is serialized as a decimal string.
// Unavailable series and undefined flags are null.
std::string report_to_json(const FuchsianReport& report);

}  // namespace starlat
