#pragma once

#include <string>

#include "isotemporal/enumeration.hpp"
#include "isotemporal/symmetry.hpp"
#include "isotemporal/temporal_network.hpp"

namespace isotemporal {

// Network JSON: {"vertices": ["A", ...], "edges": [{"u": "A", "v": "B",
// "t": 1.5}, ...]}. Times must be pairwise distinct. Malformed JSON raises
// std::runtime_error; semantic problems raise ValidationError.
TemporalNetwork network_from_json(const std::string& text);

// {"mirror_edge_axes": [...], "skewed_mirror_edge_axes": [...],
//  "skewed_mirror_vertex_axes": [...], "rotational_folds": [...],
//  "skewed_rotational_folds": [...], "negation_isomorphic": bool}
std::string symmetry_report_json(const SymmetryProfile& profile);

// Array of {"n": int, "check": str, "formula": str, "oracle": str,
// "pass": bool}; counts are string-encoded to stay exact.
std::string verification_report_json(const VerificationReport& report);

}  // namespace isotemporal
