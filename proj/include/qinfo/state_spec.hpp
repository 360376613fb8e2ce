#pragma once

#include <string>
#include <variant>

#include "qinfo/density_matrix.hpp"
#include "qinfo/pure_state.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

using ParsedState = std::variant<PureState, DensityMatrix, EnsembleSpec>;

// Parses a JSON state description:
//   {"kind":"pure", "amplitudes":[[re,im], ...]}
//   {"kind":"diag", "probs":[p1, ...]}
//   {"kind":"ensemble", "a1":x, "a2":y, "phases":[...]}
//   {"kind":"matrix", "entries":[[[re,im], ...], ...]}
// Specs within 1e-4 of normalized are accepted and renormalized exactly;
// anything farther off is an error. Throws ParseError / NotNormalized /
// NegativeProbability and the DensityMatrix validation errors.
ParsedState parse_state_spec(const std::string& text);

// Density matrix carried or generated by a parsed spec.
DensityMatrix state_density(const ParsedState& state);

}  // namespace qinfo
