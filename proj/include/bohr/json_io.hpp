#pragma once
#include <json.hpp>

#include "bohr/multidim.hpp"
#include "bohr/sharpness.hpp"
#include "bohr/verify.hpp"

// JSON bindings for every report type the CLI emits. nlohmann prints doubles
// with shortest round-trip precision, so parse(dump(x)) == x holds exactly.

namespace bohr {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RootResult, root, residual, bracket_width, unique_on_grid)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Table1Row, k, m0, N, p, root)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CurvePoint, label, r, y)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SharpnessReport, radius, probe_r, witness_a, functional_value,
                                   exceeded)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Violation, trial_index, value, descriptor)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerificationReport, trials_run, max_value, argmax_descriptor,
                                   argmax_index, violations, seed, radius, probe_radius)

}  // namespace bohr
