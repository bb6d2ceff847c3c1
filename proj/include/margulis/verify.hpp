#pragma once

#include <cstdint>

#include "margulis/report.hpp"

namespace margulis {

// Acceptance-table suites.  Each returns a Report whose overall pass() is the
// suite verdict.

// Printed constant decimals, the root-solve consistency checks and the psi
// table.
Report verify_constants(double tol = 5e-4);

// Randomized identity suite over `pairs` generator pairs: the tau/theta
// norm identities, the displacement formulas at j and at random points, the
// trace-parameter identities, and the axis-distance closed form against
// numeric minimization.
Report verify_identities(int pairs = 10000, std::uint64_t seed = 0);

// Full built-in case table.
Report verify_cases();

// Parabolic minimum and the modular pair.
Report verify_parabolic();

// Extremal gallery attainment.
Report verify_extremal();

// Property suite: realizes the encoded case parameters as concrete pairs and
// checks that no witness point beats the claimed bound.
Report verify_soundness(int pairs = 1000, int witnesses = 1000,
                        std::uint64_t seed = 0);

Report verify_all(std::uint64_t seed = 0);

// Seed from MARGULIS_SEED, default 0.
std::uint64_t seed_from_env();

}  // namespace margulis
