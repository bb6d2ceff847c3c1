#pragma once

#include <cstdint>
#include <string>

#include "margulis/halfspace.hpp"
#include "margulis/mobius.hpp"

namespace margulis {

enum class ExtremalKind { elliptic_sharp, parabolic_modular };

struct ExtremalConfig {
    MoebiusMap f;
    MoebiusMap g;
    HPoint witness;
    double claimed{0.0};
    ExtremalKind kind{ExtremalKind::elliptic_sharp};
    int n{0};  // elliptic order for elliptic_sharp, 0 otherwise
};

// Sharp pair for elliptic order n: f of order n (theta = 2 pi / n) and g of
// order 2, axes horizontal at heights straddling j with separation b(n),
// positioned so both displacements of j equal d(n).
ExtremalConfig extremal_elliptic_config(int n);

// f: z -> z + 1/sqrt 2 and g = [[0, 1/sqrt 2], [-sqrt 2, 0]]; both move j by
// arccosh(5/4).
ExtremalConfig modular_pair();

// Orders 6 and 3 with axes at the forced distance (cosh of twice the
// distance = 5/3), split so both displacements of j equal arccosh(17/16).
ExtremalConfig extremal_n6_joint_config();

// Checks the config invariants: equal displacements at the witness matching
// `claimed` to 1e-6, and no probe point in a seeded sample around the witness
// beating claimed - 1e-6.
bool verify_equality(const ExtremalConfig& cfg, std::uint64_t seed = 0);

// Record serialization in the case-file format ([extremal] blocks).
std::string extremal_record(const ExtremalConfig& cfg);

}  // namespace margulis
