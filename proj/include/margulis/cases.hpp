#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "margulis/mobius.hpp"

namespace margulis {

// Region of the complex beta-plane cut out by disc exclusions
// |beta - center| >= radius, two-focus sum bounds |beta - f1| + |beta - f2| >= s,
// and a list of isolated exception points.
struct DiscExclusion {
    cplx center{0.0};
    double radius{0.0};
};

struct SumExclusion {
    cplx focus1{0.0};
    cplx focus2{0.0};
    double s{0.0};
};

struct ConstraintRegion {
    std::vector<DiscExclusion> disc_exclusions;
    std::vector<SumExclusion> sum_exclusions;
    std::vector<cplx> exception_points;

    bool contains(cplx beta, double tol = 1e-12) const;
};

// Commutator-parameter constraints for groups with a generator of elliptic
// order 3..6: a finite list of admissible values plus a two-focus tail bound
// |gamma - a| + |gamma| >= s.
struct GammaTable {
    int order{3};
    std::vector<cplx> finite_values;
    cplx tail_a{0.0};
    double tail_s{0.0};
};

GammaTable gamma_table(int order);

// The five parameter triples of two-generator subgroups of the tetrahedral,
// octahedral and icosahedral rotation groups.
enum class TripleGroup { A4, S4, A5a, A5b, A5c };

struct EllipticTriple {
    TripleGroup group{TripleGroup::A4};
    GroupParams params;
};

std::vector<EllipticTriple> elliptic_triples();

// Objective minimized over the region:
//   chain — t(beta) = max((|beta+4|+|beta|)/4, t_quad(|beta+4|)), the
//           displacement bound of the acting generator chained with the
//           commutator bound;
//   joint — the two-generator bound of joint_rho_lower as a function of
//           beta_g = beta.
enum class CaseObjective { chain, joint };

struct CaseSpec {
    std::string name;
    cplx gamma{0.0};
    cplx beta_f{0.0};
    ConstraintRegion region;
    CaseObjective objective{CaseObjective::chain};
    double expected_bound{0.0};
    double compare_to{0.0};      // the relevant c(n)
    std::string compare_label;   // e.g. "c3", "2c5"
};

struct CaseReport {
    std::string name;
    double solved_bound{0.0};
    cplx argmin_beta{0.0};
    bool feasible{false};
    bool passes{false};
};

// Point evaluation of the two-generator bound at a fixed parameter triple
// (the exception points the region solver does not cover).
struct SpotSpec {
    std::string name;
    GroupParams params;
    double expected_bound{0.0};
    double compare_to{0.0};
    std::string compare_label;
};

using CaseRecord = std::variant<CaseSpec, SpotSpec>;

// Objective value at a single beta; exposed for the soundness property suite.
double case_objective_t(const CaseSpec& spec, cplx beta);

// Minimizes the case objective over the region: coarse polar grid centered at
// -2 plus shrinking-step local refinement.  solved_bound = arccosh(min t).
CaseReport min_t_feasible(const CaseSpec& spec);

CaseReport evaluate_spot(const SpotSpec& spec);

// The built-in record table (the twelve region cases and the point checks).
std::vector<CaseRecord> builtin_case_records();

std::vector<CaseReport> run_all_cases();

// Plain-text case file round-trip; format documented in the README and in
// data/cases.txt.  Parse errors throw std::runtime_error with a line number.
std::vector<CaseRecord> parse_case_records(std::istream& in);
std::vector<CaseRecord> load_case_file(const std::string& path);
void write_case_records(std::ostream& out, const std::vector<CaseRecord>& records);

// Joint configuration of an order-6 and an order-3 elliptic whose axes are
// at the distance forced by gamma = -1: minimizes the larger of the two
// displacements over the split of the axis-distance budget.  Returns the cosh
// of the minimum (= 17/16) and the split at the optimum.
struct N6Joint {
    double cosh_rho{0.0};
    double cosh2delta_f{0.0};
    double cosh2delta_g{0.0};
};

N6Joint n6_joint_config();
double n6_joint_min();

// Parabolic case: minimum of
//   t = max((|u|^2 + 2) / 2, (|b|^2 + |c|^2) / 2)
// over the commutator normalization b c = -1 and the Shimizu-Leutbecher
// constraint |c u| >= 1.  Analytic value 5/4, attained at
// |u| = |b| = 1/sqrt 2, |c| = sqrt 2.
struct ParabolicMin {
    double t_min{0.0};
    std::string equality_condition;
};

ParabolicMin parabolic_min_t();

// Brute-force 3-variable grid oracle for the same minimum.
double parabolic_min_t_numeric();

}  // namespace margulis
