#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mir/errors.hpp"
#include "mir/ideal.hpp"
#include "mir/simplicial.hpp"

namespace mir {

// Per-variable exponent data extracted by check_star: q is the exponent the
// variable carries in every multi-support generator (absent when it appears
// only as a pure power), s is the pure-power exponent x_i^s (absent when no
// pure power exists).
struct StarVariable {
    int variable = 0;  // 1-indexed
    std::optional<std::uint32_t> q;
    std::optional<std::uint32_t> s;

    friend bool operator==(const StarVariable&, const StarVariable&) = default;
};

struct StarViolation {
    int variable = 0;
    std::vector<std::uint32_t> exponents;  // the conflicting values, ascending
    std::string reason;

    friend bool operator==(const StarViolation&, const StarViolation&) = default;
};

struct StarReport {
    bool satisfied = false;
    std::vector<StarVariable> variables;   // one entry per ambient variable
    std::vector<StarViolation> violations;

    friend bool operator==(const StarReport&, const StarReport&) = default;
};

// Thrown by operations whose precondition is the uniform exponent (star)
// condition; carries the full report so callers can explain the failure.
class StarConditionError : public Error {
  public:
    StarConditionError(const std::string& message, StarReport report)
        : Error(message), report_(std::move(report)) {}

    const StarReport& report() const { return report_; }

  private:
    StarReport report_;
};

// The star condition: for each variable, the exponents it carries in
// generators with at least two variables in their support must all agree.
// Pure powers are recorded separately; a pure power s_i <= q_i is reported
// as a violation (it would contradict minimality).
StarReport check_star(const MonomialIdeal& ideal);

// The complex whose minimal non-faces are the supports of the multi-support
// generators; pure powers contribute no non-face.
// Throws StarConditionError when the star condition fails.
SimplicialComplex construction_k(const MonomialIdeal& ideal);

// CW-pair assigned to one variable.  The infinite projective space is
// rendered "CP^inf"; a point is "*"; truncations are "CP^<k>".
struct VariableCase {
    int variable = 0;
    int case_tag = 0;  // 1..4
    std::optional<std::uint32_t> q;  // cases 2 and 4
    std::optional<std::uint32_t> s;  // cases 3 and 4
    std::string space;
    std::string subspace;
    // Case 4 with q = 1: the subspace CP^0 is a point, so the pair has the
    // same shape as case 3; the tag is kept and the coincidence flagged.
    bool point_subspace_coincidence = false;

    friend bool operator==(const VariableCase&, const VariableCase&) = default;
};

struct PairAssignment {
    std::vector<VariableCase> variables;

    friend bool operator==(const PairAssignment&, const PairAssignment&) = default;
};

// Assigns each variable its case (1)-(4) and CW-pair:
//   (1) no pure power, q = 1      -> (CP^inf, *)
//   (2) no pure power, q > 1      -> (CP^inf, CP^{q-1})
//   (3) pure power only           -> (CP^{s-1}, *)
//   (4) pure power and q (q < s)  -> (CP^{s-1}, CP^{q-1})
// Throws StarConditionError when the star condition fails, ValidationError
// when a variable occurs in no generator or a case-4 variable has q >= s.
PairAssignment classify_variables(const MonomialIdeal& ideal);

// The ideal presented by the polyhedral product over construction_k: one
// generator prod_{i in N} x_i^{q_i} per minimal non-face N, plus every pure
// power x_i^{s_i}, minimalized.
MonomialIdeal polyhedral_presentation(const MonomialIdeal& ideal);

struct RealizationReport {
    bool applicable = false;  // the star condition holds
    bool verified = false;    // presentation round-trips to the input
    StarReport star;
    MonomialIdeal original;
    std::optional<MonomialIdeal> presentation;
    std::optional<SimplicialComplex> complex;
    std::vector<std::uint64_t> f_vector;
    std::optional<PairAssignment> pairs;
};

// End-to-end check that the polyhedral presentation reproduces the input
// ideal; reports not-applicable (never throws) when the star condition
// fails.
RealizationReport verify_realization(const MonomialIdeal& ideal);

}  // namespace mir
