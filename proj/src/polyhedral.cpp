#include "mir/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace mir {

namespace {

bool is_multi_support(const Monomial& g) { return support(g).size() >= 2; }

std::string cp_space(std::uint32_t truncation) {
    // CP^k as a string; truncation is the k.
    return "CP^" + std::to_string(truncation);
}

}  // namespace

StarReport check_star(const MonomialIdeal& ideal) {
    const int n = ideal.variable_count();
    std::vector<std::set<std::uint32_t>> multi_exponents(static_cast<std::size_t>(n));
    std::vector<std::optional<std::uint32_t>> pure(static_cast<std::size_t>(n));
    for (const Monomial& g : ideal.generators()) {
        const std::vector<std::uint32_t> vars = support(g);
        if (vars.size() == 1) {
            // A minimal ideal has at most one pure power per variable.
            pure[vars[0] - 1] = g.exponent(static_cast<int>(vars[0]));
        } else {
            for (std::uint32_t v : vars) {
                multi_exponents[v - 1].insert(g.exponent(static_cast<int>(v)));
            }
        }
    }

    StarReport report;
    report.variables.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::set<std::uint32_t>& seen = multi_exponents[static_cast<std::size_t>(i - 1)];
        StarVariable record;
        record.variable = i;
        record.s = pure[static_cast<std::size_t>(i - 1)];
        if (seen.size() == 1) {
            record.q = *seen.begin();
        } else if (seen.size() > 1) {
            report.violations.push_back(
                {i, std::vector<std::uint32_t>(seen.begin(), seen.end()),
                 "exponent varies across generators with two or more variables"});
        }
        if (record.q && record.s && *record.q >= *record.s) {
            report.violations.push_back({i,
                                         {*record.q, *record.s},
                                         "pure power does not exceed the shared exponent"});
        }
        report.variables.push_back(std::move(record));
    }
    report.satisfied = report.violations.empty();
    return report;
}

SimplicialComplex construction_k(const MonomialIdeal& ideal) {
    StarReport star = check_star(ideal);
    if (!star.satisfied) {
        throw StarConditionError("the star condition fails, no complex is defined",
                                 std::move(star));
    }
    std::vector<std::vector<std::uint32_t>> non_faces;
    for (const Monomial& g : ideal.generators()) {
        if (is_multi_support(g)) non_faces.push_back(support(g));
    }
    return SimplicialComplex(ideal.variable_count(), std::move(non_faces));
}

PairAssignment classify_variables(const MonomialIdeal& ideal) {
    StarReport star = check_star(ideal);
    if (!star.satisfied) {
        throw StarConditionError("the star condition fails, variables cannot be classified",
                                 std::move(star));
    }
    PairAssignment assignment;
    assignment.variables.reserve(star.variables.size());
    for (const StarVariable& record : star.variables) {
        VariableCase out;
        out.variable = record.variable;
        if (!record.q && !record.s) {
            throw ValidationError("variable x" + std::to_string(record.variable) +
                                  " occurs in no generator and has no case");
        }
        if (record.q && !record.s) {
            if (*record.q == 1) {
                out.case_tag = 1;
                out.space = "CP^inf";
                out.subspace = "*";
            } else {
                out.case_tag = 2;
                out.q = record.q;
                out.space = "CP^inf";
                out.subspace = cp_space(*record.q - 1);
            }
        } else if (!record.q && record.s) {
            out.case_tag = 3;
            out.s = record.s;
            out.space = cp_space(*record.s - 1);
            out.subspace = "*";
        } else {
            if (*record.q >= *record.s) {
                throw ValidationError("variable x" + std::to_string(record.variable) +
                                      " has a pure power no larger than its shared exponent");
            }
            out.case_tag = 4;
            out.q = record.q;
            out.s = record.s;
            out.space = cp_space(*record.s - 1);
            out.subspace = cp_space(*record.q - 1);
            out.point_subspace_coincidence = (*record.q == 1);
        }
        assignment.variables.push_back(std::move(out));
    }
    return assignment;
}

MonomialIdeal polyhedral_presentation(const MonomialIdeal& ideal) {
    const StarReport star = check_star(ideal);
    if (!star.satisfied) {
        throw StarConditionError("the star condition fails, no presentation is defined", star);
    }
    const SimplicialComplex complex = construction_k(ideal);
    const int n = ideal.variable_count();
    std::vector<Monomial> gens;
    for (const auto& non_face : complex.minimal_non_faces()) {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
        for (std::uint32_t v : non_face) {
            exps[v - 1] = *star.variables[v - 1].q;
        }
        gens.emplace_back(std::move(exps));
    }
    for (const StarVariable& record : star.variables) {
        if (!record.s) continue;
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
        exps[static_cast<std::size_t>(record.variable - 1)] = *record.s;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::minimalize_unchecked(n, std::move(gens));
}

RealizationReport verify_realization(const MonomialIdeal& ideal) {
    StarReport star = check_star(ideal);
    if (!star.satisfied) {
        return RealizationReport{false, false, std::move(star), ideal,
                                 std::nullopt,  std::nullopt, {},    std::nullopt};
    }
    MonomialIdeal presentation = polyhedral_presentation(ideal);
    SimplicialComplex complex = construction_k(ideal);
    std::vector<std::uint64_t> f = complex.f_vector();
    PairAssignment pairs = classify_variables(ideal);
    const bool verified = presentation == ideal;
    return RealizationReport{true,
                             verified,
                             std::move(star),
                             ideal,
                             std::move(presentation),
                             std::move(complex),
                             std::move(f),
                             std::move(pairs)};
}

}  // namespace mir
