#include <algorithm>

#include "doctest.h"
#include "mir/errors.hpp"
#include "mir/hilbert.hpp"
#include "mir/polyhedral.hpp"
#include "support/fixtures.hpp"
#include "support/random_ideals.hpp"

using mir::Monomial;
using mir::MonomialIdeal;

namespace {

MonomialIdeal mixed_exponent_ideal() {
    // x1 carries exponent 2 in one generator and 1 in another.
    return MonomialIdeal::minimalize(3, {Monomial({2, 1, 0}), Monomial({1, 0, 1})});
}

}  // namespace

TEST_CASE("the uniform exponent condition on the running example") {
    const mir::StarReport report = mir::check_star(test_support::golden_ideal());
    CHECK(report.satisfied);
    CHECK(report.violations.empty());
    REQUIRE(report.variables.size() == 3);
    CHECK(report.variables[0].q == 2);
    CHECK_FALSE(report.variables[0].s.has_value());
    CHECK(report.variables[1].q == 1);
    CHECK_FALSE(report.variables[1].s.has_value());
    CHECK(report.variables[2].q == 4);
    CHECK(report.variables[2].s == 5);
}

TEST_CASE("conflicting exponents are reported per variable") {
    const mir::StarReport report = mir::check_star(mixed_exponent_ideal());
    CHECK_FALSE(report.satisfied);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].variable == 1);
    CHECK(report.violations[0].exponents == std::vector<std::uint32_t>{1, 2});
    CHECK_FALSE(report.variables[0].q.has_value());
}

TEST_CASE("square-free ideals satisfy the condition with unit exponents") {
    for (const MonomialIdeal& ideal : test_support::random_squarefree_ideals(52, 40)) {
        const mir::StarReport report = mir::check_star(ideal);
        CHECK(report.satisfied);
        for (const mir::StarVariable& v : report.variables) {
            if (v.q) CHECK(*v.q == 1);
        }
    }
}

TEST_CASE("the associated complex collects multi-variable supports") {
    const mir::SimplicialComplex complex = mir::construction_k(test_support::golden_ideal());
    CHECK(complex.vertex_count() == 3);
    CHECK(complex.minimal_non_faces() ==
          std::vector<std::vector<std::uint32_t>>{{1, 2}, {1, 3}});
    CHECK(complex.f_vector() == std::vector<std::uint64_t>{1, 3, 1});

    // Pure powers alone leave the full simplex.
    const mir::SimplicialComplex full =
        mir::construction_k(MonomialIdeal::minimalize(2, {Monomial({3, 0}), Monomial({0, 2})}));
    CHECK(full.minimal_non_faces().empty());
    CHECK(full.f_vector() == std::vector<std::uint64_t>{1, 2, 1});

    CHECK_THROWS_AS((void)mir::construction_k(mixed_exponent_ideal()),
                    mir::StarConditionError);
    try {
        (void)mir::construction_k(mixed_exponent_ideal());
    } catch (const mir::StarConditionError& e) {
        CHECK_FALSE(e.report().satisfied);
        REQUIRE(e.report().violations.size() == 1);
        CHECK(e.report().violations[0].variable == 1);
    }
}

TEST_CASE("square-free ideals give the same complex both ways") {
    // Degree-1 generators count as pure powers here but as singleton
    // non-faces in the Stanley-Reisner direction, so compare without them.
    for (const MonomialIdeal& ideal : test_support::random_squarefree_ideals(777, 60)) {
        const bool has_unit_degree =
            std::any_of(ideal.generators().begin(), ideal.generators().end(),
                        [](const Monomial& g) { return g.degree() == 1; });
        if (has_unit_degree) continue;
        CHECK(mir::construction_k(ideal) == mir::sr_complex(ideal));
    }
}

TEST_CASE("variable classification on the running example") {
    const mir::PairAssignment pairs = mir::classify_variables(test_support::golden_ideal());
    REQUIRE(pairs.variables.size() == 3);

    CHECK(pairs.variables[0].case_tag == 2);
    CHECK(pairs.variables[0].q == 2);
    CHECK(pairs.variables[0].space == "CP^inf");
    CHECK(pairs.variables[0].subspace == "CP^1");

    CHECK(pairs.variables[1].case_tag == 1);
    CHECK(pairs.variables[1].space == "CP^inf");
    CHECK(pairs.variables[1].subspace == "*");

    CHECK(pairs.variables[2].case_tag == 4);
    CHECK(pairs.variables[2].q == 4);
    CHECK(pairs.variables[2].s == 5);
    CHECK(pairs.variables[2].space == "CP^4");
    CHECK(pairs.variables[2].subspace == "CP^3");
    CHECK_FALSE(pairs.variables[2].point_subspace_coincidence);
}

TEST_CASE("classification corner cases") {
    // A single pure power.
    const mir::PairAssignment cube =
        mir::classify_variables(MonomialIdeal::minimalize(1, {Monomial({3})}));
    REQUIRE(cube.variables.size() == 1);
    CHECK(cube.variables[0].case_tag == 3);
    CHECK(cube.variables[0].s == 3);
    CHECK(cube.variables[0].space == "CP^2");
    CHECK(cube.variables[0].subspace == "*");

    // Unit shared exponent next to a pure power: tagged case 4, but the
    // subspace degenerates to a point.
    const mir::PairAssignment degenerate = mir::classify_variables(
        MonomialIdeal::minimalize(2, {Monomial({1, 1}), Monomial({2, 0})}));
    CHECK(degenerate.variables[0].case_tag == 4);
    CHECK(degenerate.variables[0].q == 1);
    CHECK(degenerate.variables[0].s == 2);
    CHECK(degenerate.variables[0].space == "CP^1");
    CHECK(degenerate.variables[0].subspace == "CP^0");
    CHECK(degenerate.variables[0].point_subspace_coincidence);
    CHECK(degenerate.variables[1].case_tag == 1);

    // Square-free ideals without pure powers classify uniformly.
    const mir::PairAssignment squarefree = mir::classify_variables(
        MonomialIdeal::minimalize(3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})}));
    for (const mir::VariableCase& v : squarefree.variables) CHECK(v.case_tag == 1);

    CHECK_THROWS_AS((void)mir::classify_variables(mixed_exponent_ideal()),
                    mir::StarConditionError);
    // A variable outside every generator has no case.
    CHECK_THROWS_AS((void)mir::classify_variables(
                        MonomialIdeal::minimalize_unchecked(2, {Monomial({2, 0})})),
                    mir::ValidationError);
}

TEST_CASE("every variable receives exactly one case") {
    for (const MonomialIdeal& ideal : test_support::random_star_ideals(2025, 60)) {
        const mir::PairAssignment pairs = mir::classify_variables(ideal);
        REQUIRE(pairs.variables.size() ==
                static_cast<std::size_t>(ideal.variable_count()));
        for (const mir::VariableCase& v : pairs.variables) {
            CHECK(v.case_tag >= 1);
            CHECK(v.case_tag <= 4);
            if (v.case_tag == 4) {
                REQUIRE(v.q.has_value());
                REQUIRE(v.s.has_value());
                CHECK(*v.q < *v.s);
            }
        }
    }
}

TEST_CASE("the presentation rebuilds the ideal from the complex") {
    const MonomialIdeal golden = test_support::golden_ideal();
    CHECK(mir::polyhedral_presentation(golden) == golden);

    const MonomialIdeal power = MonomialIdeal::minimalize(1, {Monomial({3})});
    CHECK(mir::polyhedral_presentation(power) == power);

    for (const MonomialIdeal& ideal : test_support::random_squarefree_ideals(31, 30)) {
        CHECK(mir::polyhedral_presentation(ideal) == ideal);
    }
}

TEST_CASE("realization verification") {
    const mir::RealizationReport golden =
        mir::verify_realization(test_support::golden_ideal());
    CHECK(golden.applicable);
    CHECK(golden.verified);
    CHECK(golden.f_vector == std::vector<std::uint64_t>{1, 3, 1});
    REQUIRE(golden.pairs.has_value());
    CHECK(golden.pairs->variables[0].case_tag == 2);
    REQUIRE(golden.presentation.has_value());
    CHECK(*golden.presentation == golden.original);

    const mir::RealizationReport rejected = mir::verify_realization(mixed_exponent_ideal());
    CHECK_FALSE(rejected.applicable);
    CHECK_FALSE(rejected.verified);
    CHECK_FALSE(rejected.presentation.has_value());
    REQUIRE(rejected.star.violations.size() == 1);
    CHECK(rejected.star.violations[0].variable == 1);
}

TEST_CASE("generated instances verify and keep support antichains") {
    for (const MonomialIdeal& ideal : test_support::random_star_ideals(909, 60)) {
        REQUIRE(mir::check_star(ideal).satisfied);
        const mir::RealizationReport report = mir::verify_realization(ideal);
        CHECK(report.applicable);
        CHECK(report.verified);

        // Supports of multi-variable generators never nest.
        std::vector<std::vector<std::uint32_t>> supports;
        for (const Monomial& g : ideal.generators()) {
            if (mir::support(g).size() >= 2) supports.push_back(mir::support(g));
        }
        for (std::size_t i = 0; i < supports.size(); ++i) {
            for (std::size_t j = 0; j < supports.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(std::includes(supports[j].begin(), supports[j].end(),
                                          supports[i].begin(), supports[i].end()));
            }
        }

        // Redundant cross-check through the independent series path.
        CHECK(mir::k_polynomial_ie(mir::polyhedral_presentation(ideal)) ==
              mir::k_polynomial_ie(ideal));
    }
}
