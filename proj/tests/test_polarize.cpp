#include "doctest.h"
#include "mir/polarize.hpp"
#include "support/fixtures.hpp"
#include "support/random_ideals.hpp"

using mir::Monomial;
using mir::MonomialIdeal;

TEST_CASE("row maxima take the largest exponent per variable") {
    CHECK(mir::row_maxima(test_support::golden_ideal()) ==
          std::vector<std::uint32_t>{2, 1, 5});
    CHECK(mir::row_maxima(MonomialIdeal::minimalize(1, {Monomial({2})})) ==
          std::vector<std::uint32_t>{2});
    const MonomialIdeal squarefree =
        MonomialIdeal::minimalize(3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})});
    CHECK(mir::row_maxima(squarefree) == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("polarizing a single power splits it into copies") {
    const auto result = mir::polarize(MonomialIdeal::minimalize(1, {Monomial({2})}));
    REQUIRE(result.variables().size() == 2);
    CHECK(result.variables()[0] == mir::PolarizedVariable{1, 1});
    CHECK(result.variables()[1] == mir::PolarizedVariable{1, 2});
    CHECK(mir::variable_name(result.variables()[1]) == "y1_2");
    REQUIRE(result.generators().size() == 1);
    CHECK(result.generators()[0] == Monomial({1, 1}));
    REQUIRE(result.linear_forms().size() == 1);
    CHECK(mir::to_string(result.linear_forms()[0]) == "y1_1 - y1_2");
}

TEST_CASE("polarization of the running example") {
    const auto result = mir::polarize(test_support::golden_ideal());
    CHECK(result.source_variable_count() == 3);
    CHECK(result.row_maxima() == std::vector<std::uint32_t>{2, 1, 5});
    REQUIRE(result.variables().size() == 8);  // 2 + 1 + 5 copies
    CHECK(result.variables()[0] == mir::PolarizedVariable{1, 1});
    CHECK(result.variables()[2] == mir::PolarizedVariable{2, 1});
    CHECK(result.variables()[7] == mir::PolarizedVariable{3, 5});

    REQUIRE(result.generators().size() == 3);
    CHECK(result.generators()[0] == Monomial({1, 1, 1, 0, 0, 0, 0, 0}));
    CHECK(result.generators()[1] == Monomial({0, 0, 0, 1, 1, 1, 1, 1}));
    CHECK(result.generators()[2] == Monomial({1, 1, 0, 1, 1, 1, 1, 0}));

    REQUIRE(result.linear_forms().size() == 5);
    CHECK(mir::to_string(result.linear_forms()[0]) == "y1_1 - y1_2");
    CHECK(mir::to_string(result.linear_forms()[1]) == "y3_1 - y3_2");
    CHECK(mir::to_string(result.linear_forms()[4]) == "y3_1 - y3_5");
}

TEST_CASE("polarization preserves degrees and square-freeness") {
    const auto ideals = test_support::random_minimal_ideals(555, 60);
    for (const MonomialIdeal& ideal : ideals) {
        const auto result = mir::polarize(ideal);
        REQUIRE(result.generators().size() == ideal.generators().size());
        std::uint64_t total_copies = 0;
        for (std::uint32_t t : result.row_maxima()) total_copies += t;
        CHECK(result.variables().size() == total_copies);
        CHECK(result.linear_forms().size() ==
              total_copies - static_cast<std::uint64_t>(ideal.variable_count()));
        for (std::size_t j = 0; j < result.generators().size(); ++j) {
            CHECK(result.generators()[j].is_squarefree());
            CHECK(result.generators()[j].degree() == ideal.generators()[j].degree());
        }
        // The polarized generators are already a minimal antichain.
        CHECK(result.ideal().generators().size() == result.generators().size());
    }
}

TEST_CASE("square-free ideals are fixed points of polarization") {
    const MonomialIdeal squarefree =
        MonomialIdeal::minimalize(3, {Monomial({1, 1, 0}), Monomial({0, 1, 1})});
    const auto result = mir::polarize(squarefree);
    CHECK(result.linear_forms().empty());
    REQUIRE(result.variables().size() == 3);
    for (std::size_t j = 0; j < result.generators().size(); ++j) {
        CHECK(result.generators()[j] == squarefree.generators()[j]);
    }
}

TEST_CASE("depolarization undoes polarization") {
    const MonomialIdeal golden = test_support::golden_ideal();
    CHECK(mir::depolarize(mir::polarize(golden)) == golden);

    const MonomialIdeal power = MonomialIdeal::minimalize(1, {Monomial({2})});
    CHECK(mir::depolarize(mir::polarize(power)) == power);

    for (const MonomialIdeal& ideal : test_support::random_minimal_ideals(813, 100)) {
        CHECK(mir::depolarize(mir::polarize(ideal)) == ideal);
    }
}

TEST_CASE("the quotient identification report") {
    const auto report = mir::verify_depolarization_quotient(test_support::golden_ideal());
    CHECK(report.verified);
    CHECK(report.linear_form_count == 5);
    CHECK(report.original == report.recovered);

    for (const MonomialIdeal& ideal : test_support::random_minimal_ideals(271, 60)) {
        CHECK(mir::verify_depolarization_quotient(ideal).verified);
    }
}
