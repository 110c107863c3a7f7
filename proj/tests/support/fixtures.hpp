#pragma once

#include <vector>

#include "mir/ideal.hpp"

namespace test_support {

// The running example used throughout the suite:
// <x1^2*x2, x1^2*x3^4, x3^5> in three variables.
inline mir::MonomialIdeal golden_ideal() {
    return mir::MonomialIdeal::minimalize(
        3, {mir::Monomial({2, 1, 0}), mir::Monomial({2, 0, 4}), mir::Monomial({0, 0, 5})});
}

// Its K-polynomial 1 - t^3 - t^5 - t^6 + 2t^7.
inline const std::vector<std::int64_t> kGoldenK = {1, 0, 0, -1, 0, -1, -1, 2};

// Its Hilbert function values for degrees 0..4.
inline const std::vector<std::int64_t> kGoldenHilbert = {1, 3, 6, 9, 12};

}  // namespace test_support
