#pragma once

#include <string>

#include "json.hpp"
#include "mir/hilbert.hpp"
#include "mir/ideal.hpp"
#include "mir/polarize.hpp"
#include "mir/polyhedral.hpp"
#include "mir/simplicial.hpp"

// Renderers from library values to the CLI's JSON report schema.  Ordered
// maps keep key order fixed so identical inputs give identical bytes.
namespace mir::report {

using ordered_json = nlohmann::ordered_json;

ordered_json ideal_json(const MonomialIdeal& ideal);
ordered_json polynomial_json(const IntPolynomial& p);
ordered_json complex_json(const SimplicialComplex& complex);
ordered_json star_json(const StarReport& star);
ordered_json pairs_json(const PairAssignment& pairs);
ordered_json polarization_json(const PolarizationResult& polarized);
ordered_json realization_json(const RealizationReport& result);

}  // namespace mir::report
