#include "json_report.hpp"

namespace mir::report {

namespace {

// Renders a polarized-ring monomial with the y<i>_<k> variable names.
std::string polarized_display(const Monomial& m, const std::vector<PolarizedVariable>& vars) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        const std::uint32_t e = m.exponents()[j];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(vars[j]);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

}  // namespace

ordered_json ideal_json(const MonomialIdeal& ideal) {
    ordered_json out;
    out["n"] = ideal.variable_count();
    ordered_json gens = ordered_json::array();
    ordered_json display = ordered_json::array();
    for (const Monomial& g : ideal.generators()) {
        gens.push_back(g.exponents());
        display.push_back(to_string(g));
    }
    out["generators"] = std::move(gens);
    out["display"] = std::move(display);
    return out;
}

ordered_json polynomial_json(const IntPolynomial& p) {
    ordered_json out;
    out["coefficients"] = p.coefficients();
    out["display"] = to_string(p);
    return out;
}

ordered_json complex_json(const SimplicialComplex& complex) {
    ordered_json out;
    out["vertex_count"] = complex.vertex_count();
    out["minimal_non_faces"] = complex.minimal_non_faces();
    const std::vector<std::uint64_t> f = complex.f_vector();
    out["f_vector"] = f;
    std::uint64_t total = 0;
    for (std::uint64_t count : f) total += count;
    out["face_count"] = total;
    return out;
}

ordered_json star_json(const StarReport& star) {
    ordered_json out;
    out["satisfied"] = star.satisfied;
    ordered_json vars = ordered_json::array();
    for (const StarVariable& v : star.variables) {
        ordered_json entry;
        entry["variable"] = v.variable;
        entry["q"] = v.q ? ordered_json(*v.q) : ordered_json(nullptr);
        entry["s"] = v.s ? ordered_json(*v.s) : ordered_json(nullptr);
        vars.push_back(std::move(entry));
    }
    out["variables"] = std::move(vars);
    ordered_json violations = ordered_json::array();
    for (const StarViolation& v : star.violations) {
        ordered_json entry;
        entry["variable"] = v.variable;
        entry["exponents"] = v.exponents;
        entry["reason"] = v.reason;
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

ordered_json pairs_json(const PairAssignment& pairs) {
    ordered_json out = ordered_json::array();
    for (const VariableCase& v : pairs.variables) {
        ordered_json entry;
        entry["variable"] = v.variable;
        entry["case"] = v.case_tag;
        if (v.q) entry["q"] = *v.q;
        if (v.s) entry["s"] = *v.s;
        entry["pair"] = "(" + v.space + ", " + v.subspace + ")";
        if (v.point_subspace_coincidence) {
            entry["note"] = "subspace CP^0 is a point, matching the shape of case 3";
        }
        out.push_back(std::move(entry));
    }
    return out;
}

ordered_json polarization_json(const PolarizationResult& polarized) {
    ordered_json out;
    out["source_n"] = polarized.source_variable_count();
    out["row_maxima"] = polarized.row_maxima();
    out["polarized_n"] = polarized.variables().size();
    ordered_json names = ordered_json::array();
    for (const PolarizedVariable& v : polarized.variables()) names.push_back(variable_name(v));
    out["variables"] = std::move(names);
    ordered_json gens = ordered_json::array();
    ordered_json display = ordered_json::array();
    for (const Monomial& g : polarized.generators()) {
        gens.push_back(g.exponents());
        display.push_back(polarized_display(g, polarized.variables()));
    }
    out["generators"] = std::move(gens);
    out["display"] = std::move(display);
    ordered_json forms = ordered_json::array();
    for (const LinearForm& form : polarized.linear_forms()) forms.push_back(to_string(form));
    out["linear_forms"] = std::move(forms);
    out["linear_form_count"] = polarized.linear_forms().size();
    return out;
}

ordered_json realization_json(const RealizationReport& result) {
    ordered_json out;
    out["applicable"] = result.applicable;
    out["verified"] = result.verified;
    out["star"] = star_json(result.star);
    out["original"] = ideal_json(result.original);
    if (result.presentation) out["presentation"] = ideal_json(*result.presentation);
    if (result.complex) out["complex"] = complex_json(*result.complex);
    if (result.pairs) out["pairs"] = pairs_json(*result.pairs);
    return out;
}

}  // namespace mir::report
