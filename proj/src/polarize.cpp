#include "mir/polarize.hpp"

#include <algorithm>

#include "mir/errors.hpp"

namespace mir {

std::string variable_name(const PolarizedVariable& v) {
    return "y" + std::to_string(v.source) + "_" + std::to_string(v.copy);
}

std::string to_string(const LinearForm& form) {
    return variable_name(form.minuend) + " - " + variable_name(form.subtrahend);
}

PolarizationResult::PolarizationResult(int source_variable_count,
                                       std::vector<std::uint32_t> row_maxima,
                                       std::vector<PolarizedVariable> variables,
                                       std::vector<Monomial> generators,
                                       std::vector<LinearForm> linear_forms)
    : source_variable_count_(source_variable_count),
      row_maxima_(std::move(row_maxima)),
      variables_(std::move(variables)),
      generators_(std::move(generators)),
      linear_forms_(std::move(linear_forms)) {}

MonomialIdeal PolarizationResult::ideal() const {
    return MonomialIdeal::minimalize_unchecked(static_cast<int>(variables_.size()), generators_);
}

std::vector<std::uint32_t> row_maxima(const MonomialIdeal& ideal) {
    std::vector<std::uint32_t> maxima(static_cast<std::size_t>(ideal.variable_count()), 0);
    for (const Monomial& g : ideal.generators()) {
        for (std::size_t i = 0; i < maxima.size(); ++i) {
            maxima[i] = std::max(maxima[i], g.exponents()[i]);
        }
    }
    return maxima;
}

PolarizationResult polarize(const MonomialIdeal& ideal) {
    std::vector<std::uint32_t> maxima = row_maxima(ideal);

    std::vector<PolarizedVariable> variables;
    // offsets[i] = polarized index where the copies of x_{i+1} start
    std::vector<std::size_t> offsets(maxima.size(), 0);
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        offsets[i] = variables.size();
        for (std::uint32_t k = 1; k <= maxima[i]; ++k) {
            variables.push_back({static_cast<int>(i + 1), static_cast<int>(k)});
        }
    }
    const std::size_t d = variables.size();

    std::vector<Monomial> generators;
    generators.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        std::vector<std::uint32_t> exps(d, 0);
        for (std::size_t i = 0; i < maxima.size(); ++i) {
            for (std::uint32_t k = 0; k < g.exponents()[i]; ++k) {
                exps[offsets[i] + k] = 1;
            }
        }
        generators.emplace_back(std::move(exps));
    }

    std::vector<LinearForm> linear_forms;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        for (std::uint32_t k = 2; k <= maxima[i]; ++k) {
            linear_forms.push_back({{static_cast<int>(i + 1), 1},
                                    {static_cast<int>(i + 1), static_cast<int>(k)}});
        }
    }

    return PolarizationResult(ideal.variable_count(), std::move(maxima), std::move(variables),
                              std::move(generators), std::move(linear_forms));
}

MonomialIdeal depolarize(const PolarizationResult& polarized) {
    const int n = polarized.source_variable_count();
    if (n < 1) throw ValidationError("source variable count must be positive");
    const std::vector<PolarizedVariable>& vars = polarized.variables();
    std::vector<Monomial> gens;
    gens.reserve(polarized.generators().size());
    for (const Monomial& g : polarized.generators()) {
        if (g.variable_count() != static_cast<int>(vars.size())) {
            throw ValidationError("polarized generator does not match the variable layout");
        }
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
        for (std::size_t j = 0; j < vars.size(); ++j) {
            const int source = vars[j].source;
            if (source < 1 || source > n) {
                throw ValidationError("polarized variable " + variable_name(vars[j]) +
                                      " has no source in a ring with " + std::to_string(n) +
                                      " variables");
            }
            exps[static_cast<std::size_t>(source - 1)] += g.exponents()[j];
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::minimalize_unchecked(n, std::move(gens));
}

DepolarizationReport verify_depolarization_quotient(const MonomialIdeal& ideal) {
    const PolarizationResult polarized = polarize(ideal);
    MonomialIdeal recovered = depolarize(polarized);
    const bool verified = recovered == ideal;
    return DepolarizationReport{verified, ideal, std::move(recovered),
                                polarized.linear_forms().size()};
}

}  // namespace mir
