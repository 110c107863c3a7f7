#pragma once

#include <string>
#include <vector>

#include "mir/ideal.hpp"

namespace mir {

// One variable y_{i,k} of the polarized ring: copy k of source variable x_i.
struct PolarizedVariable {
    int source = 0;  // i, 1-indexed in the original ring
    int copy = 0;    // k, 1-indexed

    friend bool operator==(const PolarizedVariable&, const PolarizedVariable&) = default;
};

std::string variable_name(const PolarizedVariable& v);

// A linear form y_{i,1} - y_{i,k}, k >= 2, from the depolarizing sequence.
struct LinearForm {
    PolarizedVariable minuend;     // always copy 1
    PolarizedVariable subtrahend;  // copy >= 2, same source

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& form);

class PolarizationResult {
  public:
    PolarizationResult(int source_variable_count, std::vector<std::uint32_t> row_maxima,
                       std::vector<PolarizedVariable> variables,
                       std::vector<Monomial> generators, std::vector<LinearForm> linear_forms);

    int source_variable_count() const { return source_variable_count_; }

    // t_i of the source ideal, one entry per source variable.
    const std::vector<std::uint32_t>& row_maxima() const { return row_maxima_; }

    // Variables of the polarized ring, row-major: all copies of x_1 first.
    const std::vector<PolarizedVariable>& variables() const { return variables_; }

    // Polarized generators, square-free, in source generator order.
    const std::vector<Monomial>& generators() const { return generators_; }

    // The sum(t_i) - n forms y_{i,1} - y_{i,k}, ordered by (source, copy).
    const std::vector<LinearForm>& linear_forms() const { return linear_forms_; }

    // The square-free ideal the polarized generators define.
    MonomialIdeal ideal() const;

  private:
    int source_variable_count_ = 0;
    std::vector<std::uint32_t> row_maxima_;
    std::vector<PolarizedVariable> variables_;
    std::vector<Monomial> generators_;
    std::vector<LinearForm> linear_forms_;
};

// t_i = max exponent of x_i over the generators, per variable.
std::vector<std::uint32_t> row_maxima(const MonomialIdeal& ideal);

// Square-free polarization: x_i^e inside a generator becomes
// y_{i,1} y_{i,2} ... y_{i,e}.
PolarizationResult polarize(const MonomialIdeal& ideal);

// Identifies every copy back with its source variable and minimalizes,
// recovering an ideal in the source ring.
MonomialIdeal depolarize(const PolarizationResult& polarized);

struct DepolarizationReport {
    bool verified = false;
    MonomialIdeal original;
    MonomialIdeal recovered;
    std::size_t linear_form_count = 0;
};

// Checks that identifying variables along the linear forms turns the
// polarized presentation back into the original one exactly.
DepolarizationReport verify_depolarization_quotient(const MonomialIdeal& ideal);

}  // namespace mir
