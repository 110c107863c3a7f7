#pragma once

#include <optional>
#include <vector>

#include "mir/monomial.hpp"

namespace mir {

// A monomial ideal in k[x_1..x_n], stored by its unique minimal generating
// set in canonical order (degree ascending, then lexicographic on exponent
// vectors).  Two ideals compare equal iff they are equal as ideals.
class MonomialIdeal {
  public:
    // Discards non-minimal generators, deduplicates, and sorts canonically.
    // Throws ValidationError if a generator has the wrong ambient dimension,
    // equals 1, or if some variable appears in no generator.
    static MonomialIdeal minimalize(int variable_count, std::vector<Monomial> generators);

    // Same reduction but variables are allowed to miss every generator
    // (useful for ideals arising from cones and for intermediate results).
    static MonomialIdeal minimalize_unchecked(int variable_count,
                                              std::vector<Monomial> generators);

    int variable_count() const { return variable_count_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    // Ideal membership: some generator divides m.
    bool contains(const Monomial& m) const;

    // All monomials of the given total degree outside the ideal, in
    // canonical (here: lex on exponent vectors) order.
    std::vector<Monomial> standard_monomials(std::uint64_t degree) const;

    // Product in the quotient ring R = k[x]/I: the plain product if it
    // stays outside I, nullopt (the zero class) otherwise.
    std::optional<Monomial> multiply_mod(const Monomial& a, const Monomial& b) const;

    bool is_squarefree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    MonomialIdeal(int variable_count, std::vector<Monomial> generators)
        : variable_count_(variable_count), generators_(std::move(generators)) {}

    int variable_count_ = 0;
    std::vector<Monomial> generators_;
};

}  // namespace mir
