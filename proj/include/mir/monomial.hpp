#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mir {

/// Largest exponent accepted in user-supplied generators. Row maxima drive
/// the polarized variable count, so unbounded exponents would let a single
/// generator demand millions of variables.
inline constexpr std::uint32_t kMaxInputExponent = 1'000'000;

/// A monomial over a fixed variable set, stored as its exponent vector.
/// The ambient variable count is the vector length; variables are 1-indexed
/// in every public interface. Immutable after construction.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents);

    /// The monomial 1 (all exponents zero).
    static Monomial one(int variable_count);

    int variable_count() const { return static_cast<int>(exponents_.size()); }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }

    /// Exponent of the given variable (1-indexed).
    std::uint32_t exponent(int variable) const;

    /// Total degree: the sum of all exponents.
    std::uint64_t degree() const;

    bool is_one() const;
    bool is_squarefree() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exponents_;
};

/// True iff every exponent of `a` is <= the matching exponent of `b`.
bool divides(const Monomial& a, const Monomial& b);

/// Exponentwise maximum.
Monomial lcm(const Monomial& a, const Monomial& b);

/// Exponentwise sum.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Indices (1-based, ascending) of the variables with nonzero exponent.
std::vector<std::uint32_t> support(const Monomial& m);

/// Canonical order: total degree ascending, then lexicographic on the
/// exponent vector.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Render as e.g. "x1^2*x2"; the unit monomial renders as "1".
std::string to_string(const Monomial& m, std::string_view variable = "x");

}  // namespace mir
