#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mir/ideal.hpp"
#include "mir/simplicial.hpp"

namespace mir {

// Dense integer polynomial in one variable t; coefficients()[k] is the
// coefficient of t^k.  Always canonical: no trailing zeros.  Arithmetic is
// exact and overflow-checked (ResourceError on 64-bit overflow).
class IntPolynomial {
  public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);

    static IntPolynomial one();
    static IntPolynomial term(std::uint64_t degree, std::int64_t coefficient);

    const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
    std::int64_t coefficient(std::uint64_t degree) const;
    bool is_zero() const { return coefficients_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::vector<std::int64_t> coefficients_;
};

// Human form, e.g. "1 - t^3 - t^5 - t^6 + 2*t^7"; zero renders as "0".
std::string to_string(const IntPolynomial& p);

// numerator / (1-t)^denominator_power, not necessarily in reduced form.
struct HilbertSeries {
    IntPolynomial numerator;
    int denominator_power = 0;
};

// K-polynomial by inclusion-exclusion over generator subsets:
// sum over S of (-1)^|S| t^(deg lcm S).  Guarded: generator count <= 20.
IntPolynomial k_polynomial_ie(const MonomialIdeal& ideal);

// K-polynomial from the f-vector: sum over faces F of t^|F| (1-t)^(n-|F|).
IntPolynomial k_polynomial_sr(const SimplicialComplex& complex);

// The Hilbert series of the quotient ring, numerator over (1-t)^n.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

// First count+1 coefficients (degrees 0..count) of the series expansion.
std::vector<std::int64_t> series_coefficients(const HilbertSeries& series, std::uint64_t count);

struct FroebergReport {
    bool invariant = false;  // the two K-polynomials agree exactly
    IntPolynomial original;
    IntPolynomial polarized;
};

// Compares the K-polynomial of an ideal with that of its polarization;
// agreement is the series-level face of the linear forms being regular.
FroebergReport froeberg_check(const MonomialIdeal& ideal);

// Substitutes t -> t^2, moving degree d to 2d; reporting aid for the
// topological grading where every ring generator sits in degree two.
IntPolynomial topological_regrade(const IntPolynomial& p);

}  // namespace mir
