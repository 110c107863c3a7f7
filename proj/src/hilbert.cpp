#include "mir/hilbert.hpp"

#include <algorithm>

#include "mir/errors.hpp"
#include "mir/polarize.hpp"

namespace mir {

namespace {

constexpr std::size_t kMaxSubsetGenerators = 20;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ResourceError("integer overflow in polynomial arithmetic");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ResourceError("integer overflow in polynomial arithmetic");
    }
    return out;
}

std::vector<std::int64_t> trim(std::vector<std::int64_t> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(trim(std::move(coefficients))) {}

IntPolynomial IntPolynomial::one() { return IntPolynomial({1}); }

IntPolynomial IntPolynomial::term(std::uint64_t degree, std::int64_t coefficient) {
    if (coefficient == 0) return IntPolynomial();
    std::vector<std::int64_t> coeffs(degree + 1, 0);
    coeffs.back() = coefficient;
    return IntPolynomial(std::move(coeffs));
}

std::int64_t IntPolynomial::coefficient(std::uint64_t degree) const {
    if (degree >= coefficients_.size()) return 0;
    return coefficients_[degree];
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> coeffs(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = checked_add(a.coefficient(i), b.coefficient(i));
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> coeffs(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = checked_add(a.coefficient(i), checked_mul(-1, b.coefficient(i)));
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<std::int64_t> coeffs(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            coeffs[i + j] =
                checked_add(coeffs[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
        }
    }
    return IntPolynomial(std::move(coeffs));
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
        const std::int64_t c = p.coefficients()[d];
        if (c == 0) continue;
        const std::uint64_t magnitude = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1
                                              : static_cast<std::uint64_t>(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (d == 0) {
            out += std::to_string(magnitude);
        } else {
            if (magnitude != 1) {
                out += std::to_string(magnitude);
                out += "*";
            }
            out += "t";
            if (d > 1) {
                out += "^";
                out += std::to_string(d);
            }
        }
    }
    return out;
}

IntPolynomial k_polynomial_ie(const MonomialIdeal& ideal) {
    const std::vector<Monomial>& gens = ideal.generators();
    if (gens.size() > kMaxSubsetGenerators) {
        throw ResourceError("inclusion-exclusion supports at most " +
                            std::to_string(kMaxSubsetGenerators) + " generators, got " +
                            std::to_string(gens.size()));
    }
    // One term per generator subset: (-1)^|S| t^(deg lcm S).  Collecting
    // coefficients densely keeps the walk over 2^r subsets cheap.  The
    // largest reachable degree is deg lcm(all generators).
    Monomial top = Monomial::one(ideal.variable_count());
    for (const Monomial& g : gens) top = lcm(top, g);
    const std::uint64_t max_degree = top.degree();
    if (max_degree > 5'000'000) {
        throw ResourceError("K-polynomial degree " + std::to_string(max_degree) +
                            " exceeds the supported bound of 5000000");
    }
    std::vector<std::int64_t> coeffs(max_degree + 1, 0);
    const std::uint32_t r = static_cast<std::uint32_t>(gens.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        Monomial combined = Monomial::one(ideal.variable_count());
        int bits = 0;
        for (std::uint32_t j = 0; j < r; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                combined = lcm(combined, gens[j]);
                ++bits;
            }
        }
        const std::size_t d = combined.degree();
        coeffs[d] = checked_add(coeffs[d], (bits % 2 == 0) ? 1 : -1);
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial k_polynomial_sr(const SimplicialComplex& complex) {
    const std::vector<std::uint64_t> f = complex.f_vector();
    const std::uint64_t n = static_cast<std::uint64_t>(complex.vertex_count());
    const IntPolynomial one_minus_t({1, -1});
    // Precompute (1-t)^j for j = 0..n.
    std::vector<IntPolynomial> powers(n + 1);
    powers[0] = IntPolynomial::one();
    for (std::uint64_t j = 1; j <= n; ++j) powers[j] = powers[j - 1] * one_minus_t;
    IntPolynomial total;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const IntPolynomial face_term =
            IntPolynomial::term(k, static_cast<std::int64_t>(f[k])) * powers[n - k];
        total = total + face_term;
    }
    return total;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
    return HilbertSeries{k_polynomial_ie(ideal), ideal.variable_count()};
}

std::vector<std::int64_t> series_coefficients(const HilbertSeries& series, std::uint64_t count) {
    if (series.denominator_power < 0) {
        throw ValidationError("denominator power must be non-negative");
    }
    if (count > 1'000'000) {
        throw ResourceError("series expansion supports at most 1000000 coefficients");
    }
    std::vector<std::int64_t> coeffs(count + 1, 0);
    for (std::uint64_t d = 0; d <= count; ++d) {
        coeffs[d] = series.numerator.coefficient(d);
    }
    // Each division by (1-t) is a running prefix sum of the coefficients.
    for (int pass = 0; pass < series.denominator_power; ++pass) {
        for (std::uint64_t d = 1; d <= count; ++d) {
            coeffs[d] = checked_add(coeffs[d], coeffs[d - 1]);
        }
    }
    return coeffs;
}

FroebergReport froeberg_check(const MonomialIdeal& ideal) {
    IntPolynomial original = k_polynomial_ie(ideal);
    IntPolynomial polarized = k_polynomial_ie(polarize(ideal).ideal());
    const bool invariant = original == polarized;
    return FroebergReport{invariant, std::move(original), std::move(polarized)};
}

IntPolynomial topological_regrade(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    std::vector<std::int64_t> coeffs(2 * (p.coefficients().size() - 1) + 1, 0);
    for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
        coeffs[2 * d] = p.coefficients()[d];
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace mir
