#include "mir/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mir/errors.hpp"

namespace mir {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.variable_count() != b.variable_count()) {
        throw ValidationError("ambient variable counts differ: " +
                              std::to_string(a.variable_count()) + " vs " +
                              std::to_string(b.variable_count()));
    }
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

Monomial Monomial::one(int variable_count) {
    if (variable_count < 0) throw ValidationError("variable count must be non-negative");
    return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(variable_count), 0));
}

std::uint32_t Monomial::exponent(int variable) const {
    if (variable < 1 || variable > variable_count()) {
        throw ValidationError("variable index " + std::to_string(variable) +
                              " out of range 1.." + std::to_string(variable_count()));
    }
    return exponents_[static_cast<std::size_t>(variable - 1)];
}

std::uint64_t Monomial::degree() const {
    std::uint64_t total = 0;
    for (std::uint32_t e : exponents_) total += e;
    return total;
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::uint32_t e) { return e <= 1; });
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    for (std::size_t i = 0; i < a.exponents().size(); ++i) {
        if (a.exponents()[i] > b.exponents()[i]) return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<std::uint32_t> exps(a.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] = std::max(a.exponents()[i], b.exponents()[i]);
    }
    return Monomial(std::move(exps));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_ambient(a, b);
    std::vector<std::uint32_t> exps(a.exponents().size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        std::uint64_t sum = std::uint64_t{a.exponents()[i]} + b.exponents()[i];
        if (sum > std::numeric_limits<std::uint32_t>::max()) {
            throw ResourceError("exponent overflow in monomial product");
        }
        exps[i] = static_cast<std::uint32_t>(sum);
    }
    return Monomial(std::move(exps));
}

std::vector<std::uint32_t> support(const Monomial& m) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        if (m.exponents()[i] != 0) out.push_back(static_cast<std::uint32_t>(i + 1));
    }
    return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    const std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

std::string to_string(const Monomial& m, std::string_view variable) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
        const std::uint32_t e = m.exponents()[i];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += variable;
        out += std::to_string(i + 1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

}  // namespace mir
