#include "mir/ideal.hpp"

#include <algorithm>
#include <limits>

#include "mir/errors.hpp"

namespace mir {

namespace {

std::vector<Monomial> reduce(int variable_count, std::vector<Monomial> gens) {
    if (gens.empty()) throw ValidationError("at least one generator is required");
    for (const Monomial& g : gens) {
        if (g.variable_count() != variable_count) {
            throw ValidationError("generator has " + std::to_string(g.variable_count()) +
                                  " variables, expected " + std::to_string(variable_count));
        }
        if (g.is_one()) throw ValidationError("the unit monomial cannot be a generator");
    }
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // After the degree-ascending sort a generator can only be divided by an
    // earlier one, so one forward sweep finds the minimal antichain.
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : minimal) {
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    return minimal;
}

// Enumerates exponent vectors of fixed total degree in lex order, keeping
// only those no generator divides.
void enumerate_standard(const MonomialIdeal& ideal, std::vector<std::uint32_t>& exps,
                        std::size_t position, std::uint64_t remaining,
                        std::vector<Monomial>& out) {
    const std::size_t n = exps.size();
    if (position + 1 == n) {
        exps[position] = static_cast<std::uint32_t>(remaining);
        Monomial candidate{std::vector<std::uint32_t>(exps)};
        if (!ideal.contains(candidate)) out.push_back(std::move(candidate));
        exps[position] = 0;
        return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
        exps[position] = static_cast<std::uint32_t>(e);
        enumerate_standard(ideal, exps, position + 1, remaining - e, out);
    }
    exps[position] = 0;
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(int variable_count, std::vector<Monomial> generators) {
    if (variable_count < 1) throw ValidationError("variable count must be positive");
    std::vector<Monomial> minimal = reduce(variable_count, std::move(generators));
    std::vector<bool> covered(static_cast<std::size_t>(variable_count), false);
    for (const Monomial& g : minimal) {
        for (std::uint32_t v : support(g)) covered[v - 1] = true;
    }
    for (int i = 0; i < variable_count; ++i) {
        if (!covered[static_cast<std::size_t>(i)]) {
            throw ValidationError("variable x" + std::to_string(i + 1) +
                                  " appears in no minimal generator");
        }
    }
    return MonomialIdeal(variable_count, std::move(minimal));
}

MonomialIdeal MonomialIdeal::minimalize_unchecked(int variable_count,
                                                  std::vector<Monomial> generators) {
    if (variable_count < 1) throw ValidationError("variable count must be positive");
    return MonomialIdeal(variable_count, reduce(variable_count, std::move(generators)));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.variable_count() != variable_count_) {
        throw ValidationError("monomial has " + std::to_string(m.variable_count()) +
                              " variables, expected " + std::to_string(variable_count_));
    }
    return std::any_of(generators_.begin(), generators_.end(),
                       [&m](const Monomial& g) { return divides(g, m); });
}

std::vector<Monomial> MonomialIdeal::standard_monomials(std::uint64_t degree) const {
    if (degree > std::numeric_limits<std::uint32_t>::max()) {
        throw ResourceError("degree too large for standard monomial enumeration");
    }
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(variable_count_), 0);
    enumerate_standard(*this, exps, 0, degree, out);
    return out;
}

std::optional<Monomial> MonomialIdeal::multiply_mod(const Monomial& a, const Monomial& b) const {
    if (contains(a) || contains(b)) return std::nullopt;
    Monomial product = a * b;
    if (contains(product)) return std::nullopt;
    return product;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

}  // namespace mir
