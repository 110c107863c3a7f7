#include "mir/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "mir/errors.hpp"

namespace mir {

namespace {

constexpr int kMaxEnumerationVertices = 24;

bool subset_of(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count,
                                     std::vector<std::vector<std::uint32_t>> minimal_non_faces)
    : vertex_count_(vertex_count), minimal_non_faces_(std::move(minimal_non_faces)) {
    if (vertex_count_ < 0) throw ValidationError("vertex count must be non-negative");
    for (const auto& nf : minimal_non_faces_) {
        if (nf.empty()) throw ValidationError("the empty set cannot be a non-face");
        for (std::size_t i = 0; i < nf.size(); ++i) {
            if (nf[i] < 1 || nf[i] > static_cast<std::uint32_t>(vertex_count_)) {
                throw ValidationError("vertex " + std::to_string(nf[i]) + " out of range 1.." +
                                      std::to_string(vertex_count_));
            }
            if (i > 0 && nf[i] <= nf[i - 1]) {
                throw ValidationError("non-face vertices must be strictly increasing");
            }
        }
    }
    std::sort(minimal_non_faces_.begin(), minimal_non_faces_.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    for (std::size_t i = 0; i < minimal_non_faces_.size(); ++i) {
        for (std::size_t j = i + 1; j < minimal_non_faces_.size(); ++j) {
            if (subset_of(minimal_non_faces_[i], minimal_non_faces_[j])) {
                throw ValidationError("non-faces must form an antichain");
            }
        }
    }
}

bool SimplicialComplex::is_face(const std::vector<std::uint32_t>& vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 1 || vertices[i] > static_cast<std::uint32_t>(vertex_count_)) {
            throw ValidationError("vertex " + std::to_string(vertices[i]) +
                                  " out of range 1.." + std::to_string(vertex_count_));
        }
        if (i > 0 && vertices[i] <= vertices[i - 1]) {
            throw ValidationError("face vertices must be strictly increasing");
        }
    }
    return std::none_of(minimal_non_faces_.begin(), minimal_non_faces_.end(),
                        [&vertices](const auto& nf) { return subset_of(nf, vertices); });
}

namespace {

std::vector<std::uint32_t> non_face_masks(
    const std::vector<std::vector<std::uint32_t>>& non_faces) {
    std::vector<std::uint32_t> masks;
    masks.reserve(non_faces.size());
    for (const auto& nf : non_faces) {
        std::uint32_t mask = 0;
        for (std::uint32_t v : nf) mask |= 1u << (v - 1);
        masks.push_back(mask);
    }
    return masks;
}

}  // namespace

std::vector<std::vector<std::vector<std::uint32_t>>> SimplicialComplex::faces() const {
    if (vertex_count_ > kMaxEnumerationVertices) {
        throw ResourceError("face enumeration supports at most " +
                            std::to_string(kMaxEnumerationVertices) + " vertices, got " +
                            std::to_string(vertex_count_));
    }
    const std::vector<std::uint32_t> nf_masks = non_face_masks(minimal_non_faces_);
    std::vector<std::vector<std::vector<std::uint32_t>>> by_size(
        static_cast<std::size_t>(vertex_count_) + 1);
    const std::uint32_t n = static_cast<std::uint32_t>(vertex_count_);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const bool face = std::none_of(nf_masks.begin(), nf_masks.end(), [mask](std::uint32_t nf) {
            return (nf & mask) == nf;
        });
        if (!face) continue;
        std::vector<std::uint32_t> vertices;
        for (std::uint32_t v = 1; v <= n; ++v) {
            if (mask & (std::uint64_t{1} << (v - 1))) vertices.push_back(v);
        }
        by_size[vertices.size()].push_back(std::move(vertices));
    }
    while (by_size.size() > 1 && by_size.back().empty()) by_size.pop_back();
    for (auto& group : by_size) std::sort(group.begin(), group.end());
    return by_size;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
    if (vertex_count_ > kMaxEnumerationVertices) {
        throw ResourceError("face enumeration supports at most " +
                            std::to_string(kMaxEnumerationVertices) + " vertices, got " +
                            std::to_string(vertex_count_));
    }
    const std::vector<std::uint32_t> nf_masks = non_face_masks(minimal_non_faces_);
    std::vector<std::uint64_t> f(static_cast<std::size_t>(vertex_count_) + 1, 0);
    const std::uint32_t n = static_cast<std::uint32_t>(vertex_count_);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const bool face = std::none_of(nf_masks.begin(), nf_masks.end(), [mask](std::uint32_t nf) {
            return (nf & mask) == nf;
        });
        if (face) ++f[static_cast<std::size_t>(std::popcount(mask))];
    }
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) {
        throw ValidationError("Stanley-Reisner complex requires a square-free ideal");
    }
    std::vector<std::vector<std::uint32_t>> non_faces;
    non_faces.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) non_faces.push_back(support(g));
    return SimplicialComplex(ideal.variable_count(), std::move(non_faces));
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex) {
    if (complex.vertex_count() < 1) {
        throw ValidationError("Stanley-Reisner ideal requires at least one vertex");
    }
    if (complex.minimal_non_faces().empty()) {
        throw ValidationError("the full simplex has no Stanley-Reisner generators");
    }
    std::vector<Monomial> gens;
    gens.reserve(complex.minimal_non_faces().size());
    for (const auto& nf : complex.minimal_non_faces()) {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(complex.vertex_count()), 0);
        for (std::uint32_t v : nf) exps[v - 1] = 1;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::minimalize_unchecked(complex.vertex_count(), std::move(gens));
}

}  // namespace mir
