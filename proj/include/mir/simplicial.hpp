#pragma once

#include <vector>

#include "mir/ideal.hpp"

namespace mir {

// A simplicial complex on vertices 1..n, stored by its minimal non-faces.
// Every subset of 1..n containing no minimal non-face is a face, so the
// empty list of non-faces encodes the full simplex.
class SimplicialComplex {
  public:
    // Non-faces are given as strictly increasing vertex lists.  They must
    // form an antichain; comparable or duplicate entries are rejected with
    // ValidationError, as are vertices outside 1..n.
    SimplicialComplex(int vertex_count, std::vector<std::vector<std::uint32_t>> minimal_non_faces);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<std::uint32_t>>& minimal_non_faces() const {
        return minimal_non_faces_;
    }

    // Face test for a strictly increasing vertex list.
    bool is_face(const std::vector<std::uint32_t>& vertices) const;

    // All faces grouped by cardinality: result[k] lists the k-vertex faces.
    // Guarded: throws ResourceError when vertex_count > 24.
    std::vector<std::vector<std::vector<std::uint32_t>>> faces() const;

    // f_k = number of faces with k vertices, k = 0..dim+1 (f_0 = 1 for the
    // empty face).  Trailing zero counts are dropped.
    std::vector<std::uint64_t> f_vector() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    int vertex_count_ = 0;
    std::vector<std::vector<std::uint32_t>> minimal_non_faces_;
};

// Stanley-Reisner transform of a square-free ideal: generator supports
// become minimal non-faces.  Throws ValidationError when the ideal is not
// square-free.
SimplicialComplex sr_complex(const MonomialIdeal& ideal);

// Inverse transform: each minimal non-face becomes a square-free generator.
MonomialIdeal sr_ideal(const SimplicialComplex& complex);

}  // namespace mir
