#pragma once

#include <cstdint>
#include <vector>

#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * Abstract simplicial complex on vertex set {0..n-1}, faces stored as
 * bitmasks and closed under taking subsets (the caller's responsibility).
 * Supports exact reduced homology over the rationals and over GF(p):
 * only dimensions over a field are needed, so ranks of the boundary
 * matrices suffice.
 */
class SimplicialComplex {
  public:
    /**
     * @param vertex_count Ambient vertex count (masks fit in it).
     * @param faces All faces as bitmasks, including the empty face 0 when
     *              the complex is nonempty. Must be subset-closed.
     */
    SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces);

    bool is_void() const { return faces_by_size_.empty() || faces_by_size_[0].empty(); }
    int face_count(int size) const;

    /**
     * Reduced Betti numbers over Q, indexed from homological degree -1:
     * entry [r + 1] = dim of reduced homology in degree r. The boundary-
     * boundary composition vanishing is a structural fact of the signed
     * matrices built here; ranks are computed exactly.
     */
    std::vector<int> reduced_betti_rational() const;

    /** Same dimensions computed over GF(p); used to cross-check field independence. */
    std::vector<int> reduced_betti_mod_p(std::uint32_t p) const;

  private:
    int vertex_count_;
    std::vector<std::vector<std::uint32_t>> faces_by_size_;  // index = cardinality

    std::vector<std::vector<Rat>> boundary_matrix(int size) const;
};

}  // namespace parkideal
