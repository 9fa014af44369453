#pragma once

#include <vector>

#include "parkideal/graph.hpp"
#include "parkideal/numeric.hpp"

namespace parkideal {

/** Square matrix of arbitrary-precision integers. */
class IntMatrix {
  public:
    explicit IntMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim, 0) {}

    static IntMatrix identity(int dim);

    int dim() const { return dim_; }
    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

  private:
    int dim_;
    std::vector<Int> entries_;
};

/**
 * Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
 * All intermediate values are integers; divisions are exact.
 */
Int det_exact(const IntMatrix& m);

/** Degree matrix minus adjacency, with the sink row and column deleted. */
IntMatrix reduced_laplacian(const Graph& g);

/** Degree matrix plus adjacency, with the sink row and column deleted. */
IntMatrix reduced_signless_laplacian(const Graph& g);

/** Full Laplacian with row and column `deleted` removed (any vertex, not just the sink). */
IntMatrix laplacian_minor(const Graph& g, int deleted);

/** Number of spanning trees, as det of the reduced Laplacian. */
Int spanning_tree_count(const Graph& g);

}  // namespace parkideal
