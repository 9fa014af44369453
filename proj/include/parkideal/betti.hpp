#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "parkideal/graph.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * Graded Betti numbers of a monomial ideal. Entries are keyed by
 * (homological index i, fine degree); index 1 corresponds to the minimal
 * generators (the resolution's first free module covers the ideal), which
 * is the convention the coarse displays use.
 */
class BettiTable {
  public:
    using FineKey = std::pair<int, std::vector<int>>;

    void add(int index, const std::vector<int>& degree, long long multiplicity);

    const std::map<FineKey, long long>& fine() const { return fine_; }

    /** Fiberwise sums of the fine view: (i, total degree) -> multiplicity. */
    std::map<std::pair<int, int>, long long> coarse() const;

    /** Total Betti numbers: entry [i-1] = sum over degrees at index i. */
    std::vector<long long> totals() const;

    bool operator==(const BettiTable& other) const = default;

  private:
    std::map<FineKey, long long> fine_;
};

/**
 * Minimal finely-graded Betti numbers of I, computed independently of any
 * geometric construction: for each degree b in the lcm closure of the
 * minimal generators, the multiplicity at index i is the reduced homology
 * dimension, in degree i-2, of the complex of squarefree vectors tau <= b
 * with x^{b-tau} in I. Ranks are exact over Q.
 *
 * Guard: the lcm closure may not exceed 200000 degrees.
 */
BettiTable betti_table(const MonomialIdeal& I);

/** Same computation with homology ranks over GF(p); for field-independence checks. */
BettiTable betti_table_mod_p(const MonomialIdeal& I, std::uint32_t p);

/** The lcm closure itself (iterated pairwise lcms of the minimal generators, to a fixpoint). */
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, size_t guard = 200000);

/** sum_{j=1}^{n} j * C(j-1, i-1): total Betti numbers of the complete-graph 1-skeleton ideal. */
Int total_betti_formula(long n, long i);

/** n + |E| - deg(0): minimal generator count of any connected graph's 1-skeleton ideal. */
Int first_betti_graph_formula(const Graph& g);

}  // namespace parkideal
