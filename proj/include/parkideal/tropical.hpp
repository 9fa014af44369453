#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkideal/betti.hpp"
#include "parkideal/graph.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * Covector pair of a point: which closed cones of each hyperplane contain
 * it. Both sets are nonempty subsets of {1..n}, stored as bitmasks with
 * bit (v-1) for label v.
 */
struct TypePair {
    std::uint32_t a_mask = 0;
    std::uint32_t b_mask = 0;

    bool operator==(const TypePair& other) const = default;

    /** Componentwise superset test (larger types belong to smaller cells). */
    bool contains(const TypePair& other) const
    {
        return (a_mask & other.a_mask) == other.a_mask && (b_mask & other.b_mask) == other.b_mask;
    }
};

std::vector<int> mask_to_labels(std::uint32_t mask);
std::uint32_t labels_to_mask(const std::vector<int>& labels, int n);

/** Lexicographic order on (sorted T_a, sorted T_b); the canonical cell order. */
bool type_pair_lex_less(const TypePair& x, const TypePair& y);

/**
 * An ordered pair of max-plus tropical hyperplanes in R^(n-1). Apexes are
 * kept in homogeneous coordinates of length n whose last entry is 0; a
 * point x in R^(n-1) is extended by a trailing 0 before comparisons, and
 * label i attains the maximum of x*_i - apex*_i.
 */
class Arrangement {
  public:
    /**
     * Apex vectors of length n-1 are taken as-is (trailing 0 appended);
     * vectors of length n are normalized by subtracting the last entry,
     * which fixes the same hyperplane.
     */
    Arrangement(int n, std::vector<Rat> apex_a, std::vector<Rat> apex_b);

    /** Origin against the staircase apex (1, 2, ..., n-1); generic for every n. */
    static Arrangement standard_generic(int n);

    int n() const { return n_; }
    const std::vector<Rat>& apex_a() const { return apex_a_; }
    const std::vector<Rat>& apex_b() const { return apex_b_; }

  private:
    int n_;
    std::vector<Rat> apex_a_;  // homogeneous, length n, last entry 0
    std::vector<Rat> apex_b_;
};

/** Argmax label sets of x* - a* and x* - b*. x has length n-1. */
TypePair type_of_point(const Arrangement& arr, const std::vector<Rat>& x);

/** One cell of the induced decomposition of R^(n-1). */
struct Cell {
    TypePair type;
    int dim = 0;                // number of tie-graph components minus one
    std::vector<Rat> witness;   // a point of length n-1 realizing exactly this type
};

/**
 * The polyhedral decomposition induced by the arrangement: every realizable
 * type with an exact witness, dimension, and the face partial order
 * (reverse componentwise containment of types).
 */
class CellComplex {
  public:
    CellComplex(Arrangement arr, std::vector<Cell> cells);

    int n() const { return arrangement_.n(); }
    const Arrangement& arrangement() const { return arrangement_; }
    const std::vector<Cell>& cells() const { return cells_; }

    /** All ordered pairs (face index, coface index); faces have strictly larger types. */
    const std::vector<std::pair<int, int>>& face_relation() const { return face_relation_; }

    /** Indices of cells having `index` as a face, i.e. whose closure contains it. */
    std::vector<int> cofaces_of(int index) const;
    std::vector<int> faces_of(int index) const;

    /** Indices of the full-dimensional cells. */
    std::vector<int> maximal_cells() const;

    /**
     * Computed genericity: every unordered label pair {i, j} (i = j allowed)
     * occurs as the type union of exactly one maximal cell.
     */
    bool is_generic() const;

  private:
    Arrangement arrangement_;
    std::vector<Cell> cells_;
    std::vector<std::pair<int, int>> face_relation_;
};

/**
 * Enumerate all realizable covector pairs exactly. A candidate pair is
 * feasible iff its difference-constraint system (equalities inside each
 * type set, strict inequalities against the outside) has no nonpositive
 * violating cycle; solved by Bellman-Ford over (rational, strictness)
 * weights, all exact. Guard: 2^(2n) candidates, n <= 10 by default;
 * the PARKIDEAL_MAX_CELLS environment variable overrides the budget.
 */
CellComplex enumerate_cells(const Arrangement& arr);

/**
 * Monomial attached to a cell: exponent of x_i is deg(i) when i lies in
 * both type sets, deg(i) - 1 when in exactly one, 0 otherwise.
 */
Monomial monomial_label(const Cell& cell, const Graph& g);

/**
 * Read Betti numbers off the labeled complex: a cell of codimension i-1
 * contributes its label at homological index i, so maximal cells are the
 * generators.
 */
BettiTable betti_from_complex(const CellComplex& complex, const Graph& g);

/** True iff every face-relation pair carries distinct monomial labels. */
bool verify_minimality(const CellComplex& complex, const Graph& g);

/**
 * Apex b (a = origin) for graphs of the form "sink coned over K_n minus a
 * collection of vertex-disjoint cliques": clique blocks share a value, the
 * block containing vertex n sits at the implicit homogeneous 0, and the
 * untouched vertices receive distinct generic values. Throws DomainError
 * when g is not of this shape. For the complete graph the result is the
 * staircase apex (1, 2, ..., n-1).
 */
std::vector<Rat> clique_cone_apex(const Graph& g);

/**
 * Signed incidence numbers [face : coface] between cells of adjacent
 * dimension, derived from exact orientations of the cells' affine hulls.
 */
std::map<std::pair<int, int>, int> incidence_signs(const CellComplex& complex);

/** True iff the signed incidence composes to zero across every codimension-2 pair. */
bool coboundary_squares_to_zero(const CellComplex& complex);

/** Alternating cell count by codimension: +maximal, -codim 1, ...; 1 for these decompositions. */
long euler_characteristic_codim(const CellComplex& complex);

/** Componentwise max(lambda + x, mu + y): a sample point of the max-tropical segment. */
std::vector<Rat> tropical_segment_point(const std::vector<Rat>& x, const std::vector<Rat>& y,
                                        const Rat& lambda, const Rat& mu);

/** Line drawing of a 2-dimensional arrangement (n = 3) for documentation. */
std::string arrangement_svg(const Arrangement& arr);

}  // namespace parkideal
