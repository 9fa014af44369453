#pragma once

#include <string>
#include <vector>

#include "parkideal/graph.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/qpolynomial.hpp"

namespace parkideal {

/**
 * All monomials not divisible by any generator of I, lex-sorted.
 * I must be artinian; the enumeration walks the box bounded by the
 * minimal pure powers.
 */
std::vector<Monomial> standard_monomials(const MonomialIdeal& I);

/** Count of standard monomials without materializing them. */
Int standard_monomial_count(const MonomialIdeal& I);

/** Coefficient of q^d = number of standard monomials of total degree d. */
QPolynomial degree_generating_function(const MonomialIdeal& I);

/** (2n-1)(n-1)^{n-1}, with the 0^0 = 1 convention at n = 1. */
Int count_formula_one_skeleton(long n);

/**
 * True iff every nonempty subset sigma of {1..n} has a member i with
 * b_i < d_sigma(i); equivalently, x^b is standard for the full
 * parking-function ideal, which is how this is computed.
 */
bool is_g_parking(const Graph& g, const std::vector<int>& b);

/** Direct subset-sweep form of the definition; the test oracle for is_g_parking. */
bool is_g_parking_by_definition(const Graph& g, const std::vector<int>& b);

/**
 * Number of sequences of length n whose sorted rearrangement c satisfies
 * c_j < u_1 + ... + u_j for every j. Zero when u_1 = 0.
 */
Int u_parking_count(const std::vector<int>& u);

/** The weight vector (n-k, 0,...,0, 1,...,1) whose parking count matches the k-skeleton. */
std::vector<int> skeleton_u_vector(int n, int k);

/**
 * sum_{j=0}^{k} C(n,j) (k+1-j) (k+1)^{j-1} (n-k)^{n-j}, evaluated in exact
 * rational arithmetic (the j = 0 term carries a negative power) and checked
 * to be integral.
 */
Int yan_formula(long n, long k);

/**
 * Generating function of labeled rooted forests on {1..n} by inversion
 * count, via exhaustive enumeration of parent functions. Requires n <= 8.
 */
QPolynomial inversion_polynomial(int n);

struct SurveyRow {
    std::string graph_edges;  // "0-1,0-2,..." of the labeled graph
    Int dimension;            // standard monomials of the 1-skeleton ideal
    Int determinant;          // det of the reduced signless Laplacian
    Int difference;           // dimension - determinant
};

/**
 * Exhaustive labeled sweep over connected graphs on 2..max_vertices
 * vertices, reporting dimension vs determinant evidence. Asserts nothing.
 * Requires max_vertices <= 7.
 */
std::vector<SurveyRow> inequality_survey(int max_vertices, int jobs = 1);

std::string survey_to_tsv(const std::vector<SurveyRow>& rows);

}  // namespace parkideal
