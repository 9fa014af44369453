#pragma once

#include <map>
#include <vector>

#include "parkideal/graph.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/numeric.hpp"

namespace parkideal {

/**
 * Homogeneous polynomial with exact integer coefficients; every stored
 * monomial has the same total degree and no zero coefficients are kept.
 */
class HomogeneousPoly {
  public:
    HomogeneousPoly(int variable_count, std::map<std::vector<int>, Int> terms);

    /** Multinomial expansion of (sum of the listed variables)^exponent. Variables are 1-based. */
    static HomogeneousPoly linear_power(int variable_count, const std::vector<int>& variables,
                                        int exponent);

    static HomogeneousPoly from_monomial(const Monomial& m);

    int variable_count() const { return variable_count_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

  private:
    int variable_count_;
    int degree_;
    std::map<std::vector<int>, Int> terms_;
};

/**
 * Generators (sum_{i in sigma} x_i)^{D_sigma} over all nonempty sigma with
 * |sigma| <= k+1, where D_sigma is the total out-degree of sigma (the
 * degree of the matching monomial generator). Requires 0 <= k <= n-1.
 */
std::vector<HomogeneousPoly> power_ideal_gens(const Graph& g, int k);

/** The generators of a monomial ideal, viewed as polynomials. */
std::vector<HomogeneousPoly> ideal_as_polys(const MonomialIdeal& I);

/**
 * dim of the degree-d piece of S/<gens>: the count of degree-d monomials
 * minus the exact rank of the multiples of the generators in that degree.
 * Guard: C(n+d-1, d) <= 50000.
 */
Int hilbert_dim(int variable_count, const std::vector<HomogeneousPoly>& gens, int d);

/**
 * True iff the two ideals have identical degree-d graded pieces for every
 * d <= max_d, decided by exact span comparisons (dim A_d = dim B_d =
 * dim (A+B)_d). For artinian ideals with max_d at least the common socle
 * bound this is ideal equality.
 */
bool graded_ideal_equal(int variable_count, const std::vector<HomogeneousPoly>& A,
                        const std::vector<HomogeneousPoly>& B, int max_d);

/** 1 + sum_i (deg(i) - 1) + n: a safe bound beyond which both skeleton quotients vanish. */
int socle_bound(const Graph& g);

}  // namespace parkideal
