#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "parkideal/graph.hpp"

namespace parkideal {

/**
 * Monomial in n variables, stored as its exponent vector. Coordinate i
 * (0-based) holds the exponent of variable x_{i+1}.
 */
class Monomial {
  public:
    explicit Monomial(std::vector<int> exponents);

    /** The unit monomial 1 in n variables. */
    static Monomial one(int n);

    static Monomial from_csv(const std::string& csv);

    int variable_count() const { return static_cast<int>(exponents_.size()); }
    const std::vector<int>& exponents() const { return exponents_; }
    int exponent(int index) const { return exponents_[index]; }
    int total_degree() const;

    /** Componentwise <= test. Requires equal variable counts. */
    bool divides(const Monomial& other) const;

    /** Exponent vector as decimal CSV, "3,3,0". */
    std::string to_csv() const;
    /** Human-readable form, "x1^3*x2^3"; the unit prints as "1". */
    std::string to_pretty() const;

    bool operator==(const Monomial& other) const = default;
    /** Lexicographic order on exponent vectors. */
    std::strong_ordering operator<=>(const Monomial& other) const;

  private:
    std::vector<int> exponents_;
};

/** Componentwise max. Requires equal variable counts. */
Monomial lcm(const Monomial& a, const Monomial& b);

/** Drop every element that is divisible by another; the result generates the same ideal. */
std::vector<Monomial> minimalize(const std::vector<Monomial>& generators);

/**
 * Monomial ideal in n variables. The stored generating set is minimal
 * (no generator divides another) and lex-sorted, so equal ideals have
 * identical representations.
 */
class MonomialIdeal {
  public:
    /** Minimalizes and sorts the given generators. */
    MonomialIdeal(int variable_count, const std::vector<Monomial>& generators);

    int variable_count() const { return variable_count_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    /** Membership test: true iff some generator divides m. */
    bool contains(const Monomial& m) const;

    /** True iff the ideal contains a pure power of every variable. */
    bool is_artinian() const;

    /**
     * For an artinian ideal, the vector p with x_i^{p_i} the minimal pure
     * power of each variable in the ideal; every standard monomial lies in
     * the box prod [0, p_i). Throws DomainError if not artinian.
     */
    std::vector<int> pure_power_bounds() const;

    bool operator==(const MonomialIdeal& other) const = default;

  private:
    int variable_count_;
    std::vector<Monomial> generators_;
};

/**
 * Generator monomial m_sigma = prod_{i in sigma} x_i^{d_sigma(i)}, where
 * d_sigma(i) counts the neighbors of i outside sigma, sink included.
 *
 * @param sigma Nonempty subset of {1..n}.
 */
Monomial m_sigma(const Graph& g, const std::vector<int>& sigma);
Monomial m_sigma(const Graph& g, std::uint32_t sigma_mask);

/**
 * The ideal generated by m_sigma over all nonempty sigma with
 * |sigma| <= k + 1, stored minimally. Requires 0 <= k <= n-1.
 * k = n-1 gives the full parking-function ideal.
 */
MonomialIdeal skeleton_ideal(const Graph& g, int k);

}  // namespace parkideal
