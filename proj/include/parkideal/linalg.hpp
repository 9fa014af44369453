#pragma once

#include <cstdint>
#include <vector>

#include "parkideal/numeric.hpp"

namespace parkideal {

/** Rank over the rationals by exact Gaussian elimination. Destroys `rows`. */
int rank_rational(std::vector<std::vector<Rat>>& rows);

/** Rank over GF(p) for odd prime p < 2^31. Destroys `rows`; entries already reduced mod p. */
int rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);

/** Reduce an exact integer matrix mod p. */
std::vector<std::vector<std::uint32_t>> reduce_mod_p(const std::vector<std::vector<Int>>& rows,
                                                     std::uint32_t p);

}  // namespace parkideal
