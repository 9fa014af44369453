#pragma once

#include <string>

#include "parkideal/betti.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/tropical.hpp"

namespace parkideal {

/** {"n": ..., "generators": [[...], ...]} with lex-sorted rows. */
std::string ideal_to_json(const MonomialIdeal& I, int indent = 2);

/**
 * {"fine": [{"i", "degree", "mult"}], "coarse": [{"i", "totaldeg", "mult"}]},
 * rows sorted by (i, degree).
 */
std::string betti_to_json(const BettiTable& table, int indent = 2);

/**
 * Cells as {"Ta", "Tb", "dim", "label", "witness"} with exact rational
 * witnesses, plus the face relation as index pairs. Labels come from the
 * graph's degrees.
 */
std::string complex_to_json(const CellComplex& complex, const Graph& g, int indent = 2);

}  // namespace parkideal
