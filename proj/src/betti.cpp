#include "parkideal/betti.hpp"

#include <algorithm>
#include <set>

#include "parkideal/errors.hpp"
#include "parkideal/simplicial.hpp"

namespace parkideal {

void BettiTable::add(int index, const std::vector<int>& degree, long long multiplicity)
{
    if (multiplicity == 0)
        return;
    fine_[{index, degree}] += multiplicity;
    if (fine_[{index, degree}] == 0)
        fine_.erase({index, degree});
}

std::map<std::pair<int, int>, long long> BettiTable::coarse() const
{
    std::map<std::pair<int, int>, long long> result;
    for (const auto& [key, mult] : fine_)
    {
        int total = 0;
        for (int e : key.second)
            total += e;
        result[{key.first, total}] += mult;
    }
    return result;
}

std::vector<long long> BettiTable::totals() const
{
    std::vector<long long> result;
    for (const auto& [key, mult] : fine_)
    {
        if (key.first > static_cast<int>(result.size()))
            result.resize(key.first, 0);
        result[key.first - 1] += mult;
    }
    return result;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, size_t guard)
{
    std::set<Monomial> closure(I.generators().begin(), I.generators().end());
    std::vector<Monomial> frontier(closure.begin(), closure.end());
    while (!frontier.empty())
    {
        std::vector<Monomial> next;
        for (const Monomial& a : frontier)
            for (const Monomial& g : I.generators())
            {
                Monomial join = lcm(a, g);
                if (closure.insert(join).second)
                    next.push_back(std::move(join));
            }
        if (closure.size() > guard)
            throw ResourceError("lcm closure exceeds guard of " + std::to_string(guard));
        frontier = std::move(next);
    }
    return std::vector<Monomial>(closure.begin(), closure.end());
}

namespace {

// K^b: squarefree tau <= b with x^(b - tau) in I. Subset-closed because
// monomial ideals are upward closed.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& b)
{
    const int n = I.variable_count();
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (b.exponent(i) > 0)
            support.push_back(i);

    std::vector<std::uint32_t> faces;
    const int s = static_cast<int>(support.size());
    for (std::uint32_t sub = 0; sub < (1u << s); ++sub)
    {
        std::vector<int> exponents = b.exponents();
        std::uint32_t mask = 0;
        for (int t = 0; t < s; ++t)
            if (sub & (1u << t))
            {
                exponents[support[t]] -= 1;
                mask |= (1u << support[t]);
            }
        if (I.contains(Monomial(exponents)))
            faces.push_back(mask);
    }
    return SimplicialComplex(n, faces);
}

template <typename BettiFn>
BettiTable betti_table_impl(const MonomialIdeal& I, BettiFn&& reduced_betti)
{
    BettiTable table;
    for (const Monomial& b : lcm_lattice(I))
    {
        SimplicialComplex complex = upper_koszul_complex(I, b);
        std::vector<int> homology = reduced_betti(complex);
        // homology[s] is reduced homology in degree s-1; the table entry at
        // index i reads degree i-2, so i = s + 1
        for (size_t s = 0; s < homology.size(); ++s)
            if (homology[s] != 0)
                table.add(static_cast<int>(s) + 1, b.exponents(), homology[s]);
    }
    return table;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I)
{
    return betti_table_impl(I, [](const SimplicialComplex& complex)
                            { return complex.reduced_betti_rational(); });
}

BettiTable betti_table_mod_p(const MonomialIdeal& I, std::uint32_t p)
{
    return betti_table_impl(I, [p](const SimplicialComplex& complex)
                            { return complex.reduced_betti_mod_p(p); });
}

Int total_betti_formula(long n, long i)
{
    if (n < 1 || i < 1 || i > n)
        throw InputError("total Betti formula needs 1 <= i <= n");
    Int total = 0;
    for (long j = 1; j <= n; ++j)
        total += Int(j) * binomial(j - 1, i - 1);
    return total;
}

Int first_betti_graph_formula(const Graph& g)
{
    if (!g.is_connected())
        throw InputError("generator-count formula needs a connected graph");
    return Int(g.non_sink_count()) + g.edge_count() - g.degree(0);
}

}  // namespace parkideal
