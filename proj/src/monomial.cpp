#include "parkideal/monomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "parkideal/errors.hpp"

namespace parkideal {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    for (int e : exponents_)
        if (e < 0)
            throw InputError("monomial exponents must be nonnegative");
}

Monomial Monomial::one(int n)
{
    return Monomial(std::vector<int>(n, 0));
}

Monomial Monomial::from_csv(const std::string& csv)
{
    std::vector<int> exponents;
    std::istringstream stream(csv);
    std::string field;
    while (std::getline(stream, field, ','))
    {
        try
        {
            size_t pos = 0;
            int value = std::stoi(field, &pos);
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos])))
                ++pos;
            if (pos != field.size())
                throw std::invalid_argument("trailing");
            exponents.push_back(value);
        }
        catch (const std::exception&)
        {
            throw InputError("bad exponent field: '" + field + "'");
        }
    }
    if (exponents.empty())
        throw InputError("empty exponent vector");
    return Monomial(std::move(exponents));
}

int Monomial::total_degree() const
{
    int total = 0;
    for (int e : exponents_)
        total += e;
    return total;
}

bool Monomial::divides(const Monomial& other) const
{
    if (variable_count() != other.variable_count())
        throw InputError("monomial variable counts differ");
    for (int i = 0; i < variable_count(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

std::string Monomial::to_csv() const
{
    std::ostringstream out;
    for (int i = 0; i < variable_count(); ++i)
    {
        if (i > 0)
            out << ",";
        out << exponents_[i];
    }
    return out.str();
}

std::string Monomial::to_pretty() const
{
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < variable_count(); ++i)
    {
        if (exponents_[i] == 0)
            continue;
        if (!first)
            out << "*";
        out << "x" << (i + 1);
        if (exponents_[i] > 1)
            out << "^" << exponents_[i];
        first = false;
    }
    if (first)
        return "1";
    return out.str();
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const
{
    return exponents_ <=> other.exponents_;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    if (a.variable_count() != b.variable_count())
        throw InputError("monomial variable counts differ");
    std::vector<int> exponents(a.variable_count());
    for (int i = 0; i < a.variable_count(); ++i)
        exponents[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(std::move(exponents));
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& generators)
{
    // Dedupe, then keep a monomial only if nothing else divides it. Sorting
    // by total degree first means a potential divisor is always seen before
    // the monomials it eliminates.
    std::vector<Monomial> sorted = generators;
    std::sort(sorted.begin(), sorted.end(),
              [](const Monomial& a, const Monomial& b)
              {
                  if (a.total_degree() != b.total_degree())
                      return a.total_degree() < b.total_degree();
                  return a < b;
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Monomial> kept;
    for (const Monomial& candidate : sorted)
    {
        bool redundant = false;
        for (const Monomial& g : kept)
            if (g.divides(candidate))
            {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(candidate);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialIdeal::MonomialIdeal(int variable_count, const std::vector<Monomial>& generators)
    : variable_count_(variable_count)
{
    for (const Monomial& g : generators)
        if (g.variable_count() != variable_count)
            throw InputError("generator has wrong variable count");
    generators_ = minimalize(generators);
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    for (const Monomial& g : generators_)
        if (g.divides(m))
            return true;
    return false;
}

bool MonomialIdeal::is_artinian() const
{
    for (int i = 0; i < variable_count_; ++i)
    {
        bool found = false;
        for (const Monomial& g : generators_)
        {
            bool pure = true;
            for (int j = 0; j < variable_count_ && pure; ++j)
                if (j != i && g.exponent(j) != 0)
                    pure = false;
            if (pure)
            {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

std::vector<int> MonomialIdeal::pure_power_bounds() const
{
    std::vector<int> bounds(variable_count_, -1);
    for (const Monomial& g : generators_)
    {
        int support_var = -1;
        bool pure = true;
        for (int j = 0; j < variable_count_; ++j)
        {
            if (g.exponent(j) == 0)
                continue;
            if (support_var >= 0)
            {
                pure = false;
                break;
            }
            support_var = j;
        }
        if (!pure)
            continue;
        if (support_var < 0)
        {
            // the unit generator: the ideal is all of S
            return std::vector<int>(variable_count_, 0);
        }
        int e = g.exponent(support_var);
        if (bounds[support_var] < 0 || e < bounds[support_var])
            bounds[support_var] = e;
    }
    for (int i = 0; i < variable_count_; ++i)
        if (bounds[i] < 0)
            throw DomainError("ideal is not artinian: no pure power of x" + std::to_string(i + 1));
    return bounds;
}

Monomial m_sigma(const Graph& g, std::uint32_t sigma_mask)
{
    const int n = g.non_sink_count();
    if (sigma_mask == 0)
        throw InputError("sigma must be nonempty");
    if (sigma_mask >= (1u << n))
        throw InputError("sigma contains a vertex outside {1..n}");
    std::vector<int> exponents(n, 0);
    for (int i = 1; i <= n; ++i)
        if (sigma_mask & (1u << (i - 1)))
            exponents[i - 1] = g.out_degree(sigma_mask, i);
    return Monomial(std::move(exponents));
}

Monomial m_sigma(const Graph& g, const std::vector<int>& sigma)
{
    std::uint32_t mask = 0;
    for (int v : sigma)
    {
        if (v < 1 || v > g.non_sink_count())
            throw InputError("sigma member out of range: " + std::to_string(v));
        mask |= (1u << (v - 1));
    }
    return m_sigma(g, mask);
}

MonomialIdeal skeleton_ideal(const Graph& g, int k)
{
    const int n = g.non_sink_count();
    if (n < 1)
        throw InputError("skeleton ideal needs at least one non-sink vertex");
    if (k < 0 || k > n - 1)
        throw InputError("skeleton parameter k must satisfy 0 <= k <= n-1");
    std::vector<Monomial> generators;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if (std::popcount(mask) <= k + 1)
            generators.push_back(m_sigma(g, mask));
    return MonomialIdeal(n, generators);
}

}  // namespace parkideal
