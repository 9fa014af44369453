#include "parkideal/standard_monomials.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <bit>
#include <sstream>
#include <thread>

#include "parkideal/errors.hpp"
#include "parkideal/intmatrix.hpp"

namespace parkideal {

namespace {

// Walk the box prod [0, bounds_i) and hand every non-divisible exponent
// vector to the visitor. Generators are tried smallest total degree first.
template <typename Visitor>
void walk_standard_box(const MonomialIdeal& I, Visitor&& visit)
{
    const std::vector<int> bounds = I.pure_power_bounds();
    const int n = I.variable_count();
    for (int b : bounds)
        if (b == 0)
            return;  // the ideal is the unit ideal or contains x_i^0

    std::vector<const Monomial*> by_degree;
    for (const Monomial& g : I.generators())
        by_degree.push_back(&g);
    std::sort(by_degree.begin(), by_degree.end(),
              [](const Monomial* a, const Monomial* b)
              { return a->total_degree() < b->total_degree(); });

    std::vector<int> exponents(n, 0);
    while (true)
    {
        bool standard = true;
        for (const Monomial* g : by_degree)
        {
            bool divisible = true;
            for (int i = 0; i < n && divisible; ++i)
                divisible = g->exponent(i) <= exponents[i];
            if (divisible)
            {
                standard = false;
                break;
            }
        }
        if (standard)
            visit(exponents);

        int pos = n - 1;
        while (pos >= 0 && exponents[pos] + 1 >= bounds[pos])
        {
            exponents[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++exponents[pos];
    }
}

void require_artinian(const MonomialIdeal& I)
{
    if (!I.is_artinian())
        throw DomainError("standard monomial basis is infinite: ideal is not artinian");
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& I)
{
    require_artinian(I);
    std::vector<Monomial> result;
    walk_standard_box(I, [&](const std::vector<int>& e) { result.push_back(Monomial(e)); });
    std::sort(result.begin(), result.end());
    return result;
}

Int standard_monomial_count(const MonomialIdeal& I)
{
    require_artinian(I);
    Int count = 0;
    walk_standard_box(I, [&](const std::vector<int>&) { ++count; });
    return count;
}

QPolynomial degree_generating_function(const MonomialIdeal& I)
{
    require_artinian(I);
    std::vector<Int> coefficients;
    walk_standard_box(I,
                      [&](const std::vector<int>& e)
                      {
                          int d = 0;
                          for (int x : e)
                              d += x;
                          if (d >= static_cast<int>(coefficients.size()))
                              coefficients.resize(d + 1, 0);
                          coefficients[d] += 1;
                      });
    return QPolynomial(std::move(coefficients));
}

Int count_formula_one_skeleton(long n)
{
    if (n < 1)
        throw InputError("count formula needs n >= 1");
    return Int(2 * n - 1) * int_pow(Int(n - 1), static_cast<unsigned long>(n - 1));
}

bool is_g_parking(const Graph& g, const std::vector<int>& b)
{
    const int n = g.non_sink_count();
    if (static_cast<int>(b.size()) != n)
        throw InputError("sequence length must equal the non-sink vertex count");
    for (int x : b)
        if (x < 0)
            throw InputError("sequence entries must be nonnegative");
    const MonomialIdeal full = skeleton_ideal(g, n - 1);
    return !full.contains(Monomial(b));
}

bool is_g_parking_by_definition(const Graph& g, const std::vector<int>& b)
{
    const int n = g.non_sink_count();
    if (static_cast<int>(b.size()) != n)
        throw InputError("sequence length must equal the non-sink vertex count");
    for (std::uint32_t sigma = 1; sigma < (1u << n); ++sigma)
    {
        bool has_small_entry = false;
        for (int i = 1; i <= n && !has_small_entry; ++i)
            if ((sigma & (1u << (i - 1))) && b[i - 1] < g.out_degree(sigma, i))
                has_small_entry = true;
        if (!has_small_entry)
            return false;
    }
    return true;
}

Int u_parking_count(const std::vector<int>& u)
{
    const int n = static_cast<int>(u.size());
    if (n == 0)
        throw InputError("empty weight vector");
    for (int x : u)
        if (x < 0)
            throw InputError("weight entries must be nonnegative");
    if (u[0] == 0)
        return 0;

    std::vector<int> prefix(n);
    int total = 0;
    for (int i = 0; i < n; ++i)
    {
        total += u[i];
        prefix[i] = total;
    }
    // every admissible entry is < prefix[n-1] = total
    double size_estimate = 1.0;
    for (int i = 0; i < n; ++i)
        size_estimate *= total;
    if (size_estimate > 5e7)
        throw ResourceError("u-parking enumeration too large");

    Int count = 0;
    std::vector<int> a(n, 0);
    std::vector<int> sorted(n);
    while (true)
    {
        sorted = a;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            ok = sorted[j] < prefix[j];
        if (ok)
            ++count;

        int pos = n - 1;
        while (pos >= 0 && a[pos] + 1 >= total)
        {
            a[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++a[pos];
    }
    return count;
}

std::vector<int> skeleton_u_vector(int n, int k)
{
    if (n < 1 || k < 0 || k > n - 1)
        throw InputError("need n >= 1 and 0 <= k <= n-1");
    std::vector<int> u(n, 0);
    u[0] = n - k;
    for (int i = n - k; i < n; ++i)
        u[i] = 1;
    return u;
}

namespace {

Rat rat_int_pow(const Int& base, long exp)
{
    if (exp >= 0)
        return Rat(int_pow(base, static_cast<unsigned long>(exp)));
    if (base == 0)
        throw DomainError("negative power of zero");
    return Rat(1) / Rat(int_pow(base, static_cast<unsigned long>(-exp)));
}

}  // namespace

Int yan_formula(long n, long k)
{
    if (n < 1 || k < 0 || k > n - 1)
        throw InputError("need n >= 1 and 0 <= k <= n-1");
    Rat sum = 0;
    for (long j = 0; j <= k; ++j)
    {
        Rat term = Rat(binomial(n, j));
        term *= Rat(Int(k + 1 - j));
        term *= rat_int_pow(Int(k + 1), j - 1);
        term *= rat_int_pow(Int(n - k), n - j);
        sum += term;
    }
    if (denominator(sum) != 1)
        throw DomainError("formula value is not integral");
    return numerator(sum);
}

QPolynomial inversion_polynomial(int n)
{
    if (n < 1)
        throw InputError("need n >= 1");
    if (n > 8)
        throw ResourceError("rooted forest enumeration guard: n <= 8");

    // parent[i] in {0..n}, 0 marking a root; acyclicity checked by walking
    // to a root in at most n steps
    std::vector<int> parent(n + 1, 0);
    std::vector<Int> coefficients(n * (n - 1) / 2 + 1, 0);
    while (true)
    {
        bool valid = true;
        for (int i = 1; i <= n && valid; ++i)
        {
            if (parent[i] == i)
            {
                valid = false;
                break;
            }
            int steps = 0;
            int v = parent[i];
            while (v != 0 && steps <= n)
            {
                v = parent[v];
                ++steps;
            }
            if (v != 0)
                valid = false;
        }
        if (valid)
        {
            int inversions = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = parent[i]; j != 0; j = parent[j])
                    if (j > i)
                        ++inversions;
            coefficients[inversions] += 1;
        }

        int pos = n;
        while (pos >= 1 && parent[pos] + 1 > n)
        {
            parent[pos] = 0;
            --pos;
        }
        if (pos < 1)
            break;
        ++parent[pos];
    }
    return QPolynomial(std::move(coefficients));
}

namespace {

SurveyRow survey_graph(const Graph& g)
{
    SurveyRow row;
    std::ostringstream edges;
    bool first = true;
    for (auto [i, j] : g.edges())
    {
        if (!first)
            edges << ",";
        edges << i << "-" << j;
        first = false;
    }
    row.graph_edges = edges.str();
    // on a single non-sink vertex the pair subsets are empty, so k = 0 is the 1-skeleton
    row.dimension = standard_monomial_count(skeleton_ideal(g, std::min(1, g.non_sink_count() - 1)));
    row.determinant = det_exact(reduced_signless_laplacian(g));
    row.difference = row.dimension - row.determinant;
    return row;
}

}  // namespace

std::vector<SurveyRow> inequality_survey(int max_vertices, int jobs)
{
    if (max_vertices < 2)
        throw InputError("survey needs at least 2 vertices");
    if (max_vertices > 7)
        throw ResourceError("survey guard: max_vertices <= 7");
    if (jobs < 1)
        jobs = 1;

    std::vector<SurveyRow> rows;
    for (int nv = 2; nv <= max_vertices; ++nv)
    {
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                all_edges.push_back({i, j});
        const int m = static_cast<int>(all_edges.size());
        const std::uint32_t mask_count = 1u << m;

        std::vector<SurveyRow> slots(mask_count);
        std::vector<char> present(mask_count, 0);
        std::atomic<std::uint32_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto worker = [&]()
        {
            try
            {
                while (true)
                {
                    std::uint32_t mask = next.fetch_add(1);
                    if (mask >= mask_count)
                        return;
                    std::vector<std::pair<int, int>> edges;
                    for (int e = 0; e < m; ++e)
                        if (mask & (1u << e))
                            edges.push_back(all_edges[e]);
                    Graph g(nv, edges);
                    if (!g.is_connected())
                        continue;
                    slots[mask] = survey_graph(g);
                    present[mask] = 1;
                }
            }
            catch (...)
            {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
                next.store(mask_count);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);

        for (std::uint32_t mask = 0; mask < mask_count; ++mask)
            if (present[mask])
                rows.push_back(std::move(slots[mask]));
    }
    return rows;
}

std::string survey_to_tsv(const std::vector<SurveyRow>& rows)
{
    std::ostringstream out;
    out << "graph\tdim\tdet\tdiff\n";
    for (const SurveyRow& row : rows)
        out << row.graph_edges << "\t" << row.dimension << "\t" << row.determinant << "\t"
            << row.difference << "\n";
    return out.str();
}

}  // namespace parkideal
