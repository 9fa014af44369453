#include "parkideal/tropical.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "parkideal/errors.hpp"

namespace parkideal {

std::vector<int> mask_to_labels(std::uint32_t mask)
{
    std::vector<int> labels;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1)
            labels.push_back(v + 1);
    return labels;
}

std::uint32_t labels_to_mask(const std::vector<int>& labels, int n)
{
    std::uint32_t mask = 0;
    for (int v : labels)
    {
        if (v < 1 || v > n)
            throw InputError("label out of range: " + std::to_string(v));
        mask |= (1u << (v - 1));
    }
    return mask;
}

bool type_pair_lex_less(const TypePair& x, const TypePair& y)
{
    auto xa = mask_to_labels(x.a_mask), ya = mask_to_labels(y.a_mask);
    if (xa != ya)
        return xa < ya;
    return mask_to_labels(x.b_mask) < mask_to_labels(y.b_mask);
}

Arrangement::Arrangement(int n, std::vector<Rat> apex_a, std::vector<Rat> apex_b) : n_(n)
{
    if (n < 1)
        throw InputError("arrangement needs n >= 1");
    auto normalize = [n](std::vector<Rat> apex)
    {
        if (static_cast<int>(apex.size()) == n - 1)
        {
            apex.push_back(0);
        }
        else if (static_cast<int>(apex.size()) == n)
        {
            const Rat last = apex.back();
            for (Rat& entry : apex)
                entry -= last;
        }
        else
        {
            throw InputError("apex length must be n-1 or n");
        }
        return apex;
    };
    apex_a_ = normalize(std::move(apex_a));
    apex_b_ = normalize(std::move(apex_b));
}

Arrangement Arrangement::standard_generic(int n)
{
    std::vector<Rat> a(n - 1, 0), b;
    for (int i = 1; i <= n - 1; ++i)
        b.push_back(i);
    return Arrangement(n, std::move(a), std::move(b));
}

namespace {

std::uint32_t argmax_mask(const std::vector<Rat>& shifted)
{
    Rat best = shifted[0];
    for (const Rat& v : shifted)
        if (v > best)
            best = v;
    std::uint32_t mask = 0;
    for (size_t i = 0; i < shifted.size(); ++i)
        if (shifted[i] == best)
            mask |= (1u << i);
    return mask;
}

}  // namespace

TypePair type_of_point(const Arrangement& arr, const std::vector<Rat>& x)
{
    const int n = arr.n();
    if (static_cast<int>(x.size()) != n - 1)
        throw InputError("point must have length n-1");
    std::vector<Rat> shifted(n);
    TypePair type;
    for (int i = 0; i < n; ++i)
        shifted[i] = (i < n - 1 ? x[i] : Rat(0)) - arr.apex_a()[i];
    type.a_mask = argmax_mask(shifted);
    for (int i = 0; i < n; ++i)
        shifted[i] = (i < n - 1 ? x[i] : Rat(0)) - arr.apex_b()[i];
    type.b_mask = argmax_mask(shifted);
    return type;
}

namespace {

struct ConstraintEdge {
    int from;     // tail y_v
    int to;       // head y_u, encoding y_u - y_v <= w (strict if flagged)
    Rat weight;
    bool strict;
};

// weight with a symbolic -epsilon per strict edge, compared lexicographically
struct LexDist {
    Rat w;
    long s;

    bool less_than(const LexDist& other) const
    {
        if (w != other.w)
            return w < other.w;
        return s < other.s;
    }
};

void append_side_constraints(std::vector<ConstraintEdge>& edges, std::uint32_t mask,
                             const std::vector<Rat>& apex, int n)
{
    const int rep = std::countr_zero(mask);
    for (int i = rep + 1; i < n; ++i)
        if (mask & (1u << i))
        {
            edges.push_back({rep, i, apex[i] - apex[rep], false});
            edges.push_back({i, rep, apex[rep] - apex[i], false});
        }
    for (int k = 0; k < n; ++k)
        if (!(mask & (1u << k)))
            edges.push_back({rep, k, apex[k] - apex[rep], true});
}

/**
 * Feasibility of the difference-constraint system of a candidate type, and
 * an exact witness when feasible. Bellman-Ford from a virtual source; a
 * relaxation on the n-th pass certifies a violating cycle.
 */
bool realize_type(const Arrangement& arr, const TypePair& candidate, std::vector<Rat>& witness_out)
{
    const int n = arr.n();
    std::vector<ConstraintEdge> edges;
    append_side_constraints(edges, candidate.a_mask, arr.apex_a(), n);
    append_side_constraints(edges, candidate.b_mask, arr.apex_b(), n);

    std::vector<LexDist> dist(n, LexDist{0, 0});
    for (int pass = 0; pass < n; ++pass)
    {
        bool changed = false;
        for (const ConstraintEdge& e : edges)
        {
            LexDist relaxed{dist[e.from].w + e.weight, dist[e.from].s + (e.strict ? -1 : 0)};
            if (relaxed.less_than(dist[e.to]))
            {
                dist[e.to] = relaxed;
                changed = true;
            }
        }
        if (!changed)
            break;
        if (pass == n - 1)
            return false;  // still relaxing after n-1 passes: violating cycle
    }

    // substitute a concrete epsilon, halving until the strict edges hold
    Rat epsilon = 1;
    for (int attempt = 0; attempt < 200; ++attempt)
    {
        std::vector<Rat> point(n - 1);
        const Rat base = dist[n - 1].w + Rat(dist[n - 1].s) * epsilon;
        for (int i = 0; i < n - 1; ++i)
            point[i] = dist[i].w + Rat(dist[i].s) * epsilon - base;
        if (type_of_point(arr, point) == candidate)
        {
            witness_out = std::move(point);
            return true;
        }
        epsilon /= 2;
    }
    throw std::logic_error("witness extraction failed to converge");
}

unsigned long long candidate_budget()
{
    if (const char* env = std::getenv("PARKIDEAL_MAX_CELLS"))
    {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0)
            return value;
    }
    return 1ull << 20;  // n = 10
}

int tie_graph_dimension(const TypePair& type, int n)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v)
    {
        while (parent[v] != v)
        {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite_mask = [&](std::uint32_t mask)
    {
        int rep = std::countr_zero(mask);
        for (int i = rep + 1; i < n; ++i)
            if (mask & (1u << i))
                parent[find(i)] = find(rep);
    };
    unite_mask(type.a_mask);
    unite_mask(type.b_mask);
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v)
            ++components;
    return components - 1;
}

}  // namespace

CellComplex::CellComplex(Arrangement arr, std::vector<Cell> cells)
    : arrangement_(std::move(arr)), cells_(std::move(cells))
{
    std::sort(cells_.begin(), cells_.end(),
              [](const Cell& x, const Cell& y) { return type_pair_lex_less(x.type, y.type); });
    for (size_t i = 0; i < cells_.size(); ++i)
        for (size_t j = 0; j < cells_.size(); ++j)
            if (i != j && cells_[i].type.contains(cells_[j].type) &&
                !(cells_[i].type == cells_[j].type))
                face_relation_.push_back({static_cast<int>(i), static_cast<int>(j)});
}

std::vector<int> CellComplex::cofaces_of(int index) const
{
    std::vector<int> result;
    for (const auto& [face, coface] : face_relation_)
        if (face == index)
            result.push_back(coface);
    return result;
}

std::vector<int> CellComplex::faces_of(int index) const
{
    std::vector<int> result;
    for (const auto& [face, coface] : face_relation_)
        if (coface == index)
            result.push_back(face);
    return result;
}

std::vector<int> CellComplex::maximal_cells() const
{
    std::vector<int> result;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].dim == n() - 1)
            result.push_back(static_cast<int>(i));
    return result;
}

bool CellComplex::is_generic() const
{
    std::map<std::uint32_t, int> union_counts;
    for (int index : maximal_cells())
    {
        const TypePair& type = cells_[index].type;
        union_counts[type.a_mask | type.b_mask] += 1;
    }
    const int n = this->n();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
        {
            std::uint32_t mask = (1u << (i - 1)) | (1u << (j - 1));
            auto it = union_counts.find(mask);
            if (it == union_counts.end() || it->second != 1)
                return false;
        }
    return true;
}

CellComplex enumerate_cells(const Arrangement& arr)
{
    const int n = arr.n();
    const unsigned long long candidates =
        (static_cast<unsigned long long>(1) << n) * (static_cast<unsigned long long>(1) << n);
    if (candidates > candidate_budget())
        throw ResourceError("cell enumeration guard: 2^(2n) candidates exceed the budget "
                            "(set PARKIDEAL_MAX_CELLS to raise)");

    std::vector<Cell> cells;
    for (std::uint32_t a_mask = 1; a_mask < (1u << n); ++a_mask)
        for (std::uint32_t b_mask = 1; b_mask < (1u << n); ++b_mask)
        {
            TypePair candidate{a_mask, b_mask};
            std::vector<Rat> witness;
            if (!realize_type(arr, candidate, witness))
                continue;
            Cell cell;
            cell.type = candidate;
            cell.dim = tie_graph_dimension(candidate, n);
            cell.witness = std::move(witness);
            cells.push_back(std::move(cell));
        }
    return CellComplex(arr, std::move(cells));
}

Monomial monomial_label(const Cell& cell, const Graph& g)
{
    const int n = g.non_sink_count();
    std::vector<int> exponents(n, 0);
    for (int i = 1; i <= n; ++i)
    {
        const bool in_a = cell.type.a_mask & (1u << (i - 1));
        const bool in_b = cell.type.b_mask & (1u << (i - 1));
        if (in_a && in_b)
            exponents[i - 1] = g.degree(i);
        else if (in_a || in_b)
            exponents[i - 1] = g.degree(i) - 1;
        if (exponents[i - 1] < 0)
            throw DomainError("vertex " + std::to_string(i) + " has degree 0; label undefined");
    }
    return Monomial(std::move(exponents));
}

BettiTable betti_from_complex(const CellComplex& complex, const Graph& g)
{
    if (g.non_sink_count() != complex.n())
        throw InputError("graph size does not match the complex");
    BettiTable table;
    const int ambient = complex.n() - 1;
    for (const Cell& cell : complex.cells())
    {
        const int codim = ambient - cell.dim;
        table.add(codim + 1, monomial_label(cell, g).exponents(), 1);
    }
    return table;
}

bool verify_minimality(const CellComplex& complex, const Graph& g)
{
    std::vector<Monomial> labels;
    labels.reserve(complex.cells().size());
    for (const Cell& cell : complex.cells())
        labels.push_back(monomial_label(cell, g));
    for (const auto& [face, coface] : complex.face_relation())
        if (labels[face] == labels[coface])
            return false;
    return true;
}

std::vector<Rat> clique_cone_apex(const Graph& g)
{
    const int n = g.non_sink_count();
    if (n < 1)
        throw DomainError("graph has no non-sink vertices");
    if (g.degree(0) != n)
        throw DomainError("sink is not adjacent to every vertex (not a cone)");

    // components of the complement relation on {1..n}
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v)
    {
        while (parent[v] != v)
        {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v))
                parent[find(u)] = find(v);

    std::map<int, std::vector<int>> components;
    for (int v = 1; v <= n; ++v)
        components[find(v)].push_back(v);

    std::vector<std::vector<int>> cliques;
    std::vector<int> singles;
    for (auto& [root, members] : components)
    {
        if (members.size() == 1)
        {
            singles.push_back(members[0]);
            continue;
        }
        for (size_t x = 0; x < members.size(); ++x)
            for (size_t y = x + 1; y < members.size(); ++y)
                if (g.has_edge(members[x], members[y]))
                    throw DomainError("removed edges do not form vertex-disjoint cliques");
        cliques.push_back(members);
    }
    std::sort(cliques.begin(), cliques.end());
    std::sort(singles.begin(), singles.end());

    // Clique blocks share one value; the block holding vertex n carries the
    // implicit homogeneous 0, and untouched vertices get fresh distinct values.
    std::vector<Rat> value(n + 1, 0);
    int next_value = 1;
    for (const auto& clique : cliques)
    {
        const bool holds_n = std::find(clique.begin(), clique.end(), n) != clique.end();
        if (holds_n)
            continue;  // value 0
        for (int v : clique)
            value[v] = next_value;
        ++next_value;
    }
    for (int v : singles)
    {
        if (v == n)
            continue;  // implicit 0
        value[v] = next_value;
        ++next_value;
    }

    std::vector<Rat> apex;
    for (int v = 1; v <= n - 1; ++v)
        apex.push_back(value[v]);
    return apex;
}

namespace {

// Ordered basis of a cell's direction space: indicator vectors of the
// non-pinned tie-graph components (the component of coordinate n is pinned
// by the homogeneous 0), ordered by smallest member.
std::vector<std::vector<int>> cell_components(const TypePair& type, int n)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v)
    {
        while (parent[v] != v)
        {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite_mask = [&](std::uint32_t mask)
    {
        int rep = std::countr_zero(mask);
        for (int i = rep + 1; i < n; ++i)
            if (mask & (1u << i))
                parent[find(i)] = find(rep);
    };
    unite_mask(type.a_mask);
    unite_mask(type.b_mask);
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v)
        by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> components;
    for (auto& [root, members] : by_root)
        components.push_back(members);
    std::sort(components.begin(), components.end());
    return components;
}

Rat det_rational(std::vector<std::vector<Rat>> m)
{
    const size_t dim = m.size();
    Rat det = 1;
    for (size_t k = 0; k < dim; ++k)
    {
        size_t pivot = dim;
        for (size_t r = k; r < dim; ++r)
            if (m[r][k] != 0)
            {
                pivot = r;
                break;
            }
        if (pivot == dim)
            return 0;
        if (pivot != k)
        {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t r = k + 1; r < dim; ++r)
        {
            if (m[r][k] == 0)
                continue;
            const Rat factor = m[r][k] / m[k][k];
            for (size_t c = k; c < dim; ++c)
                m[r][c] -= factor * m[k][c];
        }
    }
    return det;
}

}  // namespace

std::map<std::pair<int, int>, int> incidence_signs(const CellComplex& complex)
{
    const int n = complex.n();
    const auto& cells = complex.cells();
    std::map<std::pair<int, int>, int> signs;
    for (const auto& [face, coface] : complex.face_relation())
    {
        if (cells[coface].dim != cells[face].dim + 1)
            continue;
        const auto coface_comps = cell_components(cells[coface].type, n);
        const auto face_comps = cell_components(cells[face].type, n);

        // index the coface's non-pinned components; values of a direction
        // vector are constant on each of them
        std::vector<const std::vector<int>*> basis;
        for (const auto& comp : coface_comps)
            if (std::find(comp.begin(), comp.end(), n - 1) == comp.end())
                basis.push_back(&comp);
        auto coords = [&](auto&& value_at)
        {
            std::vector<Rat> row;
            for (const auto* comp : basis)
                row.push_back(value_at((*comp)[0]));
            return row;
        };

        const auto& wf = cells[face].witness;
        const auto& wc = cells[coface].witness;
        std::vector<std::vector<Rat>> matrix;
        matrix.push_back(coords(
            [&](int v) -> Rat
            { return (v < n - 1 ? wc[v] : Rat(0)) - (v < n - 1 ? wf[v] : Rat(0)); }));
        for (const auto& comp : face_comps)
        {
            if (std::find(comp.begin(), comp.end(), n - 1) != comp.end())
                continue;
            matrix.push_back(coords(
                [&](int v) -> Rat
                { return std::find(comp.begin(), comp.end(), v) != comp.end() ? Rat(1) : Rat(0); }));
        }
        const Rat det = det_rational(std::move(matrix));
        if (det == 0)
            throw std::logic_error("degenerate incidence orientation");
        signs[{face, coface}] = det > 0 ? 1 : -1;
    }
    return signs;
}

bool coboundary_squares_to_zero(const CellComplex& complex)
{
    const auto signs = incidence_signs(complex);
    const auto& cells = complex.cells();
    for (const auto& [face, coface] : complex.face_relation())
    {
        if (cells[coface].dim != cells[face].dim + 2)
            continue;
        int sum = 0;
        for (size_t middle = 0; middle < cells.size(); ++middle)
        {
            auto lower = signs.find({face, static_cast<int>(middle)});
            auto upper = signs.find({static_cast<int>(middle), coface});
            if (lower != signs.end() && upper != signs.end())
                sum += lower->second * upper->second;
        }
        if (sum != 0)
            return false;
    }
    return true;
}

long euler_characteristic_codim(const CellComplex& complex)
{
    const int ambient = complex.n() - 1;
    long total = 0;
    for (const Cell& cell : complex.cells())
        total += ((ambient - cell.dim) % 2 == 0) ? 1 : -1;
    return total;
}

std::vector<Rat> tropical_segment_point(const std::vector<Rat>& x, const std::vector<Rat>& y,
                                        const Rat& lambda, const Rat& mu)
{
    if (x.size() != y.size())
        throw InputError("segment endpoints must have equal length");
    std::vector<Rat> point(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        point[i] = std::max(lambda + x[i], mu + y[i]);
    return point;
}

std::string arrangement_svg(const Arrangement& arr)
{
    if (arr.n() != 3)
        throw InputError("SVG rendering is only available for n = 3 (planar) arrangements");
    const auto to_double = [](const Rat& r)
    { return numerator(r).convert_to<double>() / denominator(r).convert_to<double>(); };

    const double ax = to_double(arr.apex_a()[0]), ay = to_double(arr.apex_a()[1]);
    const double bx = to_double(arr.apex_b()[0]), by = to_double(arr.apex_b()[1]);
    const double margin = 3.0;
    const double lo_x = std::min(ax, bx) - margin, hi_x = std::max(ax, bx) + margin;
    const double lo_y = std::min(ay, by) - margin, hi_y = std::max(ay, by) + margin;
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);
    const double scale = 400.0 / span;

    auto px = [&](double x) { return (x - lo_x) * scale + 20.0; };
    // flip the vertical axis so the drawing matches the usual orientation
    auto py = [&](double y) { return (hi_y - y) * scale + 20.0; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\">\n";
    const double reach = 2.0 * span;
    const double directions[3][2] = {{1, 1}, {0, -1}, {-1, 0}};
    const char* colors[2] = {"#1f6f8b", "#b5443c"};
    const double apexes[2][2] = {{ax, ay}, {bx, by}};
    for (int h = 0; h < 2; ++h)
    {
        for (const auto& dir : directions)
            svg << "  <line x1=\"" << px(apexes[h][0]) << "\" y1=\"" << py(apexes[h][1])
                << "\" x2=\"" << px(apexes[h][0] + reach * dir[0]) << "\" y2=\""
                << py(apexes[h][1] + reach * dir[1]) << "\" stroke=\"" << colors[h]
                << "\" stroke-width=\"2\"/>\n";
        svg << "  <circle cx=\"" << px(apexes[h][0]) << "\" cy=\"" << py(apexes[h][1])
            << "\" r=\"4\" fill=\"" << colors[h] << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace parkideal
