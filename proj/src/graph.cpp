#include "parkideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "parkideal/errors.hpp"

namespace parkideal {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count)
{
    if (vertex_count < 1)
        throw InputError("graph needs at least one vertex (the sink)");

    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges)
    {
        if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count)
            throw InputError("edge endpoint out of range: " + std::to_string(i) + " " +
                             std::to_string(j));
        if (i == j)
            throw InputError("loop at vertex " + std::to_string(i));
        if (i > j)
            std::swap(i, j);
        if (!seen.insert({i, j}).second)
            throw InputError("duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    }
    edges_.assign(seen.begin(), seen.end());

    adjacency_.resize(vertex_count);
    adjacency_mask_.assign(vertex_count, 0);
    sink_adjacent_.assign(vertex_count, false);
    for (auto [i, j] : edges_)
    {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
        if (i == 0)
            sink_adjacent_[j] = true;
        else
            adjacency_mask_[j] |= (1u << (i - 1));
        if (j == 0)
            sink_adjacent_[i] = true;  // unreachable since i < j, kept for clarity
        else
            adjacency_mask_[i] |= (1u << (j - 1));
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

Graph Graph::complete(int vertex_count)
{
    if (vertex_count < 1)
        throw InputError("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j)
            edges.push_back({i, j});
    return Graph(vertex_count, edges);
}

Graph Graph::parse_text(const std::string& text)
{
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line))
    {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream fields(line);
        long i = -1, j = -1;
        if (!(fields >> i))
            continue;  // blank or comment-only line
        if (!(fields >> j))
            throw InputError("line " + std::to_string(line_number) + ": expected two vertex labels");
        std::string junk;
        if (fields >> junk)
            throw InputError("line " + std::to_string(line_number) + ": trailing tokens");
        if (i < 0 || j < 0)
            throw InputError("line " + std::to_string(line_number) + ": negative vertex label");
        max_label = std::max(max_label, static_cast<int>(std::max(i, j)));
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return Graph(max_label + 1, edges);
}

Graph Graph::from_spec(const std::string& spec)
{
    const std::string prefix = "complete:";
    if (spec.rfind(prefix, 0) == 0)
    {
        int count = 0;
        try
        {
            size_t pos = 0;
            count = std::stoi(spec.substr(prefix.size()), &pos);
            if (pos != spec.size() - prefix.size())
                throw std::invalid_argument("trailing");
        }
        catch (const std::exception&)
        {
            throw InputError("bad complete-graph spec: " + spec);
        }
        return complete(count);
    }
    std::ifstream file(spec);
    if (!file)
        throw InputError("cannot open graph file: " + spec);
    std::ostringstream contents;
    contents << file.rdbuf();
    return parse_text(contents.str());
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= vertex_count_)
        throw InputError("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int i, int j) const
{
    check_vertex(i);
    check_vertex(j);
    if (i == j)
        return false;
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

const std::vector<int>& Graph::neighbors(int v) const
{
    check_vertex(v);
    return adjacency_[v];
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

std::uint32_t Graph::neighbor_mask(int v) const
{
    check_vertex(v);
    return adjacency_mask_[v];
}

int Graph::out_degree(const std::vector<int>& sigma, int i) const
{
    std::uint32_t mask = 0;
    for (int v : sigma)
    {
        if (v < 1 || v >= vertex_count_)
            throw InputError("sigma member out of range: " + std::to_string(v));
        mask |= (1u << (v - 1));
    }
    if (mask == 0)
        throw InputError("sigma must be nonempty");
    return out_degree(mask, i);
}

int Graph::out_degree(std::uint32_t sigma_mask, int i) const
{
    check_vertex(i);
    if (i == 0 || (sigma_mask & (1u << (i - 1))) == 0)
        throw InputError("vertex " + std::to_string(i) + " is not a member of sigma");
    int count = std::popcount(adjacency_mask_[i] & ~sigma_mask);
    if (sink_adjacent_[i])
        ++count;
    return count;
}

bool Graph::is_connected() const
{
    std::vector<bool> visited(vertex_count_, false);
    std::vector<int> stack = {0};
    visited[0] = true;
    int reached = 1;
    while (!stack.empty())
    {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v])
            if (!visited[w])
            {
                visited[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertex_count_;
}

std::string Graph::to_text() const
{
    std::ostringstream out;
    for (auto [i, j] : edges_)
        out << i << " " << j << "\n";
    return out.str();
}

namespace {

// Union-find with parity relative to the root; detects odd cycles on the fly.
struct ParityForest {
    std::vector<int> parent;
    std::vector<int> parity;

    explicit ParityForest(int size) : parent(size), parity(size, 0)
    {
        for (int v = 0; v < size; ++v)
            parent[v] = v;
    }

    std::pair<int, int> find(int v)
    {
        const int query = v;
        int p = 0;
        int root = v;
        while (parent[root] != root)
        {
            p ^= parity[root];
            root = parent[root];
        }
        // path compression, rewriting parities relative to the root
        while (parent[v] != root)
        {
            int next = parent[v];
            int next_parity = parity[v];
            parent[v] = root;
            parity[v] = p;
            p ^= next_parity;
            v = next;
        }
        return {root, query == root ? 0 : parity[query]};
    }
};

}  // namespace

Int tu_weighted_count(const Graph& g)
{
    const int m = g.edge_count();
    if (m > 24)
        throw ResourceError("tu_weighted_count: edge count " + std::to_string(m) +
                            " exceeds the 2^|E| sweep guard (24)");
    const int nv = g.vertex_count();
    const auto& edges = g.edges();

    Int total = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    {
        ParityForest forest(nv);
        std::vector<int> comp_edges(nv, 0);
        std::vector<bool> odd_cycle(nv, false);
        bool valid = true;
        for (int e = 0; e < m && valid; ++e)
        {
            if (!(mask & (1u << e)))
                continue;
            auto [u, v] = edges[e];
            auto [ru, pu] = forest.find(u);
            auto [rv, pv] = forest.find(v);
            if (ru != rv)
            {
                forest.parent[ru] = rv;
                forest.parity[ru] = pu ^ pv ^ 1;
                comp_edges[rv] += comp_edges[ru] + 1;
                odd_cycle[rv] = odd_cycle[rv] || odd_cycle[ru];
            }
            else
            {
                comp_edges[ru] += 1;
                if (pu == pv)
                    odd_cycle[ru] = true;
            }
        }
        if (!valid)
            continue;

        std::vector<int> comp_vertices(nv, 0);
        for (int v = 0; v < nv; ++v)
            comp_vertices[forest.find(v).first] += 1;

        int unicyclic = 0;
        int sink_root = forest.find(0).first;
        for (int r = 0; r < nv && valid; ++r)
        {
            if (comp_vertices[r] == 0)
                continue;
            if (r == sink_root)
            {
                // the sink component must be a tree
                valid = comp_edges[r] == comp_vertices[r] - 1;
            }
            else
            {
                // every other component must be unicyclic with an odd cycle
                valid = comp_edges[r] == comp_vertices[r] && odd_cycle[r];
                if (valid)
                    ++unicyclic;
            }
        }
        if (valid)
            total += int_pow(4, unicyclic);
    }
    return total;
}

Int spanning_tree_count_brute_force(const Graph& g)
{
    const int m = g.edge_count();
    if (m > 20)
        throw ResourceError("spanning tree enumeration guard: |E| <= 20");
    const int nv = g.vertex_count();
    const auto& edges = g.edges();
    Int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    {
        if (std::popcount(mask) != nv - 1)
            continue;
        ParityForest forest(nv);
        bool acyclic = true;
        for (int e = 0; e < m && acyclic; ++e)
        {
            if (!(mask & (1u << e)))
                continue;
            auto [u, v] = edges[e];
            auto [ru, pu] = forest.find(u);
            auto [rv, pv] = forest.find(v);
            if (ru == rv)
                acyclic = false;
            else
            {
                forest.parent[ru] = rv;
                forest.parity[ru] = pu ^ pv ^ 1;
            }
        }
        if (acyclic)
            ++count;  // nv-1 edges and no cycle = spanning tree
    }
    return count;
}

}  // namespace parkideal
