#include "parkideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "parkideal/errors.hpp"
#include "parkideal/linalg.hpp"

namespace parkideal {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces)
    : vertex_count_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > 31)
        throw InputError("simplicial complex vertex count out of range");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    faces_by_size_.assign(vertex_count + 1, {});
    for (std::uint32_t f : faces)
    {
        if (f >= (1u << vertex_count))
            throw InputError("face outside the vertex set");
        faces_by_size_[std::popcount(f)].push_back(f);
    }
    while (!faces_by_size_.empty() && faces_by_size_.back().empty())
        faces_by_size_.pop_back();
    if (!faces_by_size_.empty() && faces_by_size_[0].empty())
        throw InputError("nonempty complex must contain the empty face");
}

int SimplicialComplex::face_count(int size) const
{
    if (size < 0 || size >= static_cast<int>(faces_by_size_.size()))
        return 0;
    return static_cast<int>(faces_by_size_[size].size());
}

std::vector<std::vector<Rat>> SimplicialComplex::boundary_matrix(int size) const
{
    // rows: faces of cardinality size-1, cols: faces of cardinality size
    std::vector<std::vector<Rat>> matrix;
    if (face_count(size) == 0 || face_count(size - 1) == 0)
        return matrix;
    const auto& domain = faces_by_size_[size];
    const auto& codomain = faces_by_size_[size - 1];
    std::map<std::uint32_t, int> row_index;
    for (size_t r = 0; r < codomain.size(); ++r)
        row_index[codomain[r]] = static_cast<int>(r);

    matrix.assign(codomain.size(), std::vector<Rat>(domain.size(), 0));
    for (size_t c = 0; c < domain.size(); ++c)
    {
        std::uint32_t face = domain[c];
        int position = 0;
        for (int v = 0; v < vertex_count_; ++v)
        {
            if (!(face & (1u << v)))
                continue;
            std::uint32_t sub = face & ~(1u << v);
            matrix[row_index.at(sub)][c] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return matrix;
}

std::vector<int> SimplicialComplex::reduced_betti_rational() const
{
    std::vector<int> betti;
    if (is_void())
        return betti;
    const int max_size = static_cast<int>(faces_by_size_.size()) - 1;
    std::vector<int> ranks(max_size + 2, 0);  // ranks[s] = rank of boundary from size s
    for (int s = 1; s <= max_size; ++s)
    {
        auto matrix = boundary_matrix(s);
        ranks[s] = rank_rational(matrix);
    }
    betti.resize(max_size + 1, 0);
    for (int s = 0; s <= max_size; ++s)
        betti[s] = face_count(s) - ranks[s] - ranks[s + 1];
    return betti;
}

std::vector<int> SimplicialComplex::reduced_betti_mod_p(std::uint32_t p) const
{
    std::vector<int> betti;
    if (is_void())
        return betti;
    const int max_size = static_cast<int>(faces_by_size_.size()) - 1;
    std::vector<int> ranks(max_size + 2, 0);
    for (int s = 1; s <= max_size; ++s)
    {
        auto rational = boundary_matrix(s);
        std::vector<std::vector<std::uint32_t>> reduced(rational.size());
        for (size_t r = 0; r < rational.size(); ++r)
        {
            reduced[r].resize(rational[r].size());
            for (size_t c = 0; c < rational[r].size(); ++c)
            {
                // boundary entries are 0 or +-1
                if (rational[r][c] == 0)
                    reduced[r][c] = 0;
                else if (rational[r][c] == 1)
                    reduced[r][c] = 1;
                else
                    reduced[r][c] = p - 1;
            }
        }
        ranks[s] = rank_mod_p(reduced, p);
    }
    betti.resize(max_size + 1, 0);
    for (int s = 0; s <= max_size; ++s)
        betti[s] = face_count(s) - ranks[s] - ranks[s + 1];
    return betti;
}

}  // namespace parkideal
