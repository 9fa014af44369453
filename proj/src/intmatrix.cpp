#include "parkideal/intmatrix.hpp"

#include "parkideal/errors.hpp"

namespace parkideal {

IntMatrix IntMatrix::identity(int dim)
{
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m.at(i, i) = 1;
    return m;
}

Int det_exact(const IntMatrix& input)
{
    const int n = input.dim();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    int sign = 1;
    Int previous_pivot = 1;
    for (int k = 0; k + 1 < n; ++k)
    {
        if (m.at(k, k) == 0)
        {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0)
                {
                    pivot_row = r;
                    break;
                }
            if (pivot_row < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
        {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / previous_pivot;
            m.at(i, k) = 0;
        }
        previous_pivot = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

IntMatrix laplacian_like_minor(const Graph& g, int deleted, int off_diagonal_sign)
{
    const int nv = g.vertex_count();
    IntMatrix m(nv - 1);
    auto index = [deleted](int v) { return v < deleted ? v : v - 1; };
    for (int v = 0; v < nv; ++v)
    {
        if (v == deleted)
            continue;
        m.at(index(v), index(v)) = g.degree(v);
        for (int w : g.neighbors(v))
            if (w != deleted)
                m.at(index(v), index(w)) = off_diagonal_sign;
    }
    return m;
}

}  // namespace

IntMatrix reduced_laplacian(const Graph& g)
{
    return laplacian_like_minor(g, 0, -1);
}

IntMatrix reduced_signless_laplacian(const Graph& g)
{
    return laplacian_like_minor(g, 0, +1);
}

IntMatrix laplacian_minor(const Graph& g, int deleted)
{
    if (deleted < 0 || deleted >= g.vertex_count())
        throw InputError("laplacian_minor: vertex out of range");
    return laplacian_like_minor(g, deleted, -1);
}

Int spanning_tree_count(const Graph& g)
{
    return det_exact(reduced_laplacian(g));
}

}  // namespace parkideal
