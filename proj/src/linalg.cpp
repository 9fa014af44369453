#include "parkideal/linalg.hpp"

#include <algorithm>

namespace parkideal {

int rank_rational(std::vector<std::vector<Rat>>& rows)
{
    if (rows.empty())
        return 0;
    const size_t cols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col)
    {
        // pick the structurally cheapest pivot: fewest nonzeros in the row
        size_t best = rows.size();
        size_t best_nonzeros = 0;
        for (size_t r = pivot_row; r < rows.size(); ++r)
        {
            if (rows[r][col] == 0)
                continue;
            size_t nonzeros = 0;
            for (size_t c = col; c < cols; ++c)
                if (rows[r][c] != 0)
                    ++nonzeros;
            if (best == rows.size() || nonzeros < best_nonzeros)
            {
                best = r;
                best_nonzeros = nonzeros;
            }
        }
        if (best == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[best]);
        const Rat pivot = rows[pivot_row][col];
        for (size_t r = pivot_row + 1; r < rows.size(); ++r)
        {
            if (rows[r][col] == 0)
                continue;
            const Rat factor = rows[r][col] / pivot;
            for (size_t c = col; c < cols; ++c)
                if (rows[pivot_row][c] != 0)
                    rows[r][c] -= factor * rows[pivot_row][c];
            rows[r][col] = 0;
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p)
{
    if (rows.empty())
        return 0;
    const size_t cols = rows[0].size();
    auto mod_inverse = [p](std::uint32_t a)
    {
        // Fermat: a^(p-2) mod p
        std::uint64_t result = 1, base = a, exp = p - 2;
        while (exp)
        {
            if (exp & 1)
                result = result * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    };
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col)
    {
        size_t found = rows.size();
        for (size_t r = pivot_row; r < rows.size(); ++r)
            if (rows[r][col] != 0)
            {
                found = r;
                break;
            }
        if (found == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[found]);
        const std::uint64_t inv = mod_inverse(rows[pivot_row][col]);
        for (size_t r = pivot_row + 1; r < rows.size(); ++r)
        {
            if (rows[r][col] == 0)
                continue;
            const std::uint64_t factor = rows[r][col] * inv % p;
            for (size_t c = col; c < cols; ++c)
            {
                std::uint64_t sub = factor * rows[pivot_row][c] % p;
                rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + p - sub) % p);
            }
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

std::vector<std::vector<std::uint32_t>> reduce_mod_p(const std::vector<std::vector<Int>>& rows,
                                                     std::uint32_t p)
{
    std::vector<std::vector<std::uint32_t>> reduced(rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
    {
        reduced[r].resize(rows[r].size());
        for (size_t c = 0; c < rows[r].size(); ++c)
        {
            Int value = rows[r][c] % p;
            if (value < 0)
                value += p;
            reduced[r][c] = static_cast<std::uint32_t>(value);
        }
    }
    return reduced;
}

}  // namespace parkideal
