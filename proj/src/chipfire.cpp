#include "parkideal/chipfire.hpp"

#include <bit>
#include <random>

#include "parkideal/errors.hpp"
#include "parkideal/tropical.hpp"  // mask <-> label helpers

namespace parkideal {

FiringModel FiringModel::explicit_family(const std::vector<std::vector<int>>& sets, int n)
{
    FiringModel model{Kind::Explicit, {}};
    for (const auto& set : sets)
    {
        if (set.empty())
            throw InputError("allowed firing sets must be nonempty");
        model.allowed.push_back(labels_to_mask(set, n));
    }
    return model;
}

namespace {

void check_configuration(const Graph& g, const Configuration& c)
{
    if (static_cast<int>(c.size()) != g.non_sink_count())
        throw InputError("configuration length must equal the non-sink vertex count");
    for (long long chips : c)
        if (chips < 0)
            throw InputError("chip counts must be nonnegative");
}

template <typename Visit>
void for_each_allowed(const FiringModel& model, int n, Visit&& visit)
{
    switch (model.kind)
    {
        case FiringModel::Kind::Singletons:
            for (int i = 0; i < n; ++i)
                if (!visit(1u << i))
                    return;
            break;
        case FiringModel::Kind::AllSubsets:
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
                if (!visit(mask))
                    return;
            break;
        case FiringModel::Kind::Explicit:
            for (std::uint32_t mask : model.allowed)
                if (!visit(mask))
                    return;
            break;
    }
}

}  // namespace

bool can_fire(const Graph& g, const Configuration& c, std::uint32_t sigma_mask)
{
    check_configuration(g, c);
    const int n = g.non_sink_count();
    if (sigma_mask == 0 || sigma_mask >= (1u << n))
        throw InputError("firing set must be a nonempty subset of {1..n}");
    for (int i = 1; i <= n; ++i)
        if ((sigma_mask & (1u << (i - 1))) && c[i - 1] < g.out_degree(sigma_mask, i))
            return false;
    return true;
}

Configuration fire_set(const Graph& g, const Configuration& c, std::uint32_t sigma_mask)
{
    check_configuration(g, c);
    const int n = g.non_sink_count();
    if (sigma_mask == 0 || sigma_mask >= (1u << n))
        throw InputError("firing set must be a nonempty subset of {1..n}");
    Configuration result = c;
    for (int i = 1; i <= n; ++i)
    {
        if (!(sigma_mask & (1u << (i - 1))))
            continue;
        const int sent = g.out_degree(sigma_mask, i);
        if (c[i - 1] < sent)
            throw InputError("vertex " + std::to_string(i) + " holds " +
                             std::to_string(c[i - 1]) + " chips but firing needs " +
                             std::to_string(sent));
        result[i - 1] -= sent;
    }
    for (int j = 1; j <= n; ++j)
    {
        if (sigma_mask & (1u << (j - 1)))
            continue;
        result[j - 1] += std::popcount(g.neighbor_mask(j) & sigma_mask);
    }
    return result;
}

Configuration fire_set(const Graph& g, const Configuration& c, const std::vector<int>& sigma)
{
    return fire_set(g, c, labels_to_mask(sigma, g.non_sink_count()));
}

bool is_stable(const Graph& g, const Configuration& c, const FiringModel& model)
{
    check_configuration(g, c);
    bool stable = true;
    for_each_allowed(model, g.non_sink_count(),
                     [&](std::uint32_t mask)
                     {
                         if (can_fire(g, c, mask))
                         {
                             stable = false;
                             return false;
                         }
                         return true;
                     });
    return stable;
}

namespace {

// All valid allowed sets, in lexicographic order of their sorted vertex lists.
std::vector<std::uint32_t> valid_sets(const Graph& g, const Configuration& c,
                                      const FiringModel& model)
{
    std::vector<std::uint32_t> valid;
    for_each_allowed(model, g.non_sink_count(),
                     [&](std::uint32_t mask)
                     {
                         if (can_fire(g, c, mask))
                             valid.push_back(mask);
                         return true;
                     });
    std::sort(valid.begin(), valid.end(),
              [](std::uint32_t x, std::uint32_t y)
              { return mask_to_labels(x) < mask_to_labels(y); });
    return valid;
}

void check_ready(const Graph& g, const Configuration& c)
{
    check_configuration(g, c);
    if (!g.is_connected())
        throw DomainError("stabilization requires a connected graph");
}

}  // namespace

Configuration stabilize(const Graph& g, Configuration c, const FiringModel& model)
{
    check_ready(g, c);
    while (true)
    {
        auto valid = valid_sets(g, c, model);
        if (valid.empty())
            return c;
        c = fire_set(g, c, valid.front());
    }
}

std::vector<FiringStep> stabilize_trace(const Graph& g, Configuration c, const FiringModel& model)
{
    check_ready(g, c);
    std::vector<FiringStep> steps;
    while (true)
    {
        auto valid = valid_sets(g, c, model);
        if (valid.empty())
            return steps;
        c = fire_set(g, c, valid.front());
        steps.push_back({mask_to_labels(valid.front()), c});
    }
}

Configuration stabilize_random(const Graph& g, Configuration c, const FiringModel& model,
                               std::uint64_t seed)
{
    check_ready(g, c);
    std::mt19937_64 rng(seed);
    while (true)
    {
        auto valid = valid_sets(g, c, model);
        if (valid.empty())
            return c;
        std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
        c = fire_set(g, c, valid[pick(rng)]);
    }
}

}  // namespace parkideal
