// parkideal: exact computations around parking-function skeleton ideals.
//
// One binary, subcommand dispatch. Exit codes: 0 success, 2 input error,
// 3 resource-guard trip, so automation can tell "too big" from "wrong".

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parkideal/betti.hpp"
#include "parkideal/chipfire.hpp"
#include "parkideal/errors.hpp"
#include "parkideal/graph.hpp"
#include "parkideal/intmatrix.hpp"
#include "parkideal/json_io.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/power_ideal.hpp"
#include "parkideal/standard_monomials.hpp"
#include "parkideal/tropical.hpp"

using namespace parkideal;

namespace {

std::vector<int> parse_int_csv(const std::string& csv)
{
    std::vector<int> values;
    std::istringstream stream(csv);
    std::string field;
    while (std::getline(stream, field, ','))
    {
        try
        {
            values.push_back(std::stoi(field));
        }
        catch (const std::exception&)
        {
            throw InputError("bad integer field: '" + field + "'");
        }
    }
    if (values.empty())
        throw InputError("empty integer list");
    return values;
}

std::vector<Rat> parse_rational_csv(const std::string& csv)
{
    std::vector<Rat> values;
    std::istringstream stream(csv);
    std::string field;
    while (std::getline(stream, field, ','))
    {
        try
        {
            values.push_back(Rat(field));
        }
        catch (const std::exception&)
        {
            throw InputError("bad rational field: '" + field + "'");
        }
    }
    return values;
}

void print_ideal(const MonomialIdeal& ideal, const std::string& format)
{
    if (format == "json")
    {
        std::cout << ideal_to_json(ideal) << "\n";
    }
    else if (format == "csv")
    {
        for (const Monomial& g : ideal.generators())
            std::cout << g.to_csv() << "\n";
    }
    else
    {
        for (const Monomial& g : ideal.generators())
            std::cout << g.to_pretty() << "\n";
    }
}

struct IdealArgs {
    std::string graph;
    int k = 1;
    std::string format = "pretty";
    bool count = false;
};

// The tropical reading applies to the 1-skeleton of clique-cone graphs
// (complete graphs included); the arrangement apex comes from the graph.
BettiTable tropical_betti(const Graph& g)
{
    Arrangement arr(g.non_sink_count(), std::vector<Rat>(g.non_sink_count() - 1, 0),
                    clique_cone_apex(g));
    return betti_from_complex(enumerate_cells(arr), g);
}

int run(int argc, char** argv)
{
    CLI::App app{"exact skeleton ideals of graph parking functions"};
    app.require_subcommand(1);

    // ideal
    IdealArgs ideal_args;
    auto* cmd_ideal = app.add_subcommand("ideal", "minimal generators of the k-skeleton ideal");
    cmd_ideal->add_option("--graph", ideal_args.graph, "graph file or complete:N")->required();
    cmd_ideal->add_option("--k", ideal_args.k, "skeleton parameter")->required();
    cmd_ideal->add_option("--format", ideal_args.format, "json|pretty|csv");

    // std
    IdealArgs std_args;
    auto* cmd_std = app.add_subcommand("std", "standard monomials of the k-skeleton ideal");
    cmd_std->add_option("--graph", std_args.graph)->required();
    cmd_std->add_option("--k", std_args.k)->required();
    cmd_std->add_flag("--count", std_args.count, "print only the count");
    cmd_std->add_option("--format", std_args.format, "json|pretty|csv");

    // gf
    IdealArgs gf_args;
    int gf_inversion = 0;
    auto* cmd_gf = app.add_subcommand("gf", "degree generating function (coefficients, lowest first)");
    cmd_gf->add_option("--graph", gf_args.graph);
    cmd_gf->add_option("--k", gf_args.k);
    cmd_gf->add_option("--inversion", gf_inversion,
                       "emit the forest inversion polynomial for this n instead");

    // parking
    std::string parking_graph, parking_vector;
    bool parking_count = false;
    auto* cmd_parking = app.add_subcommand("parking", "parking-function membership or count");
    cmd_parking->add_option("--graph", parking_graph)->required();
    cmd_parking->add_option("--vector", parking_vector, "candidate sequence b1,b2,...");
    cmd_parking->add_flag("--count", parking_count, "count all parking functions");

    // betti
    std::string betti_graph, betti_method = "oracle";
    int betti_k = 1;
    auto* cmd_betti = app.add_subcommand("betti", "graded Betti numbers");
    cmd_betti->add_option("--graph", betti_graph)->required();
    cmd_betti->add_option("--k", betti_k);
    cmd_betti->add_option("--method", betti_method, "oracle|tropical|formula");

    // tropical-cells
    int cells_n = 0;
    std::string cells_graph, cells_apex_b, cells_format = "json";
    auto* cmd_cells = app.add_subcommand("tropical-cells", "cell complex of a two-hyperplane arrangement");
    cmd_cells->add_option("--n", cells_n, "ambient label count (generic staircase apex)");
    cmd_cells->add_option("--graph", cells_graph, "clique-cone graph supplying the apex");
    cmd_cells->add_option("--apex-b", cells_apex_b, "explicit second apex, rationals r1,r2,...");
    cmd_cells->add_option("--format", cells_format, "json|svg");

    // apex
    std::string apex_graph;
    auto* cmd_apex = app.add_subcommand("apex", "arrangement apex for a clique-cone graph");
    cmd_apex->add_option("--graph", apex_graph)->required();

    // chipfire
    std::string chip_graph, chip_chips, chip_model = "cluster", chip_policy = "lex";
    std::uint64_t chip_seed = 0;
    bool chip_trace = false, chip_seed_set = false;
    auto* cmd_chip = app.add_subcommand("chipfire", "stabilize a chip configuration");
    cmd_chip->add_option("--graph", chip_graph)->required();
    cmd_chip->add_option("--chips", chip_chips, "initial chips c1,c2,...")->required();
    cmd_chip->add_option("--model", chip_model, "singleton|cluster");
    cmd_chip->add_option("--policy", chip_policy, "lex|random");
    cmd_chip->add_option("--seed", chip_seed)->each([&](const std::string&) { chip_seed_set = true; });
    cmd_chip->add_flag("--trace", chip_trace, "print one line per firing");

    // hilbert
    std::string hilbert_graph;
    int hilbert_k = 1, hilbert_max_degree = -1;
    auto* cmd_hilbert = app.add_subcommand("hilbert", "graded dimensions of both skeleton quotients");
    cmd_hilbert->add_option("--graph", hilbert_graph)->required();
    cmd_hilbert->add_option("--k", hilbert_k);
    cmd_hilbert->add_option("--max-degree", hilbert_max_degree, "default: the socle bound");

    // tu-count
    std::string tu_graph;
    auto* cmd_tu = app.add_subcommand("tu-count", "weighted count of odd-unicyclic spanning subgraphs");
    cmd_tu->add_option("--graph", tu_graph)->required();

    // survey
    int survey_max = 5, survey_jobs = 1;
    auto* cmd_survey = app.add_subcommand("survey", "dimension vs determinant over all small connected graphs");
    cmd_survey->add_option("--max-vertices", survey_max);
    cmd_survey->add_option("--jobs", survey_jobs, "worker threads");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        std::cout << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (cmd_ideal->parsed())
    {
        print_ideal(skeleton_ideal(Graph::from_spec(ideal_args.graph), ideal_args.k),
                    ideal_args.format);
    }
    else if (cmd_std->parsed())
    {
        const MonomialIdeal ideal = skeleton_ideal(Graph::from_spec(std_args.graph), std_args.k);
        if (std_args.count)
        {
            std::cout << standard_monomial_count(ideal) << "\n";
        }
        else
        {
            for (const Monomial& m : standard_monomials(ideal))
                std::cout << (std_args.format == "csv" ? m.to_csv() : m.to_pretty()) << "\n";
        }
    }
    else if (cmd_gf->parsed())
    {
        if (gf_inversion > 0)
        {
            std::cout << inversion_polynomial(gf_inversion).to_coefficient_list() << "\n";
        }
        else
        {
            if (gf_args.graph.empty())
                throw InputError("gf needs --graph (or --inversion N)");
            const MonomialIdeal ideal = skeleton_ideal(Graph::from_spec(gf_args.graph), gf_args.k);
            std::cout << degree_generating_function(ideal).to_coefficient_list() << "\n";
        }
    }
    else if (cmd_parking->parsed())
    {
        const Graph g = Graph::from_spec(parking_graph);
        if (parking_count)
        {
            std::cout << standard_monomial_count(skeleton_ideal(g, g.non_sink_count() - 1))
                      << "\n";
        }
        else
        {
            if (parking_vector.empty())
                throw InputError("parking needs --vector or --count");
            std::cout << (is_g_parking(g, parse_int_csv(parking_vector)) ? "true" : "false")
                      << "\n";
        }
    }
    else if (cmd_betti->parsed())
    {
        const Graph g = Graph::from_spec(betti_graph);
        if (betti_method == "oracle")
        {
            std::cout << betti_to_json(betti_table(skeleton_ideal(g, betti_k))) << "\n";
        }
        else if (betti_method == "tropical")
        {
            if (betti_k != 1)
                throw InputError("the tropical construction covers k = 1 only");
            std::cout << betti_to_json(tropical_betti(g)) << "\n";
        }
        else if (betti_method == "formula")
        {
            const int n = g.non_sink_count();
            if (g.edge_count() != n * (n + 1) / 2)
                throw InputError("the closed formula covers complete graphs only");
            if (betti_k != 1)
                throw InputError("the closed formula covers k = 1 only");
            std::cout << "[";
            for (long i = 1; i <= n; ++i)
                std::cout << (i > 1 ? "," : "") << total_betti_formula(n, i);
            std::cout << "]\n";
        }
        else
        {
            throw InputError("unknown betti method: " + betti_method);
        }
    }
    else if (cmd_cells->parsed())
    {
        Graph labels_graph = Graph::complete(1);
        Arrangement arr(1, {}, {});
        if (!cells_graph.empty())
        {
            labels_graph = Graph::from_spec(cells_graph);
            const int n = labels_graph.non_sink_count();
            arr = Arrangement(n, std::vector<Rat>(n - 1, 0), clique_cone_apex(labels_graph));
        }
        else if (cells_n >= 1)
        {
            labels_graph = Graph::complete(cells_n + 1);
            if (!cells_apex_b.empty())
                arr = Arrangement(cells_n, std::vector<Rat>(cells_n - 1, 0),
                                  parse_rational_csv(cells_apex_b));
            else
                arr = Arrangement::standard_generic(cells_n);
        }
        else
        {
            throw InputError("tropical-cells needs --n or --graph");
        }
        if (cells_format == "svg")
            std::cout << arrangement_svg(arr);
        else
            std::cout << complex_to_json(enumerate_cells(arr), labels_graph) << "\n";
    }
    else if (cmd_apex->parsed())
    {
        const auto apex = clique_cone_apex(Graph::from_spec(apex_graph));
        for (size_t i = 0; i < apex.size(); ++i)
            std::cout << (i ? "," : "") << apex[i];
        std::cout << "\n";
    }
    else if (cmd_chip->parsed())
    {
        const Graph g = Graph::from_spec(chip_graph);
        Configuration chips;
        for (int c : parse_int_csv(chip_chips))
            chips.push_back(c);
        FiringModel model;
        if (chip_model == "singleton")
            model = FiringModel::singletons();
        else if (chip_model == "cluster")
            model = FiringModel::cluster();
        else
            throw InputError("unknown model: " + chip_model);

        if (chip_policy == "random")
        {
            if (!chip_seed_set)
                throw InputError("--policy random requires an explicit --seed");
            const Configuration stable = stabilize_random(g, chips, model, chip_seed);
            for (size_t i = 0; i < stable.size(); ++i)
                std::cout << (i ? "," : "") << stable[i];
            std::cout << "\n";
        }
        else if (chip_trace)
        {
            int step = 1;
            for (const FiringStep& fired : stabilize_trace(g, chips, model))
            {
                std::cout << "step " << step++ << ": fire {";
                for (size_t i = 0; i < fired.fired.size(); ++i)
                    std::cout << (i ? "," : "") << fired.fired[i];
                std::cout << "} -> (";
                for (size_t i = 0; i < fired.result.size(); ++i)
                    std::cout << (i ? "," : "") << fired.result[i];
                std::cout << ")\n";
            }
        }
        else
        {
            const Configuration stable = stabilize(g, chips, model);
            for (size_t i = 0; i < stable.size(); ++i)
                std::cout << (i ? "," : "") << stable[i];
            std::cout << "\n";
        }
    }
    else if (cmd_hilbert->parsed())
    {
        const Graph g = Graph::from_spec(hilbert_graph);
        const int n = g.non_sink_count();
        const int max_d = hilbert_max_degree >= 0 ? hilbert_max_degree : socle_bound(g);
        const auto monomial_gens = ideal_as_polys(skeleton_ideal(g, hilbert_k));
        const auto power_gens = power_ideal_gens(g, hilbert_k);
        std::cout << "d\tdim_M\tdim_J\tequal\n";
        for (int d = 0; d <= max_d; ++d)
        {
            const Int dim_m = hilbert_dim(n, monomial_gens, d);
            const Int dim_j = hilbert_dim(n, power_gens, d);
            std::cout << d << "\t" << dim_m << "\t" << dim_j << "\t"
                      << (dim_m == dim_j ? "yes" : "no") << "\n";
        }
    }
    else if (cmd_tu->parsed())
    {
        std::cout << tu_weighted_count(Graph::from_spec(tu_graph)) << "\n";
    }
    else if (cmd_survey->parsed())
    {
        std::cout << survey_to_tsv(inequality_survey(survey_max, survey_jobs));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try
    {
        return run(argc, argv);
    }
    catch (const ResourceError& e)
    {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    }
    catch (const InputError& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    catch (const DomainError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
