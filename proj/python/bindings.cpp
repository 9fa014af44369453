#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "parkideal/betti.hpp"
#include "parkideal/chipfire.hpp"
#include "parkideal/errors.hpp"
#include "parkideal/graph.hpp"
#include "parkideal/intmatrix.hpp"
#include "parkideal/monomial.hpp"
#include "parkideal/power_ideal.hpp"
#include "parkideal/qpolynomial.hpp"
#include "parkideal/standard_monomials.hpp"
#include "parkideal/tropical.hpp"

namespace py = pybind11;
using namespace parkideal;

namespace {

py::int_ to_py(const Int& value)
{
    std::ostringstream out;
    out << value;
    return py::int_(py::str(out.str()));
}

std::string to_str(const Rat& value)
{
    std::ostringstream out;
    out << value;
    return out.str();
}

Rat rat_from_str(const std::string& text)
{
    try
    {
        return Rat(text);
    }
    catch (const std::exception&)
    {
        throw InputError("bad rational: '" + text + "'");
    }
}

std::vector<Rat> rats_from_strs(const std::vector<std::string>& texts)
{
    std::vector<Rat> values;
    for (const auto& t : texts)
        values.push_back(rat_from_str(t));
    return values;
}

py::list exponent_rows(const std::vector<Monomial>& monomials)
{
    py::list rows;
    for (const Monomial& m : monomials)
        rows.append(m.exponents());
    return rows;
}

py::list coefficients(const QPolynomial& p)
{
    py::list values;
    for (const Int& c : p.coefficients())
        values.append(to_py(c));
    return values;
}

py::list betti_fine(const BettiTable& table)
{
    py::list rows;
    for (const auto& [key, mult] : table.fine())
        rows.append(py::make_tuple(key.first, key.second, mult));
    return rows;
}

py::dict cell_dict(const Cell& cell, const Graph& g)
{
    py::dict d;
    d["Ta"] = mask_to_labels(cell.type.a_mask);
    d["Tb"] = mask_to_labels(cell.type.b_mask);
    d["dim"] = cell.dim;
    d["label"] = monomial_label(cell, g).exponents();
    py::list witness;
    for (const Rat& r : cell.witness)
        witness.append(to_str(r));
    d["witness"] = witness;
    return d;
}

FiringModel model_from_name(const std::string& name)
{
    if (name == "singleton")
        return FiringModel::singletons();
    if (name == "cluster")
        return FiringModel::cluster();
    throw InputError("unknown firing model: " + name);
}

}  // namespace

PYBIND11_MODULE(_parkideal, m)
{
    m.doc() = "exact skeleton ideals of graph parking functions";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_static("complete", &Graph::complete)
        .def_static("parse_text", &Graph::parse_text)
        .def_static("from_spec", &Graph::from_spec)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("non_sink_count", &Graph::non_sink_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", &Graph::neighbors)
        .def("is_connected", &Graph::is_connected)
        .def("d_sigma",
             [](const Graph& g, const std::vector<int>& sigma, int i)
             { return g.out_degree(sigma, i); })
        .def("to_text", &Graph::to_text);

    m.def("reduced_laplacian",
          [](const Graph& g)
          {
              IntMatrix matrix = reduced_laplacian(g);
              py::list rows;
              for (int i = 0; i < matrix.dim(); ++i)
              {
                  py::list row;
                  for (int j = 0; j < matrix.dim(); ++j)
                      row.append(to_py(matrix.at(i, j)));
                  rows.append(row);
              }
              return rows;
          });
    m.def("det_reduced_laplacian", [](const Graph& g) { return to_py(spanning_tree_count(g)); });
    m.def("det_reduced_signless_laplacian",
          [](const Graph& g) { return to_py(det_exact(reduced_signless_laplacian(g))); });
    m.def("spanning_tree_count", [](const Graph& g) { return to_py(spanning_tree_count(g)); });
    m.def("tu_weighted_count", [](const Graph& g) { return to_py(tu_weighted_count(g)); });

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init(
                 [](int n, const std::vector<std::vector<int>>& gens)
                 {
                     std::vector<Monomial> monomials;
                     for (const auto& e : gens)
                         monomials.push_back(Monomial(e));
                     return MonomialIdeal(n, monomials);
                 }),
             py::arg("variable_count"), py::arg("generators"))
        .def_property_readonly("variable_count", &MonomialIdeal::variable_count)
        .def("generators", [](const MonomialIdeal& I) { return exponent_rows(I.generators()); })
        .def("contains",
             [](const MonomialIdeal& I, const std::vector<int>& e)
             { return I.contains(Monomial(e)); })
        .def("is_artinian", &MonomialIdeal::is_artinian);

    m.def("m_sigma", [](const Graph& g, const std::vector<int>& sigma)
          { return m_sigma(g, sigma).exponents(); });
    m.def("skeleton_ideal", &skeleton_ideal, py::arg("graph"), py::arg("k"));
    m.def("minimalize",
          [](const std::vector<std::vector<int>>& gens)
          {
              std::vector<Monomial> monomials;
              for (const auto& e : gens)
                  monomials.push_back(Monomial(e));
              return exponent_rows(minimalize(monomials));
          });

    m.def("standard_monomials",
          [](const MonomialIdeal& I) { return exponent_rows(standard_monomials(I)); });
    m.def("standard_monomial_count",
          [](const MonomialIdeal& I) { return to_py(standard_monomial_count(I)); });
    m.def("degree_generating_function",
          [](const MonomialIdeal& I) { return coefficients(degree_generating_function(I)); });
    m.def("count_formula_one_skeleton",
          [](long n) { return to_py(count_formula_one_skeleton(n)); });
    m.def("is_g_parking", &is_g_parking);
    m.def("u_parking_count", [](const std::vector<int>& u) { return to_py(u_parking_count(u)); });
    m.def("skeleton_u_vector", &skeleton_u_vector);
    m.def("yan_formula", [](long n, long k) { return to_py(yan_formula(n, k)); });
    m.def("inversion_polynomial", [](int n) { return coefficients(inversion_polynomial(n)); });

    py::class_<BettiTable>(m, "BettiTable")
        .def("fine", &betti_fine)
        .def("coarse",
             [](const BettiTable& table)
             {
                 py::list rows;
                 for (const auto& [key, mult] : table.coarse())
                     rows.append(py::make_tuple(key.first, key.second, mult));
                 return rows;
             })
        .def("totals", &BettiTable::totals)
        .def(py::self == py::self);

    m.def("betti_table", [](const MonomialIdeal& I) { return betti_table(I); });
    m.def("total_betti_formula", [](long n, long i) { return to_py(total_betti_formula(n, i)); });
    m.def("first_betti_graph_formula",
          [](const Graph& g) { return to_py(first_betti_graph_formula(g)); });

    py::class_<Arrangement>(m, "Arrangement")
        .def(py::init(
                 [](int n, const std::vector<std::string>& a, const std::vector<std::string>& b)
                 { return Arrangement(n, rats_from_strs(a), rats_from_strs(b)); }),
             py::arg("n"), py::arg("apex_a"), py::arg("apex_b"))
        .def_static("standard_generic", &Arrangement::standard_generic)
        .def_property_readonly("n", &Arrangement::n);

    py::class_<CellComplex>(m, "CellComplex")
        .def_property_readonly("n", &CellComplex::n)
        .def("cells",
             [](const CellComplex& complex, const Graph& g)
             {
                 py::list rows;
                 for (const Cell& cell : complex.cells())
                     rows.append(cell_dict(cell, g));
                 return rows;
             })
        .def("cell_count", [](const CellComplex& complex) { return complex.cells().size(); })
        .def("face_relation", &CellComplex::face_relation)
        .def("maximal_cells", &CellComplex::maximal_cells)
        .def("is_generic", &CellComplex::is_generic);

    m.def("type_of_point",
          [](const Arrangement& arr, const std::vector<std::string>& x)
          {
              TypePair type = type_of_point(arr, rats_from_strs(x));
              return py::make_tuple(mask_to_labels(type.a_mask), mask_to_labels(type.b_mask));
          });
    m.def("enumerate_cells", &enumerate_cells);
    m.def("betti_from_complex", &betti_from_complex);
    m.def("verify_minimality", &verify_minimality);
    m.def("clique_cone_apex",
          [](const Graph& g)
          {
              py::list values;
              for (const Rat& r : clique_cone_apex(g))
                  values.append(to_str(r));
              return values;
          });
    m.def("coboundary_squares_to_zero", &coboundary_squares_to_zero);
    m.def("euler_characteristic_codim", &euler_characteristic_codim);

    m.def("fire_set",
          [](const Graph& g, const Configuration& c, const std::vector<int>& sigma)
          { return fire_set(g, c, sigma); });
    m.def("is_stable", [](const Graph& g, const Configuration& c, const std::string& model)
          { return is_stable(g, c, model_from_name(model)); });
    m.def("stabilize", [](const Graph& g, const Configuration& c, const std::string& model)
          { return stabilize(g, c, model_from_name(model)); });
    m.def("stabilize_random",
          [](const Graph& g, const Configuration& c, const std::string& model, std::uint64_t seed)
          { return stabilize_random(g, c, model_from_name(model), seed); });

    m.def("skeleton_hilbert_dims",
          [](const Graph& g, int k, int d)
          {
              const int n = g.non_sink_count();
              const Int dim_m = hilbert_dim(n, ideal_as_polys(skeleton_ideal(g, k)), d);
              const Int dim_j = hilbert_dim(n, power_ideal_gens(g, k), d);
              return py::make_tuple(to_py(dim_m), to_py(dim_j));
          },
          "graded dimensions (dim S/M^(k)_d, dim S/J^(k)_d)");
    m.def("skeleton_ideals_graded_equal",
          [](const Graph& g, int k, int max_d)
          {
              if (max_d < 0)
                  max_d = socle_bound(g);
              return graded_ideal_equal(g.non_sink_count(),
                                        ideal_as_polys(skeleton_ideal(g, k)),
                                        power_ideal_gens(g, k), max_d);
          },
          py::arg("graph"), py::arg("k"), py::arg("max_d") = -1);
    m.def("socle_bound", &socle_bound);
}
