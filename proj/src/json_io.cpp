#include "parkideal/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace parkideal {

namespace {

std::string rational_string(const Rat& r)
{
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace

std::string ideal_to_json(const MonomialIdeal& I, int indent)
{
    nlohmann::ordered_json doc;
    doc["n"] = I.variable_count();
    doc["generators"] = nlohmann::json::array();
    for (const Monomial& g : I.generators())
        doc["generators"].push_back(g.exponents());
    return doc.dump(indent);
}

std::string betti_to_json(const BettiTable& table, int indent)
{
    nlohmann::ordered_json doc;
    doc["fine"] = nlohmann::json::array();
    for (const auto& [key, mult] : table.fine())
    {
        nlohmann::ordered_json row;
        row["i"] = key.first;
        row["degree"] = key.second;
        row["mult"] = mult;
        doc["fine"].push_back(row);
    }
    doc["coarse"] = nlohmann::json::array();
    for (const auto& [key, mult] : table.coarse())
    {
        nlohmann::ordered_json row;
        row["i"] = key.first;
        row["totaldeg"] = key.second;
        row["mult"] = mult;
        doc["coarse"].push_back(row);
    }
    return doc.dump(indent);
}

std::string complex_to_json(const CellComplex& complex, const Graph& g, int indent)
{
    nlohmann::ordered_json doc;
    doc["n"] = complex.n();
    doc["apex_a"] = nlohmann::json::array();
    doc["apex_b"] = nlohmann::json::array();
    for (const Rat& r : complex.arrangement().apex_a())
        doc["apex_a"].push_back(rational_string(r));
    for (const Rat& r : complex.arrangement().apex_b())
        doc["apex_b"].push_back(rational_string(r));
    doc["cells"] = nlohmann::json::array();
    for (const Cell& cell : complex.cells())
    {
        nlohmann::ordered_json row;
        row["Ta"] = mask_to_labels(cell.type.a_mask);
        row["Tb"] = mask_to_labels(cell.type.b_mask);
        row["dim"] = cell.dim;
        row["label"] = monomial_label(cell, g).exponents();
        row["witness"] = nlohmann::json::array();
        for (const Rat& r : cell.witness)
            row["witness"].push_back(rational_string(r));
        doc["cells"].push_back(row);
    }
    doc["face_relation"] = nlohmann::json::array();
    for (const auto& [face, coface] : complex.face_relation())
        doc["face_relation"].push_back({face, coface});
    return doc.dump(indent);
}

}  // namespace parkideal
