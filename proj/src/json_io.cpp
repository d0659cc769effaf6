#include "crossnest/json_io.hpp"

#include <stdexcept>

namespace crossnest {

Json shape_to_json(const Shape& s) { return Json(s.parts); }

Shape shape_from_json(const Json& j) {
    return Shape{j.get<std::vector<int>>()};
}

Json partition_to_json(const SetPartition& p) {
    return Json{{"n", p.n}, {"blocks", p.blocks}};
}

SetPartition partition_from_json(const Json& j) {
    return SetPartition(j.at("n").get<int>(),
                        j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json arcs_to_json(const ArcDiagram& d) {
    Json arcs = Json::array();
    for (const auto& [i, j] : d.arcs) arcs.push_back({i, j});
    return Json{{"n", d.n}, {"arcs", arcs}, {"enhanced", d.enhanced}};
}

ArcDiagram arcs_from_json(const Json& j) {
    ArcDiagram d;
    d.n = j.at("n").get<int>();
    d.enhanced = j.at("enhanced").get<bool>();
    for (const Json& a : j.at("arcs"))
        d.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return d;
}

Json walk_to_json(const TableauWalk& w) {
    Json shapes = Json::array();
    for (const Shape& s : w.shapes) shapes.push_back(shape_to_json(s));
    return Json{{"kind", to_string(w.kind)}, {"shapes", shapes}};
}

TableauWalk walk_from_json(const Json& j) {
    TableauWalk w;
    w.kind = walk_kind_from_string(j.at("kind").get<std::string>());
    for (const Json& s : j.at("shapes")) w.shapes.push_back(shape_from_json(s));
    validate_walk(w);
    return w;
}

Json tableau_to_json(const StandardTableau& t) { return Json(t.rows); }

StandardTableau tableau_from_json(const Json& j) {
    return StandardTableau(j.get<std::vector<std::vector<int>>>());
}

Json stat_to_json(const StatRecord& r) {
    return Json{{"cr", r.cr},
                {"ne", r.ne},
                {"enhanced_cr", r.enhanced_cr},
                {"enhanced_ne", r.enhanced_ne}};
}

Json table_to_json(const DistributionTable& t) {
    Json cells = Json::array();
    for (const auto& [cell, count] : t.cells)
        cells.push_back(Json{{"cr", cell.first},
                             {"ne", cell.second},
                             {"count", count.str()}});
    Json filter;
    if (t.filter)
        filter = Json{{"s", std::vector<int>(t.filter->s.begin(), t.filter->s.end())},
                      {"t", std::vector<int>(t.filter->t.begin(), t.filter->t.end())}};
    return Json{{"object", to_string(t.object)},
                {"n", t.n},
                {"bar", t.bar},
                {"filter", filter},
                {"cells", cells}};
}

DistributionTable table_from_json(const Json& j) {
    DistributionTable t;
    t.object = object_kind_from_string(j.at("object").get<std::string>());
    t.n = j.at("n").get<int>();
    t.bar = j.at("bar").get<bool>();
    if (!j.at("filter").is_null()) {
        TableFilter f;
        for (int v : j.at("filter").at("s")) f.s.insert(v);
        for (int v : j.at("filter").at("t")) f.t.insert(v);
        t.filter = f;
    }
    for (const Json& cell : j.at("cells"))
        t.cells[{cell.at("cr").get<int>(), cell.at("ne").get<int>()}] =
            BigInt(cell.at("count").get<std::string>());
    return t;
}

std::string table_to_csv(const DistributionTable& t) {
    std::string out = "cr,ne,count\n";
    for (const auto& [cell, count] : t.cells)
        out += std::to_string(cell.first) + "," + std::to_string(cell.second) + "," +
               count.str() + "\n";
    return out;
}

Json path_to_json(const LatticePath& p) { return Json{{"steps", format_path(p)}}; }

LatticePath path_from_json(const Json& j) {
    return parse_path(j.at("steps").get<std::string>());
}

Json poly_to_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const BigInt& c : p.c) coeffs.push_back(c.str());
    return coeffs;
}

IntPoly poly_from_json(const Json& j) {
    std::vector<BigInt> coeffs;
    for (const Json& c : j) coeffs.push_back(BigInt(c.get<std::string>()));
    return IntPoly(std::move(coeffs));
}

Json series_to_json(const RatSeries& s) {
    Json coeffs = Json::array();
    for (const BigRat& c : s.c) coeffs.push_back(c.str());
    return Json{{"order", s.order}, {"coefficients", coeffs}};
}

}  // namespace crossnest
