#pragma once

#include <json.hpp>

#include <string>

#include "crossnest/counting.hpp"
#include "crossnest/paths.hpp"
#include "crossnest/poly.hpp"
#include "crossnest/setpart.hpp"
#include "crossnest/stats.hpp"
#include "crossnest/walks.hpp"
#include "crossnest/young.hpp"

namespace crossnest {

using Json = nlohmann::json;

// Shapes are arrays of parts; big integers are decimal strings; rationals
// are "p/q" (or plain "p") strings; polynomial coefficients go constant
// term first.

Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

Json partition_to_json(const SetPartition& p);
SetPartition partition_from_json(const Json& j);

Json arcs_to_json(const ArcDiagram& d);
ArcDiagram arcs_from_json(const Json& j);

Json walk_to_json(const TableauWalk& w);
TableauWalk walk_from_json(const Json& j);

Json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);

Json stat_to_json(const StatRecord& r);

Json table_to_json(const DistributionTable& t);
DistributionTable table_from_json(const Json& j);
std::string table_to_csv(const DistributionTable& t);  // header cr,ne,count

Json path_to_json(const LatticePath& p);
LatticePath path_from_json(const Json& j);

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json series_to_json(const RatSeries& s);

}  // namespace crossnest
