#pragma once

#include <json.hpp>

#include "rado/columns.hpp"
#include "rado/count.hpp"
#include "rado/extremal.hpp"
#include "rado/ramsey.hpp"

namespace rado {

using json = nlohmann::json;

json int_to_json(const Int& v);       // number when it fits, decimal string otherwise
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const json& j);

json group_to_json(const GroupSpec& g);          // "Z2xZ4"
GroupSpec group_from_json(const json& j);        // string form or factor array

Ring ring_from_string(const std::string& s);     // "Z", "Q", "Z<n>"

/// Ranks or residue vectors; result sorted and deduplicated.
ElementSet element_set_from_json(const GroupSpec& g, const json& j);
json element_set_to_json(const ElementSet& s);

json certificate_to_json(const ColumnsCertificate& cert);
ColumnsCertificate certificate_from_json(const json& j);

json coloring_to_json(const Coloring& chi);
Coloring coloring_from_json(const json& j);

json basis_to_json(const SkeletonBasis& basis);
SkeletonBasis basis_from_json(const json& j, bool strict = false);

json translate_to_json(const Translate& t);
Translate translate_from_json(const GroupSpec& ambient, const json& j);

json solution_count_to_json(const SolutionCount& sc);
json reduce_report_to_json(const ReduceReport& rep);
json min_coloring_report_to_json(const MinColoringReport& rep);
json min_subset_report_to_json(const MinSubsetReport& rep);
json density_witness_to_json(const DensityWitness& w);
json fixture6_report_to_json(const Fixture6Report& rep);

} // namespace rado
