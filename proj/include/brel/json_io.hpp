#pragma once

#include <string>

#include <json.hpp>

#include "brel/burnside.hpp"
#include "brel/relations.hpp"

namespace brel {

using nlohmann::json;

json subgroup_json(const GroupSpec& spec, const Subgroup& s);
json lattice_json(const LatticeIndex& idx);

/// Sparse map {"subgroup_index": coefficient}.
json element_json(const BurnsideElement& x);
BurnsideElement element_from_json(const LatticeIndex& idx, const json& j);

json verify_report_json(const VerifyReport& rep);
json certificate_json(const Certificate& cert);
json kahn_report_json(const KahnReport& rep);

std::string sweep_csv_header();
std::string sweep_csv_row(const VerifyReport& rep, long long gammaOrder, long long subgroupCount);

}  // namespace brel
