#include "brel/json_io.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace brel {

namespace {

json int_json(const Int& v) {
    // Coefficients in practice are tiny; fall back to strings past 2^63.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer coefficient");
}

const char* kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::Theta: return "Theta";
        case GeneratorKind::Type1: return "Type1";
        case GeneratorKind::Type2: return "Type2";
        case GeneratorKind::Type3: return "Type3";
        case GeneratorKind::Induft: return "Induft";
    }
    return "?";
}

}  // namespace

json subgroup_json(const GroupSpec& spec, const Subgroup& s) {
    json gens = json::array();
    for (Code g : s.generators()) gens.push_back(spec.decode(g));
    return json{{"order", s.order()}, {"generators", gens}, {"name", subgroup_name(spec, s)}};
}

json lattice_json(const LatticeIndex& idx) {
    json subs = json::array();
    for (const auto& s : idx.subgroups) subs.push_back(subgroup_json(idx.spec, s));
    json covers = json::array();
    for (const auto& [a, b] : idx.covers) covers.push_back(json::array({a, b}));
    return json{{"group", idx.spec.to_string()},
                {"order", idx.spec.order()},
                {"count", idx.size()},
                {"subgroups", subs},
                {"covers", covers}};
}

json element_json(const BurnsideElement& x) {
    json out = json::object();
    for (const auto& [i, c] : x.coeffs) out[std::to_string(i)] = int_json(c);
    return out;
}

BurnsideElement element_from_json(const LatticeIndex& idx, const json& j) {
    if (!j.is_object()) throw ParseError("element must be a JSON object of index -> coefficient");
    std::map<int, Int> acc;
    for (const auto& [key, value] : j.items()) {
        int pos = 0;
        try {
            pos = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("element key is not an integer index: " + key);
        }
        if (pos < 0 || pos >= idx.size()) throw ParseError("element index out of range: " + key);
        acc[pos] += int_from_json(value);
    }
    SparseVec v;
    for (auto& [i, c] : acc)
        if (c != 0) v.emplace_back(i, std::move(c));
    return burnside_from_sparse(idx, std::move(v));
}

json verify_report_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"group", rep.group},
                {"ranks",
                 {{"kGamma", rep.rank_kGamma},
                  {"kRel", rep.rank_kRel},
                  {"bG", rep.rank_bG},
                  {"cyclicGamma", rep.cyclic_gamma}}},
                {"theorem3_7", {{"equal", rep.thm37_equal}, {"index", int_json(rep.thm37_index)}}},
                {"theorem5_5",
                 {{"saturation_equal", rep.thm55_saturation_equal},
                  {"index", int_json(rep.thm55_index)}}},
                {"checks", checks},
                {"all_pass", rep.all_pass}};
}

json certificate_json(const Certificate& cert) {
    json terms = json::array();
    for (const auto& [rec, coeff] : cert.terms) {
        json prov;
        if (rec.kind == GeneratorKind::Theta || rec.kind == GeneratorKind::Induft) {
            prov = json{{"k", rec.provenance.k}, {"n", rec.provenance.n}};
        } else {
            prov = json{{"gprime", rec.provenance.gprime},
                        {"other", rec.provenance.other},
                        {"hom", rec.provenance.hom}};
        }
        terms.push_back(json{{"kind", kind_name(rec.kind)},
                             {"provenance", prov},
                             {"coefficient", int_json(coeff)},
                             {"element", element_json(rec.element)}});
    }
    return json{{"target", element_json(cert.target)}, {"terms", terms}};
}

json kahn_report_json(const KahnReport& rep) {
    json gens = json::array();
    for (const auto& [name, expansion] : rep.generators)
        gens.push_back(json{{"name", name}, {"expansion", expansion}});
    return json{{"subgroup_count", rep.subgroup_count},
                {"rank_kGamma", rep.rank_kGamma},
                {"rank_kRel", rep.rank_kRel},
                {"label_positions", rep.label_pos},
                {"generators", gens},
                {"generators_in_kernel", rep.generators_in_kernel},
                {"paper_basis_equals_kRel", rep.paper_basis_equals_kRel},
                {"kahn_basis_equals_kRel", rep.kahn_basis_equals_kRel},
                {"reconciliation_identity", rep.reconciliation_identity},
                {"pass", rep.pass}};
}

std::string sweep_csv_header() {
    return "group,gamma_order,subgroups,cyclic,rank_kGamma,rank_kRel,thm3_7_equal,thm5_5_index";
}

std::string sweep_csv_row(const VerifyReport& rep, long long gammaOrder, long long subgroupCount) {
    std::ostringstream out;
    out << rep.group << "," << gammaOrder << "," << subgroupCount << "," << rep.cyclic_gamma << ","
        << rep.rank_kGamma << "," << rep.rank_kRel << "," << (rep.thm37_equal ? 1 : 0) << ","
        << rep.thm55_index;
    return out.str();
}

}  // namespace brel
