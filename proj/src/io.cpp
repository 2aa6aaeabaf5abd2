#include "pzero/io.hpp"

#include <sstream>

#include "pzero/common.hpp"

namespace pzero {

ordered_json field_element_json(int r, std::uint32_t val) {
    return ordered_json{{"r", r}, {"val", val}};
}

ordered_json group_json(const PermGroup& g) {
    ordered_json j;
    j["degree"] = g.degree();
    ordered_json gens = ordered_json::array();
    for (const Permutation& p : g.generators()) gens.push_back(p.images);
    j["generators"] = std::move(gens);
    return j;
}

PermGroup group_from_json(const ordered_json& j) {
    if (!j.contains("degree") || !j.contains("generators"))
        throw math_error("group JSON needs \"degree\" and \"generators\"");
    const std::uint32_t degree = j.at("degree").get<std::uint32_t>();
    std::vector<Permutation> gens;
    for (const auto& arr : j.at("generators")) {
        Permutation p;
        p.images = arr.get<std::vector<std::uint32_t>>();
        if (p.images.size() != degree)
            throw math_error("generator length disagrees with the degree");
        p.validate();
        gens.push_back(std::move(p));
    }
    return PermGroup(degree, gens);
}

ordered_json action_json(const NaturalAction& act) {
    ordered_json j = group_json(act.group);
    ordered_json meta;
    meta["family"] = to_string(act.family.name);
    meta["n"] = act.family.n;
    meta["expected_order"] = static_cast<std::uint64_t>(expected_order(act.family));
    meta["distinguished_point"] = act.distinguished_point;
    meta["labels"] = act.point_labels;
    j["metadata"] = std::move(meta);
    return j;
}

ordered_json classification_json(const ClassificationReport& r) {
    ordered_json j;
    j["kind"] = to_string(r.kind);
    if (r.family_guess) {
        j["family"] = r.family_guess->family;
        j["n"] = r.family_guess->n;
    }
    j["omega_size"] = r.omega_size;
    j["s2_order"] = r.s2_order;
    j["s_order"] = r.s_order;
    j["kernel_order"] = r.kernel_order;
    j["unique_involution"] = r.unique_involution;
    return j;
}

ordered_json profile_json(const RamificationProfile& p) {
    ordered_json j;
    j["G"] = p.group_order;
    j["g_quot"] = p.quotient_genus;
    ordered_json orbits = ordered_json::array();
    for (const RamifiedOrbit& o : p.orbits)
        orbits.push_back(ordered_json{{"size", o.size}, {"filtration", o.filtration}});
    j["orbits"] = std::move(orbits);
    return j;
}

RamificationProfile profile_from_json(const ordered_json& j) {
    RamificationProfile p;
    p.group_order = j.at("G").get<std::uint64_t>();
    p.quotient_genus = j.at("g_quot").get<std::uint64_t>();
    for (const auto& o : j.at("orbits"))
        p.orbits.push_back({o.at("size").get<std::uint64_t>(),
                            o.at("filtration").get<std::vector<std::uint64_t>>()});
    return p;
}

namespace {

ordered_json curve_parameters(const CurveSpec& c) {
    ordered_json p;
    switch (c.family) {
        case CurveFamily::I:
            p["k"] = c.k;
            break;
        case CurveFamily::II:
        case CurveFamily::III:
        case CurveFamily::IV:
            p["n"] = c.n;
            break;
        case CurveFamily::STICH:
            p["nu"] = c.nu;
            p["m"] = c.m;
            break;
        case CurveFamily::SU3Q:
        case CurveFamily::PSU3Q:
            p["n"] = c.n;
            p["t"] = c.t;
            p["mu3"] = c.mu3;
            break;
    }
    return p;
}

}  // namespace

ordered_json curve_info_json(const CurveSpec& c) {
    ordered_json j;
    j["family"] = to_string(c.family);
    j["parameters"] = curve_parameters(c);
    j["equation"] = c.equation;
    j["natural_field_exp"] = c.natural_field_exp;
    j["genus"] = genus(c);
    const AutDescriptor d = expected_aut_order(c);
    j["automorphisms"] = ordered_json{{"description", d.description},
                                      {"order", d.order},
                                      {"full_group_known", d.full_group_known}};
    try {
        j["two_rank"] = two_rank(c);
    } catch (const math_error&) {
        // no elementary-abelian certificate for this family; leave the key out
    }
    return j;
}

ordered_json point_count_json(const CurveSpec& c, const PointCount& pc) {
    ordered_json j;
    j["family"] = to_string(c.family);
    j["parameters"] = curve_parameters(c);
    j["field_exp"] = pc.field_exp;
    j["affine_smooth"] = pc.affine_smooth;
    j["infinity_correction"] = pc.infinity_correction;
    j["total"] = pc.total;
    j["note"] = pc.note;
    return j;
}

std::string point_count_csv(const CurveSpec& c, const PointCount& pc) {
    std::ostringstream out;
    out << "family,field_exp,affine_smooth,infinity_correction,total\n"
        << to_string(c.family) << ',' << pc.field_exp << ',' << pc.affine_smooth << ','
        << pc.infinity_correction << ',' << pc.total << '\n';
    return out.str();
}

ordered_json aut_verification_json(const CurveSpec& c, const AutVerification& v) {
    ordered_json j;
    j["family"] = to_string(c.family);
    j["parameters"] = curve_parameters(c);
    j["point_count"] = v.point_count;
    j["group_order"] = v.group_order;
    j["expected_order"] = v.expected_order;
    j["points_match"] = v.points_match;
    j["order_match"] = v.order_match;
    j["detail"] = v.detail;
    return j;
}

std::string spectrum_flags(const SpectrumEntry& e) {
    std::string s;
    auto add = [&s](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ';';
        s += name;
    };
    add(e.genus_ge_2, "g>=2");
    add(e.order_gt_6gm1, "S>6(g-1)");
    add(e.stab_gt_3g, "Sp>3g");
    add(e.order_gt_24g2, "S>24g^2");
    return s.empty() ? "-" : s;
}

namespace {

ordered_json spectrum_entry_json(const SpectrumEntry& e) {
    ordered_json j;
    j["family"] = to_string(e.family.name);
    j["n"] = e.family.n;
    j["case"] = e.case_tag;
    j["t"] = e.t;
    j["genus"] = e.genus;
    j["s_order"] = e.s_order;
    j["sq_order"] = e.sq_order;
    j["witness"] = e.witness;
    j["flags"] = spectrum_flags(e);
    return j;
}

}  // namespace

ordered_json spectrum_json(const SpectrumResult& r) {
    ordered_json j;
    j["entries"] = ordered_json::array();
    for (const SpectrumEntry& e : r.entries) j["entries"].push_back(spectrum_entry_json(e));
    j["filtered"] = ordered_json::array();
    for (const SpectrumEntry& e : r.filtered) j["filtered"].push_back(spectrum_entry_json(e));
    return j;
}

std::string spectrum_csv(const SpectrumResult& r) {
    std::ostringstream out;
    out << "family,n,case,t,genus,s_order,sq_order,witness,flags\n";
    for (const SpectrumEntry& e : r.entries)
        out << to_string(e.family.name) << ',' << e.family.n << ',' << e.case_tag << ','
            << e.t << ',' << e.genus << ',' << e.s_order << ',' << e.sq_order << ','
            << e.witness << ',' << spectrum_flags(e) << '\n';
    return out.str();
}

ordered_json bound_json(const BoundReport& b) {
    ordered_json j;
    j["g"] = b.g;
    j["group_order"] = b.group_order;
    ordered_json checks;
    checks["le_24g2"] = b.le_24g2;
    checks["le_24ggm1"] = b.le_24ggm1;
    checks["le_4gp2"] = b.le_4gp2;
    checks["gt_8g"] = b.gt_8g;
    checks["gt_6gm1"] = b.gt_6gm1;
    checks["trigger_gt_24g2"] = b.trigger_gt_24g2;
    checks["abelian_bound_respected"] = b.abelian_bound_respected;
    checks["solvable_bound_respected"] = b.solvable_bound_respected;
    checks["routed_to_fixed_point"] = b.routed_to_fixed_point;
    j["checks"] = std::move(checks);
    return j;
}

ordered_json quotient_json(const QuotientReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["iv_genus"] = r.iv_genus;
    ordered_json checks = ordered_json::array();
    for (const QuotientCheck& c : r.checks) {
        ordered_json cj;
        cj["h"] = c.h;
        if (c.genus)
            cj["genus"] = *c.genus;
        else
            cj["genus"] = nullptr;
        cj["admissible"] = c.genus.has_value();
        cj["matched"] = c.matched;
        cj["consistent"] = c.consistent;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_consistent"] = r.all_consistent;
    return j;
}

ordered_json verification_json(const std::vector<CriterionResult>& results) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const CriterionResult& r : results) {
        ordered_json e;
        e["id"] = r.id;
        e["title"] = r.title;
        e["pass"] = r.pass;
        e["blocking"] = r.blocking;
        e["detail"] = r.detail;
        arr.push_back(std::move(e));
    }
    j["criteria"] = std::move(arr);
    j["pass"] = all_blocking_passed(results);
    return j;
}

}  // namespace pzero
