// Command-line surface: build/analyze the group actions, inspect curves,
// enumerate genus spectra, evaluate bound triggers, and run the verification
// battery.  JSON on stdout by default (CSV where tabular), deterministic
// byte-for-byte across identical invocations.  Exit codes: 0 pass,
// 1 mathematical-invariant failure, 2 budget or usage error.
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pzero/common.hpp"
#include "pzero/curves.hpp"
#include "pzero/io.hpp"
#include "pzero/lingrp.hpp"
#include "pzero/perm.hpp"
#include "pzero/spectrum.hpp"
#include "pzero/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitBudget = 2;

void emit(const std::string& text, const std::string& out_path) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + out_path);
        os << body;
    }
}

void emit_json(const pzero::ordered_json& j, const std::string& out_path) {
    emit(j.dump(2), out_path);
}

std::string cycles_str(const pzero::Permutation& p) {
    std::string s;
    for (const auto& cyc : p.cycles()) {
        if (cyc.size() < 2) continue;
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

// Shared flag bundle for the curve subcommands.
struct CurveFlags {
    std::string family;
    std::uint32_t k = 0, n = 0, nu = 0, m = 0;
    std::uint64_t t = 0;
};

void add_curve_flags(CLI::App* sub, CurveFlags& cf) {
    sub->add_option("--family", cf.family, "curve family: I, II, III, IV, STICH, SU3Q, PSU3Q")
        ->required();
    sub->add_option("--k", cf.k, "parameter k (family I)");
    sub->add_option("--n", cf.n, "parameter n (families II, III, IV, SU3Q, PSU3Q)");
    sub->add_option("--nu", cf.nu, "parameter nu (family STICH)");
    sub->add_option("--m", cf.m, "parameter m (family STICH)");
    sub->add_option("--t", cf.t, "quotient parameter t (families SU3Q, PSU3Q)");
}

pzero::CurveSpec curve_from_flags(const CurveFlags& cf) {
    std::string f;
    for (char ch : cf.family) f += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (f == "I") return pzero::make_curve_I(cf.k);
    if (f == "II") return pzero::make_curve_II(cf.n);
    if (f == "III") return pzero::make_curve_III(cf.n);
    if (f == "IV") return pzero::make_curve_IV(cf.n);
    if (f == "STICH") return pzero::make_curve_stich(cf.nu, cf.m);
    if (f == "SU3Q") return pzero::make_curve_su3q(cf.n, cf.t);
    if (f == "PSU3Q") return pzero::make_curve_psu3q(cf.n, cf.t);
    throw std::invalid_argument("unknown curve family: " + cf.family);
}

pzero::Family group_family(const std::string& name) {
    const auto fam = pzero::family_from_string(name);
    if (!fam) throw std::invalid_argument("unknown group family: " + name);
    return *fam;
}

int cmd_group_build(const std::string& family, std::uint32_t n, std::uint32_t max_degree,
                    const std::string& out) {
    const pzero::FamilyId id = pzero::make_family(group_family(family), n);
    if (id.name == pzero::Family::SU3) {
        const pzero::Su3Handle h = pzero::build_su3_matrix(n);
        pzero::ordered_json j;
        j["family"] = to_string(id.name);
        j["n"] = id.n;
        j["order"] = h.order;
        j["center_order"] = h.center_order;
        j["degree"] = h.degree;
        j["note"] = "matrix-group handle; the vector action is not materialized as permutations";
        emit_json(j, out);
        return kExitOk;
    }
    const std::uint32_t degree = pzero::stabilizer_constants(id).degree;
    if (degree > max_degree)
        throw pzero::budget_error("action degree " + std::to_string(degree) +
                                  " exceeds --max-degree " + std::to_string(max_degree));
    emit_json(pzero::action_json(pzero::build_natural_action(id)), out);
    return kExitOk;
}

int cmd_group_analyze(const std::string& path, std::uint64_t samples, const std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    const pzero::ordered_json doc = pzero::ordered_json::parse(in);
    const pzero::PermGroup g = pzero::group_from_json(doc);

    // Screen condition (4) before classifying: the 2-power parts of the
    // generators plus seeded random draws, every involution must fix exactly
    // one point.
    std::vector<pzero::Permutation> pool = g.generators();
    pzero::rng64 rng(pzero::kDefaultSeed);
    for (std::uint64_t i = 0; i < samples; ++i) pool.push_back(g.random_element(rng));
    for (const auto& s : pool) {
        std::uint64_t odd = s.element_order();
        while (odd % 2 == 0) odd /= 2;
        pzero::Permutation x = pow(s, odd);
        if (x.is_identity()) continue;
        while (!x.then(x).is_identity()) x = x.then(x);
        const std::size_t nfix = x.fixed_points().size();
        if (nfix != 1) {
            std::fprintf(stderr,
                         "condition (4) violated: involution %s fixes %zu points, not 1\n",
                         cycles_str(x).c_str(), nfix);
            pzero::ordered_json j;
            j["error"] = "condition (4) violated";
            j["involution"] = cycles_str(x);
            j["fixed_points"] = nfix;
            emit_json(j, out);
            return kExitInvariant;
        }
    }

    const pzero::ClassificationReport rep = pzero::classify_theorem1(g);
    pzero::ordered_json j;
    j["meta"]["seed"] = static_cast<std::uint64_t>(pzero::kDefaultSeed);
    j["meta"]["samples"] = samples;
    j.update(pzero::classification_json(rep));
    emit_json(j, out);
    return kExitOk;
}

int cmd_curve_info(const CurveFlags& cf, const std::string& out) {
    emit_json(pzero::curve_info_json(curve_from_flags(cf)), out);
    return kExitOk;
}

int cmd_curve_points(const CurveFlags& cf, int field_exp, int max_field_exp,
                     const std::string& format, const std::string& out) {
    if (field_exp > max_field_exp)
        throw pzero::budget_error("field exponent " + std::to_string(field_exp) +
                                  " exceeds --max-field-exp " + std::to_string(max_field_exp));
    const pzero::CurveSpec c = curve_from_flags(cf);
    const pzero::PointCount pc = pzero::rational_points(c, field_exp);
    if (format == "csv")
        emit(pzero::point_count_csv(c, pc), out);
    else
        emit_json(pzero::point_count_json(c, pc), out);
    return kExitOk;
}

int cmd_curve_verify_aut(const CurveFlags& cf, const std::string& out) {
    const pzero::CurveSpec c = curve_from_flags(cf);
    const pzero::AutVerification v = pzero::verify_automorphisms(c);
    emit_json(pzero::aut_verification_json(c, v), out);
    return (v.points_match && v.order_match) ? kExitOk : kExitInvariant;
}

int cmd_spectrum(const std::string& family, std::uint32_t n, const std::string& format,
                 bool quotients, const std::string& out) {
    const pzero::FamilyId id = pzero::make_family(group_family(family), n);
    if (quotients) {
        if (format == "csv")
            throw std::invalid_argument("--quotients is only available as JSON");
        emit_json(pzero::quotient_json(pzero::quotient_consistency(n)), out);
        return kExitOk;
    }
    const pzero::SpectrumResult r = pzero::enumerate_spectrum(id);
    if (format == "csv")
        emit(pzero::spectrum_csv(r), out);
    else
        emit_json(pzero::spectrum_json(r), out);
    return kExitOk;
}

int cmd_bounds(std::uint64_t g, std::uint64_t order, bool abelian, bool solvable,
               bool fixes_point, const std::string& out) {
    emit_json(pzero::bound_json(pzero::bound_checks(order, g, abelian, solvable, fixes_point)),
              out);
    return kExitOk;
}

int cmd_verify(const std::string& suite, bool quick, const std::string& out) {
    const auto results = pzero::run_verification(suite, quick);
    for (const auto& r : results)
        std::fprintf(stderr, "[%s] criterion %d: %s -- %s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                     r.title.c_str(), r.detail.c_str(), r.blocking ? "" : " (non-blocking)");
    pzero::ordered_json j;
    j["meta"]["seed"] = static_cast<std::uint64_t>(pzero::kDefaultSeed);
    j["meta"]["suite"] = suite;
    j["meta"]["quick"] = quick;
    j.update(pzero::verification_json(results));
    emit_json(j, out);
    return pzero::all_blocking_passed(results) ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero 2-rank curves in characteristic 2: groups, spectra, and bounds"};
    app.require_subcommand(1);

    int rc = kExitOk;
    std::string out;
    app.add_option("--out", out, "write the result to a file instead of stdout");

    // group build / group analyze
    auto* grp = app.add_subcommand("group", "build or analyze a permutation group");
    grp->require_subcommand(1);
    std::string g_family;
    std::uint32_t g_n = 0;
    std::uint32_t g_max_degree = 1100;
    auto* gb = grp->add_subcommand("build", "emit the natural 2-transitive action as JSON");
    gb->add_option("--family", g_family, "group family: psl2, sz, pgu3, psu3, su3")->required();
    gb->add_option("--n", g_n, "field size n (a power of 2)")->required();
    gb->add_option("--max-degree", g_max_degree, "refuse actions on more points than this");
    gb->callback([&]() { rc = cmd_group_build(g_family, g_n, g_max_degree, out); });

    std::string ga_file;
    std::uint64_t ga_samples = 1000;
    auto* ga = grp->add_subcommand("analyze", "classify a group JSON file");
    ga->add_option("file", ga_file, "group JSON (degree + generators)")->required();
    ga->add_option("--samples", ga_samples, "random elements to screen for condition (4)");
    ga->callback([&]() { rc = cmd_group_analyze(ga_file, ga_samples, out); });

    // curve info / points / verify-aut
    auto* crv = app.add_subcommand("curve", "inspect one of the zero 2-rank curve families");
    crv->require_subcommand(1);
    CurveFlags ci, cp, cv;
    auto* c_info = crv->add_subcommand("info", "genus, automorphism order, and model equation");
    add_curve_flags(c_info, ci);
    c_info->callback([&]() { rc = cmd_curve_info(ci, out); });

    int cp_exp = 0, cp_max_exp = 20;
    std::string cp_format = "json";
    auto* c_pts = crv->add_subcommand("points", "count rational points over F_{2^e}");
    add_curve_flags(c_pts, cp);
    c_pts->add_option("--field-exp", cp_exp, "exponent e of the field F_{2^e}")->required();
    c_pts->add_option("--max-field-exp", cp_max_exp, "refuse fields larger than 2^this");
    c_pts->add_option("--format", cp_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    c_pts->callback([&]() { rc = cmd_curve_points(cp, cp_exp, cp_max_exp, cp_format, out); });

    auto* c_ver = crv->add_subcommand("verify-aut", "rebuild and verify the automorphism group");
    add_curve_flags(c_ver, cv);
    c_ver->callback([&]() { rc = cmd_curve_verify_aut(cv, out); });

    // spectrum
    std::string s_family, s_format = "json";
    std::uint32_t s_n = 0;
    bool s_quotients = false;
    auto* spec = app.add_subcommand("spectrum", "enumerate the genus spectrum of a family");
    spec->add_option("--family", s_family, "group family: psl2, sz, psu3, su3")->required();
    spec->add_option("--n", s_n, "field size n (a power of 2)")->required();
    spec->add_option("--format", s_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    spec->add_flag("--quotients", s_quotients,
                   "emit the tame-quotient consistency table instead of the spectrum");
    spec->callback([&]() { rc = cmd_spectrum(s_family, s_n, s_format, s_quotients, out); });

    // bounds
    std::uint64_t b_g = 0, b_order = 0;
    bool b_abelian = false, b_solvable = false, b_fixes = false;
    auto* bnd = app.add_subcommand("bounds", "evaluate the automorphism-order bounds for genus g");
    bnd->add_option("--g", b_g, "genus (at least 2)")->required();
    bnd->add_option("--order", b_order, "automorphism group order")->required();
    bnd->add_option("--abelian", b_abelian, "group is abelian (true/false)");
    bnd->add_option("--solvable", b_solvable, "group is solvable (true/false)");
    bnd->add_option("--fixes-point", b_fixes, "group fixes a point (true/false)");
    bnd->callback([&]() { rc = cmd_bounds(b_g, b_order, b_abelian, b_solvable, b_fixes, out); });

    // verify
    std::string v_suite = "all";
    bool v_quick = false;
    auto* ver = app.add_subcommand("verify", "run the verification battery");
    ver->add_option("--suite", v_suite, "all, groups, curves, or spectrum")
        ->check(CLI::IsMember({"all", "groups", "curves", "spectrum"}));
    ver->add_flag("--quick", v_quick, "skip the n = 32 groups and the SU(3) vector actions");
    ver->callback([&]() { rc = cmd_verify(v_suite, v_quick, out); });

    // Let `--out` (held by the root app) be given after a subcommand name.
    for (CLI::App* s : {grp, gb, ga, crv, c_info, c_pts, c_ver, spec, bnd, ver}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBudget;
    } catch (const pzero::budget_error& e) {
        std::fprintf(stderr, "budget error: %s\n", e.what());
        return kExitBudget;
    } catch (const pzero::math_error& e) {
        std::fprintf(stderr, "invariant failure: %s\n", e.what());
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    }
    return rc;
}
