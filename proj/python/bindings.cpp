// Thin bindings: every structured result is returned as the same JSON text
// the command-line tool emits; the python package decodes it into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pzero/common.hpp"
#include "pzero/curves.hpp"
#include "pzero/io.hpp"
#include "pzero/lingrp.hpp"
#include "pzero/perm.hpp"
#include "pzero/spectrum.hpp"
#include "pzero/verify.hpp"

namespace py = pybind11;

namespace {

pzero::FamilyId family_id(const std::string& family, std::uint32_t n) {
    const auto fam = pzero::family_from_string(family);
    if (!fam) throw std::invalid_argument("unknown group family: " + family);
    return pzero::make_family(*fam, n);
}

pzero::CurveSpec curve_spec(const std::string& family, std::uint32_t k, std::uint32_t n,
                            std::uint32_t nu, std::uint32_t m, std::uint64_t t) {
    std::string f;
    for (char ch : family) f += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (f == "I") return pzero::make_curve_I(k);
    if (f == "II") return pzero::make_curve_II(n);
    if (f == "III") return pzero::make_curve_III(n);
    if (f == "IV") return pzero::make_curve_IV(n);
    if (f == "STICH") return pzero::make_curve_stich(nu, m);
    if (f == "SU3Q") return pzero::make_curve_su3q(n, t);
    if (f == "PSU3Q") return pzero::make_curve_psu3q(n, t);
    throw std::invalid_argument("unknown curve family: " + family);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "zero 2-rank curves in characteristic 2: groups, spectra, and bounds";

    mod.def(
        "group_order",
        [](const std::string& family, std::uint32_t n) {
            return static_cast<std::uint64_t>(pzero::expected_order(family_id(family, n)));
        },
        py::arg("family"), py::arg("n"));

    mod.def(
        "build_group_json",
        [](const std::string& family, std::uint32_t n) {
            const pzero::FamilyId id = family_id(family, n);
            if (id.name == pzero::Family::SU3) {
                const pzero::Su3Handle h = pzero::build_su3_matrix(n);
                pzero::ordered_json j;
                j["family"] = to_string(id.name);
                j["n"] = id.n;
                j["order"] = h.order;
                j["center_order"] = h.center_order;
                j["degree"] = h.degree;
                return j.dump();
            }
            return pzero::action_json(pzero::build_natural_action(id)).dump();
        },
        py::arg("family"), py::arg("n"));

    mod.def(
        "classify_json",
        [](std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& generators) {
            std::vector<pzero::Permutation> gens;
            for (const auto& images : generators) {
                if (images.size() != degree)
                    throw std::invalid_argument("generator length disagrees with the degree");
                pzero::Permutation p;
                p.images = images;
                p.validate();
                gens.push_back(std::move(p));
            }
            const pzero::PermGroup g(degree, gens);
            return pzero::classification_json(pzero::classify_theorem1(g)).dump();
        },
        py::arg("degree"), py::arg("generators"));

    mod.def(
        "curve_info_json",
        [](const std::string& family, std::uint32_t k, std::uint32_t n, std::uint32_t nu,
           std::uint32_t m, std::uint64_t t) {
            return pzero::curve_info_json(curve_spec(family, k, n, nu, m, t)).dump();
        },
        py::arg("family"), py::arg("k") = 0, py::arg("n") = 0, py::arg("nu") = 0,
        py::arg("m") = 0, py::arg("t") = 0);

    mod.def(
        "curve_genus",
        [](const std::string& family, std::uint32_t k, std::uint32_t n, std::uint32_t nu,
           std::uint32_t m, std::uint64_t t) {
            return pzero::genus(curve_spec(family, k, n, nu, m, t));
        },
        py::arg("family"), py::arg("k") = 0, py::arg("n") = 0, py::arg("nu") = 0,
        py::arg("m") = 0, py::arg("t") = 0);

    mod.def(
        "curve_two_rank",
        [](const std::string& family, std::uint32_t k, std::uint32_t n, std::uint32_t nu,
           std::uint32_t m, std::uint64_t t) {
            return pzero::two_rank(curve_spec(family, k, n, nu, m, t));
        },
        py::arg("family"), py::arg("k") = 0, py::arg("n") = 0, py::arg("nu") = 0,
        py::arg("m") = 0, py::arg("t") = 0);

    mod.def(
        "rational_points_json",
        [](const std::string& family, int field_exp, std::uint32_t k, std::uint32_t n,
           std::uint32_t nu, std::uint32_t m, std::uint64_t t) {
            const pzero::CurveSpec c = curve_spec(family, k, n, nu, m, t);
            return pzero::point_count_json(c, pzero::rational_points(c, field_exp)).dump();
        },
        py::arg("family"), py::arg("field_exp"), py::arg("k") = 0, py::arg("n") = 0,
        py::arg("nu") = 0, py::arg("m") = 0, py::arg("t") = 0);

    mod.def(
        "verify_automorphisms_json",
        [](const std::string& family, std::uint32_t k, std::uint32_t n, std::uint32_t nu,
           std::uint32_t m, std::uint64_t t) {
            const pzero::CurveSpec c = curve_spec(family, k, n, nu, m, t);
            return pzero::aut_verification_json(c, pzero::verify_automorphisms(c)).dump();
        },
        py::arg("family"), py::arg("k") = 0, py::arg("n") = 0, py::arg("nu") = 0,
        py::arg("m") = 0, py::arg("t") = 0);

    mod.def(
        "spectrum_json",
        [](const std::string& family, std::uint32_t n) {
            return pzero::spectrum_json(pzero::enumerate_spectrum(family_id(family, n))).dump();
        },
        py::arg("family"), py::arg("n"));

    mod.def(
        "quotient_json",
        [](std::uint32_t n) { return pzero::quotient_json(pzero::quotient_consistency(n)).dump(); },
        py::arg("n"));

    mod.def(
        "bounds_json",
        [](std::uint64_t order, std::uint64_t g, bool abelian, bool solvable, bool fixes_point) {
            return pzero::bound_json(pzero::bound_checks(order, g, abelian, solvable, fixes_point))
                .dump();
        },
        py::arg("order"), py::arg("g"), py::arg("abelian") = false, py::arg("solvable") = false,
        py::arg("fixes_point") = false);

    mod.def(
        "verify_json",
        [](const std::string& suite, bool quick) {
            return pzero::verification_json(pzero::run_verification(suite, quick)).dump();
        },
        py::arg("suite") = "all", py::arg("quick") = false);
}
