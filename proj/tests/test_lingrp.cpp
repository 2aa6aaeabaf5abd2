#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "pzero/lingrp.hpp"

using pzero::budget_error;
using pzero::build_natural_action;
using pzero::build_pgu3;
using pzero::build_psl2;
using pzero::build_psu3;
using pzero::build_su3_matrix;
using pzero::build_sz;
using pzero::expected_order;
using pzero::Family;
using pzero::family_from_string;
using pzero::FamilyId;
using pzero::fpf_cyclic_divisors;
using pzero::fpf_witness;
using pzero::make_family;
using pzero::math_error;
using pzero::NaturalAction;
using pzero::Permutation;
using pzero::PermGroup;
using pzero::stabilizer_constants;
using pzero::unipotent_subgroup;

namespace {

// Every nontrivial element of the translation subgroup should fix the
// distinguished point and nothing else.
void check_unipotent_fixes_only_infinity(const NaturalAction& act) {
    PermGroup u = unipotent_subgroup(act);
    for (const auto& x : u.elements()) {
        if (x.is_identity()) continue;
        auto fp = x.fixed_points();
        REQUIRE(fp.size() == 1);
        CHECK(fp[0] == act.distinguished_point);
    }
}

void check_invariants(const NaturalAction& act) {
    const auto c = stabilizer_constants(act.family);
    CAPTURE(int(act.family.name));
    CAPTURE(act.family.n);
    CHECK(act.group.degree() == c.degree);
    CHECK(act.point_labels.size() == c.degree);
    CHECK(act.point_labels.at(act.distinguished_point) == "inf");
    CHECK(act.group.order() == expected_order(act.family));
    CHECK(act.group.is_two_transitive());

    PermGroup stab = act.group.stabilizer(act.distinguished_point);
    CHECK(stab.order() == c.stab_order);

    PermGroup u = unipotent_subgroup(act);
    CHECK(u.order() == c.unipotent_order);
    for (const auto& x : act.unipotent_generators)
        CHECK(x.images[act.distinguished_point] == act.distinguished_point);
    CHECK(pzero::is_ti_subgroup(act.group, u));

    // Sampled involutions fix exactly one point.
    pzero::rng64 rng;
    std::vector<Permutation> pool = act.group.generators();
    for (int i = 0; i < 40; ++i) pool.push_back(act.group.random_element(rng));
    for (const auto& x : pool) {
        std::uint64_t o = x.element_order();
        if (o % 2 != 0) continue;
        Permutation t = pow(x, o / 2);
        CHECK(t.fixed_points().size() == 1);
    }
}

}  // namespace

TEST_CASE("family ids, names, and parameter validation") {
    CHECK(std::string(to_string(Family::PSL2)) == "psl2");
    CHECK(std::string(to_string(Family::SZ)) == "sz");
    CHECK(family_from_string("psu3").value() == Family::PSU3);
    CHECK(family_from_string("su3").value() == Family::SU3);
    CHECK(!family_from_string("psl").has_value());

    FamilyId f = make_family(Family::PSL2, 8);
    CHECK(f.r == 3);
    CHECK(f.mu == 1);
    FamilyId s = make_family(Family::SZ, 32);
    CHECK(s.r == 5);
    CHECK(s.n0 == 4);
    CHECK(make_family(Family::SZ, 8).n0 == 2);
    CHECK(make_family(Family::PSU3, 8).mu == 3);   // 3 | 9
    CHECK(make_family(Family::PSU3, 4).mu == 1);   // gcd(3, 5)
    CHECK(make_family(Family::SU3, 16).mu == 1);   // gcd(3, 17)
    CHECK(make_family(Family::PGU3, 32).mu == 3);  // 3 | 33

    CHECK_THROWS_AS(make_family(Family::PSL2, 6), math_error);
    CHECK_THROWS_AS(make_family(Family::PSL2, 2), math_error);
    CHECK_THROWS_AS(make_family(Family::PSL2, 0), math_error);
    CHECK_THROWS_AS(make_family(Family::SZ, 16), math_error);  // even exponent
    CHECK_THROWS_AS(make_family(Family::SZ, 4), math_error);
}

TEST_CASE("order formulas and stabilizer constants") {
    CHECK(expected_order(make_family(Family::PSL2, 4)) == 60);
    CHECK(expected_order(make_family(Family::PSL2, 8)) == 504);
    CHECK(expected_order(make_family(Family::PSL2, 16)) == 4080);
    CHECK(expected_order(make_family(Family::SZ, 8)) == 29120);
    CHECK(expected_order(make_family(Family::SZ, 32)) == 32537600);
    CHECK(expected_order(make_family(Family::PGU3, 4)) == 62400);
    CHECK(expected_order(make_family(Family::PSU3, 4)) == 62400);  // mu = 1
    CHECK(expected_order(make_family(Family::PGU3, 8)) == 16547328);
    CHECK(expected_order(make_family(Family::PSU3, 8)) == 5515776);  // index 3
    CHECK(expected_order(make_family(Family::SU3, 8)) == 16547328);

    auto c = stabilizer_constants(make_family(Family::PSL2, 8));
    CHECK(c.stab_order == 56);
    CHECK(c.unipotent_order == 8);
    CHECK(c.complement_order == 7);
    CHECK(c.degree == 9);
    CHECK(c.stab_order == c.unipotent_order * c.complement_order);

    c = stabilizer_constants(make_family(Family::SZ, 8));
    CHECK(c.stab_order == 448);
    CHECK(c.unipotent_order == 64);
    CHECK(c.complement_order == 7);
    CHECK(c.degree == 65);

    c = stabilizer_constants(make_family(Family::PGU3, 8));
    CHECK(c.stab_order == 32256);
    CHECK(c.unipotent_order == 512);
    CHECK(c.complement_order == 63);
    CHECK(c.degree == 513);

    c = stabilizer_constants(make_family(Family::PSU3, 8));
    CHECK(c.stab_order == 10752);
    CHECK(c.unipotent_order == 512);
    CHECK(c.complement_order == 21);
    CHECK(c.degree == 513);

    // order = degree * |S_P| in every 2-transitive family
    for (auto fam : {make_family(Family::PSL2, 16), make_family(Family::SZ, 8),
                     make_family(Family::PSU3, 8), make_family(Family::PGU3, 4)}) {
        auto cc = stabilizer_constants(fam);
        CHECK(expected_order(fam) == cc.degree * cc.stab_order);
    }
}

TEST_CASE("admissible fixed-point-free cyclic orders") {
    using V = std::vector<std::uint64_t>;
    CHECK(fpf_cyclic_divisors(make_family(Family::PSL2, 4)) == V{1, 5});
    CHECK(fpf_cyclic_divisors(make_family(Family::PSL2, 8)) == V{1, 3, 9});
    CHECK(fpf_cyclic_divisors(make_family(Family::PSL2, 16)) == V{1, 17});
    CHECK(fpf_cyclic_divisors(make_family(Family::SZ, 8)) == V{1, 5, 13});
    CHECK(fpf_cyclic_divisors(make_family(Family::SZ, 32)) == V{1, 5, 25, 41});
    CHECK(fpf_cyclic_divisors(make_family(Family::PSU3, 4)) == V{1, 5, 13});
    CHECK(fpf_cyclic_divisors(make_family(Family::PSU3, 8)) == V{1, 3, 9, 19});
    CHECK_THROWS_AS(fpf_cyclic_divisors(make_family(Family::PGU3, 4)), math_error);
    CHECK_THROWS_AS(fpf_cyclic_divisors(make_family(Family::SU3, 8)), math_error);
}

TEST_CASE("projective line: PSL(2,4) and PSL(2,8)") {
    NaturalAction a4 = build_psl2(4);
    CHECK(a4.group.degree() == 5);
    CHECK(a4.point_labels == std::vector<std::string>{"0", "1", "2", "3", "inf"});
    CHECK(a4.distinguished_point == 4);
    CHECK(a4.group.order() == 60);
    check_invariants(a4);

    NaturalAction a8 = build_psl2(8);
    CHECK(a8.group.order() == 504);
    // x -> x + 1 fixes only infinity
    CHECK(a8.group.generators()[0].fixed_points() == std::vector<std::uint32_t>{8});
    check_invariants(a8);
    check_unipotent_fixes_only_infinity(a8);
}

TEST_CASE("Hermitian unital: PGU(3,4) = PSU(3,4)") {
    NaturalAction g = build_pgu3(4);
    CHECK(g.group.degree() == 65);
    CHECK(g.point_labels[0] == "(0,0)");
    CHECK(g.group.order() == 62400);
    check_invariants(g);
    check_unipotent_fixes_only_infinity(g);

    // The last generator inverts through the origin: an involution swapping
    // infinity with (0,0).
    const Permutation& phi = g.group.generators().back();
    CHECK(phi.then(phi).is_identity());
    CHECK(phi.images[g.distinguished_point] == 0);
    CHECK(phi.images[0] == g.distinguished_point);

    NaturalAction p = build_psu3(4);  // mu = 1: same group
    CHECK(p.group.order() == 62400);
}

TEST_CASE("Hermitian unital: PSU(3,8) has index 3 in PGU(3,8)") {
    NaturalAction g = build_pgu3(8);
    NaturalAction p = build_psu3(8);
    CHECK(g.group.degree() == 513);
    CHECK(g.group.order() == 16547328);
    CHECK(p.group.order() == 5515776);
    CHECK(g.group.order() == 3 * p.group.order());
    for (const auto& x : p.group.generators()) CHECK(g.group.contains(x));
    // The full scaling generator lies outside the subgroup.
    std::size_t scale_pos = g.group.generators().size() - 2;
    CHECK(!p.group.contains(g.group.generators()[scale_pos]));
    CHECK(p.group.is_two_transitive());
    PermGroup u = unipotent_subgroup(p);
    CHECK(u.order() == 512);
    CHECK(pzero::is_ti_subgroup(p.group, u));
}

TEST_CASE("Suzuki ovoid: Sz(8) and Sz(32)") {
    NaturalAction s8 = build_sz(8);
    CHECK(s8.group.degree() == 65);
    CHECK(s8.group.order() == 29120);
    check_invariants(s8);
    check_unipotent_fixes_only_infinity(s8);
    // The Sylow-2 has exponent 4: a'*theta(a') term makes translations square
    // to nontrivial central elements.
    CHECK(s8.group.generators()[0].element_order() == 4);

    NaturalAction s32 = build_sz(32);
    CHECK(s32.group.degree() == 1025);
    CHECK(s32.group.order() == 32537600);
    CHECK(s32.group.stabilizer(s32.distinguished_point).order() == 31744);
}

TEST_CASE("dispatch by family id") {
    CHECK(build_natural_action(make_family(Family::SZ, 8)).group.degree() == 65);
    CHECK(build_natural_action(make_family(Family::PSL2, 16)).group.order() == 4080);
    CHECK_THROWS_AS(build_natural_action(make_family(Family::SU3, 4)), math_error);
    CHECK_THROWS_AS(build_psl2(2048), budget_error);
    CHECK_THROWS_AS(build_pgu3(16), budget_error);
    CHECK_THROWS_AS(build_sz(128), budget_error);
}

TEST_CASE("fixed-point-free witnesses exist for every admissible order") {
    auto check_all = [](const NaturalAction& act) {
        for (std::uint64_t c : fpf_cyclic_divisors(act.family)) {
            auto w = fpf_witness(act, c);
            REQUIRE(w.has_value());
            CHECK(w->element_order() == c);
            if (c > 1) {
                Permutation z = *w;
                for (std::uint64_t k = 1; k < c; ++k) {
                    CHECK(z.fixed_points().empty());
                    z = z.then(*w);
                }
                CHECK(z.is_identity());
            }
        }
    };
    check_all(build_psl2(8));
    check_all(build_sz(8));
    check_all(build_psu3(4));  // includes the order-5 witness outside a Singer cycle
    check_all(build_psu3(8));

    // Deterministic: the same witness is returned on repeated calls.
    NaturalAction a = build_psl2(8);
    auto w1 = fpf_witness(a, 3);
    auto w2 = fpf_witness(a, 3);
    REQUIRE(w1.has_value());
    CHECK(w1->images == w2->images);

    // Orders outside the admissible list are never found fixed-point-free.
    CHECK(!fpf_witness(a, 7, 2000).has_value());  // 7 divides the stabilizer
}

TEST_CASE("classification recovers the natural families") {
    auto rep = pzero::classify_theorem1(build_psl2(8).group);
    CHECK(rep.kind == pzero::ClassCase::linear_family);
    REQUIRE(rep.family_guess.has_value());
    CHECK(rep.family_guess->family == "PSL");
    CHECK(rep.family_guess->n == 8);
    CHECK(rep.omega_size == 9);
    CHECK(rep.s_order == 504);

    rep = pzero::classify_theorem1(build_sz(8).group);
    CHECK(rep.kind == pzero::ClassCase::linear_family);
    REQUIRE(rep.family_guess.has_value());
    CHECK(rep.family_guess->family == "Sz");
    CHECK(rep.family_guess->n == 8);
    CHECK(rep.omega_size == 65);

    rep = pzero::classify_theorem1(build_psu3(4).group);
    CHECK(rep.kind == pzero::ClassCase::linear_family);
    REQUIRE(rep.family_guess.has_value());
    CHECK(rep.family_guess->family == "PSU");
    CHECK(rep.family_guess->n == 4);
    CHECK(rep.s_order == 62400);
}

TEST_CASE("special unitary matrix groups") {
    auto h4 = build_su3_matrix(4);
    CHECK(h4.degree == 4095);
    CHECK(h4.order == 62400);
    CHECK(h4.center_order == 1);
    CHECK(h4.order / h4.center_order == expected_order(make_family(Family::PSU3, 4)));

    auto h8 = build_su3_matrix(8);
    CHECK(h8.degree == 262143);
    CHECK(h8.order == 16547328);
    CHECK(h8.center_order == 3);
    CHECK(h8.order / h8.center_order == expected_order(make_family(Family::PSU3, 8)));

    CHECK_THROWS_AS(build_su3_matrix(16), budget_error);
    CHECK_THROWS_AS(build_su3_matrix(6), math_error);
}
