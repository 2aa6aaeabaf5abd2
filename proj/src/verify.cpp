#include "pzero/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pzero/common.hpp"
#include "pzero/curves.hpp"
#include "pzero/field.hpp"
#include "pzero/lingrp.hpp"
#include "pzero/perm.hpp"
#include "pzero/ramify.hpp"
#include "pzero/spectrum.hpp"

namespace pzero {
namespace {

// Collects pass/fail evidence for one criterion and renders a one-line detail.
class Checker {
public:
    void require(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            ++failed_;
            if (first_fail_.empty()) first_fail_ = what;
        }
    }

    bool passed() const { return failed_ == 0; }

    std::string detail(const std::string& summary) const {
        std::ostringstream os;
        if (failed_ == 0) {
            os << summary << " [" << total_ << " checks]";
        } else {
            os << failed_ << " of " << total_ << " checks failed; first: " << first_fail_;
        }
        return os.str();
    }

private:
    int total_ = 0;
    int failed_ = 0;
    std::string first_fail_;
};

struct BuiltAction {
    NaturalAction act;
    std::uint64_t expected_order = 0;
};

std::string fam_tag(const FamilyId& f) {
    return std::string(to_string(f.name)) + "(" + std::to_string(f.n) + ")";
}

// Every permutation group the battery exercises; quick drops the n = 32 build.
std::vector<BuiltAction> build_bed(bool quick) {
    std::vector<BuiltAction> bed;
    auto add = [&bed](Family f, std::uint32_t n) {
        FamilyId id = make_family(f, n);
        bed.push_back({build_natural_action(id), expected_order(id)});
    };
    add(Family::PSL2, 4);
    add(Family::PSL2, 8);
    add(Family::SZ, 8);
    add(Family::PGU3, 4);
    add(Family::PGU3, 8);
    add(Family::PSU3, 8);
    if (!quick) add(Family::SZ, 32);
    return bed;
}

// The spectrum grid shared by criteria 4 and 5 (arithmetic only, never quick-trimmed).
std::vector<FamilyId> spectrum_grid() {
    return {make_family(Family::PSL2, 4),  make_family(Family::PSL2, 8),
            make_family(Family::PSL2, 16), make_family(Family::SZ, 8),
            make_family(Family::SZ, 32),   make_family(Family::PSU3, 4),
            make_family(Family::PSU3, 8),  make_family(Family::PSU3, 16),
            make_family(Family::SU3, 8),   make_family(Family::SU3, 32)};
}

CriterionResult criterion_orders(const std::vector<BuiltAction>& bed, bool quick,
                                 double bed_ms) {
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::uint64_t>> table = {
        {"psl2(4)", 60},        {"psl2(8)", 504},      {"sz(8)", 29120},
        {"pgu3(4)", 62400},     {"pgu3(8)", 16547328}, {"psu3(8)", 5515776},
        {"sz(32)", 32537600}};
    std::uint64_t pgu8 = 0, psu8 = 0;
    for (const auto& b : bed) {
        const std::string tag = fam_tag(b.act.family);
        const auto got = static_cast<std::uint64_t>(b.act.group.order());
        ck.require(got == b.expected_order, tag + " chain order equals the order formula");
        auto it = std::find_if(table.begin(), table.end(),
                               [&tag](const auto& row) { return row.first == tag; });
        ck.require(it != table.end() && it->second == got, tag + " chain order equals the table value");
        if (tag == "pgu3(8)") pgu8 = got;
        if (tag == "psu3(8)") psu8 = got;
    }
    ck.require(psu8 != 0 && pgu8 == 3 * psu8, "psu3(8) has index 3 in pgu3(8)");
    if (!quick) {
        Su3Handle h4 = build_su3_matrix(4);
        ck.require(h4.order == 62400 && h4.center_order == 1, "su3(4) vector-action order and center");
        Su3Handle h8 = build_su3_matrix(8);
        ck.require(h8.order == 16547328 && h8.center_order == 3, "su3(8) vector-action order and center");
        ck.require(h8.order / h8.center_order == psu8, "su3(8) modulo its center matches psu3(8)");
    }
    const double ms =
        bed_ms + std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
    ck.require(ms < 60000.0, "all chain orders computed in under 60 s");
    // Wall time is checked but kept out of the detail string so that repeated
    // invocations serialize byte-identically.
    std::ostringstream sum;
    sum << bed.size() << " chain orders";
    if (!quick) sum << " + 2 vector actions";
    sum << " exact within the 60 s budget";
    return {1, "group orders from stabilizer chains", ck.passed(), true, ck.detail(sum.str())};
}

CriterionResult criterion_actions(const std::vector<BuiltAction>& bed) {
    Checker ck;
    std::uint64_t involutions = 0;
    for (const auto& b : bed) {
        const std::string tag = fam_tag(b.act.family);
        ck.require(b.act.group.is_two_transitive(), tag + " is 2-transitive");
        const StabilizerConstants sc = stabilizer_constants(b.act.family);
        PermGroup stab = b.act.group.stabilizer(b.act.distinguished_point);
        ck.require(static_cast<std::uint64_t>(stab.order()) == sc.stab_order,
                   tag + " point stabilizer order");
        PermGroup uni = unipotent_subgroup(b.act);
        ck.require(static_cast<std::uint64_t>(uni.order()) == sc.unipotent_order,
                   tag + " translation subgroup order");
        ck.require(is_ti_subgroup(b.act.group, uni), tag + " translation subgroup is TI");

        // Involutions: 2-power parts of the generators plus 10^3 seeded draws.
        std::vector<Permutation> samples = b.act.group.generators();
        rng64 rng(kDefaultSeed);
        for (int i = 0; i < 1000; ++i) samples.push_back(b.act.group.random_element(rng));
        bool fix_one = true;
        std::uint64_t found = 0;
        for (const auto& g : samples) {
            std::uint64_t odd = g.element_order();
            while (odd % 2 == 0) odd /= 2;
            Permutation x = pow(g, odd);
            if (x.is_identity()) continue;
            while (!x.then(x).is_identity()) x = x.then(x);
            ++found;
            if (x.fixed_points().size() != 1) fix_one = false;
        }
        ck.require(found > 0, tag + " sample contains an involution");
        ck.require(fix_one, tag + " sampled involutions each fix exactly one point");
        involutions += found;
    }
    return {2, "natural action properties and involution fixed points", ck.passed(), true,
            ck.detail(std::to_string(involutions) +
                      " sampled involutions, each fixing exactly one point")};
}

CriterionResult criterion_curves() {
    Checker ck;
    const CurveSpec ii4 = make_curve_II(4);
    const CurveSpec ii8 = make_curve_II(8);
    const CurveSpec iii8 = make_curve_III(8);

    const PointCount p44 = rational_points(ii4, 4);
    ck.require(p44.total == 65, "(II) n=4 has 65 points over F_16");
    const PointCount p86 = rational_points(ii8, 6);
    ck.require(p86.total == 513, "(II) n=8 has 513 points over F_64");
    const PointCount p83 = rational_points(iii8, 3);
    ck.require(p83.total == 65, "(III) n=8 has 65 points over F_8");
    ck.require(p44.total == 16 + 1 + 2 * genus(ii4) * 4, "(II) n=4 attains the Hasse-Weil bound");
    ck.require(p86.total == 64 + 1 + 2 * genus(ii8) * 8, "(II) n=8 attains the Hasse-Weil bound");

    const AutVerification v2 = verify_automorphisms(ii4);
    ck.require(v2.points_match && v2.order_match && v2.group_order == 62400,
               "(II) n=4 automorphism group generated with order 62400");
    const AutVerification v3 = verify_automorphisms(iii8);
    ck.require(v3.points_match && v3.order_match && v3.group_order == 29120,
               "(III) n=8 automorphism group generated with order 29120");

    const CurveSpec i2 = make_curve_I(2);
    ck.require(rational_points(i2, 4).total == 33, "(I) k=2 has 33 points over F_16");
    ck.require(rational_points(make_curve_I(3), 6).total == 129,
               "(I) k=3 has 129 points over F_64");
    const AutVerification v1 = verify_automorphisms(i2);
    ck.require(v1.points_match && v1.order_match && v1.group_order == 32,
               "(I) k=2 translation group generated with order 32");
    return {3, "curve point counts and automorphism verification", ck.passed(), true,
            ck.detail("point totals 65/513/65/33/129 and groups 62400/29120/32 verified")};
}

CriterionResult criterion_genus_two_rank() {
    Checker ck;
    // y^2 + y = x^(2^k + 1): one wild place over infinity, genus 2^(k-1), 2-rank 0.
    for (std::uint32_t k = 2; k <= 5; ++k) {
        const std::string tag = "(I) k=" + std::to_string(k);
        const FieldSpec& f = make_field(static_cast<int>(2 * k));
        const std::uint64_t m = (1ull << k) + 1;
        const ASAnalysis an = as_cover_analyze(
            as_reduce(make_as_cover(f, Poly::monomial(f, 1, m), Poly::constant(f, 1))));
        ck.require(an.genus == (1ull << (k - 1)), tag + " cover genus 2^(k-1)");
        ck.require(an.two_rank == 0, tag + " cover 2-rank 0");
        const bool one_place =
            an.places.size() == 1 && an.places[0].place == "inf" && an.places[0].pole_order == m;
        ck.require(one_place, tag + " ramified only over infinity");
        ck.require(hurwitz_genus(an.profile) == an.genus, tag + " profile reproduces the genus");
    }

    // Deuring-Shafarevich zero-2-rank certificates across the curve grid.
    std::vector<std::pair<std::string, CurveSpec>> zs;
    for (std::uint32_t k : {2u, 3u, 4u, 5u})
        zs.emplace_back("(I) k=" + std::to_string(k), make_curve_I(k));
    for (std::uint32_t n : {4u, 8u, 16u})
        zs.emplace_back("(II) n=" + std::to_string(n), make_curve_II(n));
    for (std::uint32_t n : {8u, 32u})
        zs.emplace_back("(III) n=" + std::to_string(n), make_curve_III(n));
    zs.emplace_back("STICH nu=3 m=3", make_curve_stich(3, 3));
    for (const auto& [tag, c] : zs) ck.require(two_rank(c) == 0, tag + " two_rank 0");

    // Short-orbit relation inverted through an explicit ramification profile
    // on every spectrum entry, retained and filtered alike.
    std::size_t entries = 0;
    for (const FamilyId& id : spectrum_grid()) {
        const SpectrumResult r = enumerate_spectrum(id);
        for (const auto* list : {&r.entries, &r.filtered}) {
            for (const SpectrumEntry& e : *list) {
                ++entries;
                const std::string tag = fam_tag(id) + " " + e.case_tag + " t=" + std::to_string(e.t);
                bool ok = false;
                try {
                    ok = crosscheck_gqfpf(e);
                } catch (const math_error&) {
                    ok = false;
                }
                ck.require(ok, tag + " profile inversion");
            }
        }
    }
    return {4, "wild-cover genus, 2-rank certificates, and profile inversion", ck.passed(), true,
            ck.detail("4 covers, " + std::to_string(zs.size()) + " certificates, " +
                      std::to_string(entries) + " spectrum entries inverted")};
}

CriterionResult criterion_spectrum() {
    Checker ck;
    auto genera = [](const std::vector<SpectrumEntry>& es) {
        std::multiset<std::int64_t> g;
        for (const auto& e : es) g.insert(e.genus);
        return g;
    };

    {
        const SpectrumResult r = enumerate_spectrum(make_family(Family::PSL2, 4));
        ck.require(genera(r.entries) == std::multiset<std::int64_t>{6}, "PSL2(4) spectrum {6}");
    }
    {
        const SpectrumResult r = enumerate_spectrum(make_family(Family::PSL2, 8));
        ck.require(genera(r.entries) == std::multiset<std::int64_t>{7, 28},
                   "PSL2(8) spectrum {7, 28}");
    }
    {
        const SpectrumResult r = enumerate_spectrum(make_family(Family::SZ, 8));
        ck.require(genera(r.entries) == std::multiset<std::int64_t>{14, 196, 196},
                   "SZ(8) spectrum {14, 196, 196}");
        bool witness = false;
        for (const auto& e : r.entries)
            if (e.case_tag == "SZ-B" && e.t == 1)
                witness = e.witness == "III" && e.genus == 14;
        ck.require(witness, "SZ(8) carries the (III) witness at (B, t=1)");
    }
    {
        const SpectrumResult r = enumerate_spectrum(make_family(Family::PSU3, 4));
        ck.require(genera(r.entries) == std::multiset<std::int64_t>{6, 66, 456, 456},
                   "PSU3(4) spectrum {6, 66, 456, 456}");
        bool witness = false;
        for (const auto& e : r.entries)
            if (e.case_tag == "PSU3-first" && e.t == 1)
                witness = e.witness == "II" && e.genus == 6;
        ck.require(witness, "PSU3(4) carries the (II) witness at (first, t=1)");
    }

    // Every entry of the full grid has to pass the independent crosscheck.
    std::size_t entries = 0;
    bool cross_ok = true;
    for (const FamilyId& id : spectrum_grid()) {
        const SpectrumResult r = enumerate_spectrum(id);
        for (const auto* list : {&r.entries, &r.filtered}) {
            for (const SpectrumEntry& e : *list) {
                ++entries;
                try {
                    if (!crosscheck_gqfpf(e)) cross_ok = false;
                } catch (const math_error&) {
                    cross_ok = false;
                }
            }
        }
    }
    ck.require(cross_ok, "every spectrum entry passes crosscheck_gqfpf");

    // The top of the SU3 second case is the genus of the family (IV) curve.
    for (std::uint32_t n : {8u, 32u}) {
        const SpectrumResult r = enumerate_spectrum(make_family(Family::SU3, n));
        const int128 n3 = int128(n) * n * n;
        const std::int64_t want =
            static_cast<std::int64_t>((n3 + 1) * (int128(n) * n - 2) / 2 + 1);
        bool found = false;
        for (const auto& e : r.entries)
            if (e.case_tag == "SU3-second" && e.t == n + 1)
                found = e.genus == want &&
                        static_cast<std::uint64_t>(e.genus) == genus(make_curve_IV(n));
        ck.require(found, "SU3(" + std::to_string(n) + ") second case tops out at the (IV) genus");
    }
    return {5, "genus spectrum tables with witnesses", ck.passed(), true,
            ck.detail(std::to_string(entries) + " entries enumerated and crosschecked")};
}

CriterionResult criterion_quotients() {
    Checker ck;
    const std::pair<std::uint64_t, std::uint64_t> rows[] = {{1, 456}, {5, 66}, {13, 6}};
    for (const auto& [h, g] : rows)
        ck.require(quotient_genus_tame(456, h, 65) == g,
                   "quotient by h=" + std::to_string(h) + " has genus " + std::to_string(g));
    bool inadmissible = false;
    try {
        quotient_genus_tame(456, 65, 65);
    } catch (const math_error&) {
        inadmissible = true;
    }
    ck.require(inadmissible, "h=65 reported inadmissible");

    for (std::uint32_t n : {4u, 8u, 16u}) {
        const QuotientReport q = quotient_consistency(n);
        ck.require(q.all_consistent,
                   "quotient table for n=" + std::to_string(n) + " consistent with the spectrum");
        if (n == 4) {
            bool found = false;
            for (const auto& c : q.checks)
                if (c.h == 65) found = !c.genus.has_value() && c.matched.empty() && c.consistent;
            ck.require(found, "n=4 quotient table lists h=65 as inadmissible and unclaimed");
        }
    }
    return {6, "tame quotient genera against the spectrum", ck.passed(), true,
            ck.detail("h in {1, 5, 13} gives {456, 66, 6}; h=65 inadmissible; tables consistent")};
}

CriterionResult criterion_bounds() {
    Checker ck;
    const BoundReport b1 = bound_checks(62400, 6, false, false, false);
    ck.require(b1.trigger_gt_24g2, "(II) n=4: 62400 > 24*6^2 triggers");
    const BoundReport b2 = bound_checks(29120, 14, false, false, false);
    ck.require(b2.trigger_gt_24g2, "(III) n=8: 29120 > 24*14^2 triggers");
    const BoundReport b3 = bound_checks(1152, 4, false, true, true);
    ck.require(b3.trigger_gt_24g2, "(I) k=3: 1152 > 24*4^2 triggers");
    ck.require(b3.routed_to_fixed_point, "(I) k=3 routed to the fixed-point case");
    ck.require(b3.solvable_bound_respected, "(I) k=3 respects the solvable bound via the fixed point");
    return {7, "large-automorphism-group bound triggers", ck.passed(), true,
            ck.detail("62400 > 864, 29120 > 4704, 1152 > 384 (fixed-point route)")};
}

CriterionResult criterion_classification(const std::vector<BuiltAction>& bed) {
    Checker ck;
    for (const auto& b : bed) {
        const std::string tag = fam_tag(b.act.family);
        const ClassificationReport rep = classify_theorem1(b.act.group);
        ck.require(rep.kind == ClassCase::linear_family, tag + " classified as a linear family");
        std::string want = "PSU";  // the Sylow-2 normal closure of PGU3 input is PSU3
        if (b.act.family.name == Family::PSL2) want = "PSL";
        if (b.act.family.name == Family::SZ) want = "Sz";
        const bool guess_ok = rep.family_guess && rep.family_guess->family == want &&
                              rep.family_guess->n == b.act.family.n;
        ck.require(guess_ok, tag + " family guess " + want + "/" + std::to_string(b.act.family.n));
    }
    // The Frobenius group of order 6 acting on three points.
    const PermGroup frob(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                             Permutation::from_cycles(3, {{0, 1}})});
    const ClassificationReport rep = classify_theorem1(frob);
    ck.require(rep.kind == ClassCase::odd_times_2group,
               "order-6 Frobenius group lands in the odd-times-2-group case");
    ck.require(rep.s2_order == 2, "order-6 Frobenius group has cyclic Sylow-2");
    return {8, "structural classification of the built groups", ck.passed(), true,
            ck.detail(std::to_string(bed.size()) + " groups recognized; Frobenius control case")};
}

// Counts points on x^3 = (y^7 + 1) / (y (y+1)^2) over F_{2^e}.  The places
// y = 0, 1, infinity are totally ramified (valuation prime to 3) and give one
// rational point each; every other affine y contributes via the cubic
// power-residue count of z(y).
std::uint64_t kummer_count(int e) {
    const FieldSpec& f = make_field(e);
    const std::uint64_t q = f.order;
    const std::uint64_t g3 = std::gcd<std::uint64_t>(3, q - 1);
    std::uint64_t n = 3;
    for (std::uint32_t y = 2; y < q; ++y) {
        const std::uint32_t yp1 = f.add(y, 1);
        const std::uint32_t num = f.add(f.pow(y, 7), 1);
        const std::uint32_t den = f.mul(y, f.mul(yp1, yp1));
        const std::uint32_t z = f.mul(num, f.inv(den));
        if (z == 0 || g3 == 1) {
            n += 1;
        } else if (f.pow(z, (q - 1) / g3) == 1) {
            n += g3;
        }
    }
    return n;
}

CriterionResult criterion_l_polynomial() {
    Checker ck;
    // Counts over F_2 .. F_128 determine the numerator L(T) of the zeta
    // function of this genus-7 curve; the functional equation fills degrees
    // 8..14 and the count over F_256 then re-validates the whole polynomial.
    const std::uint64_t expect[7] = {3, 9, 9, 45, 33, 69, 129};
    std::int64_t S[8] = {0};
    bool counts_ok = true;
    for (int i = 1; i <= 7; ++i) {
        const std::uint64_t ni = kummer_count(i);
        if (ni != expect[i - 1]) counts_ok = false;
        S[i] = (1ll << i) + 1 - static_cast<std::int64_t>(ni);
    }
    ck.require(counts_ok, "point counts over F_2 .. F_128");

    // Newton's identities: k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} S_j.
    std::int64_t el[8] = {1, 0, 0, 0, 0, 0, 0, 0};
    bool integral = true;
    for (int k = 1; k <= 7; ++k) {
        std::int64_t acc = 0;
        for (int j = 1; j <= k; ++j) acc += ((j % 2 != 0) ? 1 : -1) * el[k - j] * S[j];
        if (acc % k != 0) integral = false;
        el[k] = acc / k;
    }
    ck.require(integral, "Newton identities stay integral");

    std::int64_t c[15] = {0};
    for (int k = 0; k <= 7; ++k) c[k] = (k % 2 != 0) ? -el[k] : el[k];
    for (int j = 8; j <= 14; ++j) c[j] = (1ll << (j - 7)) * c[14 - j];

    // Predict the F_256 count from the full polynomial and re-enumerate.
    std::int64_t p8 = -8 * c[8];
    for (int j = 1; j <= 7; ++j) p8 -= c[j] * S[8 - j];
    const std::uint64_t predicted = static_cast<std::uint64_t>(256 + 1 - p8);
    ck.require(predicted == kummer_count(8), "L-polynomial predicts the count over F_256");

    int rank = 0;
    for (int k = 0; k <= 14; ++k)
        if (c[k] % 2 != 0) rank = k;
    ck.require(rank == 4, "2-rank (degree of L mod 2) equals 4");
    std::int64_t l1 = 0;
    for (int k = 0; k <= 14; ++k) l1 += c[k];
    ck.require(l1 == 324, "class number L(1) = 324");
    return {9, "L-polynomial 2-rank of the genus-7 Kummer curve", ck.passed(), false,
            ck.detail("2-rank 4, L(1) = 324, F_256 count re-derived")};
}

}  // namespace

std::vector<CriterionResult> run_verification(const std::string& suite, bool quick) {
    std::vector<int> ids;
    if (suite == "groups") {
        ids = {1, 2, 8};
    } else if (suite == "curves") {
        ids = {3, 4};
    } else if (suite == "spectrum") {
        ids = {5, 6, 7};
    } else if (suite == "all") {
        ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    } else {
        throw std::invalid_argument("unknown verification suite: " + suite);
    }

    std::vector<BuiltAction> bed;
    double bed_ms = 0.0;
    const bool need_bed = std::find(ids.begin(), ids.end(), 1) != ids.end();
    if (need_bed) {
        const auto t0 = std::chrono::steady_clock::now();
        bed = build_bed(quick);
        bed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    std::vector<CriterionResult> out;
    for (int id : ids) {
        switch (id) {
            case 1: out.push_back(criterion_orders(bed, quick, bed_ms)); break;
            case 2: out.push_back(criterion_actions(bed)); break;
            case 3: out.push_back(criterion_curves()); break;
            case 4: out.push_back(criterion_genus_two_rank()); break;
            case 5: out.push_back(criterion_spectrum()); break;
            case 6: out.push_back(criterion_quotients()); break;
            case 7: out.push_back(criterion_bounds()); break;
            case 8: out.push_back(criterion_classification(bed)); break;
            case 9: out.push_back(criterion_l_polynomial()); break;
            default: break;
        }
    }
    return out;
}

bool all_blocking_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (r.blocking && !r.pass) return false;
    return true;
}

}  // namespace pzero
