#include "pzero/spectrum.hpp"

#include <algorithm>

#include "pzero/common.hpp"
#include "pzero/curves.hpp"
#include "pzero/ramify.hpp"

namespace pzero {

namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumEntry make_entry(const FamilyId& fam, const char* tag, std::uint64_t t,
                         int128 two_g, std::uint64_t sq, std::string witness) {
    if (two_g % 2 != 0) throw math_error("doubled genus came out odd");
    const int128 g = two_g / 2;
    SpectrumEntry e;
    e.family = fam;
    e.case_tag = tag;
    e.t = t;
    e.genus = static_cast<std::int64_t>(g);
    e.s_order = expected_order(fam);
    e.sq_order = sq;
    e.witness = std::move(witness);
    e.genus_ge_2 = g >= 2;
    if (e.genus_ge_2) {
        e.order_gt_6gm1 = static_cast<int128>(e.s_order) > 6 * (g - 1);
        e.stab_gt_3g =
            static_cast<int128>(stabilizer_constants(fam).stab_order) > 3 * g;
        e.order_gt_24g2 = static_cast<int128>(e.s_order) > 24 * g * g;
    }
    return e;
}

void push(SpectrumResult& out, SpectrumEntry e) {
    (e.genus_ge_2 ? out.entries : out.filtered).push_back(std::move(e));
}

}  // namespace

SpectrumResult enumerate_spectrum(const FamilyId& family) {
    SpectrumResult out;
    const int128 n = family.n;
    switch (family.name) {
        case Family::PSL2:
            for (std::uint64_t t : divisors_of(family.n + 1)) {
                // an explicit witness exists whenever 3 <= t < n
                std::string w = (t >= 3 && t < family.n) ? "STICH" : "";
                push(out, make_entry(family, "PSL2", t, (int128(t) - 1) * (n - 1),
                                     (family.n + 1) / t, std::move(w)));
            }
            break;
        case Family::PSU3: {
            const std::uint64_t w = (family.n * std::uint64_t{family.n} - family.n + 1) /
                                    family.mu;
            for (std::uint64_t t : divisors_of(w)) {
                std::string wit = t == 1 ? "II" : (family.mu == 3 ? "PSU3Q" : "");
                push(out, make_entry(family, "PSU3-first", t,
                                     (n - 1) * (int128(t) * (n + 1) * (n + 1) -
                                                (n * n + n + 1)),
                                     w / t, std::move(wit)));
            }
            for (std::uint64_t t : divisors_of(family.n + 1))
                push(out, make_entry(family, "PSU3-second", t,
                                     (n - 1) * (int128(t) * (n * n * n + 1) / family.mu -
                                                (n * n + n + 1)),
                                     (family.n + 1) / t, ""));
            break;
        }
        case Family::SU3: {
            if (family.mu != 3)
                throw math_error("the SU3 spectrum case requires 3 | (n+1)");
            const std::uint64_t w3 =
                (family.n * std::uint64_t{family.n} - family.n + 1) / 3;
            for (std::uint64_t t : divisors_of(w3))
                push(out, make_entry(family, "SU3-first", t,
                                     (n - 1) * (3 * int128(t) * (n + 1) * (n + 1) -
                                                (n * n + n + 1)),
                                     w3 / t, "SU3Q"));
            for (std::uint64_t t : divisors_of(family.n + 1))
                push(out, make_entry(family, "SU3-second", t,
                                     (n - 1) * (int128(t) * (n * n * n + 1) -
                                                (n * n + n + 1)),
                                     (family.n + 1) / t,
                                     t == family.n + std::uint64_t{1} ? "IV" : ""));
            break;
        }
        case Family::SZ: {
            const std::uint64_t n0 = family.n0;
            const int128 wild = 2 * int128(n0) * (n - 1);
            for (std::uint64_t t : divisors_of(family.n + 2 * n0 + 1))
                push(out, make_entry(family, "SZ-A", t,
                                     (int128(t) - 1) * (n * n - 1) - int128(t) * wild,
                                     (family.n + 2 * n0 + 1) / t, ""));
            for (std::uint64_t t : divisors_of(family.n - 2 * n0 + 1))
                push(out, make_entry(family, "SZ-B", t,
                                     (int128(t) - 1) * (n * n - 1) + int128(t) * wild,
                                     (family.n - 2 * n0 + 1) / t,
                                     t == 1 ? "III" : ""));
            break;
        }
        case Family::PGU3:
            throw math_error("the spectrum cases cover PSL2, PSU3, SU3 and Sz only");
    }
    return out;
}

bool crosscheck_gqfpf(const SpectrumEntry& e) {
    FamilyId fam = e.family;
    int128 fold = 1;   // 2g - 2 = fold (2g_bar - 2) + extra through a central quotient
    int128 extra = 0;
    if (fam.name == Family::SU3) {
        fam = make_family(Family::PSU3, fam.n);
        fold = 3;
        extra = 2 * (int128(fam.n) * fam.n * fam.n + 1);
    }
    const StabilizerConstants sc = stabilizer_constants(fam);
    const int128 S = expected_order(fam);
    const int128 SP = sc.stab_order;
    const int128 SP1 = sc.unipotent_order;
    const int128 SQ = e.sq_order;
    if (SQ == 0) throw math_error("|S_Q| must be positive");

    const int128 num = S * (SP - SP1 * SQ);
    const int128 den = SQ * (S - SP);
    if (num % den != 0)
        throw math_error("two-short-orbit relation is not integral for " + e.case_tag +
                         " t=" + std::to_string(e.t));
    const int128 two_gbar_m2 = num / den;
    if (fold * two_gbar_m2 + extra != 2 * int128(e.genus) - 2)
        throw math_error("two-short-orbit relation disagrees with the stated genus for " +
                         e.case_tag + " t=" + std::to_string(e.t));

    // Second route: realize d_P = 2g - 2 + |S_P^(1)| + |S_P| as a profile with
    // the non-tame orbit plus the tame orbit of the S_Q points, and recompute.
    const int128 gbar = two_gbar_m2 / 2 + 1;
    if (gbar >= 2) {
        RamificationProfile p;
        p.group_order = static_cast<std::uint64_t>(S);
        p.quotient_genus = 0;
        RamifiedOrbit omega;
        omega.size = static_cast<std::uint64_t>(S / SP);
        omega.filtration = {static_cast<std::uint64_t>(SP),
                            static_cast<std::uint64_t>(SP1)};
        // spread the remaining 2g_bar of wild contribution under S_P^(1)
        int128 rest = 2 * gbar;
        while (rest > 0) {
            const int128 block = std::min<int128>(rest, SP1 - 1);
            omega.filtration.push_back(static_cast<std::uint64_t>(block + 1));
            rest -= block;
        }
        p.orbits.push_back(std::move(omega));
        if (SQ > 1)
            p.orbits.push_back({static_cast<std::uint64_t>(S / SQ),
                                {static_cast<std::uint64_t>(SQ)}});
        if (hurwitz_genus(p) != static_cast<std::uint64_t>(gbar))
            throw math_error("d_P profile does not reproduce the genus for " +
                             e.case_tag + " t=" + std::to_string(e.t));
    }
    return true;
}

BoundReport bound_checks(std::uint64_t group_order, std::uint64_t g, bool abelian,
                         bool solvable, bool fixes_point) {
    BoundReport r;
    r.g = g;
    r.group_order = group_order;
    const int128 G = group_order;
    const int128 gg = g;
    r.le_24g2 = G <= 24 * gg * gg;
    r.le_24ggm1 = G <= 24 * gg * (gg - 1);
    r.le_4gp2 = G <= 4 * gg + 2;
    r.gt_8g = G > 8 * gg;
    r.gt_6gm1 = G > 6 * (gg - 1);
    r.trigger_gt_24g2 = !r.le_24g2;
    r.abelian_bound_respected = !abelian || r.le_4gp2;
    r.solvable_bound_respected = !solvable || fixes_point || r.le_24g2;
    r.routed_to_fixed_point = r.trigger_gt_24g2 && fixes_point;
    return r;
}

QuotientReport quotient_consistency(std::uint32_t n) {
    const FamilyId psu = make_family(Family::PSU3, n);
    QuotientReport rep;
    rep.n = n;
    rep.iv_genus = genus(make_curve_IV(n));

    struct Expected {
        std::uint64_t h;
        std::string label;
        std::int64_t genus;
    };
    std::vector<Expected> expected;
    auto collect = [&expected](const SpectrumResult& res, std::uint64_t scale) {
        for (const SpectrumEntry& e : res.entries)
            expected.push_back({scale * e.sq_order,
                                e.case_tag + " t=" + std::to_string(e.t), e.genus});
    };
    collect(enumerate_spectrum(psu), psu.mu);
    if (psu.mu == 3) collect(enumerate_spectrum(make_family(Family::SU3, n)), 1);

    const std::uint64_t n3p1 = std::uint64_t{n} * n * n + 1;
    rep.all_consistent = true;
    for (std::uint64_t h : divisors_of(n3p1)) {
        QuotientCheck qc;
        qc.h = h;
        try {
            qc.genus = quotient_genus_tame(rep.iv_genus, h, n3p1);
        } catch (const math_error&) {
            qc.genus = std::nullopt;
        }
        bool ok = true;
        for (const Expected& ex : expected)
            if (ex.h == h) {
                qc.matched.push_back(ex.label);
                ok = ok && qc.genus.has_value() &&
                     static_cast<std::int64_t>(*qc.genus) == ex.genus;
            }
        // an admissible quotient must be witnessed by the spectrum and vice versa
        ok = ok && qc.genus.has_value() == !qc.matched.empty();
        qc.consistent = ok;
        rep.all_consistent = rep.all_consistent && ok;
        rep.checks.push_back(std::move(qc));
    }
    return rep;
}

}  // namespace pzero
