#pragma once
// The admissible genus spectrum when a zero-2-rank curve in characteristic 2
// carries one of the big simple (or quasi-simple) groups PSL(2,n), PSU(3,n),
// SU(3,n), Sz(n): one genus per divisor parameter t, each cross-checked by an
// independent ramification-theoretic route, plus the arithmetic bound
// predicates and the quotient-curve consistency report for family (IV).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pzero/lingrp.hpp"

namespace pzero {

struct SpectrumEntry {
    FamilyId family;
    std::string case_tag;  // PSL2 | PSU3-first | PSU3-second | SU3-first |
                           // SU3-second | SZ-A | SZ-B
    std::uint64_t t = 0;   // divisor parameter of the sub-case modulus
    std::int64_t genus = 0;       // may be < 2 (even negative) on the filtered list
    std::uint64_t s_order = 0;    // |S|
    std::uint64_t sq_order = 0;   // |S_Q|; for SU3 taken at the central quotient
    std::string witness;          // "", "II", "III", "IV", "STICH", "PSU3Q", "SU3Q"
    bool genus_ge_2 = false;
    bool order_gt_6gm1 = false;   // |S| > 6(g-1)
    bool stab_gt_3g = false;      // |S_P| > 3g, the representable proxy for the
                                  // "even stabilizer bigger than 3g" condition
    bool order_gt_24g2 = false;   // |S| > 24 g^2
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;   // genus >= 2
    std::vector<SpectrumEntry> filtered;  // kept for transparency, never hidden
};

// One entry per divisor t of each sub-case modulus. Witness tags name the
// curve family that realizes the entry: PSU3-first t=1 -> II, SZ-B t=1 -> III,
// SU3-second t=n+1 -> IV; the remaining explicit constructions carry
// STICH / PSU3Q / SU3Q.
SpectrumResult enumerate_spectrum(const FamilyId& family);

// Recomputes the genus from |S|, |S_P|, |S_P^(1)|, |S_Q| via the exact
// two-short-orbit relation
//     2g - 2 = |S| (|S_P| - |S_P^(1)| |S_Q|) / (|S_Q| (|S| - |S_P|)),
// then realizes d_P = 2g - 2 + |S_P^(1)| + |S_P| as an explicit ramification
// profile and confirms the Hurwitz genus agrees. SU3 entries are folded
// through the order-3 central quotient. Returns true; throws math_error on
// any mismatch (which would indicate a transcription bug in the formulas).
bool crosscheck_gqfpf(const SpectrumEntry& e);

struct BoundReport {
    std::uint64_t g = 0;
    std::uint64_t group_order = 0;
    bool le_24g2 = false;    // |G| <= 24 g^2
    bool le_24ggm1 = false;  // |G| <= 24 g (g-1)
    bool le_4gp2 = false;    // |G| <= 4g + 2
    bool gt_8g = false;      // |G| > 8g
    bool gt_6gm1 = false;    // |G| > 6 (g-1)
    bool trigger_gt_24g2 = false;           // the classification threshold
    bool abelian_bound_respected = false;   // abelian => |G| <= 4g + 2
    bool solvable_bound_respected = false;  // solvable with no fixed point
                                            //   => |G| <= 24 g^2
    bool routed_to_fixed_point = false;     // trigger holds but G fixes a point
};

// Pure arithmetic; expects g >= 2.
BoundReport bound_checks(std::uint64_t group_order, std::uint64_t g, bool abelian,
                         bool solvable, bool fixes_point);

struct QuotientCheck {
    std::uint64_t h = 0;                 // order of the tame cyclic quotient group
    std::optional<std::uint64_t> genus;  // empty: inadmissible (negative genus)
    std::vector<std::string> matched;    // spectrum entries expecting this h
    bool consistent = false;
};

struct QuotientReport {
    std::uint32_t n = 0;
    std::uint64_t iv_genus = 0;
    std::vector<QuotientCheck> checks;  // one per divisor h of n^3 + 1
    bool all_consistent = false;
};

// Cross-validates the spectrum against tame cyclic quotients of the family
// (IV) curve: for every divisor h of n^3+1, the quotient by the cyclic group
// of order h fixing the n^3+1 distinguished points must reproduce exactly the
// spectrum genus of the entries whose pointwise kernel has order h (PSU3
// entries expect h = mu |S_Q|, SU3 entries h = |S_Q|). Mismatches are
// reported, never thrown.
QuotientReport quotient_consistency(std::uint32_t n);

}  // namespace pzero
