#pragma once
// Explicit constructions of the even-characteristic linear group families in
// their natural 2-transitive representations, with order formulas and
// stabilizer-structure constants:
//   PSL(2,n)          on the projective line, degree n+1
//   PGU(3,n)/PSU(3,n) on the Hermitian unital, degree n^3+1
//   Sz(n)             on the Tits ovoid, degree n^2+1
//   SU(3,n)           as 3x3 matrices acting on nonzero vectors (chain only)
// with n a power of 2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pzero/field.hpp"
#include "pzero/perm.hpp"

namespace pzero {

enum class Family { PSL2, SZ, PGU3, PSU3, SU3 };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct FamilyId {
    Family name = Family::PSL2;
    std::uint32_t n = 0;   // power of 2, n >= 4
    std::uint32_t r = 0;   // n = 2^r
    std::uint32_t n0 = 0;  // Suzuki parameter: n = 2*n0^2
    std::uint32_t mu = 1;  // gcd(3, n+1) for the unitary families
};

// Validates the family/n combination (n = 2^r >= 4; Suzuki needs an odd
// exponent, n = 2^(2k+1) >= 8) and fills in the derived parameters.
FamilyId make_family(Family name, std::uint32_t n);

std::uint64_t expected_order(const FamilyId& f);

struct StabilizerConstants {
    std::uint64_t stab_order = 0;        // |S_P|, one-point stabilizer
    std::uint64_t unipotent_order = 0;   // |S_P^(1)|, its (normal) Sylow-2
    std::uint64_t complement_order = 0;  // |H|, the cyclic complement
    std::uint32_t degree = 0;            // points of the natural action
};
StabilizerConstants stabilizer_constants(const FamilyId& f);

// Admissible orders of cyclic subgroups acting without fixed points:
// divisors of n+1 (PSL2); of n+1 and (n^2-n+1)/mu (PSU3); of n-2n0+1 and
// n+2n0+1 (SZ).  Sorted, deduplicated, including 1.
std::vector<std::uint64_t> fpf_cyclic_divisors(const FamilyId& f);

struct NaturalAction {
    FamilyId family;
    PermGroup group;
    std::vector<std::string> point_labels;          // decodable, "inf" last
    std::uint32_t distinguished_point = 0;          // index of infinity
    std::vector<Permutation> unipotent_generators;  // translations fixing inf
};

NaturalAction build_psl2(std::uint32_t n);
NaturalAction build_pgu3(std::uint32_t n);
NaturalAction build_psu3(std::uint32_t n);
NaturalAction build_sz(std::uint32_t n);
// Dispatch by family id (SU3 is not a permutation action; see below).
NaturalAction build_natural_action(const FamilyId& f);

// The constructive Sylow-2: the translation subgroup fixing infinity.
PermGroup unipotent_subgroup(const NaturalAction& act);

// Seeded random search for a generator of a fixed-point-free cyclic subgroup
// of order c; all its nontrivial powers are verified fixed-point-free.
std::optional<Permutation> fpf_witness(const NaturalAction& act, std::uint64_t c,
                                       std::uint64_t max_draws = 20000);

struct Su3Handle {
    FamilyId family;                 // name == SU3
    std::uint64_t order = 0;         // from the matrix stabilizer chain
    std::uint32_t center_order = 0;  // scalar matrices wI with w^3 = 1
    std::uint32_t degree = 0;        // nonzero vectors of F_{n^2}^3
};
// Matrix-group handle for SU(3,n); n capped at 8 (vector-action degree
// (n^2)^3 - 1 = 262143 there).
Su3Handle build_su3_matrix(std::uint32_t n);

}  // namespace pzero
