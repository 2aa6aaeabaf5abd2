#pragma once
// The explicit even-characteristic zero-2-rank curve families:
//   (I)   y^2 + y + x^(2^k+1)          hyperelliptic, Aut fixes a point
//   (II)  y^n + y + x^(n+1)            Hermitian, Aut = PGU(3,n)
//   (III) x^n0 (x^n + x) + y^n + y     Suzuki (DLS), Aut = Sz(n)
//   (IV)  y^(n^3+1) + (x^n+x) s(x)^(n+1), Aut contains SU(3,n)
// plus the Stichtenoth curves y^(2^nu) + y + x^m and the unitary quotient
// curves y^E + x^(n^3) + x + (x^n+x)^(n^2-n+1): genus formulas, point
// enumeration, automorphism-action verification, and 2-rank certificates.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pzero/field.hpp"

namespace pzero {

enum class CurveFamily { I, II, III, IV, STICH, SU3Q, PSU3Q };
const char* to_string(CurveFamily f);

struct CurveSpec {
    CurveFamily family = CurveFamily::I;
    std::uint32_t k = 0;        // (I): exponent parameter, k >= 2
    std::uint32_t n = 0;        // (II)(III)(IV)/quotients: n = 2^r
    std::uint32_t nu = 0;       // STICH: A(Y) = Y^(2^nu) + Y
    std::uint64_t m = 0;        // STICH: B(X) = X^m
    std::uint64_t t = 0;        // SU3Q/PSU3Q: divisor parameter
    bool mu3 = false;           // PSU3Q: quotient mode for 3 | (n+1)
    std::string equation;       // defining polynomial, human-readable
    int natural_field_exp = 0;  // F_{2^e} carrying the standard point set
};

CurveSpec make_curve_I(std::uint32_t k);
CurveSpec make_curve_II(std::uint32_t n);
CurveSpec make_curve_III(std::uint32_t n);
CurveSpec make_curve_IV(std::uint32_t n);
// y^(2^nu) + y + x^m with m >= 3, m < 2^nu, 2^nu = -1 (mod m).
CurveSpec make_curve_stich(std::uint32_t nu, std::uint64_t m);
// y^((n^2-n+1)/t) + x^(n^3) + x + (x^n+x)^(n^2-n+1), 3 | (n+1), t | (n^2-n+1)/3.
CurveSpec make_curve_su3q(std::uint32_t n, std::uint64_t t);
// Same plane model family attached to PSU(3,n): for 3 | (n+1) the exponent is
// (n^2-n+1)/(3t); for 3 | (n-1) it is (n^2-n+1)/t with t | n^2-n+1.
CurveSpec make_curve_psu3q(std::uint32_t n, std::uint64_t t);

std::uint64_t genus(const CurveSpec& c);

struct AutDescriptor {
    std::string description;  // e.g. "PGU(3,4)", "PSL(2,8) x C_3", "contains SU(3,8)"
    std::uint64_t order = 0;  // of the named group
    bool full_group_known = false;  // false when only containment is asserted
};
AutDescriptor expected_aut_order(const CurveSpec& c);

struct PointCount {
    int field_exp = 0;
    std::uint64_t affine_smooth = 0;
    std::uint64_t infinity_correction = 0;
    std::uint64_t total = 0;
    std::string note;
};
// Brute-force enumeration over F_{2^e}; e capped at 20 (families I, II, III,
// STICH) or 12 (IV and the unitary quotients, whose models are singular).
PointCount rational_points(const CurveSpec& c, int e);

struct AutVerification {
    std::uint32_t point_count = 0;    // rational points over the natural field
    std::uint64_t group_order = 0;    // order of the generated permutation group
    std::uint64_t expected_order = 0; // full group (II, III) or translations (I)
    bool points_match = false;
    bool order_match = false;
    std::string detail;
};
// (II), (III): the natural 2-transitive action is rebuilt, its point labels
// are decoded and matched against the enumerated curve points, and the group
// order is compared. (I): the translation group (x,y) -> (x+a, y+Q_a(x)+b) is
// constructed point-by-point over F_{2^(2k)} and must have order 2^(2k+1).
// Throws math_error if any generator moves a curve point off the curve.
AutVerification verify_automorphisms(const CurveSpec& c);

// 0 for families I, II, III, STICH, certified by Deuring-Shafarevich with the
// elementary-abelian cover group (orders 2, n, n^2, 2^nu) acting with exactly
// one fixed point over a rational quotient. Throws for other families.
std::uint64_t two_rank(const CurveSpec& c);

enum class Section7Kind { s71, s72, s73 };

struct Section7Report {
    CurveSpec spec;
    std::uint64_t stated_genus = 0;  // the closed-form genus as stated
    AutDescriptor group;
    // Independent route: quotient of (IV) by the odd cyclic group of order
    // t(n+1) (3t(n+1) in the mu3 mode) fixing its n^3+1 distinguished points.
    std::optional<std::uint64_t> quotient_genus;
    std::optional<bool> matches;  // nullopt when no second route applies (s71)
};
// kind s71: (n_or_nu, t_or_m) = (nu, m); s72: (n, t) with 3 | (n+1);
// s73: (n, t) with 3 | (n-1). Disagreements between the stated genus and the
// quotient recomputation are reported in `matches`, never silently dropped.
Section7Report build_section7_curve(Section7Kind kind, std::uint32_t n_or_nu,
                                    std::uint64_t t_or_m);

// Orders of the stabilizer of a point under a finite automorphism group of an
// elliptic curve in characteristic 2.
inline constexpr std::array<std::uint64_t, 6> kEllipticStabilizerOrders{2, 4, 6, 8, 12, 24};

}  // namespace pzero
