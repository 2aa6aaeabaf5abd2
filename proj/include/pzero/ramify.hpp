#pragma once
// Hurwitz and Deuring-Shafarevich arithmetic over even characteristic:
// ramification filtrations and different exponents, genus bookkeeping for
// group actions, and analysis of Artin-Schreier double covers y^2 + y = f(x)
// of the rational function field.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pzero/field.hpp"

namespace pzero {

// ---------------------------------------------------------------------------
// Ramification profiles

struct RamifiedOrbit {
    std::uint64_t size = 1;                   // number of points in the orbit
    std::vector<std::uint64_t> filtration;    // |G^(0)| >= |G^(1)| >= ... >= 1
};

struct RamificationProfile {
    std::uint64_t group_order = 1;
    std::uint64_t quotient_genus = 0;
    std::vector<RamifiedOrbit> orbits;
};

// Throws math_error unless: every filtration is non-increasing with entries
// >= 1, the second entry (the wild part) is a power of 2 when present, and
// orbit_size * filtration[0] divides the group order.
void validate_profile(const RamificationProfile& p);

// Different exponent d_Q = sum_i (|G^(i)| - 1); equals e-1 exactly when tame.
std::uint64_t different_exponent(const std::vector<std::uint64_t>& filtration);

// Genus from 2g - 2 = |G|(2g' - 2) + sum over orbits of size * d_Q.
// Throws if the result is not a non-negative integer.
std::uint64_t hurwitz_genus(const RamificationProfile& p);

// Tame specialization over short orbit sizes l_i:
// 2g - 2 = |G|(2g' - 2) + sum (|G| - l_i).
std::uint64_t hurwitz_genus_tame(std::uint64_t group_order, std::uint64_t quotient_genus,
                                 const std::vector<std::uint64_t>& short_orbit_sizes);

// 2-rank arithmetic for a 2-group action:
// gamma - 1 = |S|(gamma' - 1) + sum (|S| - l_i).
std::uint64_t deuring_shafarevich(std::uint64_t group_order, std::uint64_t gamma_quotient,
                                  const std::vector<std::uint64_t>& short_orbit_sizes);

// Solves 2*g_top - 2 = h*(2g' - 2) + fixed_point_count*(h - 1) for g'
// (tame cyclic quotient of odd order h). Throws when no consistent g' exists.
std::uint64_t quotient_genus_tame(std::uint64_t g_top, std::uint64_t h_order,
                                  std::uint64_t fixed_point_count);

// ---------------------------------------------------------------------------
// Polynomials over F_{2^e}

class Poly {
public:
    Poly() = default;  // placeholder; not usable in arithmetic
    explicit Poly(const FieldSpec& f) : f_(&f) {}  // zero polynomial
    Poly(const FieldSpec& f, std::vector<std::uint32_t> coeffs);

    static Poly constant(const FieldSpec& f, std::uint32_t c);
    static Poly x(const FieldSpec& f);
    // c * x^k
    static Poly monomial(const FieldSpec& f, std::uint32_t c, std::size_t k);

    const FieldSpec& field() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t lc() const;  // leading coefficient; throws on zero

    Poly operator+(const Poly& o) const;  // also subtraction (char 2)
    Poly operator*(const Poly& o) const;
    Poly scaled(std::uint32_t s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    std::uint32_t eval(std::uint32_t x) const;
    Poly derivative() const;
    Poly monic() const;
    std::string str() const;  // e.g. "x^2 + 3*x + 1"

private:
    const FieldSpec* f_ = nullptr;
    std::vector<std::uint32_t> c_;  // c_[i] is the coefficient of x^i
    void trim();
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient
Poly operator%(const Poly& a, const Poly& b);  // remainder
Poly gcd(Poly a, Poly b);                      // monic
// Inverse of a modulo m (extended Euclid); throws if gcd(a, m) != 1.
Poly modinv(const Poly& a, const Poly& m);
// Square root of a perfect square (all odd coefficients vanish).
Poly poly_sqrt(const Poly& a);

// Monic input. Returns pairwise-coprime squarefree parts with multiplicities,
// product of part^mult recovering the input.
std::vector<std::pair<Poly, std::uint64_t>> squarefree_decomposition(Poly b);
// Monic squarefree input. Returns (product of irreducible factors of degree d,
// d) pairs in increasing d.
std::vector<std::pair<Poly, std::uint32_t>> distinct_degree_factorization(Poly b);

// ---------------------------------------------------------------------------
// Rational functions and Artin-Schreier covers

struct RationalFn {
    Poly num, den;
    // Normalized form: coprime with monic denominator.
    static RationalFn of(Poly num, Poly den);
    static RationalFn zero(const FieldSpec& f);
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
    bool is_constant() const { return den.degree() == 0 && num.degree() <= 0; }
};

struct ASCover {
    const FieldSpec* field = nullptr;
    RationalFn f;            // y^2 + y = f(x)
    bool reduced = false;    // every pole of f has odd order
    bool degenerate = false; // f constant after reduction: split or trivial
};

ASCover make_as_cover(const FieldSpec& f, Poly num, Poly den);

// Substitutes f -> f + h^2 + h until every pole (finite places through the
// denominator factorization, infinity through degree bookkeeping) has odd
// order. The accumulated h is re-verified against the returned function.
ASCover as_reduce(const ASCover& c);

struct PlaceReport {
    std::string place;                      // defining polynomial, or "inf"
    std::uint32_t degree = 1;               // residue degree of the place
    std::uint64_t pole_order = 0;           // odd once reduced
    std::vector<std::uint64_t> filtration;  // 2 repeated (order+1) times, then 1
};

struct ASAnalysis {
    std::vector<PlaceReport> places;  // one entry per place, conjugates repeated
    std::uint64_t genus = 0;
    std::uint64_t two_rank = 0;
    RamificationProfile profile;      // one orbit per geometric point
};

// Requires a reduced, non-degenerate cover. Genus from the Hurwitz formula
// (2g - 2 = -4 + sum deg*(order+1)), 2-rank from Deuring-Shafarevich; the two
// routes are cross-checked internally.
ASAnalysis as_cover_analyze(const ASCover& c);

}  // namespace pzero
