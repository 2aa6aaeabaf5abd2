#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pzero/ramify.hpp"

using pzero::ASCover;
using pzero::as_cover_analyze;
using pzero::as_reduce;
using pzero::deuring_shafarevich;
using pzero::different_exponent;
using pzero::FieldSpec;
using pzero::hurwitz_genus;
using pzero::hurwitz_genus_tame;
using pzero::make_as_cover;
using pzero::make_field;
using pzero::math_error;
using pzero::Poly;
using pzero::quotient_genus_tame;
using pzero::RamificationProfile;
using pzero::RationalFn;

namespace {

Poly P(const FieldSpec& f, std::vector<std::uint32_t> coeffs) {
    return Poly(f, std::move(coeffs));  // coeffs[i] multiplies x^i
}

// x^(2^k + 1) over F_2
ASCover hyperelliptic_cover(std::uint32_t k) {
    const FieldSpec& f = pzero::make_field(1);
    return make_as_cover(f, Poly::monomial(f, 1, (std::size_t{1} << k) + 1),
                         Poly::constant(f, 1));
}

}  // namespace

TEST_CASE("different exponent of a filtration") {
    CHECK(different_exponent({1}) == 0);                      // unramified
    CHECK(different_exponent({3, 1}) == 2);                   // tame, e - 1
    CHECK(different_exponent({2, 2, 2, 2}) == 4);             // wild jump at 3
    CHECK(different_exponent({8, 8, 8, 8, 8, 8}) == 42);
    CHECK(different_exponent({64, 64, 4, 4, 1}) == 132);
    CHECK_THROWS_AS(different_exponent({2, 4}), math_error);  // increasing
    CHECK_THROWS_AS(different_exponent({2, 0}), math_error);
}

TEST_CASE("Hurwitz genus from a ramification profile") {
    // no ramification, trivial group, rational quotient
    CHECK(hurwitz_genus({1, 0, {}}) == 0);

    // degree-2 cover totally ramified at one point, jump at m = 2^k + 1
    for (std::uint32_t k = 1; k <= 6; ++k) {
        const std::uint64_t m = (std::uint64_t{1} << k) + 1;
        RamificationProfile p{2, 0, {{1, std::vector<std::uint64_t>(m + 1, 2)}}};
        CHECK(hurwitz_genus(p) == std::uint64_t{1} << (k - 1));
    }
    // k = 3: the different exponent is (m+1)(p-1) = 10 and the genus is 4
    RamificationProfile p3{2, 0, {{1, std::vector<std::uint64_t>(10, 2)}}};
    CHECK(different_exponent(p3.orbits[0].filtration) == 10);
    CHECK(hurwitz_genus(p3) == 4);

    // elementary abelian of order 8, one totally ramified point, d = 42
    RamificationProfile p8{8, 0, {{1, {8, 8, 8, 8, 8, 8}}}};
    CHECK(hurwitz_genus(p8) == 14);

    // genus grows linearly in the quotient genus
    CHECK(hurwitz_genus({6, 2, {}}) == 7);  // unramified degree-6 cover of genus 2

    // inconsistent profiles are rejected rather than rounded
    CHECK_THROWS_AS(hurwitz_genus({2, 0, {{1, {2}}}}), math_error);  // 2g-2 odd
    CHECK_THROWS_AS(hurwitz_genus({4, 0, {{1, {2, 1}}}}), math_error);  // g < 0
    CHECK_THROWS_AS(hurwitz_genus({2, 0, {{2, {2, 1}}}}), math_error);  // 2*2 > 2
    CHECK_THROWS_AS(hurwitz_genus({12, 0, {{1, {6, 6, 1}}}}), math_error);  // wild part 6
}

TEST_CASE("tame Hurwitz over short orbit sizes") {
    // PSL(2,8) on the projective line: orbits of sizes 9 and 84? No: two short
    // orbits of a genus computation -- use the generic identity instead.
    CHECK(hurwitz_genus_tame(1, 5, {}) == 5);
    CHECK(hurwitz_genus_tame(13, 6, {13, 13}) == 66);  // no short orbits shrink it
    // 2g - 2 = 13(2*6 - 2) + (13 - 1) + (13 - 1): g = 1 + (130 + 24)/2 = 78
    CHECK(hurwitz_genus_tame(13, 6, {1, 1}) == 78);
    CHECK_THROWS_AS(hurwitz_genus_tame(4, 0, {3}), math_error);  // 3 does not divide 4
}

TEST_CASE("Deuring-Shafarevich 2-rank arithmetic") {
    CHECK(deuring_shafarevich(2, 0, {1}) == 0);
    CHECK(deuring_shafarevich(2, 0, {1, 1}) == 1);
    for (std::uint32_t k = 1; k <= 10; ++k)
        CHECK(deuring_shafarevich(std::uint64_t{1} << k, 0, {1}) == 0);
    CHECK(deuring_shafarevich(8, 1, {}) == 1);       // unramified: gamma - 1 scales
    CHECK(deuring_shafarevich(4, 0, {1, 2}) == 2);   // 1 - 4 + 3 + 2
    CHECK_THROWS_AS(deuring_shafarevich(6, 0, {1}), math_error);    // not a 2-group
    CHECK_THROWS_AS(deuring_shafarevich(4, 0, {}), math_error);     // gamma = -3
    CHECK_THROWS_AS(deuring_shafarevich(4, 0, {3, 1}), math_error); // 3 does not divide 4
}

TEST_CASE("tame cyclic quotient genus") {
    CHECK(quotient_genus_tame(17, 1, 0) == 17);
    CHECK(quotient_genus_tame(456, 13, 65) == 6);
    CHECK(quotient_genus_tame(456, 5, 65) == 66);
    CHECK(quotient_genus_tame(456, 1, 0) == 456);
    CHECK_THROWS_AS(quotient_genus_tame(456, 65, 65), math_error);  // g' < 0
    CHECK_THROWS_AS(quotient_genus_tame(456, 2, 65), math_error);   // even order
    CHECK_THROWS_AS(quotient_genus_tame(10, 3, 1), math_error);     // non-integer
}

TEST_CASE("polynomial arithmetic over small fields") {
    const FieldSpec& f2 = pzero::make_field(1);
    const FieldSpec& f8 = pzero::make_field(3);

    Poly a = P(f8, {1, 3, 0, 7});  // 7x^3 + 3x + 1
    Poly b = P(f8, {5, 1});        // x + 5
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(a.eval(5) == r.coeff(0));  // remainder theorem at the root of b

    // gcd of (x+2)(x+3) and (x+2)(x+4) over F_8
    Poly u = P(f8, {2, 1}) * P(f8, {3, 1});
    Poly v = P(f8, {2, 1}) * P(f8, {4, 1});
    CHECK(gcd(u, v) == P(f8, {2, 1}));
    CHECK(gcd(u, Poly(f8)) == u.monic());

    // modular inverse
    Poly m = P(f8, {1, 1, 1});  // x^2 + x + 1
    Poly inv = modinv(P(f8, {0, 1}), m);
    CHECK((inv * P(f8, {0, 1})) % m == Poly::constant(f8, 1));
    CHECK_THROWS_AS(modinv(m, m * m), math_error);

    // squares and square roots
    Poly s = P(f8, {3, 0, 1});  // x^2 + 3
    CHECK(poly_sqrt(s * s) == s);
    CHECK_THROWS_AS(poly_sqrt(P(f8, {0, 1})), math_error);

    // derivative in characteristic 2 kills even powers
    CHECK(P(f2, {0, 1, 1, 1}).derivative() == P(f2, {1, 0, 1}));
    CHECK(P(f8, {1, 0, 5}).derivative() == Poly(f8));

    CHECK(P(f8, {1, 0, 7}).str() == "7*x^2 + 1");
    CHECK(Poly(f8).str() == "0");
}

TEST_CASE("squarefree and distinct-degree factorization") {
    const FieldSpec& f2 = pzero::make_field(1);
    const FieldSpec& f4 = pzero::make_field(2);

    Poly x = Poly::x(f2);
    Poly x1 = P(f2, {1, 1});       // x + 1
    Poly irr2 = P(f2, {1, 1, 1});  // x^2 + x + 1, irreducible over F_2

    // b = x^2 (x+1)^3 (x^2+x+1)^2
    Poly b = (x * x) * (x1 * x1 * x1) * (irr2 * irr2);
    auto parts = squarefree_decomposition(b);
    REQUIRE(parts.size() == 2);
    Poly rebuilt = Poly::constant(f2, 1);
    for (const auto& [part, mult] : parts) {
        Poly pw = Poly::constant(f2, 1);
        for (std::uint64_t i = 0; i < mult; ++i) pw = pw * part;
        rebuilt = rebuilt * pw;
    }
    CHECK(rebuilt == b);
    CHECK(parts[0].second == 2);  // x and the quadratic both at multiplicity 2
    CHECK(parts[0].first == x * irr2);
    CHECK(parts[1].second == 3);
    CHECK(parts[1].first == x1);

    // distinct-degree splitting of a squarefree product
    auto dd = distinct_degree_factorization(x * x1 * irr2);
    REQUIRE(dd.size() == 2);
    CHECK(dd[0].second == 1);
    CHECK(dd[0].first == x * x1);
    CHECK(dd[1].second == 2);
    CHECK(dd[1].first == irr2);

    // over F_4 the quadratic splits into two degree-1 places
    Poly irr2_f4 = P(f4, {1, 1, 1});
    auto dd4 = distinct_degree_factorization(irr2_f4);
    REQUIRE(dd4.size() == 1);
    CHECK(dd4[0].second == 1);
    CHECK(dd4[0].first.degree() == 2);
    // its roots are the two elements outside F_2
    CHECK(irr2_f4.eval(2) == 0);
    CHECK(irr2_f4.eval(3) == 0);

    // x^8 + x stays squarefree and splits completely over F_8
    const FieldSpec& f8 = pzero::make_field(3);
    Poly frob = Poly::monomial(f8, 1, 8) + Poly::x(f8);
    auto dd8 = distinct_degree_factorization(frob);
    REQUIRE(dd8.size() == 1);
    CHECK(dd8[0].second == 1);
    CHECK(dd8[0].first.degree() == 8);
}

TEST_CASE("Artin-Schreier reduction to odd pole orders") {
    const FieldSpec& f2 = pzero::make_field(1);

    // x^2 reduces to x
    ASCover c = as_reduce(make_as_cover(f2, P(f2, {0, 0, 1}), Poly::constant(f2, 1)));
    CHECK(c.reduced);
    CHECK(!c.degenerate);
    CHECK(c.f.num == Poly::x(f2));
    CHECK(c.f.den == Poly::constant(f2, 1));

    // x^5 is already reduced
    c = as_reduce(make_as_cover(f2, Poly::monomial(f2, 1, 5), Poly::constant(f2, 1)));
    CHECK(c.f.num == Poly::monomial(f2, 1, 5));

    // x^4 + x^3 -> x^3 + x^2
    c = as_reduce(make_as_cover(f2, P(f2, {0, 0, 0, 1, 1}), Poly::constant(f2, 1)));
    CHECK(c.f.num == P(f2, {0, 0, 1, 1}));

    // x/(x+1)^2 is substitutionally trivial: h = 1/(x+1) absorbs it
    Poly x1 = P(f2, {1, 1});
    c = as_reduce(make_as_cover(f2, Poly::x(f2), x1 * x1));
    CHECK(c.degenerate);
    CHECK(c.f.num.is_zero());

    // 1/(x^2+x+1)^2 over F_2: even order at a degree-2 place
    Poly irr2 = P(f2, {1, 1, 1});
    c = as_reduce(make_as_cover(f2, Poly::constant(f2, 1), irr2 * irr2));
    CHECK(!c.degenerate);
    CHECK(c.f.den == irr2);  // pole order dropped from 2 to 1
    CHECK(c.f.num.degree() < 2);

    // constants are flagged degenerate, not rejected
    c = as_reduce(make_as_cover(f2, Poly::constant(f2, 1), Poly::constant(f2, 1)));
    CHECK(c.degenerate);

    // a messier mixed case over F_8: every pole order ends up odd
    const FieldSpec& f8 = pzero::make_field(3);
    Poly num = P(f8, {3, 1, 4, 1, 5});
    Poly den = P(f8, {0, 0, 1}) * P(f8, {2, 1});  // x^2 (x + 2)
    c = as_reduce(make_as_cover(f8, num, den));
    CHECK(c.reduced);
    for (const auto& [part, mult] : squarefree_decomposition(c.f.den))
        CHECK(mult % 2 == 1);
    const int diff = c.f.num.degree() - c.f.den.degree();
    CHECK((diff <= 0 || diff % 2 == 1));
}

TEST_CASE("Artin-Schreier cover analysis") {
    const FieldSpec& f2 = pzero::make_field(1);

    // f = x^(2^k+1): one pole at infinity, genus 2^(k-1), 2-rank 0
    for (std::uint32_t k = 1; k <= 5; ++k) {
        auto an = as_cover_analyze(as_reduce(hyperelliptic_cover(k)));
        REQUIRE(an.places.size() == 1);
        CHECK(an.places[0].place == "inf");
        CHECK(an.places[0].pole_order == (std::uint64_t{1} << k) + 1);
        CHECK(an.genus == std::uint64_t{1} << (k - 1));
        CHECK(an.two_rank == 0);
    }

    // f = x + 1/x: poles at 0 and infinity, genus 1, 2-rank 1 (ordinary)
    auto an = as_cover_analyze(as_reduce(make_as_cover(f2, P(f2, {1, 0, 1}), Poly::x(f2))));
    REQUIRE(an.places.size() == 2);
    CHECK(an.genus == 1);
    CHECK(an.two_rank == 1);
    CHECK(an.places[0].pole_order == 1);
    CHECK(an.places[1].place == "inf");
    CHECK(an.places[1].filtration == std::vector<std::uint64_t>{2, 2, 1});

    // f = x^3: supersingular elliptic
    an = as_cover_analyze(as_reduce(make_as_cover(f2, Poly::monomial(f2, 1, 3),
                                                  Poly::constant(f2, 1))));
    CHECK(an.genus == 1);
    CHECK(an.two_rank == 0);

    // one ramified place <=> 2-rank zero, on an assortment of covers
    for (const auto& [numc, denc] : std::vector<std::pair<std::vector<std::uint32_t>,
                                                          std::vector<std::uint32_t>>>{
             {{0, 1}, {1}},           // x
             {{1}, {0, 1}},           // 1/x
             {{1, 0, 0, 1}, {1, 1}},  // (x^3+1)/(x+1) = x^2+x+1 -> reduces
             {{1}, {0, 0, 0, 1}},     // 1/x^3
             {{1, 1, 0, 0, 0, 1}, {0, 1}}}) {
        ASCover cc = as_reduce(make_as_cover(f2, P(f2, numc), P(f2, denc)));
        if (cc.degenerate) continue;
        auto a2 = as_cover_analyze(cc);
        CHECK((a2.two_rank == 0) == (a2.places.size() == 1));
        CHECK(a2.two_rank <= a2.genus);
    }

    // non-split pole: 1/(x^2+x+1) over F_2 has a single degree-2 place,
    // genus 1, but 2-rank 1 (the place contributes its degree)
    Poly irr2 = P(f2, {1, 1, 1});
    an = as_cover_analyze(as_reduce(make_as_cover(f2, Poly::constant(f2, 1), irr2)));
    REQUIRE(an.places.size() == 1);
    CHECK(an.places[0].degree == 2);
    CHECK(an.genus == 1);
    CHECK(an.two_rank == 1);

    // the same function over F_4 splits into two rational poles; the genus and
    // 2-rank are geometric, so both stay put
    const FieldSpec& f4 = pzero::make_field(2);
    an = as_cover_analyze(as_reduce(make_as_cover(f4, Poly::constant(f4, 1),
                                                  P(f4, {1, 1, 1}))));
    REQUIRE(an.places.size() == 2);
    CHECK(an.places[0].degree == 1);
    CHECK(an.genus == 1);
    CHECK(an.two_rank == 1);

    // error paths
    CHECK_THROWS_AS(as_cover_analyze(hyperelliptic_cover(2)), math_error);  // not reduced
    ASCover cst = as_reduce(make_as_cover(f2, Poly::constant(f2, 1), Poly::constant(f2, 1)));
    CHECK_THROWS_AS(as_cover_analyze(cst), math_error);  // degenerate
}

TEST_CASE("profile round trip through the analysis") {
    // The assembled profile re-derives the same genus through hurwitz_genus.
    const FieldSpec& f8 = pzero::make_field(3);
    Poly num = P(f8, {1, 6, 0, 0, 0, 0, 0, 1});  // x^7 + 6x + 1
    Poly den = Poly::x(f8) * P(f8, {5, 1});      // x (x + 5)
    auto an = as_cover_analyze(as_reduce(make_as_cover(f8, num, den)));
    CHECK(hurwitz_genus(an.profile) == an.genus);
    CHECK(an.profile.group_order == 2);
    std::uint64_t pts = 0;
    for (const auto& o : an.profile.orbits) pts += o.size;
    std::uint64_t degs = 0;
    for (const auto& p : an.places) degs += p.degree;
    CHECK(pts == degs);
}
