#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <map>

#include "pzero/common.hpp"
#include "pzero/field.hpp"

using namespace pzero;

namespace {

// Independent GF(2)[x] helpers for oracle checks (bit-encoded polynomials).
int pdeg(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t pmod(std::uint64_t a, std::uint64_t m) {
    int dm = pdeg(m);
    while (a && pdeg(a) >= dm) a ^= m << (pdeg(a) - dm);
    return a;
}

bool poly_irreducible(std::uint64_t f) {
    int d = pdeg(f);
    if (d <= 0) return false;
    for (std::uint64_t g = 2; pdeg(g) <= d / 2; ++g)
        if (pdeg(g) >= 1 && pmod(f, g) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("modulus table is irreducible of the right degree") {
    for (int r = 1; r <= 20; ++r) {
        const FieldSpec& f = make_field(r);
        CHECK(pdeg(f.modulus) == r);
        CHECK((f.modulus & 1) == 1);    // nonzero constant term
        CHECK(poly_irreducible(f.modulus));
        // canonical: no smaller irreducible with nonzero constant term
        for (std::uint64_t c = (1ull << r) | 1; c < f.modulus; c += 2)
            CHECK_FALSE(poly_irreducible(c));
    }
}

TEST_CASE("make_field is a singleton per degree and rejects bad degrees") {
    CHECK(&make_field(4) == &make_field(4));
    CHECK(make_field(4).order == 16);
    CHECK_THROWS_AS(make_field(0), math_error);
    CHECK_THROWS_AS(make_field(21), math_error);
}

TEST_CASE("characteristic two and unit laws, exhaustive for small r") {
    for (int r = 1; r <= 8; ++r) {
        const FieldSpec& f = make_field(r);
        for (std::uint32_t x = 0; x < f.order; ++x) {
            CHECK(f.add(x, x) == 0);
            CHECK(f.mul(x, 1) == x);
            if (x) {
                CHECK(f.mul(x, f.inv(x)) == 1);
                CHECK(f.pow(x, f.order - 1) == 1);
            }
        }
        CHECK_THROWS_AS(f.inv(0), math_error);
    }
}

TEST_CASE("associativity and distributivity on seeded random triples") {
    rng64 rng(kDefaultSeed);
    for (int r = 1; r <= 8; ++r) {
        const FieldSpec& f = make_field(r);
        for (int i = 0; i < 10000; ++i) {
            auto a = static_cast<std::uint32_t>(rng.below(f.order));
            auto b = static_cast<std::uint32_t>(rng.below(f.order));
            auto c = static_cast<std::uint32_t>(rng.below(f.order));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
        }
    }
}

TEST_CASE("frobenius is the squaring iterate and respects period r") {
    for (int r : {1, 2, 3, 4, 6, 8}) {
        const FieldSpec& f = make_field(r);
        for (std::uint32_t x = 0; x < f.order; ++x) {
            CHECK(f.frobenius(x, 0) == x);
            CHECK(f.frobenius(x, 1) == f.mul(x, x));
            CHECK(f.frobenius(x, r) == x);
        }
    }
}

TEST_CASE("absolute trace is additive, onto, and balanced") {
    for (int r = 1; r <= 10; ++r) {
        const FieldSpec& f = make_field(r);
        int zeros = 0;
        rng64 rng(1);
        for (std::uint32_t x = 0; x < f.order; ++x) {
            std::uint32_t t = f.trace(x);
            CHECK(t <= 1);
            if (t == 0) ++zeros;
            auto y = static_cast<std::uint32_t>(rng.below(f.order));
            CHECK(f.trace(f.add(x, y)) == (f.trace(x) ^ f.trace(y)));
        }
        CHECK(zeros == static_cast<int>(f.order / 2));
    }
}

TEST_CASE("relative trace and norm over F_16 / F_4") {
    const FieldSpec& f = make_field(4);
    int tr_zero = 0;
    std::map<std::uint32_t, int> norm_fibers;
    for (std::uint32_t x = 0; x < 16; ++x) {
        // oracle: direct definition with q = 4
        std::uint32_t tr = x ^ f.frobenius(x, 2);
        std::uint32_t nm = f.mul(x, f.frobenius(x, 2));
        CHECK(f.rel_trace(x, 2) == tr);
        CHECK(f.rel_norm(x, 2) == nm);
        // results lie in the subfield F_4
        CHECK(f.frobenius(tr, 2) == tr);
        CHECK(f.frobenius(nm, 2) == nm);
        if (tr == 0) ++tr_zero;
        if (x) norm_fibers[nm]++;
    }
    // kernel of the (surjective, F_4-linear) relative trace has q/|F_4| = 4 elements
    CHECK(tr_zero == 4);
    CHECK(norm_fibers.size() == 3);  // onto F_4^*
    for (auto& [v, cnt] : norm_fibers) {
        CHECK(v != 0);
        CHECK(cnt == 5);  // fibers of size (16-1)/(4-1)
    }
    CHECK_THROWS_AS(f.rel_trace(1, 3), math_error);
    CHECK_THROWS_AS(f.rel_norm(1, 5), math_error);
}

TEST_CASE("tits endomorphism") {
    const FieldSpec& f8 = make_field(3);
    std::set<std::uint32_t> image;
    for (std::uint32_t x = 0; x < 8; ++x) {
        CHECK(f8.tits(x) == f8.frobenius(x, 2));        // n = 8, n0 = 2
        CHECK(f8.tits(f8.tits(x)) == f8.mul(x, x));     // theta^2 = squaring
        image.insert(f8.tits(x));
        for (std::uint32_t y = 0; y < 8; ++y) {
            CHECK(f8.tits(x ^ y) == (f8.tits(x) ^ f8.tits(y)));
            CHECK(f8.tits(f8.mul(x, y)) == f8.mul(f8.tits(x), f8.tits(y)));
        }
    }
    CHECK(image.size() == 8);  // bijective

    const FieldSpec& f32 = make_field(5);
    for (std::uint32_t x = 0; x < 32; ++x)
        CHECK(f32.tits(f32.tits(x)) == f32.mul(x, x));

    CHECK_THROWS_AS(make_field(2).tits(1), math_error);
    CHECK_THROWS_AS(make_field(4).tits(1), math_error);
    CHECK_THROWS_AS(make_field(1).tits(1), math_error);
}

TEST_CASE("artin-schreier solver against brute force") {
    for (int r = 1; r <= 6; ++r) {
        const FieldSpec& f = make_field(r);
        for (std::uint32_t c = 0; c < f.order; ++c) {
            std::set<std::uint32_t> expect;
            for (std::uint32_t y = 0; y < f.order; ++y)
                if ((f.mul(y, y) ^ y) == c) expect.insert(y);
            auto got = f.solve_artin_schreier(c);
            CHECK(std::set<std::uint32_t>(got.begin(), got.end()) == expect);
            if (f.trace(c) == 0) {
                REQUIRE(got.size() == 2);
                CHECK(got[0] == (got[1] ^ 1u));
            } else {
                CHECK(got.empty());
            }
        }
    }
    // the two elements of F_4 with absolute trace 1 admit no solution
    const FieldSpec& f4 = make_field(2);
    CHECK(f4.solve_artin_schreier(2).empty());
    CHECK(f4.solve_artin_schreier(3).empty());
    CHECK(f4.solve_artin_schreier(0) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("generic linear solver: relative artin-schreier y^n + y = c") {
    // over F_64 with n = 8: kernel is F_8, image is the trace-zero... the map
    // y -> y^8 + y is onto F_8 with kernel F_8.
    const FieldSpec& f = make_field(6);
    auto L = [&](std::uint32_t y) { return f.frobenius(y, 3) ^ y; };
    std::set<std::uint32_t> image;
    for (std::uint32_t y = 0; y < 64; ++y) image.insert(L(y));
    CHECK(image.size() == 8);
    for (std::uint32_t c : image) {
        auto sol = f.solve_linear(L, c);
        REQUIRE(sol.solvable);
        CHECK(L(sol.y) == c);
        CHECK(sol.kernel_dim == 3);
        // smallest solution: nothing below it solves
        for (std::uint32_t y = 0; y < sol.y; ++y) CHECK(L(y) != c);
    }
    for (std::uint32_t c = 0; c < 64; ++c)
        if (!image.count(c)) CHECK_FALSE(f.solve_linear(L, c).solvable);
}

TEST_CASE("multiplicative generator and element orders") {
    for (int r : {1, 2, 3, 4, 8, 10, 17, 20}) {
        const FieldSpec& f = make_field(r);
        CHECK(f.element_order(f.gen) == f.order - 1);
        for (std::uint32_t g = 2; g < f.gen; ++g)
            CHECK(f.element_order(g) < f.order - 1);
        CHECK(f.element_order(1) == 1);
    }
}

TEST_CASE("field elements refuse mixed specs") {
    FieldElement a{&make_field(3), 5}, b{&make_field(3), 6}, c{&make_field(4), 5};
    CHECK((a + b).bits == 3);
    CHECK_THROWS_AS(a + c, math_error);
    CHECK_THROWS_AS(a == c, math_error);
}
