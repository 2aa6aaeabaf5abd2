#include "pzero/lingrp.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pzero/bsgs.hpp"

namespace pzero {

const char* to_string(Family f) {
    switch (f) {
        case Family::PSL2: return "psl2";
        case Family::SZ: return "sz";
        case Family::PGU3: return "pgu3";
        case Family::PSU3: return "psu3";
        case Family::SU3: return "su3";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "psl2") return Family::PSL2;
    if (s == "sz") return Family::SZ;
    if (s == "pgu3") return Family::PGU3;
    if (s == "psu3") return Family::PSU3;
    if (s == "su3") return Family::SU3;
    return std::nullopt;
}

FamilyId make_family(Family name, std::uint32_t n) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw math_error("family parameter n must be a power of 2, n >= 4");
    FamilyId f;
    f.name = name;
    f.n = n;
    f.r = 0;
    for (std::uint32_t m = n; m > 1; m >>= 1) ++f.r;
    if (name == Family::SZ) {
        if (f.r % 2 == 0 || f.r < 3)
            throw math_error("Suzuki parameter must be n = 2^(2k+1) with k >= 1");
        f.n0 = std::uint32_t{1} << ((f.r - 1) / 2);  // n = 2*n0^2
    }
    if (name == Family::PGU3 || name == Family::PSU3 || name == Family::SU3)
        f.mu = ((n + 1) % 3 == 0) ? 3 : 1;
    return f;
}

std::uint64_t expected_order(const FamilyId& f) {
    const int128 n = f.n;
    int128 o = 0;
    switch (f.name) {
        case Family::PSL2: o = n * n * n - n; break;
        case Family::SZ: o = (n * n + 1) * (n * n) * (n - 1); break;
        case Family::PGU3:
        case Family::SU3: o = (n * n * n + 1) * (n * n * n) * (n * n - 1); break;
        case Family::PSU3:
            o = (n * n * n + 1) * (n * n * n) * (n * n - 1) / f.mu;
            break;
    }
    if (o > static_cast<int128>(~std::uint64_t{0}))
        throw math_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(o);
}

StabilizerConstants stabilizer_constants(const FamilyId& f) {
    const std::uint64_t n = f.n;
    StabilizerConstants c;
    switch (f.name) {
        case Family::PSL2:
            c = {n * (n - 1), n, n - 1, f.n + 1};
            break;
        case Family::SZ:
            c = {n * n * (n - 1), n * n, n - 1, f.n * f.n + 1};
            break;
        case Family::PGU3:
        case Family::SU3:
            c = {n * n * n * (n * n - 1), n * n * n, n * n - 1, f.n * f.n * f.n + 1};
            break;
        case Family::PSU3:
            c = {n * n * n * (n * n - 1) / f.mu, n * n * n, (n * n - 1) / f.mu,
                 f.n * f.n * f.n + 1};
            break;
    }
    return c;
}

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    return out;
}

template <class Fn>
Permutation perm_from_map(std::uint32_t degree, Fn&& fn) {
    Permutation p;
    p.images.resize(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p.images[i] = fn(i);
    p.validate();
    return p;
}

void check_degree_cap(std::uint32_t degree) {
    // Keeps chain transversal storage modest; covers PSL2 up to n=1024,
    // PGU3/PSU3 up to n=8, Sz up to n=32.
    if (degree > 1100)
        throw budget_error("natural permutation representation capped at degree 1100, got " +
                           std::to_string(degree));
}

}  // namespace

std::vector<std::uint64_t> fpf_cyclic_divisors(const FamilyId& f) {
    std::vector<std::uint64_t> out;
    switch (f.name) {
        case Family::PSL2:
            out = divisors(f.n + 1);
            break;
        case Family::PSU3: {
            out = divisors(f.n + 1);
            auto more = divisors((std::uint64_t{f.n} * f.n - f.n + 1) / f.mu);
            out.insert(out.end(), more.begin(), more.end());
            break;
        }
        case Family::SZ: {
            out = divisors(f.n - 2 * f.n0 + 1);
            auto more = divisors(std::uint64_t{f.n} + 2 * f.n0 + 1);
            out.insert(out.end(), more.begin(), more.end());
            break;
        }
        default:
            throw math_error("fixed-point-free divisors defined for PSL2, PSU3, SZ only");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NaturalAction build_psl2(std::uint32_t n) {
    FamilyId fam = make_family(Family::PSL2, n);
    check_degree_cap(n + 1);
    const FieldSpec& f = make_field(fam.r);
    const std::uint32_t inf = n;
    const std::uint32_t degree = n + 1;

    auto translation = [&](std::uint32_t beta) {
        return perm_from_map(degree, [&](std::uint32_t x) { return x == inf ? inf : x ^ beta; });
    };
    Permutation mul = perm_from_map(
        degree, [&](std::uint32_t x) { return x == inf ? inf : f.mul(f.gen, x); });
    Permutation inv = perm_from_map(degree, [&](std::uint32_t x) {
        if (x == inf) return 0u;
        if (x == 0) return inf;
        return f.inv(x);
    });

    NaturalAction act;
    act.family = fam;
    act.group = PermGroup(degree, {translation(1), mul, inv});
    act.point_labels.reserve(degree);
    for (std::uint32_t x = 0; x < n; ++x) act.point_labels.push_back(std::to_string(x));
    act.point_labels.push_back("inf");
    act.distinguished_point = inf;
    for (std::uint32_t j = 0; j < fam.r; ++j)
        act.unipotent_generators.push_back(translation(std::uint32_t{1} << j));
    return act;
}

namespace {

NaturalAction build_unitary(std::uint32_t n, bool full_pgu) {
    FamilyId fam = make_family(full_pgu ? Family::PGU3 : Family::PSU3, n);
    check_degree_cap(n * n * n + 1);
    const FieldSpec& f = make_field(2 * fam.r);
    const std::uint32_t q2 = f.order;
    auto conj = [&](std::uint32_t x) { return f.frobenius(x, fam.r); };     // x -> x^n
    auto norm = [&](std::uint32_t x) { return f.mul(conj(x), x); };         // x^(n+1)
    auto rtr = [&](std::uint32_t y) { return conj(y) ^ y; };                // y^n + y

    // Unital points (x, y) with y^n + y = x^(n+1), sorted by (x, y) bits.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
    pts.reserve(std::size_t{n} * n * n);
    std::vector<std::int32_t> idx(std::size_t{q2} * q2, -1);
    for (std::uint32_t x = 0; x < q2; ++x) {
        const std::uint32_t nx = norm(x);
        for (std::uint32_t y = 0; y < q2; ++y)
            if (rtr(y) == nx) {
                idx[std::size_t{x} * q2 + y] = static_cast<std::int32_t>(pts.size());
                pts.emplace_back(x, y);
            }
    }
    if (pts.size() != std::size_t{n} * n * n) throw math_error("unital point count mismatch");
    const std::uint32_t inf = static_cast<std::uint32_t>(pts.size());
    const std::uint32_t degree = inf + 1;
    auto at = [&](std::uint32_t x, std::uint32_t y) {
        return static_cast<std::uint32_t>(idx[std::size_t{x} * q2 + y]);
    };

    // Smallest b with b^n + b = a^(n+1).
    auto solve_b = [&](std::uint32_t a) {
        const std::uint32_t target = norm(a);
        for (std::uint32_t b = 0; b < q2; ++b)
            if (rtr(b) == target) return b;
        throw math_error("translation parameter has no solution");
    };
    auto psi = [&](std::uint32_t a, std::uint32_t b) {
        const std::uint32_t ca = conj(a);
        return perm_from_map(degree, [&](std::uint32_t p) {
            if (p == inf) return inf;
            auto [x, y] = pts[p];
            return at(x ^ a, y ^ f.mul(ca, x) ^ b);
        });
    };
    // Scaling by c^mu for PSU, by the primitive c itself for PGU.
    const std::uint32_t ce = full_pgu ? f.gen : f.pow(f.gen, fam.mu);
    const std::uint32_t cn1 = f.mul(conj(ce), ce);
    Permutation scale = perm_from_map(degree, [&](std::uint32_t p) {
        if (p == inf) return inf;
        auto [x, y] = pts[p];
        return at(f.mul(ce, x), f.mul(cn1, y));
    });
    // phi: [X:Y:Z] -> [X:Z:Y] swaps infinity = [0:1:0] with (0,0) and sends
    // (x,y) to (x/y, 1/y) elsewhere (y = 0 only at the origin on this curve).
    Permutation phi = perm_from_map(degree, [&](std::uint32_t p) {
        if (p == inf) return at(0, 0);
        auto [x, y] = pts[p];
        if (y == 0) return inf;
        const std::uint32_t yi = f.inv(y);
        return at(f.mul(x, yi), yi);
    });

    NaturalAction act;
    act.family = fam;
    std::vector<Permutation> gens;
    for (std::uint32_t i = 0; i < 2 * fam.r; ++i) {
        const std::uint32_t a = std::uint32_t{1} << i;
        gens.push_back(psi(a, solve_b(a)));
    }
    gens.push_back(psi(0, 1));
    act.unipotent_generators = gens;  // the translation subgroup, order n^3
    gens.push_back(scale);
    gens.push_back(phi);
    act.group = PermGroup(degree, std::move(gens));
    act.point_labels.reserve(degree);
    for (const auto& [x, y] : pts)
        act.point_labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    act.point_labels.push_back("inf");
    act.distinguished_point = inf;
    return act;
}

}  // namespace

NaturalAction build_pgu3(std::uint32_t n) { return build_unitary(n, true); }
NaturalAction build_psu3(std::uint32_t n) { return build_unitary(n, false); }

NaturalAction build_sz(std::uint32_t n) {
    FamilyId fam = make_family(Family::SZ, n);
    check_degree_cap(n * n + 1);
    const FieldSpec& f = make_field(fam.r);
    const std::uint32_t inf = n * n;
    const std::uint32_t degree = inf + 1;
    auto theta = [&](std::uint32_t x) { return f.tits(x); };
    auto enc = [&](std::uint32_t a, std::uint32_t b) { return a * n + b; };

    auto trans = [&](std::uint32_t alpha, std::uint32_t beta) {
        const std::uint32_t ta = theta(alpha);
        return perm_from_map(degree, [&](std::uint32_t p) {
            if (p == inf) return inf;
            const std::uint32_t a = p / n, b = p % n;
            return enc(a ^ alpha, b ^ beta ^ f.mul(a, ta));
        });
    };
    const std::uint32_t kappa = f.gen;
    const std::uint32_t lambda = f.mul(theta(kappa), kappa);  // kappa^(theta+1)
    Permutation scale = perm_from_map(degree, [&](std::uint32_t p) {
        if (p == inf) return inf;
        const std::uint32_t a = p / n, b = p % n;
        return enc(f.mul(kappa, a), f.mul(lambda, b));
    });
    // Ovoid form value; nonzero away from the origin, so the swap below is
    // well defined.
    auto fval = [&](std::uint32_t a, std::uint32_t b) {
        return f.mul(a, b) ^ f.mul(theta(a), f.mul(a, a)) ^ theta(b);
    };
    Permutation inv = perm_from_map(degree, [&](std::uint32_t p) {
        if (p == inf) return enc(0, 0);
        const std::uint32_t a = p / n, b = p % n;
        if (a == 0 && b == 0) return inf;
        const std::uint32_t v = fval(a, b);
        if (v == 0) throw math_error("ovoid form vanished off the origin");
        const std::uint32_t vi = f.inv(v);
        return enc(f.mul(b, vi), f.mul(a, vi));
    });

    NaturalAction act;
    act.family = fam;
    std::vector<Permutation> gens;
    for (std::uint32_t i = 0; i < fam.r; ++i) gens.push_back(trans(std::uint32_t{1} << i, 0));
    act.unipotent_generators = gens;
    act.unipotent_generators.push_back(trans(0, 1));
    gens.push_back(scale);
    gens.push_back(inv);
    act.group = PermGroup(degree, std::move(gens));
    act.point_labels.reserve(degree);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            act.point_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    act.point_labels.push_back("inf");
    act.distinguished_point = inf;
    return act;
}

NaturalAction build_natural_action(const FamilyId& f) {
    switch (f.name) {
        case Family::PSL2: return build_psl2(f.n);
        case Family::PGU3: return build_pgu3(f.n);
        case Family::PSU3: return build_psu3(f.n);
        case Family::SZ: return build_sz(f.n);
        case Family::SU3: throw math_error("SU3 has no natural permutation action here");
    }
    throw math_error("unknown family");
}

PermGroup unipotent_subgroup(const NaturalAction& act) {
    return PermGroup(act.group.degree(), act.unipotent_generators);
}

std::optional<Permutation> fpf_witness(const NaturalAction& act, std::uint64_t c,
                                       std::uint64_t max_draws) {
    if (c == 0) throw math_error("order must be positive");
    if (c == 1) return Permutation::identity(act.group.degree());
    rng64 rng(kDefaultSeed);
    for (std::uint64_t d = 0; d < max_draws; ++d) {
        Permutation x = act.group.random_element(rng);
        const std::uint64_t o = x.element_order();
        if (o % c != 0) continue;
        Permutation y = pow(x, o / c);
        bool ok = true;
        Permutation z = y;
        for (std::uint64_t k = 1; k < c && ok; ++k) {
            if (!z.fixed_points().empty()) ok = false;
            z = z.then(y);
        }
        if (ok) return y;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SU(3,n) as 3x3 matrices over F_{n^2} acting on nonzero column vectors.

namespace {

using Mat3 = std::array<std::uint32_t, 9>;

struct Mat3Action {
    using Element = Mat3;
    const FieldSpec* f = nullptr;
    std::uint32_t e = 0;  // bits per coordinate
    std::uint32_t degree() const { return (std::uint32_t{1} << (3 * e)) - 1; }
    Mat3 identity() const { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
    Mat3 multiply(const Mat3& a, const Mat3& b) const {  // matrix product a*b
        Mat3 c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::uint32_t s = 0;
                for (int k = 0; k < 3; ++k) s ^= f->mul(a[3 * i + k], b[3 * k + j]);
                c[3 * i + j] = s;
            }
        return c;
    }
    // "a then b" on column vectors is the product b*a.
    Mat3 compose(const Mat3& a, const Mat3& b) const { return multiply(b, a); }
    std::uint32_t det(const Mat3& m) const {
        std::uint32_t d = 0;
        d ^= f->mul(m[0], f->mul(m[4], m[8]) ^ f->mul(m[5], m[7]));
        d ^= f->mul(m[1], f->mul(m[3], m[8]) ^ f->mul(m[5], m[6]));
        d ^= f->mul(m[2], f->mul(m[3], m[7]) ^ f->mul(m[4], m[6]));
        return d;
    }
    Mat3 inverse(const Mat3& m) const {
        const std::uint32_t di = f->inv(det(m));
        Mat3 r;
        auto minor2 = [&](int r0, int r1, int c0, int c1) {
            return f->mul(m[3 * r0 + c0], m[3 * r1 + c1]) ^
                   f->mul(m[3 * r0 + c1], m[3 * r1 + c0]);
        };
        // adjugate (cofactor transpose); characteristic 2, so no signs
        r[0] = minor2(1, 2, 1, 2);
        r[1] = minor2(0, 2, 1, 2);
        r[2] = minor2(0, 1, 1, 2);
        r[3] = minor2(1, 2, 0, 2);
        r[4] = minor2(0, 2, 0, 2);
        r[5] = minor2(0, 1, 0, 2);
        r[6] = minor2(1, 2, 0, 1);
        r[7] = minor2(0, 2, 0, 1);
        r[8] = minor2(0, 1, 0, 1);
        for (auto& x : r) x = f->mul(x, di);
        return r;
    }
    std::uint32_t apply(const Mat3& m, std::uint32_t p) const {
        const std::uint32_t mask = (std::uint32_t{1} << e) - 1;
        const std::uint32_t v = p + 1;
        const std::uint32_t x = v >> (2 * e), y = (v >> e) & mask, z = v & mask;
        std::uint32_t w[3];
        for (int i = 0; i < 3; ++i)
            w[i] = f->mul(m[3 * i], x) ^ f->mul(m[3 * i + 1], y) ^ f->mul(m[3 * i + 2], z);
        return ((w[0] << (2 * e)) | (w[1] << e) | w[2]) - 1;
    }
    bool equal(const Mat3& a, const Mat3& b) const { return a == b; }
};

}  // namespace

Su3Handle build_su3_matrix(std::uint32_t n) {
    FamilyId fam = make_family(Family::SU3, n);
    if (n > 8)
        throw budget_error("SU3 vector representation capped at n = 8 (degree 262143)");
    const FieldSpec& f = make_field(2 * fam.r);
    const std::uint32_t q2 = f.order;
    Mat3Action act{&f, 2 * fam.r};
    auto conj = [&](std::uint32_t x) { return f.frobenius(x, fam.r); };
    auto rtr = [&](std::uint32_t y) { return conj(y) ^ y; };
    auto solve_b = [&](std::uint32_t a) {
        const std::uint32_t target = f.mul(conj(a), a);
        for (std::uint32_t b = 0; b < q2; ++b)
            if (rtr(b) == target) return b;
        throw math_error("translation parameter has no solution");
    };

    // Hermitian Gram matrix X*conj(X) + Y*conj(Z) + Z*conj(Y).
    const Mat3 gram{1, 0, 0, 0, 0, 1, 0, 1, 0};
    auto is_unitary_det1 = [&](const Mat3& m) {
        Mat3 mt, mc;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                mt[3 * i + j] = m[3 * j + i];
                mc[3 * i + j] = conj(m[3 * i + j]);
            }
        return act.multiply(act.multiply(mt, gram), mc) == gram && act.det(m) == 1;
    };

    std::vector<Mat3> gens;
    auto push = [&](const Mat3& m) {
        if (!is_unitary_det1(m)) throw math_error("generator is not special unitary");
        gens.push_back(m);
    };
    for (std::uint32_t i = 0; i < 2 * fam.r; ++i) {
        const std::uint32_t a = std::uint32_t{1} << i;
        push({1, 0, a, conj(a), 1, solve_b(a), 0, 0, 1});
    }
    push({1, 0, 0, 0, 1, 1, 0, 0, 1});  // psi(0, 1)
    const std::uint32_t v = f.gen;
    push({f.pow(v, n - 1), 0, 0, 0, v, 0, 0, 0, f.pow(v, q2 - 1 - n)});  // torus
    push({1, 0, 0, 0, 0, 1, 0, 1, 0});                                   // Y <-> Z swap

    StabilizerChain<Mat3Action> chain(act, gens);

    Su3Handle h;
    h.family = fam;
    h.degree = act.degree();
    h.order = chain.order();
    h.center_order = 1;
    if (fam.mu == 3) {
        const std::uint32_t omega = f.pow(f.gen, (q2 - 1) / 3);
        const Mat3 scalar{omega, 0, 0, 0, omega, 0, 0, 0, omega};
        if (chain.contains(scalar)) h.center_order = 3;
    }
    if (h.center_order != fam.mu) throw math_error("center order does not match gcd(3, n+1)");
    return h;
}

}  // namespace pzero
