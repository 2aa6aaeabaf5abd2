#include "pzero/ramify.hpp"

#include <algorithm>

namespace pzero {

// ---------------------------------------------------------------------------
// Profiles

namespace {

bool is_pow2_u64(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::uint64_t genus_from_two_g_minus_two(int128 v) {
    if (v < -2) throw math_error("genus formula gave 2g-2 < -2");
    if ((v + 2) % 2 != 0) throw math_error("genus formula gave a non-integer genus");
    int128 g = (v + 2) / 2;
    if (g > static_cast<int128>(std::uint64_t{1} << 62)) throw math_error("genus overflow");
    return static_cast<std::uint64_t>(g);
}

}  // namespace

void validate_profile(const RamificationProfile& p) {
    if (p.group_order == 0) throw math_error("group order must be positive");
    for (const auto& o : p.orbits) {
        if (o.size == 0) throw math_error("orbit size must be positive");
        if (o.filtration.empty()) throw math_error("empty ramification filtration");
        for (std::size_t i = 0; i < o.filtration.size(); ++i) {
            if (o.filtration[i] == 0) throw math_error("filtration entries must be >= 1");
            if (i > 0 && o.filtration[i] > o.filtration[i - 1])
                throw math_error("filtration must be non-increasing");
        }
        if (o.filtration.size() > 1 && !is_pow2_u64(o.filtration[1]))
            throw math_error("wild inertia |G^(1)| must be a power of 2");
        const int128 prod = static_cast<int128>(o.size) * o.filtration[0];
        if (prod > static_cast<int128>(p.group_order) ||
            p.group_order % static_cast<std::uint64_t>(prod) != 0)
            throw math_error("orbit size times |G^(0)| must divide the group order");
    }
}

std::uint64_t different_exponent(const std::vector<std::uint64_t>& filtration) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < filtration.size(); ++i) {
        if (filtration[i] == 0) throw math_error("filtration entries must be >= 1");
        if (i > 0 && filtration[i] > filtration[i - 1])
            throw math_error("filtration must be non-increasing");
        d += filtration[i] - 1;
    }
    return d;
}

std::uint64_t hurwitz_genus(const RamificationProfile& p) {
    validate_profile(p);
    int128 v = static_cast<int128>(p.group_order) *
               (2 * static_cast<int128>(p.quotient_genus) - 2);
    for (const auto& o : p.orbits)
        v += static_cast<int128>(o.size) * different_exponent(o.filtration);
    return genus_from_two_g_minus_two(v);
}

std::uint64_t hurwitz_genus_tame(std::uint64_t group_order, std::uint64_t quotient_genus,
                                 const std::vector<std::uint64_t>& short_orbit_sizes) {
    if (group_order == 0) throw math_error("group order must be positive");
    int128 v = static_cast<int128>(group_order) * (2 * static_cast<int128>(quotient_genus) - 2);
    for (std::uint64_t l : short_orbit_sizes) {
        if (l == 0 || group_order % l != 0)
            throw math_error("short orbit size must divide the group order");
        v += static_cast<int128>(group_order - l);
    }
    return genus_from_two_g_minus_two(v);
}

std::uint64_t deuring_shafarevich(std::uint64_t group_order, std::uint64_t gamma_quotient,
                                  const std::vector<std::uint64_t>& short_orbit_sizes) {
    if (!is_pow2_u64(group_order))
        throw math_error("Deuring-Shafarevich needs a 2-group");
    int128 v = 1 + static_cast<int128>(group_order) *
                       (static_cast<int128>(gamma_quotient) - 1);
    for (std::uint64_t l : short_orbit_sizes) {
        if (l == 0 || group_order % l != 0)
            throw math_error("short orbit size must divide the group order");
        v += static_cast<int128>(group_order - l);
    }
    if (v < 0) throw math_error("negative 2-rank: inconsistent orbit data");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t quotient_genus_tame(std::uint64_t g_top, std::uint64_t h_order,
                                  std::uint64_t fixed_point_count) {
    if (h_order == 0 || h_order % 2 == 0) throw math_error("quotient order must be odd");
    int128 rhs = 2 * static_cast<int128>(g_top) - 2 -
                 static_cast<int128>(fixed_point_count) * (h_order - 1);
    if (rhs % static_cast<int128>(h_order) != 0)
        throw math_error("no integral quotient genus for these fixed-point data");
    return genus_from_two_g_minus_two(rhs / static_cast<int128>(h_order));
}

// ---------------------------------------------------------------------------
// Polynomials

Poly::Poly(const FieldSpec& f, std::vector<std::uint32_t> coeffs)
    : f_(&f), c_(std::move(coeffs)) {
    for (std::uint32_t x : c_)
        if (x >= f.order) throw math_error("coefficient outside the field");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldSpec& f, std::uint32_t c) { return Poly(f, {c}); }
Poly Poly::x(const FieldSpec& f) { return Poly(f, {0, 1}); }

Poly Poly::monomial(const FieldSpec& f, std::uint32_t c, std::size_t k) {
    std::vector<std::uint32_t> v(k + 1, 0);
    v[k] = c;
    return Poly(f, std::move(v));
}

const FieldSpec& Poly::field() const {
    if (!f_) throw math_error("polynomial has no field attached");
    return *f_;
}

std::uint32_t Poly::lc() const {
    if (c_.empty()) throw math_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(field());
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) ^ o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const FieldSpec& f = field();
    if (is_zero() || o.is_zero()) return Poly(f);
    Poly r(f);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] ^= f.mul(c_[i], o.c_[j]);
    }
    r.trim();
    return r;
}

Poly Poly::scaled(std::uint32_t s) const {
    const FieldSpec& f = field();
    Poly r(f);
    r.c_ = c_;
    for (auto& x : r.c_) x = f.mul(x, s);
    r.trim();
    return r;
}

std::uint32_t Poly::eval(std::uint32_t x) const {
    const FieldSpec& f = field();
    std::uint32_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = f.mul(v, x) ^ c_[i];
    return v;
}

Poly Poly::derivative() const {
    Poly r(field());
    for (std::size_t i = 1; i < c_.size(); i += 2) {  // even exponents vanish
        r.c_.resize(i, 0);
        r.c_[i - 1] = c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lc()));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    const FieldSpec& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<std::uint32_t> rem(static_cast<std::size_t>(a.degree()) + 1);
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = a.coeff(i);
    const std::uint32_t ilc = f.inv(b.lc());
    const int db = b.degree();
    std::vector<std::uint32_t> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        std::uint32_t q = f.mul(rem[i], ilc);
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] ^= f.mul(q, b.coeff(j));
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly modinv(const Poly& a, const Poly& m) {
    const FieldSpec& f = a.field();
    // Extended Euclid on (m, a mod m), tracking only the coefficient of a.
    Poly r0 = m, r1 = a % m;
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly t2 = t0 + q * t1;  // char 2: subtraction is addition
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw math_error("element not invertible modulo m");
    return t0.scaled(f.inv(r0.lc())) % m;
}

Poly poly_sqrt(const Poly& a) {
    const FieldSpec& f = a.field();
    std::vector<std::uint32_t> out((a.degree() < 0 ? 0 : a.degree() / 2) + 1, 0);
    for (int i = 0; i <= a.degree(); ++i) {
        if (i % 2 == 0)
            out[i / 2] = f.sqrt(a.coeff(i));
        else if (a.coeff(i) != 0)
            throw math_error("polynomial is not a perfect square");
    }
    return Poly(f, std::move(out));
}

std::vector<std::pair<Poly, std::uint64_t>> squarefree_decomposition(Poly b) {
    const FieldSpec& f = b.field();
    if (b.is_zero()) throw math_error("zero polynomial has no factorization");
    if (b.lc() != 1) throw math_error("squarefree decomposition expects a monic input");
    std::vector<std::pair<Poly, std::uint64_t>> out;
    if (b.degree() == 0) return out;

    Poly db = b.derivative();
    if (db.is_zero()) {
        // b is a perfect square; halve and double the multiplicities.
        for (auto& [part, mult] : squarefree_decomposition(poly_sqrt(b)))
            out.emplace_back(std::move(part), 2 * mult);
        return out;
    }
    Poly c = gcd(b, db);    // all primes except one copy of each odd-mult prime
    Poly w = b / c;         // product of the odd-multiplicity primes
    std::uint64_t i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);           // odd-mult primes with multiplicity > i
        Poly part = w / y;            // multiplicity exactly i
        if (part.degree() > 0) out.emplace_back(part, i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        // Residue is the even-multiplicity primes to their full power: a square.
        for (auto& [part, mult] : squarefree_decomposition(poly_sqrt(c)))
            out.emplace_back(std::move(part), 2 * mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a2, const auto& b2) { return a2.second < b2.second; });
    (void)f;
    return out;
}

std::vector<std::pair<Poly, std::uint32_t>> distinct_degree_factorization(Poly b) {
    const FieldSpec& f = b.field();
    if (b.is_zero() || b.lc() != 1)
        throw math_error("distinct-degree factorization expects a monic nonzero input");
    std::vector<std::pair<Poly, std::uint32_t>> out;
    if (b.degree() == 0) return out;
    Poly rest = b;
    Poly frob = Poly::x(f) % rest;  // will hold x^(2^(e*d)) mod rest
    std::uint32_t d = 0;
    while (2 * (d + 1) <= static_cast<std::uint32_t>(rest.degree())) {
        ++d;
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(f.r); ++s)
            frob = (frob * frob) % rest;
        Poly g = gcd(frob + Poly::x(f), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            if (rest.degree() == 0) return out;
            frob = frob % rest;
        }
    }
    out.emplace_back(rest, static_cast<std::uint32_t>(rest.degree()));
    return out;
}

// ---------------------------------------------------------------------------
// Rational functions

RationalFn RationalFn::of(Poly num, Poly den) {
    if (den.is_zero()) throw math_error("rational function with zero denominator");
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    const std::uint32_t s = num.field().inv(den.lc());
    return RationalFn{num.scaled(s), den.scaled(s)};
}

RationalFn RationalFn::zero(const FieldSpec& f) {
    return RationalFn{Poly(f), Poly::constant(f, 1)};
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return of(num * o.den + o.num * den, den * o.den);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return of(num * o.num, den * o.den);
}

// ---------------------------------------------------------------------------
// Artin-Schreier covers

ASCover make_as_cover(const FieldSpec& f, Poly num, Poly den) {
    ASCover c;
    c.field = &f;
    c.f = RationalFn::of(std::move(num), std::move(den));
    return c;
}

namespace {

// Square root in F_{2^e}[x]/(m), where m is squarefree with all irreducible
// factors of degree d: raise to 2^(e*d - 1) componentwise.
Poly sqrt_mod(Poly a, const Poly& m, std::uint32_t d) {
    const std::uint32_t e = static_cast<std::uint32_t>(a.field().r);
    Poly s = a % m;
    for (std::uint32_t i = 0; i + 1 < e * d; ++i) s = (s * s) % m;
    return s;
}

}  // namespace

ASCover as_reduce(const ASCover& c) {
    if (!c.field) throw math_error("cover has no field attached");
    const FieldSpec& F = *c.field;
    const RationalFn original = c.f;
    RationalFn f = c.f;
    RationalFn H = RationalFn::zero(F);

    for (;;) {
        bool changed = false;
        if (f.den.degree() > 0) {
            for (const auto& [part, mult] : squarefree_decomposition(f.den)) {
                if (mult % 2 != 0) continue;
                for (const auto& [bundle, d] : distinct_degree_factorization(part)) {
                    // Exact local leading term: f * bundle^mult modulo bundle.
                    Poly pw = Poly::constant(F, 1);
                    for (std::uint64_t k = 0; k < mult; ++k) pw = pw * bundle;
                    Poly cof = f.den / pw;  // coprime to bundle
                    Poly lead = (f.num % bundle) * modinv(cof, bundle) % bundle;
                    Poly s = sqrt_mod(lead, bundle, d);
                    Poly half = Poly::constant(F, 1);
                    for (std::uint64_t k = 0; k < mult / 2; ++k) half = half * bundle;
                    RationalFn h = RationalFn::of(s, half);
                    f = f + h * h + h;
                    H = H + h;
                    changed = true;
                    break;  // denominator changed; re-factor from scratch
                }
                if (changed) break;
            }
        }
        if (changed) continue;
        const int diff = f.num.degree() - f.den.degree();
        if (diff > 0 && diff % 2 == 0) {
            const std::uint32_t lead = F.mul(f.num.lc(), F.inv(f.den.lc()));
            RationalFn h{Poly::monomial(F, F.sqrt(lead), diff / 2), Poly::constant(F, 1)};
            f = f + h * h + h;
            H = H + h;
            continue;
        }
        break;
    }

    if (!(original + f == H * H + H))
        throw math_error("reduction bookkeeping failed: f + f' != h^2 + h");

    ASCover out;
    out.field = &F;
    out.f = f;
    out.reduced = true;
    out.degenerate = f.is_constant();
    return out;
}

ASAnalysis as_cover_analyze(const ASCover& c) {
    if (!c.field) throw math_error("cover has no field attached");
    if (!c.reduced) throw math_error("cover must be reduced before analysis");
    if (c.degenerate || c.f.is_constant())
        throw math_error("degenerate cover: constant right-hand side");

    ASAnalysis out;
    auto add_place = [&](std::string label, std::uint32_t degree, std::uint64_t order) {
        if (order % 2 == 0)
            throw math_error("even pole order at " + label + ": cover is not reduced");
        PlaceReport p;
        p.place = std::move(label);
        p.degree = degree;
        p.pole_order = order;
        p.filtration.assign(order + 1, 2);
        p.filtration.push_back(1);
        out.places.push_back(std::move(p));
    };

    if (c.f.den.degree() > 0)
        for (const auto& [part, mult] : squarefree_decomposition(c.f.den))
            for (const auto& [bundle, d] : distinct_degree_factorization(part)) {
                const std::uint32_t copies = static_cast<std::uint32_t>(bundle.degree()) / d;
                for (std::uint32_t k = 0; k < copies; ++k) add_place(bundle.str(), d, mult);
            }
    const int diff = c.f.num.degree() - c.f.den.degree();
    if (diff > 0) add_place("inf", 1, static_cast<std::uint64_t>(diff));

    int128 v = -4;
    std::uint64_t degree_sum = 0;
    out.profile.group_order = 2;
    out.profile.quotient_genus = 0;
    std::vector<std::uint64_t> ds_orbits;
    for (const auto& p : out.places) {
        v += static_cast<int128>(p.degree) * (p.pole_order + 1);
        degree_sum += p.degree;
        // one totally ramified geometric point per residue-degree unit
        for (std::uint32_t k = 0; k < p.degree; ++k) {
            out.profile.orbits.push_back({1, p.filtration});
            ds_orbits.push_back(1);
        }
    }
    out.genus = genus_from_two_g_minus_two(v);
    out.two_rank = deuring_shafarevich(2, 0, ds_orbits);
    if (out.two_rank != degree_sum - 1)
        throw math_error("2-rank mismatch between the two formulas");
    if (hurwitz_genus(out.profile) != out.genus)
        throw math_error("genus mismatch between the filtration and closed form");
    if (out.two_rank > out.genus) throw math_error("2-rank exceeded the genus");
    return out;
}

}  // namespace pzero
