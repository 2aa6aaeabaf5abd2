#include "pzero/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <utility>

namespace pzero {

Permutation Permutation::identity(std::uint32_t degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0u);
    return p;
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
    Permutation p = identity(degree);
    std::vector<char> used(degree, 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::uint32_t a = cyc[i];
            if (a >= degree) throw math_error("cycle entry out of range");
            if (used[a]) throw math_error("point repeated across cycles");
            used[a] = 1;
            p.images[a] = cyc[(i + 1) % cyc.size()];
        }
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& other) const {
    if (degree() != other.degree()) throw math_error("permutation degree mismatch");
    Permutation r;
    r.images.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) r.images[i] = other.images[images[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) r.images[images[i]] = i;
    return r;
}

Permutation Permutation::conjugated_by(const Permutation& x) const {
    return x.inverse().then(*this).then(x);
}

std::vector<std::uint32_t> Permutation::fixed_points() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < degree(); ++i)
        if (images[i] == i) out.push_back(i);
    return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<char> seen(degree(), 0);
    for (std::uint32_t i = 0; i < degree(); ++i) {
        if (seen[i] || images[i] == i) continue;
        std::vector<std::uint32_t> cyc;
        for (std::uint32_t j = i; !seen[j]; j = images[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t Permutation::element_order() const {
    std::uint64_t o = 1;
    for (const auto& cyc : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(cyc.size()));
    return o;
}

void Permutation::validate() const {
    std::vector<char> seen(degree(), 0);
    for (std::uint32_t v : images) {
        if (v >= degree() || seen[v]) throw math_error("permutation images are not a bijection");
        seen[v] = 1;
    }
}

Permutation pow(const Permutation& x, std::uint64_t e) {
    Permutation acc = Permutation::identity(x.degree());
    Permutation base = x;
    while (e) {
        if (e & 1) acc = acc.then(base);
        base = base.then(base);
        e >>= 1;
    }
    return acc;
}

PermGroup::PermGroup(std::uint32_t degree)
    : degree_(degree), box_(std::make_shared<ChainBox>()) {
    if (degree_ == 0) throw math_error("degree must be positive");
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), box_(std::make_shared<ChainBox>()) {
    if (degree_ == 0) throw math_error("degree must be positive");
    for (const auto& g : gens_) {
        if (g.degree() != degree_) throw math_error("generator degree mismatch");
        g.validate();
    }
}

const PermChain& PermGroup::chain() const {
    std::call_once(box_->once, [this] {
        box_->chain = std::make_unique<PermChain>(PermAction{degree_}, gens_);
    });
    return *box_->chain;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& x) const {
    if (x.degree() != degree_) throw math_error("degree mismatch");
    return chain().contains(x);
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t p) const {
    if (p >= degree_) throw math_error("point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<std::uint32_t> out{p};
    seen[p] = 1;
    for (std::size_t h = 0; h < out.size(); ++h)
        for (const auto& g : gens_) {
            std::uint32_t q = g.images[out[h]];
            if (!seen[q]) {
                seen[q] = 1;
                out.push_back(q);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit(p);
        for (std::uint32_t q : orb) seen[q] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

PermGroup PermGroup::stabilizer(std::uint32_t p) const {
    if (p >= degree_) throw math_error("point out of range");
    // Fresh chain based at p; its level-1 strong generators fix p and
    // generate the full stabilizer.
    PermChain ch(PermAction{degree_}, gens_, {p});
    return PermGroup(degree_, ch.level_generators(1));
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermGroup::is_two_transitive() const {
    if (degree_ < 2) throw math_error("two-transitivity needs degree >= 2");
    if (!is_transitive()) return false;
    return stabilizer(0).orbit(1).size() == degree_ - 1;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    if (order() > cap) throw math_error("group too large to enumerate");
    const PermChain& ch = chain();
    std::vector<Permutation> out{Permutation::identity(degree_)};
    for (std::size_t i = ch.level_count(); i-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(out.size() * ch.level_orbit(i).size());
        for (const auto& e : out)
            for (std::size_t k = 0; k < ch.level_orbit(i).size(); ++k)
                next.push_back(e.then(ch.transversal_by_index(i, k)));
        out = std::move(next);
    }
    return out;
}

Permutation PermGroup::random_element(rng64& rng) const {
    const PermChain& ch = chain();
    Permutation e = Permutation::identity(degree_);
    for (std::size_t i = ch.level_count(); i-- > 0;) {
        std::size_t k = static_cast<std::size_t>(rng.below(ch.level_orbit(i).size()));
        e = e.then(ch.transversal_by_index(i, k));
    }
    return e;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& v) {
    if (g.degree() != v.degree()) throw math_error("degree mismatch");
    std::vector<Permutation> ngens;
    for (const auto& x : v.generators())
        if (!x.is_identity()) ngens.push_back(x);
    PermGroup n = ngens.empty() ? PermGroup(g.degree()) : PermGroup(g.degree(), ngens);
    std::vector<Permutation> queue = ngens;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (const auto& s : g.generators()) {
            Permutation c = queue[h].conjugated_by(s);
            if (!n.contains(c)) {
                ngens.push_back(c);
                n = PermGroup(g.degree(), ngens);
                queue.push_back(std::move(c));
            }
        }
    }
    return n;
}

PermGroup pointwise_kernel(const PermGroup& g, const std::vector<std::uint32_t>& pts) {
    std::vector<std::uint32_t> base;
    for (std::uint32_t p : pts) {
        if (p >= g.degree()) throw math_error("point out of range");
        if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
    }
    if (base.empty()) return g;
    PermChain ch(PermAction{g.degree()}, g.generators(), base);
    return PermGroup(g.degree(), ch.level_generators(base.size()));
}

namespace {

// BFS over the orbit of p recording, for each orbit point, one group element
// mapping p to it.
std::pair<std::vector<std::uint32_t>, std::vector<Permutation>> orbit_with_reps(
    const PermGroup& g, std::uint32_t p) {
    std::vector<std::int32_t> where(g.degree(), -1);
    std::vector<std::uint32_t> pts{p};
    std::vector<Permutation> reps{Permutation::identity(g.degree())};
    where[p] = 0;
    for (std::size_t h = 0; h < pts.size(); ++h)
        for (const auto& s : g.generators()) {
            std::uint32_t q = s.images[pts[h]];
            if (where[q] >= 0) continue;
            where[q] = static_cast<std::int32_t>(pts.size());
            pts.push_back(q);
            reps.push_back(reps[h].then(s));
        }
    return {std::move(pts), std::move(reps)};
}

struct ImagesHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint32_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};
using ElementSet = std::unordered_set<std::vector<std::uint32_t>, ImagesHash>;

ElementSet element_key_set(const std::vector<Permutation>& elems) {
    ElementSet s;
    s.reserve(elems.size() * 2);
    for (const auto& e : elems) s.insert(e.images);
    return s;
}

// v intersected with v conjugated by x, measured against ve (v's elements):
// returns the intersection size.
std::size_t conjugate_overlap(const ElementSet& ve,
                              const std::vector<Permutation>& velems, const Permutation& x) {
    std::size_t hits = 0;
    for (const auto& e : velems)
        if (ve.count(e.conjugated_by(x).images)) ++hits;
    return hits;
}

Permutation two_part_element(const Permutation& x) {
    std::uint64_t k = x.element_order();
    while ((k & 1) == 0) k >>= 1;
    return pow(x, k);  // order = 2-part of |x|
}

Permutation square_down_to_involution(Permutation y) {
    std::uint64_t o = y.element_order();
    while (o > 2) {
        y = y.then(y);
        o >>= 1;
    }
    return y;
}

std::optional<Permutation> find_involution(const PermGroup& g) {
    for (const auto& x : g.generators()) {
        Permutation y = two_part_element(x);
        if (!y.is_identity()) return square_down_to_involution(std::move(y));
    }
    rng64 rng(kDefaultSeed);
    for (int tries = 0; tries < 20000; ++tries) {
        Permutation y = two_part_element(g.random_element(rng));
        if (!y.is_identity()) return square_down_to_involution(std::move(y));
    }
    return std::nullopt;
}

bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::uint64_t two_part(std::uint64_t n) {
    std::uint64_t m = 1;
    while ((n & 1) == 0) {
        m <<= 1;
        n >>= 1;
    }
    return m;
}

}  // namespace

bool is_ti_subgroup(const PermGroup& g, const PermGroup& v) {
    if (g.degree() != v.degree()) throw math_error("degree mismatch");
    std::vector<Permutation> velems = v.elements(std::uint64_t{1} << 12);
    for (const auto& e : velems)
        if (!g.contains(e)) throw math_error("v is not a subgroup of g");
    if (velems.size() == 1) return true;
    ElementSet ve = element_key_set(velems);

    // Common fixed points of v.
    std::vector<std::uint32_t> common;
    for (std::uint32_t p = 0; p < g.degree(); ++p) {
        bool all = true;
        for (const auto& x : v.generators())
            if (x.images[p] != p) {
                all = false;
                break;
            }
        if (all) common.push_back(p);
    }

    if (common.size() == 1) {
        std::uint32_t p = common[0];
        PermGroup h = g.stabilizer(p);
        bool v_normal_in_h = true;
        for (const auto& x : v.generators()) {
            for (const auto& s : h.generators())
                if (!ve.count(x.conjugated_by(s).images)) {
                    v_normal_in_h = false;
                    break;
                }
            if (!v_normal_in_h) break;
        }
        if (v_normal_in_h) {
            // Conjugates of v correspond one-to-one to the orbit of p.
            auto [pts, reps] = orbit_with_reps(g, p);
            for (std::size_t k = 1; k < pts.size(); ++k) {
                std::size_t hits = conjugate_overlap(ve, velems, reps[k]);
                if (hits != 1 && hits != velems.size()) return false;
            }
            return true;
        }
    }

    // Fallback: test every conjugate explicitly.
    std::vector<Permutation> gelems = g.elements(std::uint64_t{1} << 13);
    for (const auto& x : gelems) {
        std::size_t hits = conjugate_overlap(ve, velems, x);
        if (hits != 1 && hits != velems.size()) return false;
    }
    return true;
}

std::vector<std::uint32_t> omega_of(const PermGroup& g) {
    if (g.order() % 2 != 0) throw math_error("omega needs a group of even order");
    auto t = find_involution(g);
    if (!t) throw math_error("no involution found in even-order group");
    PermGroup s = normal_closure(g, PermGroup(g.degree(), {*t}));
    std::vector<char> moved(g.degree(), 0);
    for (const auto& x : s.generators())
        for (std::uint32_t p = 0; p < g.degree(); ++p)
            if (x.images[p] != p) moved[p] = 1;
    std::vector<std::uint32_t> anchors;
    for (std::uint32_t p : t->fixed_points())
        if (moved[p]) anchors.push_back(p);
    if (anchors.size() != 1)
        throw math_error("involution fixes " + std::to_string(anchors.size()) +
                         " points of its closure's support; expected exactly 1");
    return g.orbit(anchors[0]);
}

PermGroup sylow2(const PermGroup& g) {
    std::uint64_t m = two_part(g.order());
    if (m == 1) return PermGroup(g.degree());
    auto t = find_involution(g);
    if (!t) throw math_error("no involution found in even-order group");

    // When the involution fixes exactly one point and that point's stabilizer
    // carries the full 2-part, grow there: for the one-fixed-point families
    // the Sylow-2 is normal in the stabilizer, so every draw lands inside it.
    PermGroup ambient = g;
    auto tf = t->fixed_points();
    if (tf.size() == 1) {
        PermGroup h = g.stabilizer(tf[0]);
        if (two_part(h.order()) == m) ambient = h;
    }

    std::vector<Permutation> ugens{*t};
    PermGroup u(g.degree(), ugens);
    rng64 rng(kDefaultSeed);
    const int kMaxTries = 20000;
    int tries = 0;
    while (u.order() < m) {
        if (++tries > kMaxTries)
            throw math_error("sylow-2 growth did not converge (documented search limit)");
        Permutation y = two_part_element(ambient.random_element(rng));
        if (y.is_identity() || u.contains(y)) continue;
        ugens.push_back(y);
        PermGroup c(g.degree(), ugens);
        if (is_pow2(c.order()))
            u = std::move(c);
        else
            ugens.pop_back();
    }
    return u;
}

ClassificationReport classify_theorem1(const PermGroup& g) {
    if (g.order() % 2 != 0) throw math_error("classification requires even group order");
    ClassificationReport rep;
    PermGroup syl = sylow2(g);
    PermGroup s = normal_closure(g, syl);
    rep.s2_order = syl.order();
    rep.s_order = s.order();

    if (syl.order() <= (std::uint64_t{1} << 12)) {
        std::uint64_t invol = 0;
        for (const auto& e : syl.elements())
            if (!e.is_identity() && e.then(e).is_identity()) ++invol;
        rep.unique_involution = (invol == 1);
    }

    std::optional<std::uint32_t> global_fix;
    for (std::uint32_t p = 0; p < g.degree() && !global_fix; ++p)
        if (g.orbit(p).size() == 1) global_fix = p;

    if (global_fix) {
        rep.kind = ClassCase::fixed_point;
        auto t = find_involution(syl);
        auto f = t->fixed_points();
        if (f.size() != 1) throw math_error("involution fixes more than one point");
        rep.omega_size = 1;
        rep.kernel_order = pointwise_kernel(g, {f[0]}).order();
        return rep;
    }

    std::vector<std::uint32_t> omega = omega_of(g);
    rep.omega_size = omega.size();
    rep.kernel_order = pointwise_kernel(g, omega).order();

    for (std::uint32_t r = 2; r <= 10 && !rep.family_guess; ++r) {
        const int128 n = int128(1) << r;
        const std::uint32_t nn = std::uint32_t{1} << r;
        const std::uint32_t mu = ((nn + 1) % 3 == 0) ? 3 : 1;
        const int128 psl = n * n * n - n;
        const int128 gu = (n * n * n + 1) * (n * n * n) * (n * n - 1);
        const int128 sz = (n * n + 1) * (n * n) * (n - 1);
        const int128 so = static_cast<int128>(rep.s_order);
        const int128 om = static_cast<int128>(rep.omega_size);
        if (so == psl && om == n + 1)
            rep.family_guess = FamilyGuess{"PSL", nn};
        else if (so * mu == gu && om == n * n * n + 1)
            rep.family_guess = FamilyGuess{"PSU", nn};
        else if (mu == 3 && so == gu && om == n * n * n + 1)
            rep.family_guess = FamilyGuess{"SU", nn};
        else if ((r & 1) && r >= 3 && so == sz && om == n * n + 1)
            rep.family_guess = FamilyGuess{"Sz", nn};
    }
    rep.kind = rep.family_guess ? ClassCase::linear_family : ClassCase::odd_times_2group;
    return rep;
}

const char* to_string(ClassCase c) {
    switch (c) {
        case ClassCase::fixed_point: return "fixed_point";
        case ClassCase::linear_family: return "linear_family";
        case ClassCase::odd_times_2group: return "odd_times_2group";
    }
    return "?";
}

}  // namespace pzero
