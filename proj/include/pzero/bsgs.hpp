#pragma once
// Deterministic Schreier-Sims stabilizer chains, generic over the group
// action.  The same engine drives permutation groups (degree ~10^3) and
// 3x3 matrix groups over small fields acting on nonzero column vectors
// (degree ~2.6e5), so elements are an abstract type supplied by an action
// policy:
//
//   struct Action {
//     using Element = ...;           // copyable value type
//     std::uint32_t degree() const;  // number of points acted on
//     Element identity() const;
//     Element compose(const Element& a, const Element& b) const; // "a then b"
//     Element inverse(const Element& a) const;
//     std::uint32_t apply(const Element& a, std::uint32_t p) const;
//     bool equal(const Element& a, const Element& b) const;
//   };
//
// Convention: apply(compose(a, b), p) == apply(b, apply(a, p)).
//
// Base points are picked in natural order (after any caller-forced prefix),
// using the first point moved by the element that forces a new level, so
// chains, transversals, and everything derived from them are reproducible
// run to run.  No randomization anywhere.

#include <cstdint>
#include <utility>
#include <vector>

#include "pzero/common.hpp"

namespace pzero {

template <class Action>
class StabilizerChain {
public:
    using Element = typename Action::Element;

    StabilizerChain(const Action& act, const std::vector<Element>& generators,
                    const std::vector<std::uint32_t>& forced_base = {})
        : act_(act) {
        for (const auto& g : generators)
            if (!act_.equal(g, act_.identity())) gens_.push_back(g);
        for (std::uint32_t b : forced_base) {
            if (b >= act_.degree()) throw math_error("base point out of range");
            if (base_index(b) < 0) push_level(b);
        }
        for (const auto& g : gens_) place(g);
        // Verification loop: confirm each level's Schreier generators sift to
        // the identity, deepest level first; a failed sift contributes a new
        // strong generator and restarts verification at the level where the
        // residue stuck.
        int i = static_cast<int>(levels_.size()) - 1;
        while (i >= 0) {
            int stuck = verify_level(static_cast<std::size_t>(i));
            i = (stuck < 0) ? i - 1 : stuck;
        }
    }

    std::uint32_t degree() const { return act_.degree(); }
    const Action& action() const { return act_; }

    std::uint64_t order() const {
        int128 n = 1;
        for (const auto& lv : levels_) {
            n *= static_cast<int128>(lv.orbit.size());
            if (n > static_cast<int128>(~std::uint64_t{0}))
                throw math_error("group order exceeds 64 bits");
        }
        return static_cast<std::uint64_t>(n);
    }

    std::size_t level_count() const { return levels_.size(); }
    std::uint32_t base_point(std::size_t i) const { return levels_.at(i).base; }
    const std::vector<std::uint32_t>& level_orbit(std::size_t i) const {
        return levels_.at(i).orbit;
    }
    // Strong generators fixing base points 0..i-1.  Indices past the last
    // level yield an empty set (the pointwise stabilizer is trivial there).
    const std::vector<Element>& level_generators(std::size_t i) const {
        static const std::vector<Element> kEmpty;
        return i < levels_.size() ? levels_[i].gens : kEmpty;
    }

    // Element mapping base_point(i) to pt; throws if pt is outside the orbit.
    const Element& transversal(std::size_t i, std::uint32_t pt) const {
        const Level& lv = levels_.at(i);
        std::int32_t idx = lv.where.at(pt);
        if (idx < 0) throw math_error("point outside level orbit");
        return lv.utrans[static_cast<std::size_t>(idx)];
    }
    const Element& transversal_by_index(std::size_t i, std::size_t k) const {
        return levels_.at(i).utrans.at(k);
    }

    // Strip g through levels [from, level_count()); returns the residue and
    // the level at which stripping failed (level_count() if it ran through).
    std::pair<Element, std::size_t> sift_from(std::size_t from, Element g) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const Level& lv = levels_[i];
            std::uint32_t p = act_.apply(g, lv.base);
            if (p == lv.base) continue;
            std::int32_t idx = lv.where[p];
            if (idx < 0) return {std::move(g), i};
            g = act_.compose(g, lv.uinv[static_cast<std::size_t>(idx)]);
        }
        return {std::move(g), levels_.size()};
    }
    std::pair<Element, std::size_t> sift(Element g) const { return sift_from(0, std::move(g)); }

    bool contains(const Element& g) const {
        auto [res, lvl] = sift(g);
        return lvl == levels_.size() && act_.equal(res, act_.identity());
    }

private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<Element> gens;          // strong generators fixing earlier base points
        std::vector<std::uint32_t> orbit;   // BFS order, orbit[0] == base
        std::vector<std::int32_t> where;    // point -> index into orbit, -1 if absent
        std::vector<Element> utrans;        // utrans[k] maps base -> orbit[k]
        std::vector<Element> uinv;          // inverses of utrans
    };

    int base_index(std::uint32_t p) const {
        for (std::size_t i = 0; i < levels_.size(); ++i)
            if (levels_[i].base == p) return static_cast<int>(i);
        return -1;
    }

    std::uint32_t first_moved(const Element& g) const {
        for (std::uint32_t p = 0; p < act_.degree(); ++p)
            if (act_.apply(g, p) != p) return p;
        throw math_error("identity element has no moved point");
    }

    void push_level(std::uint32_t b) {
        Level lv;
        lv.base = b;
        levels_.push_back(std::move(lv));
        rebuild_orbit(levels_.size() - 1);
    }

    void add_generator(std::size_t i, const Element& g) {
        levels_[i].gens.push_back(g);
        rebuild_orbit(i);
    }

    // Insert a generator at level 0 and cascade down as long as it fixes the
    // base prefix, extending the base when it fixes every base point so far.
    void place(const Element& g) {
        std::size_t i = 0;
        for (;;) {
            if (i == levels_.size()) push_level(first_moved(g));
            add_generator(i, g);
            if (act_.apply(g, levels_[i].base) != levels_[i].base) break;
            ++i;
        }
    }

    void rebuild_orbit(std::size_t i) {
        Level& lv = levels_[i];
        lv.where.assign(act_.degree(), -1);
        lv.orbit.clear();
        lv.utrans.clear();
        lv.uinv.clear();
        lv.orbit.push_back(lv.base);
        lv.where[lv.base] = 0;
        lv.utrans.push_back(act_.identity());
        lv.uinv.push_back(act_.identity());
        // BFS edges use generators and their inverses for shallow trees; the
        // transversal element of each point is materialized as it is found.
        std::vector<Element> edges;
        edges.reserve(lv.gens.size() * 2);
        for (const auto& g : lv.gens) {
            Element gi = act_.inverse(g);
            bool self_inverse = act_.equal(gi, g);
            edges.push_back(g);
            if (!self_inverse) edges.push_back(std::move(gi));
        }
        for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
            std::uint32_t p = lv.orbit[head];
            for (const auto& e : edges) {
                std::uint32_t q = act_.apply(e, p);
                if (lv.where[q] >= 0) continue;
                lv.where[q] = static_cast<std::int32_t>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.utrans.push_back(act_.compose(lv.utrans[head], e));
                lv.uinv.push_back(act_.compose(act_.inverse(e), lv.uinv[head]));
            }
        }
    }

    // Returns -1 if the level verified clean, else the index of the deepest
    // level that received a new strong generator (the restart point).
    int verify_level(std::size_t i) {
        for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
            for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
                const Level& lv = levels_[i];
                std::uint32_t p = lv.orbit[k];
                const Element& x = lv.gens[s];
                std::uint32_t q = act_.apply(x, p);
                std::int32_t qi = lv.where[q];  // q stays inside the orbit
                Element h = act_.compose(act_.compose(lv.utrans[k], x),
                                         lv.uinv[static_cast<std::size_t>(qi)]);
                if (act_.equal(h, act_.identity())) continue;
                auto [res, j] = sift_from(i + 1, std::move(h));
                if (j == levels_.size()) {
                    if (act_.equal(res, act_.identity())) continue;
                    push_level(first_moved(res));
                }
                for (std::size_t l = i + 1; l <= j; ++l) add_generator(l, res);
                return static_cast<int>(j);
            }
        }
        return -1;
    }

    Action act_;
    std::vector<Element> gens_;
    std::vector<Level> levels_;
};

}  // namespace pzero
