#pragma once
// Permutation-group engine: orders, orbits, stabilizers, transitivity,
// trivial-intersection tests, normal closures, and the structural
// classification of even-order groups in which every involution fixes
// exactly one point.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pzero/bsgs.hpp"
#include "pzero/common.hpp"

namespace pzero {

struct Permutation {
    // images[i] = image of point i; always a bijection on {0..degree-1}.
    std::vector<std::uint32_t> images;

    static Permutation identity(std::uint32_t degree);
    // Cycles use 0-indexed points; anything not mentioned is fixed.
    static Permutation from_cycles(std::uint32_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images.size()); }
    std::uint32_t operator()(std::uint32_t p) const { return images.at(p); }
    bool is_identity() const;
    bool operator==(const Permutation&) const = default;

    Permutation then(const Permutation& other) const;  // apply *this first, then other
    Permutation inverse() const;
    Permutation conjugated_by(const Permutation& x) const;  // x^{-1} * this * x

    std::vector<std::uint32_t> fixed_points() const;
    std::uint64_t element_order() const;  // lcm of cycle lengths
    // Nontrivial cycles, each starting at its smallest point, sorted by that point.
    std::vector<std::vector<std::uint32_t>> cycles() const;

    // Throws math_error unless images is a bijection on {0..degree-1}.
    void validate() const;
};

Permutation pow(const Permutation& x, std::uint64_t e);

struct PermAction {
    using Element = Permutation;
    std::uint32_t deg = 0;
    std::uint32_t degree() const { return deg; }
    Permutation identity() const { return Permutation::identity(deg); }
    Permutation compose(const Permutation& a, const Permutation& b) const { return a.then(b); }
    Permutation inverse(const Permutation& a) const { return a.inverse(); }
    std::uint32_t apply(const Permutation& a, std::uint32_t p) const { return a.images[p]; }
    bool equal(const Permutation& a, const Permutation& b) const { return a.images == b.images; }
};
using PermChain = StabilizerChain<PermAction>;

class PermGroup {
public:
    PermGroup() : PermGroup(1) {}              // trivial group on one point
    explicit PermGroup(std::uint32_t degree);  // trivial group
    PermGroup(std::uint32_t degree, std::vector<Permutation> generators);

    std::uint32_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    std::uint64_t order() const;
    bool contains(const Permutation& x) const;
    std::vector<std::uint32_t> orbit(std::uint32_t p) const;  // sorted
    std::vector<std::vector<std::uint32_t>> orbits() const;
    PermGroup stabilizer(std::uint32_t p) const;
    bool is_transitive() const;
    bool is_two_transitive() const;

    // All elements, enumerated through the chain; throws if order() > cap.
    std::vector<Permutation> elements(std::uint64_t cap = std::uint64_t{1} << 12) const;
    // Uniform over the group: one transversal element per chain level.
    Permutation random_element(rng64& rng) const;

    // Stabilizer chain, built once per group object and cached.
    const PermChain& chain() const;

private:
    struct ChainBox {
        std::once_flag once;
        std::unique_ptr<PermChain> chain;
    };
    std::uint32_t degree_;
    std::vector<Permutation> gens_;
    std::shared_ptr<ChainBox> box_;
};

PermGroup normal_closure(const PermGroup& g, const PermGroup& v);
PermGroup pointwise_kernel(const PermGroup& g, const std::vector<std::uint32_t>& pts);

// True iff v and each of its conjugates in g intersect in v or the identity.
// Uses one conjugate per point of the orbit of v's unique common fixed point
// when v is normal in that point's stabilizer; otherwise falls back to full
// enumeration (g must then have order <= 2^13).
bool is_ti_subgroup(const PermGroup& g, const PermGroup& v);

// Orbit of the unique fixed point of an involution, the fixed point being
// counted inside the support of the involution's normal closure.  Throws if
// that fixed point is not unique (the one-fixed-point condition fails).
std::vector<std::uint32_t> omega_of(const PermGroup& g);

// Seeded growth of a Sylow 2-subgroup: start from the 2-part of some element
// and extend by 2-parts of random elements while the span stays a 2-group.
// Runs inside the stabilizer of an involution's unique fixed point when that
// captures the full 2-part.  Documented limit: gives up after a bounded
// number of draws (suited to the group families handled here).
PermGroup sylow2(const PermGroup& g);

enum class ClassCase { fixed_point, linear_family, odd_times_2group };

struct FamilyGuess {
    std::string family;  // "PSL", "PSU", "SU", or "Sz"
    std::uint32_t n = 0;
    bool operator==(const FamilyGuess&) const = default;
};

struct ClassificationReport {
    ClassCase kind = ClassCase::odd_times_2group;
    std::optional<FamilyGuess> family_guess;
    std::uint64_t omega_size = 0;
    std::uint64_t s2_order = 0;
    std::uint64_t s_order = 0;
    std::uint64_t kernel_order = 0;
    bool unique_involution = false;
};

// Structural classification of an even-order group whose involutions each fix
// exactly one point: a group with a global fixed point, a group whose Sylow-2
// normal closure S matches one of the linear-family order/degree shapes
// (PSL(2,n), PSU(3,n), SU(3,n), Sz(n), n = 2^r >= 4), or an extension of an
// odd-order group by a 2-group.
ClassificationReport classify_theorem1(const PermGroup& g);

const char* to_string(ClassCase c);

}  // namespace pzero
