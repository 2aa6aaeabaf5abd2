#pragma once

// Binary field arithmetic F_{2^r}, 1 <= r <= 20.
//
// Elements are polynomials over F_2 modulo a fixed irreducible modulus,
// encoded as integers: bit i is the coefficient of x^i.  The modulus for
// each degree is the lexicographically smallest irreducible polynomial of
// that degree with nonzero constant term, so encodings are canonical and
// reproducible (see README for the full table).

#include <cstdint>
#include <functional>
#include <vector>

#include "pzero/common.hpp"

namespace pzero {

class FieldSpec {
public:
    int r;                 // extension degree over F_2
    std::uint32_t order;   // 2^r
    std::uint32_t modulus; // irreducible polynomial, bit-encoded, degree r
    std::uint32_t gen;     // smallest multiplicative generator

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!a || !b) return 0;
        if (!log_.empty()) {
            std::uint64_t s = log_[a] + log_[b];
            if (s >= order - 1) s -= order - 1;
            return exp_[s];
        }
        return mul_slow(a, b);
    }

    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // x -> x^(2^e)
    std::uint32_t frobenius(std::uint32_t a, int e) const;

    // Absolute trace to F_2 (returns 0 or 1).
    std::uint32_t trace(std::uint32_t a) const;

    // Trace / norm down to the subfield F_{2^s}, s | r.  The result is an
    // element of this field lying in that subfield.
    std::uint32_t rel_trace(std::uint32_t a, int s) const;
    std::uint32_t rel_norm(std::uint32_t a, int s) const;

    // Tits endomorphism x -> x^{2 n0} on F_n, n = 2 n0^2 = 2^(2k+1).
    // Requires r odd and >= 3.  Satisfies tits(tits(x)) = x^2.
    std::uint32_t tits(std::uint32_t a) const;

    std::uint32_t sqrt(std::uint32_t a) const { return frobenius(a, r - 1); }

    // All y with y^2 + y = c: empty when trace(c) = 1, else {y, y+1}.
    std::vector<std::uint32_t> solve_artin_schreier(std::uint32_t c) const;

    // Solve L(y) = c for an arbitrary F_2-linear map L given by a callable
    // on bit-encoded elements.  Returns the solution with smallest encoding
    // and the kernel dimension; returns {none} when unsolvable.
    struct LinearSolution {
        bool solvable = false;
        std::uint32_t y = 0;  // smallest solution
        int kernel_dim = 0;
    };
    LinearSolution solve_linear(const std::function<std::uint32_t(std::uint32_t)>& L,
                                std::uint32_t c) const;

    std::uint32_t element_order(std::uint32_t a) const;

private:
    friend const FieldSpec& make_field(int r);
    void init(int r);
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow_pow(std::uint32_t a, std::uint64_t e) const;

    std::vector<std::uint32_t> log_, exp_;  // built for r <= 16
};

// Canonical field of order 2^r (1 <= r <= 20).  Returned reference is to an
// immutable process-wide singleton, so FieldSpec pointers can be compared.
const FieldSpec& make_field(int r);

// Value type pairing an element with its field; mixing specs is an error.
struct FieldElement {
    const FieldSpec* spec;
    std::uint32_t bits;

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.spec, a.spec->add(a.bits, b.bits)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.spec, a.spec->mul(a.bits, b.bits)};
    }
    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.bits == b.bits;
    }

private:
    static void check(FieldElement a, FieldElement b) {
        if (a.spec != b.spec) throw math_error("field elements from different specs");
    }
};

}  // namespace pzero
