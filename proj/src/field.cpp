#include "pzero/field.hpp"

#include <array>
#include <cstdlib>
#include <mutex>

namespace pzero {

std::size_t budget_mb() {
    if (const char* s = std::getenv("PZERO_BUDGET_MB")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 512;
}

std::string to_string_i128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.insert(s.begin(), char('0' + int(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

namespace {

// Smallest irreducible polynomial of each degree with nonzero constant term.
constexpr std::array<std::uint32_t, 21> kModulus = {
    0,
    0x3,       // x + 1
    0x7,       // x^2 + x + 1
    0xb,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x83,      // x^7 + x + 1
    0x11b,     // x^8 + x^4 + x^3 + x + 1
    0x203,     // x^9 + x + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1009,    // x^12 + x^3 + 1
    0x201b,    // x^13 + x^4 + x^3 + x + 1
    0x4021,    // x^14 + x^5 + 1
    0x8003,    // x^15 + x + 1
    0x1002b,   // x^16 + x^5 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40009,   // x^18 + x^3 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
};

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(static_cast<std::uint32_t>(p));
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(static_cast<std::uint32_t>(n));
    return ps;
}

}  // namespace

std::uint32_t FieldSpec::mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    // reduce modulo the modulus (degree r)
    std::uint64_t m = modulus;
    for (int d = 2 * r - 2; d >= r; --d)
        if (acc >> d & 1) acc ^= m << (d - r);
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (!a) throw math_error("inverse of zero");
    if (!log_.empty()) return exp_[(order - 1 - log_[a]) % (order - 1)];
    return pow(a, order - 2);
}

std::uint32_t FieldSpec::frobenius(std::uint32_t a, int e) const {
    e %= r;
    if (e < 0) e += r;
    for (int i = 0; i < e; ++i) a = mul(a, a);
    return a;
}

std::uint32_t FieldSpec::trace(std::uint32_t a) const {
    std::uint32_t acc = 0, x = a;
    for (int i = 0; i < r; ++i) {
        acc ^= x;
        x = mul(x, x);
    }
    if (acc > 1) throw math_error("trace not in the prime field");
    return acc;
}

std::uint32_t FieldSpec::rel_trace(std::uint32_t a, int s) const {
    if (s <= 0 || r % s != 0) throw math_error("rel_trace: subfield degree must divide r");
    std::uint32_t acc = 0, x = a;
    for (int i = 0; i < r / s; ++i) {
        acc ^= x;
        x = frobenius(x, s);
    }
    return acc;
}

std::uint32_t FieldSpec::rel_norm(std::uint32_t a, int s) const {
    if (s <= 0 || r % s != 0) throw math_error("rel_norm: subfield degree must divide r");
    std::uint32_t acc = 1, x = a;
    for (int i = 0; i < r / s; ++i) {
        acc = mul(acc, x);
        x = frobenius(x, s);
    }
    return acc;
}

std::uint32_t FieldSpec::tits(std::uint32_t a) const {
    if (r < 3 || r % 2 == 0)
        throw math_error("tits endomorphism needs field order 2^(2k+1), k >= 1");
    return frobenius(a, (r + 1) / 2);
}

std::vector<std::uint32_t> FieldSpec::solve_artin_schreier(std::uint32_t c) const {
    auto sol = solve_linear([this](std::uint32_t y) { return mul(y, y) ^ y; }, c);
    if (!sol.solvable) return {};
    return {sol.y, sol.y ^ 1u};
}

FieldSpec::LinearSolution FieldSpec::solve_linear(
    const std::function<std::uint32_t(std::uint32_t)>& L, std::uint32_t c) const {
    // Gaussian elimination on the r x r matrix over F_2 whose columns are
    // L(2^j); rows augmented with the target bit.
    std::vector<std::uint64_t> rows(r, 0);  // bit j of row i = L(2^j) bit i; bit r = c bit i
    for (int j = 0; j < r; ++j) {
        std::uint32_t img = L(1u << j);
        for (int i = 0; i < r; ++i)
            if (img >> i & 1) rows[i] |= 1ull << j;
    }
    for (int i = 0; i < r; ++i)
        if (c >> i & 1) rows[i] |= 1ull << r;

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < r; ++col) {
        int p = -1;
        for (int i = rank; i < r; ++i)
            if (rows[i] >> col & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int i = 0; i < r; ++i)
            if (i != rank && (rows[i] >> col & 1)) rows[i] ^= rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < r; ++i)
        if (rows[i] >> r & 1) return {};  // inconsistent

    std::uint32_t part = 0;
    for (int i = 0; i < rank; ++i)
        if (rows[i] >> r & 1) part |= 1u << pivot_col[i];

    // Kernel basis: one vector per free column, in echelon form.
    std::vector<std::uint32_t> kernel;
    std::vector<bool> is_pivot(r, false);
    for (int col : pivot_col) is_pivot[col] = true;
    for (int col = 0; col < r; ++col) {
        if (is_pivot[col]) continue;
        std::uint32_t v = 1u << col;
        for (int i = 0; i < rank; ++i)
            if (rows[i] >> col & 1) v |= 1u << pivot_col[i];
        kernel.push_back(v);
    }
    // Minimise the particular solution over the kernel span (greedy on the
    // echelon basis gives the smallest encoding).
    std::vector<std::uint32_t> basis(32, 0);
    for (std::uint32_t v : kernel) {
        std::uint32_t w = v;
        for (int b = 31; b >= 0; --b)
            if (w >> b & 1) {
                if (!basis[b]) { basis[b] = w; break; }
                w ^= basis[b];
            }
    }
    for (int b = 31; b >= 0; --b)
        if (basis[b] && (part >> b & 1)) part ^= basis[b];

    return {true, part, static_cast<int>(kernel.size())};
}

std::uint32_t FieldSpec::element_order(std::uint32_t a) const {
    if (!a) throw math_error("order of zero");
    std::uint32_t o = order - 1;
    for (std::uint32_t p : prime_factors(o))
        while (o % p == 0 && pow(a, o / p) == 1) o /= p;
    return o;
}

void FieldSpec::init(int rr) {
    r = rr;
    order = 1u << r;
    modulus = kModulus[static_cast<std::size_t>(r)];
    if (r <= 16) {
        // discrete log tables over a generator of the multiplicative group
        exp_.assign(order - 1, 0);
        log_.assign(order, 0);
    }
    // smallest multiplicative generator
    auto factors = prime_factors(order - 1);
    for (std::uint32_t g = 1; g < order; ++g) {
        bool ok = g != 0;
        for (std::uint32_t p : factors)
            if (mul_slow_pow(g, (order - 1) / p) == 1) { ok = false; break; }
        if (order == 2) ok = (g == 1);
        if (ok) { gen = g; break; }
    }
    if (!exp_.empty()) {
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i + 1 < order; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_slow(x, gen);
        }
    }
}

// pow via mul_slow, usable before the log tables exist
std::uint32_t FieldSpec::mul_slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e) {
        if (e & 1) acc = mul_slow(acc, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return acc;
}

const FieldSpec& make_field(int r) {
    if (r < 1 || r > 20) throw math_error("field degree must be in [1, 20]");
    static std::array<FieldSpec, 21> specs;
    static std::array<std::once_flag, 21> flags;
    std::call_once(flags[static_cast<std::size_t>(r)],
                   [r] { specs[static_cast<std::size_t>(r)].init(r); });
    return specs[static_cast<std::size_t>(r)];
}

}  // namespace pzero
