#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pzero {

// Raised when a mathematical precondition or internal invariant fails.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds the configured resource budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Memory budget in MiB, from PZERO_BUDGET_MB (default 512).
std::size_t budget_mb();

// Deterministic 64-bit PRNG (splitmix64). Used wherever sampling is needed
// so results are identical across platforms and runs.
class rng64 {
public:
    explicit rng64(std::uint64_t seed = 0x5A5A) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5A5A;

using int128 = __int128;

// Exact division; throws if not divisible.
inline std::int64_t exact_div(int128 num, int128 den, const char* what) {
    if (den == 0 || num % den != 0)
        throw math_error(std::string(what) + ": non-exact division");
    int128 q = num / den;
    if (q > INT64_MAX || q < INT64_MIN)
        throw math_error(std::string(what) + ": overflow");
    return static_cast<std::int64_t>(q);
}

std::string to_string_i128(int128 v);

}  // namespace pzero
