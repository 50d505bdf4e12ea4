#pragma once

// Shared error types and enumeration guards. Every potentially explosive
// scan in the library checks its instance count against a guard before any
// work starts and refuses with the exact count when it would be exceeded.

#include <stdexcept>
#include <string>

namespace qrmc {

/// Refusal of an enumeration or scan whose instance count exceeds a guard.
/// The message always contains the exact count and the guard in effect.
class guard_exceeded : public std::runtime_error {
public:
    guard_exceeded(const std::string& what, unsigned long long count,
                   unsigned long long guard)
        : std::runtime_error(what), count_(count), guard_(guard) {}

    unsigned long long count() const noexcept { return count_; }
    unsigned long long guard() const noexcept { return guard_; }

private:
    unsigned long long count_;
    unsigned long long guard_;
};

/// Raised by operations that only make sense for codes of n x m matrices
/// with n <= m (the orientation the anticode classification assumes).
class orientation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace guards {
inline constexpr unsigned long long subspaces = 200'000;        // lattice enumerations
inline constexpr unsigned long long codewords = 1ull << 22;     // codeword scans
inline constexpr unsigned long long ambient_words = 1ull << 20; // covering-radius scans
inline constexpr unsigned long long map_pairs = 10'000'000;     // equivalence searches
}  // namespace guards

// Saturating counters; guard comparisons must never overflow.
inline constexpr unsigned long long count_cap = 1ull << 62;

inline unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a >= count_cap || b >= count_cap || a > count_cap / b) return count_cap;
    return a * b;
}

inline unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    if (a >= count_cap || b >= count_cap || a + b >= count_cap) return count_cap;
    return a + b;
}

inline unsigned long long sat_pow(unsigned long long base, unsigned long long exp) {
    unsigned long long r = 1;
    for (; exp > 0; --exp) {
        r = sat_mul(r, base);
        if (r >= count_cap) return count_cap;
    }
    return r;
}

inline void check_guard(const std::string& what, unsigned long long count,
                        unsigned long long guard) {
    if (count > guard)
        throw guard_exceeded(what + " needs " + std::to_string(count) +
                                 " instances, guard is " + std::to_string(guard) +
                                 " (raise the guard to proceed)",
                             count, guard);
}

}  // namespace qrmc
