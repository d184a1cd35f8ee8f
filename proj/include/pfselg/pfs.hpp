#pragma once

#include "pfselg/modmath.hpp"

#include <cstdint>
#include <optional>
#include <set>

// Power Fibonacci sequences mod m: sequences with G(n) = G(n-1) + G(n-2)
// that are simultaneously 1, alpha, alpha^2, ... (mod m). They exist exactly
// when m is 5, a product of prime powers with every prime == +-1 (mod 10),
// or 5 times such a product; there are then 2^k of them, k the number of
// distinct +-1 primes. Each generator alpha is a root of x^2 - x - 1 mod m
// and spans a cyclic subgroup of the units mod m.

namespace pfselg {

class UnsupportedModulusError : public Error {
public:
    using Error::Error;
};

class NotAPfsGeneratorError : public Error {
public:
    using Error::Error;
};

// A modulus accepted by the existence test, with its sequence count.
struct PfsModulus {
    Int m;
    Factorization factorization;
    unsigned k = 0;       // distinct prime factors == +-1 (mod 10)
    bool has_five = false;
    Int expected_count;   // 2^k
};

// A chosen generator together with the order of the subgroup it spans.
struct PfsGroup {
    Int m;
    Int alpha;
    Int order;  // multiplicative order of alpha mod m
};

inline constexpr std::uint64_t default_subgroup_cap = std::uint64_t(1) << 20;

// Accepts m iff power Fibonacci sequences exist mod m; otherwise throws
// UnsupportedModulusError naming the offending factor.
PfsModulus classify_modulus(const Int& m);

// All alpha in [1, m) with alpha^2 == alpha + 1 (mod m), ascending. Roots
// are found per prime power as (1 +- sqrt 5)/2 lifted with Hensel, then
// assembled across prime powers by CRT; the list always has length
// expected_count.
std::vector<Int> find_generators(const PfsModulus& pm);

// Validates alpha and computes the subgroup order. Throws
// NotAPfsGeneratorError when alpha^2 != alpha + 1 (mod m).
PfsGroup make_group(const Int& m, const Int& alpha);

// First `count` sequence terms G(0) = 1, G(1) = alpha, G(n) = G(n-1) + G(n-2) mod m.
std::vector<Int> sequence_terms(const PfsGroup& g, std::uint64_t count);

// The subgroup {alpha^0, ..., alpha^(order-1)} as a set, or nullopt when
// order exceeds `cap` (the order itself is already in g).
std::optional<std::set<Int>> subgroup_elements(const PfsGroup& g,
                                               std::uint64_t cap = default_subgroup_cap);

}  // namespace pfselg
