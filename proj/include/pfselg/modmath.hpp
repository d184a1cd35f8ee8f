#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Arbitrary-precision modular arithmetic used by every other layer.
// All functions are pure and safe to call from multiple threads.

namespace pfselg {

using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModulusError : public Error {
public:
    using Error::Error;
};

class UndefinedGcdError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    NotInvertibleError(std::string what, Int gcd)
        : Error(std::move(what)), gcd(std::move(gcd)) {}
    Int gcd;
};

class NotAUnitError : public Error {
public:
    using Error::Error;
};

class NoSquareRootError : public Error {
public:
    using Error::Error;
};

class NonSimpleRootError : public Error {
public:
    using Error::Error;
};

class CrtConflictError : public Error {
public:
    using Error::Error;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 1;

    bool operator==(const PrimePower&) const = default;
};

// Complete prime factorization, ascending by prime.
struct Factorization {
    std::vector<PrimePower> factors;

    // Product of prime^exponent.
    Int value() const;
    bool operator==(const Factorization&) const = default;
};

std::string to_string(const Factorization& f);

// Deterministic primality test. Fixed Miller-Rabin witness set below 2^64,
// fixed-seed random rounds above (same verdict on every run).
bool is_prime(const Int& n);

// Smallest prime >= n.
Int next_prime(const Int& n);

// base^exp mod m by square-and-multiply. Requires m >= 2, base/exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& m);

struct EgcdResult {
    Int g;  // gcd, always >= 1
    Int s;
    Int t;  // g == s*a + t*b
};

// Extended Euclid. Throws UndefinedGcdError for (0, 0).
EgcdResult egcd(const Int& a, const Int& b);

// Inverse of a mod m, in [1, m). Throws NotInvertibleError (carrying the
// gcd) when gcd(a, m) != 1.
Int mod_inv(const Int& a, const Int& m);

// Trial division by primes below 2^20, then Pollard rho on whatever
// survives. Requires n >= 2.
Factorization factorize(const Int& n);

// Euler phi from a factorization: prod p^(e-1) * (p-1).
Int euler_phi(const Factorization& f);

// Least n >= 1 with a^n == 1 (mod m), computed by dividing prime factors
// out of phi(m). phi_factored must be the factorization of euler phi of m.
Int multiplicative_order(const Int& a, const Int& m, const Factorization& phi_factored);

// Convenience overload that factorizes phi(m) itself.
Int multiplicative_order(const Int& a, const Int& m);

// Square root of a mod an odd prime p (Tonelli-Shanks). Returns the smaller
// of the two roots, or 0 for a == 0. Throws NoSquareRootError when a is a
// non-residue.
Int sqrt_mod_prime(const Int& a, const Int& p);

// Lift a simple root of f(x) = x^2 - x - 1 from mod p to mod p^e by Newton
// iteration. Throws NonSimpleRootError when f'(r) == 0 mod p (only p = 5).
Int hensel_lift_root(const Int& r, const Int& p, unsigned e);

// Unique x in [0, prod m_i) with x == r_i (mod m_i). Moduli must be
// pairwise coprime; any shared factor throws CrtConflictError.
Int crt_combine(const std::vector<std::pair<Int, Int>>& residues);

// Smallest s with s*s >= n.
Int ceil_sqrt(const Int& n);

}  // namespace pfselg
