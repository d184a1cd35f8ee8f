#pragma once

#include "pfselg/modmath.hpp"
#include "pfselg/pfs.hpp"
#include "pfselg/rng.hpp"

#include <cstddef>
#include <string>

// ElGamal over a cyclic subgroup of the units mod m. Two modes share one
// code path: classic (m an odd prime, alpha a primitive root, n = m - 1)
// and pfs (m composite or prime, alpha a power Fibonacci generator,
// n = ord(alpha)). Plaintexts range over [1, m - 1]; they do not have to be
// coprime to m.

namespace pfselg {

class InvalidPrivateKeyError : public Error {
public:
    using Error::Error;
};

class PlaintextOutOfRangeError : public Error {
public:
    PlaintextOutOfRangeError(std::string what, Int bound)
        : Error(std::move(what)), bound(std::move(bound)) {}
    Int bound;  // largest admissible plaintext, m - 1
};

class InvalidNonceError : public Error {
public:
    using Error::Error;
};

class CiphertextOutsideSubgroupError : public Error {
public:
    using Error::Error;
};

class MalformedCiphertextError : public Error {
public:
    using Error::Error;
};

class NotAPrimitiveRootError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string what, std::size_t line, std::string field)
        : Error(std::move(what)), line(line), field(std::move(field)) {}
    std::size_t line;   // 1-based offending line
    std::string field;  // key or "header"
};

enum class Mode { classic, pfs };

std::string to_string(Mode mode);

struct PublicKey {
    Mode mode = Mode::pfs;
    Int m;
    Int alpha;
    Int beta;  // alpha^lambda mod m
    Int n;     // order of <alpha>

    bool operator==(const PublicKey&) const = default;
};

struct PrivateKey {
    Mode mode = Mode::pfs;
    Int m;
    Int alpha;
    Int n;
    Int lambda;  // stored reduced into [1, n)

    bool operator==(const PrivateKey&) const = default;
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

struct Ciphertext {
    Int y1;
    Int y2;

    bool operator==(const Ciphertext&) const = default;
};

// Classic setup: p an odd prime, alpha a primitive root mod p. Validation
// checks alpha^((p-1)/q) != 1 for every prime q | p - 1.
struct ClassicGroup {
    Int p;
    Int alpha;
    Int order;  // p - 1
};

ClassicGroup make_classic_group(const Int& p, const Int& alpha);

// Smallest primitive root mod p (for CLI default alpha in classic mode).
Int smallest_primitive_root(const Int& p);

// Any positive lambda is accepted and stored reduced mod n; lambda == 0
// (mod n) is rejected since it forces beta = 1.
KeyPair keygen(const PfsGroup& group, const Int& lambda);
KeyPair keygen(const PfsGroup& group, SplitMix64& rng);
KeyPair keygen(const ClassicGroup& group, const Int& lambda);
KeyPair keygen(const ClassicGroup& group, SplitMix64& rng);

// y1 = alpha^k, y2 = x * beta^k (mod m). Requires 1 <= x <= m - 1 and
// 1 <= k < n.
Ciphertext encrypt(const PublicKey& pk, const Int& x, const Int& k);
Ciphertext encrypt(const PublicKey& pk, const Int& x, SplitMix64& rng);

// y2 * (y1^lambda)^(-1) mod m. Requires y1 in <alpha> (checked via
// y1^n == 1).
Int decrypt(const PrivateKey& sk, const Ciphertext& c);

// Key and ciphertext files: UTF-8, LF endings, a format tag line, then
// fixed-order key=value lines with decimal integers.
std::string serialize_public(const PublicKey& pk);
std::string serialize_private(const PrivateKey& sk);
std::string serialize_ciphertext(const Ciphertext& c);
PublicKey parse_public(const std::string& text);
PrivateKey parse_private(const std::string& text);
Ciphertext parse_ciphertext(const std::string& text);

}  // namespace pfselg
