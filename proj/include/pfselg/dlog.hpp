#pragma once

#include "pfselg/elgamal.hpp"
#include "pfselg/modmath.hpp"

// Discrete-logarithm solvers over the subgroup <alpha> of the units mod m.
// They are black-box attackers: each sees only (m, alpha, target, n), never
// a private key, and returns the least lambda in [0, n) with
// alpha^lambda == target.

namespace pfselg {

class NoSolutionError : public Error {
public:
    using Error::Error;
};

class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

struct DlogInstance {
    Int m;
    Int alpha;
    Int target;
    Int n;  // order of <alpha>
};

// Attacker's view of a public key: target is beta.
DlogInstance instance_from_public(const PublicKey& pk);

// Linear scan over powers of alpha; O(n). Intended for n <= 2^24.
Int dlog_brute(const DlogInstance& inst);

// Baby-step giant-step; O(sqrt n) time and memory.
Int dlog_bsgs(const DlogInstance& inst);

// Prime-power sub-logs (each via BSGS) recombined by CRT; fast when n is
// smooth. n_factored must multiply back to inst.n.
Int dlog_pohlig_hellman(const DlogInstance& inst, const Factorization& n_factored);

// Search-cost summary for a public key plus the same numbers for a classic
// prime of equal bit length (the smallest such prime).
struct AttackReport {
    Int plaintext_space;       // m - 1
    Int subgroup_order;        // n
    Int brute_cost;            // n
    Int bsgs_cost;             // ceil(sqrt(n))
    Factorization order_factorization;
    Int largest_prime_factor;  // smoothness of n
    unsigned modulus_bits = 0;
    Int classic_prime;
    Int classic_plaintext_space;  // classic_prime - 1
    Int classic_order;            // classic_prime - 1
    Int classic_bsgs_cost;        // ceil(sqrt(classic_prime - 1))
};

AttackReport attack_report(const PublicKey& pk);

}  // namespace pfselg
