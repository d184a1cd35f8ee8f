#include "pfselg/dlog.hpp"

#include <boost/functional/hash.hpp>

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace pfselg {
namespace {

Int reduce(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

void check_instance(const DlogInstance& inst) {
    if (inst.m < 2) throw Error("dlog: modulus must be >= 2");
    if (inst.n < 1) throw Error("dlog: subgroup order must be >= 1");
}

}  // namespace

DlogInstance instance_from_public(const PublicKey& pk) {
    return {pk.m, pk.alpha, pk.beta, pk.n};
}

Int dlog_brute(const DlogInstance& inst) {
    check_instance(inst);
    Int target = reduce(inst.target, inst.m);
    Int acc = 1;
    for (Int lambda = 0; lambda < inst.n; ++lambda) {
        if (acc == target) return lambda;
        acc = acc * inst.alpha % inst.m;
    }
    throw NoSolutionError("dlog_brute: target is not in <alpha> after " +
                          inst.n.str() + " steps");
}

Int dlog_bsgs(const DlogInstance& inst) {
    check_instance(inst);
    Int target = reduce(inst.target, inst.m);
    Int steps = ceil_sqrt(inst.n);
    if (steps > (Int(1) << 32))
        throw Error("dlog_bsgs: baby-step table would exceed 2^32 entries");
    auto table_size = steps.convert_to<std::size_t>();

    // Baby steps alpha^j, keeping the smallest exponent per element.
    std::unordered_map<Int, Int, boost::hash<Int>> baby;
    baby.reserve(table_size);
    Int val = 1;
    for (Int j = 0; j < steps; ++j) {
        baby.emplace(val, j);  // emplace keeps the first (smallest) j
        val = val * inst.alpha % inst.m;
    }

    Int giant = mod_inv(mod_pow(inst.alpha, steps, inst.m), inst.m);
    Int gamma = target;
    for (Int i = 0; i * steps < inst.n; ++i) {
        auto hit = baby.find(gamma);
        if (hit != baby.end()) return i * steps + hit->second;
        gamma = gamma * giant % inst.m;
    }
    throw NoSolutionError("dlog_bsgs: target is not in <alpha>");
}

Int dlog_pohlig_hellman(const DlogInstance& inst, const Factorization& n_factored) {
    check_instance(inst);
    if (n_factored.value() != inst.n)
        throw Error("dlog_pohlig_hellman: factorization does not multiply to n");
    Int target = reduce(inst.target, inst.m);

    std::vector<std::pair<Int, Int>> residues;
    for (const auto& pp : n_factored.factors) {
        Int pe = pow(pp.prime, pp.exponent);
        Int cof = inst.n / pe;
        Int g = mod_pow(inst.alpha, cof, inst.m);   // order p^e
        Int h = mod_pow(target, cof, inst.m);
        Int gamma = mod_pow(g, pow(pp.prime, pp.exponent - 1), inst.m);  // order p

        // Digits of the sub-log base p, least significant first.
        Int x = 0;
        Int p_pow = 1;
        for (unsigned j = 0; j < pp.exponent; ++j) {
            Int shifted = h * mod_inv(mod_pow(g, x, inst.m), inst.m) % inst.m;
            Int hj = mod_pow(shifted, pow(pp.prime, pp.exponent - 1 - j), inst.m);
            Int digit = dlog_bsgs({inst.m, gamma, hj, pp.prime});
            x += digit * p_pow;
            p_pow *= pp.prime;
        }
        residues.emplace_back(x, pe);
    }

    Int lambda = residues.empty() ? Int(0) : crt_combine(residues);
    if (mod_pow(inst.alpha, lambda, inst.m) != target)
        throw InternalConsistencyError(
            "dlog_pohlig_hellman: recombined exponent does not reproduce the target");
    return lambda;
}

AttackReport attack_report(const PublicKey& pk) {
    AttackReport r;
    r.plaintext_space = pk.m - 1;
    r.subgroup_order = pk.n;
    r.brute_cost = pk.n;
    r.bsgs_cost = ceil_sqrt(pk.n);
    if (pk.n > 1) {
        r.order_factorization = factorize(pk.n);
        r.largest_prime_factor = r.order_factorization.factors.back().prime;
    } else {
        r.largest_prime_factor = 1;
    }

    r.modulus_bits = msb(pk.m) + 1;
    r.classic_prime = next_prime(Int(1) << (r.modulus_bits - 1));
    r.classic_plaintext_space = r.classic_prime - 1;
    r.classic_order = r.classic_prime - 1;
    r.classic_bsgs_cost = ceil_sqrt(r.classic_order);
    return r;
}

}  // namespace pfselg
