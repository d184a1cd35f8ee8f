#include "pfselg/pfs.hpp"

#include <algorithm>

namespace pfselg {

PfsModulus classify_modulus(const Int& m) {
    if (m < 2) throw Error("classify_modulus: modulus must be >= 2");
    PfsModulus pm;
    pm.m = m;
    pm.factorization = factorize(m);
    for (const auto& pp : pm.factorization.factors) {
        if (pp.prime == 5) {
            if (pp.exponent > 1)
                throw UnsupportedModulusError(
                    "25 divides " + m.str() + "; x^2 = x + 1 has no solution mod 25");
            pm.has_five = true;
        } else if (pp.prime % 10 == 1 || pp.prime % 10 == 9) {
            ++pm.k;
        } else {
            throw UnsupportedModulusError("prime factor " + pp.prime.str() +
                                          " of " + m.str() +
                                          " is not congruent to +-1 mod 10");
        }
    }
    pm.expected_count = Int(1) << pm.k;
    return pm;
}

std::vector<Int> find_generators(const PfsModulus& pm) {
    // Root choices per prime power; 5 contributes the single root 3.
    std::vector<Int> moduli;
    std::vector<std::vector<Int>> choices;
    for (const auto& pp : pm.factorization.factors) {
        Int pe = pow(pp.prime, pp.exponent);
        moduli.push_back(pe);
        if (pp.prime == 5) {
            choices.push_back({Int(3)});
            continue;
        }
        Int s = sqrt_mod_prime(5, pp.prime);
        Int inv2 = mod_inv(2, pp.prime);
        Int r1 = (1 + s) * inv2 % pp.prime;
        Int r2 = ((1 - s) % pp.prime + pp.prime) * inv2 % pp.prime;
        choices.push_back({hensel_lift_root(r1, pp.prime, pp.exponent),
                           hensel_lift_root(r2, pp.prime, pp.exponent)});
    }

    std::vector<Int> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<std::pair<Int, Int>> residues;
        residues.reserve(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i)
            residues.emplace_back(choices[i][pick[i]], moduli[i]);
        Int alpha = crt_combine(residues);
        if ((alpha * alpha - alpha - 1) % pm.m != 0)
            throw Error("find_generators: assembled value is not a root (internal)");
        out.push_back(alpha);

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    if (Int(out.size()) != pm.expected_count)
        throw Error("find_generators: generator count mismatch (internal)");
    return out;
}

PfsGroup make_group(const Int& m, const Int& alpha) {
    if (m < 2) throw Error("make_group: modulus must be >= 2");
    Int a = alpha % m;
    if (a < 0) a += m;
    if ((a * a - a - 1) % m != 0)
        throw NotAPfsGeneratorError(a.str() + " does not satisfy x^2 = x + 1 mod " + m.str());
    // a*(a-1) == 1 mod m, so a is a unit and the order is well defined.
    return {m, a, multiplicative_order(a, m)};
}

std::vector<Int> sequence_terms(const PfsGroup& g, std::uint64_t count) {
    if (count < 1) throw Error("sequence_terms: count must be >= 1");
    std::vector<Int> terms;
    terms.reserve(count);
    terms.push_back(1);
    if (count == 1) return terms;
    terms.push_back(g.alpha % g.m);
    for (std::uint64_t i = 2; i < count; ++i)
        terms.push_back((terms[i - 1] + terms[i - 2]) % g.m);
    return terms;
}

std::optional<std::set<Int>> subgroup_elements(const PfsGroup& g, std::uint64_t cap) {
    if (g.order > cap) return std::nullopt;
    std::set<Int> elems;
    Int acc = 1;
    for (Int i = 0; i < g.order; ++i) {
        elems.insert(acc);
        acc = acc * g.alpha % g.m;
    }
    return elems;
}

}  // namespace pfselg
