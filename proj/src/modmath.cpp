#include "pfselg/modmath.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace pfselg {
namespace {

using boost::multiprecision::gcd;

// Primes below 2^20, sieved once on first use.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1u << 20;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

// One strong-pseudoprime round; true means "a proves n composite".
bool mr_witness(const Int& a, const Int& n, const Int& d, unsigned s) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Floyd cycle rho with polynomial x^2 + c. Returns a factor of n, possibly
// n itself on a failed round.
Int rho_round(const Int& n, const Int& c) {
    auto step = [&](const Int& v) { return (v * v + c) % n; };
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
        x = step(x);
        y = step(step(y));
        d = gcd(abs(x - y), n);
    }
    return d;
}

// n odd, composite, no prime factor below 2^20.
Int pollard_rho(const Int& n) {
    for (Int c = 1;; ++c) {
        Int d = rho_round(n, c);
        if (d > 1 && d < n) return d;
    }
}

void factor_tail(const Int& n, std::map<Int, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_tail(d, acc);
    factor_tail(n / d, acc);
}

Int tonelli_shanks(const Int& a, const Int& p) {
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);

    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;

    unsigned m = s;
    Int c = mod_pow(z, q, p);
    Int t = mod_pow(a, q, p);
    Int r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        unsigned i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = mod_pow(c, Int(1) << (m - i - 1), p);
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

}  // namespace

Int Factorization::value() const {
    Int v = 1;
    for (const auto& pp : factors) v *= pow(pp.prime, pp.exponent);
    return v;
}

std::string to_string(const Factorization& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& pp : f.factors) {
        if (!first) os << '*';
        os << pp.prime << '^' << pp.exponent;
        first = false;
    }
    return os.str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    Int d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic for n < 2^64 with this witness set.
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (mr_witness(a, n, d, s)) return false;
    }
    if (n >> 64 == 0) return true;

    // Above 2^64: 28 extra rounds with bases from a fixed-seed stream.
    std::uint64_t state = 0xD0FF5EED0BADF00Dull;
    unsigned bits = msb(n - 4) + 1;
    unsigned words = (bits + 63) / 64;
    for (unsigned round = 0; round < 28; ++round) {
        Int a;
        do {
            a = 0;
            for (unsigned w = 0; w < words; ++w) a = (a << 64) | splitmix_next(state);
            a &= (Int(1) << bits) - 1;
        } while (a >= n - 4);
        if (mr_witness(a + 2, n, d, s)) return false;
    }
    return true;
}

Int next_prime(const Int& n) {
    if (n <= 2) return 2;
    Int c = n % 2 == 0 ? n + 1 : n;
    while (!is_prime(c)) c += 2;
    return c;
}

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m < 2) throw InvalidModulusError("mod_pow: modulus must be >= 2");
    if (base < 0 || exp < 0) throw Error("mod_pow: base and exponent must be nonnegative");
    Int result = 1;
    Int b = base % m;
    Int e = exp;
    while (e > 0) {
        if (bit_test(e, 0)) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return result;
}

EgcdResult egcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw UndefinedGcdError("egcd: gcd(0, 0) is undefined");
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int mod_inv(const Int& a, const Int& m) {
    if (m < 2) throw InvalidModulusError("mod_inv: modulus must be >= 2");
    Int u = a % m;
    if (u < 0) u += m;
    if (u == 0) throw NotInvertibleError("mod_inv: argument shares factor " + m.str() + " with modulus", m);
    auto [g, s, t] = egcd(u, m);
    if (g != 1)
        throw NotInvertibleError("mod_inv: argument shares factor " + g.str() + " with modulus", g);
    Int inv = s % m;
    if (inv < 0) inv += m;
    return inv;
}

Factorization factorize(const Int& n) {
    if (n < 2) throw Error("factorize: argument must be >= 2");
    std::map<Int, unsigned> acc;
    Int rest = n;
    bool rest_is_prime = false;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > rest) {
            rest_is_prime = rest > 1;
            break;
        }
        while (rest % p == 0) {
            ++acc[p];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (rest_is_prime)
            ++acc[rest];
        else
            factor_tail(rest, acc);
    }
    Factorization f;
    f.factors.reserve(acc.size());
    for (const auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& pp : f.factors)
        phi *= pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    return phi;
}

Int multiplicative_order(const Int& a, const Int& m, const Factorization& phi_factored) {
    if (m < 2) throw InvalidModulusError("multiplicative_order: modulus must be >= 2");
    Int u = a % m;
    if (u < 0) u += m;
    Int g = gcd(u, m);
    if (g != 1)
        throw NotAUnitError("multiplicative_order: gcd(a, m) = " + g.str() + ", not a unit");
    Int order = 1;
    for (const auto& pp : phi_factored.factors) order *= pow(pp.prime, pp.exponent);
    for (const auto& pp : phi_factored.factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            Int candidate = order / pp.prime;
            if (mod_pow(u, candidate, m) == 1)
                order = candidate;
            else
                break;
        }
    }
    return order;
}

Int multiplicative_order(const Int& a, const Int& m) {
    if (m < 2) throw InvalidModulusError("multiplicative_order: modulus must be >= 2");
    return multiplicative_order(a, m, factorize(euler_phi(factorize(m))));
}

Int sqrt_mod_prime(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error("sqrt_mod_prime: p must be an odd prime");
    Int u = a % p;
    if (u < 0) u += p;
    if (u == 0) return 0;
    if (mod_pow(u, (p - 1) / 2, p) != 1)
        throw NoSquareRootError("sqrt_mod_prime: " + u.str() + " is not a quadratic residue mod " + p.str());
    Int r = tonelli_shanks(u, p);
    Int other = p - r;
    return r < other ? r : other;
}

Int hensel_lift_root(const Int& r, const Int& p, unsigned e) {
    if (e < 1) throw Error("hensel_lift_root: exponent must be >= 1");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error("hensel_lift_root: p must be an odd prime");
    Int root = r % p;
    if (root < 0) root += p;
    if ((root * root - root - 1) % p != 0)
        throw Error("hensel_lift_root: r is not a root of x^2 - x - 1 mod p");
    if ((2 * root - 1) % p == 0)
        throw NonSimpleRootError("hensel_lift_root: root is not simple mod " + p.str());

    unsigned k = 1;
    while (k < e) {
        unsigned k2 = std::min(2 * k, e);
        Int modulus = pow(p, k2);
        Int fr = ((root * root - root - 1) % modulus + modulus) % modulus;
        Int deriv = ((2 * root - 1) % modulus + modulus) % modulus;
        root = ((root - fr * mod_inv(deriv, modulus)) % modulus + modulus) % modulus;
        k = k2;
    }
    return root;
}

Int crt_combine(const std::vector<std::pair<Int, Int>>& residues) {
    if (residues.empty()) throw Error("crt_combine: empty residue list");
    Int x = 0;
    Int modulus = 1;
    for (const auto& [r, m] : residues) {
        if (m < 1) throw Error("crt_combine: modulus must be >= 1");
        if (r < 0 || r >= m) throw Error("crt_combine: residue out of [0, m)");
        if (m == 1) continue;
        Int g = gcd(modulus, m);
        if (g != 1)
            throw CrtConflictError("crt_combine: moduli share factor " + g.str());
        Int diff = ((r - x) % m + m) % m;
        x += modulus * (diff * mod_inv(modulus % m, m) % m);
        modulus *= m;
    }
    return x;
}

Int ceil_sqrt(const Int& n) {
    if (n < 0) throw Error("ceil_sqrt: negative argument");
    Int s = sqrt(n);
    return s * s == n ? s : s + 1;
}

}  // namespace pfselg
