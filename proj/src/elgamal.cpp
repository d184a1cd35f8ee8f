#include "pfselg/elgamal.hpp"

#include <sstream>
#include <vector>

namespace pfselg {
namespace {

using boost::multiprecision::gcd;

KeyPair keygen_common(Mode mode, const Int& m, const Int& alpha, const Int& n,
                      const Int& lambda) {
    if (lambda < 1)
        throw InvalidPrivateKeyError("keygen: lambda must be positive");
    Int lam = lambda % n;
    if (lam == 0)
        throw InvalidPrivateKeyError(
            "keygen: lambda = 0 mod " + n.str() + " would publish beta = 1");
    Int beta = mod_pow(alpha, lam, m);
    return {{mode, m, alpha, beta, n}, {mode, m, alpha, n, lam}};
}

Int draw_lambda(SplitMix64& rng, const Int& n) {
    if (n < 2)
        throw InvalidPrivateKeyError("keygen: subgroup of order 1 admits no private key");
    return rng.uniform_in(1, n);
}

// --- key/ciphertext file format ---------------------------------------

constexpr const char* kPublicTag = "PFS-ELGAMAL PUBLIC v1";
constexpr const char* kPrivateTag = "PFS-ELGAMAL PRIVATE v1";
constexpr const char* kCiphertextTag = "PFS-ELGAMAL CIPHERTEXT v1";

// Strict line splitter: LF endings only, no blank interior lines.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::size_t line_no = 1;
    for (char ch : text) {
        if (ch == '\r')
            throw ParseError("line " + std::to_string(line_no) +
                                 ": carriage return; files use LF endings",
                             line_no, "line-ending");
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
            ++line_no;
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);  // final newline optional
    return lines;
}

class FieldReader {
public:
    FieldReader(std::vector<std::string> lines, const char* tag, std::string what)
        : lines_(std::move(lines)), what_(std::move(what)) {
        if (lines_.empty() || lines_[0] != tag)
            throw ParseError(what_ + " line 1: expected format tag \"" + tag + "\"",
                             1, "header");
        next_ = 1;
    }

    std::string take(const std::string& key) {
        std::size_t line_no = next_ + 1;
        if (next_ >= lines_.size())
            throw ParseError(what_ + ": missing field \"" + key + "\"", line_no, key);
        const std::string& line = lines_[next_++];
        std::string prefix = key + "=";
        if (line.compare(0, prefix.size(), prefix) != 0)
            throw ParseError(what_ + " line " + std::to_string(line_no) +
                                 ": expected \"" + key + "=...\", got \"" + line + "\"",
                             line_no, key);
        return line.substr(prefix.size());
    }

    Int take_int(const std::string& key) {
        std::size_t line_no = next_;  // take() advances; capture before
        std::string value = take(key);
        ++line_no;
        if (value.empty())
            throw ParseError(what_ + " line " + std::to_string(line_no) +
                                 ": empty value for \"" + key + "\"",
                             line_no, key);
        for (char ch : value)
            if (ch < '0' || ch > '9')
                throw ParseError(what_ + " line " + std::to_string(line_no) + ": \"" +
                                     key + "\" must be a decimal integer",
                                 line_no, key);
        if (value.size() > 1 && value[0] == '0')
            throw ParseError(what_ + " line " + std::to_string(line_no) + ": \"" +
                                 key + "\" has a leading zero",
                             line_no, key);
        return Int(value);
    }

    void finish() const {
        if (next_ < lines_.size())
            throw ParseError(what_ + " line " + std::to_string(next_ + 1) +
                                 ": unexpected extra line \"" + lines_[next_] + "\"",
                             next_ + 1, "trailing");
    }

    void check(bool ok, const std::string& key, const std::string& message) const {
        if (!ok)
            throw ParseError(what_ + ": field \"" + key + "\" " + message, 0, key);
    }

private:
    std::vector<std::string> lines_;
    std::string what_;
    std::size_t next_ = 0;
};

Mode parse_mode(FieldReader& in) {
    std::string value = in.take("mode");
    if (value == "classic") return Mode::classic;
    if (value == "pfs") return Mode::pfs;
    throw ParseError("field \"mode\" must be \"classic\" or \"pfs\", got \"" + value + "\"",
                     2, "mode");
}

}  // namespace

std::string to_string(Mode mode) {
    return mode == Mode::classic ? "classic" : "pfs";
}

ClassicGroup make_classic_group(const Int& p, const Int& alpha) {
    if (p < 3 || !is_prime(p))
        throw UnsupportedModulusError("classic modulus " + p.str() + " is not an odd prime");
    if (alpha < 2 || alpha >= p)
        throw NotAPrimitiveRootError("classic generator must lie in [2, p)");
    Int n = p - 1;
    for (const auto& pp : factorize(n).factors) {
        if (mod_pow(alpha, n / pp.prime, p) == 1)
            throw NotAPrimitiveRootError(alpha.str() + " is not a primitive root mod " +
                                         p.str() + " (order divides " +
                                         Int(n / pp.prime).str() + ")");
    }
    return {p, alpha, n};
}

Int smallest_primitive_root(const Int& p) {
    if (p < 3 || !is_prime(p))
        throw UnsupportedModulusError("classic modulus " + p.str() + " is not an odd prime");
    Factorization nf = factorize(p - 1);
    for (Int a = 2; a < p; ++a) {
        bool primitive = true;
        for (const auto& pp : nf.factors) {
            if (mod_pow(a, (p - 1) / pp.prime, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return a;
    }
    throw Error("smallest_primitive_root: none found (internal)");
}

KeyPair keygen(const PfsGroup& group, const Int& lambda) {
    return keygen_common(Mode::pfs, group.m, group.alpha, group.order, lambda);
}

KeyPair keygen(const PfsGroup& group, SplitMix64& rng) {
    return keygen_common(Mode::pfs, group.m, group.alpha, group.order,
                         draw_lambda(rng, group.order));
}

KeyPair keygen(const ClassicGroup& group, const Int& lambda) {
    return keygen_common(Mode::classic, group.p, group.alpha, group.order, lambda);
}

KeyPair keygen(const ClassicGroup& group, SplitMix64& rng) {
    return keygen_common(Mode::classic, group.p, group.alpha, group.order,
                         draw_lambda(rng, group.order));
}

Ciphertext encrypt(const PublicKey& pk, const Int& x, const Int& k) {
    if (x < 1 || x > pk.m - 1)
        throw PlaintextOutOfRangeError(
            "encrypt: plaintext must lie in [1, " + Int(pk.m - 1).str() + "]", pk.m - 1);
    if (k < 1 || k >= pk.n)
        throw InvalidNonceError("encrypt: nonce must lie in [1, " + pk.n.str() + ")");
    Int y1 = mod_pow(pk.alpha, k, pk.m);
    Int y2 = x * mod_pow(pk.beta, k, pk.m) % pk.m;
    return {y1, y2};
}

Ciphertext encrypt(const PublicKey& pk, const Int& x, SplitMix64& rng) {
    if (pk.n < 2) throw InvalidNonceError("encrypt: subgroup of order 1 admits no nonce");
    return encrypt(pk, x, rng.uniform_in(1, pk.n));
}

Int decrypt(const PrivateKey& sk, const Ciphertext& c) {
    if (c.y1 < 1 || c.y1 >= sk.m || c.y2 < 1 || c.y2 >= sk.m)
        throw MalformedCiphertextError("decrypt: ciphertext components outside [1, m)");
    Int g = gcd(c.y1, sk.m);
    if (g != 1)
        throw MalformedCiphertextError("decrypt: y1 shares factor " + g.str() +
                                       " with the modulus");
    if (mod_pow(c.y1, sk.n, sk.m) != 1)
        throw CiphertextOutsideSubgroupError(
            "decrypt: y1 is not in the subgroup generated by alpha");
    return c.y2 * mod_inv(mod_pow(c.y1, sk.lambda, sk.m), sk.m) % sk.m;
}

std::string serialize_public(const PublicKey& pk) {
    std::ostringstream os;
    os << kPublicTag << '\n'
       << "mode=" << to_string(pk.mode) << '\n'
       << "m=" << pk.m << '\n'
       << "alpha=" << pk.alpha << '\n'
       << "beta=" << pk.beta << '\n'
       << "n=" << pk.n << '\n';
    return os.str();
}

std::string serialize_private(const PrivateKey& sk) {
    std::ostringstream os;
    os << kPrivateTag << '\n'
       << "mode=" << to_string(sk.mode) << '\n'
       << "m=" << sk.m << '\n'
       << "alpha=" << sk.alpha << '\n'
       << "n=" << sk.n << '\n'
       << "lambda=" << sk.lambda << '\n';
    return os.str();
}

std::string serialize_ciphertext(const Ciphertext& c) {
    std::ostringstream os;
    os << kCiphertextTag << '\n'
       << "y1=" << c.y1 << '\n'
       << "y2=" << c.y2 << '\n';
    return os.str();
}

PublicKey parse_public(const std::string& text) {
    FieldReader in(split_lines(text), kPublicTag, "public key");
    PublicKey pk;
    pk.mode = parse_mode(in);
    pk.m = in.take_int("m");
    pk.alpha = in.take_int("alpha");
    pk.beta = in.take_int("beta");
    pk.n = in.take_int("n");
    in.finish();
    in.check(pk.m >= 2, "m", "must be >= 2");
    in.check(pk.alpha >= 2 && pk.alpha < pk.m, "alpha", "must lie in [2, m)");
    in.check(pk.beta >= 1 && pk.beta < pk.m, "beta", "must lie in [1, m)");
    in.check(pk.n >= 1 && pk.n < pk.m, "n", "must lie in [1, m)");
    return pk;
}

PrivateKey parse_private(const std::string& text) {
    FieldReader in(split_lines(text), kPrivateTag, "private key");
    PrivateKey sk;
    sk.mode = parse_mode(in);
    sk.m = in.take_int("m");
    sk.alpha = in.take_int("alpha");
    sk.n = in.take_int("n");
    sk.lambda = in.take_int("lambda");
    in.finish();
    in.check(sk.m >= 2, "m", "must be >= 2");
    in.check(sk.alpha >= 2 && sk.alpha < sk.m, "alpha", "must lie in [2, m)");
    in.check(sk.n >= 1 && sk.n < sk.m, "n", "must lie in [1, m)");
    in.check(sk.lambda >= 1 && sk.lambda < sk.n, "lambda", "must lie in [1, n)");
    return sk;
}

Ciphertext parse_ciphertext(const std::string& text) {
    FieldReader in(split_lines(text), kCiphertextTag, "ciphertext");
    Ciphertext c;
    c.y1 = in.take_int("y1");
    c.y2 = in.take_int("y2");
    in.finish();
    in.check(c.y1 >= 1, "y1", "must be >= 1");
    in.check(c.y2 >= 1, "y2", "must be >= 1");
    return c;
}

}  // namespace pfselg
