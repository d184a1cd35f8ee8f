#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfselg/elgamal.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

using namespace pfselg;

namespace {

// Valid moduli used for randomized coverage (primes == +-1 mod 10, their
// products and prime powers, with and without the factor 5).
const std::vector<std::uint64_t> kValidModuli = {
    5, 11, 19, 29, 31, 41, 55, 95, 121, 145, 209, 341, 605, 979, 1045, 3751,
};

KeyPair golden_209() { return keygen(make_group(209, 15), 78); }
KeyPair golden_1045() { return keygen(make_group(1045, 338), 547); }
KeyPair golden_classic() { return keygen(make_classic_group(2579, 2), 765); }

}  // namespace

TEST_CASE("classic golden example") {
    KeyPair kp = golden_classic();
    CHECK(kp.pub.mode == Mode::classic);
    CHECK(kp.pub.n == 2578);
    CHECK(kp.pub.beta == 949);
    Ciphertext ct = encrypt(kp.pub, 1299, 853);
    CHECK(ct == Ciphertext{435, 2396});
    CHECK(decrypt(kp.priv, ct) == 1299);
}

TEST_CASE("pfs golden example m=209") {
    KeyPair kp = golden_209();
    CHECK(kp.pub.beta == 163);
    CHECK(kp.pub.n == 90);
    CHECK(kp.priv.lambda == 78);
    Ciphertext ct = encrypt(kp.pub, 201, 67);
    CHECK(ct == Ciphertext{181, 45});
    CHECK(decrypt(kp.priv, ct) == 201);
}

TEST_CASE("pfs golden example m=1045 canonicalizes lambda") {
    KeyPair kp = golden_1045();
    CHECK(kp.pub.beta == 222);
    CHECK(kp.pub.n == 180);
    CHECK(kp.priv.lambda == 7);  // 547 mod 180
    Ciphertext ct = encrypt(kp.pub, 1001, 162);
    CHECK(ct == Ciphertext{229, 374});
    CHECK(decrypt(kp.priv, ct) == 1001);

    // Same beta and plaintexts as the uncanonicalized exponent.
    KeyPair direct = keygen(make_group(1045, 338), 7);
    CHECK(direct.pub == kp.pub);
}

TEST_CASE("classic setup validates the generator") {
    CHECK(make_classic_group(2579, 2).order == 2578);
    CHECK_THROWS_AS(make_classic_group(2580, 2), UnsupportedModulusError);
    CHECK_THROWS_AS(make_classic_group(2579, 1), NotAPrimitiveRootError);
    // 4 = 2^2 has order 1289 < 2578.
    CHECK_THROWS_AS(make_classic_group(2579, 4), NotAPrimitiveRootError);
    CHECK(smallest_primitive_root(2579) == 2);
    CHECK(smallest_primitive_root(19) == 2);
}

TEST_CASE("keygen rejects exponents congruent to zero") {
    PfsGroup g = make_group(209, 15);
    CHECK_THROWS_AS(keygen(g, 0), InvalidPrivateKeyError);
    CHECK_THROWS_AS(keygen(g, -3), InvalidPrivateKeyError);
    CHECK_THROWS_AS(keygen(g, 90), InvalidPrivateKeyError);
    CHECK_THROWS_AS(keygen(g, 180), InvalidPrivateKeyError);
    CHECK(keygen(g, 91).priv.lambda == 1);
}

TEST_CASE("encrypt enforces the plaintext bound m-1") {
    PublicKey pk = golden_209().pub;
    try {
        encrypt(pk, 209, 67);
        FAIL("expected PlaintextOutOfRangeError");
    } catch (const PlaintextOutOfRangeError& e) {
        CHECK(e.bound == 208);
        CHECK(std::string(e.what()).find("208") != std::string::npos);
    }
    CHECK_THROWS_AS(encrypt(pk, 0, 67), PlaintextOutOfRangeError);
    CHECK_THROWS_AS(encrypt(pk, -4, 67), PlaintextOutOfRangeError);
    CHECK_NOTHROW(encrypt(pk, 208, 67));
}

TEST_CASE("encrypt enforces the nonce range [1, n)") {
    PublicKey pk = golden_209().pub;
    CHECK_THROWS_AS(encrypt(pk, 201, 0), InvalidNonceError);
    CHECK_THROWS_AS(encrypt(pk, 201, 90), InvalidNonceError);
    CHECK_NOTHROW(encrypt(pk, 201, 89));
}

TEST_CASE("decrypt rejects malformed ciphertexts") {
    PrivateKey sk = golden_209().priv;
    CHECK_THROWS_AS(decrypt(sk, {11, 45}), MalformedCiphertextError);  // gcd 11
    CHECK_THROWS_AS(decrypt(sk, {0, 45}), MalformedCiphertextError);
    CHECK_THROWS_AS(decrypt(sk, {181, 0}), MalformedCiphertextError);
    CHECK_THROWS_AS(decrypt(sk, {209, 45}), MalformedCiphertextError);
}

TEST_CASE("decrypt rejects y1 outside the subgroup") {
    // ord(15) = 90 does not divide 45, so 15 is outside the order-45 group.
    PrivateKey sk = keygen(make_group(209, 81), 7).priv;
    CHECK_THROWS_AS(decrypt(sk, {15, 45}), CiphertextOutsideSubgroupError);
    // 2 is a unit mod 19 with 2^9 = 18 != 1.
    PrivateKey sk19 = keygen(make_group(19, 5), 4).priv;
    CHECK_THROWS_AS(decrypt(sk19, {2, 7}), CiphertextOutsideSubgroupError);
}

TEST_CASE("componentwise ciphertext products decrypt to plaintext products") {
    KeyPair kp = golden_1045();
    SplitMix64 rng(711);
    int done = 0;
    while (done < 50) {
        Int x1 = rng.uniform_in(1, 1045);
        Int x2 = rng.uniform_in(1, 1045);
        if (x1 * x2 % 1045 == 0) continue;
        Int k1 = rng.uniform_in(1, 180);
        Int k2 = rng.uniform_in(1, 180);
        Ciphertext c1 = encrypt(kp.pub, x1, k1);
        Ciphertext c2 = encrypt(kp.pub, x2, k2);
        Ciphertext prod{c1.y1 * c2.y1 % 1045, c1.y2 * c2.y2 % 1045};
        CHECK(decrypt(kp.priv, prod) == x1 * x2 % 1045);
        ++done;
    }
}

TEST_CASE("decryption is lambda-periodic mod n") {
    KeyPair kp = golden_209();
    Ciphertext ct = encrypt(kp.pub, 157, 33);
    PrivateKey shifted = kp.priv;
    shifted.lambda += kp.priv.n;
    CHECK(decrypt(kp.priv, ct) == decrypt(shifted, ct));
}

TEST_CASE("round trip over randomized tuples including non-coprime plaintexts") {
    SplitMix64 rng(812);
    for (int round = 0; round < 600; ++round) {
        std::uint64_t m = kValidModuli[rng.next() % kValidModuli.size()];
        std::vector<Int> gens = find_generators(classify_modulus(m));
        Int alpha = gens[static_cast<std::size_t>(rng.next() % gens.size())];
        PfsGroup g = make_group(m, alpha);
        KeyPair kp = keygen(g, rng);
        CHECK(mod_pow(kp.pub.alpha, kp.priv.lambda, kp.pub.m) == kp.pub.beta);

        Int x;
        if (round % 3 == 0 && !is_prime(Int(m))) {
            // Force gcd(x, m) > 1.
            Int p = factorize(m).factors[0].prime;
            x = p * rng.uniform_in(1, Int(m) / p);
        } else {
            x = rng.uniform_in(1, m);
        }
        Ciphertext ct = encrypt(kp.pub, x, rng);
        CHECK(ct.y2 >= 1);  // y2 = 0 is unreachable for x != 0
        CHECK(decrypt(kp.priv, ct) == x);
    }

    // The documented non-coprime witness: gcd(1001, 1045) = 11.
    KeyPair kp = golden_1045();
    CHECK(gcd(Int(1001), Int(1045)) == 11);
    CHECK(decrypt(kp.priv, encrypt(kp.pub, 1001, 162)) == 1001);
}

TEST_CASE("distinct nonces give distinct y1") {
    PublicKey pk = keygen(make_group(19, 5), 4).pub;
    std::set<Int> seen;
    for (Int k = 1; k < pk.n; ++k) seen.insert(encrypt(pk, 7, k).y1);
    CHECK(Int(seen.size()) == pk.n - 1);
}

TEST_CASE("seeded keygen is reproducible and in range") {
    PfsGroup g = make_group(209, 15);
    SplitMix64 a(42), b(42), c(43);
    KeyPair ka = keygen(g, a);
    KeyPair kb = keygen(g, b);
    KeyPair kc = keygen(g, c);
    CHECK(ka.priv.lambda == kb.priv.lambda);
    CHECK(ka.pub == kb.pub);
    CHECK(ka.priv.lambda != kc.priv.lambda);
    CHECK(ka.priv.lambda >= 1);
    CHECK(ka.priv.lambda < g.order);
    // Pinned draw: the documented splitmix64 protocol for seed 42 over [1, 90).
    CHECK(ka.priv.lambda == 22);
}

TEST_CASE("serialization round trips") {
    for (const KeyPair& kp : {golden_209(), golden_1045(), golden_classic()}) {
        CHECK(parse_public(serialize_public(kp.pub)) == kp.pub);
        CHECK(parse_private(serialize_private(kp.priv)) == kp.priv);
    }
    Ciphertext ct{181, 45};
    CHECK(parse_ciphertext(serialize_ciphertext(ct)) == ct);
}

TEST_CASE("serialized public key has the documented shape") {
    std::string text = serialize_public(golden_1045().pub);
    CHECK(text ==
          "PFS-ELGAMAL PUBLIC v1\n"
          "mode=pfs\n"
          "m=1045\n"
          "alpha=338\n"
          "beta=222\n"
          "n=180\n");
    CHECK(text.find("m=1045\n") != std::string::npos);

    CHECK(serialize_private(golden_209().priv) ==
          "PFS-ELGAMAL PRIVATE v1\n"
          "mode=pfs\n"
          "m=209\n"
          "alpha=15\n"
          "n=90\n"
          "lambda=78\n");
}

TEST_CASE("parse errors name the offending line and field") {
    // Missing beta line entirely.
    try {
        parse_public(
            "PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "beta");
        CHECK(e.line == 5);
    }

    // beta replaced by an unknown key.
    try {
        parse_public(
            "PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\ngamma=163\nn=90\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.field == "beta");
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
}

TEST_CASE("parser rejects malformed files") {
    const std::string good =
        "PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta=163\nn=90\n";
    CHECK_NOTHROW(parse_public(good));

    // Wrong tag.
    CHECK_THROWS_AS(parse_public("PFS-ELGAMAL PRIVATE v1\nmode=pfs\n"), ParseError);
    // CRLF endings.
    CHECK_THROWS_AS(parse_public("PFS-ELGAMAL PUBLIC v1\r\nmode=pfs\r\n"), ParseError);
    // Whitespace around '='.
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta =163\nn=90\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta= 163\nn=90\n"),
        ParseError);
    // Reordered fields.
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nbeta=163\nalpha=15\nn=90\n"),
        ParseError);
    // Trailing extra line.
    CHECK_THROWS_AS(parse_public(good + "extra=1\n"), ParseError);
    // Leading zero and non-decimal values.
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta=0163\nn=90\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta=16x\nn=90\n"),
        ParseError);
    // Out-of-range semantic values.
    CHECK_THROWS_AS(
        parse_public("PFS-ELGAMAL PUBLIC v1\nmode=pfs\nm=209\nalpha=15\nbeta=209\nn=90\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_private("PFS-ELGAMAL PRIVATE v1\nmode=pfs\nm=209\nalpha=15\nn=90\nlambda=90\n"),
        ParseError);
    // Bad mode word.
    CHECK_THROWS_AS(parse_public("PFS-ELGAMAL PUBLIC v1\nmode=hybrid\nm=209\nalpha=15\nbeta=163\nn=90\n"),
                    ParseError);
    // Ciphertext with a missing field.
    CHECK_THROWS_AS(parse_ciphertext("PFS-ELGAMAL CIPHERTEXT v1\ny1=181\n"), ParseError);
}
