// Command-line frontend: modulus inspection, sequence listing, key
// generation, encryption, decryption, and dlog attacks on public keys.
//
// Exit codes: 0 success, 2 unsupported modulus, 3 plaintext out of range,
// 4 malformed file, 5 attack guard exceeded, 1 anything else.

#include "pfselg/dlog.hpp"
#include "pfselg/elgamal.hpp"
#include "pfselg/pfs.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace pfselg;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int_arg(const std::string& s, const char* name) {
    if (s.empty()) throw Error(std::string(name) + ": empty value");
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw Error(std::string(name) + ": \"" + s + "\" is not a nonnegative decimal integer");
    return Int(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + path);
}

SplitMix64 make_rng(const std::optional<std::uint64_t>& seed) {
    return SplitMix64(seed ? *seed : entropy_seed());
}

int cmd_info(const std::string& m_arg) {
    Int m = parse_int_arg(m_arg, "m");
    std::cout << "m=" << m << '\n';
    PfsModulus pm;
    try {
        pm = classify_modulus(m);
    } catch (const UnsupportedModulusError& e) {
        std::cout << "valid=0\n"
                  << "reason=" << e.what() << '\n';
        std::cerr << "no power Fibonacci sequences modulo " << m << ": " << e.what() << '\n';
        return 2;
    }
    std::cout << "valid=1\n"
              << "factorization=" << to_string(pm.factorization) << '\n'
              << "k=" << pm.k << '\n'
              << "expected_count=" << pm.expected_count << '\n';
    std::string gens, orders;
    for (const Int& alpha : find_generators(pm)) {
        PfsGroup g = make_group(m, alpha);
        if (!gens.empty()) {
            gens += ',';
            orders += ',';
        }
        gens += alpha.str();
        orders += g.order.str();
    }
    std::cout << "generators=" << gens << '\n'
              << "generator_orders=" << orders << '\n';
    std::cerr << "modulus " << m << " admits " << pm.expected_count
              << " power Fibonacci sequence(s)\n";
    return 0;
}

int cmd_sequences(const std::string& m_arg, std::uint64_t limit) {
    Int m = parse_int_arg(m_arg, "m");
    PfsModulus pm = classify_modulus(m);
    for (const Int& alpha : find_generators(pm)) {
        PfsGroup g = make_group(m, alpha);
        std::string line;
        for (const Int& term : sequence_terms(g, limit)) {
            if (!line.empty()) line += ' ';
            line += term.str();
        }
        std::cout << line << '\n';
    }
    return 0;
}

int cmd_keygen(const std::string& m_arg, const std::string& mode_arg,
               const std::optional<std::string>& alpha_arg,
               const std::optional<std::string>& lambda_arg,
               const std::optional<std::uint64_t>& seed,
               const std::string& pub_path, const std::string& priv_path) {
    Int m = parse_int_arg(m_arg, "--modulus");
    KeyPair kp;
    if (mode_arg == "classic") {
        Int alpha = alpha_arg ? parse_int_arg(*alpha_arg, "--alpha")
                              : smallest_primitive_root(m);
        ClassicGroup group = make_classic_group(m, alpha);
        if (lambda_arg) {
            kp = keygen(group, parse_int_arg(*lambda_arg, "--lambda"));
        } else {
            SplitMix64 rng = make_rng(seed);
            kp = keygen(group, rng);
        }
    } else {
        PfsModulus pm = classify_modulus(m);
        Int alpha = alpha_arg ? parse_int_arg(*alpha_arg, "--alpha")
                              : find_generators(pm).front();
        PfsGroup group = make_group(m, alpha);
        if (lambda_arg) {
            kp = keygen(group, parse_int_arg(*lambda_arg, "--lambda"));
        } else {
            SplitMix64 rng = make_rng(seed);
            kp = keygen(group, rng);
        }
    }
    write_file(pub_path, serialize_public(kp.pub));
    write_file(priv_path, serialize_private(kp.priv));
    std::cout << "alpha=" << kp.pub.alpha << '\n'
              << "n=" << kp.pub.n << '\n'
              << "beta=" << kp.pub.beta << '\n';
    std::cerr << "wrote public key to " << pub_path << " and private key to "
              << priv_path << '\n';
    return 0;
}

int cmd_encrypt(const std::string& pub_path, const std::string& x_arg,
                const std::optional<std::string>& k_arg,
                const std::optional<std::uint64_t>& seed,
                const std::string& out_path) {
    PublicKey pk = parse_public(read_file(pub_path));
    Int x = parse_int_arg(x_arg, "--plaintext");
    Ciphertext ct;
    if (k_arg) {
        ct = encrypt(pk, x, parse_int_arg(*k_arg, "--k"));
    } else {
        SplitMix64 rng = make_rng(seed);
        ct = encrypt(pk, x, rng);
    }
    write_file(out_path, serialize_ciphertext(ct));
    std::cout << "y1=" << ct.y1 << '\n' << "y2=" << ct.y2 << '\n';
    std::cerr << "wrote ciphertext to " << out_path << '\n';
    return 0;
}

int cmd_decrypt(const std::string& priv_path, const std::string& ct_path) {
    PrivateKey sk = parse_private(read_file(priv_path));
    Ciphertext ct = parse_ciphertext(read_file(ct_path));
    std::cout << "plaintext=" << decrypt(sk, ct) << '\n';
    return 0;
}

int cmd_attack(const std::string& pub_path, const std::string& method) {
    PublicKey pk = parse_public(read_file(pub_path));

    const Int brute_guard = Int(1) << 24;
    const Int bsgs_guard = Int(1) << 48;
    if (method == "brute" && pk.n > brute_guard) {
        std::cerr << "refusing brute-force attack: subgroup order " << pk.n
                  << " exceeds the 2^24 guard; try --method bsgs or ph\n";
        return 5;
    }
    if (method != "brute" && pk.n > bsgs_guard) {
        std::cerr << "refusing " << method << " attack: subgroup order " << pk.n
                  << " exceeds the 2^48 guard\n";
        return 5;
    }

    DlogInstance inst = instance_from_public(pk);
    Int lambda;
    if (method == "brute")
        lambda = dlog_brute(inst);
    else if (method == "bsgs")
        lambda = dlog_bsgs(inst);
    else
        lambda = dlog_pohlig_hellman(inst, factorize(pk.n));

    bool verified = mod_pow(pk.alpha, lambda, pk.m) == pk.beta;
    AttackReport rep = attack_report(pk);
    std::cout << "method=" << method << '\n'
              << "lambda=" << lambda << '\n'
              << "verified=" << (verified ? 1 : 0) << '\n'
              << "plaintext_space=" << rep.plaintext_space << '\n'
              << "subgroup_order=" << rep.subgroup_order << '\n'
              << "brute_cost=" << rep.brute_cost << '\n'
              << "bsgs_cost=" << rep.bsgs_cost << '\n'
              << "largest_prime_factor=" << rep.largest_prime_factor << '\n'
              << "order_factorization=" << to_string(rep.order_factorization) << '\n'
              << "modulus_bits=" << rep.modulus_bits << '\n'
              << "classic_prime=" << rep.classic_prime << '\n'
              << "classic_plaintext_space=" << rep.classic_plaintext_space << '\n'
              << "classic_order=" << rep.classic_order << '\n'
              << "classic_bsgs_cost=" << rep.classic_bsgs_cost << '\n';
    if (!verified) {
        std::cerr << "recovered exponent failed verification against beta\n";
        return 1;
    }
    std::cerr << "recovered private exponent " << lambda << " from the public key alone\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ElGamal over power Fibonacci subgroups of Z_m^*"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "classify a modulus and list its generators");
    std::string info_m;
    info->add_option("m", info_m, "modulus to classify")->required();

    auto* sequences = app.add_subcommand("sequences", "print the power Fibonacci sequences mod m");
    std::string seq_m;
    std::uint64_t seq_limit = 0;
    sequences->add_option("m", seq_m, "modulus")->required();
    sequences->add_option("--limit", seq_limit, "number of terms per sequence")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    std::string kg_m, kg_mode = "pfs", kg_pub, kg_priv;
    std::string kg_alpha_s, kg_lambda_s;
    std::uint64_t kg_seed = 0;
    keygen_cmd->add_option("--modulus", kg_m, "modulus m")->required();
    keygen_cmd->add_option("--mode", kg_mode, "pfs (default) or classic")
        ->check(CLI::IsMember({"pfs", "classic"}));
    auto* kg_alpha_opt = keygen_cmd->add_option("--alpha", kg_alpha_s,
                                                "generator (default: smallest)");
    auto* kg_lambda_opt = keygen_cmd->add_option("--lambda", kg_lambda_s,
                                                 "private exponent (default: random)");
    auto* kg_seed_opt = keygen_cmd->add_option("--seed", kg_seed, "seed for random draws");
    keygen_cmd->add_option("--out-pub", kg_pub, "public key output path")->required();
    keygen_cmd->add_option("--out-priv", kg_priv, "private key output path")->required();

    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt an integer plaintext");
    std::string enc_pub, enc_x, enc_k_s, enc_out;
    std::uint64_t enc_seed = 0;
    encrypt_cmd->add_option("--pub", enc_pub, "public key file")->required();
    encrypt_cmd->add_option("--plaintext", enc_x, "plaintext in [1, m-1]")->required();
    auto* enc_k_opt = encrypt_cmd->add_option("--k", enc_k_s, "nonce in [1, n) (default: random)");
    auto* enc_seed_opt = encrypt_cmd->add_option("--seed", enc_seed, "seed for random draws");
    encrypt_cmd->add_option("--out", enc_out, "ciphertext output path")->required();

    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    std::string dec_priv, dec_ct;
    decrypt_cmd->add_option("--priv", dec_priv, "private key file")->required();
    decrypt_cmd->add_option("--ciphertext", dec_ct, "ciphertext file")->required();

    auto* attack_cmd = app.add_subcommand("attack", "recover the private exponent of a public key");
    std::string atk_pub, atk_method = "bsgs";
    attack_cmd->add_option("--pub", atk_pub, "public key file")->required();
    attack_cmd->add_option("--method", atk_method, "brute, bsgs (default), or ph")
        ->check(CLI::IsMember({"brute", "bsgs", "ph"}));

    CLI11_PARSE(app, argc, argv);

    auto opt_str = [](const CLI::Option* opt, const std::string& v) {
        return opt->count() ? std::optional<std::string>(v) : std::nullopt;
    };
    auto opt_seed = [](const CLI::Option* opt, std::uint64_t v) {
        return opt->count() ? std::optional<std::uint64_t>(v) : std::nullopt;
    };

    try {
        if (info->parsed()) return cmd_info(info_m);
        if (sequences->parsed()) return cmd_sequences(seq_m, seq_limit);
        if (keygen_cmd->parsed())
            return cmd_keygen(kg_m, kg_mode, opt_str(kg_alpha_opt, kg_alpha_s),
                              opt_str(kg_lambda_opt, kg_lambda_s),
                              opt_seed(kg_seed_opt, kg_seed), kg_pub, kg_priv);
        if (encrypt_cmd->parsed())
            return cmd_encrypt(enc_pub, enc_x, opt_str(enc_k_opt, enc_k_s),
                               opt_seed(enc_seed_opt, enc_seed), enc_out);
        if (decrypt_cmd->parsed()) return cmd_decrypt(dec_priv, dec_ct);
        if (attack_cmd->parsed()) return cmd_attack(atk_pub, atk_method);
    } catch (const UnsupportedModulusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PlaintextOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const MalformedCiphertextError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const CiphertextOutsideSubgroupError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
