// Batch front end: parse basis-tagged elements, compute products, coproducts,
// antipodes, basis changes and truncated expansions, and run the Rota-Baxter
// and isomorphism checks. Exit codes: 0 success / check passed, 1 check
// failed, 2 usage or parse error.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mqsym/bases.hpp"
#include "mqsym/element_io.hpp"
#include "mqsym/hopf.hpp"
#include "mqsym/realization.hpp"
#include "mqsym/rota_baxter.hpp"

namespace {

using namespace mqsym;

struct Options {
    int m = 2;
    std::string monoid = "nat";
    int trunc = 7;
    std::string format = "text";
    std::uint64_t seed = 0;

    Monoid tag() const { return monoid == "weak" ? Monoid::Weak : Monoid::Nat; }
};

LinComb<CompositionPair> pairs_to_compositions(const TensorPair& pairs) {
    return map_keys(
        [](const WordPair& p) {
            return CompositionPair{MultiComposition::from_word(p.first),
                                   MultiComposition::from_word(p.second)};
        },
        pairs);
}

int run_product(const Options& opt, const std::string& lhs,
                const std::string& rhs, const std::string& out_basis) {
    const MElement a = to_m(parse_element(lhs, opt.m, opt.tag()));
    const MElement b = to_m(parse_element(rhs, opt.m, opt.tag()));
    const MElement prod = m_product(a, b);
    if (out_basis == "F") {
        const FElement f = m_to_f(prod);
        std::cout << (opt.format == "json"
                          ? element_json_text(Basis::F, f.terms)
                          : element_text(Basis::F, f.terms))
                  << "\n";
    } else {
        std::cout << (opt.format == "json"
                          ? element_json_text(Basis::M, prod.terms)
                          : element_text(Basis::M, prod.terms))
                  << "\n";
    }
    return 0;
}

int run_coproduct(const Options& opt, const std::string& arg) {
    const MElement a = to_m(parse_element(arg, opt.m, opt.tag()));
    LinComb<CompositionPair> out;
    for (const auto& [key, c] : a.terms.terms())
        out += c * pairs_to_compositions(coproduct(key.to_word()));
    std::cout << (opt.format == "json" ? pair_json_text(Basis::M, out)
                                       : pair_text(Basis::M, out))
              << "\n";
    return 0;
}

int run_antipode(const Options& opt, const std::string& arg) {
    const MElement a = to_m(parse_element(arg, opt.m, opt.tag()));
    LinComb<MultiComposition> out;
    for (const auto& [key, c] : a.terms.terms())
        out += c * map_keys(
                       [](const TensorWord& w) {
                           return MultiComposition::from_word(w);
                       },
                       antipode(key.to_word()));
    std::cout << (opt.format == "json" ? element_json_text(Basis::M, out)
                                       : element_text(Basis::M, out))
              << "\n";
    return 0;
}

int run_f2m(const Options& opt, const std::string& arg) {
    const MElement a = to_m(parse_element(arg, opt.m, opt.tag()));
    std::cout << (opt.format == "json" ? element_json_text(Basis::M, a.terms)
                                       : element_text(Basis::M, a.terms))
              << "\n";
    return 0;
}

int run_m2f(const Options& opt, const std::string& arg) {
    const FElement f = m_to_f(to_m(parse_element(arg, opt.m, opt.tag())));
    std::cout << (opt.format == "json" ? element_json_text(Basis::F, f.terms)
                                       : element_text(Basis::F, f.terms))
              << "\n";
    return 0;
}

int run_expand(const Options& opt, const std::string& arg) {
    const MElement a = to_m(parse_element(arg, opt.m, opt.tag()));
    TruncatedSeries out{opt.trunc, opt.m, opt.tag(), {}};
    for (const auto& [key, c] : a.terms.terms())
        out.terms += c * expand_m(key, opt.trunc).terms;
    std::cout << (opt.format == "json" ? series_json_text(out) : out.text())
              << "\n";
    return 0;
}

ExponentVector random_nat_vector(std::mt19937_64& rng, int m, int max_exp) {
    std::uniform_int_distribution<int> dist(0, max_exp);
    std::vector<ExtNat> slots;
    slots.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) slots.push_back(ExtNat::nat(dist(rng)));
    return ExponentVector(Monoid::Nat, std::move(slots));
}

ExponentVector random_weak_vector(std::mt19937_64& rng, int m, int max_exp) {
    // slots drawn from {ε, 1, ..., max_exp}
    std::uniform_int_distribution<int> dist(0, max_exp);
    std::vector<ExtNat> slots;
    slots.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int v = dist(rng);
        slots.push_back(v == 0 ? ExtNat::eps() : ExtNat::nat(v));
    }
    return ExponentVector(Monoid::Weak, std::move(slots));
}

RBWord random_rb_word(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> len(0, 2);
    const int n = len(rng);
    std::vector<ExponentVector> tail;
    for (int i = 0; i < n; ++i) tail.push_back(random_nat_vector(rng, m, 2));
    return RBWord(random_nat_vector(rng, m, 2),
                  TensorWord(Monoid::Nat, m, std::move(tail)));
}

SQSymWord random_sqsym_word(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> len(0, 2);
    const int n = len(rng);
    std::vector<ExponentVector> tail;
    for (int i = 0; i < n; ++i) tail.push_back(random_weak_vector(rng, m, 2));
    return SQSymWord(random_weak_vector(rng, m, 2),
                     TensorWord(Monoid::Weak, m, std::move(tail)));
}

int run_rb_check(const Options& opt, int random_count) {
    // The hand-checked case first: P(y1) ⋄ P(y1) = 2·(1;(y1,y1)) + (1;(y1^2)).
    std::vector<ExtNat> y1(static_cast<std::size_t>(opt.m));
    y1[0] = ExtNat::nat(1);
    const RBWord gen(ExponentVector(Monoid::Nat, y1),
                     TensorWord(Monoid::Nat, opt.m));
    const auto x = LinComb<RBWord>::single(gen);
    if (!check_rb_identity(x, x)) {
        std::cout << "rb-check: FAILED on the generator pair\n";
        return 1;
    }

    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < random_count; ++i) {
        const auto a = LinComb<RBWord>::single(random_rb_word(rng, opt.m));
        const auto b = LinComb<RBWord>::single(random_rb_word(rng, opt.m));
        if (!check_rb_identity(a, b)) {
            std::cout << "rb-check: FAILED on\n  "
                      << a.terms().begin()->first.text() << "\n  "
                      << b.terms().begin()->first.text() << "\n";
            return 1;
        }
    }
    std::cout << "rb-check: " << (1 + random_count) << " checks passed\n";
    return 0;
}

int run_iso_check(const Options& opt, int random_count) {
    std::mt19937_64 rng(opt.seed);
    if (!check_iso(SQSymWord::unit(opt.m), SQSymWord::unit(opt.m))) {
        std::cout << "iso-check: FAILED on the unit pair\n";
        return 1;
    }
    for (int i = 0; i < random_count; ++i) {
        const SQSymWord a = random_sqsym_word(rng, opt.m);
        const SQSymWord b = random_sqsym_word(rng, opt.m);
        if (!check_iso(a, b)) {
            std::cout << "iso-check: FAILED on\n  " << a.text() << "\n  "
                      << b.text() << "\n";
            return 1;
        }
    }
    std::cout << "iso-check: " << (1 + random_count) << " checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in multi-quasisymmetric function bases"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--m", opt.m, "alphabet size (matrix rows)")
        ->check(CLI::PositiveNumber);
    app.add_option("--monoid", opt.monoid, "exponent monoid")
        ->check(CLI::IsMember({"nat", "weak"}));
    app.add_option("--trunc", opt.trunc, "truncation level N")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* seed_opt = app.add_option("--seed", opt.seed, "seed for random modes");

    std::string lhs, rhs, out_basis = "M";
    auto* product = app.add_subcommand("product", "quasi-shuffle product");
    product->fallthrough();
    product->add_option("lhs", lhs)->required();
    product->add_option("rhs", rhs)->required();
    product->add_option("--basis", out_basis, "output basis")
        ->check(CLI::IsMember({"M", "F"}));

    std::string arg;
    auto* coproduct_cmd =
        app.add_subcommand("coproduct", "deconcatenation coproduct");
    coproduct_cmd->fallthrough();
    coproduct_cmd->add_option("element", arg)->required();
    auto* antipode_cmd = app.add_subcommand("antipode", "Hopf antipode");
    antipode_cmd->fallthrough();
    antipode_cmd->add_option("element", arg)->required();
    auto* f2m = app.add_subcommand("f2m", "fundamental to monomial basis");
    f2m->fallthrough();
    f2m->add_option("element", arg)->required();
    auto* m2f = app.add_subcommand("m2f", "monomial to fundamental basis");
    m2f->fallthrough();
    m2f->add_option("element", arg)->required();
    auto* expand =
        app.add_subcommand("expand", "truncated power-series expansion");
    expand->fallthrough();
    expand->add_option("element", arg)->required();

    int random_count = 0;
    auto* rb_check =
        app.add_subcommand("rb-check", "Rota-Baxter identity of weight 1");
    rb_check->fallthrough();
    auto* rb_random = rb_check->add_option("--random", random_count,
                                           "number of random pairs");
    rb_random->needs(seed_opt);
    auto* iso_check = app.add_subcommand(
        "iso-check", "isomorphism with the free Rota-Baxter algebra");
    iso_check->fallthrough();
    auto* iso_random = iso_check->add_option("--random", random_count,
                                             "number of random pairs");
    iso_random->needs(seed_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (product->parsed()) return run_product(opt, lhs, rhs, out_basis);
        if (coproduct_cmd->parsed()) return run_coproduct(opt, arg);
        if (antipode_cmd->parsed()) return run_antipode(opt, arg);
        if (f2m->parsed()) return run_f2m(opt, arg);
        if (m2f->parsed()) return run_m2f(opt, arg);
        if (expand->parsed()) return run_expand(opt, arg);
        if (rb_check->parsed()) return run_rb_check(opt, random_count);
        if (iso_check->parsed()) return run_iso_check(opt, random_count);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
