// symfun: exact symmetric function calculator built on the symfun core
// library. See README.md for the expression grammar and examples.

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symfun/bench.hpp"
#include "symfun/cache_io.hpp"
#include "symfun/character.hpp"
#include "symfun/expr.hpp"
#include "symfun/freealg.hpp"
#include "symfun/plethysm.hpp"
#include "symfun/series.hpp"
#include "symfun/vertex.hpp"

namespace {

using namespace symfun;

struct GlobalOpts {
    bool json = false;
    int cap = 6;
    std::string cache_path;
    std::uint64_t seed = 0;
};

void emit(const Value& v, bool json) {
    std::cout << (json ? print_value_json(v) : print_value(v)) << "\n";
}

std::vector<long long> parse_multipliers(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoll(item));
    if (out.empty())
        throw DomainError("empty multiplier list");
    return out;
}

int run_selftest(bool appendix_b_only, int degree, std::uint64_t seed) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
        if (!ok)
            ++failures;
    };

    report("appendix-b adjoint identity, D <= " + std::to_string(degree), [&] {
        for (int d = 1; d <= degree; ++d)
            if (!adjoint_identity_check(d))
                return false;
        return true;
    }());
    report("nested commutator routes, n <= " + std::to_string(degree), [&] {
        for (int n = 0; n <= degree; ++n)
            if (!(nested_commutator_recursive(n, degree + 1) ==
                  nested_commutator_binomial(n, degree + 1)))
                return false;
        return true;
    }());
    if (appendix_b_only)
        return failures == 0 ? 0 : 1;

    report("character orthogonality, n <= 6", [&] {
        for (int n = 0; n <= 6; ++n)
            if (!check_orthogonality(n))
                return false;
        return true;
    }());

    std::mt19937_64 rng(seed ? seed : 0x5eed);
    report("replicated orthogonality at random alpha", [&] {
        for (int n = 2; n <= 4; ++n) {
            std::uniform_int_distribution<int> num(1, 7), den(1, 4);
            Rational alpha(num(rng), den(rng));
            if (!orthogonality_check(n, alpha))
                return false;
        }
        return true;
    }());

    report("fast plethysm vs iterated oracle", [&] {
        std::uniform_int_distribution<int> tpick(1, 4);
        for (int rep = 0; rep < 6; ++rep) {
            auto lams = partitions_of(1 + static_cast<int>(rng() % 3));
            auto nus = partitions_of(1 + static_cast<int>(rng() % 2));
            const auto& lam = lams[rng() % lams.size()];
            const auto& nu = nus[rng() % nus.size()];
            int t = tpick(rng);
            if (!(iterated_pleth_oracle(lam, t, nu) == alpha_pleth(lam, Rational(t), nu)))
                return false;
        }
        return true;
    }());

    report("series inverses M_pi L_pi = 1, |pi| <= 3", [&] {
        for (const auto& pi : partitions_up_to(3)) {
            if (pi.weight() == 0)
                continue;
            int cap = 2 * pi.weight() + 2;
            if (!series_pi(SeriesKind::M, pi, cap)
                     .mul(series_pi(SeriesKind::L, pi, cap))
                     .is_one())
                return false;
        }
        return true;
    }());

    report("vertex vs series characters, |lambda| <= 4", [&] {
        std::vector<Partition> pis = {{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
        for (const auto& pi : pis)
            for (const auto& lam : partitions_up_to(4))
                if (lam.length() <= 2 && !(vertex_char(lam, pi) == h_char(lam, pi)))
                    return false;
        return true;
    }());

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symfun: exact symmetric function kernel (Schur bases, plethysm,\n"
                 "character series, vertex operators)"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of canonical text");
    app.add_option("--cap", g.cap, "truncation weight for series output")->capture_default_str();
    app.add_option("--cache", g.cache_path, "coefficient cache file, loaded before and "
                                            "saved after the command");
    app.add_option("--seed", g.seed, "seed for randomized self tests");

    std::string expr_text, expr_g;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
    cmd_eval->add_option("expr", expr_text, "expression, e.g. 's[2] @ (2*s[2])'")->required();

    auto* cmd_pleth = app.add_subcommand("pleth", "plethysm f[g] of two expressions");
    cmd_pleth->add_option("f", expr_text, "outer function")->required();
    cmd_pleth->add_option("g", expr_g, "inner function")->required();

    std::string lambda_s, nu_s = "[1]", pi_s = "[1]", alpha_s = "1", kind_s = "M";
    auto* cmd_alpha = app.add_subcommand("alpha-pleth", "alpha-plethysm s_lambda[alpha s_nu]");
    cmd_alpha->add_option("--lambda", lambda_s, "outer partition, e.g. [1,1]")->required();
    cmd_alpha->add_option("--alpha", alpha_s, "replication parameter (rational)")
        ->capture_default_str();
    cmd_alpha->add_option("--nu", nu_s, "inner partition")->capture_default_str();

    auto* cmd_char = app.add_subcommand("char", "formal character s_lambda^(pi)");
    cmd_char->add_option("--pi", pi_s, "symmetry type partition")->required();
    cmd_char->add_option("--lambda", lambda_s, "character label")->required();

    auto* cmd_series = app.add_subcommand("series", "truncated M_pi or L_pi series");
    cmd_series->add_option("--kind", kind_s, "M or L")->capture_default_str();
    cmd_series->add_option("--pi", pi_s, "plethysm partition; [1] gives plain M/L")
        ->capture_default_str();

    bool vx_no_prefactor = false;
    auto* cmd_vertex = app.add_subcommand(
        "vertex", "vertex-operator character, checked against the series route");
    cmd_vertex->add_option("--pi", pi_s, "symmetry type partition")->required();
    cmd_vertex->add_option("--lambda", lambda_s, "character label")->required();
    cmd_vertex->add_option("--alpha", alpha_s,
                           "also print the replicated operator V_alpha^pi(z) . 1");
    cmd_vertex->add_flag("--no-prefactor", vx_no_prefactor,
                         "drop the (1 - z^p) factors (classical Bernstein product)");

    std::string mult_s = "1,10,100,1000";
    int reps = 3;
    bool parallel = false;
    auto* cmd_bench = app.add_subcommand(
        "bench", "time iterated vs direct evaluation of s_lambda[n s_nu], cold caches");
    cmd_bench->add_option("--lambda", lambda_s, "outer partition")->required();
    cmd_bench->add_option("--nu", nu_s, "inner partition")->capture_default_str();
    cmd_bench->add_option("--multipliers", mult_s, "comma separated n values")
        ->capture_default_str();
    cmd_bench->add_option("--reps", reps, "runs per point (median reported)")
        ->capture_default_str();
    cmd_bench->add_flag("--parallel", parallel, "run the two methods in separate threads");

    bool st_appendix_b = false;
    int st_degree = 6;
    auto* cmd_selftest = app.add_subcommand("selftest", "run built-in consistency checks");
    cmd_selftest->add_flag("--appendix-b", st_appendix_b, "only the free-algebra checks");
    cmd_selftest->add_option("--degree", st_degree, "truncation degree for the free algebra")
        ->capture_default_str();

    std::string cache_file;
    auto* cmd_cache = app.add_subcommand("cache", "inspect or prepare coefficient caches");
    cmd_cache->require_subcommand(1);
    auto* cmd_cache_info = cmd_cache->add_subcommand("info", "print sizes of a cache file");
    cmd_cache_info->add_option("path", cache_file, "cache file")->required();
    int warm_weight = 5;
    auto* cmd_cache_warm =
        cmd_cache->add_subcommand("warm", "precompute coefficients and write a cache");
    cmd_cache_warm->add_option("path", cache_file, "cache file")->required();
    cmd_cache_warm->add_option("--weight", warm_weight, "fill tables up to this weight")
        ->capture_default_str();

    // global flags (--json, --cap, --cache, --seed) may follow the subcommand
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!g.cache_path.empty())
            cache_load(memo(), g.cache_path);

        if (*cmd_eval) {
            emit(eval(expr_text), g.json);
        } else if (*cmd_pleth) {
            Value f = eval(expr_text), h = eval(expr_g);
            SymFn lhs = std::holds_alternative<SymFn>(f)
                            ? std::get<SymFn>(f)
                            : SymFn::monomial(Basis::s, {}, std::get<Rational>(f));
            SymFn rhs = std::holds_alternative<SymFn>(h)
                            ? std::get<SymFn>(h)
                            : SymFn::monomial(Basis::s, {}, std::get<Rational>(h));
            emit(Value{pleth(lhs, rhs)}, g.json);
        } else if (*cmd_alpha) {
            Partition lam = Partition::parse(lambda_s);
            Partition nu = Partition::parse(nu_s);
            Rational alpha = Rational::parse(alpha_s);
            emit(Value{alpha_pleth(lam, alpha, nu)}, g.json);
        } else if (*cmd_char) {
            emit(Value{h_char(Partition::parse(lambda_s), Partition::parse(pi_s))}, g.json);
        } else if (*cmd_series) {
            SeriesKind kind;
            if (kind_s == "M")
                kind = SeriesKind::M;
            else if (kind_s == "L")
                kind = SeriesKind::L;
            else
                throw DomainError("series kind must be M or L");
            Partition pi = Partition::parse(pi_s);
            TruncSeries s = (pi == Partition{1})
                                ? (kind == SeriesKind::M ? series_M(g.cap) : series_L(g.cap))
                                : series_pi(kind, pi, g.cap);
            std::cout << s.to_string() << "\n";
        } else if (*cmd_vertex) {
            Partition lam = Partition::parse(lambda_s);
            Partition pi = Partition::parse(pi_s);
            SymFn via_vertex = vertex_char(lam, pi, 0, !vx_no_prefactor);
            SymFn via_series = h_char(lam, pi);
            std::cout << "vertex path: " << via_vertex.to_string() << "\n";
            std::cout << "series path: " << via_series.to_string() << "\n";
            bool agree = (via_vertex == via_series);
            std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
            if (cmd_vertex->count("--alpha")) {
                Rational alpha = Rational::parse(alpha_s);
                LaurentState st = replicated_vertex(pi, alpha, g.cap, g.cap);
                std::cout << "V_alpha^pi(z) . 1 with alpha = " << alpha << ":\n";
                for (const auto& [e, f] : st.terms())
                    std::cout << "  [z^" << e[0] << "] " << f.to_string() << "\n";
            }
            if (!agree && !vx_no_prefactor)
                return 1;
        } else if (*cmd_bench) {
            BenchReport r = run_bench(Partition::parse(lambda_s), Partition::parse(nu_s),
                                      parse_multipliers(mult_s), reps, parallel);
            std::cout << r.csv();
            std::cout << "outputs_equal," << (r.outputs_equal ? "true" : "false") << "\n";
            if (!r.outputs_equal)
                return 1;
        } else if (*cmd_selftest) {
            int rc = run_selftest(st_appendix_b, st_degree, g.seed);
            if (rc != 0)
                return rc;
        } else if (*cmd_cache) {
            if (*cmd_cache_info) {
                CacheInfo info = cache_inspect(cache_file);
                std::cout << "version " << info.version << "\n"
                          << "characters " << info.characters << "\n"
                          << "lr " << info.lr_products << "\n"
                          << "kronecker " << info.kron_products << "\n"
                          << "plethysm " << info.pleth_basis << "\n";
            } else {
                for (int n = 1; n <= warm_weight; ++n)
                    for (const auto& lam : partitions_of(n))
                        for (const auto& mu : partitions_of(n)) {
                            chi(lam, mu);
                            kron_product_expand(lam, mu);
                        }
                for (int a = 1; a + 1 <= warm_weight; ++a)
                    for (int b = 1; a + b <= warm_weight; ++b)
                        for (const auto& lam : partitions_of(a))
                            for (const auto& mu : partitions_of(b))
                                lr_product_expand(lam, mu);
                cache_save(memo(), cache_file);
                std::cout << "wrote " << cache_file << "\n";
            }
        }

        if (!g.cache_path.empty())
            cache_save(memo(), g.cache_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
