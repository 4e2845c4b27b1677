// Command-line front end: computes Mumford-Tate equation lattices, Tate
// class bases, Galois action matrices, Sato-Tate group descriptions,
// generalized Gross-Koblitz checks, and finite-field cross-validation for
// the Jacobians of y^2 = x^m + 1 (m odd).  All output is JSON.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fermatst/cache.hpp"
#include "fermatst/json_io.hpp"
#include "fermatst/modarith.hpp"

using namespace fermatst;

namespace {

struct CommonOpts {
    long m = 0;
    long k = 20;
    long prec = 512;
    std::string out;
    std::string cache_dir;
    bool no_cache = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_m = true) {
    auto* mopt = cmd->add_option("--m", o.m, "modulus m (odd, >= 3)");
    if (needs_m) mopt->required();
    cmd->add_option("--k", o.k, "p-adic precision digits")->default_val(20);
    cmd->add_option("--prec", o.prec, "complex precision bits")->default_val(512);
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--cache-dir", o.cache_dir, "cache directory (default: FERMATST_CACHE_DIR)");
    cmd->add_flag("--no-cache", o.no_cache, "disable the result cache");
    cmd->add_option("--threads", o.threads, "worker threads for sweeps")->default_val(1);
}

void check_modulus(long m) {
    if (m < 3 || m % 2 == 0) throw CLI::ValidationError("--m", "m must be an odd integer >= 3");
}

void emit(const CommonOpts& o, const json& j) {
    std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        f << text;
    }
}

// Command-level content-addressed caching: key = operation id + parameters.
json cached_run(const CommonOpts& o, const std::string& key, const std::function<json()>& compute) {
    ResultCache cache = ResultCache::from_environment(o.cache_dir, o.no_cache);
    if (auto hit = cache.get(key)) return json::parse(*hit);
    json result = compute();
    cache.put(key, result.dump());
    return result;
}

std::vector<long> parse_alpha(const std::string& s) {
    std::vector<long> idx;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) idx.push_back(std::stol(cur));
            cur.clear();
        } else if (isdigit((unsigned char)c) || c == '-') {
            cur += c;
        } else {
            throw CLI::ValidationError("--alpha", "expected a comma-separated integer list");
        }
    }
    if (idx.empty()) throw CLI::ValidationError("--alpha", "empty character");
    return idx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sato-Tate groups of the Jacobians of y^2 = x^m + 1"};
    app.require_subcommand(1);

    CommonOpts mt_o, tc_o, ga_o, st_o, gk_o, em_o;

    auto* mt_cmd = app.add_subcommand("mt", "Mumford-Tate equation lattice and minimal-degree generators");
    add_common(mt_cmd, mt_o);

    auto* tc_cmd = app.add_subcommand("tate-classes", "Tate classes of bounded degree");
    add_common(tc_cmd, tc_o);
    long tc_n = 2;
    tc_cmd->add_option("--n", tc_n, "degree bound")->default_val(2);

    auto* ga_cmd = app.add_subcommand("galois", "Galois action on the Tate classes");
    add_common(ga_cmd, ga_o);
    long ga_p = 0;
    bool ga_conj = false;
    ga_cmd->add_option("--p", ga_p, "Frobenius prime (odd, not dividing m)");
    ga_cmd->add_flag("--conj", ga_conj, "complex conjugation instead of a Frobenius element");

    auto* st_cmd = app.add_subcommand("sato-tate", "full Sato-Tate group description");
    add_common(st_cmd, st_o);
    long st_budget = 60;
    st_cmd->add_option("--prime-budget", st_budget, "number of Frobenius primes to try")->default_val(60);

    auto* gk_cmd = app.add_subcommand("gk-verify", "generalized Gross-Koblitz verification");
    add_common(gk_cmd, gk_o);
    std::string gk_alpha;
    long gk_p = 0, gk_pmax = 0;
    gk_cmd->add_option("--alpha", gk_alpha, "character as a comma-separated index list");
    gk_cmd->add_option("--p", gk_p, "single prime to verify");
    gk_cmd->add_option("--p-max", gk_pmax, "sweep all odd primes below this bound");

    auto* em_cmd = app.add_subcommand("empirics", "finite-field Frobenius data and twist invariance");
    add_common(em_cmd, em_o);
    std::string em_a = "1";
    long em_pmax = 50;
    em_cmd->add_option("--a", em_a, "curve parameter a (rational)")->default_val("1");
    em_cmd->add_option("--p-max", em_pmax, "prime bound")->default_val(50);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mt_cmd->parsed()) {
            check_modulus(mt_o.m);
            json j = cached_run(mt_o, "mt:" + std::to_string(mt_o.m), [&] {
                EquationLattice L = compute_lattice(mt_o.m);
                GeneratorSet G = minimal_degree_generators(L);
                json out = to_json(L);
                out["q"] = G.q;
                json gens = json::array();
                for (const auto& g : G.generators) gens.push_back(to_json(g));
                out["generators"] = gens;
                return out;
            });
            emit(mt_o, j);
            return 0;
        }

        if (tc_cmd->parsed()) {
            check_modulus(tc_o.m);
            json j = cached_run(tc_o, "tate-classes:" + std::to_string(tc_o.m) + ":" + std::to_string(tc_n), [&] {
                EquationLattice L = compute_lattice(tc_o.m);
                auto basis = tate_class_basis(L, tc_n);
                json out;
                out["m"] = tc_o.m;
                out["n"] = tc_n;
                out["degree_one_count"] = tc_o.m - 1;  // diagonal endomorphism classes
                json cls = json::array();
                for (const auto& e : basis) cls.push_back(to_json(e));
                out["classes"] = cls;
                return out;
            });
            emit(tc_o, j);
            return 0;
        }

        if (ga_cmd->parsed()) {
            check_modulus(ga_o.m);
            if ((ga_p == 0) == !ga_conj) throw CLI::ValidationError("galois", "choose exactly one of --p or --conj");
            std::string key = "galois:" + std::to_string(ga_o.m) + ":" + (ga_conj ? "conj" : std::to_string(ga_p)) +
                              ":" + std::to_string(ga_o.k) + ":" + std::to_string(ga_o.prec);
            json j = cached_run(ga_o, key, [&] {
                STContext ctx = make_st_context(ga_o.m);
                RhoMatrix rho = ga_conj ? rho_conjugation(ga_o.m, ctx.orbits, ga_o.prec)
                                        : rho_frobenius(ga_o.m, ga_p, ctx.orbits, ga_o.k);
                return to_json(rho);
            });
            emit(ga_o, j);
            return 0;
        }

        if (st_cmd->parsed()) {
            check_modulus(st_o.m);
            std::string key = "sato-tate:" + std::to_string(st_o.m) + ":" + std::to_string(st_budget) + ":" +
                              std::to_string(st_o.k) + ":" + std::to_string(st_o.prec);
            json j = cached_run(st_o, key, [&] {
                STDescription st = saturate(st_o.m, st_budget, st_o.k, st_o.prec, st_o.threads);
                return to_json(st);
            });
            emit(st_o, j);
            return 0;
        }

        if (gk_cmd->parsed()) {
            check_modulus(gk_o.m);
            if (gk_pmax > 0) {
                std::string key = "gk-sweep:" + std::to_string(gk_o.m) + ":" + std::to_string(gk_pmax) + ":" +
                                  std::to_string(gk_o.k) + ":" + std::to_string(gk_o.prec);
                json j = cached_run(gk_o, key, [&] {
                    auto reports = gk_sweep(gk_o.m, gk_pmax, gk_o.k, gk_o.prec, gk_o.threads);
                    json out = json::array();
                    for (const auto& r : reports) out.push_back(to_json(r));
                    return out;
                });
                emit(gk_o, j);
                for (const auto& r : j)
                    if (r.at("verdict") == "failed") return 2;
                return 0;
            }
            if (gk_alpha.empty() || gk_p == 0)
                throw CLI::ValidationError("gk-verify", "need --alpha and --p, or --p-max for a sweep");
            GammaWord alpha(gk_o.m, parse_alpha(gk_alpha));
            std::string key = "gk-verify:" + std::to_string(gk_o.m) + ":" + alpha.str() + ":" +
                              std::to_string(gk_p) + ":" + std::to_string(gk_o.k) + ":" + std::to_string(gk_o.prec);
            json j = cached_run(gk_o, key, [&] { return to_json(gk_verify(alpha, gk_p, gk_o.k, gk_o.prec)); });
            emit(gk_o, j);
            return j.at("verdict") == "failed" ? 2 : 0;
        }

        if (em_cmd->parsed()) {
            check_modulus(em_o.m);
            mpq_class a(em_a);
            a.canonicalize();
            std::string key = "empirics:" + std::to_string(em_o.m) + ":" + a.get_str() + ":" +
                              std::to_string(em_pmax) + ":" + std::to_string(em_o.k);
            json j = cached_run(em_o, key, [&] {
                TwistReport rep = twist_invariance(em_o.m, a, em_pmax, em_o.k);
                return to_json(rep);
            });
            emit(em_o, j);
            return j.at("all_agree").get<bool>() ? 0 : 2;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
