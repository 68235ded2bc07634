// Command-line surface for the constant-dimension-code bound machinery.
//
// Exit codes: 0 success, 1 validation/regression failure, 2 usage error.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cdc/constructions.hpp"
#include "cdc/errors.hpp"
#include "cdc/gf.hpp"
#include "cdc/heuristic.hpp"
#include "cdc/io.hpp"
#include "cdc/search.hpp"

using namespace cdc;

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

std::optional<BlockProfileConstraint> make_filter(const std::string& spec, int n, int m, int d,
                                                  int k) {
    if (!spec.empty()) return BlockProfileConstraint::parse(spec);
    if (m > 0) return BlockProfileConstraint::restricted(n, m, d, k);
    return std::nullopt;
}

void print_verification(const SkeletonCode& s, bool assume_attained) {
    const QPolynomial poly = skeleton_bound_poly(s, assume_attained);
    std::cout << "skeleton: n=" << s.n << " d=" << s.d << " k=" << s.k;
    if (s.m) std::cout << " m=" << *s.m;
    if (!s.label.empty()) std::cout << " label=" << s.label;
    std::cout << "\nvectors:  " << s.size() << " (validated: weight " << s.k
              << ", pairwise distance >= " << s.d;
    if (s.m) std::cout << ", block profile " << s.block_profile()->to_string();
    std::cout << ")\nbound:    " << poly.to_string() << '\n';
    for (long q = 2; q <= 9; ++q)
        std::cout << "  q=" << q << ": " << poly.eval(q) << '\n';
}

int run_verify(const std::string& path, bool assume_attained) {
    print_verification(parse_skeleton_file(path), assume_attained);
    return 0;
}

int run_bound(const std::string& path, long q, bool assume_attained) {
    const SkeletonCode s = parse_skeleton_file(path);
    std::cout << multilevel_bound(s, q, assume_attained) << '\n';
    return 0;
}

int run_search_exact(int n, int d, int k, long q, const std::string& filter_spec, int m, int ub,
                     int threads, const std::string& out_path) {
    const auto filter = make_filter(filter_spec, n, m, d, k);
    const SkeletonGraph g = build_graph(n, d, k, q, filter ? &*filter : nullptr);
    std::cerr << "graph: " << g.vertex_count() << " vertices\n";
    SearchOptions opts;
    opts.ub = ub;
    opts.threads = threads;
    opts.stop = &g_interrupted;
    const Clique best = exact_max_weight_clique(g, opts);
    if (g_interrupted.load()) {
        std::cerr << "interrupted; best clique so far is not certified optimal\n";
        return 1;
    }
    SkeletonCode s = skeleton_from_vertices(g, best.members);
    if (m > 0) s.m = m;
    const QPolynomial poly = skeleton_bound_poly(s);
    std::cerr << "optimal weight at q=" << q << ": " << best.weight << " with " << best.size()
              << " vectors\n";
    if (out_path.empty()) {
        emit_skeleton(std::cout, s);
    } else {
        emit_skeleton_file(out_path, s);
        std::cerr << "skeleton written to " << out_path << '\n';
    }
    std::cout << "bound: " << poly.to_string() << '\n';
    std::cout << "value at q=" << q << ": " << poly.eval(q) << '\n';
    return 0;
}

int run_search_heuristic(int n, int d, int k, long q, const std::string& filter_spec, int m,
                         int d1, int d2, int ub_start, int ub_step, int rounds,
                         std::size_t list_cap, const std::string& resume_path,
                         const std::string& checkpoint_path, const std::string& out_path) {
    const auto filter = make_filter(filter_spec, n, m, d, k);
    const SkeletonGraph g = build_graph(n, d, k, q, filter ? &*filter : nullptr);
    std::cerr << "graph: " << g.vertex_count() << " vertices\n";

    HeuristicParams params;
    params.delta1 = d1;
    params.delta2 = d2;
    params.ub_start = ub_start;
    params.ub_increment = ub_step;
    params.max_rounds = rounds;
    params.list_cap = list_cap;

    std::vector<Clique> seeds;
    int round_offset = 0;
    if (!resume_path.empty()) {
        const Checkpoint ckpt = Checkpoint::load_file(resume_path);
        seeds = ckpt.to_cliques(g);
        params.ub_start = ckpt.ub + ub_step;
        round_offset = ckpt.round;
        std::cerr << "resumed " << seeds.size() << " seeds at ub=" << ckpt.ub << ", round "
                  << ckpt.round << '\n';
    }

    const HeuristicResult result =
        heuristic_search(g, std::move(seeds), params, &std::cerr, &g_interrupted);

    if (!checkpoint_path.empty()) {
        Checkpoint::from_cliques(g, result.next_list, result.final_ub,
                                 round_offset + result.rounds)
            .save_file(checkpoint_path);
        std::cerr << "checkpoint written to " << checkpoint_path << '\n';
    }

    SkeletonCode s = skeleton_from_vertices(g, result.best.members);
    if (m > 0) s.m = m;
    const QPolynomial poly = skeleton_bound_poly(s);
    std::cerr << "best weight at q=" << q << ": " << result.best.weight << " with "
              << result.best.size() << " vectors after " << result.rounds << " round(s)\n";
    if (out_path.empty()) {
        emit_skeleton(std::cout, s);
    } else {
        emit_skeleton_file(out_path, s);
        std::cerr << "skeleton written to " << out_path << '\n';
    }
    std::cout << "bound: " << poly.to_string() << '\n';
    std::cout << "value at q=" << q << ": " << poly.eval(q) << '\n';
    return g_interrupted.load() ? 130 : 0;
}

int run_linkage(int n, int d, int k, int delta, const std::string& restricted_path,
                const std::string& registry_path, long q) {
    SkeletonCode restricted;
    restricted.n = n;
    restricted.d = d;
    restricted.k = k;
    if (!restricted_path.empty()) restricted = parse_skeleton_file(restricted_path);
    const BoundExpression expr = linkage_bound(n, d, k, delta, restricted);
    std::cout << "A_q(" << n << "," << d << ";" << k << ") >= " << expr.to_string() << '\n';
    if (!registry_path.empty()) {
        const BoundsRegistry registry = BoundsRegistry::load_file(registry_path);
        std::cout << "at q=" << q << ": " << expr.eval(q, registry) << '\n';
    }
    return 0;
}

int run_ilp(int n, int m, int d, int k, long a1_value, bool a1_auto) {
    BigInt cap;
    if (a1_auto) {
        cap = a1_bruteforce(n - m, d, k);
        std::cerr << "A_1(" << n - m << "," << d << ";" << k << ") = " << cap << '\n';
    } else if (a1_value >= 0) {
        cap = a1_value;
    } else {
        const IlpInstance probe(n, m, d, k, 0);
        const auto J = probe.variable_set();
        if (std::find(J.begin(), J.end(), 0) != J.end())
            throw CLI::ValidationError("ilp-ub", "c_0 is a variable here: pass --a1 or --a1-auto");
    }
    std::cout << ilp_upper_bound(IlpInstance(n, m, d, k, cap)) << '\n';
    return 0;
}

int run_lift_verify(const std::string& path, int q, int samples, unsigned seed) {
    const SkeletonCode skel = parse_skeleton_file(path);
    const PrimeField field(q);
    std::mt19937_64 rng(seed);
    std::vector<Subspace> code;
    for (const std::uint64_t enc : skel.vectors) {
        const IdentifyingVector v(enc, skel.n);
        const long dots = ferrers_profile(v).total();
        std::vector<Subspace> level;
        for (int attempt = 0; attempt < samples * 25 && static_cast<int>(level.size()) < samples;
             ++attempt) {
            std::vector<int> filling(dots);
            for (int& x : filling) x = static_cast<int>(rng() % q);
            Subspace cand = assemble_echelon(v, filling, field);
            bool far = true;
            for (const Subspace& seen : level)
                if (rank_distance(cand.canonical, seen.canonical, field) < skel.d / 2) {
                    far = false;
                    break;
                }
            if (far) level.push_back(std::move(cand));
        }
        code.insert(code.end(), level.begin(), level.end());
    }
    long checked = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            ++checked;
            const int dist = subspace_distance(code[i], code[j], field);
            if (dist < skel.d) {
                std::cerr << "violation: subspaces " << i << " and " << j << " at distance "
                          << dist << " < " << skel.d << '\n';
                return 1;
            }
        }
    std::cout << "certified: " << code.size() << " lifted subspaces over F_" << q << ", "
              << checked << " pairs at subspace distance >= " << skel.d << '\n';
    return 0;
}

int run_regress(const std::string& data_dir) {
    int bad = 0;
    const auto report = [&](const std::string& what, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "ok   " : "FAIL ") << what;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << '\n';
        if (!ok) ++bad;
    };

    const auto ml = load_multilevel_expectations(data_dir + "/expected/multilevel_bounds.tsv");
    std::map<std::string, QPolynomial> polys;
    for (const auto& e : ml) {
        std::string detail;
        bool ok = true;
        try {
            auto it = polys.find(e.skeleton);
            if (it == polys.end())
                it = polys
                         .emplace(e.skeleton,
                                  skeleton_bound_poly(parse_skeleton_file(
                                      data_dir + "/skeletons/" + e.skeleton + ".sk")))
                         .first;
            const BigInt got = it->second.eval(e.q);
            ok = got == e.expected;
            if (!ok) detail = "got " + got.str() + ", expected " + e.expected.str();
        } catch (const std::exception& ex) {
            ok = false;
            detail = ex.what();
        }
        std::ostringstream name;
        name << "multilevel A_" << e.q << "(" << e.n << ",4;" << e.k << ") via " << e.skeleton;
        report(name.str(), ok, detail);
    }

    const auto lk = load_linkage_expectations(data_dir + "/expected/linkage_bounds.tsv");
    BoundsRegistry registry = BoundsRegistry::load_file(data_dir + "/registry/base_bounds.reg");
    std::map<std::string, SkeletonCode> cache;
    for (const auto& e : lk) {
        std::string detail;
        bool ok = true;
        const std::string stem = "S_" + std::to_string(e.n) + "_" + std::to_string(e.m) + "_4_" +
                                 std::to_string(e.k);
        try {
            auto it = cache.find(stem);
            if (it == cache.end())
                it = cache
                         .emplace(stem,
                                  parse_skeleton_file(data_dir + "/skeletons/" + stem + ".sk"))
                         .first;
            const BoundExpression expr = linkage_bound(e.n, 4, e.k, e.n - e.m, it->second);
            const BigInt got = expr.eval(e.q, registry);
            ok = got == e.expected;
            if (!ok) detail = "got " + got.str() + ", expected " + e.expected.str();
        } catch (const std::exception& ex) {
            ok = false;
            detail = ex.what();
        }
        std::ostringstream name;
        name << "linkage A_" << e.q << "(" << e.n << ",4;" << e.k << ") via " << stem;
        report(name.str(), ok, detail);
    }

    std::cout << (bad ? "regression FAILED: " : "regression passed: ")
              << (ml.size() + lk.size() - bad) << "/" << ml.size() + lk.size() << " fixtures\n";
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_sigint);

    CLI::App app{"constant dimension code bounds: skeleton search, composition, verification"};
    app.require_subcommand(1);

    // verify
    std::string verify_path;
    bool verify_assume = false;
    auto* verify = app.add_subcommand("verify", "validate a skeleton file and print its bound");
    verify->add_option("file", verify_path, "skeleton file")->required();
    verify->add_flag("--assume-attained", verify_assume,
                     "accept d >= 6 skeletons (bound sizes unproven)");

    // bound
    std::string bound_path;
    long bound_q = 2;
    bool bound_assume = false;
    auto* bound = app.add_subcommand("bound", "print the exact bound value at q");
    bound->add_option("file", bound_path, "skeleton file")->required();
    bound->add_option("--q", bound_q, "field size")->required()->check(CLI::Range(2l, 1000000l));
    bound->add_flag("--assume-attained", bound_assume, "accept d >= 6 skeletons");

    // search-exact
    int se_n = 0, se_d = 4, se_k = 0, se_m = 0, se_ub = 0, se_threads = 1;
    long se_q = 2;
    std::string se_filter, se_out;
    auto* se = app.add_subcommand("search-exact", "exact maximum weight skeleton search");
    se->add_option("--n", se_n)->required();
    se->add_option("--d", se_d)->required();
    se->add_option("--k", se_k)->required();
    se->add_option("--q", se_q)->required();
    se->add_option("--filter", se_filter, "block profile, e.g. 7:<=1,3:>=2");
    se->add_option("--m", se_m, "restricted profile shorthand (first m: <=k-d/2, rest: >=d/2)");
    se->add_option("--ub", se_ub, "clique-size cap override (default: Johnson bound)");
    se->add_option("--threads", se_threads, "first-level parallel subtrees");
    se->add_option("--out", se_out, "write the found skeleton here");

    // search-heuristic
    int sh_n = 0, sh_d = 4, sh_k = 0, sh_m = 0, sh_d1 = 0, sh_d2 = 0;
    int sh_ub_start = 10, sh_ub_step = 10, sh_rounds = 0;
    std::size_t sh_list_cap = 2000;
    long sh_q = 2;
    std::string sh_filter, sh_resume, sh_checkpoint, sh_out;
    auto* sh = app.add_subcommand("search-heuristic", "iterated diving heuristic");
    sh->add_option("--n", sh_n)->required();
    sh->add_option("--d", sh_d)->required();
    sh->add_option("--k", sh_k)->required();
    sh->add_option("--q", sh_q)->required();
    sh->add_option("--d1", sh_d1, "prefix trim")->required();
    sh->add_option("--d2", sh_d2, "dive-depth slack")->required();
    sh->add_option("--ub-start", sh_ub_start, "initial size cap");
    sh->add_option("--ub-step", sh_ub_step, "cap increment per round");
    sh->add_option("--rounds", sh_rounds, "maximum rounds (0: until no improvement)");
    sh->add_option("--list-cap", sh_list_cap, "seed list capacity");
    sh->add_option("--filter", sh_filter, "block profile, e.g. 7:<=1,3:>=2");
    sh->add_option("--m", sh_m, "restricted profile shorthand");
    sh->add_option("--resume", sh_resume, "checkpoint to resume from");
    sh->add_option("--checkpoint", sh_checkpoint, "write the final seed list here");
    sh->add_option("--out", sh_out, "write the best skeleton here");

    // linkage
    int lk_n = 0, lk_d = 4, lk_k = 0, lk_delta = 0;
    long lk_q = 2;
    std::string lk_restricted, lk_registry;
    auto* lk = app.add_subcommand("linkage", "compose a lifted-prefix bound with a restricted code");
    lk->add_option("--n", lk_n)->required();
    lk->add_option("--d", lk_d)->required();
    lk->add_option("--k", lk_k)->required();
    lk->add_option("--delta", lk_delta, "suffix length")->required();
    lk->add_option("--restricted", lk_restricted, "restricted skeleton file");
    lk->add_option("--registry", lk_registry, "bounds registry file");
    lk->add_option("--q", lk_q, "field size for numeric evaluation");

    // ilp-ub
    int ilp_n = 0, ilp_m = 0, ilp_d = 4, ilp_k = 0;
    long ilp_a1 = -1;
    bool ilp_a1_auto = false;
    auto* ilp = app.add_subcommand("ilp-ub", "counting upper bound for restricted skeleton codes");
    ilp->add_option("--n", ilp_n)->required();
    ilp->add_option("--m", ilp_m)->required();
    ilp->add_option("--d", ilp_d)->required();
    ilp->add_option("--k", ilp_k)->required();
    ilp->add_option("--a1", ilp_a1, "cap for c_0 = A_1(n-m,d;k)");
    ilp->add_flag("--a1-auto", ilp_a1_auto, "compute the c_0 cap by exact search");

    // lift-verify
    std::string lv_path;
    int lv_q = 2, lv_samples = 8;
    unsigned lv_seed = 12345;
    auto* lv = app.add_subcommand("lift-verify",
                                  "lift a skeleton over F_q and certify the distance");
    lv->add_option("file", lv_path, "skeleton file")->required();
    lv->add_option("--q", lv_q, "prime field size")->required();
    lv->add_option("--samples", lv_samples, "lifted codewords per identifying vector");
    lv->add_option("--seed", lv_seed, "RNG seed");

    // regress
    std::string rg_data = "data";
    auto* rg = app.add_subcommand("regress", "re-derive every bundled bound fixture");
    rg->add_option("--data", rg_data, "data directory (default: ./data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(verify_path, verify_assume);
        if (*bound) return run_bound(bound_path, bound_q, bound_assume);
        if (*se)
            return run_search_exact(se_n, se_d, se_k, se_q, se_filter, se_m, se_ub, se_threads,
                                    se_out);
        if (*sh)
            return run_search_heuristic(sh_n, sh_d, sh_k, sh_q, sh_filter, sh_m, sh_d1, sh_d2,
                                        sh_ub_start, sh_ub_step, sh_rounds, sh_list_cap,
                                        sh_resume, sh_checkpoint, sh_out);
        if (*lk) return run_linkage(lk_n, lk_d, lk_k, lk_delta, lk_restricted, lk_registry, lk_q);
        if (*ilp) return run_ilp(ilp_n, ilp_m, ilp_d, ilp_k, ilp_a1, ilp_a1_auto);
        if (*lv) return run_lift_verify(lv_path, lv_q, lv_samples, lv_seed);
        if (*rg) return run_regress(rg_data);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UnresolvedReference& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
