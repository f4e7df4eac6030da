// picod: build, check, and benchmark pliable index codes derived from
// conflict-free colorings of the request hypergraph.
//
// Exit codes: 0 success, 1 validation failure, 2 input error,
// 3 search budget or resampling cap exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "picod/collection.hpp"
#include "picod/coloring.hpp"
#include "picod/encoder.hpp"
#include "picod/instance.hpp"
#include "picod/io.hpp"
#include "picod/localcf.hpp"
#include "picod/oracle.hpp"
#include "picod/rng.hpp"

namespace {

using nlohmann::json;
using namespace picod;

constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> given) {
    if (given) return *given;
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << seed << "\n";
    return seed;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        io::write_file(out_path, text + "\n");
}

PicodInstance load_input(const std::string& path) { return io::load_instance(path); }

// ---- gen ----------------------------------------------------------------

int run_gen(int m, int n, int min_size, int max_size, std::optional<std::uint64_t> seed_opt,
            int complete2, const std::string& example, const std::string& out) {
    if (!example.empty()) {
        emit(io::to_json(named_instance(example)), out);
        return 0;
    }
    if (complete2 > 0) {
        emit(io::to_json(complete_two_uniform(complete2)), out);
        return 0;
    }
    const auto seed = resolve_seed(seed_opt);
    emit(io::to_json(random_instance(m, n, min_size, max_size, seed)), out);
    return 0;
}

// ---- stats ---------------------------------------------------------------

int run_stats(const std::string& in, const std::string& out) {
    const auto inst = load_input(in);
    const auto profile = intersection_profile(inst);
    json j;
    j["m"] = inst.message_count();
    j["n"] = inst.receiver_count();
    j["gamma"] = profile.gamma;
    j["min_edge_size"] = profile.min_edge_size;
    j["max_edge_size"] = profile.max_edge_size;
    std::map<std::string, int> histogram;
    for (const auto& e : inst.request_sets()) ++histogram[std::to_string(e.size())];
    j["size_histogram"] = histogram;
    if (profile.kappa) {
        j["kappa"] = *profile.kappa;
        const auto d = bucket_decomposition(inst);
        j["large_edges"] = d.large_edges.size();
        json buckets = json::array();
        for (const auto& b : d.buckets)
            buckets.push_back({{"threshold", b.threshold}, {"edges", b.edge_indices.size()}});
        j["buckets"] = std::move(buckets);
    } else {
        j["kappa"] = nullptr;
    }
    emit(j.dump(), out);
    return 0;
}

// ---- build-code ----------------------------------------------------------

KFoldColoring pick_coloring(const PicodInstance& inst, int k, std::uint64_t seed, int exact_limit) {
    if (inst.message_count() * k <= exact_limit) {
        auto chi = exact_chi_cf(inst, k, std::max(inst.message_count() * k, k));
        if (chi) return std::move(chi->witness);
    }
    const auto base = greedy_cf_coloring(inst, seed);
    return k == 1 ? base : expand_to_kfold(base, k);
}

int run_build(const std::string& in, const std::string& strategy, int k, int q,
              std::optional<std::uint64_t> seed_opt, const std::string& out,
              const std::string& collection_out, int exact_limit, double c0, long cap) {
    const auto inst = load_input(in);
    const auto seed = resolve_seed(seed_opt);

    std::optional<FieldMatrix> matrix;
    json report;
    report["strategy"] = strategy;
    report["seed"] = seed;
    report["k"] = k;

    if (strategy == "indicator") {
        const auto c = pick_coloring(inst, k, seed, exact_limit);
        matrix = indicator_matrix(c, q == 0 ? 2 : q);
        report["colors"] = c.palette_size();
    } else if (strategy == "mds") {
        const auto c = pick_coloring(inst, k, seed, exact_limit);
        const auto best = min_delta_for_coloring(c, inst);
        const int field = q == 0 ? gf::next_prime_at_least(static_cast<int>(best.colors.size()))
                                 : q;
        matrix = mds_matrix(c, best.colors, field, inst);
        report["colors"] = c.palette_size();
        report["essential_colors"] = best.colors.size();
        report["width"] = best.delta;
        report["exact_essential_search"] = best.exact;
    } else if (strategy == "log2-collection" || strategy == "binary") {
        ColoringCollection collection(k);
        if (strategy == "binary") {
            collection = binary_collection(inst.message_count());
        } else {
            Log2Options options;
            options.large_budget_scale = c0;
            options.cap = cap;
            auto built = build_log2_collection(inst, seed, options);
            report["attempts"] = built.attempts;
            report["fallback"] = built.fallback;
            collection = std::move(built.collection);
        }
        report["total_colors"] = collection.total_colors();
        report["members"] = collection.member_count();
        if (!collection_out.empty()) io::write_file(collection_out, io::to_json(collection) + "\n");
        std::vector<FieldMatrix> blocks;
        for (const auto& c : collection.members())
            blocks.push_back(indicator_matrix(c, q == 0 ? 2 : q));
        matrix = stack(blocks);
    } else {
        throw CLI::ValidationError("--strategy", "unknown strategy " + strategy);
    }

    const auto validation = validate_encoder(*matrix, inst);
    report["q"] = matrix->q();
    report["rows"] = matrix->rows();
    report["cols"] = matrix->cols();
    report["valid"] = validation.valid;
    report["failing"] = validation.failing;
    if (!out.empty()) io::save_matrix(*matrix, out);
    std::cout << report.dump() << "\n";
    return validation.valid ? 0 : kExitValidation;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& in, const std::string& matrix_path, const std::string& out) {
    const auto inst = load_input(in);
    const auto g = io::load_matrix(matrix_path);
    const auto validation = validate_encoder(g, inst);
    json receivers = json::array();
    for (const auto& v : validation.verdicts) {
        json r{{"receiver", v.receiver}, {"satisfied", v.satisfied}};
        r["witness"] = v.satisfied ? json(v.witness) : json(nullptr);
        receivers.push_back(std::move(r));
    }
    emit(json{{"valid", validation.valid}, {"failing", validation.failing},
              {"receivers", std::move(receivers)}}
             .dump(),
         out);
    return validation.valid ? 0 : kExitValidation;
}

// ---- decode-demo -----------------------------------------------------------

int run_decode_demo(const std::string& in, const std::string& matrix_path,
                    std::optional<std::uint64_t> seed_opt, int trials, const std::string& out) {
    const auto inst = load_input(in);
    const auto g = io::load_matrix(matrix_path);
    const auto seed = resolve_seed(seed_opt);
    const auto validation = validate_encoder(g, inst);
    json j;
    j["seed"] = seed;
    if (!validation.valid) {
        j["ok"] = false;
        j["failing"] = validation.failing;
        emit(j.dump(), out);
        return kExitValidation;
    }
    Rng rng(seed);
    bool all_ok = true;
    json receivers = json::array();
    std::vector<int> mismatches(static_cast<size_t>(inst.receiver_count()), 0);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> x(static_cast<size_t>(g.cols()));
        for (auto& value : x) value = rng.uniform_int(0, g.q() - 1);
        const auto codeword = encode(g, x);
        for (const auto& verdict : validation.verdicts) {
            const auto decoded = decode(verdict, g, inst, codeword, x);
            for (int j2 = 0; j2 < g.fold(); ++j2)
                if (decoded.symbols[static_cast<size_t>(j2)] !=
                    x[static_cast<size_t>(g.column_index(decoded.vertex, j2))]) {
                    ++mismatches[static_cast<size_t>(verdict.receiver)];
                    all_ok = false;
                    break;
                }
        }
    }
    for (const auto& verdict : validation.verdicts)
        receivers.push_back({{"receiver", verdict.receiver},
                             {"vertex", verdict.witness},
                             {"ok", mismatches[static_cast<size_t>(verdict.receiver)] == 0}});
    j["ok"] = all_ok;
    j["trials"] = trials;
    j["receivers"] = std::move(receivers);
    emit(j.dump(), out);
    return all_ok ? 0 : kExitValidation;
}

// ---- oracle ----------------------------------------------------------------

int run_oracle(const std::string& in, int k, const std::string& out) {
    const auto inst = load_input(in);
    const auto report = certify_chain(inst, k);
    emit(io::to_json(report), out);
    if (!report.complete) return kExitBudget;
    return report.chain_ok ? 0 : kExitValidation;
}

// ---- bench -----------------------------------------------------------------

int run_bench(const std::vector<int>& gammas, int seeds, int edge_size, int clusters,
              std::optional<std::uint64_t> seed_opt, const std::string& out) {
    const auto base_seed = resolve_seed(seed_opt);
    std::string csv = "gamma,total_colors,seed,attempts,strategy\n";
    for (int gamma : gammas) {
        for (int s = 0; s < seeds; ++s) {
            const auto seed = Rng::derive(base_seed, (static_cast<std::uint64_t>(gamma) << 20) + s);
            const auto inst = clustered_instance(gamma, clusters, edge_size, seed);
            const auto built = build_log2_collection(inst, seed);
            csv += std::to_string(intersection_profile(inst).gamma) + "," +
                   std::to_string(built.collection.total_colors()) + "," + std::to_string(seed) +
                   "," + std::to_string(built.attempts) + ",log2-collection\n";
        }
    }
    if (out.empty())
        std::cout << csv;
    else
        io::write_file(out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pliable index codes from conflict-free hypergraph colorings"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance (random, complete 2-uniform, or named)");
    int gen_m = 8, gen_n = 8, gen_min = 2, gen_max = 4, gen_complete2 = 0;
    std::string gen_example, gen_out;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--m", gen_m, "number of messages");
    gen->add_option("--n", gen_n, "number of receivers");
    gen->add_option("--min-size", gen_min, "smallest request-set size");
    gen->add_option("--max-size", gen_max, "largest request-set size");
    gen->add_option("--seed", gen_seed, "RNG seed (drawn and printed when omitted)");
    auto* gen_complete2_opt =
        gen->add_option("--complete2", gen_complete2, "all 2-subsets of this many vertices");
    gen->add_option("--example", gen_example, "named instance: pentagon, ex2, ex3")
        ->check(CLI::IsMember({"pentagon", "ex2", "ex3"}))
        ->excludes(gen_complete2_opt);
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");

    // stats
    auto* stats = app.add_subcommand("stats", "structural statistics of an instance");
    std::string stats_in, stats_out;
    stats->add_option("--in", stats_in, "instance JSON")->required();
    stats->add_option("--out", stats_out, "output path (stdout when omitted)");

    // build-code
    auto* build = app.add_subcommand("build-code", "construct an encoder and validate it");
    std::string build_in, build_strategy = "indicator", build_out, build_collection_out;
    int build_k = 1, build_q = 0, build_exact_limit = 10;
    double build_c0 = 4.0;
    long build_cap = 0;
    std::optional<std::uint64_t> build_seed;
    build->add_option("--in", build_in, "instance JSON")->required();
    build->add_option("--strategy", build_strategy, "indicator, mds, log2-collection, or binary")
        ->check(CLI::IsMember({"indicator", "mds", "log2-collection", "binary"}));
    build->add_option("--k", build_k, "fold (vector length per message)")->check(CLI::PositiveNumber);
    build->add_option("--q", build_q, "field modulus (0 = per-strategy default)");
    build->add_option("--seed", build_seed, "RNG seed (drawn and printed when omitted)");
    build->add_option("--out", build_out, "matrix output path");
    build->add_option("--collection-out", build_collection_out, "collection output path");
    build->add_option("--exact-limit", build_exact_limit,
                      "use exhaustive coloring search while m*k stays at or below this");
    build->add_option("--c0", build_c0,
                      "palette-budget constant for the oversized-edge coloring")
        ->check(CLI::PositiveNumber);
    build->add_option("--resample-cap", build_cap,
                      "resampling budget override for the randomized covering (0 = default)");

    // verify
    auto* verify = app.add_subcommand("verify", "per-receiver decodability of an encoder");
    std::string verify_in, verify_matrix, verify_out;
    verify->add_option("--in", verify_in, "instance JSON")->required();
    verify->add_option("--matrix", verify_matrix, "matrix JSON")->required();
    verify->add_option("--out", verify_out, "output path (stdout when omitted)");

    // decode-demo
    auto* demo = app.add_subcommand("decode-demo", "round-trip random messages at every receiver");
    std::string demo_in, demo_matrix, demo_out;
    std::optional<std::uint64_t> demo_seed;
    int demo_trials = 10;
    demo->add_option("--in", demo_in, "instance JSON")->required();
    demo->add_option("--matrix", demo_matrix, "matrix JSON")->required();
    demo->add_option("--seed", demo_seed, "RNG seed (drawn and printed when omitted)");
    demo->add_option("--trials", demo_trials, "random message vectors per receiver")
        ->check(CLI::PositiveNumber);
    demo->add_option("--out", demo_out, "output path (stdout when omitted)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive parameter chain on a tiny instance");
    std::string oracle_in, oracle_out;
    int oracle_k = 1;
    oracle->add_option("--in", oracle_in, "instance JSON")->required();
    oracle->add_option("--k", oracle_k, "fold")->check(CLI::PositiveNumber);
    oracle->add_option("--out", oracle_out, "output path (stdout when omitted)");

    // bench
    auto* bench = app.add_subcommand("bench", "incidence-controlled scaling of covering size");
    std::vector<int> bench_gammas{8, 32, 128, 512};
    int bench_seeds = 10, bench_edge_size = 2, bench_clusters = 2;
    std::optional<std::uint64_t> bench_seed;
    std::string bench_out;
    bench->add_option("--gammas", bench_gammas, "incidence targets")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seeds per target")->check(CLI::PositiveNumber);
    bench->add_option("--edge-size", bench_edge_size, "request-set size in the ensemble");
    bench->add_option("--clusters", bench_clusters, "independent clusters per instance");
    bench->add_option("--seed", bench_seed, "base RNG seed (drawn and printed when omitted)");
    bench->add_option("--out", bench_out, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_m, gen_n, gen_min, gen_max, gen_seed, gen_complete2, gen_example,
                           gen_out);
        if (stats->parsed()) return run_stats(stats_in, stats_out);
        if (build->parsed())
            return run_build(build_in, build_strategy, build_k, build_q, build_seed, build_out,
                             build_collection_out, build_exact_limit, build_c0, build_cap);
        if (verify->parsed()) return run_verify(verify_in, verify_matrix, verify_out);
        if (demo->parsed())
            return run_decode_demo(demo_in, demo_matrix, demo_seed, demo_trials, demo_out);
        if (oracle->parsed()) return run_oracle(oracle_in, oracle_k, oracle_out);
        if (bench->parsed())
            return run_bench(bench_gammas, bench_seeds, bench_edge_size, bench_clusters, bench_seed,
                             bench_out);
    } catch (const resample_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
