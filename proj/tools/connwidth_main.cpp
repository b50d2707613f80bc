// connwidth: connectivity-system toolkit.
//
// Subcommands: validate, width, check-family, theorem1, duality, gen.
// Standard output carries JSON only (one document per line); everything
// human-readable goes to standard error. Exit codes: 0 pass/confirmed,
// 1 violation/mismatch, 2 input or guard error, 3 precondition failed or
// budget exceeded (harness commands).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "connwidth/axioms.hpp"
#include "connwidth/errors.hpp"
#include "connwidth/json_io.hpp"
#include "connwidth/search.hpp"
#include "connwidth/slow_eval.hpp"
#include "connwidth/system.hpp"
#include "connwidth/verify.hpp"

namespace {

using namespace connwidth;

struct CommonOpts {
    std::optional<std::int64_t> k;
    std::string variant = "guarded";
    std::vector<std::string> budget_overrides;
    std::optional<std::string> out_path;
    unsigned jobs = 1;
    bool timing = false;
};

Budget effective_budget(const CommonOpts& opts) {
    Budget b = Budget::from_env();
    for (const auto& kv : opts.budget_overrides) b.apply(kv);
    return b;
}

IhVariant parse_variant(const std::string& name) {
    if (name == "literal") return IhVariant::literal;
    if (name == "guarded") return IhVariant::guarded;
    throw InputError("unknown variant '" + name + "' (expected literal|guarded)");
}

// The interesting regime is bracketed by the singleton values; with no
// explicit k the commands sweep f(empty) .. max-singleton + 1.
std::vector<std::uint32_t> k_values(const ConnectivitySystem& sys, const CommonOpts& opts) {
    if (opts.k) {
        if (*opts.k < 0) throw InputError("--k must be non-negative");
        return {static_cast<std::uint32_t>(*opts.k)};
    }
    std::vector<std::uint32_t> ks;
    const std::uint32_t lo = sys.eval(0);
    const std::uint32_t hi = std::max(lo, sys.max_singleton_value() + 1);
    for (std::uint32_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

void emit(const std::string& payload, const std::optional<std::string>& out_path) {
    if (out_path) {
        write_file_atomic(*out_path, payload);
    } else {
        std::cout << payload;
    }
}

int run_validate(const std::string& instance_path, const CommonOpts& opts) {
    const Budget budget = effective_budget(opts);
    const ConnectivitySystem sys = load_instance(instance_path).build(budget);

    std::string payload;
    bool all_hold = true;

    const AxiomReport def = validate_symmetric_submodular(sys, budget);
    payload += to_json(def);
    all_hold = all_hold && def.holds;

    const VerificationReport lemma = check_lemma1(sys, budget);
    for (const auto& r : lemma.axiom_reports) {
        payload += to_json(r);
        all_hold = all_hold && r.holds;
    }

    emit(payload, opts.out_path);
    std::cerr << "validate: " << (all_hold ? "pass" : "VIOLATION") << " (" << sys.source() << ", n=" << sys.ground_size()
              << ")\n";
    return all_hold ? 0 : 1;
}

int run_width(const std::string& instance_path, bool with_oracle, const CommonOpts& opts) {
    const Budget budget = effective_budget(opts);
    const ConnectivitySystem sys = load_instance(instance_path).build(budget);

    const WidthResult dp = linear_width(sys, budget);
    emit(to_json(dp), opts.out_path);

    if (with_oracle) {
        const WidthResult brute = linear_width_bruteforce(sys, budget);
        if (brute.width != dp.width) {
            std::cerr << "width: DP width " << dp.width << " DISAGREES with oracle width " << brute.width
                      << "\n";
            return 1;
        }
        std::cerr << "width: " << dp.width << " (oracle agrees)\n";
    } else {
        std::cerr << "width: " << dp.width << "\n";
    }
    return 0;
}

int run_check_family(const std::string& instance_path, const std::string& family_path, bool require_ie,
                     const CommonOpts& opts) {
    const Budget budget = effective_budget(opts);
    const ConnectivitySystem sys = load_instance(instance_path).build(budget);
    const IhVariant variant = parse_variant(opts.variant);
    const SetFamily family =
        SetFamily::from_masks(load_family_masks(family_path, sys.ground_size()), sys.ground_size());

    std::string payload;
    for (std::uint32_t k : k_values(sys, opts)) {
        const VerdictReports ideal = is_single_ideal(sys, family, k, variant, require_ie);
        const VerdictReports obstacle = is_linear_obstacle(sys, family, k);
        payload += family_check_to_json(k, variant, require_ie, ideal, obstacle);
        std::cerr << "check-family: k=" << k << " single_ideal=" << (ideal.holds ? "true" : "false")
                  << " linear_obstacle=" << (obstacle.holds ? "true" : "false") << "\n";
    }
    emit(payload, opts.out_path);
    return 0;
}

int exit_code_for(const std::vector<Outcome>& outcomes) {
    bool any_mismatch = false, any_stopped = false;
    for (Outcome o : outcomes) {
        any_mismatch = any_mismatch || o == Outcome::mismatch;
        any_stopped = any_stopped || o == Outcome::precondition_failed || o == Outcome::budget_exceeded;
    }
    if (any_mismatch) return 1;
    if (any_stopped) return 3;
    return 0;
}

int run_theorem1(const std::string& instance_path, const CommonOpts& opts) {
    const Budget budget = effective_budget(opts);
    const Instance inst = load_instance(instance_path);
    const ConnectivitySystem sys = inst.build(budget);
    const IhVariant variant = parse_variant(opts.variant);

    std::string payload;
    std::vector<Outcome> outcomes;
    for (std::uint32_t k : k_values(sys, opts)) {
        const VerificationReport report = theorem1_crosscheck(sys, k, variant, budget, opts.jobs, inst.name);
        payload += to_json(report, opts.timing);
        outcomes.push_back(report.outcome);
        std::cerr << "theorem1: k=" << k << " variant=" << to_string(variant) << " outcome="
                  << to_string(report.outcome) << " families=" << report.counts.families_examined
                  << " mismatches=" << report.counts.mismatch_total << " ("
                  << report.counts.elapsed_ms << " ms)\n";
    }
    emit(payload, opts.out_path);
    return exit_code_for(outcomes);
}

int run_duality(const std::string& instance_path, const CommonOpts& opts) {
    const Budget budget = effective_budget(opts);
    const Instance inst = load_instance(instance_path);
    const ConnectivitySystem sys = inst.build(budget);
    const IhVariant variant = parse_variant(opts.variant);

    std::string payload;
    std::vector<Outcome> outcomes;
    for (std::uint32_t k : k_values(sys, opts)) {
        const VerificationReport report = duality_check(sys, k, variant, budget, inst.name);
        payload += to_json(report, opts.timing);
        outcomes.push_back(report.outcome);
        std::cerr << "duality: k=" << k << " lw=" << (report.lw ? std::to_string(*report.lw) : "?")
                  << " exists_ideal=" << (report.exists_ideal && *report.exists_ideal ? "true" : "false")
                  << " outcome=" << to_string(report.outcome) << "\n";
    }
    emit(payload, opts.out_path);
    return exit_code_for(outcomes);
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

int run_gen(const std::string& generator, std::uint32_t n, double p, const std::string& kind_name,
            std::uint64_t seed, const std::string& dir, const CommonOpts& opts) {
    Graph g;
    std::string params = "n" + std::to_string(n);
    if (generator == "path") {
        g = make_path(n);
    } else if (generator == "cycle") {
        g = make_cycle(n);
    } else if (generator == "complete") {
        g = make_complete(n);
    } else if (generator == "star") {
        g = make_star(n);
    } else if (generator == "random") {
        g = make_random(n, p, seed);
        params += "-p" + format_probability(p);
    } else {
        throw InputError("unknown generator '" + generator + "' (expected path|cycle|complete|star|random)");
    }

    Provenance kind;
    if (kind_name == "cut") {
        kind = Provenance::graph_cut;
    } else if (kind_name == "boundary") {
        kind = Provenance::graph_boundary;
    } else {
        throw InputError("unknown kind '" + kind_name + "' (expected cut|boundary)");
    }
    if (kind == Provenance::graph_boundary && g.edges.empty()) {
        throw InputError("boundary instance needs at least one edge (generator produced none)");
    }

    const std::string stem = generator + "-" + params + "-" + kind_name + "-s" + std::to_string(seed);
    const Instance inst = instance_from_graph(g, kind, stem);
    const std::filesystem::path out = std::filesystem::path(dir) / (stem + ".json");

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    write_file_atomic(out.string(), serialize_instance(inst));

    emit("{\"files\":[\"" + out.generic_string() + "\"]}\n", opts.out_path);
    std::cerr << "gen: wrote " << out.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity-system toolkit: axiom checking, exact linear-width, verification harnesses"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string instance_path, family_path;
    bool with_oracle = false, require_ie = false;
    std::string generator = "path", gen_kind = "cut", gen_dir = ".";
    std::uint32_t gen_n = 3;
    double gen_p = 0.5;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_k) {
        if (with_k) cmd->add_option("--k", opts.k, "order parameter k (omit to sweep f(empty)..max-singleton+1)");
        cmd->add_option("--variant", opts.variant, "IH reading: literal|guarded")->default_str("guarded");
        cmd->add_option("--budget", opts.budget_overrides, "guard override key=val (repeatable)");
        cmd->add_option("--out", opts.out_path, "write JSON to PATH (atomic) instead of stdout");
        cmd->add_option("--jobs", opts.jobs, "worker threads for harness sweeps");
        cmd->add_flag("--timing", opts.timing, "include elapsed_ms in reports (breaks byte-determinism)");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the defining conditions and both derived inequalities");
    validate->add_option("instance", instance_path, "instance JSON file")->required();
    add_common(validate, false);

    CLI::App* width = app.add_subcommand("width", "exact linear-width by subset DP");
    width->add_option("instance", instance_path, "instance JSON file")->required();
    width->add_flag("--oracle", with_oracle, "cross-check against the factorial oracle");
    add_common(width, false);

    CLI::App* check = app.add_subcommand("check-family", "evaluate both axiom systems on a family");
    check->add_option("instance", instance_path, "instance JSON file")->required();
    check->add_option("family", family_path, "family JSON file")->required();
    check->add_flag("--ie", require_ie, "require the complement-exactness axiom for the ideal verdict");
    add_common(check, true);

    CLI::App* theorem1 = app.add_subcommand("theorem1", "exhaustive single-ideal vs linear-obstacle cross-check");
    theorem1->add_option("instance", instance_path, "instance JSON file")->required();
    add_common(theorem1, true);

    CLI::App* duality = app.add_subcommand("duality", "linear-width vs ideal-existence check");
    duality->add_option("instance", instance_path, "instance JSON file")->required();
    add_common(duality, true);

    CLI::App* gen = app.add_subcommand("gen", "emit a deterministic instance file");
    gen->add_option("--generator", generator, "path|cycle|complete|star|random")->required();
    gen->add_option("--n", gen_n, "size parameter (vertices; leaves for star)")->required();
    gen->add_option("--p", gen_p, "edge probability (random)");
    gen->add_option("--kind", gen_kind, "cut|boundary");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--dir", gen_dir, "output directory");
    add_common(gen, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(instance_path, opts);
        if (app.got_subcommand(width)) return run_width(instance_path, with_oracle, opts);
        if (app.got_subcommand(check)) return run_check_family(instance_path, family_path, require_ie, opts);
        if (app.got_subcommand(theorem1)) return run_theorem1(instance_path, opts);
        if (app.got_subcommand(duality)) return run_duality(instance_path, opts);
        if (app.got_subcommand(gen)) return run_gen(generator, gen_n, gen_p, gen_kind, seed, gen_dir, opts);
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
