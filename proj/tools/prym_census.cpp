#include "prym/census.hpp"
#include "prym/duality.hpp"
#include "prym/errors.hpp"
#include "prym/matrix_json.hpp"
#include "prym/oracle.hpp"
#include "prym/report.hpp"
#include "prym/selftest.hpp"
#include "prym/spectral.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace prym;

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t max_rank = 64;
    long long max_k = 20;
};

void guard_rank(const Globals& g, std::size_t rank) {
    if (rank > g.max_rank)
        throw RankGuardExceeded("matrix rank " + std::to_string(rank) +
                                " exceeds the guard of " +
                                std::to_string(g.max_rank) +
                                "; raise --max-rank to proceed");
}

void guard_k(const Globals& g, long long k) {
    if (k > g.max_k)
        throw RankGuardExceeded("k = " + std::to_string(k) +
                                " exceeds the guard of " +
                                std::to_string(g.max_k) +
                                "; raise --max-k to proceed");
}

void warn_overrides(const Globals& g) {
    if (g.max_rank > 64)
        std::cerr << "warning: --max-rank " << g.max_rank
                  << " raised above 64; Smith normal form cost grows quickly "
                     "with rank\n";
    if (g.max_k > 20)
        std::cerr << "warning: --max-k " << g.max_k
                  << " raised above 20; enumeration cost grows as 3^k\n";
}

// Table mode: the flat key = value rendering used by every command except
// sweep, which gets real columns.
void print_flat(const Json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            print_flat(value, path);
        } else if (value.is_array() &&
                   (value.empty() || value[0].is_object() || value[0].is_array())) {
            std::cout << path << " = " << value.dump() << "\n";
        } else if (value.is_array()) {
            std::cout << path << " =";
            for (const auto& e : value) std::cout << " " << e.dump();
            std::cout << "\n";
        } else {
            std::cout << path << " = " << value.dump() << "\n";
        }
    }
}

void emit(const Globals& g, Json payload) {
    if (g.format == "table") {
        payload["schema_version"] = kSchemaVersion;
        print_flat(payload, "");
    } else {
        std::cout << dump_report(std::move(payload));
    }
}

Json representatives_json(const ComponentGroup& cg) {
    Json out = Json::array();
    for (const HalfVec& r : cg.representatives) out.push_back(half_vec_json(r));
    return out;
}

int cmd_components(const Globals& g, const std::string& path, bool witness,
                   bool oracle) {
    IntMat t = load_matrix_file(path);
    guard_rank(g, t.rows());
    InvolutionLattice l{t.rows(), t};
    C2Decomposition d = decompose(l, witness);
    ComponentGroup cg = component_group(l);
    Json out;
    out["n_trivial"] = d.n_trivial;
    out["n_sign"] = d.n_sign;
    out["n_perm"] = d.n_perm;
    out["component_count"] = integer_json(cg.order);
    out["representatives"] = representatives_json(cg);
    out["representatives_complete"] = cg.representatives_complete;
    if (witness) out["witness"] = matrix_to_json(*d.witness);
    if (oracle) {
        OracleResult o = component_group_oracle(l);
        out["oracle"] = {{"order", integer_json(o.order)}, {"f2_rank", o.f2_rank}};
    }
    emit(g, std::move(out));
    return 0;
}

int cmd_pairing(const Globals& g, const std::string& path,
                const std::string& dual_path, const std::string& pairing_path) {
    IntMat t = load_matrix_file(path);
    guard_rank(g, t.rows());
    DualPair dp;
    if (dual_path.empty()) {
        dp = standard_dual(InvolutionLattice{t.rows(), t});
    } else {
        IntMat td = load_matrix_file(dual_path);
        IntMat p = load_matrix_file(pairing_path);
        dp = DualPair{InvolutionLattice{t.rows(), t},
                      InvolutionLattice{td.rows(), td}, p};
    }
    validate_dual_pair(dp);
    PerfectnessResult pr = verify_perfect(dp);
    Json out;
    out["rank_L"] = pr.rank;
    out["rank_dual"] = pr.dual_rank;
    out["gram_mod2"] = f2_mat_json(pr.gram);
    out["perfect"] = pr.perfect;
    if (pr.perfect) {
        out["certificate"] = f2_mat_json(*pr.gram_inverse);
        out["certificate_kind"] = "gram_inverse";
    } else {
        out["certificate"] =
            pr.null_class ? bits_json(*pr.null_class) : bits_json(*pr.null_dual_class);
        out["certificate_kind"] = pr.null_class ? "null_class" : "null_dual_class";
    }
    emit(g, std::move(out));
    return 0;
}

int cmd_spectral(const Globals& g, long long gg, long long k, long long ell,
                 const std::string& emit_path) {
    RealCurveData curve{gg, k, ell};
    validate_curve(curve);
    SpectralHomology s = build(curve);
    guard_rank(g, s.rank);
    FiberCounts fc = fiber_counts(curve);
    Json out;
    out["rank"] = s.rank;
    out["jacobian"] = integer_json(fc.jacobian_components);
    out["sl2"] = integer_json(fc.sl2_components);
    out["pgl2"] = integer_json(fc.pgl2_components);
    out["n_sign_jacobian"] = fc.jacobian_rank;
    out["checks"] = {{"involutions", true}, {"commute", true}};
    if (!emit_path.empty()) {
        Json m;
        m["schema_version"] = kSchemaVersion;
        m["basis_labels"] = s.basis_labels;
        m["i_act"] = matrix_to_json(s.i_act);
        m["tau_act"] = matrix_to_json(s.tau_act);
        std::ofstream f(emit_path);
        if (!f) throw MalformedInput(0, "cannot write " + emit_path);
        f << m.dump(2) << "\n";
        out["emitted"] = emit_path;
    }
    emit(g, std::move(out));
    return 0;
}

Json sl2_json(const Sl2Census& c) {
    Json out;
    out["count"] = integer_json(c.count);
    out["classes"] = c.classes;
    out["classes_complete"] = c.classes_complete;
    out["normalization_note"] = kSl2NormalizationNote;
    return out;
}

Json pgl2_json(const Pgl2Census& c) {
    Json out;
    out["enumeration"] = integer_json(c.enumeration);
    out["enumeration_method"] = c.enumeration_method;
    out["recursion"] = integer_json(c.recursion);
    out["closed_form"] = integer_json(c.closed_form);
    Json trace = Json::array();
    for (const Integer& v : c.trace) trace.push_back(integer_json(v));
    out["trace"] = std::move(trace);
    out["classes"] = c.classes;
    out["classes_complete"] = c.classes_complete;
    return out;
}

Json paradox_json(const ParadoxReport& pr) {
    Json out;
    out["curve"] = {{"g", pr.curve.g}, {"k", pr.curve.k}, {"ell", pr.curve.ell}};
    out["global_sl2"] = integer_json(pr.global_sl2);
    out["fiber_sl2"] = integer_json(pr.fiber_sl2);
    out["global_pgl2"] = integer_json(pr.global_pgl2);
    out["fiber_pgl2"] = integer_json(pr.fiber_pgl2);
    out["fiber_compatible"] = {
        {"pre_parity", integer_json(pr.bound.pre_parity)},
        {"parity_filtered", integer_json(pr.bound.parity_filtered)},
        {"classes", pr.bound.classes},
        {"classes_complete", pr.bound.classes_complete}};
    out["sl2_exceeds"] = pr.sl2_exceeds;
    out["pgl2_exceeds"] = pr.pgl2_exceeds;
    return out;
}

int cmd_census(const Globals& g, long long k, long long ell, long long gg) {
    guard_k(g, k);
    Json out;
    out["k"] = k;
    out["sl2"] = sl2_json(census_sl2(k));
    out["pgl2"] = pgl2_json(census_pgl2(k));
    out["count_note"] = kPgl2CountNote;
    if (ell > 0 || gg > 0) {
        if (ell <= 0 || gg <= 0)
            throw MalformedInput(0, "--ell and --g must be given together");
        RealCurveData curve{gg, k, ell};
        validate_curve(curve);
        out["paradox"] = paradox_json(paradox_report(curve));
    }
    emit(g, std::move(out));
    return 0;
}

int cmd_sweep(const Globals& g, long long sweep_max_k) {
    if (sweep_max_k < 1) throw MalformedInput(0, "--max-k must be at least 1");
    if (sweep_max_k > 20)
        std::cerr << "warning: sweeping past k = 20; enumeration cost grows as "
                     "3^k\n";
    if (sweep_max_k > 30)
        throw RankGuardExceeded("census enumeration is capped at k = 30, got " +
                                std::to_string(sweep_max_k));
    struct Row {
        long long k;
        Integer sl2, pgl2;
        std::vector<Integer> trace;
    };
    std::vector<Row> rows;
    for (long long k = 1; k <= sweep_max_k; ++k) {
        Sl2Census s = census_sl2(k, 0);
        Pgl2Census p = census_pgl2(k, Pgl2Options{false, 14, 0});
        rows.push_back(Row{k, s.count, p.enumeration, p.trace});
    }
    if (g.format == "table") {
        std::cout << "k\tsl2\tpgl2\ttrace\n";
        for (const Row& r : rows) {
            std::cout << r.k << "\t" << r.sl2.get_str() << "\t"
                      << r.pgl2.get_str() << "\t";
            for (std::size_t i = 0; i < r.trace.size(); ++i)
                std::cout << (i ? " " : "") << r.trace[i].get_str();
            std::cout << "\n";
        }
        return 0;
    }
    Json out;
    Json jrows = Json::array();
    for (const Row& r : rows) {
        Json trace = Json::array();
        for (const Integer& v : r.trace) trace.push_back(integer_json(v));
        jrows.push_back({{"k", r.k},
                         {"sl2", integer_json(r.sl2)},
                         {"pgl2", integer_json(r.pgl2)},
                         {"trace", std::move(trace)}});
    }
    out["rows"] = std::move(jrows);
    emit(g, std::move(out));
    return 0;
}

int cmd_selftest(const Globals& g, const std::string& fault) {
    SelftestResult r = selftest(g.seed, fault);
    emit(g, r.report);
    return r.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    CLI::App app{"Component groups of real abelian varieties with involution"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized suites")
        ->capture_default_str();
    app.add_option("--max-rank", g.max_rank, "Matrix rank guard")
        ->capture_default_str();
    app.add_option("--max-k", g.max_k, "Census size guard")
        ->capture_default_str();

    std::string matrix_path, dual_path, pairing_path, emit_path, fault;
    bool want_witness = false, want_oracle = false;
    long long gg = 0, k = 0, ell = 0, sweep_max_k = 0;

    CLI::App* components =
        app.add_subcommand("components", "Decompose an involution lattice");
    components->add_option("--matrix", matrix_path, "Involution matrix (JSON)")
        ->required();
    components->add_flag("--witness", want_witness, "Include a conjugating basis");
    components->add_flag("--oracle", want_oracle,
                         "Cross-check with the enumeration oracle");

    CLI::App* pairing = app.add_subcommand("pairing", "Verify the mod-2 duality");
    pairing->add_option("--matrix", matrix_path, "Involution matrix (JSON)")
        ->required();
    pairing->add_option("--dual", dual_path, "Dual involution matrix (JSON)");
    pairing->add_option("--pairing", pairing_path, "Pairing matrix (JSON)")
        ->needs(pairing->get_option("--dual"));

    CLI::App* spectral =
        app.add_subcommand("spectral", "Component counts for a spectral curve");
    spectral->add_option("--g", gg, "Genus of the spectral curve")->required();
    spectral->add_option("--k", k, "Number of real circles")->required();
    spectral->add_option("--ell", ell, "Number of involution-fixed circles")
        ->required();
    spectral->add_option("--emit-matrices", emit_path,
                         "Write basis labels and both actions to a file");

    CLI::App* census =
        app.add_subcommand("census", "Global moduli component census");
    census->add_option("--k", k, "Number of real circles")->required();
    census->add_option("--ell", ell, "Fixed circles, for the paradox report")
        ->needs(census->add_option("--g", gg,
                                   "Spectral genus, for the paradox report"));

    CLI::App* sweep = app.add_subcommand("sweep", "Census table over 1..max-k");
    sweep->add_option("--max-k", sweep_max_k, "Largest k in the sweep")
        ->required();

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "Run every module invariant suite");
    selftest_cmd->add_option("--inject-fault", fault, "Named fault to inject")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("PRYM_CENSUS_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: PRYM_CENSUS_SEED is not an integer\n";
            return 2;
        }
    }
    warn_overrides(g);

    try {
        if (components->parsed())
            return cmd_components(g, matrix_path, want_witness, want_oracle);
        if (pairing->parsed())
            return cmd_pairing(g, matrix_path, dual_path, pairing_path);
        if (spectral->parsed()) return cmd_spectral(g, gg, k, ell, emit_path);
        if (census->parsed()) return cmd_census(g, k, ell, gg);
        if (sweep->parsed()) return cmd_sweep(g, sweep_max_k);
        if (selftest_cmd->parsed()) return cmd_selftest(g, fault);
    } catch (const MalformedInput& e) {
        std::cout << dump_report(error_report(e));
        return 2;
    } catch (const Error& e) {
        std::cout << dump_report(error_report(e));
        return 1;
    }
    return 2;
}
