// Command-line front end: JSON instances in, JSON results out.
// Subcommands: partition, lambda, sparse, verify, gen.
// Exit codes: 0 ok, 1 error, 2 violation / infeasible lambda.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "carleson/carleson.hpp"
#include "carleson/json_io.hpp"
#include "carleson/sparse.hpp"
#include "carleson/svg.hpp"
#include "carleson/verify.hpp"

using nlohmann::json;
using namespace carleson;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error("parse error in '" + path + "': " + e.what());
    }
    return j;
}

Collection load_collection(const std::string& path, Instance* inst_out = nullptr) {
    Instance inst = instance_from_json(load_json(path));
    if (inst_out) *inst_out = inst;
    return build(inst);
}

void emit(const json& payload, const std::string& status, const Timer& timer,
          const std::string& out_path) {
    json result;
    result["status"] = status;
    result["payload"] = payload;
    result["timing_ms"] = timer.ms();
    if (out_path.empty()) {
        std::cout << result.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << result.dump(2) << "\n";
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

json carleson_result_json(const CarlesonResult& r) {
    json trace = json::array();
    for (const auto& t : r.trace)
        trace.push_back({{"lambda", rat_str(t.lambda)}, {"size", t.size}});
    return {{"lambda", rat_str(r.lambda)},
            {"witness", r.witness},
            {"iterations", r.iterations},
            {"trace", std::move(trace)}};
}

int cmd_partition(const std::string& instance_path, bool via_oracle,
                  const std::string& out_path) {
    Timer timer;
    Collection c = load_collection(instance_path);

    if (via_oracle) {
        std::vector<std::vector<std::string>> signatures;
        for (const auto& a : c.atoms) signatures.push_back(c.ids(a.signature));
        auto measures = atom_measures_from_oracle(
            signatures,
            [&](const std::vector<std::string>& ids) { return c.union_measure(ids); });
        for (std::size_t i = 0; i < c.atoms.size(); ++i)
            if (measures[i] != c.atoms[i].measure)
                throw Error("oracle recursion disagrees with stored measure of '" +
                            c.atoms[i].id + "'");
    }

    json atoms = json::array();
    for (const auto& a : c.atoms)
        atoms.push_back({{"id", a.id},
                         {"signature", c.ids(a.signature)},
                         {"measure", rat_str(a.measure)}});
    emit({{"count", c.atoms.size()}, {"atoms", std::move(atoms)}}, "ok", timer,
         out_path);
    return kExitOk;
}

int cmd_lambda(const std::string& instance_path, const std::string& backend,
               const std::string& dump_graph, const std::string& out_path) {
    Timer timer;
    Collection c = load_collection(instance_path);
    Backend b = backend == "brute" ? Backend::brute : Backend::mincut;
    CarlesonResult r = carleson_constant(c, b);
    if (!dump_graph.empty()) {
        FlowNetwork net = build_network(c, r.lambda);
        Flow flow = max_flow(net);
        write_file(dump_graph, to_dot(net, c, &flow));
    }
    emit(carleson_result_json(r), "ok", timer, out_path);
    return kExitOk;
}

int cmd_sparse(const std::string& instance_path, const std::string& lambda_arg,
               const std::string& emit_kind, const std::string& svg_path,
               const std::string& dump_graph, const std::string& out_path) {
    Timer timer;
    Collection c = load_collection(instance_path);
    std::optional<Rat> lambda;
    if (lambda_arg != "auto") lambda = parse_rat(lambda_arg);

    try {
        json payload;
        if (emit_kind == "phi") {
            PhiWitness w = construct_phi(c, lambda);
            if (auto bad = verify_witness(c, w); !bad.empty())
                throw Error("constructed witness failed verification: " + bad[0]);
            payload = to_json(c, w);
            lambda = w.lambda;
        } else if (emit_kind == "selection") {
            Selection w = construct_selection(c, lambda);
            if (auto bad = verify_witness(c, w); !bad.empty())
                throw Error("constructed witness failed verification: " + bad[0]);
            payload = to_json(c, w);
            lambda = w.lambda;
        } else if (emit_kind == "boxes") {
            if (!c.has_geometry())
                throw Error("--emit boxes needs a boxes-kind instance");
            if (c.dim > 3) throw Error("--emit boxes supports d <= 3");
            Selection sel = construct_selection(c, lambda);
            BoxRealization w = realize_boxes(c, sel);
            if (auto bad = verify_witness(c, w); !bad.empty())
                throw Error("constructed witness failed verification: " + bad[0]);
            payload = to_json(c, w);
            lambda = w.lambda;
            if (!svg_path.empty()) write_file(svg_path, realization_svg(c, w));
        } else {
            throw Error("unknown emission kind '" + emit_kind + "'");
        }
        if (!svg_path.empty() && emit_kind != "boxes")
            throw Error("--svg needs --emit boxes");
        if (!dump_graph.empty()) {
            FlowNetwork net = build_network(c, *lambda);
            Flow flow = max_flow(net);
            write_file(dump_graph, to_dot(net, c, &flow));
        }
        emit(payload, "ok", timer, out_path);
        return kExitOk;
    } catch (const InfeasibleLambda& e) {
        emit({{"certificate", to_json(e.certificate)}, {"message", e.what()}},
             "violation", timer, out_path);
        return kExitViolation;
    }
}

struct Report {
    json checks = json::array();
    bool all_ok = true;

    void add(const std::string& name, bool ok, const json& detail = {}) {
        json entry = {{"property", name}, {"status", ok ? "pass" : "fail"}};
        if (!ok && !detail.is_null()) entry["counterexample"] = detail;
        checks.push_back(std::move(entry));
        all_ok = all_ok && ok;
    }
};

int verify_witness_file(const std::string& instance_path,
                        const std::string& witness_path,
                        const std::string& out_path) {
    Timer timer;
    Collection c = load_collection(instance_path);
    json wj = load_json(witness_path);
    std::vector<std::string> bad;
    switch (witness_kind(wj)) {
        case WitnessKind::phi:
            bad = verify_witness(c, phi_from_json(c, wj));
            break;
        case WitnessKind::selection:
            bad = verify_witness(c, selection_from_json(c, wj));
            break;
        case WitnessKind::boxes:
            bad = verify_witness(c, realization_from_json(c, wj));
            break;
    }
    emit({{"violations", bad}}, bad.empty() ? "ok" : "violation", timer, out_path);
    return bad.empty() ? kExitOk : kExitViolation;
}

// Oracle-equivalence and invariant suites over a deterministic generated
// corpus.
int verify_corpus(int n_max, std::uint64_t seed, const std::string& out_path) {
    Timer timer;
    Report report;
    const GenKind kinds[] = {GenKind::dyadic, GenKind::dyadic, GenKind::boxes,
                             GenKind::boxes,  GenKind::boxes,  GenKind::atoms};
    const int dims[] = {1, 2, 1, 2, 3, 1};

    int lambda_ok = 0, sfm_ok = 0, partition_ok = 0, witness_ok = 0, total = 0;
    json counterexample;
    std::string failed_property;
    for (int i = 0; i < 48 && failed_property.empty(); ++i) {
        GeneratorSpec spec;
        spec.kind = kinds[i % 6];
        spec.d = dims[i % 6];
        spec.n = 2 + i % std::max(1, n_max - 1);
        spec.seed = seed + static_cast<std::uint64_t>(i) * 7919;
        spec.weight_mode = i % 2 ? WeightMode::random : WeightMode::measure;
        Instance inst = generate_instance(spec);
        Collection c = build(inst);
        ++total;

        auto fail = [&](const std::string& property) {
            failed_property = property;
            counterexample = instance_to_json(inst);
        };

        CarlesonResult algo = carleson_constant(c);
        BruteLambda brute = brute_lambda(c);
        Rat witness_ratio = [&]() -> Rat {
            Rat ws = 0;
            for (const auto& id : algo.witness) ws += c.weight(c.set_index(id));
            return ws / c.union_measure(algo.witness);
        }();
        if (algo.lambda == brute.lambda && witness_ratio == algo.lambda)
            ++lambda_ok;
        else
            fail("carleson-constant oracle equivalence");

        std::vector<std::string> all;
        for (const auto& s : c.sets) all.push_back(s.id);
        const Rat lambdas[] = {algo.lambda, algo.lambda * Rat(2, 3),
                               algo.lambda * Rat(3, 2)};
        for (const Rat& lam : lambdas) {
            auto a = minimize_f(c, lam, all, Backend::mincut);
            auto b = brute_min_f(c, lam, all);
            if (a.value == b.value && a.minimizer == b.minimizer)
                ++sfm_ok;
            else
                fail("sfm backend equivalence");
        }

        if (spec.kind != GenKind::atoms) {
            std::vector<std::vector<std::string>> signatures;
            for (const auto& a : c.atoms) signatures.push_back(c.ids(a.signature));
            auto measures = atom_measures_from_oracle(
                signatures, [&](const std::vector<std::string>& ids) {
                    return c.union_measure(ids);
                });
            bool ok = true;
            for (std::size_t k = 0; k < c.atoms.size(); ++k)
                ok = ok && measures[k] == c.atoms[k].measure;
            if (ok)
                ++partition_ok;
            else
                fail("atom-measure oracle recursion");
        }

        PhiWitness phi = construct_phi(c, algo.lambda);
        Selection sel = construct_selection(c, algo.lambda);
        if (verify_witness(c, phi).empty() && verify_witness(c, sel).empty())
            ++witness_ok;
        else
            fail("sparse witness invariants");
    }

    report.add("carleson-constant oracle equivalence",
               failed_property != "carleson-constant oracle equivalence",
               counterexample);
    report.add("sfm backend equivalence",
               failed_property != "sfm backend equivalence", counterexample);
    report.add("atom-measure oracle recursion",
               failed_property != "atom-measure oracle recursion", counterexample);
    report.add("sparse witness invariants",
               failed_property != "sparse witness invariants", counterexample);
    emit({{"instances", total},
          {"checks", report.checks},
          {"failed", failed_property}},
         report.all_ok ? "ok" : "violation", timer, out_path);
    return report.all_ok ? kExitOk : kExitViolation;
}

int cmd_gen(const std::string& kind, int n, int d, std::uint64_t seed,
            const std::string& weight_mode, const std::string& out_path) {
    Timer timer;
    GeneratorSpec spec;
    if (kind == "dyadic")
        spec.kind = GenKind::dyadic;
    else if (kind == "boxes")
        spec.kind = GenKind::boxes;
    else if (kind == "atoms")
        spec.kind = GenKind::atoms;
    else
        throw Error("unknown kind '" + kind + "'");
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    if (weight_mode == "random")
        spec.weight_mode = WeightMode::random;
    else if (weight_mode != "measure")
        throw Error("unknown weight mode '" + weight_mode + "'");

    Instance inst = generate_instance(spec);
    build(inst);  // validate before emitting
    json j = instance_to_json(inst);
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(out_path, j.dump(2) + "\n");
    }
    (void)timer;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Carleson constants and optimal sparse witnesses"};
    app.require_subcommand(1);

    std::string instance_path, out_path;

    auto* partition = app.add_subcommand(
        "partition", "List the atom partition and its exact measures");
    bool via_oracle = false;
    partition->add_option("instance", instance_path, "instance JSON file")
        ->required();
    partition->add_flag("--via-oracle", via_oracle,
                        "recompute measures through the oracle recursion");
    partition->add_option("-o,--output", out_path, "write the result here");

    auto* lambda_cmd = app.add_subcommand(
        "lambda", "Compute the optimal Carleson constant");
    std::string backend = "mincut", dump_graph;
    lambda_cmd->add_option("instance", instance_path, "instance JSON file")
        ->required();
    lambda_cmd->add_option("--backend", backend, "mincut|brute")
        ->check(CLI::IsMember({"mincut", "brute"}));
    lambda_cmd->add_option("--dump-graph", dump_graph,
                           "write the flow network in DOT format");
    lambda_cmd->add_option("-o,--output", out_path, "write the result here");

    auto* sparse_cmd = app.add_subcommand(
        "sparse", "Construct an optimal sparse witness");
    std::string lambda_arg = "auto", emit_kind = "phi", svg_path;
    sparse_cmd->add_option("instance", instance_path, "instance JSON file")
        ->required();
    sparse_cmd->add_option("--lambda", lambda_arg,
                           "auto or an explicit \"p/q\" constant");
    sparse_cmd->add_option("--emit", emit_kind, "phi|selection|boxes")
        ->check(CLI::IsMember({"phi", "selection", "boxes"}));
    sparse_cmd->add_option("--svg", svg_path,
                           "render the box realization (d = 2 only)");
    sparse_cmd->add_option("--dump-graph", dump_graph,
                           "write the flow network in DOT format");
    sparse_cmd->add_option("-o,--output", out_path, "write the result here");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check a witness file or run the oracle-equivalence corpus");
    std::string witness_path;
    int n_max = 8;
    std::uint64_t seed = 42;
    verify_cmd->add_option("instance", instance_path,
                           "instance JSON file (required with --witness)");
    verify_cmd->add_option("--witness", witness_path, "witness JSON file");
    verify_cmd->add_option("--n-max", n_max, "corpus instance size bound");
    verify_cmd->add_option("--seed", seed, "corpus seed");
    verify_cmd->add_option("-o,--output", out_path, "write the report here");

    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate a reproducible random instance");
    std::string kind = "boxes", weight_mode = "measure";
    int n = 4, d = 1;
    gen_cmd->add_option("--kind", kind, "dyadic|boxes|atoms")
        ->check(CLI::IsMember({"dyadic", "boxes", "atoms"}));
    gen_cmd->add_option("--n", n, "number of sets");
    gen_cmd->add_option("--d", d, "dimension");
    gen_cmd->add_option("--seed", seed, "64-bit seed");
    gen_cmd->add_option("--weight-mode", weight_mode, "measure|random")
        ->check(CLI::IsMember({"measure", "random"}));
    gen_cmd->add_option("-o,--output", out_path, "write the instance here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (partition->parsed())
            return cmd_partition(instance_path, via_oracle, out_path);
        if (lambda_cmd->parsed())
            return cmd_lambda(instance_path, backend, dump_graph, out_path);
        if (sparse_cmd->parsed())
            return cmd_sparse(instance_path, lambda_arg, emit_kind, svg_path,
                              dump_graph, out_path);
        if (verify_cmd->parsed()) {
            if (!witness_path.empty()) {
                if (instance_path.empty())
                    throw Error("--witness needs an instance file");
                return verify_witness_file(instance_path, witness_path, out_path);
            }
            return verify_corpus(n_max, seed, out_path);
        }
        if (gen_cmd->parsed())
            return cmd_gen(kind, n, d, seed, weight_mode, out_path);
    } catch (const std::exception& e) {
        json result = {{"status", "error"}, {"message", e.what()}};
        std::cout << result.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
