// Copyright 2026 The hoareopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoareopt/bench.hpp"
#include "hoareopt/gates.hpp"
#include "hoareopt/optimizer.hpp"
#include "hoareopt/sim.hpp"

namespace hoareopt::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
  public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
}

Circuit load(const std::string& path) {
    try {
        return parse_circuit(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

GateSet gate_set_of(const std::string& s) { return s == "clifford-t" ? GateSet::CliffordT : GateSet::Native; }

struct OptimizeOpts {
    std::string input, output, log, pass = "both", gate_set = "native";
    std::size_t window = PassConfig{}.window;
    std::vector<std::string> emit;
};

int cmd_optimize(const OptimizeOpts& o, std::ostream& out, std::ostream& err) {
    const Circuit c = load(o.input);
    PassConfig cfg;
    cfg.window = o.window;
    std::ostringstream smt;
    if (!o.emit.empty()) cfg.smt2 = &smt;

    PassResult r;
    r.circuit = c;
    for (std::size_t i = 0; i < c.instructions().size(); ++i) r.origin.push_back(i);
    const bool hoare = o.pass == "hoare" || o.pass == "both";
    const bool peephole = o.pass == "peephole" || o.pass == "both";
    if (hoare) {
        r = run_hoare(c, cfg);
        r = compose(r, elide_alloc_dealloc(r.circuit));
    }
    Circuit result = r.circuit;
    if (gate_set_of(o.gate_set) == GateSet::CliffordT) {
        // Indices of later stages no longer map onto the input.
        result = decompose_circuit(result);
        if (peephole) result = elide_alloc_dealloc(run_peephole(result).circuit).circuit;
    } else if (peephole) {
        r = compose(r, run_peephole(r.circuit));
        result = r.circuit;
    }

    const std::string text = serialize(result);
    if (o.output.empty()) {
        out << text;
    } else {
        write_file(o.output, text);
    }
    const std::string jsonl = to_jsonl(r.log);
    std::string log_path = o.log;
    if (log_path.empty() && !o.output.empty()) log_path = o.output + ".log.jsonl";
    if (log_path.empty()) {
        err << jsonl;
    } else {
        write_file(log_path, jsonl);
    }
    if (!o.emit.empty()) {
        fs::create_directories(o.emit[1]);
        write_file(fs::path(o.emit[1]) / (fs::path(o.input).stem().string() + ".smt2"), smt.str());
    }
    if (r.unknown_queries) err << "note: " << r.unknown_queries << " solver queries hit the budget; gates kept\n";
    return kOk;
}

struct BenchOpts {
    std::string suite, format = "csv", gate_set = "clifford-t", log_dir;
    std::vector<int> ns;
    std::size_t window = PassConfig{}.window;
};

std::vector<int> default_sizes(Suite s) {
    switch (s) {
        case Suite::Chain: return {2, 4, 8, 16, 32, 64};
        case Suite::Renorm: return {4, 8, 16};
        case Suite::ModRed: return {4, 8, 16, 32};
    }
    return {};
}

int cmd_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
    auto suite = suite_from_name(o.suite);
    if (!suite) {
        err << "unknown suite '" << o.suite << "' (expected renorm, chain or modred)\n";
        return kUsage;
    }
    PassConfig cfg;
    cfg.window = o.window;
    std::vector<BenchRow> rows;
    for (int n : o.ns.empty() ? default_sizes(*suite) : o.ns) rows.push_back(run_bench(*suite, n, cfg, gate_set_of(o.gate_set)));
    out << (o.format == "json" ? to_json(rows) : to_csv(rows));
    if (!o.log_dir.empty()) {
        fs::create_directories(o.log_dir);
        for (const auto& r : rows) {
            write_file(fs::path(o.log_dir) / (r.benchmark + "_" + std::to_string(r.n) + ".jsonl"), to_jsonl(r.hoare_log));
        }
    }
    return kOk;
}

struct VerifyOpts {
    std::string original, optimized, pre;
    bool common_phase = false;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    std::size_t max_qubits = kMaxEquivalenceQubits;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream&) {
    const Circuit a = load(o.original), b = load(o.optimized);
    Condition pre = Condition::constant(true);
    if (!o.pre.empty()) {
        NameResolver resolve = [&](std::string_view n) -> std::optional<Var> {
            auto q = a.find(n);
            if (!q || !a.is_input(*q)) return std::nullopt;
            return Var{*q, 0};
        };
        pre = parse_condition(read_file(o.pre), resolve);
    }
    std::vector<std::uint64_t> inputs = satisfying_inputs(a, pre);
    if (o.samples && o.samples < inputs.size()) {
        std::vector<std::uint64_t> picked;
        std::mt19937_64 rng(o.seed);
        std::sample(inputs.begin(), inputs.end(), std::back_inserter(picked), o.samples, rng);
        inputs = std::move(picked);
    }
    const EquivalenceReport rep = equivalent_on(a, b, inputs, o.max_qubits);
    const bool ok = o.common_phase ? rep.common_phase : rep.per_input;
    if (ok) {
        out << "equivalent (" << rep.inputs_checked << " inputs checked"
            << (rep.common_phase ? ", common phase" : ", per-input phase") << ")\n";
        return kOk;
    }
    out << "not equivalent: " << rep.detail << "\n";
    if (rep.counterexample) out << "counterexample: " << describe_input(a, *rep.counterexample) << "\n";
    return kVerifyFailed;
}

struct StatsOpts {
    std::string input, gate_set = "native";
};

int cmd_stats(const StatsOpts& o, std::ostream& out, std::ostream&) {
    Circuit c = load(o.input);
    if (gate_set_of(o.gate_set) == GateSet::CliffordT) c = decompose_circuit(c);
    nlohmann::ordered_json j;
    j["width"] = width(c);
    j["depth"] = dag_depth(c);
    j["gates"] = gate_count(c);
    j["counts"] = gate_counts(c);
    out << j.dump(2) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hoare-logic quantum circuit optimizer"};
    app.name("hoareopt");
    app.require_subcommand(1);

    OptimizeOpts oo;
    auto* opt = app.add_subcommand("optimize", "Optimize a circuit file");
    opt->add_option("input", oo.input, "Circuit file")->required();
    opt->add_option("-o,--output", oo.output, "Output circuit (default: stdout)");
    opt->add_option("--log", oo.log, "Removal log, JSON lines (default: <output>.log.jsonl or stderr)");
    opt->add_option("--pass", oo.pass, "Passes to run")->check(CLI::IsMember({"peephole", "hoare", "both"}));
    opt->add_option("--window", oo.window, "Multi-gate buffer threshold")->check(CLI::PositiveNumber);
    opt->add_option("--gate-set", oo.gate_set, "Output gate set")->check(CLI::IsMember({"native", "clifford-t"}));
    opt->add_option("--emit", oo.emit, "smt2 <dir>: dump solver interaction")
        ->expected(2)
        ->each([](const std::string&) {});

    BenchOpts bo;
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("suite", bo.suite, "renorm, chain or modred")->required();
    bench->add_option("--n", bo.ns, "Sizes, comma separated")->delimiter(',');
    bench->add_option("--format", bo.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--window", bo.window, "Multi-gate buffer threshold")->check(CLI::PositiveNumber);
    bench->add_option("--gate-set", bo.gate_set, "Gate set for the metrics")
        ->check(CLI::IsMember({"native", "clifford-t"}));
    bench->add_option("--log-dir", bo.log_dir, "Write one removal log per row");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Check two circuits for equivalence by simulation");
    verify->add_option("original", vo.original)->required();
    verify->add_option("optimized", vo.optimized)->required();
    verify->add_option("--pre", vo.pre, "File holding a precondition over the inputs");
    verify->add_flag("--common-phase", vo.common_phase, "Require one global phase for all inputs");
    verify->add_option("--samples", vo.samples, "Check this many random inputs instead of all");
    verify->add_option("--seed", vo.seed, "Seed for --samples");
    verify->add_option("--max-qubits", vo.max_qubits, "Qubit budget");

    StatsOpts so;
    auto* stats = app.add_subcommand("stats", "Print width, depth and gate counts");
    stats->add_option("input", so.input)->required();
    stats->add_option("--gate-set", so.gate_set)->check(CLI::IsMember({"native", "clifford-t"}));

    std::vector<std::string> argv_store{"hoareopt"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    if (!oo.emit.empty() && oo.emit[0] != "smt2") {
        err << "--emit supports only smt2\n";
        return kUsage;
    }

    try {
        if (*opt) return cmd_optimize(oo, out, err);
        if (*bench) return cmd_bench(bo, out, err);
        if (*verify) return cmd_verify(vo, out, err);
        if (*stats) return cmd_stats(so, out, err);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const InvalidCircuit& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }
    return kUsage;
}

}  // namespace hoareopt::cli
