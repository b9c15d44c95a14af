// tpk: trivially perfect editing kernelization toolkit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tpk/combs.hpp"
#include "tpk/errors.hpp"
#include "tpk/generator.hpp"
#include "tpk/io.hpp"
#include "tpk/kernel.hpp"
#include "tpk/solver.hpp"
#include "tpk/tp_structure.hpp"

namespace fs = std::filesystem;
using namespace tpk;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

// Largest budget for which bench runs the exact solver after kernelizing.
constexpr int bench_solve_budget = 5;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph read_graph_file(const std::string &path) {
    if (path.empty() || path == "-") {
        return parse_graph(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return parse_graph(in);
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    return out;
}

Variant variant_arg(const std::string &s) {
    if (auto v = parse_variant(s)) {
        return *v;
    }
    throw UsageError("unknown variant '" + s + "' (editing, completion, deletion)");
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    auto out = open_output(path);
    out << text;
}

// `# instance seed=.. n=.. k=.. variant=.. planted=..`
struct InstanceHeader {
    int k = -1;
    std::optional<Variant> variant;
};

InstanceHeader read_header(const std::string &path) {
    std::ifstream in(path);
    InstanceHeader h;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# instance", 0) != 0) {
            continue;
        }
        std::istringstream fields(line.substr(10));
        std::string kv;
        while (fields >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "k") {
                h.k = std::stoi(value);
            } else if (key == "variant") {
                h.variant = parse_variant(value);
            }
        }
        break;
    }
    return h;
}

int cmd_recognize(const std::string &input, const std::string &ucd_path) {
    const Graph g = read_graph_file(input);
    if (auto obs = find_obstruction(g)) {
        std::cout << "not-tp " << (obs->kind == ObstructionKind::p4 ? "P4" : "C4");
        for (Vertex v : obs->witnesses) {
            std::cout << ' ' << v + 1;
        }
        std::cout << '\n';
        return exit_negative;
    }
    std::cout << "tp\n";
    if (!ucd_path.empty()) {
        std::ostringstream text;
        write_ucd(text, compute_ucd(g));
        write_text(ucd_path, text.str());
    }
    return exit_ok;
}

int cmd_combs(const std::string &input) {
    const Graph g = read_graph_file(input);
    for (const auto &c : enumerate_critical_combs(g)) {
        write_comb(std::cout, c);
    }
    return exit_ok;
}

int cmd_kernelize(const std::string &input, int k, const std::string &variant, const std::string &output,
                  const std::string &trace_path, bool renumber) {
    const Instance inst{read_graph_file(input), k, variant_arg(variant)};
    const auto [reduced, trace] = kernelize(inst);
    write_text(output, graph_to_text(reduced.graph, renumber));
    if (!trace_path.empty()) {
        std::ostringstream text;
        write_trace(text, trace);
        write_text(trace_path, text.str());
    }
    std::cerr << "kernelized " << inst.graph.num_vertices() << " vertices, " << inst.graph.num_edges() << " edges -> "
              << reduced.graph.num_vertices() << " vertices, " << reduced.graph.num_edges() << " edges in "
              << trace.steps.size() << " step(s)\n";
    return exit_ok;
}

int cmd_solve(const std::string &input, int k, const std::string &variant) {
    const Instance inst{read_graph_file(input), k, variant_arg(variant)};
    if (auto sol = solve(inst)) {
        std::cout << "yes\n";
        write_edits(std::cout, sol->edits);
        return exit_ok;
    }
    std::cout << "no\n";
    return exit_negative;
}

int cmd_verify(const std::string &input, const std::string &edits_path, int k, const std::string &variant) {
    const Graph g = read_graph_file(input);
    std::ifstream in(edits_path);
    if (!in) {
        throw UsageError("cannot open " + edits_path);
    }
    const EditSet f = parse_edits(in);
    const bool ok = verify_edit(g, f, variant_arg(variant), k);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? exit_ok : exit_negative;
}

int cmd_gen(Vertex n, int k, const std::string &variant_name, std::optional<std::uint64_t> seed_flag,
            const std::string &output, int max_fanout, int max_bag) {
    std::uint64_t seed = 1;
    if (seed_flag) {
        seed = *seed_flag;
    } else if (const char *env = std::getenv("TPK_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("TPK_SEED is not an integer: ") + env);
        }
    }
    const Variant variant = variant_arg(variant_name);
    GenParams params;
    params.n = n;
    params.max_fanout = max_fanout;
    params.max_bag = max_bag;
    params.seed = seed;
    const Graph base = random_tp_graph(params);
    // Separate stream for the perturbation so it does not shift with n.
    const auto pert = perturb(base, k, variant, seed ^ 0x9e3779b97f4a7c15ULL);
    std::ostringstream line;
    line << "seed=" << seed << " n=" << n << " k=" << k << " variant=" << to_string(variant)
         << " planted=" << pert.repair.size() << " max_fanout=" << max_fanout << " max_bag=" << max_bag;
    std::ostringstream text;
    text << "# instance " << line.str() << '\n' << graph_to_text(pert.graph);
    write_text(output, text.str());
    if (!output.empty() && output != "-") {
        const fs::path out_path(output);
        std::ofstream manifest(out_path.parent_path() / "manifest.txt", std::ios::app);
        manifest << out_path.filename().string() << ' ' << line.str() << '\n';
    }
    return exit_ok;
}

struct BenchRow {
    std::string name;
    std::string csv;
    std::string error;
};

BenchRow bench_one(const fs::path &file) {
    BenchRow row{file.filename().string(), {}, {}};
    try {
        const InstanceHeader h = read_header(file.string());
        if (h.k < 0 || !h.variant) {
            throw UsageError("missing '# instance ... k=.. variant=..' line");
        }
        const Instance inst{read_graph_file(file.string()), h.k, *h.variant};
        const auto start = std::chrono::steady_clock::now();
        const auto [reduced, trace] = kernelize(inst);
        const auto millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        int counts[6] = {0, 0, 0, 0, 0, 0};
        for (const auto &s : trace.steps) {
            ++counts[s.rule];
        }
        std::string feasible;
        const bool run_solver = inst.budget <= bench_solve_budget;
        if (run_solver) {
            feasible = solve(reduced) ? "yes" : "no";
        }
        std::ostringstream out;
        out << row.name << ',' << inst.graph.num_vertices() << ',' << inst.graph.num_edges() << ',' << inst.budget
            << ',' << to_string(inst.variant) << ',' << reduced.graph.num_vertices() << ','
            << reduced.graph.num_edges();
        for (int r = 1; r <= 5; ++r) {
            out << ',' << counts[r];
        }
        out << ',' << millis << ',' << (run_solver ? 1 : 0) << ',' << feasible;
        row.csv = out.str();
    } catch (const std::exception &e) {
        row.error = e.what();
    }
    return row;
}

int cmd_bench(const std::string &corpus, const std::string &csv_path, int jobs) {
    if (!fs::is_directory(corpus)) {
        throw UsageError("not a directory: " + corpus);
    }
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(corpus)) {
        if (entry.is_regular_file() && entry.path().filename() != "manifest.txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            rows[i] = bench_one(files[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(1, jobs); ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    std::ostringstream out;
    out << "instance,n,m,k,variant,n_reduced,m_reduced,rule1_count,rule2_count,rule3_count,rule4_count,rule5_count,"
           "millis,solved,feasible\n";
    int status = exit_ok;
    for (const auto &row : rows) {
        if (!row.error.empty()) {
            std::cerr << row.name << ": " << row.error << '\n';
            status = exit_usage;
            continue;
        }
        out << row.csv << '\n';
    }
    write_text(csv_path, out.str());
    return status;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Trivially perfect editing: recognition, critical combs, kernelization, exact solving"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string ucd_path;
    std::string trace_path;
    std::string edits_path;
    std::string variant = "editing";
    std::string corpus;
    std::string csv_path;
    bool renumber = false;
    int k = 0;
    int jobs = 1;
    Vertex n = 0;
    int max_fanout = 4;
    int max_bag = 3;
    std::uint64_t seed = 0;

    auto *recognize = app.add_subcommand("recognize", "Test trivial perfection; print an obstruction otherwise");
    recognize->add_option("-i,--input", input, "Graph file (stdin if omitted)");
    recognize->add_option("--ucd", ucd_path, "Write the universal clique decomposition here");

    auto *combs = app.add_subcommand("combs", "Print the critical combs");
    combs->add_option("-i,--input", input, "Graph file")->required();

    auto *kern = app.add_subcommand("kernelize", "Apply reduction rules 1-5 exhaustively");
    kern->add_option("-i,--input", input, "Graph file")->required();
    kern->add_option("-k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
    kern->add_option("--variant", variant, "editing, completion or deletion")->required();
    kern->add_option("-o,--output", output, "Reduced graph (stdout if omitted)");
    kern->add_option("--trace", trace_path, "Reduction trace (JSON)");
    kern->add_flag("--renumber", renumber, "Number surviving vertices 1..n instead of keeping identifiers");

    auto *solve_cmd = app.add_subcommand("solve", "Exact bounded search");
    solve_cmd->add_option("-i,--input", input, "Graph file")->required();
    solve_cmd->add_option("-k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--variant", variant, "editing, completion or deletion")->required();

    auto *verify = app.add_subcommand("verify", "Check an edit list");
    verify->add_option("-i,--input", input, "Graph file")->required();
    verify->add_option("--edits", edits_path, "Edit list")->required();
    verify->add_option("-k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--variant", variant, "editing, completion or deletion")->required();

    auto *gen = app.add_subcommand("gen", "Generate a perturbed trivially perfect instance");
    gen->add_option("-n", n, "Vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("-k", k, "Planted edits")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--variant", variant, "editing, completion or deletion")->required();
    auto *seed_opt = gen->add_option("--seed", seed, "Seed (default: $TPK_SEED, else 1)");
    gen->add_option("-o,--output", output, "Output file (stdout if omitted)");
    gen->add_option("--max-fanout", max_fanout, "Largest number of children per UCD node")->check(CLI::Range(2, 1000));
    gen->add_option("--max-bag", max_bag, "Largest bag size")->check(CLI::Range(1, 1000));

    auto *bench = app.add_subcommand("bench", "Kernelize (and solve small budgets) over a corpus directory");
    bench->add_option("--corpus", corpus, "Directory of instances written by gen")->required();
    bench->add_option("--csv", csv_path, "CSV output")->required();
    bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*recognize) {
            return cmd_recognize(input, ucd_path);
        }
        if (*combs) {
            return cmd_combs(input);
        }
        if (*kern) {
            return cmd_kernelize(input, k, variant, output, trace_path, renumber);
        }
        if (*solve_cmd) {
            return cmd_solve(input, k, variant);
        }
        if (*verify) {
            return cmd_verify(input, edits_path, k, variant);
        }
        if (*gen) {
            return cmd_gen(n, k, variant,
                           seed_opt->count() > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt, output,
                           max_fanout, max_bag);
        }
        if (*bench) {
            return cmd_bench(corpus, csv_path, jobs);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
