#include "mis/cli.hpp"

#include "mis/bench.hpp"
#include "mis/generate.hpp"
#include "mis/graph_io.hpp"
#include "mis/pipeline.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

namespace mis {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTimeout = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

Graph load_graph(const std::string& path, const std::string& format_override) {
    GraphFormat format = format_override.empty() ? format_from_path(path)
                                                 : format_from_name(format_override);
    return parse_graph(read_file(path), format);
}

VertexSet load_solution(const std::string& path) {
    std::istringstream in(read_file(path));
    VertexSet s;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        try {
            s.push_back(std::stoi(line));
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected one vertex id per line");
        }
    }
    return s;
}

SolverOptions make_options(double timeout_seconds, int jobs) {
    SolverOptions opt;
    opt.jobs = jobs;
    opt.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(timeout_seconds));
    return opt;
}

std::vector<Strategy> parse_strategies(const std::string& spec) {
    if (spec == "all")
        return {Strategy::simple, Strategy::critical, Strategy::maxcritical, Strategy::advanced};
    std::vector<Strategy> out;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ','))
        out.push_back(strategy_from_name(token));
    if (out.empty())
        throw std::invalid_argument("no strategies given");
    return out;
}

BenchRow make_row(const std::string& name, const Graph& g, Strategy strategy,
                  const SolveReport& report) {
    BenchRow row;
    row.name = name;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.strategy = strategy_name(strategy);
    row.kernel_n = report.kernel.kernel.num_vertices();
    row.kernel_m = report.kernel.kernel.num_edges();
    row.components = report.kernel.components;
    row.k_max = report.kernel.k_max;
    row.offset = report.kernel.offset;
    row.time_kernelize_s = report.kernelize_seconds;
    if (report.status == SolveReport::Status::exact) {
        row.alpha = report.alpha;
        row.time_solve_s = report.solve_seconds;
        row.status = "exact";
    } else {
        row.status = report.status == SolveReport::Status::timeout ? "timeout" : "kernel-only";
    }
    return row;
}

std::string solution_text(const VertexSet& s) {
    std::ostringstream out;
    for (int v : s)
        out << v << '\n';
    return out.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact maximum independent sets via kernelization + branch and bound"};
    app.require_subcommand(1);

    std::string file, format, strategy_spec = "simple", out_path, solution_path, csv_path;
    std::vector<std::string> files;
    double timeout_seconds = 3600.0;
    int jobs = 1;

    auto* cmd_kernelize = app.add_subcommand("kernelize", "reduce a graph and report kernel statistics");
    cmd_kernelize->add_option("file", file)->required();
    cmd_kernelize->add_option("--strategy", strategy_spec, "simple|critical|maxcritical|advanced");
    cmd_kernelize->add_option("--format", format, "edge-list|metis|dimacs (default: by extension)");
    cmd_kernelize->add_option("--out", out_path, "write the kernel as a canonical edge list");

    auto* cmd_solve = app.add_subcommand("solve", "compute an exact maximum independent set");
    cmd_solve->add_option("file", file)->required();
    cmd_solve->add_option("--strategy", strategy_spec);
    cmd_solve->add_option("--format", format);
    cmd_solve->add_option("--timeout", timeout_seconds, "solving-phase budget in seconds");
    cmd_solve->add_option("--solution", solution_path, "write the set, one id per line");
    cmd_solve->add_option("--jobs", jobs, "parallel component workers");

    auto* cmd_bench = app.add_subcommand("bench", "compare kernelization strategies");
    cmd_bench->add_option("files", files)->required();
    cmd_bench->add_option("--strategies", strategy_spec, "comma list or 'all'");
    cmd_bench->add_option("--format", format);
    cmd_bench->add_option("--timeout", timeout_seconds);
    cmd_bench->add_option("--csv", csv_path, "also write the rows as CSV");
    cmd_bench->add_option("--jobs", jobs);

    std::string solution_file;
    auto* cmd_verify = app.add_subcommand("verify", "check a solution file against a graph");
    cmd_verify->add_option("graph", file)->required();
    cmd_verify->add_option("solution", solution_file)->required();
    cmd_verify->add_option("--format", format);

    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    auto* cmd_gen = app.add_subcommand("gen", "generate a test instance as an edge list");
    cmd_gen->add_option("kind", kind, "gnp|cycle|path|star|chordal")->required();
    cmd_gen->add_option("params", params, "gnp: n p; others: n");
    cmd_gen->add_option("--seed", seed);
    cmd_gen->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (cmd_kernelize->parsed()) {
            Graph g = load_graph(file, format);
            KernelResult kr = kernelize(g, strategy_from_name(strategy_spec));
            out << "n=" << g.num_vertices() << " m=" << g.num_edges()
                << " kernel_n=" << kr.kernel.num_vertices()
                << " kernel_m=" << kr.kernel.num_edges()
                << " components=" << kr.components << " k_max=" << kr.k_max
                << " offset=" << kr.offset << '\n';
            if (!out_path.empty())
                write_file(out_path, to_edge_list(kr.kernel));
            return kExitOk;
        }

        if (cmd_solve->parsed()) {
            Graph g = load_graph(file, format);
            SolveReport report =
                solve_exact(g, strategy_from_name(strategy_spec), make_options(timeout_seconds, jobs));
            out << "alpha=" << report.alpha;
            if (report.status != SolveReport::Status::exact)
                out << " (lower bound, timed out)";
            out << '\n';
            if (!solution_path.empty())
                write_file(solution_path, solution_text(report.mis));
            return report.status == SolveReport::Status::exact ? kExitOk : kExitTimeout;
        }

        if (cmd_bench->parsed()) {
            std::vector<BenchRow> rows;
            bool any_timeout = false;
            for (const auto& path : files) {
                Graph g = load_graph(path, format);
                for (Strategy s : parse_strategies(strategy_spec)) {
                    err << "bench: " << path << " strategy=" << strategy_name(s) << '\n';
                    SolveReport report = solve_exact(g, s, make_options(timeout_seconds, jobs));
                    any_timeout |= report.status != SolveReport::Status::exact;
                    rows.push_back(make_row(path, g, s, report));
                }
            }
            out << emit_table(rows, TableFormat::pretty);
            if (!csv_path.empty())
                write_file(csv_path, emit_table(rows, TableFormat::csv));
            return any_timeout ? kExitTimeout : kExitOk;
        }

        if (cmd_verify->parsed()) {
            Graph g = load_graph(file, format);
            VertexSet s = load_solution(solution_file);
            VerifyOutcome check = verify_solution(g, s);
            switch (check.kind) {
            case VerifyOutcome::Kind::valid:
                out << "valid independent set of size " << s.size() << '\n';
                return kExitOk;
            case VerifyOutcome::Kind::violation:
                out << "violation: edge " << check.u << " " << check.v << '\n';
                return kExitInputError;
            case VerifyOutcome::Kind::claims_mismatch:
                out << "claims-mismatch: duplicate or unknown vertex id\n";
                return kExitInputError;
            }
        }

        if (cmd_gen->parsed()) {
            auto need = [&](size_t k) {
                if (params.size() != k)
                    throw std::invalid_argument("kind '" + kind + "' expects " + std::to_string(k) +
                                                " positional parameter(s)");
            };
            Graph g;
            if (kind == "gnp") {
                need(2);
                g = generate_gnp(std::stoi(params[0]), std::stod(params[1]), seed);
            } else if (kind == "cycle") {
                need(1);
                g = generate_cycle(std::stoi(params[0]));
            } else if (kind == "path") {
                need(1);
                g = generate_path(std::stoi(params[0]));
            } else if (kind == "star") {
                need(1);
                g = generate_star(std::stoi(params[0]));
            } else if (kind == "chordal") {
                need(1);
                g = generate_chordal(std::stoi(params[0]), seed);
            } else {
                throw std::invalid_argument("unknown generator kind '" + kind + "'");
            }
            std::string text = to_edge_list(g);
            if (out_path.empty())
                out << text;
            else
                write_file(out_path, text);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace mis
