#include "mis/bench.hpp"
#include "mis/cli.hpp"
#include "mis/graph_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace mis;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("mis_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string name(const std::string& n) const { return (path / n).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text)
        *out_text = out.str();
    return code;
}

BenchRow sample_row(const std::string& status) {
    BenchRow row;
    row.name = "g.el";
    row.n = 10;
    row.m = 18;
    row.strategy = "simple";
    row.kernel_n = 4;
    row.kernel_m = 4;
    row.components = 1;
    row.k_max = 4;
    row.offset = 3;
    row.time_kernelize_s = 0.01;
    if (status == "exact") {
        row.alpha = 5;
        row.time_solve_s = 1.25;
    }
    row.status = status;
    return row;
}

} // namespace

TEST_CASE("emit_table") {
    SUBCASE("csv with one exact row") {
        std::string text = emit_table({sample_row("exact")}, TableFormat::csv);
        std::istringstream lines(text);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        CHECK(header ==
              "name,n,m,strategy,kernel_n,kernel_m,components,k_max,offset,alpha,"
              "time_kernelize_s,time_solve_s,status");
        CHECK(row == "g.el,10,18,simple,4,4,1,4,3,5,0.01,1.25,exact");
    }
    SUBCASE("timeout rows render dashes") {
        std::string text = emit_table({sample_row("timeout")}, TableFormat::csv);
        CHECK(text.find(",-,") != std::string::npos);
        CHECK(text.find(",-,timeout") != std::string::npos);
    }
    SUBCASE("empty input emits only the header") {
        std::string text = emit_table({}, TableFormat::tsv);
        CHECK(text.find('\n') == text.size() - 1);
    }
    SUBCASE("pretty is aligned and write-only") {
        std::string text = emit_table({sample_row("exact")}, TableFormat::pretty);
        CHECK(text.find("kernel_n") != std::string::npos);
        CHECK_THROWS_AS(parse_table(text, TableFormat::pretty), std::invalid_argument);
    }
    SUBCASE("csv round-trips") {
        std::vector<BenchRow> rows = {sample_row("exact"), sample_row("timeout")};
        std::string text = emit_table(rows, TableFormat::csv);
        std::vector<BenchRow> back = parse_table(text, TableFormat::csv);
        REQUIRE(back.size() == 2);
        CHECK(emit_table(back, TableFormat::csv) == text);
        CHECK(back[0].alpha == rows[0].alpha);
        CHECK(back[1].alpha == rows[1].alpha);
        CHECK(back[0].status == "exact");
    }
}

TEST_CASE("cli solve / verify / kernelize") {
    TempDir dir;
    std::string p3 = dir.file("p3.el", "0 1\n1 2\n");

    SUBCASE("solve prints alpha and exits 0") {
        std::string out;
        CHECK(cli({"solve", p3, "--strategy", "simple"}, &out) == 0);
        CHECK(out.find("alpha=2") == 0);
    }
    SUBCASE("solve writes a solution file verify accepts") {
        std::string solution = dir.name("sol.txt");
        CHECK(cli({"solve", p3, "--strategy", "simple", "--solution", solution}) == 0);
        CHECK(slurp(solution) == "0\n2\n");
        std::string out;
        CHECK(cli({"verify", p3, solution}, &out) == 0);
        CHECK(out.find("valid") == 0);
    }
    SUBCASE("verify flags a violating pair with exit 2") {
        std::string bad = dir.file("bad.txt", "0\n1\n");
        std::string out;
        CHECK(cli({"verify", p3, bad}, &out) == 2);
        CHECK(out.find("violation: edge 0 1") == 0);
    }
    SUBCASE("kernelize reports and exports the kernel") {
        std::string kernel_path = dir.name("kernel.el");
        std::string out;
        CHECK(cli({"kernelize", p3, "--strategy", "critical", "--out", kernel_path}, &out) == 0);
        CHECK(out.find("kernel_n=0") != std::string::npos);
        Graph kernel = parse_graph(slurp(kernel_path), GraphFormat::edge_list);
        CHECK(kernel.num_vertices() == 0);
    }
    SUBCASE("unreadable files and unknown flags exit 2") {
        CHECK(cli({"solve", dir.name("missing.el")}) == 2);
        CHECK(cli({"solve", p3, "--bogus"}) == 2);
        CHECK(cli({"frobnicate"}) == 2);
    }
}

TEST_CASE("cli gen") {
    std::string out1, out2;
    CHECK(cli({"gen", "gnp", "30", "0.2", "--seed", "9"}, &out1) == 0);
    CHECK(cli({"gen", "gnp", "30", "0.2", "--seed", "9"}, &out2) == 0);
    CHECK(out1 == out2);
    CHECK(out1.find("# nodes 30") == 0);

    std::string cyc;
    CHECK(cli({"gen", "cycle", "4"}, &cyc) == 0);
    CHECK(parse_graph(cyc, GraphFormat::edge_list).num_edges() == 4);

    CHECK(cli({"gen", "blob", "4"}) == 2);
    CHECK(cli({"gen", "gnp", "4"}) == 2);
}

TEST_CASE("cli bench") {
    TempDir dir;
    std::string c4 = dir.file("c4.el", "0 1\n1 2\n2 3\n0 3\n");
    std::string csv_path = dir.name("out.csv");

    SUBCASE("kernel sizes per strategy") {
        CHECK(cli({"bench", c4, "--strategies", "simple,critical", "--timeout", "60", "--csv",
                   csv_path}) == 0);
        auto rows = parse_table(slurp(csv_path), TableFormat::csv);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].strategy == "simple");
        CHECK(rows[0].kernel_n == 0);
        CHECK(rows[1].strategy == "critical");
        CHECK(rows[1].kernel_n == 4);
        CHECK(rows[0].alpha == rows[1].alpha);
        CHECK(*rows[0].alpha == 2);
    }
    SUBCASE("forced timeout renders dashes and exits 1") {
        CHECK(cli({"bench", c4, "--strategies", "critical", "--timeout", "0", "--csv",
                   csv_path}) == 1);
        auto rows = parse_table(slurp(csv_path), TableFormat::csv);
        REQUIRE(rows.size() == 1);
        CHECK(!rows[0].alpha.has_value());
        CHECK(!rows[0].time_solve_s.has_value());
        CHECK(rows[0].status == "timeout");
    }
}
