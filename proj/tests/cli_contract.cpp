// Drives the installed command-line binary (path in argv[1]) and checks the
// exit-code contract plus byte-determinism of the structured output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;
std::string grkit;
fs::path workdir;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    fs::path of = workdir / "out.txt", ef = workdir / "err.txt";
    std::string cmd = "'" + grkit + "' " + args + " > '" + of.string() + "' 2> '" + ef.string() + "'";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(of);
    r.err = slurp(ef);
    return r;
}

void expect(bool ok, const std::string& what) {
    std::printf("%s: %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

void expect_exit(const std::string& args, int want) {
    RunResult r = run(args);
    expect(r.exit_code == want,
           "`" + args + "` exits " + std::to_string(want) + " (got " +
               std::to_string(r.exit_code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_contract <path-to-grkit>\n");
        return 2;
    }
    grkit = argv[1];
    workdir = fs::temp_directory_path() / "grkit_cli_contract";
    fs::remove_all(workdir);
    fs::create_directories(workdir);

    // exit 0: passing verifications, including partial (bounded) answers
    expect_exit("verify lemma2 --group dicyclic:4 --field 0", 0);
    expect_exit("verify lemma2 --group hsn:3,2 --field 2^2", 0);
    expect_exit("verify lemma3 --group hsn:3,4", 0);
    expect_exit("verify lemma3 --group dicyclic:2", 0);  // vacuous -> partial -> 0
    expect_exit("verify lemma7 --group dicyclic:2 --field 5", 0);
    expect_exit("lemma6 --group dicyclic:4", 0);
    expect_exit("lemma6 --builtin", 0);
    expect_exit("delta --group cyclic:8", 0);
    expect_exit("rank --group cyclic:12", 0);
    expect_exit("units --group cyclic:3 --field 2", 0);
    expect_exit("units --group cyclic:4", 0);
    expect_exit("classify --group hsn:4,4", 0);
    expect_exit("demo q16", 0);
    expect_exit("demo h38 --window 6 --cap 40", 0);
    expect_exit("--help", 0);
    expect_exit("units --group dicyclic:4 --order-of '1 + (a^-1 - a) bhat' --budget 60", 0);

    // exit 1: a failing check
    expect_exit("lemma6 --group dicyclic:6", 1);
    expect_exit("lemma6 --group cyclic:12", 1);

    // exit 2: usage problems, unknown specs, bad literals, blown budgets
    expect_exit("", 2);
    expect_exit("frobnicate", 2);
    expect_exit("verify lemma2 --group nonsense:9", 2);
    expect_exit("verify lemma2", 2);
    expect_exit("delta", 2);
    expect_exit("delta --group cyclic:4 --graph /tmp/nope.txt", 2);
    expect_exit("units --group cyclic:3 --order-of 'a + qq'", 2);
    expect_exit("units --group cyclic:20 --field 7 --budget 50", 2);
    expect_exit("lemma6 --catalog /no/such/directory", 2);
    expect_exit("verify lemma2 --group cyclic:4 --field 6", 2);

    // structured output is byte-identical across runs (no timestamps inside)
    for (const std::string args :
         {std::string("--json verify lemma2 --group dicyclic:4 --field 3"),
          std::string("--json lemma6 --builtin"), std::string("--json demo q16"),
          std::string("--json delta --group hsn:3,4")}) {
        RunResult a = run(args);
        RunResult b = run(args);
        expect(a.exit_code == 0 && a.out == b.out && !a.out.empty(),
               "`" + args + "` is byte-deterministic");
    }

    // --timing injects wall_ms and only then
    {
        RunResult plain = run("--json rank --group cyclic:5");
        RunResult timed = run("--json --timing rank --group cyclic:5");
        expect(plain.out.find("wall_ms") == std::string::npos, "no wall_ms by default");
        expect(timed.out.find("wall_ms") != std::string::npos, "--timing adds wall_ms");
    }

    // the builtin six-class search names all six conclusion groups
    {
        RunResult r = run("lemma6 --builtin");
        bool all = true;
        for (const char* name : {"H3_2", "H3_4", "H3_8", "H4_2", "H4_4", "Dic4"})
            if (r.out.find(name) == std::string::npos) all = false;
        expect(all && r.out.find("isomorphism classes = 6") != std::string::npos,
               "lemma6 --builtin names the six classes");
    }

    // demo q16 prints both units and their inverses
    {
        RunResult r = run("demo q16");
        expect(r.out.find("u inverse") != std::string::npos &&
                   r.out.find("v inverse") != std::string::npos &&
                   r.out.find("window") != std::string::npos,
               "demo q16 prints the pair, inverses, and the window report");
    }

    // table export feeds back into file: specs and --catalog ingestion
    {
        fs::path t = workdir / "h44.json";
        RunResult w = run("table --group hsn:4,4 --out '" + t.string() + "'");
        RunResult c = run("classify --group 'file:" + t.string() + "'");
        expect(w.exit_code == 0 && c.exit_code == 0 &&
                   c.out.find("clause = iii") != std::string::npos,
               "table export round-trips through file: specs");
    }

    // graph export then re-import gives the same delta
    {
        fs::path edges = workdir / "c9.txt";
        RunResult a = run("delta --group cyclic:9 --export-edges '" + edges.string() + "'");
        RunResult b = run("delta --graph '" + edges.string() + "'");
        bool same = a.out.find("doubled delta = 3") != std::string::npos &&
                    b.out.find("doubled delta = 3") != std::string::npos;
        expect(a.exit_code == 0 && b.exit_code == 0 && same,
               "edge-list export preserves the computed delta");
    }

    std::error_code ec;
    fs::remove_all(workdir, ec);
    if (failures == 0) {
        std::printf("cli contract: all checks pass\n");
        return 0;
    }
    std::printf("cli contract: %d checks FAILED\n", failures);
    return 1;
}
