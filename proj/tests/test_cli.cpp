#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

std::string cli_path;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json payload(const std::string& out) {
    auto pos = out.find('{');
    REQUIRE(pos != std::string::npos);
    return json::parse(out.substr(pos));
}

}  // namespace

TEST_CASE("enumerate subcommand: counts, manifest shape, digest") {
    auto r = run_cli("enumerate --b 2 --m 3 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 8) == "count 7\n");
    json j = payload(r.out);
    CHECK(j["result"]["count"] == 7);
    CHECK(j["manifest"]["command"] == "enumerate");
    CHECK(j["manifest"]["library_version"] == "0.1.0");
    CHECK(j["manifest"]["candidates_examined"] == 7);
    CHECK(j["manifest"]["result_digest"].get<std::string>().size() == 16);

    CHECK(payload(run_cli("enumerate --b 2 --m 3 --n 3").out)["result"]["count"] == 1);
    CHECK(payload(run_cli("enumerate --b 1 --m 5 --n 2").out)["result"]["count"] == 10);

    json lv = payload(run_cli("enumerate --b 2 --m 4 --levels 0,2").out);
    CHECK(lv["result"]["count"] == 4);
    CHECK(lv["manifest"]["parameters"]["levels"] == json::array({0, 2}));
}

TEST_CASE("classify subcommand: expected canonical forms") {
    json mn = payload(run_cli("classify --mode er --m 6 --n 2 --gen min").out)["result"];
    CHECK(mn["status"] == "witness");
    CHECK(mn["I"] == json::array({0}));
    CHECK(mn["verified"] == true);

    json cs = payload(run_cli("classify --mode er --m 6 --n 2 --gen constant").out)["result"];
    CHECK(cs["I"] == json::array());
    CHECK(cs["X"] == json::array({0, 1, 2, 3, 4, 5}));

    json np = payload(
        run_cli("classify --mode er --m 5 --n 2 --gen sum-parity --min-witness 5").out);
    CHECK(np["result"]["status"] == "none");

    json ml =
        payload(run_cli("classify --mode milliken --b 2 --m 4 --n 1 --gen by-min-level").out);
    CHECK(ml["result"]["status"] == "witness");
    CHECK(ml["result"]["nls"]["N"] == json::array());
    CHECK(ml["result"]["nls"]["L"] == json::array({0}));

    json inj = payload(run_cli("classify --mode milliken --b 2 --m 4 --n 1 --gen injective").out);
    CHECK(inj["result"]["nls"]["N"] == json::array({"e"}));
    CHECK(inj["result"]["nls"]["L"] == json::array());

    json cn = payload(run_cli("classify --mode milliken --b 2 --m 4 --n 1 --gen constant").out);
    CHECK(cn["result"]["nls"]["N"] == json::array());
    CHECK(cn["result"]["nls"]["L"] == json::array());
}

TEST_CASE("witness subcommand: pigeonhole, level products, dichotomy") {
    json pw =
        payload(run_cli("witness --kind pigeonhole --b 2 --m 4 --n 1 --k 2 --gen level-parity").out);
    CHECK(pw["result"]["status"] == "witness");
    CHECK(pw["result"]["T"]["levels"] == json::array({0, 2}));

    json hl =
        payload(run_cli("witness --kind hl --b 2 --m 4 --p 2 --k 2 --gen common-level-parity").out);
    CHECK(hl["result"]["status"] == "witness");
    CHECK(hl["result"]["trees"].size() == 2);

    json a4 = payload(run_cli("witness --kind a4 --b 2 --m 5 --pred max-level-even --prefix e").out);
    CHECK(a4["result"]["status"] == "witness");
    CHECK(a4["result"]["side"] == "outside");

    json red = payload(run_cli("witness --kind a4 --b 2 --m 5 --pred all --prefix \"\"").out);
    CHECK(red["result"]["status"] == "witness");
    CHECK(red["result"]["side"] == "inside");
}

TEST_CASE("axioms subcommand: clean run and mutated run") {
    json ok = payload(run_cli("axioms --seed 7 --trials 10 --depth 4").out)["result"];
    CHECK(ok["total_instances"] == 80);
    CHECK(ok["total_violations"] == 0);

    json bad = payload(run_cli("axioms --seed 7 --trials 10 --depth 4 --mutate fin-leq").out);
    CHECK(bad["result"]["total_violations"].get<int>() >= 1);
    CHECK(bad["result"]["mutated"] == true);
}

TEST_CASE("export-dot subcommand: layout and highlighting") {
    auto r = run_cli("export-dot --b 2 --m 3 --nodes e,00,11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph tree") != std::string::npos);
    std::size_t gold = 0, labels = 0;
    for (std::size_t p = 0; (p = r.out.find("fillcolor=gold", p)) != std::string::npos; ++p) ++gold;
    for (std::size_t p = 0; (p = r.out.find("label=", p)) != std::string::npos; ++p) ++labels;
    CHECK(gold == 3);
    CHECK(labels == 7);

    auto prod = run_cli("export-dot --b 2 --m 2 --d 2 --nodes e --nodes 0");
    CHECK(prod.out.find("cluster_0") != std::string::npos);
    CHECK(prod.out.find("cluster_1") != std::string::npos);
}

TEST_CASE("exit codes and byte-stable reruns") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("enumerate --b 2 --m 3 --format nope").exit_code == 2);
    CHECK(run_cli("witness --kind a4 --b 2 --m 5 --pred unknown").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);

    for (const char* args :
         {"enumerate --b 2 --m 3 --n 2", "classify --mode milliken --b 2 --m 4 --n 1 --gen seeded-random --seed 11",
          "axioms --seed 3 --trials 5 --depth 4"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - (argc > 1 ? 1 : 0), argv);
    return ctx.run();
}
