#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" CHEREDNIK_CLI "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json js(const std::string& args) {
    Run r = run(args);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == "cherednik-kit/1");
    return j;
}

}  // namespace

TEST_CASE("minimal norm of (1,1)") {
    Run r = run("norm-min --r 1 --shape \"1,1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "2 * (1 + 2*c0)\n");
}

TEST_CASE("arrangement for r = 2, n = 1 as json") {
    auto j = js("aspherical list --r 2 --n 1 --json");
    auto hs = j.at("hyperplanes");
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].at("kind") == "d");
    CHECK(hs[0].at("form") == nlohmann::json::array({1, 0, 1, -1}));
    int c0s = 0;
    for (const auto& h : hs) c0s += h.at("kind") == "c0";
    CHECK(c0s == 0);
}

TEST_CASE("empty arrangement is an empty array") {
    auto j = js("aspherical list --r 1 --n 1 --json");
    CHECK(j.at("hyperplanes").is_array());
    CHECK(j.at("hyperplanes").empty());
}

TEST_CASE("c0 hyperplanes carry a null l") {
    auto j = js("aspherical list --r 1 --n 2 --json");
    REQUIRE(j.at("hyperplanes").size() == 1);
    const auto& h = j.at("hyperplanes")[0];
    CHECK(h.at("kind") == "c0");
    CHECK(h.at("l").is_null());
    CHECK(h.at("k") == 1);
    CHECK(h.at("m") == 2);
}

TEST_CASE("listing is byte-identical across runs") {
    std::string args = "aspherical list --r 3 --n 4 --json";
    CHECK(run(args).out == run(args).out);
    std::string tsv = "aspherical list --r 2 --n 3 --p 2 --format tsv";
    Run a = run(tsv);
    CHECK(a.code == 0);
    CHECK(a.out == run(tsv).out);
    CHECK(a.out.rfind("kind\tk\tl\tm\tform\n", 0) == 0);
}

TEST_CASE("core-quotient decode and round trip") {
    Run r = run("core-quotient decode --r 2 --shape \"1,1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "a=0,0; quotient=1|\n");
    for (const char* lam : {"5,3,2,1", "4,1,1", "2,2", "1"})
        for (int rr : {2, 3}) {
            auto d = js(std::string("core-quotient decode --json --r ") + std::to_string(rr) + " --shape " + lam);
            std::string a;
            for (const auto& x : d.at("a")) a += (a.empty() ? "" : ",") + std::to_string(x.get<long>());
            std::string q = d.at("quotient");
            Run e = run("core-quotient encode --r " + std::to_string(rr) + " --a \"" + a + "\" --shape \"" + q + "\"");
            CHECK(e.code == 0);
            CHECK(e.out == std::string(lam) + "\n");
        }
}

TEST_CASE("order compare") {
    Run r = run("order compare --r 2 --c0 1/2 --d \"1,-1\" --a \"1|\" --b \"|1\"");
    CHECK(r.code == 0);
    CHECK(r.out == ">=_c\nequiv: no\nprime: >='_c\n");
    Run s = run("order compare --r 2 --c0 1/2 --d \"0,1\" --a \"1|\" --b \"|1\" --json");
    auto j = nlohmann::json::parse(s.out);
    CHECK(j.at("equiv") == true);
    CHECK(j.at("prime").is_null());
}

TEST_CASE("params convert") {
    Run r = run("params convert --r 2 --c0 1/2 --d \"1,-1\" --to gordon");
    CHECK(r.out == "H0 = -1\nH1 = 1\nh = -1/2\n");
    auto j = js("params convert --r 1 --c0 1/2 --to hecke --json");
    CHECK(j.at("values").at("q") == "-1/2");
}

TEST_CASE("other subcommands") {
    CHECK(run("partitions --r 2 --n 2").out == "2|\n1,1|\n1|1\n|2\n|1,1\n");
    CHECK(run("syt --shape \"2|1\"").out == "0: 1,2 | 3\n1: 1,3 | 2\n2: 2,3 | 1\n");
    CHECK(run("norm-f --shape 2,1 --mu 0,2,1 --t 0").out == "(1 - c0) * (1 + 3*c0) * (2 + c0) / (1 + 2*c0)\n");
    CHECK(run("norm-g --shape 1,1 --filling 0,1").out == "2 * (1 + 2*c0)\n");
    CHECK(run("norm-g --shape 2 --filling 0,0 --literal").out == "2\n");
    CHECK(run("norm-g --shape 2 --filling 0,0").out == "4\n");
    CHECK(run("hook --shape 1,1").code == 0);
    CHECK(run("spectrum --shape 1 --mu 3").out == "T0 = 1\n  i=1  zeta^0  z: 4\n");
    Run t = run("aspherical test --r 1 --n 2 --c0 -1/2");
    CHECK(t.out == "aspherical: yes\n  on 1 + 2*c0 = 0\n");
    CHECK(run("aspherical test --r 1 --n 2 --c0 1/3").out == "aspherical: no\n");
}

TEST_CASE("oracle verify report") {
    auto j = js("oracle verify --r 2 --n 2 --degree 2 --seed 3");
    CHECK(j.at("seed") == 3);
    bool seen_form = false;
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("passed"));
        CHECK(c.contains("seconds"));
        if (c.at("name") == "contravariant_form") seen_form = c.at("passed") == true;
    }
    CHECK(seen_form);
    std::string args = "oracle verify --r 1 --n 2 --degree 2 --no-timings";
    CHECK(run(args + " --seed 5").out == run(args, "CHEREDNIK_SEED=5").out);
    CHECK(run(args + " --seed 5").out == run(args + " --seed 5", "CHEREDNIK_SEED=6").out);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("nope").code == 2);
    CHECK(run("norm-min").code == 2);
    CHECK(run("norm-min --shape \"1,x\"").code == 2);
    CHECK(run("norm-min --r 2 --shape \"1\"").code == 2);
    CHECK(run("aspherical list --r 2 --n 2 --xi 3,0").code == 2);
    CHECK(run("partitions --r 1 --n 2 --format xml").code == 2);
    CHECK(run("order compare --r 2 --c0 -1 --a \"1|\" --b \"|1\"").code == 1);
    CHECK(run("core-quotient encode --r 2 --a 1,0 --shape \"|\"").code == 1);
    CHECK(run("norm-g --shape 1,1 --filling 1,1").code == 1);
    CHECK(run("aspherical list --r 3 --n 2 --p 3").code == 1);
}

TEST_CASE("every subcommand documents its flags") {
    const std::pair<const char*, std::vector<const char*>> subs[] = {
        {"partitions", {"--r", "--n", "--format"}},
        {"syt", {"--shape"}},
        {"spectrum", {"--shape", "--mu", "--t"}},
        {"norm-f", {"--shape", "--mu", "--c0", "--d"}},
        {"norm-g", {"--shape", "--filling", "--literal"}},
        {"norm-min", {"--shape", "--r"}},
        {"hook", {"--shape"}},
        {"aspherical list", {"--r", "--n", "--xi", "--p", "--json"}},
        {"aspherical test", {"--r", "--n", "--c0", "--d"}},
        {"order compare", {"--r", "--c0", "--d", "--a", "--b"}},
        {"core-quotient encode", {"--r", "--a", "--shape"}},
        {"core-quotient decode", {"--r", "--shape"}},
        {"oracle verify", {"--r", "--n", "--degree", "--seed", "--shape"}},
        {"params convert", {"--r", "--c0", "--d", "--to"}},
    };
    for (const auto& [sub, flags] : subs) {
        Run r = run(std::string(sub) + " --help");
        INFO(sub);
        CHECK(r.code == 0);
        for (const char* f : flags) CHECK(r.out.find(f) != std::string::npos);
    }
}
