#include "ruled/cli.hpp"
#include "ruled/lattice_json.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = ruled::cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string w; is >> w;)
        v.push_back(w);
    return v;
}

// One invocation per subcommand.
const std::vector<std::string> kInvocations = {
    "manifold-info --model ruled --ell 3 --genus 2",
    "pair --model rational --ell 3 --a 3,-1,-1,-1 --b 1,-1,-1,-1",
    "reflect --model rational --ell 3 --root 1,-1,-1,-1 --class 0,0,0,1",
    "orbit --model rational --ell 3 --seed 0,1,-1,0 --bound 2",
    "reduce-periods --model rational --ell 4 --periods 7/2,3/2,-5/3,1/6,1",
    "reduce-periods --model ruled --ell 2 --genus 1 --periods 2,9,1,-1",
    "reduce-class --model rational --ell 5 --class 2,-1,-1,-1,-1,-1",
    "reduce-class --model ruled --ell 3 --genus 1 --class 0,4,0,-1,0",
    "lagrangian-system --model rational --ell 5 --periods 3,1,1,1,1,1",
    "coxeter-check --model rational --ell 6",
    "coxeter-finite --system BE9",
    "crystal-check --system BD5",
    "crystal-check --system B3 --short 2 --long 0,1",
    "sw-check --k 3 --m 1,1,1,1,1,1,1,1,1,1",
    "sw-search --ell 10 --k-max 9",
    "extremal --k 7 --ell 12",
    "decompose-o12 --matrix 3,2,2;2,1,2;-2,-2,-1",
    "describe --label S2xS2",
    "describe --model ruled --ell 2 --genus 3",
};

} // namespace

TEST_CASE("documented invocations") {
    auto r = run(words("reduce-periods --model rational --ell 3 --periods 3,1,1,1 --json"));
    REQUIRE(r.code == 0);
    auto j = ruled::Json::parse(r.out);
    CHECK(j["result"]["reduced"] == ruled::Json::parse("[3,1,1,1]"));
    CHECK(j["result"]["word"].empty());

    auto s = run(words("sw-check --k 3 --m 1,1,1,1,1,1,1,1,1,1"));
    CHECK(s.code == 0);
    CHECK(s.out.find("SW-prohibited") != std::string::npos);
    CHECK(s.out.find("inequality  false") != std::string::npos);

    auto e = run(words("coxeter-finite --system E9"));
    CHECK(e.code == 0);
    CHECK(e.out.find("infinite") != std::string::npos);
    auto e8 = run(words("coxeter-finite --system E8 --json"));
    CHECK(ruled::Json::parse(e8.out)["result"]["verdict"] == "finite");
}

TEST_CASE("every subcommand round-trips through --input") {
    auto dir = std::filesystem::temp_directory_path() / "ruled_cli_test";
    std::filesystem::create_directories(dir);
    for (const auto& inv : kInvocations) {
        CAPTURE(inv);
        auto args = words(inv);
        args.push_back("--json");
        auto first = run(args);
        REQUIRE(first.code == 0);
        auto doc = ruled::Json::parse(first.out);
        REQUIRE(doc["command"] == args[0]);

        auto file = dir / (args[0] + ".json");
        std::ofstream(file) << first.out;
        auto second = run({args[0], "--input", file.string(), "--json"});
        REQUIRE(second.code == 0);
        CHECK(second.out == first.out);

        // bare parameter object on stdin
        auto third = run({args[0], "--input", "-", "--json"}, doc["input"].dump());
        REQUIRE(third.code == 0);
        CHECK(third.out == first.out);

        // text output of the replay matches the flag run as well
        auto t1 = run(words(inv));
        auto t2 = run({args[0], "--input", file.string()});
        CHECK(t1.code == 0);
        CHECK(t1.out == t2.out);
        CHECK_FALSE(t1.out.empty());
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("deterministic output") {
    for (const auto& inv : kInvocations) {
        auto a = run(words(inv + " --json"));
        auto b = run(words(inv + " --json"));
        CHECK(a.out == b.out);
    }
}

TEST_CASE("usage and validation errors exit 1") {
    CHECK(run(words("orbit --model rational --ell 2 --bogus 1")).code == 1);
    CHECK(run(words("frobnicate")).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run(words("reduce-periods --model rational --ell 3")).code == 1);
    CHECK(run(words("reduce-periods --model rational --ell 3 --periods 3.5,1,1,1")).code == 1);
    CHECK(run(words("reduce-periods --model rational --ell 3 --periods 1,1,0,0")).code == 1);
    CHECK(run(words("reduce-periods --model rational --ell 3 --genus 1 --periods 3,1,1,1")).code == 1);
    CHECK(run(words("manifold-info --model ruled --ell 3")).code == 1);
    CHECK(run(words("manifold-info --model elliptic --ell 3")).code == 1);
    CHECK(run(words("pair --model rational --ell 2 --a 1,0,0 --b 1,1")).code == 1);
    CHECK(run(words("reflect --model rational --ell 2 --root 1,0,0")).code == 1);
    CHECK(run(words("coxeter-finite --system X7")).code == 1);
    CHECK(run(words("sw-check --k 1 --m 1")).code == 1);
    CHECK(run(words("lagrangian-system --model rational --ell 3 --periods 3,1,2,0")).code == 1);
    CHECK(run(words("decompose-o12 --matrix 1,1,0;0,1,0;0,0,1")).code == 1);
    CHECK(run(words("decompose-o12 --matrix -1,0,0;0,1,0;0,0,1")).code == 1);
    CHECK(run(words("describe --label K3")).code == 1);
    CHECK(run(words("sw-search --ell 10 --k-max 100001")).code == 1);
    CHECK(run(words("crystal-check --system E6")).code == 1);
    CHECK(run(words("orbit --model rational --ell 3 --seed 0,0,0,1 --bound 2 --generators s9")).code == 1);
}

TEST_CASE("--input errors") {
    auto bad = run({"pair", "--input", "-"}, "{\"model\": {\"kind\": \"rational\", \"ell\": 2,, }");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("byte") != std::string::npos);
    CHECK(bad.err.find("column") != std::string::npos);

    auto wrong = run({"pair", "--input", "-"}, R"({"command":"orbit","input":{}})");
    CHECK(wrong.code == 1);

    auto extra = run({"manifold-info", "--input", "-"}, R"({"model":{"kind":"rational","ell":2},"x":1})");
    CHECK(extra.code == 1);
    CHECK(extra.err.find("unexpected key") != std::string::npos);

    auto floats = run({"pair", "--input", "-"},
                      R"({"model":{"kind":"rational","ell":1},"a":[1.5,0],"b":[1,0]})");
    CHECK(floats.code == 1);

    auto mixed = run({"manifold-info", "--input", "-", "--ell", "2"}, "{}");
    CHECK(mixed.code == 1);

    CHECK(run({"pair", "--input", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("help") {
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("reduce-periods") != std::string::npos);
    CHECK(run({"orbit", "--help"}).code == 0);
}

TEST_CASE("big integers survive the JSON round trip") {
    auto r = run(words("pair --model rational --ell 1 --a 123456789012345678901234567890,0 --b 1,0 --json"));
    REQUIRE(r.code == 0);
    auto j = ruled::Json::parse(r.out);
    CHECK(j["result"]["pairing"] == "123456789012345678901234567890");
    auto back = run({"pair", "--input", "-", "--json"}, r.out);
    CHECK(back.out == r.out);
}

#ifdef RULED_LATTICE_BINARY
TEST_CASE("installed binary exit codes") {
    auto status = [](const std::string& args) {
        std::string cmd = std::string(RULED_LATTICE_BINARY) + " " + args + " >/dev/null 2>&1";
        int s = std::system(cmd.c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("coxeter-finite --system E9") == 0);
    CHECK(status("coxeter-finite --system E9 --nope") == 1);
    CHECK(status("sw-check --k 3 --m 1,1,1,1,1,1,1,1,1,1") == 0);
    CHECK(status("reduce-periods --model rational --ell 3 --periods 1,2") == 1);
}
#endif
