#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <sys/wait.h>

#include "cli.hpp"
#include "scatlab/io.hpp"

using namespace scatlab;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "scatlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("scatlab_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST_CASE("scatter golden file")
{
    Result r = run({"scatter", "--l", "1", "1", "--dirs", "1,0", "0,1", "--order", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::filesystem::path(SCATLAB_GOLDEN_DIR) / "d11_order6.json"));
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& w : j["walls"])
        if (w["dir"] == json::array({1, 1}) && !w["incoming"].get<bool>()) {
            found = true;
            CHECK(w["fn"].dump() == R"([{"m":[0,0],"t":0,"c":"1/1"},{"m":[1,1],"t":2,"c":"1/1"}])");
        }
    CHECK(found);
}

TEST_CASE("scatter is deterministic and writes files")
{
    std::vector<std::string> args = {"scatter", "--l", "2", "3", "--dirs", "1,0", "0,1", "--order", "8"};
    Result a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto path = temp_file("d23.json");
    args.push_back("--out");
    args.push_back(path.string());
    Result c = run(args);
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    CHECK(slurp(path) == a.out);
    // the emitted diagram reloads to an equal one
    CHECK(diagram_to_json(diagram_from_json(a.out)) + "\n" == a.out);
    Result check = run({"check", "--in", path.string()});
    CHECK(check.code == 0);
    CHECK(json::parse(check.out)["consistent"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("count")
{
    Result r = run({"count", "--surface", "CP2", "--p", "8", "--q", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["N"] == 3);
    CHECK(j["wp"] == json::array({1, -3}));
    CHECK(j["nu"] == 3);
    CHECK(j["reason"] == "dense-region");
    CHECK(j["coef_poly"].dump() == R"([{"t":3,"c":"3/1"}])");
    for (const char* key : {"surface", "p", "q", "wp", "nu", "coef_poly", "N", "reason"})
        CHECK(j.contains(key));

    Result sweep1 = run({"count", "--surface", "CP2", "--max-sum", "14", "--jobs", "1"});
    Result sweep4 = run({"count", "--surface", "CP2", "--max-sum", "14", "--jobs", "4"});
    CHECK(sweep1.code == 0);
    CHECK(sweep1.out == sweep4.out);
    json arr = json::parse(sweep1.out);
    CHECK(arr.size() > 20);
    CHECK(arr[0]["p"] == 1);
    CHECK(arr[0]["q"] == 1);
}

TEST_CASE("exists, embed, dmin, orbit, reduce")
{
    json e = json::parse(run({"exists", "--surface", "CP2", "--p", "13", "--q", "2"}).out);
    CHECK(e["exists"] == true);
    CHECK(e["reason"] == "discrete-corner");

    json a = json::parse(run({"embed", "--a", "8/1"}).out);
    CHECK(a["c"] == "8/3");
    CHECK(a["regime"] == "folding");

    Result t = run({"embed", "--table", "1", "8", "3"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("a_num,a_den,c_num,c_den,regime\n", 0) == 0);
    CHECK(t.out.find("4,1,2,1,step-slope:1") != std::string::npos);

    json d = json::parse(run({"dmin", "--p", "13", "--q", "2"}).out);
    CHECK(d["d"] == 5);
    CHECK(d["certified"] == true);

    json o = json::parse(run({"orbit", "--K", "7", "--x", "2", "--steps", "2"}).out);
    CHECK(o["orbit"] == json::array({"2/1", "13/2", "89/13"}));

    json s = json::parse(run({"reduce", "--K", "7", "--p", "13", "--q", "2"}).out);
    CHECK(s["p0"] == 2);
    CHECK(s["q0"] == 1);
    json seeds = json::parse(run({"reduce", "--seeds", "--surface", "Bl4"}).out);
    CHECK(seeds["seeds"] == json::array({json::array({1, 1}), json::array({3, 2})}));
}

TEST_CASE("precondition failures exit 2")
{
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {"count", "--surface", "CP2", "--p", "4", "--q", "2"},
             {"count", "--surface", "Bl9", "--p", "2", "--q", "1"},
             {"count", "--surface", "CP2", "--p", "8", "--q", "1", "--order", "2"},
             {"scatter", "--l", "1", "1", "--dirs", "1,0", "1,0"},
             {"scatter", "--l", "1", "--dirs", "2,0"},
             {"scatter", "--l", "1", "1", "--dirs", "1,0", "0,1", "--order", "31"},
             {"embed", "--a", "1/0"},
             {"dmin", "--p", "7", "--q", "2"},
             {"bogus"},
             {}}) {
        Result r = run(args);
        CAPTURE(r.err);
        CHECK(r.code == 2);
        if (!args.empty() && args[0] != "bogus")
            CHECK(json::parse(r.err).contains("error"));
    }
}

TEST_CASE("order cap follows SCATTER_MAX_ORDER")
{
    ::setenv("SCATTER_MAX_ORDER", "3", 1);
    CHECK(cli::max_order() == 3);
    CHECK(run({"scatter", "--l", "1", "1", "--dirs", "1,0", "0,1", "--order", "4"}).code == 2);
    ::unsetenv("SCATTER_MAX_ORDER");
    CHECK(cli::max_order() == 30);
}

TEST_CASE("inconsistent diagrams exit 3")
{
    auto path = temp_file("broken.json");
    std::ofstream(path) << R"({"order":3,"walls":[)"
                           R"({"dir":[1,0],"incoming":true,"fn":[{"m":[0,0],"t":0,"c":"1/1"},{"m":[1,0],"t":1,"c":"1/1"}]},)"
                           R"({"dir":[0,1],"incoming":true,"fn":[{"m":[0,0],"t":0,"c":"1/1"},{"m":[0,1],"t":1,"c":"1/1"}]}]})";
    Result r = run({"check", "--in", path.string()});
    CHECK(r.code == 3);
    CHECK(json::parse(r.err)["error"] == "inconsistency");
    CHECK(run({"check", "--in", "/nonexistent/diagram.json"}).code == 2);

    // same contract through the real executable
    std::string cmd = std::string(SCATLAB_CLI_EXE) + " check --in " + path.string() + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 3);
    cmd = std::string(SCATLAB_CLI_EXE) + " count --surface CP2 --p 4 --q 2 >/dev/null 2>&1";
    status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
    std::filesystem::remove(path);
}
