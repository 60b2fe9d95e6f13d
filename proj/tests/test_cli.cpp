#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>

#include "alg/deduction.hpp"
#include "alg/io.hpp"
#include "alg/principles.hpp"

using namespace alg;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ALG_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path fixture_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "alg_cli_fixtures";
        std::filesystem::create_directories(d);
        write_algebra_file(d / "luk3.alg", make_lukasiewicz_chain(3));
        write_algebra_file(d / "godel3.alg", make_godel_chain(3));
        return d;
    }();
    return dir;
}

std::string fixture(const char* name) { return (fixture_dir() / name).string(); }

json first_record(const std::string& out) {
    auto nl = out.find('\n');
    return json::parse(out.substr(0, nl));
}

} // namespace

TEST_CASE("documented invocations") {
    RunResult semi = run("semisimple " + fixture("luk3.alg"));
    CHECK(semi.exit_code == 0);
    CHECK(semi.out.find("semisimple: true (simple)") != std::string::npos);

    RunResult lem = run("lem-check " + fixture("godel3.alg") + " --class flew --n 1..5");
    CHECK(lem.exit_code == 1);
    CHECK(lem.out.find("no n <= 5") != std::string::npos);

    RunResult chk = run("check " + fixture("luk3.alg") + " --class flew");
    CHECK(chk.exit_code == 0);

    RunResult boolchk = run("check " + fixture("godel3.alg") + " --class boolean");
    CHECK(boolchk.exit_code == 1);
    CHECK(boolchk.out.find("FAIL lem") != std::string::npos);
}

TEST_CASE("error classes exit with distinct status 2 messages") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("semisimple /nonexistent/file.alg").exit_code == 2);
    CHECK(run("il-check " + fixture("luk3.alg") + " --family bogus").exit_code == 2);
    CHECK(run("check " + fixture("luk3.alg") + " --class s4").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("enumerate --class flew --size 9 --out /tmp/never").exit_code == 2);  // cap
}

TEST_CASE("machine and text verdicts agree") {
    for (const std::string& invocation :
         {std::string("semisimple ") + fixture("godel3.alg"),
          std::string("il-check ") + fixture("luk3.alg") + " --family classical --bound 1",
          std::string("lem-check ") + fixture("luk3.alg") + " --class flew --n 1..5",
          std::string("pcp-check ") + fixture("luk3.alg") + " --join or"}) {
        RunResult text = run(invocation);
        RunResult machine = run("--machine " + invocation);
        CHECK(text.exit_code == machine.exit_code);
        CHECK(json::accept(machine.out.substr(0, machine.out.find('\n'))));
    }
}

TEST_CASE("machine witnesses replay through the module API") {
    FiniteAlgebra luk3 = make_lukasiewicz_chain(3);

    // il-check: witnessed inconsistency must re-verify
    RunResult il = run("--machine il-check " + fixture("luk3.alg") +
                       " --family classical --bound 1");
    REQUIRE(il.exit_code == 1);
    json rec = first_record(il.out);
    REQUIRE(rec["verdict"] == "FAILS");
    std::vector<int> filter = rec["witness"]["filter"].get<std::vector<int>>();
    int a = rec["witness"]["a"].get<int>();
    std::vector<int> gen = filter;
    gen.push_back(a);
    bool inconsistent = filter_generated(luk3, TranslationStyle::FL, gen).set.is_full();
    ElemSet F = ElemSet::of(3, filter);
    bool witnessed = F.contains(evaluate(luk3, Formula::negb(Formula::var("p")), {{"p", a}}));
    CHECK(inconsistent != witnessed);

    // ddt-check witness: b must lie outside Fg(F u {a}) while unwitnessed
    RunResult ddt = run("--machine ddt-check " + fixture("luk3.alg") +
                        " --family heyting-ddt --bound 1");
    REQUIRE(ddt.exit_code == 1);
    json drec = first_record(ddt.out);
    std::vector<int> df = drec["witness"]["filter"].get<std::vector<int>>();
    int da = drec["witness"]["a"].get<int>(), db = drec["witness"]["b"].get<int>();
    std::vector<int> dgen = df;
    dgen.push_back(da);
    ElemSet G = filter_generated(luk3, TranslationStyle::FL, dgen).set;
    ElemSet DF = ElemSet::of(3, df);
    bool b_in = G.contains(db);
    bool dwit = DF.contains(
        evaluate(luk3, parse_formula("p -> q"), {{"p", da}, {"q", db}}));
    CHECK(b_in != dwit);

    // consequence countermodel: premises designated, conclusion not
    RunResult cons = run("--machine consequence --catalog " + fixture_dir().string() +
                         " --gamma \"\" --phi \"p \\\\/ ~p\"");
    REQUIRE(cons.exit_code == 1);
    json crec = first_record(cons.out);
    auto valuation = crec["witness"]["valuation"].get<std::map<std::string, int>>();
    std::string matrix_name = crec["witness"]["matrix_name"];
    std::vector<FiniteAlgebra> cat = read_algebra_dir(fixture_dir());
    bool replayed = false;
    for (const FiniteAlgebra& A : cat) {
        if (A.name() != matrix_name) continue;
        ElemSet least = least_filter(A, TranslationStyle::FL).set;
        CHECK(!least.contains(evaluate(A, parse_formula("p \\/ ~p"), valuation)));
        replayed = true;
    }
    CHECK(replayed);
}

TEST_CASE("enumerate writes a loadable catalog with manifest") {
    auto out = std::filesystem::temp_directory_path() / "alg_cli_enum";
    std::filesystem::remove_all(out);
    RunResult r = run("enumerate --class flew --size 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    std::vector<FiniteAlgebra> loaded = read_algebra_dir(out);
    CHECK(loaded.size() == 2);
    CHECK(std::filesystem::exists(out / "manifest.txt"));
    RunResult use = run("consequence --catalog " + out.string() +
                        " --gamma \"p\" --phi \"~~p\"");
    CHECK(use.exit_code == 0);
    std::filesystem::remove_all(out);
}

TEST_CASE("glivenko and counterexample subcommands") {
    RunResult g = run("glivenko --weak heyting:max=3 --strong boolean2 --scheme \"~~_\" "
                      "--phi \"((p -> q) -> p) -> p\"");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("MATCH") != std::string::npos);

    RunResult luk = run("--machine luk-counterexample --n 3");
    CHECK(luk.exit_code == 0);
    json rec = first_record(luk.out);
    CHECK(rec["ok"] == true);
    CHECK(rec["eps"] == "1/4");  // ceil(sqrt(6)) = 3

    RunResult rnd = run("--seed 7 --jobs 2 glivenko --weak heyting:max=3 --strong boolean2 "
                        "--scheme \"~~_\" --random 40");
    CHECK(rnd.exit_code == 0);
    CHECK(rnd.out.find("seed 7") != std::string::npos);
    CHECK(rnd.out.find("0 exact mismatches") != std::string::npos);
}

TEST_CASE("filters, dual-il-check and cross-check subcommands") {
    RunResult f = run("filters " + fixture("godel3.alg"));
    CHECK(f.exit_code == 0);
    CHECK(f.out.find("3 deductive filters") != std::string::npos);

    RunResult dil = run("dual-il-check " + fixture("godel3.alg") + " --family classical");
    CHECK(dil.exit_code == 1);  // Heyting 3-chain fails the dual IL
    RunResult dils = run("dual-il-check " + fixture("godel3.alg") +
                         " --family classical --scope simple");
    CHECK(dils.exit_code == 0);

    RunResult cc = run("cross-check --catalog luk-chains:max=4 --class flew --n-range 1..4");
    CHECK(cc.exit_code == 0);
    CHECK(cc.out.find("all agree") != std::string::npos);

    RunResult pair = run("glivenko --pair heyting-classical --max 3 --phi \"~~p -> p\"");
    CHECK(pair.exit_code == 0);
    CHECK(pair.out.find("MATCH") != std::string::npos);
}

TEST_CASE("pcp witness replays") {
    RunResult pcp = run("--machine pcp-check " + fixture("luk3.alg") + " --join or");
    if (pcp.exit_code == 1) {
        json rec = first_record(pcp.out);
        FiniteAlgebra luk3 = make_lukasiewicz_chain(3);
        std::vector<int> filter = rec["witness"]["filter"].get<std::vector<int>>();
        int a = rec["witness"]["a"].get<int>(), b = rec["witness"]["b"].get<int>();
        std::vector<int> ga = filter, gb = filter, gj = filter;
        ga.push_back(a);
        gb.push_back(b);
        gj.push_back(evaluate(luk3, parse_formula("p \\/ q"), {{"p", a}, {"q", b}}));
        ElemSet fa = filter_generated(luk3, TranslationStyle::FL, ga).set;
        ElemSet fb = filter_generated(luk3, TranslationStyle::FL, gb).set;
        ElemSet fj = filter_generated(luk3, TranslationStyle::FL, gj).set;
        CHECK(!(fj == fa.intersect(fb)));
    } else {
        CHECK(pcp.exit_code == 0);  // Luk3 does satisfy lattice-join PCP
    }
}

TEST_CASE("rule-check and antiadmissible") {
    RunResult rc = run("rule-check --catalog heyting:max=3 --gamma \"~~p\" --phi \"p\"");
    CHECK(rc.exit_code == 1);
    RunResult anti = run("antiadmissible --catalog heyting:max=3 --gamma \"~~p\" --phi \"p\"");
    CHECK(anti.exit_code == 0);
    RunResult bot = run("--machine antiadmissible --catalog heyting:max=3 --phi \"B\"");
    CHECK(bot.exit_code == 1);
    json rec = first_record(bot.out);
    CHECK(rec["verdict"] == "FAILS");
    CHECK(rec.contains("witness"));
}

TEST_CASE("ALG_CATALOG environment variable supplies the catalog") {
    std::string cmd = "ALG_CATALOG=" + fixture_dir().string() + " " + std::string(ALG_BIN) +
                      " consequence --gamma \"p\" --phi \"~~p\" 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 256> buf;
    std::string out;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("HOLDS") != std::string::npos);
}
