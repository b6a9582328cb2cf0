#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hilden/cli.hpp"

using namespace hilden;
using nlohmann::json;

namespace {

struct RunResult {
    int status = 0;
    std::string out;
    json doc; // parsed when the run used JSON mode
};

RunResult run_job(cli::JobSpec spec) {
    std::ostringstream os;
    RunResult r;
    r.status = cli::run(spec, os);
    r.out = os.str();
    if (spec.json) r.doc = json::parse(r.out);
    return r;
}

cli::JobSpec base(cli::Subcommand sub, int g, int n) {
    cli::JobSpec spec;
    spec.subcommand = sub;
    spec.genus = g;
    spec.arcs = n;
    spec.json = true;
    return spec;
}

} // namespace

TEST_CASE("eval emits the full json document") {
    cli::JobSpec spec = base(cli::Subcommand::Eval, 0, 2);
    spec.word = "iota[1]";
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["inputs"]["subcommand"] == "eval");
    CHECK(r.doc["inputs"]["genus"] == 0);
    CHECK(r.doc["inputs"]["arcs"] == 2);
    CHECK(r.doc["inputs"]["word"] == "iota[1]");
    CHECK(r.doc["result"]["images"]["z1"] == "z1 z2 z1^-1");
    CHECK(r.doc["result"]["images"]["z2"] == "z1");
    CHECK(r.doc["result"]["images"]["z3"] == "z3");
    CHECK(r.doc["result"]["permutation"] == json::array({2, 1, 3, 4}));
    CHECK(r.doc["result"]["provenance"] == "iota[1]");
    CHECK(r.doc["diagnostics"]["pass"] == true);
    CHECK(r.doc["diagnostics"]["messages"] == json::array({"validated"}));
}

TEST_CASE("eval text output") {
    cli::JobSpec spec = base(cli::Subcommand::Eval, 0, 2);
    spec.word = "iota[1]";
    spec.json = false;
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.out.find("perm: 2 1 3 4") != std::string::npos);
    CHECK(r.out.find("z1 -> z1 z2 z1^-1") != std::string::npos);
    CHECK(r.out.find("provenance: iota[1]") != std::string::npos);
    CHECK(r.out.find("note: validated") != std::string::npos);
}

TEST_CASE("eval of the empty word prints 1 for the provenance") {
    cli::JobSpec spec = base(cli::Subcommand::Eval, 1, 1);
    spec.word = "";
    spec.json = false;
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.out.find("provenance: 1") != std::string::npos);
    CHECK(r.out.find("u1 -> u1") != std::string::npos);
}

TEST_CASE("usage failures exit 2 with a null result") {
    cli::JobSpec bad_word = base(cli::Subcommand::Eval, 0, 2);
    bad_word.word = "bogus[1]";
    RunResult r1 = run_job(bad_word);
    CHECK(r1.status == 2);
    CHECK(r1.doc["result"].is_null());
    CHECK(r1.doc["diagnostics"]["pass"] == false);
    CHECK_FALSE(r1.doc["diagnostics"]["messages"].empty());

    cli::JobSpec bad_config = base(cli::Subcommand::Eval, 0, 0);
    bad_config.word = "";
    CHECK(run_job(bad_config).status == 2);

    cli::JobSpec bad_index = base(cli::Subcommand::Eval, 0, 2);
    bad_index.word = "iota[0]";
    RunResult r3 = run_job(bad_index);
    CHECK(r3.status == 2);

    cli::JobSpec bad_motion = base(cli::Subcommand::Motion, 0, 2);
    bad_motion.word = "m[1,1]";
    RunResult r4 = run_job(bad_motion);
    CHECK(r4.status == 2);
    std::string msg = r4.doc["diagnostics"]["messages"][0].get<std::string>();
    CHECK(msg.find("m[1,1]") != std::string::npos);
}

TEST_CASE("relations subcommand reports every instance") {
    cli::JobSpec spec = base(cli::Subcommand::Relations, 0, 2);
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["result"]["all_pass"] == true);
    CHECK(r.doc["result"]["failures"] == 0);
    CHECK(r.doc["result"]["total"] == r.doc["result"]["instances"].size());
    for (const auto& inst : r.doc["result"]["instances"]) {
        CHECK(inst.contains("relation"));
        CHECK(inst.contains("detail"));
        CHECK(inst["pass"] == true);
    }

    spec.json = false;
    RunResult t = run_job(spec);
    CHECK(t.out.find("relation suite:") != std::string::npos);
    CHECK(t.out.find("0 failures") != std::string::npos);
    CHECK(t.out.find("[pass]") != std::string::npos);
}

TEST_CASE("perm subcommand decomposes the arc action") {
    cli::JobSpec spec = base(cli::Subcommand::Perm, 0, 2);
    spec.word = "lam[1]";
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["result"]["permutation"] == json::array({3, 4, 1, 2}));
    CHECK(r.doc["result"]["signed"]["perm"] == json::array({2, 1}));
    CHECK(r.doc["result"]["signed"]["signs"] == json::array({1, 1}));

    spec.word = "iota[2]";
    spec.json = false;
    RunResult t = run_job(spec);
    CHECK(t.out.find("perm: 1 2 4 3") != std::string::npos);
    CHECK(t.out.find("signed: perm: 1 2 | signs: + -") != std::string::npos);
}

TEST_CASE("member subcommand screens handle twists out") {
    cli::JobSpec good = base(cli::Subcommand::Member, 1, 1);
    good.word = "s[1]";
    RunResult r = run_job(good);
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["is_pure"] == true);
    CHECK(r.doc["result"]["kernel_omega_necessary"] == true);
    CHECK(r.doc["result"]["signed_decomposable"] == true);

    cli::JobSpec bad = base(cli::Subcommand::Member, 1, 1);
    bad.word = "tv[1]";
    RunResult f = run_job(bad);
    CHECK(f.status == 1);
    CHECK(f.doc["result"]["kernel_omega_necessary"] == false);
    CHECK(f.doc["diagnostics"]["pass"] == false);

    bad.json = false;
    RunResult ft = run_job(bad);
    CHECK(ft.out.find("membership screen: FAIL") != std::string::npos);
    CHECK(ft.out.find("error: element acts nontrivially on handle homology") !=
          std::string::npos);
}

TEST_CASE("motion subcommand reports tables and orders") {
    cli::JobSpec spec = base(cli::Subcommand::Motion, 0, 2);
    spec.word = "iota[1]";
    spec.probe = 10;
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["result"]["table"]["x1"] == "x1^-1");
    CHECK(r.doc["result"]["table"]["x2"] == "x2");
    CHECK(r.doc["result"]["is_identity"] == false);
    CHECK(r.doc["result"]["order"] == 2);
    CHECK(r.doc["inputs"]["probe"] == 10);

    spec.word = "sik[1,2]";
    spec.probe = 5;
    spec.json = false;
    RunResult t = run_job(spec);
    CHECK(t.out.find("order: none up to 5") != std::string::npos);

    spec.word = "iota[1]^2";
    RunResult ident = run_job(spec);
    CHECK(ident.out.find("identity: yes") != std::string::npos);
    CHECK(ident.out.find("order: 1") != std::string::npos);
}

TEST_CASE("plat subcommand reports presentation and homology") {
    cli::JobSpec spec = base(cli::Subcommand::Plat, 0, 2);
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["inputs"]["psi"] == "");
    CHECK(r.doc["inputs"]["sigma"] == "");
    CHECK(r.doc["result"]["h1"]["free_rank"] == 2);
    CHECK(r.doc["result"]["h1"]["torsion"] == json::array());
    CHECK(r.doc["result"]["h1"]["text"] == "Z^2");
    CHECK(r.doc["result"]["presentation"]["generators"] ==
          json::array({"m1", "m2", "mb1", "mb2"}));
    CHECK(r.doc["result"]["simplified"]["relators"] == json::array());

    spec.json = false;
    RunResult t = run_job(spec);
    CHECK(t.out.find("presentation (raw):") != std::string::npos);
    CHECK(t.out.find("H1: Z^2") != std::string::npos);
}

TEST_CASE("plat torsion is serialized as strings") {
    cli::JobSpec spec = base(cli::Subcommand::Plat, 1, 0);
    spec.psi = "tu[1]^2";
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["result"]["h1"]["free_rank"] == 0);
    CHECK(r.doc["result"]["h1"]["torsion"] == json::array({"2"}));
    CHECK(r.doc["result"]["h1"]["text"] == "Z/2");
}

TEST_CASE("plat batch runs every non-comment line") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "hilden_cli_batch_ok.txt";
    {
        std::ofstream f(path);
        f << "# two jobs, one comment, one blank line\n";
        f << "\n";
        f << "0 2 ; ;\n";
        f << "1 0 ; tu[1]^2 ;\n";
    }
    cli::JobSpec spec = base(cli::Subcommand::Plat, 0, 1);
    spec.batch_file = path.string();
    RunResult r = run_job(spec);
    fs::remove(path);
    REQUIRE(r.status == 0);
    CHECK(r.doc["inputs"]["batch"] == path.string());
    REQUIRE(r.doc["result"]["jobs"].size() == 2);
    CHECK(r.doc["result"]["jobs"][0]["line"] == 3);
    CHECK(r.doc["result"]["jobs"][0]["result"]["h1"]["text"] == "Z^2");
    CHECK(r.doc["result"]["jobs"][1]["line"] == 4);
    CHECK(r.doc["result"]["jobs"][1]["genus"] == 1);
    CHECK(r.doc["result"]["jobs"][1]["result"]["h1"]["text"] == "Z/2");
}

TEST_CASE("plat batch failures name the offending line") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "hilden_cli_batch_bad.txt";
    {
        std::ofstream f(path);
        f << "0 1 ; ;\n";
        f << "0 x ; ;\n";
    }
    cli::JobSpec spec = base(cli::Subcommand::Plat, 0, 1);
    spec.batch_file = path.string();
    RunResult r = run_job(spec);
    fs::remove(path);
    CHECK(r.status == 2);
    std::string msg = r.doc["diagnostics"]["messages"][0].get<std::string>();
    CHECK(msg.find("batch line 2") != std::string::npos);

    cli::JobSpec missing = base(cli::Subcommand::Plat, 0, 1);
    missing.batch_file = (fs::temp_directory_path() / "hilden_no_such_file.txt").string();
    CHECK(run_job(missing).status == 2);
}

TEST_CASE("coset subcommand certifies hilden right factors") {
    cli::JobSpec spec = base(cli::Subcommand::Coset, 0, 2);
    spec.sigma = "iota[1]";
    spec.epsilon = "lam[1]";
    RunResult r = run_job(spec);
    REQUIRE(r.status == 0);
    CHECK(r.doc["result"]["h1_equal"] == true);
    CHECK(r.doc["result"]["h1_sigma"]["text"] == "Z^2");
    CHECK(r.doc["inputs"]["epsilon"] == "lam[1]");

    spec.json = false;
    RunResult t = run_job(spec);
    CHECK(t.out.find("coset H1 check: PASS") != std::string::npos);

    cli::JobSpec bad = base(cli::Subcommand::Coset, 1, 1);
    bad.epsilon = "tv[1]";
    CHECK(run_job(bad).status == 2);
}

TEST_CASE("subcommand tokens round out the interface") {
    CHECK(cli::subcommand_token(cli::Subcommand::Eval) == "eval");
    CHECK(cli::subcommand_token(cli::Subcommand::Relations) == "relations");
    CHECK(cli::subcommand_token(cli::Subcommand::Perm) == "perm");
    CHECK(cli::subcommand_token(cli::Subcommand::Member) == "member");
    CHECK(cli::subcommand_token(cli::Subcommand::Motion) == "motion");
    CHECK(cli::subcommand_token(cli::Subcommand::Plat) == "plat");
    CHECK(cli::subcommand_token(cli::Subcommand::Coset) == "coset");
}

TEST_CASE("HILDEN_OUTPUT selects the default output mode") {
    const char* saved = std::getenv("HILDEN_OUTPUT");
    std::string saved_value = saved ? saved : "";

    unsetenv("HILDEN_OUTPUT");
    CHECK_FALSE(cli::default_json_output());
    setenv("HILDEN_OUTPUT", "json", 1);
    CHECK(cli::default_json_output());
    setenv("HILDEN_OUTPUT", "JSON", 1);
    CHECK(cli::default_json_output());
    setenv("HILDEN_OUTPUT", "text", 1);
    CHECK_FALSE(cli::default_json_output());
    setenv("HILDEN_OUTPUT", "", 1);
    CHECK_FALSE(cli::default_json_output());

    if (saved)
        setenv("HILDEN_OUTPUT", saved_value.c_str(), 1);
    else
        unsetenv("HILDEN_OUTPUT");
}
