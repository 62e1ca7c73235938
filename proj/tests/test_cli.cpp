#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "nspec/cli.hpp"

using namespace nspec;

namespace {

RunResult run_expr(Command c, const std::string& expr) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input = expr;
  return run(cfg);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("commands") {
    CHECK(parse_command("spectrum") == Command::spectrum);
    CHECK(parse_command("random") == Command::random);
    CHECK_FALSE(parse_command("frobnicate").has_value());
    CHECK(command_name(Command::hodge) == "hodge");
  }

  TEST_CASE("spectrum report") {
    RunResult r = run_expr(Command::spectrum, "x^15+y^12+z^13+x^4*y^2+x^2*y^4+x^6*z^3+x^3*z^6+y^3*z+y*z^3");
    CHECK(r.exit_code == 0);
    const auto& defect = r.report["defect"];
    REQUIRE(defect.size() == 15);
    CHECK(defect[0]["alpha"] == "16/15");
    CHECK(defect[7]["alpha"] == "3/2");
    CHECK(defect[7]["mult"] == 1);
    CHECK(r.report["routes_agree"] == true);
    CHECK(r.report["zeta_identity"]["ok"] == true);
  }

  TEST_CASE("hodge report") {
    RunResult r = run_expr(Command::hodge, "x^3+y^2*z");
    CHECK(r.exit_code == 0);
    CHECK(r.report["spectrum"] == nlohmann::json::parse(R"([{"alpha":"4/3","mult":1},{"alpha":"5/3","mult":1}])"));
    CHECK(r.report["yomdin_crosscheck"]["ok"] == true);
    RunResult iso = run_expr(Command::hodge, "x^4+y^4+z^4+x*y*z");
    CHECK(iso.exit_code == 0);
    CHECK(iso.report["method"] == "isolated");
  }

  TEST_CASE("exit codes") {
    RunResult ns = run_expr(Command::spectrum, "x^2+y^2+x*z+y*z+z^4");
    CHECK(ns.exit_code == 1);
    CHECK(ns.report["error"]["kind"] == "hypothesis");
    CHECK(ns.report["error"]["message"].get<std::string>().find("not simplicial") != std::string::npos);
    CHECK(run_expr(Command::spectrum, "x^3+y^2*z").exit_code == 1);
    CHECK(run_expr(Command::spectrum, "x^^2").exit_code == 2);
    CHECK(run_expr(Command::zeta, R"({"n":2})").exit_code == 2);
    RunConfig missing;
    missing.command = Command::pairs;
    missing.input = "/nonexistent/input.txt";
    missing.input_is_path = true;
    CHECK(run(missing).exit_code == 2);
    RunConfig no_seed;
    no_seed.command = Command::random;
    CHECK(run(no_seed).exit_code == 2);
  }

  TEST_CASE("file input and JSON support input") {
    const char* path = "nspec_cli_test_input.json";
    {
      std::ofstream out(path);
      out << R"({"n":3,"support":[[4,0,0],[0,4,0],[0,0,4],[1,1,1]]})";
    }
    RunConfig cfg;
    cfg.command = Command::pairs;
    cfg.input = path;
    cfg.input_is_path = true;
    RunResult r = run(cfg);
    std::remove(path);
    CHECK(r.exit_code == 0);
    CHECK(r.report["equal"] == true);
    CHECK(r.report["jordan"]["n2_unipotent"] == 1);
    CHECK(r.report["jordan"]["findings"].empty());
  }

  TEST_CASE("zeta report") {
    RunResult r = run_expr(Command::zeta, "x^3+y^3");
    CHECK(r.exit_code == 0);
    CHECK(r.report["m"] ==
          nlohmann::json::parse(R"([{"alpha":"0","mult":2},{"alpha":"1/3","mult":1},{"alpha":"2/3","mult":1}])"));
    CHECK(r.report["zeta_identity"]["ok"] == true);
  }

  TEST_CASE("check report") {
    RunResult r = run_expr(Command::check, "x^4+y^4+z^4+x*y*z");
    CHECK(r.exit_code == 0);
    CHECK(r.report["summary"].value("FAIL", 0) == 0);
    CHECK(r.report["summary"].value("PASS", 0) >= 25);
    RunResult h = run_expr(Command::check, "x^3+y^2*z");
    CHECK(h.exit_code == 0);
    bool saw = false;
    for (const auto& c : h.report["checks"]) {
      if (c["id"] == "yomdin_crosscheck") {
        saw = true;
        CHECK(c["status"] == "PASS");
      }
    }
    CHECK(saw);
  }

  TEST_CASE("reports are deterministic") {
    for (Command c : {Command::spectrum, Command::pairs, Command::check}) {
      CHECK(run_expr(c, "x^5+y^6+z^7+x^2*y^2*z").report.dump() ==
            run_expr(c, "x^5+y^6+z^7+x^2*y^2*z").report.dump());
    }
    RunConfig cfg;
    cfg.command = Command::random;
    cfg.seed = 1;
    cfg.count = 5;
    RunResult a = run(cfg), b = run(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.report["supports"].size() == 5);
  }
}
