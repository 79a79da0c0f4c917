#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const fs::path kWorkDir = [] {
  fs::path d = fs::temp_directory_path() / "masslin-cli-test";
  fs::create_directories(d);
  return d;
}();

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const fs::path capture = kWorkDir / "capture.txt";
  const std::string cmd = std::string(MASSLIN_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::ostringstream body;
  body << in.rdbuf();
  r.output = body.str();
  return r;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = kWorkDir / name;
  std::ofstream out(p);
  out << text;
  return p;
}

const std::string kSquare = R"({
  "n": 2,
  "conormals": [[-1, 0], [0, -1], [1, 0], [0, 1]],
  "offsets": [0, 0, 1, 1]
})";

const std::string kNonDelzant = R"({
  "n": 2,
  "conormals": [[-1, 0], [0, -1], [1, 2]],
  "offsets": [0, 0, 2]
})";

const std::string kBadOffsets = R"({
  "n": 2,
  "conormals": [[-1, 0], [0, -1], [1, 1]],
  "offsets": [0, 0, "1/0"]
})";

// Inline --family arguments, single-quoted for the shell.
const std::string kTrapezoid =
    R"('{"family": "hirzebruch", "k": 1, "tau": 2, "lambda": 1}')";

const std::string kBundle =
    R"('{"family": "delta-p-bundle", "p": 2, "a": [1, 0], "lambda": 1, "tau": 1}')";

}  // namespace

TEST_CASE("validate accepts a Delzant polytope") {
  const fs::path p = write_file("square.json", kSquare);
  const RunResult r = run("validate --input " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"delzant\": true") != std::string::npos);
  CHECK(r.output.find("\"vertex_count\": 4") != std::string::npos);
}

TEST_CASE("validate rejects a non-Delzant polytope with exit 2") {
  const fs::path p = write_file("bad.json", kNonDelzant);
  const RunResult r = run("validate --input " + p.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("\"delzant\": false") != std::string::npos);
}

TEST_CASE("malformed input exits 3") {
  const fs::path p = write_file("malformed.json", kBadOffsets);
  CHECK(run("validate --input " + p.string()).exit_code == 3);
  const fs::path q = write_file("notjson.json", "{{{{");
  CHECK(run("validate --input " + q.string()).exit_code == 3);
}

TEST_CASE("validate reports family parameter readings") {
  const RunResult r = run("validate --family " + kBundle);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("parameter_readings") != std::string::npos);
}

TEST_CASE("invariant computes the bundle value") {
  const RunResult r = run("invariant --family " + kBundle + " --b 1,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"value\": \"-3/4\"") != std::string::npos);
}

TEST_CASE("invariant requires a direction") {
  const RunResult r = run("invariant --family " + kBundle);
  CHECK(r.exit_code == 3);
}

TEST_CASE("invariant rejects non-Delzant input unless formal") {
  const fs::path p = write_file("bad.json", kNonDelzant);
  CHECK(run("invariant --input " + p.string() + " --b 1,0").exit_code == 2);
  const RunResult r =
      run("invariant --input " + p.string() + " --b 1,0 --formal");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"formal\": true") != std::string::npos);
}

TEST_CASE("mass-linear decides both ways with exit 0") {
  const RunResult yes = run("mass-linear --family " + kTrapezoid + " --b 2,1");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("\"mass_linear\": true") != std::string::npos);
  CHECK(yes.output.find("coefficients") != std::string::npos);

  const RunResult no = run("mass-linear --family " + kTrapezoid + " --b 1,0");
  CHECK(no.exit_code == 0);
  CHECK(no.output.find("\"mass_linear\": false") != std::string::npos);
  CHECK(no.output.find("witness_offsets") != std::string::npos);
}

TEST_CASE("sweep emits matching closed forms and outside rows") {
  const RunResult r =
      run("sweep --family " + kTrapezoid +
          " --b 1,0 --grid 'tau=1..3step1;lambda=1..1step1'");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "tau,lambda,status,cm_dot_b,invariant,closed_form_invariant,match");
  std::string row;
  std::size_t ok_rows = 0, outside_rows = 0;
  while (std::getline(lines, row)) {
    CHECK(row.find(",false") == std::string::npos);
    if (row.find(",ok,") != std::string::npos) ++ok_rows;
    if (row.find(",outside,") != std::string::npos) ++outside_rows;
  }
  // tau = 1 collapses sigma = tau - lambda to 0: outside the chamber.
  CHECK(ok_rows == 2);
  CHECK(outside_rows == 1);
}

TEST_CASE("sweep json format") {
  const RunResult r =
      run("sweep --family " + kTrapezoid +
          " --b 1,0 --grid 'tau=2..2step1;lambda=1..1step1' --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"invariant\": \"-2/9\"") != std::string::npos);
  CHECK(r.output.find("\"match\": true") != std::string::npos);
}

TEST_CASE("verify runs a suite and rejects unknown names") {
  CHECK(run("verify lemma-moments").exit_code == 0);
  CHECK(run("verify bogus").exit_code == 3);
}

TEST_CASE("--out writes the report to a file") {
  const fs::path p = write_file("square.json", kSquare);
  const fs::path out = kWorkDir / "report.json";
  std::error_code ec;
  fs::remove(out, ec);
  const RunResult r =
      run("validate --input " + p.string() + " --out " + out.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(out));
  std::ifstream in(out);
  std::ostringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("\"delzant\": true") != std::string::npos);
}

TEST_CASE("repeat runs are byte identical") {
  const std::string cmd = "mass-linear --family " + kTrapezoid + " --b 1,0";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);
}

TEST_CASE("decimal flag adds approximations") {
  const RunResult r =
      run("invariant --family " + kTrapezoid + " --b 1,0 --decimal");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("value_approx") != std::string::npos);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("invariant --help").exit_code == 0);
}
