#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const char* kQuarterPeriod =
    "k: 0.125\nd: 0.5\nperiod_T: 0.25\nt_max: 10\ndt: 0.001\ninitial_state: bell-psi-plus\n";

struct Workspace {
  fs::path dir;

  Workspace() {
    dir = fs::temp_directory_path() / ("spinguard_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
  }
};

int run(const std::string& args) {
  const std::string cmd = std::string(SPINGUARD_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("simulate writes CSV plus a JSON mirror") {
  Workspace ws;
  const auto cfg = ws.write("quarter.cfg", kQuarterPeriod);
  const auto csv = ws.dir / "quarter.csv";
  CHECK(run("simulate --config " + cfg.string() + " --out " + csv.string()) == 0);
  REQUIRE(fs::exists(csv));
  REQUIRE(fs::exists(ws.dir / "quarter.json"));

  const std::string text = slurp(csv);
  CHECK(text.rfind("t,c_free,c_controlled\n", 0) == 0);
  const auto doc = nlohmann::json::parse(slurp(ws.dir / "quarter.json"));
  CHECK(doc["samples"].size() == static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n') - 1));
  CHECK(doc["meta"]["couplings"]["k"] == 0.125);
}

TEST_CASE("simulate is byte-for-byte reproducible") {
  Workspace ws;
  const auto cfg = ws.write("quarter.cfg", kQuarterPeriod);
  CHECK(run("simulate --config " + cfg.string() + " --out " + (ws.dir / "a.csv").string()) == 0);
  CHECK(run("simulate --config " + cfg.string() + " --out " + (ws.dir / "b.csv").string()) == 0);
  CHECK(slurp(ws.dir / "a.csv") == slurp(ws.dir / "b.csv"));
  CHECK(slurp(ws.dir / "a.json") == slurp(ws.dir / "b.json"));
}

TEST_CASE("sweep") {
  Workspace ws;
  const auto cfg = ws.write("quarter.cfg", kQuarterPeriod);
  const auto out = ws.dir / "sweep.csv";
  CHECK(run("sweep --config " + cfg.string() + " --periods 0.25,0.125,0.0625 --out " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);

  CHECK(run("sweep --config " + cfg.string() + " --out " + out.string()) == 0);
  CHECK(slurp(out) == "period_T,c_min_numeric,c_min_oracle,abs_error\n");

  CHECK(run("sweep --config " + cfg.string() + " --periods 0.25,-1 --out " + out.string()) == 1);
  CHECK(run("sweep --config " + cfg.string() + " --periods 0.25,x --out " + out.string()) == 1);
}

TEST_CASE("verify exit codes") {
  Workspace ws;
  const auto report = ws.dir / "report.json";
  CHECK(run("verify --config " + ws.write("quarter.cfg", kQuarterPeriod).string() + " --out " + report.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(report))["passed"] == true);

  const auto product = ws.write("product.cfg",
                                "k: 0.125\nd: 0.5\nperiod_T: 0.25\nt_max: 1\ndt: 0.001\n"
                                "initial_state: amplitudes\namplitudes: 1 0 0 0\n");
  CHECK(run("verify --config " + product.string()) == 1);

  const auto biased = ws.write("biased.cfg", std::string(kQuarterPeriod) + "oracle_bias: 1e-6\n");
  CHECK(run("verify --config " + biased.string() + " --out " + report.string()) == 2);
  CHECK(nlohmann::json::parse(slurp(report))["passed"] == false);

  const auto degenerate = ws.write("zero.cfg",
                                   "k: 0\nd: 0\nperiod_T: 0.25\nt_max: 1\ndt: 0.01\n"
                                   "initial_state: bell-psi-plus\n");
  CHECK(run("verify --config " + degenerate.string()) == 3);
}

TEST_CASE("seed override lands in the metadata") {
  Workspace ws;
  const auto cfg = ws.write("quarter.cfg", kQuarterPeriod);
  const auto report = ws.dir / "report.json";
  CHECK(run("verify --config " + cfg.string() + " --seed 99 --out " + report.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(report))["meta"]["seed"] == 99);
}

TEST_CASE("bad invocations exit 1") {
  Workspace ws;
  CHECK(run("simulate --config " + ws.write("broken.cfg", "k 0.1\n").string()) == 1);
  CHECK(run("simulate --config " + ws.write("empty.cfg", "").string()) == 1);
  CHECK(run("simulate") == 1);
  CHECK(run("simulate --config /nonexistent.cfg") == 1);
  CHECK(run("") == 1);
  CHECK(run("simulate --config " + ws.write("quarter.cfg", kQuarterPeriod).string() + " --out /nonexistent/dir/x.csv") == 1);
}
