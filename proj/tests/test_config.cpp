#include <doctest.h>

#include <string>

#include "spinguard/config.hpp"
#include "spinguard/errors.hpp"
#include "spinguard/simulation.hpp"

using namespace spinguard;

namespace {

const char* kFig1 = R"(# free vs controlled
k: 0.125
d: 0.5
period_T: 0.25
t_max: 10
dt: 0.001
initial_state: bell-psi-plus
)";

std::string message_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

int line_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("figure-1 configuration") {
  const RunConfig cfg = parse_config(kFig1);
  CHECK(cfg.couplings.k() == 0.125);
  CHECK(cfg.couplings.delta() == 0.0);
  CHECK(cfg.couplings.delta_completed());
  CHECK(cfg.couplings.d() == 0.5);
  REQUIRE(cfg.period);
  CHECK(*cfg.period == 0.25);
  CHECK(cfg.t_max == 10.0);
  CHECK(cfg.dt == 0.001);
  CHECK(cfg.initial_state.is_bell_preset());
  CHECK(cfg.modes.free);
  CHECK(cfg.modes.controlled);
  CHECK(cfg.seed == 0);
  CHECK(cfg.oracle_bias == 0.0);
}

TEST_CASE("empty configuration lists the required keys") {
  CHECK_THROWS_AS(parse_config(""), ValidationError);
  const std::string msg = message_of("");
  for (const char* key : {"k (or j1 and j2)", "d", "t_max", "dt", "initial_state", "period_T"}) {
    CHECK(msg.find(key) != std::string::npos);
  }
}

TEST_CASE("j1/j2 and k-only configurations give identical dynamics") {
  const std::string explicit_j = std::string(kFig1).replace(std::string(kFig1).find("k: 0.125"), 8,
                                                             "j1: 0.0625\nj2: 0.0625");
  RunConfig a = parse_config(kFig1);
  RunConfig b = parse_config(explicit_j);
  CHECK_FALSE(b.couplings.delta_completed());
  CHECK(b.couplings.k() == a.couplings.k());
  a.t_max = b.t_max = 2.0;
  const auto ta = run_simulate(a);
  const auto tb = run_simulate(b);
  REQUIRE(ta.samples.size() == tb.samples.size());
  for (std::size_t i = 0; i < ta.samples.size(); ++i) {
    CHECK(ta.samples[i].c_free == tb.samples[i].c_free);
    CHECK(ta.samples[i].c_controlled == tb.samples[i].c_controlled);
  }
}

TEST_CASE("parse errors carry the line number") {
  CHECK(line_of("k: 0.1\nd 0.5\n") == 2);
  CHECK(line_of("k: 0.1\n\n# comment\nbogus: 1\n") == 4);
  CHECK(line_of("k: 0.1\nk: 0.2\n") == 2);
  CHECK(line_of("k: abc\n") == 1);
  CHECK(line_of("k: 0.1x\n") == 1);
  CHECK(line_of("k:\n") == 1);
  CHECK(line_of("k: nan\n") == 1);
  CHECK(message_of("dt: 1e\n").find("'dt'") != std::string::npos);
}

TEST_CASE("validation errors") {
  const std::string base = "k: 0.125\nd: 0.5\nperiod_T: 0.25\ninitial_state: bell-psi-plus\n";
  CHECK_THROWS_AS(parse_config(base + "t_max: 1\ndt: 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "t_max: 1\ndt: -0.1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "t_max: 0.001\ndt: 0.01\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "t_max: 1\ndt: 0.1\nj1: 0.1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "t_max: 1\ndt: 0.1\nmodes: sideways\n"), ParseError);

  const std::string no_period = "k: 0.125\nd: 0.5\nt_max: 1\ndt: 0.1\ninitial_state: bell-psi-plus\n";
  CHECK_THROWS_AS(parse_config(no_period), ValidationError);
  CHECK_NOTHROW(parse_config(no_period + "modes: free\n"));
  CHECK_THROWS_AS(parse_config(no_period + "period_T: 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(no_period + "period_T: -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("j1: 0.1\nd: 0.5\nt_max: 1\ndt: 0.1\ninitial_state: bell-psi-plus\nmodes: free\n"),
                  ValidationError);
}

TEST_CASE("explicit initial states") {
  const std::string base = "k: 0.125\nd: 0.5\nperiod_T: 0.25\nt_max: 1\ndt: 0.1\n";

  const auto cfg = parse_config(base +
                                "initial_state: amplitudes\n"
                                "amplitudes: 0, (0.70710678118654752,0), (0, 0.70710678118654752), 0\n");
  REQUIRE(cfg.initial_state.is_pure());
  CHECK_FALSE(cfg.initial_state.is_bell_preset());
  const auto& psi = std::get<PureState>(cfg.initial_state.state);
  CHECK(psi[2].imag() == doctest::Approx(std::sqrt(0.5)));

  // Eight-digit input is accepted and renormalized.
  CHECK_NOTHROW(parse_config(base + "initial_state: amplitudes\namplitudes: 0 0.70710678 0.70710678 0\n"));
  CHECK_THROWS_AS(parse_config(base + "initial_state: amplitudes\namplitudes: 1 1 0 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "initial_state: amplitudes\namplitudes: 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config(base + "initial_state: amplitudes\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "initial_state: amplitudes\namplitudes: (1,0 0 0 0\n"), ParseError);

  const auto mixed = parse_config(base +
                                  "initial_state: density\n"
                                  "density: 0.25 0 0 0  0 0.25 0 0  0 0 0.25 0  0 0 0 0.25\n");
  CHECK_FALSE(mixed.initial_state.is_pure());
  CHECK(mixed.initial_state.density().matrix() == DensityMatrix::maximally_mixed().matrix());
  CHECK_THROWS_AS(parse_config(base + "initial_state: density\ndensity: 1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(base + "initial_state: density\ndensity: 1.5 0 0 0 0 -0.5 0 0 0 0 0 0 0 0 0 0\n"),
                  ValidationError);

  CHECK_THROWS_AS(parse_config(base + "initial_state: ghz\n"), ValidationError);
  CHECK_THROWS_AS(parse_config(base + "initial_state: bell-psi-plus\namplitudes: 1 0 0 0\n"), ValidationError);
}

TEST_CASE("optional keys") {
  const auto cfg = parse_config(std::string(kFig1) +
                                "modes: controlled\nseed: 42\ncsv_out: a.csv\njson_out: a.json\n"
                                "oracle_bias: 1e-6   # harness self-test\n");
  CHECK_FALSE(cfg.modes.free);
  CHECK(cfg.modes.controlled);
  CHECK(cfg.seed == 42);
  CHECK(cfg.csv_out == "a.csv");
  CHECK(cfg.json_out == "a.json");
  CHECK(cfg.oracle_bias == 1e-6);
  CHECK_THROWS_AS(parse_config(std::string(kFig1) + "seed: -3\n"), ParseError);
}

TEST_CASE("load_config") {
  CHECK_THROWS_AS(load_config("/nonexistent/spinguard.cfg"), ConfigError);
}
