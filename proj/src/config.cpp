#include "spinguard/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "spinguard/errors.hpp"

namespace spinguard {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

const std::set<std::string, std::less<>> kKnownKeys = {
    "j1",    "j2",      "k",       "d",        "period_T", "t_max", "dt",   "initial_state",
    "amplitudes", "density", "modes", "csv_out", "json_out", "seed",  "oracle_bias"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::map<std::string, Entry, std::less<>> tokenize(std::string_view text) {
  std::map<std::string, Entry, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected 'key: value', got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, colon)));
    const std::string value(trim(line.substr(colon + 1)));
    if (key.empty()) throw ParseError(line_no, "missing key before ':'");
    if (!kKnownKeys.contains(key)) throw ParseError(line_no, "unknown key '" + key + "'");
    if (value.empty()) throw ParseError(line_no, "key '" + key + "' has no value");
    if (entries.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
    entries.emplace(key, Entry{value, line_no});
  }
  return entries;
}

double parse_real(std::string_view token, const std::string& key, int line) {
  token = trim(token);
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty() || !std::isfinite(value)) {
    throw ParseError(line, "key '" + key + "': expected a finite number, got '" +
                               std::string(token) + "'");
  }
  return value;
}

// Splits on whitespace and commas, keeping "(re,im)" groups intact.
std::vector<std::string> split_list(std::string_view s, const std::string& key, int line) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0 || depth > 1) throw ParseError(line, "key '" + key + "': unbalanced parentheses");
    if (depth == 0 && (ch == ',' || ch == ' ' || ch == '\t')) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (ch != ' ' && ch != '\t') current += ch;
  }
  if (depth != 0) throw ParseError(line, "key '" + key + "': unbalanced parentheses");
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

Complex parse_complex(std::string_view token, const std::string& key, int line) {
  if (token.front() != '(') return {parse_real(token, key, line), 0.0};
  if (token.back() != ')') {
    throw ParseError(line, "key '" + key + "': malformed complex '" + std::string(token) + "'");
  }
  const auto body = token.substr(1, token.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(line, "key '" + key + "': complex entries are written (re,im)");
  }
  return {parse_real(body.substr(0, comma), key, line),
          parse_real(body.substr(comma + 1), key, line)};
}

template <std::size_t Count>
std::array<Complex, Count> parse_complex_list(const Entry& entry, const std::string& key) {
  const auto tokens = split_list(entry.value, key, entry.line);
  if (tokens.size() != Count) {
    throw ParseError(entry.line, "key '" + key + "': expected " + std::to_string(Count) +
                                     " entries, got " + std::to_string(tokens.size()));
  }
  std::array<Complex, Count> out;
  for (std::size_t i = 0; i < Count; ++i) out[i] = parse_complex(tokens[i], key, entry.line);
  return out;
}

InitialState build_initial_state(const std::map<std::string, Entry, std::less<>>& entries) {
  const Entry& preset = entries.at("initial_state");
  InitialState out;
  out.label = preset.value;
  const bool has_amplitudes = entries.contains("amplitudes");
  const bool has_density = entries.contains("density");

  if (preset.value == "bell-psi-plus") {
    if (has_amplitudes || has_density) {
      throw ValidationError("initial_state 'bell-psi-plus' takes no 'amplitudes' or 'density'");
    }
    out.state = PureState::bell_psi_plus();
    return out;
  }
  if (preset.value == "amplitudes") {
    if (!has_amplitudes) throw ValidationError("initial_state 'amplitudes' requires key 'amplitudes'");
    if (has_density) throw ValidationError("'density' given with initial_state 'amplitudes'");
    const auto v = parse_complex_list<4>(entries.at("amplitudes"), "amplitudes");
    double n2 = 0.0;
    for (const auto& a : v) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-6) {
      throw ValidationError("key 'amplitudes': squared norm " + std::to_string(n2) +
                            " is not 1 (tolerance 1e-6)");
    }
    out.state = PureState::normalized(v);
    return out;
  }
  if (preset.value == "density") {
    if (!has_density) throw ValidationError("initial_state 'density' requires key 'density'");
    if (has_amplitudes) throw ValidationError("'amplitudes' given with initial_state 'density'");
    const auto entries16 = parse_complex_list<16>(entries.at("density"), "density");
    Matrix4 m;
    for (std::size_t i = 0; i < 16; ++i) m(i / 4, i % 4) = entries16[i];
    if (hermiticity_defect(m) > 1e-8) throw ValidationError("key 'density': matrix is not Hermitian");
    const Complex tr = trace(m);
    if (std::abs(tr - 1.0) > 1e-6) {
      throw ValidationError("key 'density': trace " + std::to_string(tr.real()) + " is not 1");
    }
    m = (m + dagger(m)) * (0.5 / tr.real());
    try {
      out.state = DensityMatrix::from_matrix(m);
    } catch (const InvalidState& e) {
      throw ValidationError(std::string("key 'density': ") + e.what());
    }
    return out;
  }
  throw ValidationError("key 'initial_state': unknown preset '" + preset.value +
                        "' (expected bell-psi-plus, amplitudes or density)");
}

}  // namespace

DensityMatrix InitialState::density() const {
  if (const auto* psi = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(state);
}

RunConfig parse_config(std::string_view text) {
  const auto entries = tokenize(text);
  // Malformed values are reported before missing keys.
  std::map<std::string, double, std::less<>> reals;
  for (const char* key : {"j1", "j2", "k", "d", "period_T", "t_max", "dt", "oracle_bias"}) {
    if (const auto it = entries.find(key); it != entries.end()) {
      reals[key] = parse_real(it->second.value, key, it->second.line);
    }
  }
  auto real = [&](const std::string& key) { return reals.at(key); };

  RunConfig cfg;
  if (const auto it = entries.find("modes"); it != entries.end()) {
    cfg.modes = Modes{false, false};
    const auto names = split_list(it->second.value, "modes", it->second.line);
    for (const auto& name : names) {
      if (name == "free") {
        cfg.modes.free = true;
      } else if (name == "controlled") {
        cfg.modes.controlled = true;
      } else {
        throw ParseError(it->second.line, "key 'modes': unknown mode '" + name + "'");
      }
    }
  }

  const bool has_k = entries.contains("k");
  const bool has_j1 = entries.contains("j1");
  const bool has_j2 = entries.contains("j2");

  std::vector<std::string> missing;
  if (!has_k && !(has_j1 && has_j2)) missing.push_back(has_j1 || has_j2 ? "j1 and j2" : "k (or j1 and j2)");
  for (const char* key : {"d", "t_max", "dt", "initial_state"}) {
    if (!entries.contains(key)) missing.push_back(key);
  }
  if (cfg.modes.controlled && !entries.contains("period_T")) missing.push_back("period_T");
  if (!missing.empty()) {
    std::string msg = "missing required keys:";
    for (const auto& key : missing) msg += " " + key;
    throw ValidationError(msg);
  }
  if (has_k && (has_j1 || has_j2)) {
    throw ValidationError("give either 'k' or both 'j1' and 'j2', not both");
  }
  if (!cfg.modes.free && !cfg.modes.controlled) {
    throw ValidationError("key 'modes': at least one of free, controlled is required");
  }

  const double d = real("d");
  cfg.couplings = has_k ? CouplingParams::from_sum(real("k"), d)
                        : CouplingParams::from_exchange(real("j1"), real("j2"), d);

  cfg.period.reset();
  if (entries.contains("period_T")) {
    const double period = real("period_T");
    if (!(period > 0.0)) throw ValidationError("key 'period_T' must be > 0");
    cfg.period = period;
  }
  cfg.t_max = real("t_max");
  cfg.dt = real("dt");
  if (!(cfg.dt > 0.0)) throw ValidationError("key 'dt' must be > 0");
  if (!(cfg.t_max >= cfg.dt)) throw ValidationError("key 't_max' must be >= dt");

  cfg.initial_state = build_initial_state(entries);

  if (const auto it = entries.find("csv_out"); it != entries.end()) cfg.csv_out = it->second.value;
  if (const auto it = entries.find("json_out"); it != entries.end()) cfg.json_out = it->second.value;
  if (const auto it = entries.find("seed"); it != entries.end()) {
    const auto& v = it->second.value;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), cfg.seed);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
      throw ParseError(it->second.line, "key 'seed': expected an unsigned integer, got '" + v + "'");
    }
  }
  if (entries.contains("oracle_bias")) cfg.oracle_bias = real("oracle_bias");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace spinguard
