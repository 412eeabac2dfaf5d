// Copyright 2026 The lindblad-fidelity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lf/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>

#include "lf/fidelity.hpp"
#include "lf/gates.hpp"
#include "lf/pauli.hpp"
#include "lf/theory.hpp"

#ifndef LF_VERSION
#define LF_VERSION "dev"
#endif

namespace lf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) fail(path + "." + key, "unknown field");
  }
}

double get_number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path + "." + key, "must be finite");
  return x;
}

std::uint64_t get_u64(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

int get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

std::vector<int> get_qubits(const json& obj, const std::string& path, int num_qubits) {
  std::vector<int> qubits;
  if (obj.contains("qubit")) {
    qubits.push_back(get_int(obj.at("qubit"), path + ".qubit"));
  }
  if (obj.contains("qubits")) {
    if (!qubits.empty()) fail(path, "give either 'qubit' or 'qubits', not both");
    const json& arr = obj.at("qubits");
    if (!arr.is_array()) fail(path + ".qubits", "expected an array of integers");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      qubits.push_back(get_int(arr[i], path + ".qubits[" + std::to_string(i) + "]"));
    }
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= num_qubits) {
      fail(path + (obj.contains("qubit") ? ".qubit" : ".qubits[" + std::to_string(i) + "]"),
           "qubit index " + std::to_string(qubits[i]) + " out of range for n=" +
               std::to_string(num_qubits));
    }
  }
  return qubits;
}

const std::set<std::string> kChannelKinds = {"relaxation", "dephasing",
                                             "collective_relaxation",
                                             "collective_dephasing", "two_photon"};

ChannelSpec parse_channel(const json& obj, const std::string& path, int num_qubits) {
  if (!obj.is_object()) fail(path, "expected an object");
  reject_unknown_keys(obj, path, {"kind", "rate", "qubit", "qubits"});
  if (!obj.contains("kind") || !obj.at("kind").is_string()) {
    fail(path + ".kind", "missing or not a string");
  }
  ChannelSpec spec;
  spec.kind = obj.at("kind").get<std::string>();
  if (!kChannelKinds.contains(spec.kind)) {
    fail(path + ".kind", "unknown channel kind '" + spec.kind +
                             "' (expected relaxation, dephasing, collective_relaxation, "
                             "collective_dephasing or two_photon)");
  }
  if (!obj.contains("rate")) fail(path + ".rate", "missing");
  spec.rate = get_number(obj, "rate", path);
  if (spec.rate < 0.0) fail(path + ".rate", "must be non-negative");
  spec.qubits = get_qubits(obj, path, num_qubits);
  const bool local = spec.kind == "relaxation" || spec.kind == "dephasing";
  if (!local && !spec.qubits.empty()) {
    fail(path + ".qubits", "channel kind '" + spec.kind + "' always acts on all qubits");
  }
  if (spec.kind == "two_photon" && num_qubits != 2) {
    fail(path + ".kind", "two_photon requires n = 2");
  }
  if (local && spec.qubits.empty()) {
    for (int q = 0; q < num_qubits; ++q) spec.qubits.push_back(q);
  }
  return spec;
}

GateSpec parse_gate(const json& v, const std::string& path, int num_qubits,
                    std::uint64_t scenario_seed) {
  GateSpec gate;
  gate.seed = scenario_seed;
  if (v.is_string()) {
    gate.name = v.get<std::string>();
  } else if (v.is_object()) {
    reject_unknown_keys(v, path, {"name", "qubits", "qubit", "seed", "segments"});
    if (v.contains("segments")) {
      if (v.contains("name") && v.at("name") != "schedule") {
        fail(path + ".name", "explicit segments use name 'schedule' or no name");
      }
      gate.name = "schedule";
      const json& segs = v.at("segments");
      if (!segs.is_array() || segs.empty()) {
        fail(path + ".segments", "expected a non-empty array");
      }
      for (std::size_t s = 0; s < segs.size(); ++s) {
        const std::string spath = path + ".segments[" + std::to_string(s) + "]";
        const json& seg = segs[s];
        if (!seg.is_object()) fail(spath, "expected an object");
        reject_unknown_keys(seg, spath, {"duration", "hamiltonian"});
        if (!seg.contains("duration")) fail(spath + ".duration", "missing");
        SegmentSpec spec;
        spec.duration = get_number(seg, "duration", spath);
        if (spec.duration < 0.0) fail(spath + ".duration", "must be non-negative");
        const json& terms = seg.contains("hamiltonian") ? seg.at("hamiltonian") : json::array();
        if (!terms.is_array()) fail(spath + ".hamiltonian", "expected an array of Pauli terms");
        for (std::size_t t = 0; t < terms.size(); ++t) {
          const std::string tpath = spath + ".hamiltonian[" + std::to_string(t) + "]";
          const json& term = terms[t];
          if (!term.is_object() || !term.contains("pauli") || !term.at("pauli").is_string()) {
            fail(tpath, "expected {\"pauli\": string, \"coeff\": number}");
          }
          reject_unknown_keys(term, tpath, {"pauli", "coeff"});
          PauliTerm pt{term.at("pauli").get<std::string>(),
                       term.contains("coeff") ? get_number(term, "coeff", tpath) : 1.0};
          try {
            if (PauliString::from_str(pt.pauli).num_qubits() != num_qubits) {
              fail(tpath + ".pauli", "length must equal n=" + std::to_string(num_qubits));
            }
          } catch (const CapacityError&) {
            fail(tpath + ".pauli", "length must equal n=" + std::to_string(num_qubits));
          } catch (const ValidationError& e) {
            if (std::string(e.what()).starts_with(tpath)) throw;
            fail(tpath + ".pauli", e.what());
          }
          spec.hamiltonian.push_back(std::move(pt));
        }
        gate.segments.push_back(std::move(spec));
      }
      return gate;
    }
    if (!v.contains("name") || !v.at("name").is_string()) {
      fail(path + ".name", "missing or not a string");
    }
    gate.name = v.at("name").get<std::string>();
    if (v.contains("seed")) gate.seed = get_u64(v.at("seed"), path + ".seed");
    gate.qubits = get_qubits(v, path, num_qubits);
  } else {
    fail(path, "expected a gate name or object");
  }

  if (gate.name == "haar-random") {
    if (!gate.qubits.empty()) fail(path + ".qubits", "haar-random acts on all qubits");
    return gate;
  }
  int arity = 0;
  try {
    arity = named_gate_arity(gate.name);
  } catch (const ValidationError&) {
    fail(path + (v.is_object() ? ".name" : ""),
         "unknown gate '" + gate.name +
             "' (expected identity, x90, x180, z180, h, cz, cnot, haar-random or segments)");
  }
  if (arity > num_qubits) {
    fail(path, "gate '" + gate.name + "' needs " + std::to_string(arity) + " qubits");
  }
  if (gate.qubits.empty()) {
    for (int q = 0; q < arity; ++q) gate.qubits.push_back(q);
  }
  if (static_cast<int>(gate.qubits.size()) != arity) {
    fail(path + ".qubits", "gate '" + gate.name + "' acts on " + std::to_string(arity) +
                               " qubit(s)");
  }
  if (arity == 2 && gate.qubits[0] == gate.qubits[1]) {
    fail(path + ".qubits", "target qubits must differ");
  }
  return gate;
}

Evaluation parse_evaluation(const json& v, const std::string& path) {
  if (v == "predict") return Evaluation::kPredict;
  if (v == "simulate") return Evaluation::kSimulate;
  if (v == "both") return Evaluation::kBoth;
  fail(path, "expected one of predict, simulate, both");
}

std::string evaluation_name(Evaluation e) {
  switch (e) {
    case Evaluation::kPredict: return "predict";
    case Evaluation::kSimulate: return "simulate";
    case Evaluation::kBoth: return "both";
  }
  return "both";
}

ScenarioConfig parse_scenario(const json& obj, const std::string& path,
                              const json& defaults, const RunOptions& options,
                              std::size_t index) {
  if (!obj.is_object()) fail(path, "expected an object");
  reject_unknown_keys(obj, path, {"schema", "name", "n", "gate", "noise", "tau",
                                  "evaluation", "samples", "seed"});
  auto lookup = [&](const std::string& key) -> const json* {
    if (obj.contains(key)) return &obj.at(key);
    if (defaults.is_object() && defaults.contains(key)) return &defaults.at(key);
    return nullptr;
  };

  ScenarioConfig sc;
  sc.name = "scenario-" + std::to_string(index);
  if (obj.contains("name")) {
    if (!obj.at("name").is_string()) fail(path + ".name", "expected a string");
    sc.name = obj.at("name").get<std::string>();
  }

  if (!obj.contains("n")) fail(path + ".n", "missing qubit count");
  sc.num_qubits = get_int(obj.at("n"), path + ".n");
  if (sc.num_qubits < 1 || sc.num_qubits > kMaxQubits) {
    throw CapacityError(path + ".n: must be between 1 and " + std::to_string(kMaxQubits));
  }

  if (options.seed_override) {
    sc.seed = *options.seed_override;
  } else if (const json* s = lookup("seed")) {
    sc.seed = get_u64(*s, obj.contains("seed") ? path + ".seed" : "seed");
  } else {
    sc.seed = fallback_seed();
  }

  if (const json* e = lookup("evaluation")) {
    sc.evaluation = parse_evaluation(*e, obj.contains("evaluation") ? path + ".evaluation"
                                                                    : "evaluation");
  }

  std::size_t samples = kDefaultSamples;
  if (const json* s = lookup("samples")) {
    const std::string spath = obj.contains("samples") ? path + ".samples" : "samples";
    samples = get_u64(*s, spath);
    if (samples < 1000) fail(spath, "Monte Carlo needs at least 1000 samples");
  }
  sc.samples = std::max<std::size_t>(
      1000, static_cast<std::size_t>(std::llround(samples * options.sample_scale)));

  sc.gate = parse_gate(obj.contains("gate") ? obj.at("gate") : json("identity"),
                       path + ".gate", sc.num_qubits, sc.seed);

  if (obj.contains("noise")) {
    const json& noise = obj.at("noise");
    if (!noise.is_array()) fail(path + ".noise", "expected an array");
    for (std::size_t i = 0; i < noise.size(); ++i) {
      sc.noise.push_back(parse_channel(noise[i], path + ".noise[" + std::to_string(i) + "]",
                                       sc.num_qubits));
    }
  }

  double segment_total = 0.0;
  for (const SegmentSpec& s : sc.gate.segments) segment_total += s.duration;
  if (obj.contains("tau")) {
    sc.tau = get_number(obj, "tau", path);
    if (sc.tau < 0.0) fail(path + ".tau", "must be non-negative");
    if (!sc.gate.segments.empty() &&
        std::abs(sc.tau - segment_total) > 1e-12 * std::max(1.0, sc.tau)) {
      fail(path + ".tau", "does not match the sum of segment durations");
    }
  } else if (!sc.gate.segments.empty()) {
    sc.tau = segment_total;
  } else {
    fail(path + ".tau", "missing gate duration");
  }
  return sc;
}

std::string fmt(double x, int precision = 10) {
  std::ostringstream out;
  out << std::setprecision(precision) << x;
  return out.str();
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::uint64_t fallback_seed() {
  const char* env = std::getenv("LF_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("LF_SEED: expected an unsigned integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ValidationError("LF_SEED: value out of range");
  }
}

std::vector<ScenarioConfig> parse_config(const json& config, const RunOptions& options) {
  if (!config.is_object()) fail("config", "expected a JSON object");
  if (config.contains("schema") && config.at("schema") != kSchemaId) {
    fail("schema", std::string("expected \"") + kSchemaId + "\"");
  }
  std::vector<ScenarioConfig> out;
  if (config.contains("scenarios")) {
    reject_unknown_keys(config, "config",
                        {"schema", "scenarios", "seed", "samples", "evaluation"});
    const json& arr = config.at("scenarios");
    if (!arr.is_array() || arr.empty()) fail("scenarios", "expected a non-empty array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(parse_scenario(arr[i], "scenarios[" + std::to_string(i) + "]", config,
                                   options, i));
    }
  } else {
    out.push_back(parse_scenario(config, "config", json::object(), options, 0));
  }
  return out;
}

GateSchedule build_schedule(const ScenarioConfig& sc) {
  const GateSpec& g = sc.gate;
  if (g.name == "schedule") {
    const std::size_t d = dim_for_qubits(sc.num_qubits);
    GateSchedule schedule(sc.num_qubits);
    for (const SegmentSpec& seg : g.segments) {
      Operator h = Operator::Zero(d, d);
      for (const PauliTerm& t : seg.hamiltonian) {
        h += t.coeff * materialize(PauliString::from_str(t.pauli));
      }
      schedule.append({std::move(h), seg.duration});
    }
    return schedule;
  }
  if (g.name == "haar-random") return haar_random_gate(sc.num_qubits, sc.tau, g.seed);
  return named_gate(g.name, sc.num_qubits, g.qubits, sc.tau);
}

NoiseModel build_noise_model(const ScenarioConfig& sc) {
  NoiseModel model(sc.num_qubits);
  for (const ChannelSpec& ch : sc.noise) {
    if (ch.kind == "relaxation") {
      for (int q : ch.qubits) model.add(relaxation(sc.num_qubits, q, ch.rate));
    } else if (ch.kind == "dephasing") {
      for (int q : ch.qubits) model.add(dephasing(sc.num_qubits, q, ch.rate));
    } else if (ch.kind == "collective_relaxation") {
      model.add(collective_relaxation(sc.num_qubits, ch.rate));
    } else if (ch.kind == "collective_dephasing") {
      model.add(collective_dephasing(sc.num_qubits, ch.rate));
    } else if (ch.kind == "two_photon") {
      model.add(two_photon(sc.num_qubits, ch.rate));
    } else {
      throw ValidationError("unknown channel kind '" + ch.kind + "'");
    }
  }
  return model;
}

ScenarioResult run_scenario(const ScenarioConfig& sc, std::size_t index) {
  const GateSchedule schedule = build_schedule(sc);
  const NoiseModel model = build_noise_model(sc);

  ScenarioResult r;
  r.index = index;
  r.name = sc.name;
  r.num_qubits = sc.num_qubits;
  r.tau = sc.tau;
  r.gate = sc.gate.name;
  r.seed = sc.seed;
  r.gamma_tau = model.total_nominal_rate() * sc.tau;

  const FidelityPrediction first = predict_first_order(model, sc.tau);
  r.max_gamma_tau = first.max_gamma_tau;
  r.expansion_warning = first.expansion_warning;

  if (sc.evaluation != Evaluation::kSimulate) {
    r.predicted_first_order = first.fbar;
    for (const ChannelTerm& t : first.terms) {
      r.terms.push_back({t.label, t.rate, t.delta_f, t.contribution});
    }
    const bool pi_rotation = sc.num_qubits == 1 && (r.gate == "x180" || r.gate == "z180");
    bool local_only = true;
    double gamma1 = 0.0;
    double gamma_phi = 0.0;
    for (const ChannelSpec& ch : sc.noise) {
      if (ch.kind == "relaxation") gamma1 += ch.rate;
      else if (ch.kind == "dephasing") gamma_phi += ch.rate;
      else local_only = false;
    }
    if (pi_rotation && local_only) {
      r.predicted_second_order =
          second_order_pi_rotation(r.gate == "x180" ? RotationAxis::kX : RotationAxis::kZ,
                                   gamma1, gamma_phi, sc.tau)
              .fbar;
    }
  }

  if (sc.evaluation != Evaluation::kPredict) {
    r.simulated_exact = avg_fidelity_exact(schedule, model);
    const FidelityEstimate mc = avg_fidelity_monte_carlo(schedule, model, sc.seed, sc.samples);
    r.simulated_monte_carlo = MonteCarloResult{mc.mean, mc.std_error, mc.samples};
  }

  if (r.simulated_exact && r.predicted_first_order) {
    r.residual = *r.simulated_exact - *r.predicted_first_order;
    if (r.gamma_tau > 0.0) r.residual_over_gammatau_sq = *r.residual / (r.gamma_tau * r.gamma_tau);
  }
  return r;
}

FidelityReport run_config(const json& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<ScenarioConfig> scenarios = parse_config(config, options);

  FidelityReport report;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    report.scenarios.push_back(run_scenario(scenarios[i], i));
  }
  report.config_hash = config_hash(config);
  report.version = LF_VERSION;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const FidelityReport& report) {
  json scenarios = json::array();
  for (const ScenarioResult& r : report.scenarios) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      terms.push_back({{"label", t.label},
                       {"rate", t.rate},
                       {"delta_f", t.delta_f},
                       {"contribution", t.contribution}});
    }
    json mc = nullptr;
    if (r.simulated_monte_carlo) {
      mc = {{"mean", r.simulated_monte_carlo->mean},
            {"std_error", r.simulated_monte_carlo->std_error},
            {"samples", r.simulated_monte_carlo->samples}};
    }
    scenarios.push_back({{"index", r.index},
                         {"name", r.name},
                         {"n", r.num_qubits},
                         {"tau", r.tau},
                         {"gate", r.gate},
                         {"seed", r.seed},
                         {"gamma_tau", r.gamma_tau},
                         {"max_gamma_tau", r.max_gamma_tau},
                         {"expansion_warning", r.expansion_warning},
                         {"predicted_first_order", optional_number(r.predicted_first_order)},
                         {"predicted_second_order", optional_number(r.predicted_second_order)},
                         {"simulated_exact", optional_number(r.simulated_exact)},
                         {"simulated_monte_carlo", mc},
                         {"residual", optional_number(r.residual)},
                         {"residual_over_gammatau_sq",
                          optional_number(r.residual_over_gammatau_sq)},
                         {"terms", terms}});
  }
  return {{"schema", kSchemaId},
          {"scenarios", scenarios},
          {"metadata",
           {{"config_hash", report.config_hash},
            {"version", report.version},
            {"eigen_version", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                  std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                  std::to_string(EIGEN_MINOR_VERSION)},
            {"wall_time_seconds", report.wall_time_seconds}}}};
}

std::string to_csv(const FidelityReport& report) {
  std::ostringstream out;
  out << "index,name,n,tau,gate,seed,gamma_tau,predicted_first_order,"
         "predicted_second_order,simulated_exact,mc_mean,mc_std_error,mc_samples,"
         "residual,residual_over_gammatau_sq,expansion_warning\n";
  auto cell = [](const std::optional<double>& v) { return v ? fmt(*v, 17) : std::string(); };
  for (const ScenarioResult& r : report.scenarios) {
    std::string name = r.name;
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      name = quoted + "\"";
    }
    out << r.index << ',' << name << ',' << r.num_qubits << ',' << fmt(r.tau, 17) << ','
        << r.gate << ',' << r.seed << ',' << fmt(r.gamma_tau, 17) << ','
        << cell(r.predicted_first_order) << ',' << cell(r.predicted_second_order) << ','
        << cell(r.simulated_exact) << ',';
    if (r.simulated_monte_carlo) {
      out << fmt(r.simulated_monte_carlo->mean, 17) << ','
          << fmt(r.simulated_monte_carlo->std_error, 17) << ','
          << r.simulated_monte_carlo->samples;
    } else {
      out << ",,";
    }
    out << ',' << cell(r.residual) << ',' << cell(r.residual_over_gammatau_sq) << ','
        << (r.expansion_warning ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string format_table(const FidelityReport& report) {
  std::ostringstream out;
  auto cell = [](const std::optional<double>& v) { return v ? fmt(*v, 10) : std::string("-"); };
  std::size_t name_w = 10, gate_w = 6;
  for (const ScenarioResult& r : report.scenarios) {
    name_w = std::max(name_w, r.name.size() + 2);
    gate_w = std::max(gate_w, r.gate.size() + 2);
  }
  const int nw = static_cast<int>(name_w), gw = static_cast<int>(gate_w);
  out << std::left << std::setw(4) << "#" << std::setw(nw) << "scenario" << std::setw(gw)
      << "gate" << std::setw(12) << "gamma*tau" << std::setw(16) << "F predicted"
      << std::setw(16) << "F exact" << std::setw(26) << "F monte carlo" << "residual\n";
  for (const ScenarioResult& r : report.scenarios) {
    std::string mc = "-";
    if (r.simulated_monte_carlo) {
      mc = fmt(r.simulated_monte_carlo->mean, 8) + " +- " +
           fmt(r.simulated_monte_carlo->std_error, 2);
    }
    out << std::left << std::setw(4) << r.index << std::setw(nw) << r.name << std::setw(gw)
        << r.gate << std::setw(12) << fmt(r.gamma_tau, 4) << std::setw(16)
        << cell(r.predicted_first_order) << std::setw(16) << cell(r.simulated_exact)
        << std::setw(26) << mc << cell(r.residual)
        << (r.expansion_warning ? "  [warning: gamma*tau > 0.1, expansion untrustworthy]"
                                : "")
        << '\n';
  }
  return out.str();
}

std::vector<std::string> validate_report(const json& report) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };
  auto nullable_number = [](const json& v) { return v.is_null() || v.is_number(); };

  if (!report.is_object()) return {"report: expected an object"};
  require(report.value("schema", "") == kSchemaId, "schema: expected lindblad-fidelity/v1");
  for (const auto& [key, value] : report.items()) {
    require(key == "schema" || key == "scenarios" || key == "metadata",
            "report." + key + ": unknown field");
  }
  if (!report.contains("scenarios") || !report.at("scenarios").is_array()) {
    errors.push_back("scenarios: expected an array");
  } else {
    const json& arr = report.at("scenarios");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "scenarios[" + std::to_string(i) + "]";
      const json& s = arr[i];
      if (!s.is_object()) {
        errors.push_back(p + ": expected an object");
        continue;
      }
      static const std::vector<std::string> required = {
          "index", "name", "n", "tau", "gate", "seed", "gamma_tau", "max_gamma_tau",
          "expansion_warning", "predicted_first_order", "predicted_second_order",
          "simulated_exact", "simulated_monte_carlo", "residual",
          "residual_over_gammatau_sq", "terms"};
      bool complete = true;
      for (const std::string& key : required) {
        if (!s.contains(key)) {
          errors.push_back(p + "." + key + ": missing");
          complete = false;
        }
      }
      for (const auto& [key, value] : s.items()) {
        require(std::find(required.begin(), required.end(), key) != required.end(),
                p + "." + key + ": unknown field");
      }
      if (!complete) continue;
      require(s.at("index").is_number_unsigned() && s.at("index") == i, p + ".index: expected " + std::to_string(i));
      require(s.at("name").is_string(), p + ".name: expected a string");
      require(s.at("n").is_number_integer() && s.at("n").get<int>() >= 1 &&
                  s.at("n").get<int>() <= kMaxQubits,
              p + ".n: expected an integer in [1, 6]");
      require(s.at("tau").is_number() && s.at("tau").get<double>() >= 0.0,
              p + ".tau: expected a non-negative number");
      require(s.at("gate").is_string(), p + ".gate: expected a string");
      require(s.at("seed").is_number_unsigned(), p + ".seed: expected an unsigned integer");
      require(s.at("gamma_tau").is_number() && s.at("gamma_tau").get<double>() >= 0.0,
              p + ".gamma_tau: expected a non-negative number");
      require(s.at("max_gamma_tau").is_number(), p + ".max_gamma_tau: expected a number");
      require(s.at("expansion_warning").is_boolean(), p + ".expansion_warning: expected a boolean");
      for (const char* key : {"predicted_first_order", "predicted_second_order",
                              "simulated_exact", "residual", "residual_over_gammatau_sq"}) {
        require(nullable_number(s.at(key)), p + "." + key + ": expected a number or null");
      }
      const json& mc = s.at("simulated_monte_carlo");
      if (!mc.is_null()) {
        require(mc.is_object() && mc.contains("mean") && mc.at("mean").is_number() &&
                    mc.contains("std_error") && mc.at("std_error").is_number() &&
                    mc.contains("samples") && mc.at("samples").is_number_unsigned() &&
                    mc.size() == 3,
                p + ".simulated_monte_carlo: expected {mean, std_error, samples}");
      }
      if (s.at("residual").is_number()) {
        require(s.at("simulated_exact").is_number() && s.at("predicted_first_order").is_number() &&
                    s.at("residual").get<double>() ==
                        s.at("simulated_exact").get<double>() -
                            s.at("predicted_first_order").get<double>(),
                p + ".residual: must equal simulated_exact - predicted_first_order");
      }
      if (!s.at("terms").is_array()) {
        errors.push_back(p + ".terms: expected an array");
      } else {
        for (std::size_t t = 0; t < s.at("terms").size(); ++t) {
          const json& term = s.at("terms")[t];
          require(term.is_object() && term.size() == 4 && term.contains("label") &&
                      term.at("label").is_string() && term.contains("rate") &&
                      term.at("rate").is_number() && term.contains("delta_f") &&
                      term.at("delta_f").is_number() && term.contains("contribution") &&
                      term.at("contribution").is_number(),
                  p + ".terms[" + std::to_string(t) +
                      "]: expected {label, rate, delta_f, contribution}");
        }
      }
    }
  }
  if (!report.contains("metadata") || !report.at("metadata").is_object()) {
    errors.push_back("metadata: expected an object");
  } else {
    const json& m = report.at("metadata");
    require(m.contains("config_hash") && m.at("config_hash").is_string() &&
                m.at("config_hash").get<std::string>().size() == 16,
            "metadata.config_hash: expected 16 hex digits");
    require(m.contains("version") && m.at("version").is_string(),
            "metadata.version: expected a string");
    require(m.contains("eigen_version") && m.at("eigen_version").is_string(),
            "metadata.eigen_version: expected a string");
    require(m.contains("wall_time_seconds") && m.at("wall_time_seconds").is_number(),
            "metadata.wall_time_seconds: expected a number");
    require(m.size() == 4, "metadata: unexpected fields");
  }
  return errors;
}

std::string config_hash(const json& config) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace lf
