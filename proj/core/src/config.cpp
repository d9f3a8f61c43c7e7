// Copyright 2026 The lgmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lgmr/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lgmr {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::Evaluate: return "evaluate";
    case Command::Nsit: return "nsit";
    case Command::FineAudit: return "fine-audit";
    case Command::Sweep: return "sweep";
    case Command::Maximize: return "maximize";
  }
  return "unknown";
}

namespace {

// A JSON object whose keys must all be consumed.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError("'" + where() + "' must be an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  std::string name(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  template <class T>
  std::optional<T> get(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = raw(key);
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) throw ConfigError("");
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError("");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0)) {
          throw ConfigError("");
        }
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError("");
      }
      return v.get<T>();
    } catch (const std::exception&) {
      throw ConfigError("bad value for key '" + name(key) + "'");
    }
  }

  template <class T>
  T get_or(const std::string& key, T fallback) {
    return get<T>(key).value_or(fallback);
  }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!seen_.count(item.key())) throw ConfigError("unknown key '" + name(item.key()) + "'");
    }
  }

 private:
  std::string where() const { return path_.empty() ? "<root>" : path_; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Complex parse_complex(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError("bad value for key '" + key + "': expected a number or [re, im]");
}

Vector parse_vector(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ConfigError("bad value for key '" + key + "': expected an array");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = parse_complex(v[i], key);
  return out;
}

Matrix parse_matrix(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ConfigError("bad value for key '" + key + "': expected rows");
  const std::size_t n = v.size();
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n) {
      throw ConfigError("bad value for key '" + key + "': matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_complex(v[i][j], key);
    }
  }
  return out;
}

template <class E>
E pick(const std::string& value, const std::string& key,
       std::initializer_list<std::pair<const char*, E>> options) {
  for (const auto& [label, e] : options) {
    if (value == label) return e;
  }
  throw ConfigError("bad value for key '" + key + "': '" + value + "'");
}

void parse_state(Fields f, ScenarioSpec& s) {
  const std::string kind = f.get_or<std::string>("kind", "pure-random");
  s.state = pick<StateKind>(kind, f.name("kind"),
                            {{"pure-random", StateKind::PureRandom},
                             {"mixed-random", StateKind::MixedRandom},
                             {"explicit", StateKind::Explicit},
                             {"maximally-mixed", StateKind::MaximallyMixed},
                             {"basis", StateKind::Basis},
                             {"bloch", StateKind::Bloch}});
  if (f.has("vector")) s.state_vector = parse_vector(f.raw("vector"), f.name("vector"));
  if (f.has("matrix")) s.state_matrix = parse_matrix(f.raw("matrix"), f.name("matrix"));
  s.basis_index = f.get_or<std::size_t>("index", 0);
  s.bloch_theta = f.get_or<double>("theta", 0.0);
  s.bloch_phi = f.get_or<double>("phi", 0.0);
  f.finish();
}

void parse_hamiltonian(Fields f, ScenarioSpec& s) {
  const std::string kind = f.get_or<std::string>("kind", "random-hermitian");
  s.hamiltonian = pick<HamiltonianKind>(kind, f.name("kind"),
                                        {{"random-hermitian", HamiltonianKind::RandomHermitian},
                                         {"spin-precession", HamiltonianKind::SpinPrecession},
                                         {"explicit", HamiltonianKind::Explicit},
                                         {"zero", HamiltonianKind::Zero}});
  if (f.has("matrix")) s.hamiltonian_matrix = parse_matrix(f.raw("matrix"), f.name("matrix"));
  s.omega = f.get_or<double>("omega", 1.0);
  const std::string axis = f.get_or<std::string>("axis", "x");
  if (axis.size() != 1 || (axis[0] != 'x' && axis[0] != 'y' && axis[0] != 'z')) {
    throw ConfigError("bad value for key '" + f.name("axis") + "': expected x, y or z");
  }
  s.axis = axis[0];
  s.gue_scale = f.get_or<double>("scale", 1.0);
  f.finish();
}

void parse_schedule(Fields f, ScenarioSpec& s) {
  const std::string kind = f.get_or<std::string>("kind", "equal-spacing");
  s.schedule = pick<ScheduleKind>(kind, f.name("kind"),
                                  {{"explicit", ScheduleKind::Explicit},
                                   {"uniform-grid", ScheduleKind::UniformGrid},
                                   {"equal-spacing", ScheduleKind::EqualSpacing},
                                   {"random", ScheduleKind::RandomTimes}});
  if (auto t = f.get<std::vector<double>>("times")) s.times = *t;
  s.time_count = f.get_or<std::size_t>("count", s.schedule == ScheduleKind::Explicit ? s.times.size() : 3);
  s.horizon = f.get_or<double>("horizon", 1.0);
  s.spacing = f.get_or<double>("spacing", 1.0);
  s.start = f.get_or<double>("start", 0.0);
  f.finish();
}

ScenarioSpec parse_scenario(Fields f) {
  ScenarioSpec s;
  s.dim = f.get_or<std::size_t>("dim", 2);
  if (f.has("state")) parse_state(Fields(f.raw("state"), f.name("state")), s);
  if (f.has("hamiltonian")) parse_hamiltonian(Fields(f.raw("hamiltonian"), f.name("hamiltonian")), s);
  if (f.has("schedule")) parse_schedule(Fields(f.raw("schedule"), f.name("schedule")), s);
  if (f.has("decomposition")) {
    Fields d(f.raw("decomposition"), f.name("decomposition"));
    if (auto r = d.get<std::vector<std::size_t>>("ranks")) s.ranks = *r;
    d.finish();
  }
  const std::string policy = f.get_or<std::string>("policy", "luders");
  s.policy = pick<MeasurementPolicy>(policy, f.name("policy"),
                                     {{"luders", MeasurementPolicy::Luders},
                                      {"von-neumann", MeasurementPolicy::VonNeumann}});
  s.seed = f.get_or<std::uint64_t>("seed", 0);
  f.finish();
  return s;
}

SweepAxis parse_axis(Fields f) {
  SweepAxis a;
  const auto param = f.get<std::string>("parameter");
  if (!param) throw ConfigError("missing key '" + f.name("parameter") + "'");
  a.parameter = pick<SweepParameter>(*param, f.name("parameter"),
                                     {{"spacing", SweepParameter::Spacing},
                                      {"start", SweepParameter::Start},
                                      {"time", SweepParameter::Time},
                                      {"omega", SweepParameter::Omega},
                                      {"bloch_theta", SweepParameter::BlochTheta},
                                      {"bloch_phi", SweepParameter::BlochPhi}});
  a.index = f.get_or<std::size_t>("index", 0);
  const auto lo = f.get<double>("lower");
  const auto hi = f.get<double>("upper");
  if (!lo || !hi) throw ConfigError("axis needs both '" + f.name("lower") + "' and '" + f.name("upper") + "'");
  a.lower = *lo;
  a.upper = *hi;
  if (!(a.lower <= a.upper)) throw ConfigError("bad value for key '" + f.name("upper") + "': below lower");
  a.points = f.get_or<std::size_t>("points", 64);
  if (a.points == 0) throw ConfigError("bad value for key '" + f.name("points") + "': empty grid");
  f.finish();
  return a;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  Fields f(root, "");
  RunConfig c;
  const auto command = f.get<std::string>("command");
  if (!command) throw ConfigError("missing key 'command'");
  c.command = pick<Command>(*command, "command",
                            {{"evaluate", Command::Evaluate},
                             {"nsit", Command::Nsit},
                             {"fine-audit", Command::FineAudit},
                             {"sweep", Command::Sweep},
                             {"maximize", Command::Maximize}});
  if (f.has("scenario")) c.scenario = parse_scenario(Fields(f.raw("scenario"), "scenario"));
  if (auto names = f.get<std::vector<std::string>>("families")) {
    for (const auto& n : *names) {
      const auto fam = family_from_string(n);
      if (!fam) throw ConfigError("bad value for key 'families': unknown family '" + n + "'");
      c.families.push_back(*fam);
    }
  }
  c.all_flips = f.get_or<bool>("all_flips", false);
  if (f.has("batch")) {
    Fields b(f.raw("batch"), "batch");
    c.batch.count = b.get_or<std::size_t>("count", c.batch.count);
    c.batch.base_seed = b.get_or<std::uint64_t>("base_seed", c.batch.base_seed);
    b.finish();
  }
  if (f.has("axes")) {
    const json& axes = f.raw("axes");
    if (!axes.is_array()) throw ConfigError("bad value for key 'axes': expected an array");
    for (std::size_t k = 0; k < axes.size(); ++k) {
      c.axes.push_back(parse_axis(Fields(axes[k], "axes[" + std::to_string(k) + "]")));
    }
  }
  if (f.has("search")) {
    Fields s(f.raw("search"), "search");
    c.search.starts = s.get_or<std::size_t>("starts", c.search.starts);
    c.search.grid_points = s.get_or<std::size_t>("grid_points", c.search.grid_points);
    c.search.local.max_evaluations = s.get_or<std::size_t>("max_evaluations", c.search.local.max_evaluations);
    c.search.local.xtol = s.get_or<double>("xtol", c.search.local.xtol);
    s.finish();
  }
  if (f.has("output")) {
    Fields o(f.raw("output"), "output");
    c.out_dir = o.get_or<std::string>("directory", c.out_dir);
    c.stem = o.get_or<std::string>("stem", c.stem);
    o.finish();
  }
  if (f.has("tolerances")) {
    Fields t(f.raw("tolerances"), "tolerances");
    c.tol = t.get_or<double>("report", c.tol);
    c.band = t.get_or<double>("band", c.band);
    t.finish();
    if (!(c.tol >= 0.0) || !(c.band >= 0.0)) throw ConfigError("bad value for key 'tolerances': must be >= 0");
  }
  c.threads = f.get_or<unsigned>("threads", 0);
  f.finish();

  const bool needs_axes = c.command == Command::Sweep || c.command == Command::Maximize;
  if (needs_axes && c.axes.empty()) throw ConfigError("missing key 'axes' for command " + *command);
  if (c.command == Command::Sweep && c.axes.size() > 2) {
    throw ConfigError("bad value for key 'axes': sweeps take one or two axes");
  }
  if (c.command == Command::Maximize && c.families.size() != 1) {
    throw ConfigError("bad value for key 'families': maximize takes exactly one family");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace lgmr
