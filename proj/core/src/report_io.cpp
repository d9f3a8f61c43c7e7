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


#include "lgmr/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace lgmr {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// ---------------------------------------------------------------------------
// Writer: nlohmann's own dump uses shortest round-trip output, so numbers
// are printed here instead.

void write_string(std::string& out, const std::string& s) { out += json(s).dump(); }

void write(std::string& out, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, item.key());
        out += ": ";
        write(out, item.value(), depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k > 0) out += ", ";
          write(out, j[k], depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) out += ",\n";
        out += pad;
        write(out, j[k], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

double read_double(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::vector<double> read_doubles(const json& j) {
  std::vector<double> out;
  for (const auto& e : j) out.push_back(read_double(e));
  return out;
}

// ---------------------------------------------------------------------------
// Enumerations

const char* sense_name(Sense s) {
  switch (s) {
    case Sense::GreaterEq: return "ge";
    case Sense::LessEq: return "le";
    case Sense::Within: return "within";
    case Sense::Zero: return "zero";
  }
  return "ge";
}

Sense sense_from(const std::string& s) {
  for (Sense v : {Sense::GreaterEq, Sense::LessEq, Sense::Within, Sense::Zero}) {
    if (s == sense_name(v)) return v;
  }
  throw std::invalid_argument("bundle_from_json: unknown sense '" + s + "'");
}

Family family_from(const std::string& s) {
  const auto f = family_from_string(s);
  if (!f) throw std::invalid_argument("bundle_from_json: unknown family '" + s + "'");
  return *f;
}

LudersClass luders_from(const std::string& s) {
  for (LudersClass c : {LudersClass::Satisfied, LudersClass::Standard, LudersClass::BeyondLuders,
                        LudersClass::BelowAlgebraicFloor}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("bundle_from_json: unknown Lueders class '" + s + "'");
}

SweepParameter parameter_from(const std::string& s) {
  for (SweepParameter p : {SweepParameter::Spacing, SweepParameter::Start, SweepParameter::Time,
                           SweepParameter::Omega, SweepParameter::BlochTheta, SweepParameter::BlochPhi}) {
    if (s == to_string(p)) return p;
  }
  throw std::invalid_argument("bundle_from_json: unknown sweep parameter '" + s + "'");
}

// ---------------------------------------------------------------------------
// Sections

json report_json(const ConditionReport& r) {
  json j;
  j["id"] = r.id.to_string();
  j["family"] = to_string(r.id.family);
  j["times"] = r.id.times;
  j["variant"] = r.id.variant;
  j["indices"] = r.id.indices;
  j["lhs"] = r.lhs;
  j["threshold"] = r.threshold;
  if (r.sense == Sense::Within) j["upper"] = r.upper;
  j["sense"] = sense_name(r.sense);
  j["margin"] = r.margin;
  j["satisfied"] = r.satisfied;
  return j;
}

ConditionReport report_from(const json& j) {
  ConditionReport r;
  r.id.family = family_from(j.at("family").get<std::string>());
  r.id.times = j.at("times").get<std::string>();
  r.id.variant = j.at("variant").get<std::string>();
  r.id.indices = j.at("indices").get<std::vector<std::size_t>>();
  r.lhs = read_double(j.at("lhs"));
  r.threshold = read_double(j.at("threshold"));
  if (j.contains("upper")) r.upper = read_double(j.at("upper"));
  r.sense = sense_from(j.at("sense").get<std::string>());
  r.margin = read_double(j.at("margin"));
  r.satisfied = j.at("satisfied").get<bool>();
  return r;
}

json interference_json(const std::string& label, const InterferenceTable& t) {
  json entries = json::array();
  for (std::size_t n = 0; n < t.first_outcomes(); ++n) {
    for (std::size_t np = n + 1; np < t.first_outcomes(); ++np) {
      for (std::size_t m = 0; m < t.final_outcomes(); ++m) entries.push_back({n, np, m, t(n, np, m)});
    }
  }
  return {{"pair", label},
          {"first_outcomes", t.first_outcomes()},
          {"final_outcomes", t.final_outcomes()},
          {"independent", t.independent_count()},
          {"entries", entries}};
}

std::pair<std::string, InterferenceTable> interference_from(const json& j) {
  InterferenceTable t(j.at("first_outcomes").get<std::size_t>(), j.at("final_outcomes").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    t.entry(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>()) = read_double(e[3]);
  }
  return {j.at("pair").get<std::string>(), std::move(t)};
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }
std::optional<bool> optional_bool_from(const json& j) {
  return j.is_null() ? std::nullopt : std::optional<bool>(j.get<bool>());
}

json audit_json(const AuditReport& a) {
  json records = json::array();
  for (const auto& r : a.records) {
    records.push_back({{"seed", r.seed},
                       {"lg_verdict", r.lg_verdict},
                       {"lg_full_verdict", r.lg_full_verdict},
                       {"feasible", r.feasible},
                       {"worst_lg_margin", r.worst_lg_margin},
                       {"worst_full_margin", r.worst_full_margin},
                       {"in_band", r.in_band},
                       {"mismatch", r.mismatch},
                       {"full_mismatch", r.full_mismatch}});
  }
  return {{"scenarios", a.records.size()},
          {"robust_mismatches", a.robust_mismatches},
          {"band_excluded", a.band_excluded},
          {"full_robust_mismatches", a.full_robust_mismatches},
          {"infeasible", a.infeasible},
          {"records", records}};
}

AuditReport audit_from(const json& j) {
  AuditReport a;
  a.robust_mismatches = j.at("robust_mismatches").get<std::size_t>();
  a.band_excluded = j.at("band_excluded").get<std::size_t>();
  a.full_robust_mismatches = j.at("full_robust_mismatches").get<std::size_t>();
  a.infeasible = j.at("infeasible").get<std::size_t>();
  for (const auto& e : j.at("records")) {
    AuditRecord r;
    r.seed = e.at("seed").get<std::uint64_t>();
    r.lg_verdict = e.at("lg_verdict").get<bool>();
    r.lg_full_verdict = e.at("lg_full_verdict").get<bool>();
    r.feasible = e.at("feasible").get<bool>();
    r.worst_lg_margin = read_double(e.at("worst_lg_margin"));
    r.worst_full_margin = read_double(e.at("worst_full_margin"));
    r.in_band = e.at("in_band").get<bool>();
    r.mismatch = e.at("mismatch").get<bool>();
    r.full_mismatch = e.at("full_mismatch").get<bool>();
    a.records.push_back(r);
  }
  return a;
}

json sweep_json(const SweepResult& s) {
  json axes = json::array();
  for (const auto& a : s.axes) {
    axes.push_back({{"parameter", to_string(a.parameter)},
                    {"index", a.index},
                    {"lower", a.lower},
                    {"upper", a.upper},
                    {"points", a.points}});
  }
  json families = json::array();
  for (Family f : s.families) families.push_back(to_string(f));
  json points = json::array();
  for (const auto& p : s.points) points.push_back({{"coords", p.coords}, {"worst", p.worst}});
  json j{{"axes", axes}, {"families", families}, {"points", points}};
  if (s.extremum) {
    j["extremum"] = {{"value", s.extremum->value},
                     {"coords", s.extremum->coords},
                     {"seed", s.extremum->seed},
                     {"family", to_string(s.extremum->family)},
                     {"condition", s.extremum->condition}};
  }
  return j;
}

SweepResult sweep_from(const json& j) {
  SweepResult s;
  for (const auto& a : j.at("axes")) {
    s.axes.push_back({parameter_from(a.at("parameter").get<std::string>()), a.at("index").get<std::size_t>(),
                      read_double(a.at("lower")), read_double(a.at("upper")), a.at("points").get<std::size_t>()});
  }
  for (const auto& f : j.at("families")) s.families.push_back(family_from(f.get<std::string>()));
  for (const auto& p : j.at("points")) s.points.push_back({read_doubles(p.at("coords")), read_doubles(p.at("worst"))});
  if (j.contains("extremum")) {
    const json& e = j.at("extremum");
    s.extremum = Extremum{read_double(e.at("value")), read_doubles(e.at("coords")), e.at("seed").get<std::uint64_t>(),
                          family_from(e.at("family").get<std::string>()), e.at("condition").get<std::string>()};
  }
  return s;
}

json extremum_json(const ExtremumRecord& e) {
  return {{"margin", e.margin},         {"parameters", e.parameters}, {"seed", e.seed},
          {"family", to_string(e.family)}, {"condition", e.condition},  {"evaluations", e.evaluations}};
}

ExtremumRecord extremum_from(const json& j) {
  ExtremumRecord e;
  e.margin = read_double(j.at("margin"));
  e.parameters = read_doubles(j.at("parameters"));
  e.seed = j.at("seed").get<std::uint64_t>();
  e.family = family_from(j.at("family").get<std::string>());
  e.condition = j.at("condition").get<std::string>();
  e.evaluations = j.at("evaluations").get<std::size_t>();
  return e;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string bundle_to_json(const ReportBundle& b) {
  json root;
  const auto& m = b.metadata;
  root["metadata"] = {{"command", m.command}, {"seed", m.seed},   {"version", m.version},
                      {"timestamp", m.timestamp}, {"dim", m.dim}, {"times", m.times},
                      {"policy", m.policy}};
  if (!b.reports.empty()) {
    json reports = json::array();
    for (const auto& r : b.reports) reports.push_back(report_json(r));
    root["reports"] = reports;
  }
  if (!b.interference.empty()) {
    json tables = json::array();
    for (const auto& [label, t] : b.interference) tables.push_back(interference_json(label, t));
    root["interference"] = tables;
  }
  if (!b.nsit.empty()) {
    json nsit = json::array();
    for (const auto& n : b.nsit) {
      nsit.push_back({{"label", n.label}, {"rank", n.rank}, {"independent", n.independent},
                      {"complete", n.rank == n.independent}});
    }
    root["nsit_completeness"] = nsit;
  }
  if (b.classification) {
    const auto& c = *b.classification;
    root["classification"] = {{"weak", optional_bool(c.weak)},
                              {"intermediate", optional_bool(c.intermediate)},
                              {"strong", optional_bool(c.strong)},
                              {"missing", c.missing}};
  }
  if (!b.luders.empty()) {
    json l = json::array();
    for (const auto& [id, c] : b.luders) l.push_back({{"id", id}, {"class", to_string(c)}});
    root["luders"] = l;
  }
  if (b.audit) root["audit"] = audit_json(*b.audit);
  if (b.sweep) root["sweep"] = sweep_json(*b.sweep);
  if (b.extremum) root["extremum"] = extremum_json(*b.extremum);
  std::string out;
  write(out, root, 0);
  out += "\n";
  return out;
}

ReportBundle bundle_from_json(std::string_view text) {
  const json root = json::parse(text);
  ReportBundle b;
  const json& m = root.at("metadata");
  b.metadata.command = m.at("command").get<std::string>();
  b.metadata.seed = m.at("seed").get<std::uint64_t>();
  b.metadata.version = m.at("version").get<std::string>();
  b.metadata.timestamp = m.at("timestamp").get<std::string>();
  b.metadata.dim = m.at("dim").get<std::size_t>();
  b.metadata.times = read_doubles(m.at("times"));
  b.metadata.policy = m.at("policy").get<std::string>();
  if (root.contains("reports")) {
    for (const auto& r : root.at("reports")) b.reports.push_back(report_from(r));
  }
  if (root.contains("interference")) {
    for (const auto& t : root.at("interference")) b.interference.push_back(interference_from(t));
  }
  if (root.contains("nsit_completeness")) {
    for (const auto& n : root.at("nsit_completeness")) {
      b.nsit.push_back({n.at("label").get<std::string>(), n.at("rank").get<std::size_t>(),
                        n.at("independent").get<std::size_t>()});
    }
  }
  if (root.contains("classification")) {
    const json& c = root.at("classification");
    MrClass mc;
    mc.weak = optional_bool_from(c.at("weak"));
    mc.intermediate = optional_bool_from(c.at("intermediate"));
    mc.strong = optional_bool_from(c.at("strong"));
    mc.missing = c.at("missing").get<std::vector<std::string>>();
    b.classification = mc;
  }
  if (root.contains("luders")) {
    for (const auto& l : root.at("luders")) {
      b.luders.emplace_back(l.at("id").get<std::string>(), luders_from(l.at("class").get<std::string>()));
    }
  }
  if (root.contains("audit")) b.audit = audit_from(root.at("audit"));
  if (root.contains("sweep")) b.sweep = sweep_from(root.at("sweep"));
  if (root.contains("extremum")) b.extremum = extremum_from(root.at("extremum"));
  return b;
}

std::string reports_to_csv(std::span<const ConditionReport> reports) {
  std::string out = "id,family,lhs,margin,satisfied\n";
  for (const auto& r : reports) {
    out += csv_field(r.id.to_string()) + "," + to_string(r.id.family) + "," + format_double(r.lhs) + "," +
           format_double(r.margin) + "," + (r.satisfied ? "true" : "false") + "\n";
  }
  return out;
}

std::string sweep_to_csv(const SweepResult& s) {
  std::string out;
  for (const auto& a : s.axes) out += a.label() + ",";
  for (std::size_t k = 0; k < s.families.size(); ++k) {
    out += to_string(s.families[k]);
    out += k + 1 < s.families.size() ? "," : "\n";
  }
  for (const auto& p : s.points) {
    for (double c : p.coords) out += format_double(c) + ",";
    for (std::size_t k = 0; k < s.families.size(); ++k) {
      if (p.valid()) out += format_double(p.worst[k]);
      out += k + 1 < s.families.size() ? "," : "\n";
    }
  }
  return out;
}

std::string audit_to_csv(const AuditReport& a) {
  std::string out = "seed,lg_verdict,lg_full_verdict,feasible,worst_lg_margin,worst_full_margin,in_band,mismatch\n";
  auto tf = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : a.records) {
    out += std::to_string(r.seed) + "," + tf(r.lg_verdict) + "," + tf(r.lg_full_verdict) + "," + tf(r.feasible) +
           "," + format_double(r.worst_lg_margin) + "," + format_double(r.worst_full_margin) + "," +
           tf(r.in_band) + "," + tf(r.mismatch) + "\n";
  }
  return out;
}

std::vector<std::filesystem::path> write_bundle(const ReportBundle& b, const std::filesystem::path& dir,
                                                const std::string& stem, OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> out;
  auto emit = [&](const std::string& name, const std::string& text) {
    const auto p = dir / name;
    write_file(p, text);
    out.push_back(p);
  };
  if (!b.reports.empty()) emit(stem + ".csv", reports_to_csv(b.reports));
  if (b.sweep) emit(stem + "_sweep.csv", sweep_to_csv(*b.sweep));
  if (b.audit) emit(stem + "_audit.csv", audit_to_csv(*b.audit));
  if (format == OutputFormat::Full) emit(stem + ".json", bundle_to_json(b));
  return out;
}

}  // namespace lgmr
