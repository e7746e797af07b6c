// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Everything lives here so the test suite can drive
// `run` in-process; main.cpp only forwards argv.

#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/qcorr.hpp"

namespace qcorr::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

/// Everything a quantity may look at.
struct Inputs {
  std::optional<AnyState> state;
  std::optional<AnyState> state2;
  Side side = Side::B;
  Cut cut;
  OptimizerConfig config;
  int povm_outcomes = 0;
};

struct Outcome {
  double value = 0.0;
  json details = json::object();
  std::optional<OptimizerResult> diagnostics;
};

struct Quantity {
  std::string name;
  std::string help;
  std::function<Outcome(const Inputs&)> compute;
};

/// Result of one `compute` call.
struct CorrelationReport {
  std::string quantity;
  double value = 0.0;
  json diagnostics = json::object();
  json details = json::object();
  std::string input_digest;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
};

inline json to_json(const CorrelationReport& r) {
  return {{"quantity", r.quantity}, {"value", r.value},          {"diagnostics", r.diagnostics},
          {"details", r.details},   {"input_digest", r.input_digest}, {"seed", r.seed},
          {"wall_time", r.wall_time}};
}

inline CorrelationReport report_from_json(const json& j) {
  CorrelationReport r;
  r.quantity = j.at("quantity").get<std::string>();
  r.value = j.at("value").get<double>();
  r.diagnostics = j.at("diagnostics");
  r.details = j.at("details");
  r.input_digest = j.at("input_digest").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

/// 64-bit FNV-1a of the raw bytes, as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex;
  ss.width(16);
  ss.fill('0');
  ss << h;
  return ss.str();
}

/// Shortest decimal form that reads back to the same double.
inline std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline json diagnostics_json(const OptimizerResult& r) {
  return {{"best_restart", r.best_restart},
          {"iterations", r.iterations},
          {"achieved_tolerance", r.achieved_tolerance},
          {"restart_gap", r.restart_gap()},
          {"starts", r.restart_values.size()},
          {"parameters", r.parameters}};
}

namespace detail {

inline const AnyState& need_state(const Inputs& in) {
  if (!in.state) throw std::invalid_argument("--state is required");
  return *in.state;
}

inline DensityMatrix density(const Inputs& in) { return as_density(need_state(in)); }

inline DensityMatrix density2(const Inputs& in) {
  if (!in.state2) throw std::invalid_argument("this quantity needs a second state (--state2)");
  return as_density(*in.state2);
}

// Pure input either as a vector or as a rank-1 density matrix.
inline PureState pure_from(const AnyState& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return *p;
  const auto& rho = std::get<DensityMatrix>(s);
  const auto [w, v] = eigensystem(rho.data());
  if (std::abs(w[w.size() - 1] - 1.0) > 1e-10)
    throw UnsupportedInput("this quantity needs a pure state");
  return PureState::normalized(rho.dims(), v.col(v.cols() - 1));
}

inline PureState pure(const Inputs& in) { return pure_from(need_state(in)); }

inline PureState pure2(const Inputs& in) {
  if (!in.state2) throw std::invalid_argument("this quantity needs a second state (--state2)");
  return pure_from(*in.state2);
}

inline Outcome plain(double v) { return {v, json::object(), std::nullopt}; }

inline Outcome from(const QuantumnessValue& q) {
  Outcome o{q.bits, json::object(), q.diagnostics};
  if (q.diagnostics.best_restart < 0) o.diagnostics.reset();
  return o;
}

inline Outcome from(const EntanglementValue& e) {
  Outcome o{e.bits, {{"method", std::string(to_string(e.method))}}, e.diagnostics};
  if (e.concurrence) o.details["concurrence"] = *e.concurrence;
  if (e.ensemble) o.details["ensemble_weights"] = e.ensemble->weights;
  return o;
}

inline json kw_json(const KwReport& r) {
  return {{"J_AE", r.J_AE},
          {"S_A", r.S_A},
          {"Ef_AB", r.Ef_AB},
          {"D_AE", r.D_AE},
          {"cond_S_AE", r.cond_S_AE},
          {"J_AB", r.J_AB},
          {"Ef_AE", r.Ef_AE},
          {"D_AB", r.D_AB},
          {"cond_S_AB", r.cond_S_AB},
          {"residual_kw", r.residual_kw},
          {"residual_e4", r.residual_e4},
          {"residual_conservation", r.residual_conservation},
          {"single_copy_irreversibility", r.single_copy_irreversibility},
          {"povm_used", r.povm_used}};
}

inline json bases_json(const std::vector<ProjectiveBasis>& bases) {
  json out = json::array();
  for (const auto& b : bases) out.push_back(qcorr::detail::matrix_to_json(b.vectors()));
  return out;
}

}  // namespace detail

/// name -> computation table; `compute` reaches the library only through it.
inline const std::vector<Quantity>& registry() {
  using namespace detail;
  static const std::vector<Quantity> table = {
      {"von_neumann", "S(rho)", [](const Inputs& in) { return plain(von_neumann(density(in))); }},
      {"purity", "Tr rho^2", [](const Inputs& in) { return plain(purity(density(in))); }},
      {"total_work", "log2 N - S(rho)", [](const Inputs& in) { return from(total_work(density(in))); }},
      {"relative_entropy", "S(state || state2)",
       [](const Inputs& in) { return plain(relative_entropy(density(in), density2(in))); }},
      {"mutual_information", "I(L:R) across --cut",
       [](const Inputs& in) { return plain(mutual_information(density(in), in.cut)); }},
      {"conditional_entropy", "S(L|R) across --cut",
       [](const Inputs& in) { return plain(conditional_entropy(density(in), in.cut)); }},
      {"coherent_information", "-S(L|R) across --cut",
       [](const Inputs& in) { return plain(coherent_information(density(in), in.cut)); }},
      {"jensen_shannon", "quantum Jensen-Shannon divergence of two pure states",
       [](const Inputs& in) { return plain(jensen_shannon(pure(in), pure2(in))); }},
      {"entanglement_entropy", "S(rho_L) of a pure state",
       [](const Inputs& in) { return from(entanglement_entropy(pure(in), in.cut)); }},
      {"relative_entanglement_pure", "E_r of a pure state",
       [](const Inputs& in) { return from(relative_entanglement_pure(pure(in), in.cut)); }},
      {"concurrence", "two-qubit concurrence",
       [](const Inputs& in) {
         const auto rho = density(in);
         qcorr::require_two_qubits(rho, "concurrence");
         return plain(qcorr::concurrence(rho.data()));
       }},
      {"eof_two_qubits", "E_f from the concurrence formula",
       [](const Inputs& in) { return from(eof_two_qubits(density(in))); }},
      {"eof_ensemble_opt", "E_f upper bound by ensemble search (--povm-outcomes = ensemble size)",
       [](const Inputs& in) {
         return from(eof_ensemble_opt(density(in), in.povm_outcomes, in.config, in.cut));
       }},
      {"negativity", "(||rho^T_R||_1 - 1)/2 across --cut",
       [](const Inputs& in) { return from(negativity(density(in), in.cut)); }},
      {"is_ppt", "1 if the partial transpose is PSD",
       [](const Inputs& in) { return plain(is_ppt(density(in), in.cut) ? 1.0 : 0.0); }},
      {"distillable_max_corr", "E_D of a maximally correlated state",
       [](const Inputs& in) { return from(distillable_max_corr(density(in), in.cut)); }},
      {"classical_correlations", "J with --side measured",
       [](const Inputs& in) {
         return from(classical_correlations(density(in), in.side, in.config, in.povm_outcomes));
       }},
      {"discord", "I - J with --side measured",
       [](const Inputs& in) { return from(discord(density(in), in.side, in.config, in.povm_outcomes)); }},
      {"discord_two_sided", "discord over product measurements",
       [](const Inputs& in) {
         return from(discord_two_sided(density(in), in.config, in.povm_outcomes, in.povm_outcomes));
       }},
      {"one_way_deficit", "one-way work deficit, --side dephased",
       [](const Inputs& in) {
         auto q = one_way_deficit(density(in), in.side, in.config);
         auto o = from(q);
         o.details["bases"] = bases_json(q.bases);
         return o;
       }},
      {"zero_way_deficit", "zero-way work deficit",
       [](const Inputs& in) {
         auto q = zero_way_deficit(density(in), in.config);
         auto o = from(q);
         o.details["bases"] = bases_json(q.bases);
         return o;
       }},
      {"quantumness_qc", "relative entropy of quantumness, classical on --side",
       [](const Inputs& in) {
         return from(relative_entropy_of_quantumness(density(in), QuantumnessVariant::QC, in.config, in.side));
       }},
      {"quantumness_cc", "relative entropy of quantumness, classical on both sides",
       [](const Inputs& in) {
         return from(relative_entropy_of_quantumness(density(in), QuantumnessVariant::CC, in.config));
       }},
      {"work_deficit_bound", "zero-way deficit minus its entanglement bound",
       [](const Inputs& in) {
         const auto b = work_deficit_bound_check(density(in), in.config);
         return Outcome{b.deficit - b.bound,
                        {{"holds", b.holds}, {"deficit", b.deficit}, {"bound", b.bound}, {"exact", b.exact}},
                        std::nullopt};
       }},
      {"is_classical_cq", "trace distance to the closest state classical on --side",
       [](const Inputs& in) {
         const auto r = is_classical(density(in), Classicality::CQ, in.side, in.config);
         return Outcome{r.distance, {{"classical", r.classical}, {"bases", bases_json(r.bases)}}, r.diagnostics};
       }},
      {"is_classical_cc", "trace distance to the closest classical-classical state",
       [](const Inputs& in) {
         const auto r = is_classical(density(in), Classicality::CC, Side::A, in.config);
         return Outcome{r.distance, {{"classical", r.classical}, {"bases", bases_json(r.bases)}}, r.diagnostics};
       }},
      {"kw_balance", "|J(A:E) - S(A) + E_f(AB)| for a three-qubit pure state",
       [](const Inputs& in) {
         const auto r = kw_balance(pure(in), in.config);
         return Outcome{r.residual_kw, kw_json(r), std::nullopt};
       }},
      {"discord_eof_relation", "|D(A:E) - E_f(AB) + S(A|E)| for a three-qubit pure state",
       [](const Inputs& in) {
         const auto r = discord_eof_relation(pure(in), in.config);
         return Outcome{r.residual_e4, kw_json(r), std::nullopt};
       }},
      {"conservation_law", "|D(A:E) + D(A:B) - E_f(AE) - E_f(AB)| for a three-qubit pure state",
       [](const Inputs& in) {
         const auto r = conservation_law(pure(in), in.config);
         return Outcome{r.residual_conservation, kw_json(r), std::nullopt};
       }},
      {"monogamy", "S(A) - E_f(AB) - J(A:C) for three qubits",
       [](const Inputs& in) { return plain(monogamy_check(density(in), in.config)); }},
      {"activated_negativity", "min over local rotations of the activated negativity",
       [](const Inputs& in) {
         return from(min_activated_entanglement(density(in), ActivationMeasure::negativity, in.config));
       }},
      {"activated_distillable", "min over local rotations of the activated hashing E_D",
       [](const Inputs& in) {
         return from(min_activated_entanglement(density(in), ActivationMeasure::hashing_ED, in.config));
       }},
      {"zero_way_equivalence", "|zero-way deficit - min activated E_D|",
       [](const Inputs& in) {
         const auto r = zero_way_equivalence(density(in), in.config);
         return Outcome{r.residual,
                        {{"delta_zero_way", r.zero_way_deficit}, {"min_ed", r.min_distillable}},
                        std::nullopt};
       }},
      {"classicality_separability", "min activated negativity with a three-way verdict",
       [](const Inputs& in) {
         const auto v = classicality_separability_test(density(in), in.config);
         return Outcome{v.min_negativity,
                        {{"verdict", std::string(to_string(v.verdict))},
                         {"cc_classical", v.cc_classical},
                         {"consistent", v.consistent}},
                        std::nullopt};
       }},
  };
  return table;
}

inline const Quantity* find_quantity(std::string_view name) {
  for (const auto& q : registry())
    if (q.name == name) return &q;
  return nullptr;
}

inline std::string quantity_names() {
  std::string s;
  for (const auto& q : registry()) s += (s.empty() ? "" : ", ") + q.name;
  return s;
}

struct Options {
  std::string quantity;
  std::string state;
  std::string state2;
  std::string side = "B";
  std::vector<int> cut;
  int restarts = 32;
  std::uint64_t seed = 0;
  int povm_outcomes = 0;
  int samples = 100;
  std::vector<int> dims{2, 2};
  int rank = 0;
  std::string out;
  std::string format = "json";
};

namespace detail {

inline OptimizerConfig config_from(const Options& o, std::uint64_t seed) {
  OptimizerConfig c;
  c.restarts = o.restarts;
  c.seed = seed;
  return c;
}

inline std::uint64_t sample_seed(std::uint64_t master, int i) {
  return RandomSource(master).child(static_cast<std::uint64_t>(i)).seed();
}

inline Inputs inputs_from(const Options& o) {
  Inputs in;
  in.side = o.side == "A" ? Side::A : Side::B;
  if (!o.cut.empty()) in.cut.left = o.cut;
  in.config = config_from(o, o.seed);
  in.povm_outcomes = o.povm_outcomes;
  return in;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Summary {
  double max = 0.0, mean = 0.0, min = 0.0;
};

inline Summary summarize(const std::vector<double>& v) {
  Summary s;
  if (v.empty()) return s;
  s.max = *std::max_element(v.begin(), v.end());
  s.min = *std::min_element(v.begin(), v.end());
  double total = 0.0;
  for (double x : v) total += x;
  s.mean = total / double(v.size());
  return s;
}

inline json summary_json(const std::vector<double>& v) {
  const auto s = summarize(v);
  return {{"max", s.max}, {"mean", s.mean}, {"min", s.min}, {"count", v.size()}};
}

// ---------------------------------------------------------------------------
// subcommands; each returns the text to emit

inline std::string cmd_compute(const Options& o) {
  const Quantity* q = find_quantity(o.quantity);
  if (!q) throw std::invalid_argument("unknown quantity '" + o.quantity + "'; known: " + quantity_names());
  Inputs in = inputs_from(o);
  std::string digest;
  if (!o.state.empty()) {
    const std::string text = read_text_file(o.state);
    digest = fnv1a_hex(text);
    in.state = parse_state(text);
  }
  if (!o.state2.empty()) {
    const std::string text = read_text_file(o.state2);
    digest += (digest.empty() ? "" : ":") + fnv1a_hex(text);
    in.state2 = parse_state(text);
  }
  const auto start = std::chrono::steady_clock::now();
  const Outcome r = q->compute(in);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  CorrelationReport report;
  report.quantity = q->name;
  report.value = r.value;
  if (r.diagnostics) report.diagnostics = diagnostics_json(*r.diagnostics);
  report.details = r.details;
  report.input_digest = digest;
  report.seed = o.seed;
  report.wall_time = elapsed;

  if (o.format == "csv")
    return "quantity,value,seed,input_digest\n" + report.quantity + "," + number(report.value) + "," +
           std::to_string(report.seed) + "," + report.input_digest + "\n";
  if (o.format == "plain") {
    std::string s = report.quantity + " = " + number(report.value) + " bits\n";
    s += "seed " + std::to_string(report.seed) + "\n";
    if (r.diagnostics) s += "parameters " + json(r.diagnostics->parameters).dump() + "\n";
    if (!report.details.empty()) s += report.details.dump() + "\n";
    return s;
  }
  return to_json(report).dump(2) + "\n";
}

inline std::string cmd_validate(const Options& o) {
  const AnyState s = read_state_file(o.state);
  const DensityMatrix rho = as_density(s);
  json j = {{"valid", true},
            {"kind", std::holds_alternative<PureState>(s) ? "pure" : "density"},
            {"dims", rho.dims()},
            {"purity", purity(rho)}};
  if (o.format == "plain") return "valid " + j["kind"].get<std::string>() + " state, dims " + j["dims"].dump() + "\n";
  if (o.format == "csv")
    return "valid,kind,dims,purity\ntrue," + j["kind"].get<std::string>() + "," + csv_escape(j["dims"].dump()) +
           "," + number(j["purity"].get<double>()) + "\n";
  return j.dump(2) + "\n";
}

inline std::string cmd_verify_kw(const Options& o) {
  static const char* fields[] = {"residual_kw", "residual_e4", "residual_conservation", "J_AE", "S_A",
                                 "Ef_AB",       "D_AE",        "cond_S_AE",             "J_AB", "Ef_AE",
                                 "D_AB",        "cond_S_AB"};
  std::vector<json> rows;
  std::vector<double> kw, e4, cons;
  for (int i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = sample_seed(o.seed, i);
    RandomSource rng(seed);
    const PureState psi = random_pure({2, 2, 2}, rng);
    const KwReport r = kw_full_report(psi, config_from(o, seed));
    json row = kw_json(r);
    row["seed"] = seed;
    rows.push_back(std::move(row));
    kw.push_back(r.residual_kw);
    e4.push_back(r.residual_e4);
    cons.push_back(r.residual_conservation);
  }
  const json summary = {{"samples", o.samples},
                        {"master_seed", o.seed},
                        {"residual_kw", summary_json(kw)},
                        {"residual_e4", summary_json(e4)},
                        {"residual_conservation", summary_json(cons)}};
  if (o.format == "csv") {
    std::string s = "seed";
    for (const char* f : fields) s += std::string(",") + f;
    s += ",povm_used\n";
    for (const auto& row : rows) {
      s += std::to_string(row["seed"].get<std::uint64_t>());
      for (const char* f : fields) s += "," + number(row[f].get<double>());
      s += std::string(",") + (row["povm_used"].get<bool>() ? "1" : "0") + "\n";
    }
    return s;
  }
  if (o.format == "plain") {
    std::string s;
    for (const char* f : {"residual_kw", "residual_e4", "residual_conservation"})
      s += std::string(f) + ": max " + number(summary[f]["max"].get<double>()) + ", mean " +
           number(summary[f]["mean"].get<double>()) + "\n";
    return s;
  }
  return json{{"summary", summary}, {"samples", rows}}.dump(2) + "\n";
}

inline std::string cmd_verify_activation(const Options& o) {
  std::vector<json> rows;
  std::vector<double> residuals;
  int inconclusive = 0, inconsistent = 0;
  for (int i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = sample_seed(o.seed, i);
    RandomSource rng(seed);
    const int rank = o.rank > 0 ? o.rank : 1 + i % 4;
    const DensityMatrix rho = random_density({2, 2}, rank, rng);
    const OptimizerConfig config = config_from(o, seed);
    const auto deficit = zero_way_deficit(rho, config);
    const auto min_ed = min_activated_entanglement(rho, ActivationMeasure::hashing_ED, config);
    const auto verdict = classicality_separability_test(rho, config);
    const double residual = std::abs(deficit.bits - min_ed.bits);
    residuals.push_back(residual);
    if (verdict.verdict == Verdict::INCONCLUSIVE) ++inconclusive;
    if (!verdict.consistent) ++inconsistent;
    rows.push_back({{"seed", seed},
                    {"rank", rank},
                    {"delta_zero_way", deficit.bits},
                    {"min_ed", min_ed.bits},
                    {"residual", residual},
                    {"min_negativity", verdict.min_negativity},
                    {"verdict", std::string(to_string(verdict.verdict))},
                    {"deficit_angles", deficit.diagnostics.parameters},
                    {"activation_angles", min_ed.diagnostics.parameters}});
  }
  const json summary = {{"samples", o.samples},
                        {"master_seed", o.seed},
                        {"residual", summary_json(residuals)},
                        {"inconclusive", inconclusive},
                        {"inconsistent", inconsistent}};
  if (o.format == "csv") {
    std::string s = "seed,rank,delta_zero_way,min_ed,residual,min_negativity,verdict\n";
    for (const auto& r : rows)
      s += std::to_string(r["seed"].get<std::uint64_t>()) + "," + std::to_string(r["rank"].get<int>()) + "," +
           number(r["delta_zero_way"].get<double>()) + "," + number(r["min_ed"].get<double>()) + "," +
           number(r["residual"].get<double>()) + "," + number(r["min_negativity"].get<double>()) + "," +
           r["verdict"].get<std::string>() + "\n";
    return s;
  }
  if (o.format == "plain")
    return "residual: max " + number(summary["residual"]["max"].get<double>()) + ", mean " +
           number(summary["residual"]["mean"].get<double>()) + "; inconclusive " + std::to_string(inconclusive) +
           "\n";
  return json{{"summary", summary}, {"samples", rows}}.dump(2) + "\n";
}

inline std::string cmd_random_suite(const Options& o) {
  const Quantity* q = find_quantity(o.quantity);
  if (!q) throw std::invalid_argument("unknown quantity '" + o.quantity + "'; known: " + quantity_names());
  const int n = total_dim(o.dims);
  if (o.rank < 0 || o.rank > n) throw std::invalid_argument("--rank must be in [0, prod(dims)]");
  std::vector<json> rows;
  std::vector<double> values;
  for (int i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = sample_seed(o.seed, i);
    RandomSource rng(seed);
    const int rank = o.rank > 0 ? o.rank : 1 + static_cast<int>(rng.uniform() * n);
    Inputs in = inputs_from(o);
    in.config.seed = seed;
    in.state = random_density(o.dims, rank, rng);
    in.state2 = random_density(o.dims, n, rng);
    const Outcome r = q->compute(in);
    values.push_back(r.value);
    json row = {{"seed", seed}, {"rank", rank}, {"value", r.value}};
    if (r.diagnostics) row["parameters"] = r.diagnostics->parameters;
    rows.push_back(std::move(row));
  }
  const json summary = {{"quantity", q->name}, {"dims", o.dims}, {"master_seed", o.seed},
                        {"value", summary_json(values)}};
  if (o.format == "csv") {
    std::string s = "seed,rank,value\n";
    for (const auto& r : rows)
      s += std::to_string(r["seed"].get<std::uint64_t>()) + "," + std::to_string(r["rank"].get<int>()) + "," +
           number(r["value"].get<double>()) + "\n";
    return s;
  }
  if (o.format == "plain")
    return q->name + ": min " + number(summary["value"]["min"].get<double>()) + ", max " +
           number(summary["value"]["max"].get<double>()) + ", mean " +
           number(summary["value"]["mean"].get<double>()) + "\n";
  return json{{"summary", summary}, {"samples", rows}}.dump(2) + "\n";
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Correlation and entanglement measures for finite-dimensional quantum states", "qcorr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qcorr 0.1.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--restarts", o.restarts, "optimizer restarts")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "master seed")->capture_default_str();
    sub->add_option("--format", o.format, "output format")->capture_default_str()->check(
        CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "compute one quantity on a state file");
  compute->add_option("--quantity", o.quantity, "quantity name (see `list`)")->required();
  compute->add_option("--state", o.state, "state file (JSON)");
  compute->add_option("--state2", o.state2, "second state, for two-state quantities");
  compute->add_option("--side", o.side, "measured / dephased side")->capture_default_str()->check(
      CLI::IsMember({"A", "B"}));
  compute->add_option("--cut", o.cut, "subsystems on the left of the cut (default 0)")->delimiter(',');
  compute->add_option("--povm-outcomes", o.povm_outcomes,
                      "rank-1 POVM outcomes (0: projective); ensemble size for eof_ensemble_opt")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_common(compute);

  auto* validate = app.add_subcommand("validate", "check a state file against the density-matrix invariants");
  validate->add_option("--state", o.state, "state file (JSON)")->required();
  validate->add_option("--format", o.format, "output format")->capture_default_str()->check(
      CLI::IsMember({"json", "csv", "plain"}));

  auto* kw = app.add_subcommand("verify-kw", "Koashi-Winter checks on random three-qubit pure states (csv by default)");
  kw->add_option("--samples", o.samples, "number of states")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(kw);

  auto* act = app.add_subcommand("verify-activation", "activation checks on random two-qubit states");
  act->add_option("--samples", o.samples, "number of states")->capture_default_str()->check(CLI::PositiveNumber);
  act->add_option("--rank", o.rank, "state rank (0: cycle 1..4)")->capture_default_str()->check(CLI::Range(0, 4));
  add_common(act);

  auto* suite = app.add_subcommand("random-suite", "evaluate a quantity on random states");
  suite->add_option("--quantity", o.quantity, "quantity name (see `list`)")->required();
  suite->add_option("--samples", o.samples, "number of states")->capture_default_str()->check(CLI::PositiveNumber);
  suite->add_option("--dims", o.dims, "subsystem dimensions")->delimiter(',')->capture_default_str();
  suite->add_option("--rank", o.rank, "state rank (0: random)")->capture_default_str();
  suite->add_option("--side", o.side, "measured / dephased side")->capture_default_str()->check(
      CLI::IsMember({"A", "B"}));
  suite->add_option("--cut", o.cut, "subsystems on the left of the cut (default 0)")->delimiter(',');
  suite->add_option("--povm-outcomes", o.povm_outcomes, "rank-1 POVM outcomes (0: projective)")
      ->capture_default_str();
  add_common(suite);

  auto* list = app.add_subcommand("list", "list quantity names");

  std::vector<const char*> argv{"qcorr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    std::string text;
    if (*list) {
      for (const auto& q : registry()) text += q.name + "\t" + q.help + "\n";
    } else if (*compute) {
      text = detail::cmd_compute(o);
    } else if (*validate) {
      text = detail::cmd_validate(o);
    } else if (*kw) {
      if (kw->get_option("--format")->count() == 0) o.format = "csv";
      text = detail::cmd_verify_kw(o);
    } else if (*act) {
      text = detail::cmd_verify_activation(o);
    } else if (*suite) {
      text = detail::cmd_random_suite(o);
    }
    detail::emit(o, text, out);
    return kExitOk;
  } catch (const InvalidState& e) {
    err << "invalid state: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    // StateFormatError and UnsupportedInput land here too.
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qcorr::cli
