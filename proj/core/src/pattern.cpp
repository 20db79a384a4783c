// Copyright 2026 The mbqc developers
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

#include "mbqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>

namespace mbqc {

namespace {

using json = nlohmann::json;

Eigen::Matrix2cd rot_x(double t) {
  Eigen::Matrix2cd m;
  const cdouble c = std::cos(t / 2), s = cdouble{0, -1} * std::sin(t / 2);
  m << c, s, s, c;
  return m;
}

Eigen::Matrix2cd rot_z(double t) {
  Eigen::Matrix2cd m;
  m << std::exp(cdouble{0, -t / 2}), 0, 0, std::exp(cdouble{0, t / 2});
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

// Symmetric-difference insert: GF(2) addition of {v}.
void flip_member(std::set<int>& s, int v) {
  auto it = s.find(v);
  if (it == s.end())
    s.insert(v);
  else
    s.erase(it);
}

std::set<int> set_xor(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.begin()));
  return out;
}

struct WireParity {
  std::set<int> z, x;
};

}  // namespace

double AngleExpr::resolve(const std::map<int, int>& outcomes) const {
  int parity = 0;
  for (int d : sign_deps) {
    auto it = outcomes.find(d);
    if (it == outcomes.end())
      throw std::invalid_argument("angle depends on an unmeasured qubit");
    parity ^= it->second & 1;
  }
  return static_cast<double>(static_cast<int>(static_sign) * (parity ? -1 : 1)) * base;
}

ByproductOperator& ByproductOperator::operator^=(const ByproductOperator& rhs) {
  if (z.size() != rhs.z.size())
    throw std::invalid_argument("byproduct width mismatch");
  for (std::size_t k = 0; k < z.size(); ++k) {
    z[k] ^= rhs.z[k];
    x[k] ^= rhs.x[k];
  }
  return *this;
}

void derive_dependencies(MeasurementPattern& p) {
  const int w = p.wire_count();
  std::vector<WireParity> par(w);
  for (auto& [q, spec] : p.measures)
    if (spec.kind == MeasureSpec::Kind::kEquatorial) spec.angle.sign_deps.clear();

  for (const auto& elem : p.trace) {
    if (const auto* link = std::get_if<LinkElem>(&elem)) {
      auto& parity = par.at(link->wire);
      auto it = p.measures.find(link->qubit);
      if (it == p.measures.end() ||
          it->second.kind != MeasureSpec::Kind::kEquatorial)
        throw std::invalid_argument(
            "trace link references a qubit without an equatorial spec");
      // X parity flips the link's rotation angle; the link itself swaps the
      // roles of X and Z and appends its own outcome to the X side.
      it->second.angle.sign_deps = parity.x;
      std::set<int> new_x = parity.z;
      flip_member(new_x, link->qubit);
      parity.z = std::move(parity.x);
      parity.x = std::move(new_x);
    } else {
      const auto& cx = std::get<CnotElem>(elem);
      auto& pc = par.at(cx.control_wire);
      auto& pt = par.at(cx.target_wire);
      // conjugation through CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t
      pt.x = set_xor(pt.x, pc.x);
      pc.z = set_xor(pc.z, pt.z);
      // own outcomes: Z_c^{s2} X_t^{s3} Z_t^{s2}
      flip_member(pc.z, cx.m_target_in);
      flip_member(pt.x, cx.m_mid);
      flip_member(pt.z, cx.m_target_in);
    }
  }

  p.byproducts.clear();
  for (int k = 0; k < w; ++k)
    p.byproducts[p.outputs[k]] = ByproductRule{par[k].z, par[k].x};
}

void MeasurementPattern::validate() const {
  std::set<int> ids(qubits.begin(), qubits.end());
  if (ids.size() != qubits.size())
    throw std::invalid_argument("pattern: duplicate qubit ids");
  if (!std::is_sorted(qubits.begin(), qubits.end()))
    throw std::invalid_argument("pattern: qubit ids must be sorted");
  if (inputs.size() != outputs.size())
    throw std::invalid_argument("pattern: input/output wire count mismatch");
  std::set<int> outs(outputs.begin(), outputs.end());
  if (outs.size() != outputs.size())
    throw std::invalid_argument("pattern: duplicate outputs");
  for (int q : inputs)
    if (!ids.count(q)) throw std::invalid_argument("pattern: unknown input");
  for (int q : outputs)
    if (!ids.count(q)) throw std::invalid_argument("pattern: unknown output");
  for (int q : qubits) {
    const bool is_out = outs.count(q) != 0;
    const bool measured = measures.count(q) != 0;
    if (is_out && measured)
      throw std::invalid_argument("pattern: output qubit has a measurement");
    if (!is_out && !measured)
      throw std::invalid_argument("pattern: non-output qubit unmeasured");
  }
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("pattern: self-loop edge");
    if (!ids.count(a) || !ids.count(b))
      throw std::invalid_argument("pattern: edge references unknown qubit");
  }
  const auto dim = Eigen::Index{1} << wire_count();
  if (reference.rows() != dim || reference.cols() != dim)
    throw std::invalid_argument("pattern: reference dimension mismatch");
  temporal_rounds(*this);  // throws on dependency cycles
}

MeasurementPattern wire_chain_pattern(std::span<const double> base_angles) {
  const int k = static_cast<int>(base_angles.size());
  if (k < 1) throw std::invalid_argument("wire chain needs at least one link");
  MeasurementPattern p;
  p.qubits.resize(k + 1);
  for (int i = 0; i <= k; ++i) p.qubits[i] = i;
  p.inputs = {0};
  p.outputs = {k};
  for (int i = 0; i < k; ++i) {
    p.edges.emplace_back(i, i + 1);
    p.measures[i] = MeasureSpec::equatorial({base_angles[i], 1, {}});
    p.trace.push_back(LinkElem{0, i});
  }
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (int i = 0; i < k; ++i) u = (hadamard() * rot_z(-base_angles[i])) * u;
  p.reference = u;
  derive_dependencies(p);
  return p;
}

MeasurementPattern rotation_pattern(double zeta, double eta, double xi) {
  const double angles[4] = {0.0, -xi, -eta, -zeta};
  MeasurementPattern p = wire_chain_pattern(angles);
  // Euler normal form; equals the link product up to global phase.
  p.reference = rot_x(zeta) * rot_z(eta) * rot_x(xi);
  return p;
}

MeasurementPattern rotation_pattern_three_link(double phi1, double phi2,
                                               double phi3) {
  const double angles[3] = {phi1, phi2, phi3};
  return wire_chain_pattern(angles);
}

MeasurementPattern cnot_pattern() {
  MeasurementPattern p;
  p.qubits = {0, 1, 2, 3};  // 0 control in/out, 1 target in, 2 mid, 3 target out
  p.inputs = {0, 1};
  p.outputs = {0, 3};
  p.edges = {{0, 2}, {1, 2}, {2, 3}};
  p.measures[1] = MeasureSpec::equatorial({0.0, 1, {}});
  p.measures[2] = MeasureSpec::equatorial({0.0, 1, {}});
  p.trace.push_back(CnotElem{0, 1, 1, 2});
  Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
  // little-endian: wire 0 (control) is the low bit
  cnot(0, 0) = cnot(2, 2) = 1;  // control 0: identity
  cnot(3, 1) = cnot(1, 3) = 1;  // control 1: flip target
  p.reference = cnot;
  derive_dependencies(p);
  return p;
}

MeasurementPattern identity_pattern(int wires) {
  if (wires < 1) throw std::invalid_argument("identity pattern needs a wire");
  MeasurementPattern p;
  p.qubits.resize(wires);
  for (int i = 0; i < wires; ++i) p.qubits[i] = i;
  p.inputs = p.qubits;
  p.outputs = p.qubits;
  p.reference = Eigen::MatrixXcd::Identity(Eigen::Index{1} << wires,
                                           Eigen::Index{1} << wires);
  derive_dependencies(p);
  return p;
}

MeasurementPattern compose(const MeasurementPattern& p1,
                           const MeasurementPattern& p2,
                           const std::map<int, int>& wiring) {
  if (p1.wire_count() != p2.wire_count())
    throw std::invalid_argument("compose: wire count mismatch");
  const int w = p1.wire_count();
  if (static_cast<int>(wiring.size()) != w)
    throw std::invalid_argument("compose: wiring must map every output");
  for (int k = 0; k < w; ++k) {
    auto it = wiring.find(p1.outputs[k]);
    if (it == wiring.end() || it->second != p2.inputs[k])
      throw std::invalid_argument(
          "compose: wiring must be a position-consistent bijection "
          "(p1.outputs[k] -> p2.inputs[k])");
  }

  // relabel p2's qubits: inputs take the identified p1 output ids, the rest
  // shift above p1's id range
  const int offset = p1.qubits.empty() ? 0 : p1.qubits.back() + 1;
  std::map<int, int> relabel;
  for (int k = 0; k < w; ++k) relabel[p2.inputs[k]] = p1.outputs[k];
  int next = offset;
  for (int q : p2.qubits)
    if (!relabel.count(q)) relabel[q] = next++;

  MeasurementPattern out;
  out.inputs = p1.inputs;
  out.qubits = p1.qubits;
  for (int q : p2.qubits) {
    const int r = relabel.at(q);
    if (r >= offset) out.qubits.push_back(r);
  }
  std::sort(out.qubits.begin(), out.qubits.end());
  out.outputs.reserve(w);
  for (int q : p2.outputs) out.outputs.push_back(relabel.at(q));

  out.edges = p1.edges;
  for (const auto& [a, b] : p2.edges)
    out.edges.emplace_back(relabel.at(a), relabel.at(b));

  out.measures = p1.measures;
  for (const auto& [q, spec] : p2.measures) out.measures[relabel.at(q)] = spec;

  out.trace = p1.trace;
  for (const auto& elem : p2.trace) {
    if (const auto* link = std::get_if<LinkElem>(&elem)) {
      out.trace.push_back(LinkElem{link->wire, relabel.at(link->qubit)});
    } else {
      const auto& cx = std::get<CnotElem>(elem);
      out.trace.push_back(CnotElem{cx.control_wire, cx.target_wire,
                                   relabel.at(cx.m_target_in),
                                   relabel.at(cx.m_mid)});
    }
  }

  out.reference = p2.reference * p1.reference;
  derive_dependencies(out);
  out.validate();
  return out;
}

std::vector<std::vector<int>> temporal_rounds(const MeasurementPattern& p) {
  std::map<int, int> round;
  bool progress = true;
  std::size_t assigned = 0;
  while (progress && assigned < p.measures.size()) {
    progress = false;
    for (const auto& [q, spec] : p.measures) {
      if (round.count(q)) continue;
      int r = 0;
      bool ready = true;
      if (spec.kind == MeasureSpec::Kind::kEquatorial) {
        for (int d : spec.angle.sign_deps) {
          auto it = round.find(d);
          if (it == round.end()) {
            ready = false;
            break;
          }
          r = std::max(r, it->second + 1);
        }
      }
      if (ready) {
        round[q] = r;
        ++assigned;
        progress = true;
      }
    }
  }
  if (assigned < p.measures.size())
    throw std::invalid_argument("pattern has cyclic angle dependencies");
  int max_round = -1;
  for (const auto& [q, r] : round) max_round = std::max(max_round, r);
  std::vector<std::vector<int>> rounds(max_round + 1);
  for (const auto& [q, r] : round) rounds[r].push_back(q);
  for (auto& v : rounds) std::sort(v.begin(), v.end());
  return rounds;
}

std::vector<int> measurement_order(const MeasurementPattern& p) {
  std::vector<int> order;
  for (const auto& r : temporal_rounds(p))
    order.insert(order.end(), r.begin(), r.end());
  return order;
}

namespace {

// Initial register: input wires placed at their pattern qubits, everything
// else |+>, all pattern edges entangled.
struct Execution {
  StateVector state{0};
  std::vector<int> live;  // sorted pattern qubit ids still in the register

  int position(int qubit) const {
    const auto it = std::lower_bound(live.begin(), live.end(), qubit);
    if (it == live.end() || *it != qubit)
      throw std::logic_error("qubit not live");
    return static_cast<int>(it - live.begin());
  }
  void drop(int qubit) {
    live.erase(std::lower_bound(live.begin(), live.end(), qubit));
  }
};

Execution prepare_register(const MeasurementPattern& p,
                           const StateVector& input) {
  if (input.n_qubits() != p.wire_count())
    throw std::invalid_argument("run_pattern: input width mismatch");
  const int n = static_cast<int>(p.qubits.size());
  if (n > kMaxQubits)
    throw std::invalid_argument("run_pattern: pattern too large");

  Execution ex;
  ex.live = p.qubits;

  const int extra = n - p.wire_count();
  StateVector full =
      extra > 0 ? tensor(input, new_plus_state(extra)) : input;

  // send input wire k to the rank of inputs[k]; fresh qubits fill the rest
  std::vector<int> perm(n);
  std::vector<bool> taken(n, false);
  for (int k = 0; k < p.wire_count(); ++k) {
    const int pos = ex.position(p.inputs[k]);
    perm[k] = pos;
    taken[pos] = true;
  }
  int next = p.wire_count();
  for (int pos = 0; pos < n; ++pos)
    if (!taken[pos]) perm[next++] = pos;
  ex.state = permute_qubits(full, perm);

  for (const auto& [a, b] : p.edges)
    apply_cphase(ex.state, ex.position(a), ex.position(b));
  return ex;
}

MeasurementBasis spec_basis(const MeasureSpec& spec,
                            const std::map<int, int>& outcomes,
                            double* resolved) {
  if (spec.kind == MeasureSpec::Kind::kZ) {
    if (resolved) *resolved = 0.0;
    return MeasurementBasis::z();
  }
  const double phi = spec.angle.resolve(outcomes);
  if (resolved) *resolved = phi;
  return MeasurementBasis::equatorial(phi);
}

ByproductOperator collect_byproduct(const MeasurementPattern& p,
                                    const std::map<int, int>& outcomes) {
  ByproductOperator b(p.wire_count());
  for (int k = 0; k < p.wire_count(); ++k) {
    const auto& rule = p.byproducts.at(p.outputs[k]);
    for (int d : rule.z_deps) b.z[k] ^= outcomes.at(d) & 1;
    for (int d : rule.x_deps) b.x[k] ^= outcomes.at(d) & 1;
  }
  return b;
}

StateVector finalize_output(const MeasurementPattern& p, Execution& ex) {
  // permute so that output wire k sits at position k
  std::vector<int> perm(ex.live.size());
  for (int k = 0; k < p.wire_count(); ++k) perm[ex.position(p.outputs[k])] = k;
  return permute_qubits(ex.state, perm);
}

template <typename PickOutcome>
PatternRun run_impl(const MeasurementPattern& p, const StateVector& input,
                    PickOutcome&& pick) {
  Execution ex = prepare_register(p, input);
  PatternRun run;
  run.probability = 1.0;
  const auto order = measurement_order(p);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const int q = order[step];
    double resolved = 0.0;
    const auto basis = spec_basis(p.measures.at(q), run.outcomes.bits, &resolved);
    MeasureResult res = pick(ex.state, ex.position(q), basis, step);
    run.outcomes.bits[q] = res.outcome;
    if (p.measures.at(q).kind == MeasureSpec::Kind::kEquatorial)
      run.outcomes.executed_angles[q] = resolved;
    run.probability *= res.probability;
    ex.state = std::move(res.post);
    ex.drop(q);
  }
  run.byproduct = collect_byproduct(p, run.outcomes.bits);
  run.raw_output = finalize_output(p, ex);
  return run;
}

}  // namespace

PatternRun run_pattern(const MeasurementPattern& p, const StateVector& input,
                       std::span<const int> forced_bits) {
  if (forced_bits.size() != static_cast<std::size_t>(p.measured_count()))
    throw std::invalid_argument("run_pattern: need one forced bit per qubit");
  return run_impl(p, input,
                  [&](const StateVector& s, int pos, const MeasurementBasis& b,
                      std::size_t step) {
                    return measure(s, pos, b, forced_bits[step]);
                  });
}

PatternRun run_pattern(const MeasurementPattern& p, const StateVector& input,
                       Rng& rng) {
  return run_impl(p, input,
                  [&](const StateVector& s, int pos, const MeasurementBasis& b,
                      std::size_t) { return measure(s, pos, b, rng); });
}

namespace {

void enumerate_rec(const MeasurementPattern& p, const std::vector<int>& order,
                   std::size_t step, Execution ex, PatternRun partial,
                   std::vector<PatternRun>& out) {
  if (step == order.size()) {
    partial.byproduct = collect_byproduct(p, partial.outcomes.bits);
    partial.raw_output = finalize_output(p, ex);
    out.push_back(std::move(partial));
    return;
  }
  const int q = order[step];
  double resolved = 0.0;
  const auto basis = spec_basis(p.measures.at(q), partial.outcomes.bits, &resolved);
  const int pos = ex.position(q);
  auto [lo, hi] = measure_both(ex.state, pos, basis);
  for (auto* res : {&lo, &hi}) {
    if (res->probability < kForbiddenBranchTol) continue;
    Execution next_ex;
    next_ex.state = std::move(res->post);
    next_ex.live = ex.live;
    next_ex.drop(q);
    PatternRun next = partial;
    next.outcomes.bits[q] = res->outcome;
    if (p.measures.at(q).kind == MeasureSpec::Kind::kEquatorial)
      next.outcomes.executed_angles[q] = resolved;
    next.probability *= res->probability;
    enumerate_rec(p, order, step + 1, std::move(next_ex), std::move(next), out);
  }
}

}  // namespace

std::vector<PatternRun> enumerate_branches(const MeasurementPattern& p,
                                           const StateVector& input) {
  Execution ex = prepare_register(p, input);
  PatternRun seed;
  seed.probability = 1.0;
  std::vector<PatternRun> out;
  enumerate_rec(p, measurement_order(p), 0, std::move(ex), std::move(seed), out);
  return out;
}

void apply_byproduct_correction(StateVector& state,
                                const ByproductOperator& b) {
  if (state.n_qubits() != static_cast<int>(b.z.size()))
    throw std::invalid_argument("byproduct width mismatch");
  const Eigen::Matrix2cd zgate = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  const Eigen::Matrix2cd xgate = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  for (std::size_t k = 0; k < b.z.size(); ++k) {
    if (b.z[k]) apply_1q(state, static_cast<int>(k), zgate);
    if (b.x[k]) apply_1q(state, static_cast<int>(k), xgate);
  }
}

StateVector corrected_output(const PatternRun& run) {
  StateVector out = run.raw_output;
  apply_byproduct_correction(out, run.byproduct);
  return out;
}

namespace {

json angle_to_json(const AngleExpr& a) {
  return json{{"base", a.base},
              {"static_sign", a.static_sign},
              {"sign_deps", a.sign_deps}};
}

AngleExpr angle_from_json(const json& j) {
  AngleExpr a;
  a.base = j.at("base").get<double>();
  a.static_sign = j.at("static_sign").get<int>();
  for (int d : j.at("sign_deps")) a.sign_deps.insert(d);
  return a;
}

}  // namespace

json pattern_to_json(const MeasurementPattern& p) {
  json j;
  j["format"] = "mbqc-pattern";
  j["version"] = 1;
  j["qubits"] = p.qubits;
  j["inputs"] = p.inputs;
  j["outputs"] = p.outputs;
  json edges = json::array();
  for (const auto& [a, b] : p.edges) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  json measures = json::object();
  for (const auto& [q, spec] : p.measures) {
    json m;
    if (spec.kind == MeasureSpec::Kind::kZ) {
      m["basis"] = "z";
    } else {
      m["basis"] = "equatorial";
      m["angle"] = angle_to_json(spec.angle);
    }
    measures[std::to_string(q)] = m;
  }
  j["measurements"] = measures;
  json rules = json::object();
  for (const auto& [q, rule] : p.byproducts)
    rules[std::to_string(q)] =
        json{{"z_deps", rule.z_deps}, {"x_deps", rule.x_deps}};
  j["byproducts"] = rules;
  json trace = json::array();
  for (const auto& elem : p.trace) {
    if (const auto* link = std::get_if<LinkElem>(&elem)) {
      trace.push_back(
          json{{"type", "link"}, {"wire", link->wire}, {"qubit", link->qubit}});
    } else {
      const auto& cx = std::get<CnotElem>(elem);
      trace.push_back(json{{"type", "cnot"},
                           {"control_wire", cx.control_wire},
                           {"target_wire", cx.target_wire},
                           {"m_target_in", cx.m_target_in},
                           {"m_mid", cx.m_mid}});
    }
  }
  j["trace"] = trace;
  std::vector<double> re, im;
  re.reserve(p.reference.size());
  im.reserve(p.reference.size());
  for (Eigen::Index r = 0; r < p.reference.rows(); ++r)
    for (Eigen::Index c = 0; c < p.reference.cols(); ++c) {
      re.push_back(p.reference(r, c).real());
      im.push_back(p.reference(r, c).imag());
    }
  j["reference"] = json{{"dim", p.reference.rows()}, {"re", re}, {"im", im}};
  return j;
}

MeasurementPattern pattern_from_json(const json& j) {
  if (j.value("format", "") != "mbqc-pattern")
    throw std::invalid_argument("not a pattern document");
  MeasurementPattern p;
  p.qubits = j.at("qubits").get<std::vector<int>>();
  p.inputs = j.at("inputs").get<std::vector<int>>();
  p.outputs = j.at("outputs").get<std::vector<int>>();
  for (const auto& e : j.at("edges"))
    p.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& [key, m] : j.at("measurements").items()) {
    const int q = std::stoi(key);
    if (m.at("basis") == "z")
      p.measures[q] = MeasureSpec::z_basis();
    else
      p.measures[q] = MeasureSpec::equatorial(angle_from_json(m.at("angle")));
  }
  for (const auto& elem : j.at("trace")) {
    if (elem.at("type") == "link")
      p.trace.push_back(
          LinkElem{elem.at("wire").get<int>(), elem.at("qubit").get<int>()});
    else
      p.trace.push_back(CnotElem{elem.at("control_wire").get<int>(),
                                 elem.at("target_wire").get<int>(),
                                 elem.at("m_target_in").get<int>(),
                                 elem.at("m_mid").get<int>()});
  }
  const auto& ref = j.at("reference");
  const Eigen::Index dim = ref.at("dim").get<Eigen::Index>();
  const auto re = ref.at("re").get<std::vector<double>>();
  const auto im = ref.at("im").get<std::vector<double>>();
  if (re.size() != static_cast<std::size_t>(dim * dim) || im.size() != re.size())
    throw std::invalid_argument("pattern reference matrix malformed");
  p.reference.resize(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto k = static_cast<std::size_t>(r * dim + c);
      p.reference(r, c) = cdouble{re[k], im[k]};
    }

  // dependencies are structural: recompute and cross-check against the file
  MeasurementPattern derived = p;
  derive_dependencies(derived);
  for (const auto& [q, spec] : derived.measures) {
    auto it = p.measures.find(q);
    if (it == p.measures.end() || !(it->second == spec))
      throw std::invalid_argument(
          "pattern file: stored dependencies disagree with the trace");
  }
  if (j.contains("byproducts")) {
    for (const auto& [key, rule] : j.at("byproducts").items()) {
      ByproductRule stored;
      for (int d : rule.at("z_deps")) stored.z_deps.insert(d);
      for (int d : rule.at("x_deps")) stored.x_deps.insert(d);
      if (!(derived.byproducts.at(std::stoi(key)) == stored))
        throw std::invalid_argument(
            "pattern file: stored byproduct rules disagree with the trace");
    }
  }
  derived.validate();
  return derived;
}

}  // namespace mbqc
