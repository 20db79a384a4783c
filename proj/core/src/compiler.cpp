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

#include "mbqc/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mbqc/stabilizer.hpp"

namespace mbqc {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

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

Eigen::MatrixXcd lift_1q(const Eigen::Matrix2cd& u, int q, int width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int bi = (i & bit) ? 1 : 0;
    out(i, i) += u(bi, bi);
    out(i ^ bit, i) += u(1 - bi, bi);
  }
  return out;
}

Eigen::MatrixXcd lift_cnot(int c, int t, int width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index j =
        (i & (Eigen::Index{1} << c)) ? i ^ (Eigen::Index{1} << t) : i;
    out(j, i) = 1.0;
  }
  return out;
}

// Gate slice over the full register: the gate's pattern on its wires, every
// other wire passing through untouched.
MeasurementPattern rotation_slice(int width, int wire, double zeta, double eta,
                                  double xi, bool as_hadamard) {
  MeasurementPattern p;
  // passthrough wires get one qubit; the rotated wire gets a 5-qubit chain
  int next = 0;
  std::vector<int> chain;
  for (int k = 0; k < width; ++k) {
    if (k == wire) {
      for (int j = 0; j < 5; ++j) chain.push_back(next++);
    } else {
      ++next;
    }
  }
  // wire k's input qubit id
  std::vector<int> wire_in(width), wire_out(width);
  next = 0;
  for (int k = 0; k < width; ++k) {
    if (k == wire) {
      wire_in[k] = next;
      wire_out[k] = next + 4;
      next += 5;
    } else {
      wire_in[k] = wire_out[k] = next++;
    }
  }
  p.qubits.resize(next);
  for (int i = 0; i < next; ++i) p.qubits[i] = i;
  p.inputs = wire_in;
  p.outputs = wire_out;
  const double angles[4] = {0.0, -xi, -eta, -zeta};
  for (int j = 0; j < 4; ++j) {
    p.edges.emplace_back(chain[j], chain[j + 1]);
    p.measures[chain[j]] = MeasureSpec::equatorial({angles[j], 1, {}});
    p.trace.push_back(LinkElem{wire, chain[j]});
  }
  const Eigen::Matrix2cd u =
      as_hadamard ? hadamard()
                  : Eigen::Matrix2cd(rot_x(zeta) * rot_z(eta) * rot_x(xi));
  p.reference = lift_1q(u, wire, width);
  derive_dependencies(p);
  return p;
}

MeasurementPattern cnot_slice(int width, int c, int t) {
  MeasurementPattern p;
  // control wire reuses its qubit (also the star attachment point); the
  // target wire runs input -> middle -> output
  std::vector<int> wire_in(width), wire_out(width);
  int next = 0;
  int target_in = -1, mid = -1, target_out = -1, control = -1;
  for (int k = 0; k < width; ++k) {
    if (k == t) {
      target_in = next;
      mid = next + 1;
      target_out = next + 2;
      wire_in[k] = target_in;
      wire_out[k] = target_out;
      next += 3;
    } else {
      wire_in[k] = wire_out[k] = next++;
    }
  }
  control = wire_in[c];
  p.qubits.resize(next);
  for (int i = 0; i < next; ++i) p.qubits[i] = i;
  p.inputs = wire_in;
  p.outputs = wire_out;
  p.edges = {{std::min(control, mid), std::max(control, mid)},
             {target_in, mid},
             {mid, target_out}};
  p.measures[target_in] = MeasureSpec::equatorial({0.0, 1, {}});
  p.measures[mid] = MeasureSpec::equatorial({0.0, 1, {}});
  p.trace.push_back(CnotElem{c, t, target_in, mid});
  p.reference = lift_cnot(c, t, width);
  derive_dependencies(p);
  return p;
}

MeasurementPattern gate_slice(int width, const Gate& g) {
  if (const auto* rot = std::get_if<RotGate>(&g))
    return rotation_slice(width, rot->q, rot->zeta, rot->eta, rot->xi, false);
  if (const auto* h = std::get_if<HGate>(&g))
    return rotation_slice(width, h->q, kPi / 2, kPi / 2, kPi / 2, true);
  const auto& cx = std::get<CnotGate>(g);
  return cnot_slice(width, cx.c, cx.t);
}

void check_gate(const Circuit& c, const Gate& g) {
  auto check_q = [&](int q) {
    if (q < 0 || q >= c.width)
      throw std::invalid_argument("circuit: qubit index out of range");
  };
  if (const auto* rot = std::get_if<RotGate>(&g)) {
    check_q(rot->q);
  } else if (const auto* h = std::get_if<HGate>(&g)) {
    check_q(h->q);
  } else {
    const auto& cx = std::get<CnotGate>(g);
    check_q(cx.c);
    check_q(cx.t);
    if (cx.c == cx.t)
      throw std::invalid_argument("circuit: CNOT needs distinct qubits");
  }
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  std::string line;
  int lineno = 0;
  bool have_width = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string op;
    if (!(row >> op)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("circuit line " + std::to_string(lineno) +
                                  ": " + msg);
    };
    if (!have_width) {
      if (op != "WIDTH") fail("expected \"WIDTH w\" first");
      if (!(row >> c.width) || c.width < 1) fail("bad width");
      if (c.width > kMaxCircuitWidth) fail("width over cap");
      have_width = true;
      continue;
    }
    if (op == "ROT") {
      RotGate g;
      if (!(row >> g.q >> g.zeta >> g.eta >> g.xi))
        fail("expected \"ROT q zeta eta xi\"");
      c.gates.emplace_back(g);
    } else if (op == "CNOT") {
      CnotGate g;
      if (!(row >> g.c >> g.t)) fail("expected \"CNOT c t\"");
      c.gates.emplace_back(g);
    } else if (op == "H") {
      HGate g;
      if (!(row >> g.q)) fail("expected \"H q\"");
      c.gates.emplace_back(g);
    } else {
      fail("unsupported gate \"" + op + "\"");
    }
    check_gate(c, c.gates.back());
  }
  if (!have_width) throw std::invalid_argument("circuit: missing WIDTH line");
  return c;
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open circuit file: " + path);
  return parse_circuit(in);
}

MeasurementPattern compile_circuit(const Circuit& c) {
  if (c.width < 1 || c.width > kMaxCircuitWidth)
    throw std::invalid_argument("compile: width over cap");
  for (const auto& g : c.gates) check_gate(c, g);
  MeasurementPattern p = identity_pattern(c.width);
  for (const auto& g : c.gates) {
    const MeasurementPattern slice = gate_slice(c.width, g);
    std::map<int, int> wiring;
    for (int k = 0; k < c.width; ++k) wiring[p.outputs[k]] = slice.inputs[k];
    p = compose(p, slice, wiring);
  }
  return p;
}

StateVector reference_simulate(const Circuit& c, StateVector input) {
  if (input.n_qubits() != c.width)
    throw std::invalid_argument("reference_simulate: width mismatch");
  for (const auto& g : c.gates) {
    check_gate(c, g);
    if (const auto* rot = std::get_if<RotGate>(&g)) {
      apply_1q(input, rot->q,
               Eigen::Matrix2cd(rot_x(rot->zeta) * rot_z(rot->eta) *
                                rot_x(rot->xi)));
    } else if (const auto* h = std::get_if<HGate>(&g)) {
      apply_1q(input, h->q, hadamard());
    } else {
      const auto& cx = std::get<CnotGate>(g);
      // |1><1|_c (x) X_t via  H_t cPhase H_t
      apply_1q(input, cx.t, hadamard());
      apply_cphase(input, cx.c, cx.t);
      apply_1q(input, cx.t, hadamard());
    }
  }
  return input;
}

namespace {

StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cdouble> amps(std::size_t{1} << n);
  for (auto& a : amps) a = cdouble{gauss(rng), gauss(rng)};
  StateVector s(n, std::move(amps));
  s.renormalize();
  return s;
}

}  // namespace

CompilationReport verify_circuit(const Circuit& c, const VerifyOptions& opts) {
  const MeasurementPattern pattern = compile_circuit(c);
  CompilationReport report;
  report.pattern_qubits = static_cast<int>(pattern.qubits.size());
  report.measurement_rounds =
      static_cast<int>(temporal_rounds(pattern).size());
  report.min_fidelity = 1.0;

  if (opts.exhaustive && pattern.measured_count() > kMaxExhaustiveMeasured)
    throw std::invalid_argument(
        "exhaustive verification capped at 16 measured qubits");

  Rng input_rng(derive_subseed(opts.seed, 0x1e5));
  for (int i = 0; i < opts.n_random_inputs; ++i) {
    const StateVector input = random_state(c.width, input_rng);
    const StateVector expect = reference_simulate(c, input);
    if (opts.exhaustive) {
      const auto branches = enumerate_branches(pattern, input);
      for (const auto& run : branches) {
        const double f = fidelity(corrected_output(run), expect);
        report.min_fidelity = std::min(report.min_fidelity, f);
        ++report.branches_verified;
        if (i == 0 && !report.byproducts_truncated) {
          if (report.per_branch_byproducts.size() < kMaxReportedBranches) {
            BranchByproduct bb;
            for (int q : measurement_order(pattern))
              bb.outcomes.push_back(run.outcomes.bits.at(q));
            bb.z = run.byproduct.z;
            bb.x = run.byproduct.x;
            report.per_branch_byproducts.push_back(std::move(bb));
          } else {
            report.per_branch_byproducts.clear();
            report.byproducts_truncated = true;
          }
        }
      }
    } else {
      Rng branch_rng(derive_subseed(opts.seed, 0xb0 + i));
      for (long t = 0; t < opts.sampled_trials; ++t) {
        const PatternRun run = run_pattern(pattern, input, branch_rng);
        const double f = fidelity(corrected_output(run), expect);
        report.min_fidelity = std::min(report.min_fidelity, f);
        ++report.branches_verified;
      }
    }
    ++report.inputs_checked;
  }
  report.passed = report.min_fidelity >= opts.min_branch_fidelity;
  return report;
}

json report_to_json(const CompilationReport& r) {
  json j;
  j["pattern_qubits"] = r.pattern_qubits;
  j["measurement_rounds"] = r.measurement_rounds;
  j["branches_verified"] = r.branches_verified;
  j["inputs_checked"] = r.inputs_checked;
  j["min_fidelity"] = r.min_fidelity;
  j["passed"] = r.passed;
  j["byproducts_truncated"] = r.byproducts_truncated;
  json byp = json::array();
  for (const auto& b : r.per_branch_byproducts)
    byp.push_back(json{{"outcomes", b.outcomes}, {"z", b.z}, {"x", b.x}});
  j["per_branch_byproducts"] = byp;
  return j;
}

GridDemoResult run_grid_demo(std::uint64_t seed) {
  // CNOT pattern sites inside a 3x3 cluster, row-major vertex ids:
  //   control in/out (0,1)=1, target in (1,0)=3, middle (1,1)=4,
  //   target out (1,2)=5; the other five sites are removed by Z measurements.
  const Graph grid = Graph::grid(3, 3);
  const std::vector<int> unused = {0, 2, 6, 7, 8};
  const int control = 1, target_in = 3, mid = 4, target_out = 5;

  Rng rng(derive_subseed(seed, 0x9d));
  const StateVector input = random_state(2, rng);

  Circuit circuit;
  circuit.width = 2;
  circuit.gates.emplace_back(CnotGate{0, 1});
  const StateVector expect = reference_simulate(circuit, input);

  GridDemoResult result;
  result.grid_qubits = grid.n_vertices();
  result.removed_sites = static_cast<int>(unused.size());
  result.min_fidelity = 1.0;

  // cluster with input: wires (control, target) at sites 1 and 3
  StateVector base = tensor(input, new_plus_state(7));
  std::vector<int> perm = {control, target_in, 0, 2, mid, target_out, 6, 7, 8};
  base = permute_qubits(base, perm);
  for (const auto& [a, b] : grid.edges()) apply_cphase(base, a, b);

  // enumerate all Z-removal branches x all pattern branches
  struct Frame {
    StateVector state;
    std::vector<int> live;
    std::size_t step;
    double prob;
    std::vector<int> zs;
  };
  std::vector<Frame> stack;
  stack.push_back({base, {0, 1, 2, 3, 4, 5, 6, 7, 8}, 0, 1.0, {}});
  const MeasurementBasis zb = MeasurementBasis::z();
  const MeasurementBasis xb = MeasurementBasis::equatorial(0.0);
  const Eigen::Matrix2cd zgate = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

  auto position = [](const std::vector<int>& live, int q) {
    return static_cast<int>(
        std::lower_bound(live.begin(), live.end(), q) - live.begin());
  };

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.step < unused.size()) {
      const int site = unused[f.step];
      auto [lo, hi] = measure_both(f.state, position(f.live, site), zb);
      for (auto* res : {&lo, &hi}) {
        if (res->probability < kForbiddenBranchTol) continue;
        Frame next{std::move(res->post), f.live, f.step + 1,
                   f.prob * res->probability, f.zs};
        next.live.erase(std::lower_bound(next.live.begin(), next.live.end(), site));
        next.zs.push_back(res->outcome);
        if (res->outcome == 1) {
          // Z on the still-live former neighbors restores the cluster
          for (int nb : grid.neighbors(site)) {
            const auto it =
                std::lower_bound(next.live.begin(), next.live.end(), nb);
            if (it != next.live.end() && *it == nb)
              apply_1q(next.state, position(next.live, nb), zgate);
          }
        }
        stack.push_back(std::move(next));
      }
      continue;
    }
    // remaining register: the four pattern sites; measure target_in and mid
    for (int s2 = 0; s2 < 2; ++s2) {
      MeasureResult r2 = measure(f.state, position(f.live, target_in), xb, s2);
      std::vector<int> live2 = f.live;
      live2.erase(std::lower_bound(live2.begin(), live2.end(), target_in));
      for (int s3 = 0; s3 < 2; ++s3) {
        MeasureResult r3 = measure(r2.post, position(live2, mid), xb, s3);
        std::vector<int> live3 = live2;
        live3.erase(std::lower_bound(live3.begin(), live3.end(), mid));
        StateVector out = r3.post;  // qubits {control, target_out} in order
        // byproduct: Z_c^{s2}, then X_t^{s3} Z_t^{s2}
        if (s2) apply_1q(out, position(live3, control), zgate);
        if (s2) apply_1q(out, position(live3, target_out), zgate);
        if (s3)
          apply_1q(out, position(live3, target_out),
                   (Eigen::Matrix2cd() << 0, 1, 1, 0).finished());
        const double fid = fidelity(out, expect);
        result.min_fidelity = std::min(result.min_fidelity, fid);
        ++result.branches;
      }
    }
  }
  result.passed = result.min_fidelity >= 1.0 - 1e-9;
  return result;
}

}  // namespace mbqc
