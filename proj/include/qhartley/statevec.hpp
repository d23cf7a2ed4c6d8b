/**
 * Copyright 2026, the qhartley developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhartley/common.hpp"
#include "qhartley/rng.hpp"

namespace qhartley {

// Dense n-qubit state. Qubit 0 is the LEAST significant bit of the basis-state
// integer label; register blocks written |A⟩|B⟩ in math put A in the high bits.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<cx> amplitudes);

  static StateVector zero_state(int n_qubits);  // |0...0⟩
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
  const std::vector<cx>& amplitudes() const { return amps_; }
  std::vector<cx>& amplitudes() { return amps_; }
  cx amplitude(std::uint64_t index) const { return amps_.at(index); }

  double norm() const;
  void renormalize();

 private:
  int n_qubits_;
  std::vector<cx> amps_;
};

// One control condition: the gate fires only when `qubit` reads `value`.
struct ControlTerm {
  int qubit;
  bool value;
};

// Elementary gate under the paper-style cost model. `weight` is the number of
// elementary gates the object stands for in the tally (composite register
// operations like a controlled negation carry weight ⌈log N⌉; bookkeeping
// permutations carry weight 0).
class Gate {
 public:
  enum class Kind { SingleQubit, ControlledU, BasisPermutation, MultiControlledX };
  using Mat2 = std::array<cx, 4>;  // row-major {u00, u01, u10, u11}

  static Gate single_qubit(std::string family, int target, const Mat2& u);
  static Gate controlled_u(std::string family, std::vector<ControlTerm> controls, int target,
                           const Mat2& u, long long weight = 1);
  static Gate multi_controlled_x(std::string family, std::vector<ControlTerm> controls,
                                 int target, long long weight = 1);
  static Gate basis_permutation(std::string family, std::vector<int> qubits,
                                std::vector<std::uint64_t> image, long long weight = 1);

  Kind kind() const { return kind_; }
  const std::string& family() const { return family_; }
  long long weight() const { return weight_; }
  int target() const { return target_; }
  const std::vector<ControlTerm>& controls() const { return controls_; }
  const Mat2& block() const { return u_; }
  const std::vector<int>& permutation_qubits() const { return perm_qubits_; }
  const std::vector<std::uint64_t>& permutation_image() const { return perm_image_; }

  int max_qubit() const;
  Gate inverted() const;
  // Adds one more control; a basis permutation absorbs the control into its map.
  Gate with_extra_control(ControlTerm extra) const;
  // Conjugation by a qubit relabeling: every qubit index q becomes new_index[q].
  Gate relabeled(const std::vector<int>& new_index) const;

 private:
  Gate() = default;

  Kind kind_ = Kind::SingleQubit;
  std::string family_;
  long long weight_ = 1;
  int target_ = 0;
  Mat2 u_{};
  std::vector<ControlTerm> controls_;
  std::vector<int> perm_qubits_;
  std::vector<std::uint64_t> perm_image_;
};

// Per-family elementary-gate counts. Counts accumulate gate weights, so one
// composite Gate may contribute more than 1 to its family.
struct GateTally {
  std::map<std::string, long long> counts;
  long long total = 0;

  void record(const std::string& family, long long weight) {
    counts[family] += weight;
    total += weight;
  }
  GateTally& operator+=(const GateTally& other) {
    for (const auto& [k, v] : other.counts) counts[k] += v;
    total += other.total;
    return *this;
  }
  friend bool operator==(const GateTally& a, const GateTally& b) {
    return a.total == b.total && a.counts == b.counts;
  }
};

// Ordered gate list plus a final zero-cost qubit relabeling.
// final_relabel[p] = l means the qubit at physical position p holds logical bit l
// once the circuit has run; run_circuit applies it as a pure index remap.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::vector<int> final_relabel;

  static Circuit empty(int n_qubits);

  bool relabel_is_identity() const;
  void append_gate(Gate g) { gates.push_back(std::move(g)); }
  // Concatenation; a pending non-identity relabel is materialized as a
  // weight-0 permutation gate so tallies stay additive.
  void append_circuit(const Circuit& other);
  Circuit inverted() const;
  GateTally tally() const;
};

// Two-outcome projective observable given by the basis indices of M0;
// the complement is M1, so the pair always partitions the basis.
class Observable2 {
 public:
  Observable2(int n_qubits, std::vector<std::uint64_t> m0_indices);

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::uint64_t>& m0() const { return m0_; }

 private:
  int n_qubits_;
  std::vector<std::uint64_t> m0_;  // sorted, unique
};

struct MeasureResult {
  int outcome;  // 0 -> M0, 1 -> M1
  StateVector post_state;
  double prob0;
};

struct RegisterMeasureResult {
  std::uint64_t value;
  StateVector post_state;
};

StateVector apply_gate(const StateVector& state, const Gate& gate);
void apply_gate_inplace(StateVector& state, const Gate& gate);

// Applies the relabel as an index remap: bit relabel[p] of the new index is
// bit p of the old index.
StateVector apply_relabel(const StateVector& state, const std::vector<int>& relabel);

std::pair<StateVector, GateTally> run_circuit(const StateVector& state, const Circuit& circuit);

MeasureResult measure_observable(const StateVector& state, const Observable2& obs, Rng& rng);
MeasureResult measure_observable(const StateVector& state, const Observable2& obs,
                                 std::uint64_t rng_seed);

// Computational-basis measurement of a contiguous register [first, first + count).
RegisterMeasureResult measure_register(const StateVector& state, int first_qubit, int count,
                                       Rng& rng);

cx inner_product(const StateVector& a, const StateVector& b);

// Applies a dense K x K unitary to the contiguous register starting at first_qubit
// (K = 2^register qubits). Used for whole-register transforms.
void apply_register_unitary(StateVector& state, int first_qubit, const Eigen::MatrixXcd& u);

}  // namespace qhartley
