#pragma once

// Exact pure-state simulation of independent two-qubit systems.
//
// Basis ordering is |q_A q_B>: index 0 = |00>, 1 = |01>, 2 = |10>, 3 = |11>,
// with Alice's qubit as the high bit.

#include <array>
#include <complex>
#include <string_view>

#include "sqkd/rng.hpp"

namespace sqkd {

using Amplitude = std::complex<double>;

inline constexpr double kStateTolerance = 1e-12;

enum class Qubit { A, B };

class Gate;
struct MeasurementRecord;

class TwoQubitState {
 public:
  /// Throws std::invalid_argument unless the amplitudes are finite and the
  /// squared magnitudes sum to 1 within kStateTolerance.
  explicit TwoQubitState(const std::array<Amplitude, 4>& amp);

  static TwoQubitState basis(int a_bit, int b_bit);

  const std::array<Amplitude, 4>& amp() const { return amp_; }
  const Amplitude& operator[](std::size_t i) const { return amp_[i]; }
  double norm_squared() const;

 private:
  struct Unchecked {};
  TwoQubitState(const std::array<Amplitude, 4>& amp, Unchecked) : amp_(amp) {}
  friend TwoQubitState bell_phi_plus();
  friend TwoQubitState apply_gate(const TwoQubitState&, const Gate&, Qubit);
  friend MeasurementRecord measure_z(const TwoQubitState&, Qubit, Rng&);

  std::array<Amplitude, 4> amp_;
};

enum class GateName { I, H, X, Y, Z, SpinFlip };

/// Single-qubit unitary. Row-major: m[r][c] = <r|U|c>.
class Gate {
 public:
  using Matrix = std::array<std::array<Amplitude, 2>, 2>;

  /// Throws std::invalid_argument if the matrix is not unitary within
  /// kStateTolerance or has non-finite entries.
  static Gate from_matrix(const Matrix& m);

  const Matrix& matrix() const { return m_; }

 private:
  explicit Gate(const Matrix& m) : m_(m) {}
  Matrix m_;
};

bool is_unitary(const Gate::Matrix& m, double tol = kStateTolerance);

Gate standard_gate(GateName name);

/// Parses "i", "h", "x", "y", "z", "spin_flip" (case-insensitive).
/// Throws std::invalid_argument on unknown names.
GateName parse_gate_name(std::string_view name);
std::string_view gate_name_string(GateName name);

/// (1/sqrt2)(|00> + |11>)
TwoQubitState bell_phi_plus();

/// Returns (g (x) I)|state> for target A, (I (x) g)|state> for target B.
TwoQubitState apply_gate(const TwoQubitState& state, const Gate& g, Qubit target);

struct MeasurementRecord {
  int outcome;
  TwoQubitState post_state;
};

/// Z-basis measurement of one qubit. Outcome 0 iff rng.uniform() < P(0).
MeasurementRecord measure_z(const TwoQubitState& state, Qubit target, Rng& rng);

/// Probability of reading 0 on `target`.
double prob_zero(const TwoQubitState& state, Qubit target);

}  // namespace sqkd
