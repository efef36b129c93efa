#include "sqkd/qsim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqkd {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool finite(const Amplitude& a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

// Index of the basis state for (a_bit, b_bit).
constexpr std::size_t idx(int a_bit, int b_bit) { return static_cast<std::size_t>(a_bit * 2 + b_bit); }

int bit_of(std::size_t index, Qubit q) {
  return q == Qubit::A ? static_cast<int>(index >> 1) : static_cast<int>(index & 1);
}

}  // namespace

TwoQubitState::TwoQubitState(const std::array<Amplitude, 4>& amp) : amp_(amp) {
  for (const auto& a : amp_) {
    if (!finite(a)) throw std::invalid_argument("TwoQubitState: non-finite amplitude");
  }
  if (std::abs(norm_squared() - 1.0) > kStateTolerance) {
    throw std::invalid_argument("TwoQubitState: not normalized");
  }
}

TwoQubitState TwoQubitState::basis(int a_bit, int b_bit) {
  std::array<Amplitude, 4> amp{};
  amp[idx(a_bit & 1, b_bit & 1)] = 1.0;
  return TwoQubitState(amp, Unchecked{});
}

double TwoQubitState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

bool is_unitary(const Gate::Matrix& m, double tol) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (!finite(m[r][c])) return false;
    }
  }
  // (U^dagger U)_{rc} = sum_k conj(U_{kr}) U_{kc}
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amplitude s = std::conj(m[0][r]) * m[0][c] + std::conj(m[1][r]) * m[1][c];
      const Amplitude expected = (r == c) ? 1.0 : 0.0;
      if (std::abs(s - expected) > tol) return false;
    }
  }
  return true;
}

Gate Gate::from_matrix(const Matrix& m) {
  if (!is_unitary(m)) throw std::invalid_argument("Gate: matrix is not unitary");
  return Gate(m);
}

Gate standard_gate(GateName name) {
  const Amplitude i1{0.0, 1.0};
  switch (name) {
    case GateName::I:
      return Gate::from_matrix({{{1.0, 0.0}, {0.0, 1.0}}});
    case GateName::H:
      return Gate::from_matrix({{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}});
    case GateName::X:
      return Gate::from_matrix({{{0.0, 1.0}, {1.0, 0.0}}});
    case GateName::Y:
      return Gate::from_matrix({{{0.0, -i1}, {i1, 0.0}}});
    case GateName::Z:
      return Gate::from_matrix({{{1.0, 0.0}, {0.0, -1.0}}});
    case GateName::SpinFlip:
      // |0><1| - |1><0|: |0> -> -|1>, |1> -> |0>.
      return Gate::from_matrix({{{0.0, 1.0}, {-1.0, 0.0}}});
  }
  throw std::invalid_argument("standard_gate: unknown gate");
}

GateName parse_gate_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "i") return GateName::I;
  if (lower == "h") return GateName::H;
  if (lower == "x") return GateName::X;
  if (lower == "y") return GateName::Y;
  if (lower == "z") return GateName::Z;
  if (lower == "spin_flip") return GateName::SpinFlip;
  throw std::invalid_argument("unknown gate name: " + std::string(name));
}

std::string_view gate_name_string(GateName name) {
  switch (name) {
    case GateName::I: return "i";
    case GateName::H: return "h";
    case GateName::X: return "x";
    case GateName::Y: return "y";
    case GateName::Z: return "z";
    case GateName::SpinFlip: return "spin_flip";
  }
  return "?";
}

TwoQubitState bell_phi_plus() {
  return TwoQubitState({kInvSqrt2, 0.0, 0.0, kInvSqrt2}, TwoQubitState::Unchecked{});
}

TwoQubitState apply_gate(const TwoQubitState& state, const Gate& g, Qubit target) {
  const auto& m = g.matrix();
  const auto& in = state.amp();
  std::array<Amplitude, 4> out{};
  for (int other = 0; other < 2; ++other) {
    for (int r = 0; r < 2; ++r) {
      Amplitude acc = 0.0;
      for (int c = 0; c < 2; ++c) {
        const std::size_t src = target == Qubit::A ? idx(c, other) : idx(other, c);
        acc += m[r][c] * in[src];
      }
      const std::size_t dst = target == Qubit::A ? idx(r, other) : idx(other, r);
      out[dst] = acc;
    }
  }
  return TwoQubitState(out, TwoQubitState::Unchecked{});
}

double prob_zero(const TwoQubitState& state, Qubit target) {
  double p = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (bit_of(i, target) == 0) p += std::norm(state[i]);
  }
  return p;
}

MeasurementRecord measure_z(const TwoQubitState& state, Qubit target, Rng& rng) {
  const double p0 = prob_zero(state, target);
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  const double p = outcome == 0 ? p0 : state.norm_squared() - p0;
  if (!(p > 0.0)) throw std::logic_error("measure_z: projected onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(p);
  std::array<Amplitude, 4> post{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (bit_of(i, target) == outcome) post[i] = state[i] * scale;
  }
  return {outcome, TwoQubitState(post, TwoQubitState::Unchecked{})};
}

}  // namespace sqkd
