/**
 * Copyright 2026, the qhartley developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qhartley {

using cx = std::complex<double>;

// Centralized tolerance constants. Every module compares against these;
// no other magic epsilons are allowed in library code.
inline constexpr double kEpsUnitary = 1e-12;  // gate-block unitarity
inline constexpr double kEpsState = 1e-9;     // state / circuit equality (max-norm)
inline constexpr double kEpsProb = 1e-10;     // norm & probability drift
inline constexpr double kMeasureFloor = 1e-14;  // projecting below this is an impossible branch

// Domain precondition violated (bad argument, invalid serial, label outside X, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Size/memory budget exceeded (qubit cap, command budget).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serial-number recovery could not decide between candidates at the given precision.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Qubit cap for state allocation, read once from QHARTLEY_MAX_QUBITS (default 22).
int max_qubit_budget();

// Exact rational, used for the analytic gate-count models.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw PreconditionError("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  // NOLINTNEXTLINE(google-explicit-constructor)
  Rational(long long n) : num(n), den(1) {}

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw PreconditionError("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace qhartley
