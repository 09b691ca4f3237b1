#pragma once

#include <string>
#include <vector>

#include "tba/characters.hpp"

namespace tba {

/// Pointwise character product (chi psi)(b) = chi(b) psi(b) / |b|.
Character product(const Character& chi, const Character& psi);

/// chi^j with chi^j(b) = chi(b)^j / |b|^(j-1); chi^0 is the degree map.
Character power(const Character& chi, int j);

/// The distinct values of chi(b) / |b|, clustered within tol.
struct DistinctValues {
  int k = 0;
  /// Cluster representatives; alpha_1 = chi(1) comes first, the rest in
  /// descending real-then-imaginary order.
  std::vector<Complex> values;
  /// Basis indices taking each value, aligned with values.
  std::vector<std::vector<int>> classes;
};

DistinctValues distinct_values(const Character& chi, double tol = 1e-6);

/// Everything the power-coverage checker establishes about one character.
struct BBReport {
  int k = 0;
  std::vector<Complex> alpha;               ///< distinct chi(b)/|b|
  std::vector<std::vector<int>> value_classes;

  bool hypothesis_kernel_ok = false;        ///< K(chi) = {b_0}
  bool hypothesis_powers_ok = false;        ///< chi^1..chi^(k-1) are characters
  std::vector<std::string> hypothesis_failures;

  struct PowerRow {
    std::vector<Complex> values;
    /// False when the power left the span of the irreducible characters.
    bool in_span = true;
    Decomposition decomposition;
  };
  std::vector<PowerRow> powers;             ///< chi^0 .. chi^(k-1)

  /// Smallest power containing each irreducible, -1 when never covered.
  std::vector<int> first_appearance;
  /// True exactly when every irreducible appears in some power.
  bool covered = false;

  /// prod_{t<u} (alpha_t - alpha_u); near zero signals merged value classes.
  Complex vandermonde{};
  bool vandermonde_near_zero = false;
  /// beta[t][i] = sum over b in class t of chi_i(b*).
  std::vector<std::vector<Complex>> beta;
  /// max | [chi^j, chi_i] - |B+|^-1 sum_t alpha_t^j beta[t][i] |.
  double duality_residual = 0.0;

  /// Decomposition of b |-> tr R(b), the regular character, offered as the
  /// alternative reading of the zeroth power.
  Decomposition regular_chi0;
  std::string chi0_note;
};

/// Runs the full checker: value classes, both hypotheses, decompositions of
/// chi^0..chi^(k-1), coverage of the irreducibles and the diagnostics above.
/// Hypothesis failures are reported in the result, not thrown.
BBReport burnside_brauer(const CharacterTable& table, const Character& chi,
                         double tol = 1e-6);

}  // namespace tba
