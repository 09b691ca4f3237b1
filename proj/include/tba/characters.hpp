#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "tba/algebra.hpp"
#include "tba/subsets.hpp"

namespace tba {

using Complex = std::complex<double>;

/// A trace function on the basis.  For irreducible characters block_degree
/// is the matrix size of the corresponding Wedderburn block.
struct Character {
  TableAlgebra::Ptr algebra;
  std::vector<Complex> values;  ///< chi(b_0), ..., chi(b_{d-1})
  int block_degree = 0;
  bool irreducible = false;

  Complex value(int b) const { return values[b]; }
  /// chi(b_0), the degree of the character.
  Complex at_one() const { return values[0]; }
};

/// Numerical health report of a computed character table.
struct ResidualReport {
  double max_idempotent = 0.0;    ///< max |E_i^2 - E_i| entrywise
  double max_gram_offdiag = 0.0;  ///< max |[chi_i, chi_j]|, i != j
  double min_gram_diag = 0.0;     ///< min [chi_i, chi_i]
  double max_trace = 0.0;         ///< max_b |tr R(b) - sum_i n_i chi_i(b)|
  double max_star_conj = 0.0;     ///< max |chi(b*) - conj(chi(b))|
  int attempts = 0;               ///< central elements tried before success
  std::uint64_t seed = 0;
};

/// Complete set of irreducible characters in a canonical order: ascending
/// block degree, ties broken by ascending lexicographic value rows.
struct CharacterTable {
  TableAlgebra::Ptr algebra;
  std::vector<Character> irreducibles;
  std::vector<int> block_dims;          ///< n_i per character
  std::vector<double> multiplicities;   ///< m_i = [chi_i, chi_i]
  int deg_index = -1;                   ///< position of the degree map
  double tolerance = 0.0;
  ResidualReport residuals;
};

/// Computes the character table by splitting the regular representation
/// along a random central element.  The exact center dimension, found over
/// the rationals first, arbitrates the eigenvalue clustering; up to eight
/// central elements are tried before SplittingFailed.
CharacterTable character_table(TableAlgebra::Ptr algebra, double tol = 1e-8,
                               std::uint64_t seed = 0);

/// The degree map as a character: chi(b) = |b|, block degree one.
Character degree_character(TableAlgebra::Ptr algebra);

/// Sum of the listed irreducibles of a table, by position.
Character character_sum(const CharacterTable& table,
                        std::span<const int> indices);

/// [chi, phi] = |B+|^-1 sum_b chi(b) phi(b*) / |b|.
Complex dual_form(const Character& chi, const Character& phi);
Complex dual_form(const TableAlgebra& algebra,
                  const std::vector<Complex>& chi,
                  const std::vector<Complex>& phi);

/// One coefficient per irreducible, with its nearest-integer reading.
struct Decomposition {
  std::vector<Complex> coefficients;
  std::vector<long long> rounded;
  /// True when every coefficient is within 1e-6 of a nonnegative integer.
  bool is_character = false;
};

/// Expands phi over the irreducibles, once through the dual form and once
/// through a least-squares solve; the two must agree within the table
/// tolerance or CrossCheckMismatch is thrown.
Decomposition decompose(const CharacterTable& table,
                        const std::vector<Complex>& phi);

/// K(chi) = { b : chi(b) = |b| chi(1) } as a closed subset.
/// Throws KernelNotClosed if the value-equality set fails closure.
ClosedSubset kernel(const Character& chi, double eps = 1e-6);

/// chi applied to the idempotent C+ / |C+|.
Complex value_at_idempotent(const Character& chi, const ClosedSubset& closed);

/// Pulls a character of the quotient back to the parent algebra through
/// psi_bar(b) = alpha_b psi(b / C).  Requires a normal closed subset.
/// When C is strongly normal, alpha_b = |b| is asserted exactly.
Character lift_character(const QuotientPresentation& quot,
                         const Character& psi);

/// Mapping established by lifting a full quotient character table.
struct EmbeddingReport {
  /// Index into the parent table for each quotient irreducible.
  std::vector<int> image;
  /// Parent irreducibles missed by the lift.
  std::vector<int> excluded;
  /// chi(C+ / |C+|) for every parent irreducible, in table order.
  std::vector<Complex> idempotent_values;
  double max_match_error = 0.0;
};

/// Checks that lifting embeds Irr(quotient) into Irr(parent) injectively and
/// that the image is exactly { chi : chi(C+/|C+|) != 0 }.  Any failure throws
/// EmbeddingMismatch.
EmbeddingReport embedding_check(const CharacterTable& parent,
                                const QuotientPresentation& quot,
                                const CharacterTable& quotient_table,
                                double eps = 1e-6);

}  // namespace tba
