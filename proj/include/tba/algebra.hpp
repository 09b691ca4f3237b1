#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tba/errors.hpp"
#include "tba/rational.hpp"

namespace tba {

class AlgebraElement;

/// One nonzero structure constant: the product b_a b_b contains value * b_c.
struct LambdaEntry {
  int a = 0;
  int b = 0;
  int c = 0;
  Rational value;

  friend bool operator==(const LambdaEntry& x, const LambdaEntry& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.value == y.value;
  }
};

/// Unvalidated description of a table algebra.  Index 0 is the unit basis
/// element; triples missing from lambda are zero.
struct RawAlgebra {
  int dim = 0;
  std::vector<LambdaEntry> lambda;
  std::vector<int> star;         ///< involution as a permutation of 0..dim-1
  std::vector<Rational> degrees; ///< claimed degrees, recomputed on validation
};

enum class Axiom { Unit, I, II, III, IV, Associativity };

std::string name(Axiom axiom);

/// A single broken identity, with the basis indices that witnessed it.
struct AxiomViolation {
  Axiom axiom = Axiom::I;
  std::vector<int> indices;
  Rational found;
  Rational expected;
  std::string note;  ///< extra context, e.g. "degree must be positive"

  std::string describe() const;
};

/// Thrown by TableAlgebra::validated when the input breaks an axiom.
struct AxiomError : Error {
  std::vector<AxiomViolation> violations;
  explicit AxiomError(std::vector<AxiomViolation> violations_);
};

struct ValidateOptions {
  /// Exhaustive associativity regardless of dimension.
  bool strict = false;
  /// Dimensions up to this bound always get the exhaustive check.
  int exhaustive_limit = 12;
  /// Number of sampled (a, b, c) triples above the bound.
  int samples = 1000;
  std::uint64_t sample_seed = 0;
};

class TableAlgebra;

struct ValidationResult {
  /// Null exactly when violations is nonempty.
  std::shared_ptr<const TableAlgebra> algebra;
  std::vector<AxiomViolation> violations;

  bool ok() const { return algebra != nullptr; }
};

/// A validated table algebra: distinguished basis with b_0 = 1, nonnegative
/// rational structure constants, involution * and positive degree map.
/// Instances are immutable and shared; elements keep their algebra alive.
class TableAlgebra : public std::enable_shared_from_this<TableAlgebra> {
 public:
  using Ptr = std::shared_ptr<const TableAlgebra>;

  /// Checks every axiom and returns either the algebra or the full list of
  /// violations.  Degrees are recomputed from lambda_{a,a*,0} and compared
  /// against the claimed values rather than taken on trust.
  static ValidationResult validate(const RawAlgebra& raw,
                                   const ValidateOptions& opts = {});

  /// Like validate() but throws AxiomError on any violation.
  static Ptr validated(const RawAlgebra& raw, const ValidateOptions& opts = {});

  int dim() const { return dim_; }
  int star(int b) const { return star_[b]; }
  const std::vector<int>& star_permutation() const { return star_; }
  const Rational& degree(int b) const { return degrees_[b]; }
  const std::vector<Rational>& degrees() const { return degrees_; }
  /// Sum of all degrees, written |B+|.
  const Rational& total_degree() const { return total_degree_; }
  bool commutative() const { return commutative_; }

  /// All nonzero structure constants, sorted by (a, b, c).
  const std::vector<LambdaEntry>& lambda_entries() const { return entries_; }
  /// The nonzero part of the product b_a b_b, sorted by c.
  std::span<const LambdaEntry> row(int a, int b) const;
  Rational lambda(int a, int b, int c) const;

  AlgebraElement element(std::vector<Rational> coeffs) const;
  AlgebraElement basis(int index) const;
  AlgebraElement one() const;
  AlgebraElement zero() const;
  /// Sum of the basis elements listed in indices, e.g. C+ for a subset C.
  AlgebraElement subset_sum(std::span<const int> indices) const;

  /// Matrix of left multiplication by x on the basis: column b holds the
  /// coefficients of x * b_b.
  std::vector<std::vector<Rational>> regular_matrix(
      const AlgebraElement& x) const;

  /// Structural equality: same dimension, star, degrees and constants.
  bool same_presentation(const TableAlgebra& other) const;

  RawAlgebra raw() const;

 private:
  TableAlgebra() = default;

  int dim_ = 0;
  std::vector<LambdaEntry> entries_;
  std::vector<std::size_t> row_offsets_;  // dim*dim + 1 slice bounds
  std::vector<int> star_;
  std::vector<Rational> degrees_;
  Rational total_degree_;
  bool commutative_ = false;
};

/// An element of the algebra with exact rational coordinates in the basis.
class AlgebraElement {
 public:
  AlgebraElement(TableAlgebra::Ptr algebra, std::vector<Rational> coeffs);

  const TableAlgebra& algebra() const { return *algebra_; }
  const TableAlgebra::Ptr& algebra_ptr() const { return algebra_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int b) const { return coeffs_[b]; }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  /// Bilinear product through the structure constants.
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement scaled(const Rational& factor) const;
  /// Applies the involution: coefficients move from b to b*.
  AlgebraElement star() const;
  /// Value of the degree homomorphism, sum of coeff_b * |b|.
  Rational degree() const;
  std::vector<int> support() const;
  bool is_zero() const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

 private:
  TableAlgebra::Ptr algebra_;
  std::vector<Rational> coeffs_;
};

}  // namespace tba
