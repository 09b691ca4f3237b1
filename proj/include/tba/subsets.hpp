#pragma once

#include <vector>

#include "tba/algebra.hpp"

namespace tba {

/// A closed subset C: contains the unit and Supp(a* b) for all a, b in C.
/// Normality facts are computed once at construction.
class ClosedSubset {
 public:
  /// Wraps an index set after checking closedness; throws NotClosed.
  static ClosedSubset from_indices(TableAlgebra::Ptr algebra,
                                   std::vector<int> indices);

  const TableAlgebra::Ptr& algebra_ptr() const { return algebra_; }
  const TableAlgebra& algebra() const { return *algebra_; }
  /// Sorted member indices; always starts with 0.
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool contains(int b) const;
  /// The element C+, the sum of all members.
  const AlgebraElement& sum() const { return sum_; }
  /// |C+|, the degree of the sum.
  const Rational& total_degree() const { return total_degree_; }

  /// True when Supp(C+ b) = Supp(b C+) for every b.  Cross-checked against
  /// centrality of C+ / |C+|; disagreement throws InternalInconsistency.
  bool normal() const { return normal_; }
  /// True when Supp(b* C+ b) lies inside C for every b.
  bool strongly_normal() const { return strongly_normal_; }

  friend bool operator==(const ClosedSubset& x, const ClosedSubset& y) {
    return x.indices_ == y.indices_;
  }

 private:
  ClosedSubset(TableAlgebra::Ptr algebra, std::vector<int> indices);

  TableAlgebra::Ptr algebra_;
  std::vector<int> indices_;
  AlgebraElement sum_;
  Rational total_degree_;
  bool normal_ = false;
  bool strongly_normal_ = false;
};

/// Smallest closed subset containing the seed indices.
ClosedSubset closure(TableAlgebra::Ptr algebra, std::span<const int> seed);

/// All closed subsets, sorted by size then lexicographically.  Throws
/// SizeLimitExceeded when more than max_count candidates appear.
std::vector<ClosedSubset> enumerate_closed_subsets(
    TableAlgebra::Ptr algebra, std::size_t max_count = 1000000);

/// The partition of the basis into double cosets C b C, each block sorted,
/// blocks ordered by their smallest member.  Block 0 is C itself.
std::vector<std::vector<int>> double_cosets(const ClosedSubset& closed);

/// The scalar alpha_b with C+ b_b = alpha_b (Cb)+; requires a normal C.
/// Throws AlphaIdentityFailed when C+ b_b is not flat on its support.
Rational alpha_scalar(const ClosedSubset& closed, int b);

/// Quotient of an algebra by a closed subset through double cosets.
struct QuotientPresentation {
  ClosedSubset closed;
  /// Double cosets, ordered by smallest member; coset 0 is C.
  std::vector<std::vector<int>> cosets;
  /// Smallest member of each coset, used as its representative.
  std::vector<int> reps;
  /// Coset index of every basis element of the parent algebra.
  std::vector<int> coset_of;
  /// alpha_b for every basis element; filled only when C is normal.
  std::vector<Rational> alphas;
  /// The quotient as a validated table algebra on the cosets.
  TableAlgebra::Ptr algebra;
};

/// Builds the quotient table algebra with structure constants
/// gamma_ijk = |C+|^-1 sum over r in Cb_iC, s in Cb_jC of lambda_{r,s,t}.
/// Every t in the target coset is tried; a disagreement throws
/// RepresentativeDependence.
QuotientPresentation quotient(const ClosedSubset& closed);

/// Elements whose double coset maps to a degree-one quotient element,
/// computed both from quotient degrees and from b* C b inside C.
/// The two sets must agree; disagreement throws DegreeOneMismatch.
std::vector<int> quotient_degree_one_set(const ClosedSubset& closed);

}  // namespace tba
