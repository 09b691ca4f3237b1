#include "tba/subsets.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tba {

namespace {

std::vector<char> mask_of(int dim, std::span<const int> indices) {
  std::vector<char> mask(dim, 0);
  for (int i : indices) {
    if (i < 0 || i >= dim) throw ShapeMismatch("subset index out of range");
    mask[i] = 1;
  }
  return mask;
}

/// Supp(b_b* C+ b_b) inside C, the elementwise strong-normality test.
bool star_conjugate_inside(const TableAlgebra& algebra,
                           const AlgebraElement& csum,
                           const std::vector<char>& mask, int b) {
  const auto conj =
      algebra.basis(algebra.star(b)) * csum * algebra.basis(b);
  for (int s : conj.support()) {
    if (!mask[s]) return false;
  }
  return true;
}

}  // namespace

ClosedSubset::ClosedSubset(TableAlgebra::Ptr algebra, std::vector<int> indices)
    : algebra_(std::move(algebra)),
      indices_(std::move(indices)),
      sum_(algebra_->subset_sum(indices_)),
      total_degree_(sum_.degree()) {
  const TableAlgebra& A = *algebra_;
  const int d = A.dim();
  const auto mask = mask_of(d, indices_);

  // Normality from supports, cross-checked against exact centrality of C+.
  bool by_support = true;
  bool by_centrality = true;
  for (int b = 0; b < d; ++b) {
    const auto left = sum_ * A.basis(b);
    const auto right = A.basis(b) * sum_;
    if (left.support() != right.support()) by_support = false;
    if (!(left == right)) by_centrality = false;
  }
  if (by_support != by_centrality) {
    throw InternalInconsistency(
        "support normality and centrality of the subset idempotent disagree");
  }
  normal_ = by_support;

  strongly_normal_ = true;
  for (int b = 0; b < d; ++b) {
    if (!star_conjugate_inside(A, sum_, mask, b)) {
      strongly_normal_ = false;
      break;
    }
  }
}

bool ClosedSubset::contains(int b) const {
  return std::binary_search(indices_.begin(), indices_.end(), b);
}

ClosedSubset ClosedSubset::from_indices(TableAlgebra::Ptr algebra,
                                        std::vector<int> indices) {
  if (!algebra) throw ShapeMismatch("null algebra");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const int d = algebra->dim();
  const auto mask = mask_of(d, indices);
  if (indices.empty() || !mask[0]) {
    throw NotClosed("a closed subset must contain the unit");
  }
  for (int a : indices) {
    for (int b : indices) {
      for (const auto& e : algebra->row(algebra->star(a), b)) {
        if (!mask[e.c]) {
          throw NotClosed("Supp(b_" + std::to_string(a) + "* b_" +
                          std::to_string(b) + ") leaves the subset at " +
                          std::to_string(e.c));
        }
      }
    }
  }
  return ClosedSubset(std::move(algebra), std::move(indices));
}

ClosedSubset closure(TableAlgebra::Ptr algebra, std::span<const int> seed) {
  if (!algebra) throw ShapeMismatch("null algebra");
  const int d = algebra->dim();
  auto mask = mask_of(d, seed);
  mask[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> current;
    for (int i = 0; i < d; ++i) {
      if (mask[i]) current.push_back(i);
    }
    for (int a : current) {
      for (int b : current) {
        for (const auto& e : algebra->row(algebra->star(a), b)) {
          if (!mask[e.c]) {
            mask[e.c] = 1;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<int> indices;
  for (int i = 0; i < d; ++i) {
    if (mask[i]) indices.push_back(i);
  }
  return ClosedSubset::from_indices(std::move(algebra), std::move(indices));
}

std::vector<ClosedSubset> enumerate_closed_subsets(TableAlgebra::Ptr algebra,
                                                   std::size_t max_count) {
  if (!algebra) throw ShapeMismatch("null algebra");
  const int d = algebra->dim();
  std::set<std::vector<int>> found;
  for (int b = 0; b < d; ++b) {
    const int seed[] = {b};
    found.insert(closure(algebra, seed).indices());
  }
  // Saturate under pairwise joins; every closed subset is a join of
  // singleton closures, so the fixed point is the full lattice.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> merged = snapshot[i];
        merged.insert(merged.end(), snapshot[j].begin(), snapshot[j].end());
        auto joined = closure(algebra, merged).indices();
        if (found.insert(std::move(joined)).second) {
          grew = true;
          if (found.size() > max_count) {
            throw SizeLimitExceeded("more than " + std::to_string(max_count) +
                                    " closed subsets");
          }
        }
      }
    }
  }
  std::vector<ClosedSubset> out;
  out.reserve(found.size());
  for (const auto& indices : found) {
    out.push_back(ClosedSubset::from_indices(algebra, indices));
  }
  std::sort(out.begin(), out.end(),
            [](const ClosedSubset& x, const ClosedSubset& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.indices() < y.indices();
            });
  return out;
}

std::vector<std::vector<int>> double_cosets(const ClosedSubset& closed) {
  const auto& algebra = closed.algebra_ptr();
  const int d = algebra->dim();
  std::vector<int> owner(d, -1);
  std::vector<std::vector<int>> blocks;
  for (int b = 0; b < d; ++b) {
    if (owner[b] != -1) continue;
    const auto spread = closed.sum() * algebra->basis(b) * closed.sum();
    auto block = spread.support();
    for (int x : block) {
      if (owner[x] != -1) {
        throw InternalInconsistency("double cosets do not partition the basis");
      }
      owner[x] = static_cast<int>(blocks.size());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Rational alpha_scalar(const ClosedSubset& closed, int b) {
  const TableAlgebra& A = closed.algebra();
  if (b < 0 || b >= A.dim()) throw ShapeMismatch("basis index out of range");
  const auto lhs = closed.sum() * A.basis(b);  // C+ b
  const auto supp = lhs.support();
  Rational supp_degree(0);
  for (int x : supp) supp_degree += A.degree(x);
  const Rational alpha = closed.total_degree() * A.degree(b) / supp_degree;
  for (int x : supp) {
    if (lhs[x] != alpha) {
      throw AlphaIdentityFailed(
          "C+ b_" + std::to_string(b) + " is not flat on its support: found " +
          to_string(lhs[x]) + " at " + std::to_string(x) + ", expected " +
          to_string(alpha));
    }
  }
  return alpha;
}

QuotientPresentation quotient(const ClosedSubset& closed) {
  const auto& algebra = closed.algebra_ptr();
  const int d = algebra->dim();
  auto cosets = double_cosets(closed);
  const int k = static_cast<int>(cosets.size());

  std::vector<int> reps(k);
  std::vector<int> coset_of(d, -1);
  for (int i = 0; i < k; ++i) {
    reps[i] = cosets[i].front();
    for (int x : cosets[i]) coset_of[x] = i;
  }

  std::vector<AlgebraElement> sums;
  sums.reserve(k);
  for (const auto& block : cosets) sums.push_back(algebra->subset_sum(block));
  const Rational& csize = closed.total_degree();

  RawAlgebra raw;
  raw.dim = k;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      // prod[t] = sum over r in coset i, s in coset j of lambda_{r,s,t};
      // gamma_ijk is that sum over |C+|, for any t in coset kk.
      const auto prod = sums[i] * sums[j];
      for (int kk = 0; kk < k; ++kk) {
        const Rational& pinned = prod[cosets[kk].front()];
        for (int t : cosets[kk]) {
          if (prod[t] != pinned) {
            throw RepresentativeDependence(
                "gamma_(" + std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(kk) + ") changes between representatives " +
                std::to_string(cosets[kk].front()) + " and " +
                std::to_string(t));
          }
        }
        if (pinned != 0) raw.lambda.push_back({i, j, kk, pinned / csize});
      }
    }
  }

  raw.star.resize(k);
  for (int i = 0; i < k; ++i) {
    const int target = coset_of[algebra->star(reps[i])];
    for (int x : cosets[i]) {
      if (coset_of[algebra->star(x)] != target) {
        throw InternalInconsistency(
            "involution does not map double cosets onto double cosets");
      }
    }
    raw.star[i] = target;
  }

  raw.degrees.resize(k);
  for (int i = 0; i < k; ++i) {
    Rational block_degree(0);
    for (int x : cosets[i]) block_degree += algebra->degree(x);
    raw.degrees[i] = block_degree / csize;
  }

  QuotientPresentation out{closed,
                           std::move(cosets),
                           std::move(reps),
                           std::move(coset_of),
                           {},
                           TableAlgebra::validated(raw)};
  if (closed.normal()) {
    out.alphas.reserve(d);
    for (int b = 0; b < d; ++b) out.alphas.push_back(alpha_scalar(closed, b));
  }
  return out;
}

std::vector<int> quotient_degree_one_set(const ClosedSubset& closed) {
  const auto presentation = quotient(closed);
  const TableAlgebra& A = closed.algebra();
  const int d = A.dim();
  const auto mask = mask_of(d, closed.indices());

  std::vector<int> by_degree;
  std::vector<int> by_conjugation;
  for (int b = 0; b < d; ++b) {
    if (presentation.algebra->degree(presentation.coset_of[b]) == 1) {
      by_degree.push_back(b);
    }
    if (star_conjugate_inside(A, closed.sum(), mask, b)) {
      by_conjugation.push_back(b);
    }
  }
  if (by_degree != by_conjugation) {
    throw DegreeOneMismatch(
        "degree-one cosets and star-conjugation containment disagree");
  }
  return by_degree;
}

}  // namespace tba
