#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "tba/io.hpp"
#include "tba/subsets.hpp"

using tba::AlgebraElement;
using tba::ClosedSubset;
using tba::Rational;
using tba::TableAlgebra;

namespace {

// Brute-force closedness: every product a* b of members stays supported
// inside the set.  Used as an independent route against the enumerator.
bool mask_is_closed(const TableAlgebra::Ptr& algebra, unsigned mask) {
  if ((mask & 1u) == 0) return false;
  for (int a = 0; a < algebra->dim(); ++a) {
    if (!(mask >> a & 1u)) continue;
    for (int b = 0; b < algebra->dim(); ++b) {
      if (!(mask >> b & 1u)) continue;
      const auto prod = algebra->basis(algebra->star(a)) * algebra->basis(b);
      for (int c : prod.support()) {
        if (!(mask >> c & 1u)) return false;
      }
    }
  }
  return true;
}

std::vector<int> mask_to_indices(unsigned mask, int dim) {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i) {
    if (mask >> i & 1u) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> brute_closed_subsets(
    const TableAlgebra::Ptr& algebra) {
  std::vector<std::vector<int>> out;
  const unsigned top = 1u << algebra->dim();
  for (unsigned mask = 1; mask < top; mask += 2) {
    if (mask_is_closed(algebra, mask)) {
      out.push_back(mask_to_indices(mask, algebra->dim()));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

// Independent route for normality: C+ / |C+| is central, tested through
// element products against every basis element.
bool sum_is_central(const ClosedSubset& closed) {
  const auto& algebra = closed.algebra_ptr();
  for (int b = 0; b < algebra->dim(); ++b) {
    if (!(closed.sum() * algebra->basis(b) ==
          algebra->basis(b) * closed.sum())) {
      return false;
    }
  }
  return true;
}

// Independent route for strong normality: Supp(b* C+ b) inside C.
bool conjugates_stay_inside(const ClosedSubset& closed) {
  const auto& algebra = closed.algebra_ptr();
  for (int b = 0; b < algebra->dim(); ++b) {
    const auto moved = algebra->basis(algebra->star(b)) * closed.sum() *
                       algebra->basis(b);
    for (int c : moved.support()) {
      if (!closed.contains(c)) return false;
    }
  }
  return true;
}

bool all_degrees_one(const TableAlgebra& algebra) {
  for (int b = 0; b < algebra.dim(); ++b) {
    if (!(algebra.degree(b) == Rational(1))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumeration agrees with the powerset scan on every corpus entry") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    const auto expected = brute_closed_subsets(entry.algebra);
    const auto found = tba::enumerate_closed_subsets(entry.algebra);
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      CHECK(found[i].indices() == expected[i]);
    }
  }
}

TEST_CASE("closed subset lattice of the symmetric-group algebra") {
  const auto s3 = corpus::load("s3.group");
  const auto subsets = tba::enumerate_closed_subsets(s3);
  std::vector<std::vector<int>> got;
  for (const auto& c : subsets) got.push_back(c.indices());
  const std::vector<std::vector<int>> expected = {
      {0},          {0, 1},    {0, 2},
      {0, 3},       {0, 4, 5}, {0, 1, 2, 3, 4, 5}};
  CHECK(got == expected);
}

TEST_CASE("closure grows a seed to the smallest closed superset") {
  const auto a = tba::example_q(3);
  CHECK(tba::closure(a, std::vector<int>{1}).indices() ==
        std::vector<int>{0, 1});
  CHECK(tba::closure(a, std::vector<int>{2}).indices() ==
        std::vector<int>{0, 2});
  CHECK(tba::closure(a, std::vector<int>{2, 3}).indices() ==
        std::vector<int>{0, 1, 2, 3, 4});

  const auto s3 = corpus::load("s3.group");
  CHECK(tba::closure(s3, std::vector<int>{4}).indices() ==
        std::vector<int>{0, 4, 5});
  CHECK(tba::closure(s3, std::vector<int>{1, 2}).indices() ==
        std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("from_indices rejects sets with escaping products") {
  const auto s3 = corpus::load("s3.group");
  CHECK_THROWS_AS(ClosedSubset::from_indices(s3, {0, 2, 3}),
                  tba::NotClosed);
  CHECK_THROWS_AS(ClosedSubset::from_indices(s3, {0, 4}), tba::NotClosed);
  const auto a = tba::example_q(3);
  CHECK_THROWS_AS(ClosedSubset::from_indices(a, {0, 1, 2}), tba::NotClosed);
}

TEST_CASE("enumeration respects the size limit") {
  const auto s3 = corpus::load("s3.group");
  CHECK_THROWS_AS(tba::enumerate_closed_subsets(s3, 2),
                  tba::SizeLimitExceeded);
}

TEST_CASE("normality matches centrality of the subset sum everywhere") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      CAPTURE(c.indices());
      CHECK(c.normal() == sum_is_central(c));
      CHECK(c.strongly_normal() == conjugates_stay_inside(c));
      if (c.strongly_normal()) CHECK(c.normal());
    }
  }
}

TEST_CASE("normality flags on hand-picked subsets") {
  const auto s3 = corpus::load("s3.group");
  const auto a3 = ClosedSubset::from_indices(s3, {0, 4, 5});
  CHECK(a3.normal());
  CHECK(a3.strongly_normal());
  const auto refl = ClosedSubset::from_indices(s3, {0, 1});
  CHECK_FALSE(refl.normal());
  CHECK_FALSE(refl.strongly_normal());

  const auto q3 = tba::example_q(3);
  const auto c01 = ClosedSubset::from_indices(q3, {0, 1});
  CHECK(c01.normal());
  CHECK_FALSE(c01.strongly_normal());

  // the q = 2 member is the Klein group algebra, where every subset is
  // strongly normal
  const auto q2 = tba::example_q(2);
  for (const auto& c : tba::enumerate_closed_subsets(q2)) {
    CHECK(c.strongly_normal());
  }
}

TEST_CASE("double cosets partition the basis") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      const auto blocks = tba::double_cosets(c);
      REQUIRE(!blocks.empty());
      CHECK(blocks[0] == c.indices());
      std::set<int> seen;
      for (const auto& block : blocks) {
        CHECK(std::is_sorted(block.begin(), block.end()));
        for (int b : block) CHECK(seen.insert(b).second);
        // every member generates the same block
        for (int b : block) {
          const auto moved = c.sum() * entry.algebra->basis(b) * c.sum();
          CHECK(moved.support() == block);
        }
      }
      CHECK(static_cast<int>(seen.size()) == entry.algebra->dim());
    }
  }
}

TEST_CASE("double cosets of hand-picked subsets") {
  const auto s3 = corpus::load("s3.group");
  const auto a3 = ClosedSubset::from_indices(s3, {0, 4, 5});
  CHECK(tba::double_cosets(a3) ==
        std::vector<std::vector<int>>{{0, 4, 5}, {1, 2, 3}});
  const auto refl = ClosedSubset::from_indices(s3, {0, 1});
  CHECK(tba::double_cosets(refl) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3, 4, 5}});
}

TEST_CASE("quotient of the q=3 member by its small subset") {
  const auto a = tba::example_q(3);
  const auto q = tba::quotient(ClosedSubset::from_indices(a, {0, 1}));
  REQUIRE(q.algebra->dim() == 2);
  CHECK(q.cosets == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(q.reps == std::vector<int>{0, 2});
  CHECK(q.coset_of == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(q.algebra->degree(0) == Rational(1));
  CHECK(q.algebra->degree(1) == Rational(2));
  CHECK(q.algebra->lambda(1, 1, 0) == Rational(2));
  CHECK(q.algebra->lambda(1, 1, 1) == Rational(1));
  REQUIRE(q.alphas.size() == 5);
  CHECK(q.alphas == std::vector<Rational>{Rational(1), Rational(2),
                                          Rational(1), Rational(1),
                                          Rational(1)});
}

TEST_CASE("quotient structure constants satisfy the coset sum identity") {
  // D_i+ D_j+ = |C+| sum_k gamma_ijk D_k+, checked with exact element
  // arithmetic, independent of the per-representative extraction
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      CAPTURE(c.indices());
      const auto q = tba::quotient(c);
      const int m = q.algebra->dim();
      std::vector<AlgebraElement> sums;
      for (const auto& block : q.cosets) {
        sums.push_back(entry.algebra->subset_sum(block));
      }
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          auto expected = entry.algebra->zero();
          for (int k = 0; k < m; ++k) {
            expected = expected +
                       sums[k].scaled(c.total_degree() *
                                      q.algebra->lambda(i, j, k));
          }
          CHECK(sums[i] * sums[j] == expected);
        }
      }
      // quotient degrees are coset degrees over |C+|
      for (int i = 0; i < m; ++i) {
        CHECK(q.algebra->degree(i) ==
              sums[static_cast<std::size_t>(i)].degree() / c.total_degree());
      }
    }
  }
}

TEST_CASE("alpha scalars flatten subset-times-basis products") {
  for (const auto& entry : corpus::all()) {
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      if (!c.normal()) continue;
      CAPTURE(entry.name);
      for (int b = 0; b < entry.algebra->dim(); ++b) {
        const auto alpha = tba::alpha_scalar(c, b);
        // definition: alpha_b = |C+| |b| / |(Cb)+|
        const auto coset = (c.sum() * entry.algebra->basis(b)).support();
        auto coset_degree = Rational(0);
        for (int r : coset) coset_degree += entry.algebra->degree(r);
        CHECK(alpha ==
              c.total_degree() * entry.algebra->degree(b) / coset_degree);
        // identity: C+ b = alpha_b (Cb)+
        CHECK(c.sum() * entry.algebra->basis(b) ==
              entry.algebra->subset_sum(coset).scaled(alpha));
      }
    }
  }
}

TEST_CASE("degree-one quotient elements match the conjugation criterion") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      const auto inside = tba::quotient_degree_one_set(c);
      // reference route: quotient degrees directly
      const auto q = tba::quotient(c);
      std::vector<int> expected;
      for (int b = 0; b < entry.algebra->dim(); ++b) {
        if (q.algebra->degree(q.coset_of[b]) == Rational(1)) {
          expected.push_back(b);
        }
      }
      CHECK(inside == expected);
    }
  }
}

TEST_CASE("strong normality matches group-like quotients exactly") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      CAPTURE(c.indices());
      const auto q = tba::quotient(c);
      CHECK(c.strongly_normal() == all_degrees_one(*q.algebra));
      if (c.strongly_normal()) {
        REQUIRE(!q.alphas.empty());
        for (int b = 0; b < entry.algebra->dim(); ++b) {
          CHECK(q.alphas[b] == entry.algebra->degree(b));
        }
      }
    }
  }
}

TEST_CASE("quotient by the whole basis and by the unit alone") {
  const auto a = tba::example_q(3);
  std::vector<int> everything{0, 1, 2, 3, 4};
  const auto whole = tba::quotient(ClosedSubset::from_indices(a, everything));
  CHECK(whole.algebra->dim() == 1);
  CHECK(whole.algebra->lambda(0, 0, 0) == Rational(1));

  const auto unit = tba::quotient(ClosedSubset::from_indices(a, {0}));
  CHECK(unit.algebra->dim() == a->dim());
  CHECK(unit.algebra->same_presentation(*a));
}
