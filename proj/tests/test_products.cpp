#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "tba/io.hpp"
#include "tba/products.hpp"

using tba::Character;
using tba::CharacterTable;
using tba::ClosedSubset;
using tba::Complex;
using tba::TableAlgebra;

namespace {

double max_abs_diff(const std::vector<Complex>& x,
                    const std::vector<Complex>& y) {
  REQUIRE(x.size() == y.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

std::vector<Complex> row(std::initializer_list<double> reals) {
  std::vector<Complex> out;
  for (double v : reals) out.emplace_back(v, 0.0);
  return out;
}

// The dimension-2 quotient of the q=3 member, whose table is small enough
// to check by hand.
TableAlgebra::Ptr dim2_algebra() {
  const auto a = tba::example_q(3);
  return tba::quotient(ClosedSubset::from_indices(a, {0, 1})).algebra;
}

}  // namespace

TEST_CASE("multiplying by the exact degree map changes nothing") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    const auto table = tba::character_table(entry.algebra);
    const auto deg = tba::degree_character(entry.algebra);
    for (const auto& chi : table.irreducibles) {
      const auto prod = tba::product(chi, deg);
      // bitwise: every corpus degree divides back out exactly
      CHECK(prod.values == chi.values);
      CHECK(prod.block_degree == chi.block_degree * deg.block_degree);
      // the computed degree row does the same up to numerical noise
      const auto& table_deg = table.irreducibles[table.deg_index];
      CHECK(max_abs_diff(tba::product(chi, table_deg).values, chi.values) <
            1e-8);
    }
  }
}

TEST_CASE("products are commutative in the values") {
  const auto s3 = corpus::load("s3.group");
  const auto table = tba::character_table(s3);
  for (const auto& chi : table.irreducibles) {
    for (const auto& psi : table.irreducibles) {
      CHECK(tba::product(chi, psi).values == tba::product(psi, chi).values);
    }
  }
}

TEST_CASE("squaring the sign-like character of the dim-2 algebra") {
  const auto a = dim2_algebra();
  const auto table = tba::character_table(a);
  REQUIRE(table.irreducibles.size() == 2);
  CHECK(max_abs_diff(table.irreducibles[0].values, row({1, -1})) < 1e-8);
  CHECK(table.deg_index == 1);

  const auto square =
      tba::product(table.irreducibles[0], table.irreducibles[0]);
  CHECK(max_abs_diff(square.values, row({1, 0.5})) < 1e-8);
  const auto dec = tba::decompose(table, square.values);
  CHECK_FALSE(dec.is_character);
  CHECK(std::abs(dec.coefficients[0] - 0.5) < 1e-6);
  CHECK(std::abs(dec.coefficients[1] - 0.5) < 1e-6);
}

TEST_CASE("squaring a pentagon character gives fractional coefficients") {
  const auto pent = corpus::load("pentagon.scheme");
  const auto table = tba::character_table(pent);
  const auto square =
      tba::product(table.irreducibles[1], table.irreducibles[1]);
  const auto dec = tba::decompose(table, square.values);
  CHECK_FALSE(dec.is_character);
  CHECK(std::abs(dec.coefficients[0] - 0.5) < 1e-6);
  CHECK(std::abs(dec.coefficients[1]) < 1e-6);
  CHECK(std::abs(dec.coefficients[2] - 0.5) < 1e-6);
}

TEST_CASE("group-algebra character products decompose integrally") {
  // in a group algebra every product of characters is a character
  for (const char* name : {"z2.group", "klein4.group", "z4.group",
                           "s3.group"}) {
    CAPTURE(name);
    const auto g = corpus::load(name);
    const auto table = tba::character_table(g);
    for (const auto& chi : table.irreducibles) {
      for (const auto& psi : table.irreducibles) {
        const auto dec =
            tba::decompose(table, tba::product(chi, psi).values);
        CHECK(dec.is_character);
      }
    }
  }
}

TEST_CASE("powers agree with iterated products bit for bit") {
  const auto s3 = corpus::load("s3.group");
  const auto table = tba::character_table(s3);
  for (const auto& chi : table.irreducibles) {
    CHECK(tba::power(chi, 0).values ==
          tba::degree_character(s3).values);
    CHECK(tba::power(chi, 1).values == chi.values);
    CHECK(tba::power(chi, 1).irreducible == chi.irreducible);
    auto iterated = chi;
    for (int j = 2; j <= 4; ++j) {
      iterated = tba::product(iterated, chi);
      CHECK(tba::power(chi, j).values == iterated.values);
    }
    CHECK_FALSE(tba::power(chi, 2).irreducible);
  }
}

TEST_CASE("products under a strongly normal subset are characters") {
  // whenever chi is irreducible with chi(C+/|C+|) != 0 for a strongly
  // normal C, the product with any character must decompose integrally
  int checked = 0;
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    const auto table = tba::character_table(entry.algebra);
    for (const auto& c : tba::enumerate_closed_subsets(entry.algebra)) {
      if (!c.strongly_normal()) continue;
      for (const auto& chi : table.irreducibles) {
        const auto at_e = tba::value_at_idempotent(chi, c);
        if (std::abs(at_e) < 1e-8) continue;
        for (const auto& psi : table.irreducibles) {
          CAPTURE(c.indices());
          const auto dec =
              tba::decompose(table, tba::product(chi, psi).values);
          CHECK(dec.is_character);
          ++checked;
          // value one at the idempotent makes the product irreducible
          if (std::abs(at_e - Complex(1.0)) < 1e-8 && psi.irreducible) {
            bool matches_row = false;
            for (const auto& other : table.irreducibles) {
              if (max_abs_diff(tba::product(chi, psi).values,
                               other.values) < 1e-6) {
                matches_row = true;
              }
            }
            CHECK(matches_row);
          }
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("distinct value ratios cluster with the degree first") {
  const auto s3 = corpus::load("s3.group");
  const auto table = tba::character_table(s3);
  const auto std_char = table.irreducibles[2];
  const auto dv = tba::distinct_values(std_char);
  REQUIRE(dv.k == 3);
  CHECK(std::abs(dv.values[0] - Complex(2.0)) < 1e-8);
  CHECK(std::abs(dv.values[1] - Complex(0.0)) < 1e-8);
  CHECK(std::abs(dv.values[2] - Complex(-1.0)) < 1e-8);
  CHECK(dv.classes ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3}, {4, 5}});

  const auto a = tba::example_q(3);
  const auto qt = tba::character_table(a);
  const auto dv2 = tba::distinct_values(qt.irreducibles[3]);
  REQUIRE(dv2.k == 2);
  CHECK(std::abs(dv2.values[0] - Complex(1.0)) < 1e-8);
  CHECK(std::abs(dv2.values[1] - Complex(-0.5)) < 1e-8);
  CHECK(dv2.classes == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});

  const auto deg = tba::degree_character(s3);
  CHECK(tba::distinct_values(deg).k == 1);
}

TEST_CASE("nearby ratios merge into one value class") {
  const auto s3 = corpus::load("s3.group");
  Character chi;
  chi.algebra = s3;
  chi.values = {Complex(2.0), Complex(0.0), Complex(5e-7), Complex(-5e-7),
                Complex(-1.0), Complex(-1.0)};
  chi.block_degree = 2;
  const auto dv = tba::distinct_values(chi, 1e-6);
  CHECK(dv.k == 3);
  CHECK(dv.classes ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3}, {4, 5}});
}

TEST_CASE("power coverage holds for the two-dimensional character") {
  const auto s3 = corpus::load("s3.group");
  const auto table = tba::character_table(s3);
  const auto report = tba::burnside_brauer(table, table.irreducibles[2]);

  CHECK(report.k == 3);
  CHECK(report.hypothesis_kernel_ok);
  CHECK(report.hypothesis_powers_ok);
  CHECK(report.hypothesis_failures.empty());
  REQUIRE(report.powers.size() == 3);

  // chi^0 = trivial, chi^1 = the character itself, chi^2 = everything once
  CHECK(report.powers[0].decomposition.rounded ==
        std::vector<long long>{0, 1, 0});
  CHECK(report.powers[1].decomposition.rounded ==
        std::vector<long long>{0, 0, 1});
  CHECK(report.powers[2].decomposition.rounded ==
        std::vector<long long>{1, 1, 1});
  for (const auto& p : report.powers) CHECK(p.in_span);

  CHECK(report.first_appearance == std::vector<int>{2, 0, 1});
  CHECK(report.covered);
  CHECK(std::abs(report.vandermonde - Complex(6.0)) < 1e-6);
  CHECK_FALSE(report.vandermonde_near_zero);
  CHECK(report.duality_residual < 1e-8);

  // beta rows against hand sums of conjugated values
  REQUIRE(report.beta.size() == 3);
  CHECK(std::abs(report.beta[0][2] - Complex(2.0)) < 1e-8);
  CHECK(std::abs(report.beta[1][0] - Complex(-3.0)) < 1e-8);
  CHECK(std::abs(report.beta[1][1] - Complex(3.0)) < 1e-8);
  CHECK(std::abs(report.beta[2][2] - Complex(-2.0)) < 1e-8);

  // the regular character decomposes with the block dimensions
  CHECK(report.regular_chi0.rounded == std::vector<long long>{1, 1, 2});
  CHECK_FALSE(report.chi0_note.empty());
}

TEST_CASE("power coverage holds for a reducible sum of two characters") {
  const auto klein = corpus::load("klein4.group");
  const auto table = tba::character_table(klein);
  const auto phi = tba::character_sum(table, std::vector<int>{0, 1});
  CHECK(max_abs_diff(phi.values, row({2, -2, 0, 0})) < 1e-8);

  const auto report = tba::burnside_brauer(table, phi);
  CHECK(report.k == 3);
  CHECK(std::abs(report.vandermonde - Complex(16.0)) < 1e-6);
  CHECK(report.hypothesis_kernel_ok);
  CHECK(report.hypothesis_powers_ok);
  CHECK(report.powers[2].decomposition.rounded ==
        std::vector<long long>{0, 0, 2, 2});
  CHECK(report.first_appearance == std::vector<int>{1, 1, 2, 0});
  CHECK(report.covered);
  CHECK(report.duality_residual < 1e-8);
}

TEST_CASE("the degree map fails the kernel hypothesis") {
  const auto s3 = corpus::load("s3.group");
  const auto table = tba::character_table(s3);
  const auto report =
      tba::burnside_brauer(table, table.irreducibles[table.deg_index]);
  CHECK_FALSE(report.hypothesis_kernel_ok);
  REQUIRE(!report.hypothesis_failures.empty());
  CHECK(report.hypothesis_failures[0].find("kernel") != std::string::npos);
  CHECK(report.k == 1);
  CHECK_FALSE(report.covered);
}

TEST_CASE("coverage succeeds on a faithful linear character of the cycle") {
  const auto z4 = corpus::load("z4.group");
  const auto table = tba::character_table(z4);
  // the row (1, -i, -1, i) is faithful with four distinct values
  const auto report = tba::burnside_brauer(table, table.irreducibles[1]);
  CHECK(report.hypothesis_kernel_ok);
  CHECK(report.k == 4);
  CHECK(report.covered);
  // powers run through all four characters, one each
  for (int i = 0; i < 4; ++i) {
    CHECK(report.first_appearance[i] >= 0);
  }
  CHECK(report.duality_residual < 1e-8);
}

TEST_CASE("non-faithful characters with closed kernels fail cleanly") {
  const auto z4 = corpus::load("z4.group");
  const auto table = tba::character_table(z4);
  // the row (1, -1, 1, -1) has kernel {0, 2}
  const auto report = tba::burnside_brauer(table, table.irreducibles[0]);
  CHECK_FALSE(report.hypothesis_kernel_ok);
  CHECK(report.k == 2);
  CHECK_FALSE(report.covered);
}
