#include "tba/products.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tba {

namespace {

void require_same(const Character& chi, const Character& psi) {
  if (chi.algebra.get() != psi.algebra.get()) {
    throw AlgebraMismatch("characters live on different algebras");
  }
}

}  // namespace

Character product(const Character& chi, const Character& psi) {
  require_same(chi, psi);
  const auto& algebra = chi.algebra;
  const int d = algebra->dim();
  std::vector<Complex> values(d);
  for (int b = 0; b < d; ++b) {
    values[b] = chi.values[b] * psi.values[b] / to_double(algebra->degree(b));
  }
  return Character{algebra, std::move(values),
                   chi.block_degree * psi.block_degree, false};
}

Character power(const Character& chi, int j) {
  if (j < 0) throw ShapeMismatch("negative power");
  const auto& algebra = chi.algebra;
  if (j == 0) return degree_character(algebra);
  const int d = algebra->dim();
  std::vector<Complex> values(d);
  int block = chi.block_degree;
  for (int b = 0; b < d; ++b) {
    const double deg = to_double(algebra->degree(b));
    Complex v = chi.values[b];
    // Same operation order as iterated product(), so the two agree exactly.
    for (int step = 2; step <= j; ++step) v = v * chi.values[b] / deg;
    values[b] = v;
  }
  for (int step = 2; step <= j; ++step) block *= chi.block_degree;
  return Character{algebra, std::move(values), block, j == 1 && chi.irreducible};
}

DistinctValues distinct_values(const Character& chi, double tol) {
  const auto& algebra = chi.algebra;
  const int d = algebra->dim();
  DistinctValues out;
  std::vector<Complex> reps;
  for (int b = 0; b < d; ++b) {
    const Complex ratio = chi.values[b] / to_double(algebra->degree(b));
    int home = -1;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      if (std::abs(ratio - reps[t]) <= tol) {
        home = static_cast<int>(t);
        break;
      }
    }
    if (home == -1) {
      reps.push_back(ratio);
      out.classes.push_back({b});
    } else {
      out.classes[home].push_back(b);
    }
  }
  // alpha_1 = chi(1) leads; the rest in descending real-then-imaginary order.
  std::vector<int> order;
  for (std::size_t t = 1; t < reps.size(); ++t) {
    order.push_back(static_cast<int>(t));
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (reps[x].real() != reps[y].real()) {
      return reps[x].real() > reps[y].real();
    }
    return reps[x].imag() > reps[y].imag();
  });
  order.insert(order.begin(), 0);

  out.k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> classes;
  for (int t : order) {
    out.values.push_back(reps[t]);
    classes.push_back(std::move(out.classes[t]));
  }
  out.classes = std::move(classes);
  return out;
}

BBReport burnside_brauer(const CharacterTable& table, const Character& chi,
                         double tol) {
  if (table.algebra.get() != chi.algebra.get()) {
    throw AlgebraMismatch("character does not live on the table's algebra");
  }
  const auto& algebra = table.algebra;
  const int d = algebra->dim();
  const int r = static_cast<int>(table.irreducibles.size());

  BBReport report;
  auto dv = distinct_values(chi, tol);
  report.k = dv.k;
  report.alpha = std::move(dv.values);
  report.value_classes = std::move(dv.classes);

  try {
    const auto kern = kernel(chi, tol);
    report.hypothesis_kernel_ok = kern.indices() == std::vector<int>{0};
    if (!report.hypothesis_kernel_ok) {
      std::string members;
      for (int b : kern.indices()) {
        if (!members.empty()) members += ",";
        members += std::to_string(b);
      }
      report.hypothesis_failures.push_back("kernel is {" + members +
                                           "}, not {0}");
    }
  } catch (const KernelNotClosed& e) {
    report.hypothesis_kernel_ok = false;
    report.hypothesis_failures.push_back(e.what());
  }

  for (int i = 0; i < report.k; ++i) {
    BBReport::PowerRow row;
    row.values = power(chi, i).values;
    try {
      row.decomposition = decompose(table, row.values);
    } catch (const CrossCheckMismatch& e) {
      row.in_span = false;
      report.hypothesis_failures.push_back("chi^" + std::to_string(i) + ": " +
                                           e.what());
    }
    report.powers.push_back(std::move(row));
  }

  report.hypothesis_powers_ok = true;
  for (int i = 1; i < report.k; ++i) {
    const auto& row = report.powers[i];
    if (row.in_span && row.decomposition.is_character) continue;
    report.hypothesis_powers_ok = false;
    if (row.in_span) {
      report.hypothesis_failures.push_back(
          "chi^" + std::to_string(i) +
          " has a coefficient that is not a nonnegative integer");
    }
  }

  report.first_appearance.assign(r, -1);
  for (int i = 0; i < report.k; ++i) {
    const auto& row = report.powers[i];
    if (!row.in_span) continue;
    for (int j = 0; j < r; ++j) {
      if (report.first_appearance[j] == -1 &&
          std::abs(row.decomposition.coefficients[j]) > tol) {
        report.first_appearance[j] = i;
      }
    }
  }
  report.covered = std::all_of(report.first_appearance.begin(),
                               report.first_appearance.end(),
                               [](int i) { return i != -1; });

  report.vandermonde = Complex(1.0, 0.0);
  for (int t = 0; t < report.k; ++t) {
    for (int u = t + 1; u < report.k; ++u) {
      report.vandermonde *= report.alpha[t] - report.alpha[u];
    }
  }
  report.vandermonde_near_zero = std::abs(report.vandermonde) < tol;

  report.beta.assign(report.k, std::vector<Complex>(r, Complex(0.0, 0.0)));
  for (int t = 0; t < report.k; ++t) {
    for (int j = 0; j < r; ++j) {
      for (int b : report.value_classes[t]) {
        report.beta[t][j] += table.irreducibles[j].values[algebra->star(b)];
      }
    }
  }

  // [chi^i, chi_j] must equal |B+|^-1 sum_t alpha_t^i beta[t][j].
  const double total = to_double(algebra->total_degree());
  std::vector<Complex> apow(report.k, Complex(1.0, 0.0));
  for (int i = 0; i < report.k; ++i) {
    for (int j = 0; j < r; ++j) {
      Complex rhs(0.0, 0.0);
      for (int t = 0; t < report.k; ++t) rhs += apow[t] * report.beta[t][j];
      rhs /= total;
      const Complex lhs = dual_form(*algebra, report.powers[i].values,
                                    table.irreducibles[j].values);
      report.duality_residual =
          std::max(report.duality_residual, std::abs(lhs - rhs));
    }
    for (int t = 0; t < report.k; ++t) apow[t] *= report.alpha[t];
  }

  std::vector<Complex> regular(d);
  for (int b = 0; b < d; ++b) {
    Rational tr(0);
    for (int c = 0; c < d; ++c) tr += algebra->lambda(b, c, c);
    regular[b] = to_double(tr);
  }
  report.regular_chi0 = decompose(table, regular);
  report.chi0_note =
      "chi^0 is taken to be the degree map; the regular character "
      "decomposition is listed for the alternative reading";
  return report;
}

}  // namespace tba
