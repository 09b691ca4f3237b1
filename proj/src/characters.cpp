#include "tba/characters.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <utility>

namespace tba {

namespace {

/// Exact basis of the center: nullspace of the commutator constraints
/// sum_a x_a (lambda_{a,i,c} - lambda_{i,a,c}) = 0 over all (i, c).
std::vector<std::vector<Rational>> center_basis(const TableAlgebra& A) {
  const int d = A.dim();
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < d; ++i) {
    for (int c = 0; c < d; ++c) {
      std::vector<Rational> row(d, Rational(0));
      bool nonzero = false;
      for (int a = 0; a < d; ++a) {
        const Rational v = A.lambda(a, i, c) - A.lambda(i, a, c);
        if (v != 0) {
          row[a] = v;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  // Gauss-Jordan over the rationals.
  std::vector<int> pivot_cols;
  std::size_t rank = 0;
  for (int col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int j = 0; j < d; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<char> is_pivot(d, 0);
  for (int col : pivot_cols) is_pivot[col] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int col = 0; col < d; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rational> vec(d, Rational(0));
    vec[col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      vec[pivot_cols[r]] = -rows[r][col];
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = to_double(m[i][j]);
  }
  return out;
}

/// tr(R E) for a real R, computed entrywise in O(d^2).
Complex product_trace(const Eigen::MatrixXd& r, const Eigen::MatrixXcd& e) {
  Complex sum(0.0, 0.0);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) sum += r(i, j) * e(j, i);
  }
  return sum;
}

/// Lexicographic value comparison with a snap window for fp noise.
int compare_values(const std::vector<Complex>& x, const std::vector<Complex>& y,
                   double snap) {
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (std::abs(x[b].real() - y[b].real()) > snap) {
      return x[b].real() < y[b].real() ? -1 : 1;
    }
    if (std::abs(x[b].imag() - y[b].imag()) > snap) {
      return x[b].imag() < y[b].imag() ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace

CharacterTable character_table(TableAlgebra::Ptr algebra, double tol,
                               std::uint64_t seed) {
  if (!algebra) throw ShapeMismatch("null algebra");
  if (!(tol > 0)) throw ShapeMismatch("tolerance must be positive");
  const int d = algebra->dim();
  const auto zbasis = center_basis(*algebra);
  const int m = static_cast<int>(zbasis.size());

  std::vector<Eigen::MatrixXd> reg(d);
  for (int b = 0; b < d; ++b) {
    reg[b] = to_matrix(algebra->regular_matrix(algebra->basis(b)));
  }

  std::mt19937_64 rng(seed);
  std::string last = "no attempts made";
  for (int attempt = 1; attempt <= 8; ++attempt) {
    // Random central element: small positive integer combination of the
    // exact center basis, so centrality is exact by construction.
    std::vector<Rational> zc(d, Rational(0));
    for (const auto& vec : zbasis) {
      const Rational coeff(static_cast<int>(1 + rng() % 1000));
      for (int i = 0; i < d; ++i) zc[i] += coeff * vec[i];
    }
    const auto zmatQ = algebra->regular_matrix(algebra->element(zc));
    const Eigen::MatrixXcd zmat = to_matrix(zmatQ).cast<Complex>();

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(zmat);
    if (es.info() != Eigen::Success) {
      last = "eigensolver did not converge";
      continue;
    }

    struct Ev {
      Complex value;
      int col;
    };
    std::vector<Ev> evs(d);
    double scale = 1.0;
    for (int i = 0; i < d; ++i) {
      evs[i] = {es.eigenvalues()(i), i};
      scale = std::max(scale, std::abs(evs[i].value));
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) {
      if (x.value.real() != y.value.real()) {
        return x.value.real() < y.value.real();
      }
      return x.value.imag() < y.value.imag();
    });
    const double thr = tol * scale;
    std::vector<std::vector<int>> clusters;
    std::vector<Complex> means;
    for (const auto& ev : evs) {
      if (!clusters.empty() && std::abs(ev.value - means.back()) <= thr) {
        clusters.back().push_back(ev.col);
        const auto n = static_cast<double>(clusters.back().size());
        means.back() += (ev.value - means.back()) / n;
      } else {
        clusters.push_back({ev.col});
        means.push_back(ev.value);
      }
    }
    // The exact center dimension arbitrates: a wrong cluster count means the
    // random element merged or smeared blocks, so draw again.
    if (static_cast<int>(clusters.size()) != m) {
      last = "found " + std::to_string(clusters.size()) +
             " eigenvalue clusters, center dimension is " + std::to_string(m);
      continue;
    }

    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
    const Eigen::MatrixXcd w =
        lu.solve(Eigen::MatrixXcd::Identity(d, d));
    if ((v * w - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() >
        tol) {
      last = "eigenbasis too ill-conditioned to invert";
      continue;
    }

    bool good = true;
    std::vector<Character> chars;
    std::vector<int> dims;
    double max_idem = 0.0;
    for (const auto& cluster : clusters) {
      Eigen::MatrixXcd e(d, d);
      e.setZero();
      for (int col : cluster) {
        e += v.col(col) * w.row(col);
      }
      max_idem = std::max(max_idem,
                          (e * e - e).cwiseAbs().maxCoeff());
      if (max_idem > tol) {
        last = "spectral projector failed idempotence";
        good = false;
        break;
      }
      const Complex tr = e.trace();
      if (std::abs(tr.imag()) > tol) {
        last = "projector trace has an imaginary part";
        good = false;
        break;
      }
      const long long nsq = std::llround(tr.real());
      if (std::abs(tr.real() - static_cast<double>(nsq)) > 1e-6 || nsq <= 0) {
        last = "projector trace is not a positive integer";
        good = false;
        break;
      }
      const long long n = std::llround(std::sqrt(static_cast<double>(nsq)));
      if (n * n != nsq) {
        last = "projector trace is not a perfect square";
        good = false;
        break;
      }
      std::vector<Complex> values(d);
      for (int b = 0; b < d; ++b) {
        values[b] = product_trace(reg[b], e) / static_cast<double>(n);
      }
      chars.push_back(Character{algebra, std::move(values),
                                static_cast<int>(n), true});
      dims.push_back(static_cast<int>(n));
    }
    if (!good) continue;

    long long dim_sum = 0;
    for (int n : dims) dim_sum += static_cast<long long>(n) * n;
    if (dim_sum != d) {
      last = "block sizes square-sum to " + std::to_string(dim_sum) +
             ", dimension is " + std::to_string(d);
      continue;
    }

    // Orthogonality under the dual form, and the remaining residuals.
    double max_offdiag = 0.0;
    double min_diag = std::numeric_limits<double>::infinity();
    std::vector<double> mult(m);
    for (int i = 0; i < m && good; ++i) {
      for (int j = 0; j < m; ++j) {
        const Complex g =
            dual_form(*algebra, chars[i].values, chars[j].values);
        if (i == j) {
          if (std::abs(g.imag()) > tol) {
            last = "multiplicity has an imaginary part";
            good = false;
            break;
          }
          mult[i] = g.real();
          min_diag = std::min(min_diag, g.real());
        } else {
          max_offdiag = std::max(max_offdiag, std::abs(g));
        }
      }
    }
    if (!good) continue;
    if (max_offdiag > tol) {
      last = "characters are not orthogonal under the dual form";
      continue;
    }

    double max_star = 0.0;
    double max_trace = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int b = 0; b < d; ++b) {
        max_star = std::max(
            max_star, std::abs(chars[i].values[algebra->star(b)] -
                               std::conj(chars[i].values[b])));
      }
    }
    for (int b = 0; b < d; ++b) {
      Complex sum(0.0, 0.0);
      for (int i = 0; i < m; ++i) {
        sum += static_cast<double>(dims[i]) * chars[i].values[b];
      }
      max_trace = std::max(max_trace, std::abs(sum - reg[b].trace()));
    }
    if (max_star > tol || max_trace > tol) {
      last = "character values violate the trace or conjugation identity";
      continue;
    }

    // Positivity of [chi, chi] is asserted, not silenced: with the cluster
    // count pinned to the exact center dimension this is a genuine finding
    // about the algebra, not a bad random draw.
    if (!(min_diag > tol)) {
      throw ToleranceBreach("multiplicity [chi,chi] = " +
                            std::to_string(min_diag) + " is not positive");
    }

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      if (dims[x] != dims[y]) return dims[x] < dims[y];
      return compare_values(chars[x].values, chars[y].values, 1e-6) < 0;
    });

    CharacterTable table;
    table.algebra = algebra;
    table.tolerance = tol;
    for (int i : order) {
      table.irreducibles.push_back(std::move(chars[i]));
      table.block_dims.push_back(dims[i]);
      table.multiplicities.push_back(mult[i]);
    }
    for (int i = 0; i < m; ++i) {
      double diff = 0.0;
      for (int b = 0; b < d; ++b) {
        diff = std::max(diff, std::abs(table.irreducibles[i].values[b] -
                                       to_double(algebra->degree(b))));
      }
      if (diff < 1e-6) {
        table.deg_index = i;
        break;
      }
    }
    if (table.deg_index < 0) {
      throw InternalInconsistency(
          "degree map is missing from the irreducible characters");
    }
    table.residuals = ResidualReport{max_idem,    max_offdiag, min_diag,
                                     max_trace,   max_star,    attempt,
                                     seed};
    return table;
  }
  throw SplittingFailed("after 8 attempts: " + last);
}

Character degree_character(TableAlgebra::Ptr algebra) {
  if (!algebra) throw ShapeMismatch("null algebra");
  std::vector<Complex> values(algebra->dim());
  for (int b = 0; b < algebra->dim(); ++b) {
    values[b] = to_double(algebra->degree(b));
  }
  return Character{std::move(algebra), std::move(values), 1, true};
}

Character character_sum(const CharacterTable& table,
                        std::span<const int> indices) {
  if (indices.empty()) throw ShapeMismatch("empty character sum");
  const int r = static_cast<int>(table.irreducibles.size());
  std::vector<Complex> values(table.algebra->dim(), Complex(0.0, 0.0));
  int block = 0;
  for (int i : indices) {
    if (i < 0 || i >= r) throw ShapeMismatch("character index out of range");
    for (std::size_t b = 0; b < values.size(); ++b) {
      values[b] += table.irreducibles[i].values[b];
    }
    block += table.irreducibles[i].block_degree;
  }
  const bool single = indices.size() == 1;
  return Character{table.algebra, std::move(values), block,
                   single && table.irreducibles[indices[0]].irreducible};
}

Complex dual_form(const TableAlgebra& algebra, const std::vector<Complex>& chi,
                  const std::vector<Complex>& phi) {
  const int d = algebra.dim();
  if (static_cast<int>(chi.size()) != d ||
      static_cast<int>(phi.size()) != d) {
    throw ShapeMismatch("value vector has wrong length");
  }
  Complex sum(0.0, 0.0);
  for (int b = 0; b < d; ++b) {
    sum += chi[b] * phi[algebra.star(b)] / to_double(algebra.degree(b));
  }
  return sum / to_double(algebra.total_degree());
}

Complex dual_form(const Character& chi, const Character& phi) {
  if (chi.algebra.get() != phi.algebra.get()) {
    throw AlgebraMismatch("characters live on different algebras");
  }
  return dual_form(*chi.algebra, chi.values, phi.values);
}

Decomposition decompose(const CharacterTable& table,
                        const std::vector<Complex>& phi) {
  const int d = table.algebra->dim();
  const int r = static_cast<int>(table.irreducibles.size());
  if (static_cast<int>(phi.size()) != d) {
    throw ShapeMismatch("value vector has wrong length");
  }

  Decomposition out;
  out.coefficients.resize(r);
  for (int i = 0; i < r; ++i) {
    out.coefficients[i] =
        dual_form(*table.algebra, phi, table.irreducibles[i].values) /
        table.multiplicities[i];
  }

  // Independent route: least-squares against the value matrix.
  Eigen::MatrixXcd m(d, r);
  Eigen::VectorXcd rhs(d);
  for (int b = 0; b < d; ++b) {
    rhs(b) = phi[b];
    for (int i = 0; i < r; ++i) m(b, i) = table.irreducibles[i].values[b];
  }
  const Eigen::VectorXcd solved = m.colPivHouseholderQr().solve(rhs);
  const double span_residual = (m * solved - rhs).cwiseAbs().maxCoeff();
  if (span_residual > table.tolerance) {
    throw CrossCheckMismatch(
        "values are not in the span of the irreducible characters "
        "(residual " +
        std::to_string(span_residual) + ")");
  }
  double diff = 0.0;
  for (int i = 0; i < r; ++i) {
    diff = std::max(diff, std::abs(out.coefficients[i] - solved(i)));
  }
  if (diff > table.tolerance) {
    throw CrossCheckMismatch(
        "dual-form and least-squares coefficients differ by " +
        std::to_string(diff));
  }

  out.rounded.resize(r);
  out.is_character = true;
  for (int i = 0; i < r; ++i) {
    const Complex a = out.coefficients[i];
    out.rounded[i] = std::llround(a.real());
    if (std::abs(a.imag()) > 1e-6 ||
        std::abs(a.real() - static_cast<double>(out.rounded[i])) > 1e-6 ||
        out.rounded[i] < 0) {
      out.is_character = false;
    }
  }
  return out;
}

ClosedSubset kernel(const Character& chi, double eps) {
  const auto& algebra = chi.algebra;
  const int d = algebra->dim();
  std::vector<int> indices;
  for (int b = 0; b < d; ++b) {
    const Complex expected = to_double(algebra->degree(b)) * chi.values[0];
    if (std::abs(chi.values[b] - expected) < eps) indices.push_back(b);
  }
  try {
    return ClosedSubset::from_indices(algebra, std::move(indices));
  } catch (const NotClosed& e) {
    throw KernelNotClosed(std::string("kernel value set is not closed: ") +
                          e.what());
  }
}

Complex value_at_idempotent(const Character& chi, const ClosedSubset& closed) {
  if (chi.algebra.get() != closed.algebra_ptr().get()) {
    throw AlgebraMismatch("character and subset live on different algebras");
  }
  Complex sum(0.0, 0.0);
  for (int c : closed.indices()) sum += chi.values[c];
  return sum / to_double(closed.total_degree());
}

Character lift_character(const QuotientPresentation& quot,
                         const Character& psi) {
  if (quot.alphas.empty()) {
    throw NotNormal("lifting needs a normal closed subset");
  }
  if (psi.algebra.get() != quot.algebra.get()) {
    throw AlgebraMismatch("character does not live on the given quotient");
  }
  const auto& parent = quot.closed.algebra_ptr();
  const int d = parent->dim();
  if (quot.closed.strongly_normal()) {
    for (int b = 0; b < d; ++b) {
      if (quot.alphas[b] != parent->degree(b)) {
        throw InternalInconsistency(
            "alpha_b differs from |b| on a strongly normal subset");
      }
    }
  }
  std::vector<Complex> values(d);
  for (int b = 0; b < d; ++b) {
    values[b] = to_double(quot.alphas[b]) * psi.values[quot.coset_of[b]];
  }
  return Character{parent, std::move(values), psi.block_degree,
                   psi.irreducible};
}

EmbeddingReport embedding_check(const CharacterTable& parent,
                                const QuotientPresentation& quot,
                                const CharacterTable& quotient_table,
                                double eps) {
  if (parent.algebra.get() != quot.closed.algebra_ptr().get()) {
    throw AlgebraMismatch("table does not live on the parent algebra");
  }
  const int rp = static_cast<int>(parent.irreducibles.size());
  const int d = parent.algebra->dim();

  EmbeddingReport report;
  for (const auto& psi : quotient_table.irreducibles) {
    const auto lifted = lift_character(quot, psi);
    int match = -1;
    for (int j = 0; j < rp; ++j) {
      double diff = 0.0;
      for (int b = 0; b < d; ++b) {
        diff = std::max(diff, std::abs(lifted.values[b] -
                                       parent.irreducibles[j].values[b]));
      }
      if (diff <= eps) {
        if (match != -1) {
          throw EmbeddingMismatch("lifted character matches two parent "
                                  "characters");
        }
        match = j;
        report.max_match_error = std::max(report.max_match_error, diff);
      }
    }
    if (match == -1) {
      throw EmbeddingMismatch(
          "lifted character is not an irreducible character of the parent");
    }
    report.image.push_back(match);
  }

  {
    auto sorted = report.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw EmbeddingMismatch("lifting is not injective");
    }
  }

  std::vector<char> in_image(rp, 0);
  for (int j : report.image) in_image[j] = 1;
  for (int j = 0; j < rp; ++j) {
    const Complex value =
        value_at_idempotent(parent.irreducibles[j], quot.closed);
    report.idempotent_values.push_back(value);
    const bool vanishes = std::abs(value) <= eps;
    if (vanishes == static_cast<bool>(in_image[j])) {
      throw EmbeddingMismatch(
          "image differs from the characters not vanishing on the subset "
          "idempotent at index " +
          std::to_string(j));
    }
    if (vanishes) report.excluded.push_back(j);
  }
  return report;
}

}  // namespace tba
