#include "tba/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace tba {

std::string name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Unit:
      return "unit";
    case Axiom::I:
      return "I";
    case Axiom::II:
      return "II";
    case Axiom::III:
      return "III";
    case Axiom::IV:
      return "IV";
    case Axiom::Associativity:
      return "associativity";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << "axiom " << name(axiom) << " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ",";
    os << indices[i];
  }
  os << "): found " << to_string(found) << ", expected " << to_string(expected);
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

namespace {

std::string summarize(const std::vector<AxiomViolation>& violations) {
  if (violations.empty()) return "axiom violations";
  std::string msg = "axiom violations: " + violations.front().describe();
  if (violations.size() > 1) {
    msg += " (+" + std::to_string(violations.size() - 1) + " more)";
  }
  return msg;
}

struct EntryOrder {
  bool operator()(const LambdaEntry& x, const LambdaEntry& y) const {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

std::vector<std::size_t> build_offsets(const std::vector<LambdaEntry>& entries,
                                       int dim) {
  std::vector<std::size_t> offsets(
      static_cast<std::size_t>(dim) * dim + 1, 0);
  for (const auto& e : entries) {
    ++offsets[static_cast<std::size_t>(e.a) * dim + e.b + 1];
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    offsets[i] += offsets[i - 1];
  }
  return offsets;
}

std::span<const LambdaEntry> row_span(const std::vector<LambdaEntry>& entries,
                                      const std::vector<std::size_t>& offsets,
                                      int dim, int a, int b) {
  const std::size_t idx = static_cast<std::size_t>(a) * dim + b;
  return {entries.data() + offsets[idx], offsets[idx + 1] - offsets[idx]};
}

Rational lambda_at(const std::vector<LambdaEntry>& entries,
                   const std::vector<std::size_t>& offsets, int dim, int a,
                   int b, int c) {
  for (const auto& e : row_span(entries, offsets, dim, a, b)) {
    if (e.c == c) return e.value;
  }
  return Rational(0);
}

}  // namespace

AxiomError::AxiomError(std::vector<AxiomViolation> violations_)
    : Error(summarize(violations_)), violations(std::move(violations_)) {}

ValidationResult TableAlgebra::validate(const RawAlgebra& raw,
                                        const ValidateOptions& opts) {
  const int d = raw.dim;
  if (d < 1) throw ShapeMismatch("dimension must be at least 1");
  if (static_cast<int>(raw.star.size()) != d) {
    throw ShapeMismatch("star permutation has wrong length");
  }
  if (static_cast<int>(raw.degrees.size()) != d) {
    throw ShapeMismatch("degree vector has wrong length");
  }
  {
    std::vector<int> hit(d, 0);
    for (int b = 0; b < d; ++b) {
      const int s = raw.star[b];
      if (s < 0 || s >= d) throw ShapeMismatch("star index out of range");
      if (hit[s]++) throw ShapeMismatch("star is not a permutation");
    }
  }

  std::vector<LambdaEntry> entries;
  entries.reserve(raw.lambda.size());
  for (const auto& e : raw.lambda) {
    if (e.a < 0 || e.a >= d || e.b < 0 || e.b >= d || e.c < 0 || e.c >= d) {
      throw ShapeMismatch("lambda index out of range");
    }
    if (e.value != 0) entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(), EntryOrder{});
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto& p = entries[i - 1];
    const auto& q = entries[i];
    if (p.a == q.a && p.b == q.b && p.c == q.c) {
      throw ShapeMismatch("duplicate lambda entry at (" + std::to_string(q.a) +
                          "," + std::to_string(q.b) + "," +
                          std::to_string(q.c) + ")");
    }
  }
  const auto offsets = build_offsets(entries, d);
  const auto& star = raw.star;
  auto lam = [&](int a, int b, int c) {
    return lambda_at(entries, offsets, d, a, b, c);
  };
  auto row = [&](int a, int b) { return row_span(entries, offsets, d, a, b); };

  std::vector<AxiomViolation> v;

  // Axiom I: nonnegative structure constants.
  for (const auto& e : entries) {
    if (e.value < 0) {
      v.push_back({Axiom::I, {e.a, e.b, e.c}, e.value, Rational(0), ""});
    }
  }

  // b_0 is a two-sided unit.
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      const Rational expected(b == c ? 1 : 0);
      if (Rational f = lam(0, b, c); f != expected) {
        v.push_back({Axiom::Unit, {0, b, c}, f, expected, ""});
      }
      if (b == 0) continue;
      if (Rational f = lam(b, 0, c); f != expected) {
        v.push_back({Axiom::Unit, {b, 0, c}, f, expected, ""});
      }
    }
  }

  // Axiom II: star is an algebra anti-automorphism fixing b_0.
  if (star[0] != 0) {
    v.push_back({Axiom::II, {0}, Rational(star[0]), Rational(0),
                 "star must fix the unit"});
  }
  for (int b = 0; b < d; ++b) {
    if (star[star[b]] != b) {
      v.push_back({Axiom::II, {b}, Rational(star[star[b]]), Rational(b),
                   "star must be an involution"});
    }
  }
  for (const auto& e : entries) {
    const Rational other = lam(star[e.b], star[e.a], star[e.c]);
    if (other != e.value) {
      v.push_back({Axiom::II, {e.a, e.b, e.c}, e.value, other,
                   "lambda_abc must equal lambda_{b*,a*,c*}"});
    }
  }

  // Axiom III: lambda_{a,b,0} = delta_{b,a*} |a| with positive degrees.
  // Degrees are recomputed from the tensor, not taken on trust.
  std::vector<Rational> deg(d);
  for (int a = 0; a < d; ++a) {
    deg[a] = lam(a, star[a], 0);
    if (deg[a] != raw.degrees[a]) {
      v.push_back({Axiom::III, {a, star[a], 0}, deg[a], raw.degrees[a],
                   "claimed degree differs from lambda_{a,a*,0}"});
    }
    if (deg[a] <= 0) {
      v.push_back({Axiom::III, {a, star[a], 0}, deg[a], Rational(1),
                   "degree must be positive"});
    }
    for (int b = 0; b < d; ++b) {
      if (b == star[a]) continue;
      if (Rational f = lam(a, b, 0); f != 0) {
        v.push_back({Axiom::III, {a, b, 0}, f, Rational(0), ""});
      }
    }
  }

  // Axiom IV: the degree map is multiplicative and star-invariant.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Rational sum(0);
      for (const auto& e : row(a, b)) sum += e.value * deg[e.c];
      if (sum != deg[a] * deg[b]) {
        v.push_back({Axiom::IV, {a, b}, sum, deg[a] * deg[b], ""});
      }
    }
    if (a < star[a] && deg[a] != deg[star[a]]) {
      v.push_back({Axiom::IV, {a, star[a]}, deg[a], deg[star[a]],
                   "degree differs from starred degree"});
    }
  }

  // Associativity, exhaustive for small dimensions, sampled above the limit.
  auto check_triple = [&](int a, int b, int c) {
    std::vector<Rational> lhs(d), rhs(d);
    for (const auto& e : row(a, b)) {
      for (const auto& f : row(e.c, c)) lhs[f.c] += e.value * f.value;
    }
    for (const auto& e : row(b, c)) {
      for (const auto& f : row(a, e.c)) rhs[f.c] += e.value * f.value;
    }
    for (int t = 0; t < d; ++t) {
      if (lhs[t] != rhs[t]) {
        v.push_back({Axiom::Associativity, {a, b, c, t}, lhs[t], rhs[t], ""});
        return;  // one witness per triple keeps reports readable
      }
    }
  };
  if (opts.strict || d <= opts.exhaustive_limit) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        for (int c = 0; c < d; ++c) check_triple(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(opts.sample_seed);
    for (int i = 0; i < opts.samples; ++i) {
      const int a = static_cast<int>(rng() % d);
      const int b = static_cast<int>(rng() % d);
      const int c = static_cast<int>(rng() % d);
      check_triple(a, b, c);
    }
  }

  if (!v.empty()) return {nullptr, std::move(v)};

  auto algebra = std::shared_ptr<TableAlgebra>(new TableAlgebra());
  algebra->dim_ = d;
  algebra->entries_ = std::move(entries);
  algebra->row_offsets_ = offsets;
  algebra->star_ = star;
  algebra->degrees_ = std::move(deg);
  algebra->total_degree_ = Rational(0);
  for (const auto& x : algebra->degrees_) algebra->total_degree_ += x;
  algebra->commutative_ = true;
  for (int a = 0; a < d && algebra->commutative_; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const auto ab = algebra->row(a, b);
      const auto ba = algebra->row(b, a);
      if (!std::equal(ab.begin(), ab.end(), ba.begin(), ba.end(),
                      [](const LambdaEntry& x, const LambdaEntry& y) {
                        return x.c == y.c && x.value == y.value;
                      })) {
        algebra->commutative_ = false;
        break;
      }
    }
  }
  return {algebra, {}};
}

TableAlgebra::Ptr TableAlgebra::validated(const RawAlgebra& raw,
                                          const ValidateOptions& opts) {
  auto result = validate(raw, opts);
  if (!result.ok()) throw AxiomError(std::move(result.violations));
  return result.algebra;
}

std::span<const LambdaEntry> TableAlgebra::row(int a, int b) const {
  return row_span(entries_, row_offsets_, dim_, a, b);
}

Rational TableAlgebra::lambda(int a, int b, int c) const {
  return lambda_at(entries_, row_offsets_, dim_, a, b, c);
}

AlgebraElement TableAlgebra::element(std::vector<Rational> coeffs) const {
  return AlgebraElement(shared_from_this(), std::move(coeffs));
}

AlgebraElement TableAlgebra::basis(int index) const {
  if (index < 0 || index >= dim_) {
    throw ShapeMismatch("basis index out of range");
  }
  std::vector<Rational> coeffs(dim_, Rational(0));
  coeffs[index] = 1;
  return element(std::move(coeffs));
}

AlgebraElement TableAlgebra::one() const { return basis(0); }

AlgebraElement TableAlgebra::zero() const {
  return element(std::vector<Rational>(dim_, Rational(0)));
}

AlgebraElement TableAlgebra::subset_sum(std::span<const int> indices) const {
  std::vector<Rational> coeffs(dim_, Rational(0));
  for (int i : indices) {
    if (i < 0 || i >= dim_) throw ShapeMismatch("subset index out of range");
    coeffs[i] += 1;
  }
  return element(std::move(coeffs));
}

std::vector<std::vector<Rational>> TableAlgebra::regular_matrix(
    const AlgebraElement& x) const {
  if (&x.algebra() != this) {
    throw AlgebraMismatch("element belongs to a different algebra");
  }
  std::vector<std::vector<Rational>> m(
      dim_, std::vector<Rational>(dim_, Rational(0)));
  for (int a = 0; a < dim_; ++a) {
    const Rational& xa = x[a];
    if (xa == 0) continue;
    for (int b = 0; b < dim_; ++b) {
      for (const auto& e : row(a, b)) m[e.c][b] += xa * e.value;
    }
  }
  return m;
}

bool TableAlgebra::same_presentation(const TableAlgebra& other) const {
  return dim_ == other.dim_ && star_ == other.star_ &&
         degrees_ == other.degrees_ && entries_ == other.entries_;
}

RawAlgebra TableAlgebra::raw() const {
  return RawAlgebra{dim_, entries_, star_, degrees_};
}

AlgebraElement::AlgebraElement(TableAlgebra::Ptr algebra,
                               std::vector<Rational> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw ShapeMismatch("element needs an algebra");
  if (static_cast<int>(coeffs_.size()) != algebra_->dim()) {
    throw ShapeMismatch("coefficient vector has wrong length");
  }
}

namespace {

void require_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra_ptr().get() != y.algebra_ptr().get()) {
    throw AlgebraMismatch("elements belong to different algebras");
  }
}

}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  require_same(*this, rhs);
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  require_same(*this, rhs);
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_same(*this, rhs);
  const int d = algebra_->dim();
  std::vector<Rational> out(d, Rational(0));
  for (int a = 0; a < d; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < d; ++b) {
      if (rhs.coeffs_[b] == 0) continue;
      const Rational factor = coeffs_[a] * rhs.coeffs_[b];
      for (const auto& e : algebra_->row(a, b)) {
        out[e.c] += factor * e.value;
      }
    }
  }
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(const Rational& factor) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= factor;
  return AlgebraElement(algebra_, std::move(out));
}

AlgebraElement AlgebraElement::star() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (int b = 0; b < algebra_->dim(); ++b) {
    out[algebra_->star(b)] = coeffs_[b];
  }
  return AlgebraElement(algebra_, std::move(out));
}

Rational AlgebraElement::degree() const {
  Rational sum(0);
  for (int b = 0; b < algebra_->dim(); ++b) {
    sum += coeffs_[b] * algebra_->degree(b);
  }
  return sum;
}

std::vector<int> AlgebraElement::support() const {
  std::vector<int> out;
  for (int b = 0; b < algebra_->dim(); ++b) {
    if (coeffs_[b] != 0) out.push_back(b);
  }
  return out;
}

bool AlgebraElement::is_zero() const {
  for (const auto& x : coeffs_) {
    if (x != 0) return false;
  }
  return true;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  return x.coeffs_ == y.coeffs_;
}

}  // namespace tba
