#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "corpus.hpp"
#include "tba/io.hpp"

using tba::Rational;
using tba::TableAlgebra;

namespace {

TableAlgebra::Ptr parse_text(const std::string& text) {
  std::istringstream in(text);
  return tba::parse_any(in);
}

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    tba::parse_any_raw(in);
  } catch (const tba::ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("native writer round-trips every corpus algebra exactly") {
  for (const auto& entry : corpus::all()) {
    CAPTURE(entry.name);
    const auto text = tba::write_native(*entry.algebra);
    const auto back = parse_text(text);
    CHECK(back->same_presentation(*entry.algebra));
    // writing again is byte-identical
    CHECK(tba::write_native(*back) == text);
  }
}

TEST_CASE("native parser accepts comments, blank lines and fractions") {
  const std::string text =
      "# free-form remark\n"
      "tba 1\n"
      "\n"
      "dim 2\n"
      "degrees 1 3/2   # trailing note\n"
      "involution 0 1\n"
      "lambda 0 0 0 1\n"
      "lambda 0 1 1 1\n"
      "lambda 1 0 1 1\n"
      "lambda 1 1 0 3/2\n"
      "lambda 1 1 1 1/2\n";
  const auto a = parse_text(text);
  CHECK(a->dim() == 2);
  CHECK(a->degree(1) == Rational(3, 2));
  CHECK(a->lambda(1, 1, 1) == Rational(1, 2));
}

TEST_CASE("native parse errors carry line numbers") {
  CHECK(parse_error_line("tba 2\n") == 1);
  CHECK(parse_error_line("tba 1\ndimension 4\n") == 2);
  CHECK(parse_error_line("tba 1\ndim 2\ndegrees 1 x\n") == 3);
  CHECK(parse_error_line("tba 1\ndim 2\ndegrees 1 1\ninvolution 0 9\n") == 4);
  CHECK(parse_error_line(
            "tba 1\ndim 2\ndegrees 1 1\ninvolution 0 1\nlambda 0 0 5 1\n") ==
        5);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("matrix 3\n") == 1);
  // negative structure constants are an axiom matter, not a parse error,
  // so the raw parser accepts them
  std::istringstream in(
      "tba 1\ndim 2\ndegrees 1 1\ninvolution 0 1\n"
      "lambda 0 0 0 1\nlambda 1 1 0 -2\n");
  CHECK_NOTHROW(tba::parse_any_raw(in));
}

TEST_CASE("native parse with bad rational denominator") {
  CHECK(parse_error_line("tba 1\ndim 2\ndegrees 1 1/0\n") == 3);
}

TEST_CASE("scheme files become adjacency algebras") {
  const auto pentagon = corpus::load("pentagon.scheme");
  REQUIRE(pentagon->dim() == 3);
  CHECK(pentagon->degree(0) == Rational(1));
  CHECK(pentagon->degree(1) == Rational(2));
  CHECK(pentagon->degree(2) == Rational(2));
  // in the pentagon, two distance-1 steps reach distance 0 once, distance 1
  // never, distance 2 once
  CHECK(pentagon->lambda(1, 1, 0) == Rational(2));
  CHECK(pentagon->lambda(1, 1, 1) == Rational(0));
  CHECK(pentagon->lambda(1, 1, 2) == Rational(1));
  CHECK(pentagon->lambda(1, 2, 1) == Rational(1));
  CHECK(pentagon->commutative());
}

TEST_CASE("scheme violations are reported as such") {
  auto parse_scheme = [](const std::string& body) {
    std::istringstream in("scheme\n" + body);
    return tba::parse_scheme_raw(in);
  };
  // color 0 off the diagonal
  CHECK_THROWS_AS(parse_scheme("2\n0 0\n1 0\n"), tba::NotAScheme);
  // diagonal not color 0
  CHECK_THROWS_AS(parse_scheme("2\n0 1\n1 1\n"), tba::NotAScheme);
  // color never used
  CHECK_THROWS_AS(parse_scheme("2\n0 2\n2 0\n"), tba::NotAScheme);
  // intersection numbers depend on the pair: a path graph is not a scheme
  CHECK_THROWS_AS(parse_scheme("3\n0 1 2\n1 0 1\n2 1 0\n"), tba::NotAScheme);
  // 4-cycle distance matrix is a scheme
  CHECK_NOTHROW(parse_scheme("4\n0 1 2 1\n1 0 1 2\n2 1 0 1\n1 2 1 0\n"));
}

TEST_CASE("asymmetric scheme colors pair up under the involution") {
  // directed 3-cycle: color 1 is the forward arc, color 2 the backward arc
  std::istringstream in("scheme\n3\n0 1 2\n2 0 1\n1 2 0\n");
  const auto a = tba::parse_scheme(in);
  REQUIRE(a->dim() == 3);
  CHECK(a->star(1) == 2);
  CHECK(a->star(2) == 1);
  CHECK(a->lambda(1, 2, 0) == Rational(1));
  CHECK(a->lambda(1, 1, 2) == Rational(1));
}

TEST_CASE("group files become group algebras") {
  const auto z4 = corpus::load("z4.group");
  REQUIRE(z4->dim() == 4);
  for (int b = 0; b < 4; ++b) CHECK(z4->degree(b) == Rational(1));
  CHECK(z4->star(1) == 3);
  CHECK(z4->star(2) == 2);
  CHECK(z4->lambda(1, 1, 2) == Rational(1));
  CHECK(z4->lambda(1, 3, 0) == Rational(1));

  const auto s3 = corpus::load("s3.group");
  CHECK(s3->star(4) == 5);
  CHECK(s3->star(1) == 1);
  CHECK_FALSE(s3->commutative());
}

TEST_CASE("group violations are reported as such") {
  auto parse_group = [](const std::string& body) {
    std::istringstream in("group\n" + body);
    return tba::parse_group_raw(in);
  };
  // entry out of range
  CHECK_THROWS_AS(parse_group("2\n0 1\n1 2\n"), tba::NotAGroup);
  // row 0 must fix the identity
  CHECK_THROWS_AS(parse_group("2\n1 0\n0 1\n"), tba::NotAGroup);
  // no inverse for element 1
  CHECK_THROWS_AS(parse_group("2\n0 1\n1 1\n"), tba::NotAGroup);
  // non-associative quasigroup
  CHECK_THROWS_AS(
      parse_group("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"),
      tba::NotAGroup);
  CHECK_NOTHROW(parse_group("3\n0 1 2\n1 2 0\n2 0 1\n"));
}

TEST_CASE("first token dispatches between the three formats") {
  std::istringstream g("group\n1\n0\n");
  CHECK(tba::parse_any(g)->dim() == 1);
  std::istringstream s("scheme\n1\n0\n");
  CHECK(tba::parse_any(s)->dim() == 1);
  CHECK(parse_error_line("lattice 1\n") == 1);
}

TEST_CASE("loading a missing file is a file error") {
  CHECK_THROWS_AS(tba::load_raw("/nonexistent/path.tba"), tba::FileError);
}

TEST_CASE("family construction rejects parameters below two") {
  CHECK_THROWS_AS(tba::example_q(1), tba::ShapeMismatch);
  CHECK_THROWS_AS(tba::example_q(0), tba::ShapeMismatch);
  CHECK_NOTHROW(tba::example_q(2));
}

TEST_CASE("family member q=2 is the Klein group algebra in disguise") {
  const auto q2 = tba::example_q(2);
  const auto klein = corpus::load("klein4.group");
  REQUIRE(q2->dim() == 4);
  // both have all degrees one and the same structure constants
  CHECK(q2->same_presentation(*klein));
}

TEST_CASE("fixture parity with the generated family member") {
  // the checked-in q=3 fixture was produced by the writer and must stay
  // in sync with the generator
  const auto fixture = corpus::load("exq3.tba");
  CHECK(fixture->same_presentation(*tba::example_q(3)));
}
