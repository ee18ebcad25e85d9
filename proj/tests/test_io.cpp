#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "halfint/errors.hpp"
#include "halfint/qexp_io.hpp"
#include "oracles.hpp"

using namespace halfint;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kFixtureNames[] = {"level8_f.qexp", "level8_fTheta.qexp", "theta.qexp",
                               "ex364_f1.qexp", "ex364_f2.qexp",      "ex52_f1.qexp",
                               "ex52_f2.qexp",  "s2_91_F.qexp",       "s4_13_G.qexp"};

}  // namespace

TEST_CASE("every fixture re-serializes byte-identically") {
  for (const char* name : kFixtureNames) {
    std::string path = std::string(FIXTURES_DIR) + "/" + name;
    std::string text = slurp(path);
    QExpansion f = parse_qexp(text);
    CHECK_MESSAGE(write_qexp(f) == text, name);
    // and a full parse round trip is exact
    CHECK(parse_qexp(write_qexp(f)) == f);
  }
}

TEST_CASE("fixtures match the printed expansions") {
  FieldPtr rat = NumberField::rationals();
  QExpansion f = read_qexp_file(std::string(FIXTURES_DIR) + "/level8_f.qexp");
  CHECK(f.prec() == 12);
  CHECK(f.coeff(1) == FieldElement::from_int(rat, 1));
  CHECK(f.coeff(2) == FieldElement::from_int(rat, -2));
  CHECK(f.coeff(5) == FieldElement::from_int(rat, -4));
  CHECK(f.coeff(6) == FieldElement::from_int(rat, 12));
  CHECK(f.coeff(9) == FieldElement::from_int(rat, -3));
  CHECK(f.coeff(10) == FieldElement::from_int(rat, -20));
  REQUIRE(f.meta());
  CHECK(f.meta()->weight_num == 7);
  CHECK(f.meta()->level == 8);
  CHECK(f.meta()->character.spec() == "triv:8");

  QExpansion g1 = read_qexp_file(std::string(FIXTURES_DIR) + "/ex52_f1.qexp");
  CHECK(g1.field()->spec() == "Q[x]/(-4,-1,1) b");
  CHECK(g1.coeff(5) == FieldElement::parse_csv(g1.field(), "-4,-5/2"));
  CHECK(g1.coeff(4) == FieldElement::parse_csv(g1.field(), "2,1"));
  CHECK(g1.meta()->character.spec() == "kron:13");
  CHECK(!g1.notes().empty());

  QExpansion g2 = read_qexp_file(std::string(FIXTURES_DIR) + "/ex52_f2.qexp");
  CHECK(g2.coeff(3) == FieldElement::parse_csv(g2.field(), "14/19,-2/19"));
  CHECK(g2.first() == 2);
}

TEST_CASE("zero-to-precision files") {
  const char* text =
      "qexp v1\n"
      "field Q\n"
      "first 7\n"
      "prec 7\n";
  QExpansion z = parse_qexp(text);
  CHECK(z.is_zero());
  CHECK(z.first() == 7);
  CHECK(z.prec() == 7);
  CHECK(write_qexp(z) == text);
}

TEST_CASE("parse errors carry position and reason") {
  auto expect_error = [](const char* text, Errc code) {
    try {
      parse_qexp(text);
      FAIL_CHECK(text);
    } catch (const Error& e) {
      CHECK(e.code() == code);
      if (code == Errc::ParseError) CHECK(e.line() >= 1);
    }
  };
  expect_error("qexp v2\nfield Q\nfirst 0\nprec 0\n", Errc::ParseError);
  expect_error("qexp v1\nfield Q\nfirst 0\nprec 1\n", Errc::ParseError);  // missing line
  expect_error("qexp v1\nfield Q\nfirst 0\nprec 1\n1\n2\n", Errc::ParseError);  // extra line
  expect_error("qexp v1\nfield Q\nwidth 3\nfirst 0\nprec 0\n", Errc::ParseError);  // unknown key
  expect_error("qexp v1\nfield Q\nfirst 2\nprec 1\n", Errc::ParseError);
  expect_error("qexp v1\nfield F5\nfirst 0\nprec 0\n", Errc::FieldSpecError);
  expect_error("qexp v1\nfield Q[x]/(-4,-1,1)\nfirst 0\nprec 0\n", Errc::FieldSpecError);
  expect_error("qexp v1\nfield Q[x]/(-4,-1,2) b\nfirst 0\nprec 0\n", Errc::FieldSpecError);
  // halfint flag must match the weight parity
  expect_error(
      "qexp v1\nfield Q\nk 7\nhalfint false\nlevel 8\nchar triv:8\nfirst 0\nprec 0\n",
      Errc::ParseError);
  // half-integral weight needs 4 | level
  expect_error(
      "qexp v1\nfield Q\nk 7\nhalfint true\nlevel 6\nchar triv:8\nfirst 0\nprec 0\n",
      Errc::ParseError);
  // too many coefficients for the field degree
  expect_error("qexp v1\nfield Q\nfirst 0\nprec 1\n1,2\n", Errc::ParseError);
}

TEST_CASE("random series round-trip through text") {
  std::mt19937_64 rng(7300);
  FieldPtr qb = NumberField::create({Rational(-4), Rational(-1), Rational(1)}, "b");
  for (const auto& field : {NumberField::rationals(), qb}) {
    for (int trial = 0; trial < 40; ++trial) {
      QExpansion f = oracles::random_sparse_series(rng, field, 25);
      if (trial % 2 == 0)
        f = f.with_meta(FormMeta{3, 4, DirichletCharacter::trivial(4)});
      CHECK(parse_qexp(write_qexp(f)) == f);
    }
  }
}

TEST_CASE("eigen tables parse, match the newform fixtures, and round-trip") {
  EigenTable t364 = read_eigen_file(std::string(FIXTURES_DIR) + "/ex364.eigen");
  CHECK(t364.field->is_rationals());
  REQUIRE(t364.values.size() == 5);
  QExpansion F = read_qexp_file(std::string(FIXTURES_DIR) + "/s2_91_F.qexp");
  for (const auto& [p, v] : t364.values) CHECK(v == F.coeff(p));

  EigenTable t52 = read_eigen_file(std::string(FIXTURES_DIR) + "/ex52.eigen");
  CHECK(t52.field->degree() == 2);
  QExpansion G = read_qexp_file(std::string(FIXTURES_DIR) + "/s4_13_G.qexp");
  for (const auto& [p, v] : t52.values) CHECK(v == G.coeff(p));

  for (const char* name : {"ex364.eigen", "ex52.eigen"}) {
    std::string text = slurp(std::string(FIXTURES_DIR) + "/" + name);
    CHECK(write_eigen_table(parse_eigen_table(text)) == text);
  }

  try {
    parse_eigen_table("eigen v1\nfield Q\neigenvalue 5 1\neigenvalue 3 0\n");
    FAIL_CHECK("unsorted primes accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_qexp_file("/nonexistent/path.qexp"), Error);
  try {
    read_qexp_file("/nonexistent/path.qexp");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
}
