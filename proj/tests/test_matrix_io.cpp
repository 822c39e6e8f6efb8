#include <doctest.h>

#include <sstream>

#include "lindblad/matrix_io.hpp"
#include "support.hpp"

using namespace lindblad;

TEST_CASE("write then read recovers the exact doubles") {
  std::mt19937_64 rng(testing::kSeed);
  const FockOperator op = testing::random_operator(rng, 4, 5);
  std::stringstream s;
  write_matrix(s, op);
  const FockOperator back = read_matrix(s);
  CHECK(back.dim() == 5);
  CHECK((back.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("text layout") {
  std::stringstream s;
  write_matrix(s, fock_state(1, 2).op);
  CHECK(s.str() == "2\n0 0 0 0\n0 0 1 0\n");
}

TEST_CASE("malformed input is rejected") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
  };
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse("1\n1 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2\n1 0 0 0\n0 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2\n1 0 0 0\n0 0 1 0\n5"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2\n1 0 0 0\n0 0 1e 0"), std::invalid_argument);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/state.txt"), std::invalid_argument);
  CHECK(parse("2 1 0 0 0 0 0 1 0").dim() == 2);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(0.1, 3) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");
}
