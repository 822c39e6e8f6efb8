#include "lindblad/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lindblad {

namespace {

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix file: bad number '" + token + "'");
  }
  if (used != token.size()) throw std::invalid_argument("matrix file: bad number '" + token + "'");
  return v;
}

}  // namespace

FockOperator read_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw std::invalid_argument("matrix file: missing dimension");
  std::size_t used = 0;
  int dim = 0;
  try {
    dim = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix file: bad dimension '" + token + "'");
  }
  if (used != token.size() || dim < 2) throw std::invalid_argument("matrix file: bad dimension '" + token + "'");

  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      std::string re, im;
      if (!(in >> re >> im)) throw std::invalid_argument("matrix file: truncated data");
      m(i, j) = Complex(parse_double(re), parse_double(im));
    }
  }
  if (in >> token) throw std::invalid_argument("matrix file: trailing data");
  return FockOperator(std::move(m));
}

FockOperator read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

void write_matrix(std::ostream& out, const FockOperator& op) {
  const int dim = op.dim();
  out << dim << '\n';
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (j > 0) out << ' ';
      out << format_double(op(i, j).real()) << ' ' << format_double(op(i, j).imag());
    }
    out << '\n';
  }
}

}  // namespace lindblad
