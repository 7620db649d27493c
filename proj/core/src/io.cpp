#include "simflat/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "simflat/error.hpp"

namespace simflat {

namespace {

Rat parse_rat(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(tok));
    Int n(tok.substr(0, slash));
    Int d(tok.substr(slash + 1));
    if (d == 0) fail(Err::MalformedEntry, "zero denominator: " + tok);
    return make_rat(n, d);
  } catch (const std::invalid_argument&) {
    fail(Err::MalformedEntry, "bad number: " + tok);
  }
}

}  // namespace

QMat read_matrix(std::istream& in) {
  int r, c;
  if (!(in >> r >> c) || r < 0 || c < 0) fail(Err::MalformedEntry, "bad matrix header");
  QMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(Err::MalformedEntry, "truncated matrix");
      m.at(i, j) = parse_rat(tok);
    }
  return m;
}

void write_matrix(std::ostream& out, const QMat& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j).get_str();
    }
    out << '\n';
  }
}

MatrixGroup read_group(std::istream& in) {
  std::string kw;
  int m = 0, k = 0;
  if (!(in >> kw >> m) || kw != "dim") fail(Err::MalformedEntry, "expected 'dim m'");
  if (!(in >> kw >> k) || kw != "gens") fail(Err::MalformedEntry, "expected 'gens k'");
  std::vector<QMat> gens;
  for (int i = 0; i < k; ++i) {
    QMat g = read_matrix(in);
    if (g.rows() != m || g.cols() != m) fail(Err::MalformedEntry, "generator size mismatch");
    gens.push_back(g);
  }
  return MatrixGroup(m, gens);
}

void write_group(std::ostream& out, const MatrixGroup& g) {
  out << "dim " << g.dim() << '\n';
  out << "gens " << g.generators().size() << '\n';
  for (const auto& m : g.generators()) write_matrix(out, m);
}

QMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::MalformedEntry, "cannot open " + path);
  return read_matrix(in);
}

MatrixGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::MalformedEntry, "cannot open " + path);
  return read_group(in);
}

}  // namespace simflat
