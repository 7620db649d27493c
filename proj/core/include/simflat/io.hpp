#pragma once

#include <iosfwd>
#include <string>

#include "simflat/matgrp.hpp"

namespace simflat {

/// Plain-text matrix format: first line "rows cols", then row-major entries
/// as integers or "p/q", whitespace separated.
QMat read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const QMat& m);

/// Group file: "dim m", "gens k", then k matrices.
MatrixGroup read_group(std::istream& in);
void write_group(std::ostream& out, const MatrixGroup& g);

QMat read_matrix_file(const std::string& path);
MatrixGroup read_group_file(const std::string& path);

}  // namespace simflat
