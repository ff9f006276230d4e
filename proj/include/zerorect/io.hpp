#pragma once

#include <string>

#include "zerorect/family.hpp"
#include "zerorect/matrix.hpp"

namespace zr {

// Family file format: {"n": <int>, "sets": [[sorted 1-based ints], ...]}.
// Serialization of sorted input is byte-stable.
std::string family_to_json(const SetFamily& F);
SetFamily family_from_json(const std::string& text);
SetFamily load_family(const std::string& path);
void save_family(const SetFamily& F, const std::string& path);

// Matrix files are header-less CSV. Rational mode accepts "a/b", integers
// and decimal literals; float mode parses with strtod.
std::string matrix_to_csv(const MatrixD& M);
std::string matrix_to_csv(const MatrixQ& M);
MatrixD matrix_d_from_csv(const std::string& text);
MatrixQ matrix_q_from_csv(const std::string& text);
MatrixD load_matrix_d(const std::string& path);
MatrixQ load_matrix_q(const std::string& path);
void save_matrix(const MatrixD& M, const std::string& path);
void save_matrix(const MatrixQ& M, const std::string& path);

std::string read_file(const std::string& path);
// Write via a temporary file + rename so readers never observe a torn file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace zr
