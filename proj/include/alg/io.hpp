#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "alg/algebra.hpp"

namespace alg {

// Line-oriented algebra files, '#' starts a comment:
//   algebra <name>
//   size <n>
//   labels <l0> ... <l(n-1)>      (optional)
//   op <symbol> <arity>           (one per symbol, declaration order = table order)
//   table <symbol>
//   <n^(arity-1) rows of n integers; one row with one integer for constants>
//   end
FiniteAlgebra read_algebra(std::istream& in, const std::string& origin = "<stream>");
FiniteAlgebra read_algebra_file(const std::filesystem::path& path);

void write_algebra(std::ostream& out, const FiniteAlgebra& A);
void write_algebra_file(const std::filesystem::path& path, const FiniteAlgebra& A);

// All *.alg files in a directory, sorted by filename.
std::vector<FiniteAlgebra> read_algebra_dir(const std::filesystem::path& dir);

} // namespace alg
