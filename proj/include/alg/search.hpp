#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alg/classes.hpp"

namespace alg {

// All bounded lattices on n elements up to isomorphism, lattice signature,
// element 0 = bottom, n-1 = top. Hard cap n <= 7.
std::vector<FiniteAlgebra> enumerate_lattices(int n);

struct Catalog {
    std::string cls;
    int size = 0;
    std::vector<FiniteAlgebra> algebras;
    std::vector<std::uint64_t> hashes;  // canonical-form hashes, parallel to algebras
};

// Exhaustive enumeration of the class on exactly n elements, up to
// isomorphism. Lattice-based classes only; caps: 6 for the FL family and
// Heyting-based modal classes, 8 for modal algebras over Boolean carriers.
Catalog enumerate_class(const AlgebraClass& C, int n, const std::vector<FiniteAlgebra>& bases);
Catalog enumerate_class(const AlgebraClass& C, int n);

bool is_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B);

// Lexicographically least relabeled table tuple over all carrier
// permutations; equal iff isomorphic.
std::vector<int> canonical_key(const FiniteAlgebra& A);
std::uint64_t canonical_hash(const FiniteAlgebra& A);

// Appends members of `fresh` not isomorphic to anything in `into`.
void merge_up_to_iso(std::vector<FiniteAlgebra>& into, const std::vector<FiniteAlgebra>& fresh);

} // namespace alg
