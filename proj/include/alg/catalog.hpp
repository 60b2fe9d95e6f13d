#pragma once

#include <string>
#include <vector>

#include "alg/deduction.hpp"
#include "alg/search.hpp"

namespace alg {

// Resolves a catalog source to a list of algebras. Sources:
//   boolean2                       the two-element Boolean algebra
//   luk:k=K                        one Lukasiewicz chain
//   luk-chains:max=K               Lukasiewicz chains, k = 2..K
//   godel:k=K / godel-chains:max=K Godel chains
//   heyting:max=N                  enumerated Heyting algebras, sizes 1..N
//   flew:max=N, fle:max=N          enumerated FL(e/ew) algebras
//   flen:n=K,max=N  flewn:n=K,max=N
//   bl-chains:max=N                enumerated BL algebras that are chains
//   s4:sizes=2,4,8  s5:sizes=...   modal algebras over Boolean carriers
//   modal:sizes=... kn4:n=K,sizes=...
//   mipc:max=N  ws5:max=N  ik:max=N  ikn4:n=K,max=N  is4:max=N
//   <directory>                    every *.alg file in the directory
// Enumerated sources are cached per process.
std::vector<FiniteAlgebra> resolve_catalog(const std::string& source);

// Matrices with the designated filter: "least" (theorem elements) or a
// comma-separated element list applied to every algebra.
std::vector<Matrix> matrices_for(const std::vector<FiniteAlgebra>& algebras,
                                 TranslationStyle style, const std::string& designation);

TranslationStyle style_by_name(const std::string& token);  // "fl" | "modal"

} // namespace alg
