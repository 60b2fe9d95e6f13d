#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alg/deduction.hpp"
#include "alg/formula.hpp"

namespace alg {

struct Witness {
    std::string algebra;
    std::vector<int> filter;
    int a = -1;
    int b = -1;
    int index = -1;
    std::string note;
};

struct Verdict {
    enum class Status { Holds, Fails, HoldsUpToBound };
    Status status = Status::Holds;
    std::optional<Witness> witness;

    bool holds() const { return status != Status::Fails; }
    bool exact_holds() const { return status == Status::Holds; }
};

std::string to_string(Verdict::Status s);

enum class FilterScope { All, SimpleOnly };

// Is the index bound wide enough for HOLDS to be exact rather than bounded?
bool bound_is_exact(Stabilization s, int bound, int carrier_size);

// IL: over all deductive filters F and elements a,
//   Fg(F u {a}) = A  <=>  exists n <= bound with I_n(a) subseteq F.
// The right-to-left direction is exact; a missing witness downgrades to
// HOLDS-UP-TO-BOUND unless the bound provably exhausts the family.
Verdict check_il(const FiniteAlgebra& A, TranslationStyle style, const SchemeFamily& psi,
                 int bound, std::optional<bool> exact_override = std::nullopt,
                 FilterScope scope = FilterScope::All);

// Dual IL / LEM: a in F  <=>  for all n <= bound, Fg(F u I_n(a)) = A.
Verdict check_dual_il(const FiniteAlgebra& A, TranslationStyle style, const SchemeFamily& psi,
                      int bound, std::optional<bool> exact_override = std::nullopt,
                      FilterScope scope = FilterScope::All);

inline Verdict check_lem(const FiniteAlgebra& A, TranslationStyle style, const SchemeFamily& psi,
                         int bound, std::optional<bool> exact = std::nullopt,
                         FilterScope scope = FilterScope::All) {
    return check_dual_il(A, style, psi, bound, exact, scope);
}

// DDT: b in Fg(F u {a})  <=>  exists index i with E_i(a,b) subseteq F.
Verdict check_ddt(const FiniteAlgebra& A, TranslationStyle style, const DdtFamily& phi,
                  int bound, std::optional<bool> exact_override = std::nullopt);

// PCP: Fg(F u join(a,b)) = Fg(F u {a}) cap Fg(F u {b}); always exact.
Verdict check_pcp(const FiniteAlgebra& A, TranslationStyle style,
                  const std::vector<Formula>& join_scheme);

enum class ConjShape { Fusion, Meet };

// DDT family derived from a classical IL family psi (bounded choice recipe):
// member k is { psi_k(p # psi_n(q)) : n <= N } with # the conjunction shape.
DdtFamily ddt_from_cil(const SchemeFamily& psi, int bound, ConjShape shape);
// The (n, k) generator psi_k(p # psi_n(q)) for singleton-set families.
Formula ddt_from_cil_member(const SchemeFamily& psi, int n, int k, ConjShape shape);

// Validity of the closed-form LEM axiom: 1 <= v (FL) or v = 1 (modal) under
// every valuation.
bool check_lem_axiom(const FiniteAlgebra& A, LemForm form, const LemScheme& scheme, int n);

struct CrossRow {
    std::string algebra;
    bool semisimple = false;
    int least_n = -1;  // least n in range validating the LEM axiom, -1 if none
    bool agree = false;
};

struct CrossReport {
    std::vector<CrossRow> rows;
    bool all_agree = true;
};

// is_semisimple(A) vs existence of n in [n_lo, n_hi] validating the axiom.
CrossReport semisimple_vs_lem(const std::vector<FiniteAlgebra>& catalog, LemForm form,
                              const LemScheme& scheme, int n_lo, int n_hi, int cap = 12);

// Plain consequence over the matrix family.
ConsequenceResult check_rule(const std::vector<Matrix>& family,
                             const std::vector<Formula>& gamma, const Formula& phi);

// Finite antiadmissibility: for every catalog algebra, every deductive filter
// F and valuation v: Fg(F u {v(phi)}) trivial  =>  Fg(F u v[gamma]) trivial.
Verdict antiadmissible(const std::vector<FiniteAlgebra>& catalog, TranslationStyle style,
                       const std::vector<Formula>& gamma, const Formula& phi, int cap = 12);

} // namespace alg
