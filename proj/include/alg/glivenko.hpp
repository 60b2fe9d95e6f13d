#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alg/deduction.hpp"

namespace alg {

using Rational = boost::multiprecision::cpp_rational;

struct GlivenkoPair {
    std::vector<Matrix> weak;
    std::vector<Matrix> strong;
    Formula scheme;              // translation with hole variable "_"
    bool strong_complete = false;  // strong catalog decides its logic exactly
};

struct GlivenkoSide {
    bool holds = false;
    bool exact = false;  // refutations are exact; validations only over complete catalogs
    std::optional<CounterModel> witness;
};

struct GlivenkoReport {
    GlivenkoSide strong_side;  // Gamma |- phi
    GlivenkoSide weak_side;    // Gamma |- scheme(phi)
    bool match = false;
    bool exact_mismatch = false;
};

GlivenkoReport glivenko_check(const GlivenkoPair& pair, const std::vector<Formula>& gamma,
                              const Formula& phi);

struct LocalGlivenkoRow {
    int n = 0;
    int k = -1;  // least k <= bound with Gamma |= ~((~phi^n)^k); -1 = none up to bound
};

// FLew-shaped local correspondence over a single catalog.
std::vector<LocalGlivenkoRow> local_glivenko_check(const std::vector<Matrix>& family,
                                                   const std::vector<Formula>& gamma,
                                                   const Formula& phi, int bound);

// Exact-rational countermodel for the n-th instance of the local deduction
// family on the standard Lukasiewicz chain [0,1]:
//   v(p) = 1 - eps/(n+1),  v(q_i) = min(1, 1 - eps + (1+...+i)/(n+1) * eps),
// with rational eps = 1/(1 + ceil(sqrt(2n))).
struct LukCertificate {
    int n = 0;
    Rational eps;
    Rational v_p;
    std::vector<Rational> v_q;           // q_0 .. q_{i_max+1}
    int i_max = 0;                       // least i with v(q_i) = 1
    std::vector<Rational> chain_premises;    // v(p^{i+1} -> (q_{i+1} -> q_i)), i <= i_max
    std::vector<Rational> escape_premises;   // v(~q_0 -> q_i^i), i <= i_max
    Rational conclusion;                 // v(p^n -> q_0)
    bool premises_designated = false;    // every premise value = 1
    bool conclusion_refuted = false;     // conclusion value < 1
    bool ok = false;
};

LukCertificate lukinfty_ddt_countermodel(int n);

// Evaluate a fusion/lattice/arrow formula on the standard [0,1] chain.
Rational luk_eval(const Formula& phi, const std::map<std::string, Rational>& v);

// Seeded random formulas over meet, join, arrow, negb (plus box/diamond when
// modal), variables and bounds; at most max_nodes nodes.
Formula random_formula(std::mt19937& rng, int max_nodes, const std::vector<std::string>& vars,
                       bool modal = false);

// The correspondences shipped with the workbench, by name:
//   heyting-classical  (heyting:max=N, boolean2, ~~_)
//   s4-s5              (s4:sizes=2,4[,8], s5:sizes=2,4[,8], ~[]~[]_)
//   ikn4-lem           (ikn4:n=1,max=N, ikn45:n=1,max=N, ~[]_1~[]_1 _)
//   mipc-ws5           (mipc:max=N, ws5:max=N, ~~[]_)
//   bl-luk             (bl-chains:max=N, luk-chains:max=N, ~~_)
struct ShippedPair {
    std::string name;
    std::string weak_source;
    std::string strong_source;
    std::string scheme;
    bool modal = false;
    bool strong_complete = false;
};

ShippedPair shipped_pair(const std::string& name, int max_size);
std::vector<std::string> shipped_pair_names();

} // namespace alg
