#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "alg/errors.hpp"

namespace alg {

// Immutable formula tree over the FL/modal signature. Derived connectives
// (~, !, ->) are ordinary nodes; expand() rewrites them into the declared
// signature. Power/box/oplus macros expand at construction time and never
// appear as nodes.
class Formula {
public:
    enum class Kind : std::uint8_t {
        Var,
        One, Zero, Top, Bot,
        NegB,   // ~x, abbreviates x \ B
        NegZ,   // !x, abbreviates x \ 0
        Box, Dia,
        Meet, Join, Fus,
        Under,  // x \ y
        Over,   // x / y
        Arrow,  // x -> y, abbreviates x \ y (commutative classes)
    };

    Formula() = default;

    static Formula var(std::string name);
    static Formula one();
    static Formula zero();
    static Formula top();
    static Formula bot();
    static Formula negb(Formula x);
    static Formula negz(Formula x);
    static Formula box(Formula x);
    static Formula dia(Formula x);
    static Formula meet(Formula l, Formula r);
    static Formula join(Formula l, Formula r);
    static Formula fus(Formula l, Formula r);
    static Formula under(Formula l, Formula r);
    static Formula over(Formula l, Formula r);
    static Formula arrow(Formula l, Formula r);

    // Macros: x^0 = 1, x^1 = x, x^{n+1} = x^n * x.
    static Formula power(Formula x, int n);
    // []_n x = x /\ []x /\ ... /\ []^n x; []_0 x = x.
    static Formula boxn(int n, Formula x);
    // <>_n x = x \/ <>x \/ ... \/ <>^n x.
    static Formula dian(int n, Formula x);
    // n.x: 0.x = 0, (n+1).x = x (+) n.x with x (+) y = ~(~y * ~x).
    static Formula nfold(int n, Formula x);
    static Formula oplus(Formula x, Formula y);

    bool valid() const { return p_ != nullptr; }
    Kind kind() const;
    const std::string& var_name() const;
    Formula lhs() const;
    Formula rhs() const;

    bool is_binary() const;
    bool is_unary() const;
    bool is_constant() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // Rewrites ~, ! and -> into \ with the matching constant. Idempotent.
    Formula expand() const;

    Formula substitute(const std::string& var, const Formula& repl) const;
    Formula substitute(const std::map<std::string, Formula>& repl) const;

    std::set<std::string> variables() const;
    int node_count() const;

    // Canonical rendering; parse(str()) reproduces the tree exactly.
    std::string str() const;

private:
    struct Node;
    using Ptr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        std::string var;
        Ptr lhs, rhs;
    };

    explicit Formula(Ptr p) : p_(std::move(p)) {}
    static Formula make(Kind k, Ptr l = nullptr, Ptr r = nullptr);

    const Node& node() const;
    void print(std::string& out, int level) const;

    Ptr p_;
};

// Parses the workbench grammar. Precedence, highest to lowest:
// postfix ^n; prefix ~ ! [] <> []_n <>_n n. ; * ; /\ ; \/ ;
// right-associative -> \ / (one operator kind per unparenthesized chain).
Formula parse_formula(std::string_view text);

// Indexed family of sets of unary formulas in the distinguished variable p
// (the inconsistency families Psi of the principle checks).
enum class Stabilization : std::uint8_t {
    Constant,     // generator ignores the index
    CarrierSize,  // indices 1..|A| exhaust every generated value set
    None,
};

struct SchemeFamily {
    std::string name;
    int bound = 8;  // default index ceiling for CLI use
    Stabilization stabilization = Stabilization::None;
    std::function<std::vector<Formula>(int)> generate;  // index n >= 1
};

// Two-variable families (p = moved premise, q = conclusion) for DDT checks.
struct DdtFamily {
    std::string name;
    int fixed_count = 0;  // 0: index range comes from the per-check bound
    Stabilization stabilization = Stabilization::None;
    std::function<std::vector<Formula>(int)> generate;
};

std::vector<Formula> expand_scheme(const SchemeFamily& f, int n, const Formula& arg);

// Built-in IL families: classical, flew-il, fle-il, ik-il, s4-il, luk-il:k=K.
SchemeFamily scheme_family(const std::string& token);
// Built-in DDT families: heyting-ddt, flew-ddt, fle-ddt, ik-ddt, s4-ddt.
DdtFamily ddt_family(const std::string& token);
// Built-in join schemes for PCP checks: or, fle-or, s4-or, ikn4-or:n=K.
std::vector<Formula> join_scheme(const std::string& token);

// Class-specific connectives for the axiomatic LEM forms.
enum class LemForm { DDT, PCP };

struct LemScheme {
    std::string cls;
    bool indexed = true;   // whether n participates
    bool modal_validity = false;  // validity is v = 1 rather than 1 <= v
    std::function<Formula(const Formula&, const Formula&, int)> imp;
    std::function<Formula(const Formula&, int)> neg;
    std::function<Formula(const Formula&, const Formula&, int)> disj;
};

// Registered instantiations: classical/heyting, flew, fle/flen, ik/ikn4/ikn45,
// modal/s4/kn4, mipc (s4-style box connectives).
LemScheme lem_scheme(const std::string& class_token);

// The closed-form LEM axiom for a class: DDT form (p=>q)=>((~p=>q)=>q) or
// PCP form p | ~p, with =>, ~, | taken from the class instantiation.
Formula lem_axiom(LemForm form, const LemScheme& scheme, int n);

} // namespace alg
