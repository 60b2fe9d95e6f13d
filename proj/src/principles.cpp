#include "alg/principles.hpp"

#include <algorithm>
#include <set>

namespace alg {

std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Holds: return "HOLDS";
        case Verdict::Status::Fails: return "FAILS";
        default: return "HOLDS-UP-TO-BOUND";
    }
}

bool bound_is_exact(Stabilization s, int bound, int carrier_size) {
    switch (s) {
        case Stabilization::Constant: return true;
        case Stabilization::CarrierSize: return bound >= carrier_size;
        default: return false;
    }
}

namespace {

std::vector<DeductiveFilter> filters_in_scope(const FiniteAlgebra& A, TranslationStyle style,
                                              FilterScope scope) {
    std::vector<DeductiveFilter> filters = all_filters(A, style);
    if (scope == FilterScope::All) return filters;
    // simple = maximal among non-trivial filters
    std::vector<DeductiveFilter> simple;
    for (const DeductiveFilter& f : filters) {
        if (f.set.is_full()) continue;
        bool maximal = true;
        for (const DeductiveFilter& g : filters) {
            if (g.set.is_full() || g.set == f.set) continue;
            if (f.set.subset_of(g.set)) { maximal = false; break; }
        }
        if (maximal) simple.push_back(f);
    }
    return simple;
}

// per-index evaluated scheme instances I_n(a) as element sets
struct EvaluatedFamily {
    // values[n-1][a] = elements of I_n(a)
    std::vector<std::vector<std::vector<int>>> values;

    EvaluatedFamily(const FiniteAlgebra& A, const SchemeFamily& psi, int bound) {
        values.resize(static_cast<std::size_t>(bound));
        for (int n = 1; n <= bound; ++n) {
            std::vector<Formula> set;
            for (const Formula& g : psi.generate(n)) set.push_back(g.expand());
            auto& per_elem = values[static_cast<std::size_t>(n - 1)];
            per_elem.resize(static_cast<std::size_t>(A.size()));
            for (int a = 0; a < A.size(); ++a) {
                Valuation v{{"p", a}};
                for (const Formula& g : set)
                    per_elem[static_cast<std::size_t>(a)].push_back(evaluate(A, g, v));
            }
        }
    }

    const std::vector<int>& at(int n, int a) const {
        return values[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)];
    }
};

bool all_in(const std::vector<int>& elems, const ElemSet& F) {
    for (int e : elems)
        if (!F.contains(e)) return false;
    return true;
}

Witness make_witness(const FiniteAlgebra& A, const DeductiveFilter& F, int a, int b, int index,
                     std::string note) {
    Witness w;
    w.algebra = A.name();
    w.filter = F.set.elements();
    w.a = a;
    w.b = b;
    w.index = index;
    w.note = std::move(note);
    return w;
}

} // namespace

Verdict check_il(const FiniteAlgebra& A, TranslationStyle style, const SchemeFamily& psi,
                 int bound, std::optional<bool> exact_override, FilterScope scope) {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "bound must be >= 1");
    bool exact = exact_override.value_or(bound_is_exact(psi.stabilization, bound, A.size()));
    EvaluatedFamily fam(A, psi, bound);
    bool bounded_gap = false;
    Verdict v;
    for (const DeductiveFilter& F : filters_in_scope(A, style, scope)) {
        std::vector<int> base = F.set.elements();
        for (int a = 0; a < A.size(); ++a) {
            std::vector<int> gen = base;
            gen.push_back(a);
            bool inconsistent = filter_generated(A, style, gen).set.is_full();
            int witness_n = -1;
            for (int n = 1; n <= bound && witness_n < 0; ++n)
                if (all_in(fam.at(n, a), F.set)) witness_n = n;
            if (witness_n >= 0 && !inconsistent) {
                v.status = Verdict::Status::Fails;
                v.witness = make_witness(A, F, a, -1, witness_n,
                                         "I_n(a) in F but Fg(F u {a}) is not trivial");
                return v;
            }
            if (inconsistent && witness_n < 0) {
                if (exact) {
                    v.status = Verdict::Status::Fails;
                    v.witness = make_witness(A, F, a, -1, -1,
                                             "Fg(F u {a}) trivial but no I_n(a) lies in F");
                    return v;
                }
                bounded_gap = true;
            }
        }
    }
    v.status = bounded_gap ? Verdict::Status::HoldsUpToBound : Verdict::Status::Holds;
    return v;
}

Verdict check_dual_il(const FiniteAlgebra& A, TranslationStyle style, const SchemeFamily& psi,
                      int bound, std::optional<bool> exact_override, FilterScope scope) {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "bound must be >= 1");
    bool exact = exact_override.value_or(bound_is_exact(psi.stabilization, bound, A.size()));
    EvaluatedFamily fam(A, psi, bound);
    bool bounded_gap = false;
    Verdict v;
    for (const DeductiveFilter& F : filters_in_scope(A, style, scope)) {
        std::vector<int> base = F.set.elements();
        for (int a = 0; a < A.size(); ++a) {
            bool in_f = F.set.contains(a);
            int nontrivial_n = -1;
            for (int n = 1; n <= bound && nontrivial_n < 0; ++n) {
                std::vector<int> gen = base;
                for (int e : fam.at(n, a)) gen.push_back(e);
                if (!filter_generated(A, style, gen).set.is_full()) nontrivial_n = n;
            }
            if (in_f && nontrivial_n >= 0) {
                v.status = Verdict::Status::Fails;
                v.witness = make_witness(A, F, a, -1, nontrivial_n,
                                         "a in F but Fg(F u I_n(a)) is not trivial");
                return v;
            }
            if (!in_f && nontrivial_n < 0) {
                if (exact) {
                    v.status = Verdict::Status::Fails;
                    v.witness = make_witness(
                        A, F, a, -1, -1, "a not in F yet Fg(F u I_n(a)) trivial for every n");
                    return v;
                }
                bounded_gap = true;
            }
        }
    }
    v.status = bounded_gap ? Verdict::Status::HoldsUpToBound : Verdict::Status::Holds;
    return v;
}

Verdict check_ddt(const FiniteAlgebra& A, TranslationStyle style, const DdtFamily& phi,
                  int bound, std::optional<bool> exact_override) {
    int count = phi.fixed_count > 0 ? phi.fixed_count : bound;
    if (count < 1) fail(ErrorKind::InvalidArgument, "bound must be >= 1");
    bool exact = exact_override.value_or(bound_is_exact(phi.stabilization, count, A.size()));

    // values[i-1][a][b] = elements of E_i(a,b)
    int n = A.size();
    std::vector<std::vector<std::vector<std::vector<int>>>> values(
        static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        std::vector<Formula> set;
        for (const Formula& g : phi.generate(i)) set.push_back(g.expand());
        auto& per = values[static_cast<std::size_t>(i - 1)];
        per.assign(static_cast<std::size_t>(n),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Valuation v{{"p", a}, {"q", b}};
                for (const Formula& g : set)
                    per[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].push_back(
                        evaluate(A, g, v));
            }
    }

    bool bounded_gap = false;
    Verdict v;
    for (const DeductiveFilter& F : filters_in_scope(A, style, FilterScope::All)) {
        std::vector<int> base = F.set.elements();
        for (int a = 0; a < n; ++a) {
            std::vector<int> gen = base;
            gen.push_back(a);
            ElemSet G = filter_generated(A, style, gen).set;
            for (int b = 0; b < n; ++b) {
                bool b_in = G.contains(b);
                int witness_i = -1;
                for (int i = 1; i <= count && witness_i < 0; ++i)
                    if (all_in(values[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a)]
                                     [static_cast<std::size_t>(b)],
                               F.set))
                        witness_i = i;
                if (witness_i >= 0 && !b_in) {
                    v.status = Verdict::Status::Fails;
                    v.witness = make_witness(A, F, a, b, witness_i,
                                             "E_i(a,b) in F but b not in Fg(F u {a})");
                    return v;
                }
                if (b_in && witness_i < 0) {
                    if (exact) {
                        v.status = Verdict::Status::Fails;
                        v.witness = make_witness(A, F, a, b, -1,
                                                 "b in Fg(F u {a}) but no E_i(a,b) lies in F");
                        return v;
                    }
                    bounded_gap = true;
                }
            }
        }
    }
    v.status = bounded_gap ? Verdict::Status::HoldsUpToBound : Verdict::Status::Holds;
    return v;
}

Verdict check_pcp(const FiniteAlgebra& A, TranslationStyle style,
                  const std::vector<Formula>& join_scheme) {
    int n = A.size();
    std::vector<Formula> scheme;
    for (const Formula& g : join_scheme) scheme.push_back(g.expand());
    Verdict v;
    for (const DeductiveFilter& F : filters_in_scope(A, style, FilterScope::All)) {
        std::vector<int> base = F.set.elements();
        std::vector<ElemSet> single(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            std::vector<int> gen = base;
            gen.push_back(a);
            single[static_cast<std::size_t>(a)] = filter_generated(A, style, gen).set;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<int> gen = base;
                Valuation val{{"p", a}, {"q", b}};
                for (const Formula& g : scheme) gen.push_back(evaluate(A, g, val));
                ElemSet joined = filter_generated(A, style, gen).set;
                ElemSet expected =
                    single[static_cast<std::size_t>(a)].intersect(single[static_cast<std::size_t>(b)]);
                if (!(joined == expected)) {
                    v.status = Verdict::Status::Fails;
                    v.witness = make_witness(A, F, a, b, -1,
                                             "Fg(F u join(a,b)) != Fg(F u {a}) cap Fg(F u {b})");
                    return v;
                }
            }
    }
    v.status = Verdict::Status::Holds;
    return v;
}

Formula ddt_from_cil_member(const SchemeFamily& psi, int n, int k, ConjShape shape) {
    std::vector<Formula> inner = psi.generate(n);
    Formula c = Formula::var("p");
    for (const Formula& g : inner) c = shape == ConjShape::Fusion
                                            ? Formula::fus(c, g.substitute("p", Formula::var("q")))
                                            : Formula::meet(c, g.substitute("p", Formula::var("q")));
    std::vector<Formula> outer = psi.generate(k);
    if (outer.size() != 1)
        fail(ErrorKind::InvalidArgument, "ddt_from_cil_member needs singleton family sets");
    return outer.front().substitute("p", c);
}

DdtFamily ddt_from_cil(const SchemeFamily& psi, int bound, ConjShape shape) {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "ddt_from_cil needs a positive bound");
    DdtFamily out;
    out.name = psi.name + "-ddt";
    out.fixed_count = bound;
    out.stabilization = psi.stabilization;
    out.generate = [psi, bound, shape](int k) {
        std::vector<Formula> set;
        for (int n = 1; n <= bound; ++n) {
            std::vector<Formula> inner = psi.generate(n);
            Formula c = Formula::var("p");
            for (const Formula& g : inner)
                c = shape == ConjShape::Fusion
                        ? Formula::fus(c, g.substitute("p", Formula::var("q")))
                        : Formula::meet(c, g.substitute("p", Formula::var("q")));
            for (const Formula& g : psi.generate(k)) set.push_back(g.substitute("p", c));
        }
        return set;
    };
    return out;
}

bool check_lem_axiom(const FiniteAlgebra& A, LemForm form, const LemScheme& scheme, int n) {
    Formula ax = lem_axiom(form, scheme, n).expand();
    int one = A.one();
    int size = A.size();
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            int val = evaluate(A, ax, {{"p", a}, {"q", b}});
            bool ok = scheme.modal_validity ? val == one : A.meet(one, val) == one;
            if (!ok) return false;
        }
    return true;
}

CrossReport semisimple_vs_lem(const std::vector<FiniteAlgebra>& catalog, LemForm form,
                              const LemScheme& scheme, int n_lo, int n_hi, int cap) {
    CrossReport report;
    for (const FiniteAlgebra& A : catalog) {
        CrossRow row;
        row.algebra = A.name();
        row.semisimple = is_semisimple(A, cap).semisimple;
        for (int n = n_lo; n <= n_hi && row.least_n < 0; ++n)
            if (check_lem_axiom(A, form, scheme, n)) row.least_n = n;
        row.agree = row.semisimple == (row.least_n >= 0);
        report.all_agree = report.all_agree && row.agree;
        report.rows.push_back(std::move(row));
    }
    return report;
}

ConsequenceResult check_rule(const std::vector<Matrix>& family,
                             const std::vector<Formula>& gamma, const Formula& phi) {
    return consequence(family, gamma, phi);
}

Verdict antiadmissible(const std::vector<FiniteAlgebra>& catalog, TranslationStyle style,
                       const std::vector<Formula>& gamma, const Formula& phi, int cap) {
    std::set<std::string> vars;
    for (const Formula& g : gamma)
        for (const std::string& s : g.variables()) vars.insert(s);
    for (const std::string& s : phi.variables()) vars.insert(s);
    std::vector<std::string> vs(vars.begin(), vars.end());
    std::vector<Formula> gexp;
    for (const Formula& g : gamma) gexp.push_back(g.expand());
    Formula pexp = phi.expand();

    Verdict verdict;
    for (const FiniteAlgebra& A : catalog) {
        std::vector<DeductiveFilter> filters = all_filters(A, style, cap);
        std::size_t count = 1;
        for (std::size_t i = 0; i < vs.size(); ++i) count *= static_cast<std::size_t>(A.size());
        for (const DeductiveFilter& F : filters) {
            std::vector<int> base = F.set.elements();
            Valuation v;
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::size_t rest = idx;
                for (const std::string& name : vs) {
                    v[name] = static_cast<int>(rest % static_cast<std::size_t>(A.size()));
                    rest /= static_cast<std::size_t>(A.size());
                }
                std::vector<int> gen = base;
                gen.push_back(evaluate(A, pexp, v));
                if (!filter_generated(A, style, gen).set.is_full()) continue;
                std::vector<int> gall = base;
                for (const Formula& g : gexp) gall.push_back(evaluate(A, g, v));
                if (!filter_generated(A, style, gall).set.is_full()) {
                    verdict.status = Verdict::Status::Fails;
                    Witness w = make_witness(A, F, -1, -1, -1,
                                             "Fg(F u {v(phi)}) trivial but Fg(F u v[gamma]) is not");
                    for (const auto& [name, val] : v) w.note += " " + name + "=" + A.label(val);
                    verdict.witness = std::move(w);
                    return verdict;
                }
            }
        }
    }
    verdict.status = Verdict::Status::Holds;
    return verdict;
}

} // namespace alg
