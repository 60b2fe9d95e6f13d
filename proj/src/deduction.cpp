#include "alg/deduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace alg {

ElemSet ElemSet::of(int n, const std::vector<int>& elems) {
    ElemSet s(n);
    for (int a : elems) {
        if (a < 0 || a >= n) fail(ErrorKind::InvalidArgument, "element out of carrier");
        s.insert(a);
    }
    return s;
}

int ElemSet::count() const {
    return static_cast<int>(std::count(in_.begin(), in_.end(), 1));
}

ElemSet ElemSet::intersect(const ElemSet& other) const {
    ElemSet out(size());
    for (int a = 0; a < size(); ++a)
        if (contains(a) && other.contains(a)) out.insert(a);
    return out;
}

bool ElemSet::subset_of(const ElemSet& other) const {
    for (int a = 0; a < size(); ++a)
        if (contains(a) && !other.contains(a)) return false;
    return true;
}

std::vector<int> ElemSet::elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a)
        if (contains(a)) out.push_back(a);
    return out;
}

int translate(const FiniteAlgebra& A, TranslationStyle style, int a) {
    if (style == TranslationStyle::Modal) return a;
    return A.meet(a, A.one());
}

namespace {

ElemSet filter_of_congruence(const FiniteAlgebra& A, TranslationStyle style,
                             const Congruence& theta) {
    ElemSet f(A.size());
    int one = A.one();
    for (int a = 0; a < A.size(); ++a)
        if (theta.same(translate(A, style, a), one)) f.insert(a);
    return f;
}

} // namespace

std::vector<DeductiveFilter> all_filters(const FiniteAlgebra& A, TranslationStyle style,
                                         int cap) {
    CongruenceLattice lat = all_congruences(A, cap);
    std::vector<DeductiveFilter> out;
    std::set<ElemSet> seen;
    for (const Congruence& theta : lat.all) {
        ElemSet f = filter_of_congruence(A, style, theta);
        if (seen.insert(f).second) out.push_back({f, theta});
    }
    std::sort(out.begin(), out.end());
    return out;
}

DeductiveFilter filter_generated(const FiniteAlgebra& A, TranslationStyle style,
                                 const std::vector<int>& X) {
    std::vector<std::pair<int, int>> pairs;
    int one = A.one();
    for (int x : X) {
        if (x < 0 || x >= A.size()) fail(ErrorKind::InvalidArgument, "generator out of carrier");
        pairs.emplace_back(translate(A, style, x), one);
    }
    Congruence theta = congruence_generated(A, pairs);
    return {filter_of_congruence(A, style, theta), theta};
}

DeductiveFilter least_filter(const FiniteAlgebra& A, TranslationStyle style) {
    return filter_generated(A, style, {});
}

namespace {

std::vector<std::string> collect_variables(const std::vector<Formula>& gamma, const Formula* phi) {
    std::set<std::string> vars;
    for (const Formula& g : gamma)
        for (const std::string& v : g.variables()) vars.insert(v);
    if (phi)
        for (const std::string& v : phi->variables()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

// invokes fn(v) for every valuation of vars into {0..n-1}; stops when fn returns false
template <typename Fn>
void for_each_valuation(const std::vector<std::string>& vars, int n, Fn&& fn) {
    Valuation v;
    std::size_t count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) count *= static_cast<std::size_t>(n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        for (const std::string& name : vars) {
            v[name] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        if (!fn(v)) return;
    }
}

} // namespace

ConsequenceResult consequence(const std::vector<Matrix>& family,
                              const std::vector<Formula>& gamma, const Formula& phi) {
    std::vector<std::string> vars = collect_variables(gamma, &phi);
    std::vector<Formula> gexp;
    for (const Formula& g : gamma) gexp.push_back(g.expand());
    Formula pexp = phi.expand();

    ConsequenceResult res;
    res.holds = true;
    for (std::size_t m = 0; m < family.size() && res.holds; ++m) {
        const Matrix& M = family[m];
        for_each_valuation(vars, M.algebra->size(), [&](const Valuation& v) {
            for (const Formula& g : gexp)
                if (!M.designated.contains(evaluate(*M.algebra, g, v))) return true;
            if (!M.designated.contains(evaluate(*M.algebra, pexp, v))) {
                res.holds = false;
                res.witness = CounterModel{static_cast<int>(m), M.name, v};
                return false;
            }
            return true;
        });
    }
    return res;
}

ConsequenceResult is_antitheorem(const std::vector<Matrix>& family,
                                 const std::vector<Formula>& gamma) {
    std::vector<std::string> vars = collect_variables(gamma, nullptr);
    std::vector<Formula> gexp;
    for (const Formula& g : gamma) gexp.push_back(g.expand());

    ConsequenceResult res;
    res.holds = true;
    for (std::size_t m = 0; m < family.size() && res.holds; ++m) {
        const Matrix& M = family[m];
        if (M.designated.is_full()) continue;  // trivial models never count
        for_each_valuation(vars, M.algebra->size(), [&](const Valuation& v) {
            for (const Formula& g : gexp)
                if (!M.designated.contains(evaluate(*M.algebra, g, v))) return true;
            res.holds = false;
            res.witness = CounterModel{static_cast<int>(m), M.name, v};
            return false;
        });
    }
    return res;
}

} // namespace alg
