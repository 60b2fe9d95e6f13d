#include "alg/glivenko.hpp"

namespace alg {

GlivenkoReport glivenko_check(const GlivenkoPair& pair, const std::vector<Formula>& gamma,
                              const Formula& phi) {
    for (const std::string& v : pair.scheme.variables())
        if (v != "_")
            fail(ErrorKind::InvalidArgument,
                 "translation scheme may only use the hole variable _");
    Formula translated = pair.scheme.substitute("_", phi);

    GlivenkoReport rep;
    ConsequenceResult strong = consequence(pair.strong, gamma, phi);
    rep.strong_side.holds = strong.holds;
    rep.strong_side.exact = strong.holds ? pair.strong_complete : true;
    rep.strong_side.witness = strong.witness;

    ConsequenceResult weak = consequence(pair.weak, gamma, translated);
    rep.weak_side.holds = weak.holds;
    rep.weak_side.exact = !weak.holds;  // validation over a finite weak catalog is bounded
    rep.weak_side.witness = weak.witness;

    rep.match = rep.strong_side.holds == rep.weak_side.holds;
    rep.exact_mismatch = !rep.match && rep.strong_side.exact && rep.weak_side.exact;
    return rep;
}

std::vector<LocalGlivenkoRow> local_glivenko_check(const std::vector<Matrix>& family,
                                                   const std::vector<Formula>& gamma,
                                                   const Formula& phi, int bound) {
    std::vector<LocalGlivenkoRow> rows;
    for (int n = 1; n <= bound; ++n) {
        LocalGlivenkoRow row;
        row.n = n;
        Formula neg_phi_n = Formula::negb(Formula::power(phi, n));
        for (int k = 1; k <= bound && row.k < 0; ++k) {
            Formula target = Formula::negb(Formula::power(neg_phi_n, k));
            if (consequence(family, gamma, target).holds) row.k = k;
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Exact Lukasiewicz arithmetic on [0,1]

namespace {

Rational clamp01(const Rational& x) {
    if (x < 0) return Rational(0);
    if (x > 1) return Rational(1);
    return x;
}

} // namespace

Rational luk_eval(const Formula& phi, const std::map<std::string, Rational>& v) {
    using K = Formula::Kind;
    Formula f = phi;  // callers pass unexpanded formulas freely
    switch (f.kind()) {
        case K::Var: {
            auto it = v.find(f.var_name());
            if (it == v.end()) fail(ErrorKind::UnboundVariable, "unbound " + f.var_name());
            return it->second;
        }
        case K::One: case K::Top: return Rational(1);
        case K::Zero: case K::Bot: return Rational(0);
        case K::NegB: case K::NegZ: return Rational(Rational(1) - luk_eval(f.lhs(), v));
        case K::Meet: {
            Rational l = luk_eval(f.lhs(), v), r = luk_eval(f.rhs(), v);
            return l < r ? l : r;
        }
        case K::Join: {
            Rational l = luk_eval(f.lhs(), v), r = luk_eval(f.rhs(), v);
            return l < r ? r : l;
        }
        case K::Fus: return clamp01(Rational(luk_eval(f.lhs(), v) + luk_eval(f.rhs(), v) - 1));
        case K::Under: case K::Arrow:
            return clamp01(Rational(Rational(1) - luk_eval(f.lhs(), v) + luk_eval(f.rhs(), v)));
        case K::Over:
            return clamp01(Rational(Rational(1) - luk_eval(f.rhs(), v) + luk_eval(f.lhs(), v)));
        default:
            fail(ErrorKind::UnknownSymbol, "no modal operations on the [0,1] chain");
    }
}

LukCertificate lukinfty_ddt_countermodel(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "countermodel index must be >= 1");
    LukCertificate cert;
    cert.n = n;

    // smallest s with s*s >= 2n, i.e. ceil(sqrt(2n))
    int s = 0;
    while (s * s < 2 * n) ++s;
    cert.eps = Rational(1, 1 + s);

    const Rational one(1);
    cert.v_p = Rational(one - cert.eps / (n + 1));

    // v(q_i) = min(1, 1 - eps + (i(i+1)/2) eps/(n+1)); find i_max and keep one extra
    auto q_of = [&](int i) {
        Rational tri(static_cast<long>(i) * (i + 1) / 2);
        Rational raw(one - cert.eps + tri * cert.eps / (n + 1));
        return raw < one ? raw : one;
    };
    int i = 0;
    for (;; ++i) {
        cert.v_q.push_back(q_of(i));
        if (cert.v_q.back() == one) break;
        if (i > 4 * n + 4)
            fail(ErrorKind::InvalidArgument, "countermodel valuation failed to reach 1");
    }
    cert.i_max = i;
    cert.v_q.push_back(q_of(i + 1));

    std::map<std::string, Rational> v{{"p", cert.v_p}};
    for (int j = 0; j <= cert.i_max + 1; ++j)
        v["q" + std::to_string(j)] = cert.v_q[static_cast<std::size_t>(j)];

    auto qvar = [](int j) { return Formula::var("q" + std::to_string(j)); };

    cert.premises_designated = true;
    // p^{i+1} -> (q_{i+1} -> q_i); beyond i_max both q's are 1 and the value
    // is constantly 1, certified by the extra index
    for (int j = 0; j <= cert.i_max; ++j) {
        Formula prem = Formula::arrow(Formula::power(Formula::var("p"), j + 1),
                                      Formula::arrow(qvar(j + 1), qvar(j)));
        Rational val = luk_eval(prem, v);
        cert.chain_premises.push_back(val);
        if (val != one) cert.premises_designated = false;
    }
    // ~q_0 -> q_i^i; q_0^0 = 1 so the i = 0 instance is trivially designated
    for (int j = 0; j <= cert.i_max; ++j) {
        Formula prem = Formula::arrow(Formula::negb(qvar(0)), Formula::power(qvar(j), j));
        Rational val = luk_eval(prem, v);
        cert.escape_premises.push_back(val);
        if (val != one) cert.premises_designated = false;
    }
    Formula concl = Formula::arrow(Formula::power(Formula::var("p"), n), qvar(0));
    cert.conclusion = luk_eval(concl, v);
    cert.conclusion_refuted = cert.conclusion < one;
    cert.ok = cert.premises_designated && cert.conclusion_refuted;
    return cert;
}

Formula random_formula(std::mt19937& rng, int max_nodes, const std::vector<std::string>& vars,
                       bool modal) {
    if (max_nodes < 1) max_nodes = 1;
    std::uniform_int_distribution<int> shape(0, modal ? 11 : 9);
    std::uniform_int_distribution<int> var_pick(0, static_cast<int>(vars.size()) - 1);
    if (max_nodes == 1) {
        int s = shape(rng);
        if (s == 0) return Formula::bot();
        if (s == 1) return Formula::top();
        return Formula::var(vars[static_cast<std::size_t>(var_pick(rng))]);
    }
    int s = shape(rng);
    if (s < 2) {  // leaf early
        if (s == 0) return Formula::bot();
        return Formula::var(vars[static_cast<std::size_t>(var_pick(rng))]);
    }
    if (s < 4) return Formula::negb(random_formula(rng, max_nodes - 1, vars, modal));
    if (s >= 10) {
        Formula inner = random_formula(rng, max_nodes - 1, vars, modal);
        return s == 10 ? Formula::box(inner) : Formula::dia(inner);
    }
    std::uniform_int_distribution<int> split(1, max_nodes - 2 > 1 ? max_nodes - 2 : 1);
    int left = split(rng);
    Formula l = random_formula(rng, left, vars, modal);
    Formula r = random_formula(rng, max_nodes - 1 - left, vars, modal);
    if (s < 6) return Formula::meet(l, r);
    if (s < 8) return Formula::join(l, r);
    return Formula::arrow(l, r);
}

std::vector<std::string> shipped_pair_names() {
    return {"heyting-classical", "s4-s5", "ikn4-lem", "mipc-ws5", "bl-luk"};
}

ShippedPair shipped_pair(const std::string& name, int max_size) {
    std::string m = std::to_string(max_size);
    if (name == "heyting-classical")
        return {name, "heyting:max=" + m, "boolean2", "~~_", false, true};
    if (name == "s4-s5") {
        std::string sizes = max_size >= 8 ? "2,4,8" : "2,4";
        return {name, "s4:sizes=" + sizes, "s5:sizes=" + sizes, "~[]~[]_", true, false};
    }
    if (name == "ikn4-lem")
        return {name, "ikn4:n=1,max=" + m, "ikn45:n=1,max=" + m, "~[]_1 ~[]_1 _", true, false};
    if (name == "mipc-ws5")
        return {name, "mipc:max=" + m, "ws5:max=" + m, "~~[]_", true, false};
    if (name == "bl-luk")
        return {name, "bl-chains:max=" + m, "luk-chains:max=" + m, "~~_", false, false};
    fail(ErrorKind::InvalidArgument, "unknown shipped pair '" + name + "'");
}

} // namespace alg
