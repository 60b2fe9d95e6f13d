#include "alg/classes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace alg {

namespace {

Formula X() { return Formula::var("x"); }
Formula Y() { return Formula::var("y"); }
Formula Z() { return Formula::var("z"); }

Law eq(Formula l, Formula r, std::string label) {
    return {Law::Kind::Eq, std::move(l), std::move(r), std::move(label)};
}

Law leq(Formula l, Formula r, std::string label) {
    return {Law::Kind::Leq, std::move(l), std::move(r), std::move(label)};
}

std::vector<Law> bounded_lattice_laws() {
    Formula x = X(), y = Y(), z = Z();
    return {
        eq(Formula::meet(x, x), x, "meet-idempotent"),
        eq(Formula::meet(x, y), Formula::meet(y, x), "meet-commutative"),
        eq(Formula::meet(Formula::meet(x, y), z), Formula::meet(x, Formula::meet(y, z)),
           "meet-associative"),
        eq(Formula::join(x, x), x, "join-idempotent"),
        eq(Formula::join(x, y), Formula::join(y, x), "join-commutative"),
        eq(Formula::join(Formula::join(x, y), z), Formula::join(x, Formula::join(y, z)),
           "join-associative"),
        eq(Formula::meet(x, Formula::join(x, y)), x, "absorption-meet"),
        eq(Formula::join(x, Formula::meet(x, y)), x, "absorption-join"),
        eq(Formula::meet(x, Formula::top()), x, "top-greatest"),
        eq(Formula::join(x, Formula::bot()), x, "bottom-least"),
    };
}

std::vector<Law> monoid_laws() {
    Formula x = X(), y = Y(), z = Z();
    return {
        eq(Formula::fus(Formula::fus(x, y), z), Formula::fus(x, Formula::fus(y, z)),
           "fusion-associative"),
        eq(Formula::fus(Formula::one(), x), x, "unit-left"),
        eq(Formula::fus(x, Formula::one()), x, "unit-right"),
    };
}

void append(std::vector<Law>& to, std::vector<Law> from) {
    for (Law& l : from) to.push_back(std::move(l));
}

std::vector<Law> modal_operator_laws(bool heyting_based, bool with_fs) {
    Formula x = X(), y = Y();
    std::vector<Law> laws{
        eq(Formula::box(Formula::meet(x, y)), Formula::meet(Formula::box(x), Formula::box(y)),
           "box-meet"),
        eq(Formula::box(Formula::top()), Formula::top(), "box-top"),
        eq(Formula::dia(Formula::join(x, y)), Formula::join(Formula::dia(x), Formula::dia(y)),
           "dia-join"),
        eq(Formula::dia(Formula::bot()), Formula::bot(), "dia-bot"),
    };
    if (heyting_based) {
        laws.push_back(leq(Formula::box(Formula::arrow(x, y)),
                           Formula::arrow(Formula::dia(x), Formula::dia(y)), "box-arrow-dia"));
        if (with_fs)
            laws.push_back(leq(Formula::arrow(Formula::dia(x), Formula::box(y)),
                               Formula::box(Formula::arrow(x, y)), "fs"));
    } else {
        laws.push_back(eq(Formula::dia(x), Formula::negb(Formula::box(Formula::negb(x))),
                          "dia-definition"));
    }
    return laws;
}

} // namespace

ClassReport check_membership(const FiniteAlgebra& A, const AlgebraClass& C) {
    // signature compatibility: every class symbol must exist in A
    for (const Symbol& s : C.base_sig.symbols()) {
        int i = A.signature().index_of(s.name);
        if (i < 0 || A.signature().at(i).arity != s.arity)
            fail(ErrorKind::SignatureMismatch,
                 "algebra " + A.name() + " lacks symbol " + s.name + "/" +
                     std::to_string(s.arity) + " required by class " + C.name);
    }

    ClassReport report;
    int n = A.size();

    auto record = [&](const std::string& label, const Valuation& v, std::string detail) {
        report.failures.push_back({label, v, std::move(detail)});
    };

    for (const Law& law : C.laws) {
        std::set<std::string> vars = law.lhs.variables();
        for (const std::string& s : law.rhs.variables()) vars.insert(s);
        std::vector<std::string> vs(vars.begin(), vars.end());
        std::size_t count = 1;
        for (std::size_t i = 0; i < vs.size(); ++i) count *= static_cast<std::size_t>(n);
        Formula le = law.lhs.expand(), re = law.rhs.expand();
        Valuation v;
        bool failed = false;
        for (std::size_t idx = 0; idx < count && !failed; ++idx) {
            std::size_t rest = idx;
            for (const std::string& name : vs) {
                v[name] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            int lv = evaluate(A, le, v);
            int rv = evaluate(A, re, v);
            bool ok = law.kind == Law::Kind::Eq ? lv == rv : A.meet(lv, rv) == lv;
            if (!ok) {
                std::ostringstream os;
                os << law.lhs.str() << (law.kind == Law::Kind::Eq ? " = " : " <= ")
                   << law.rhs.str() << " fails: " << A.label(lv)
                   << (law.kind == Law::Kind::Eq ? " != " : " !<= ") << A.label(rv);
                record(law.label, v, os.str());
                failed = true;  // first witness per law
            }
        }
    }

    if (C.needs_residuation) {
        int fus = A.sym_fus(), under = A.sym_under(), over = A.sym_over();
        auto le = [&](int a, int b) { return A.meet(a, b) == a; };
        bool failed = false;
        for (int x = 0; x < n && !failed; ++x)
            for (int y = 0; y < n && !failed; ++y)
                for (int z = 0; z < n && !failed; ++z) {
                    bool p1 = le(x, A.op2(over, z, y));
                    bool p2 = le(A.op2(fus, x, y), z);
                    bool p3 = le(y, A.op2(under, x, z));
                    if (p1 != p2 || p2 != p3) {
                        std::ostringstream os;
                        os << "residuation fails: x<=z/y:" << (p1 ? "t" : "f")
                           << " x*y<=z:" << (p2 ? "t" : "f") << " y<=x\\z:" << (p3 ? "t" : "f");
                        record("residuation", {{"x", x}, {"y", y}, {"z", z}}, os.str());
                        failed = true;
                    }
                }
    }

    report.verdict = report.failures.empty();
    return report;
}

AlgebraClass class_by_name(const std::string& token) {
    // split off flags
    std::string spec = token;
    bool flag_dual = false, flag_nofs = false;
    for (;;) {
        auto comma = spec.rfind(',');
        if (comma == std::string::npos) break;
        std::string flag = spec.substr(comma + 1);
        if (flag == "dual") flag_dual = true;
        else if (flag == "nofs") flag_nofs = true;
        else break;
        spec = spec.substr(0, comma);
    }
    std::string base = spec;
    int n = -1;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        base = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (rest.rfind("n=", 0) != 0)
            fail(ErrorKind::InvalidArgument, "malformed class parameter in '" + token + "'");
        n = std::stoi(rest.substr(2));
        if (n < 0) fail(ErrorKind::InvalidArgument, "class parameter n must be >= 0");
    }

    Formula x = X(), y = Y();
    AlgebraClass C;
    C.name = spec;

    auto require_n = [&](int dflt) {
        if (n < 0) n = dflt;
    };

    if (base == "lattice") {
        C.base_sig = Signature::lattice();
        C.laws = bounded_lattice_laws();
        return C;
    }

    C.base_sig = Signature::fl();
    C.laws = bounded_lattice_laws();
    append(C.laws, monoid_laws());
    C.needs_residuation = true;

    auto commutative = [&] {
        C.laws.push_back(eq(Formula::fus(x, y), Formula::fus(y, x), "fusion-commutative"));
        C.laws.push_back(eq(Formula::under(x, y), Formula::over(y, x), "residual-mirror"));
    };
    auto integral = [&] { C.laws.push_back(eq(Formula::one(), Formula::top(), "integrality")); };
    auto n_contraction = [&] {
        Formula ox = Formula::meet(Formula::one(), x);
        C.laws.push_back(eq(Formula::power(ox, n + 1), Formula::power(ox, n),
                            std::to_string(n) + "-contraction"));
    };
    auto contraction = [&] { C.laws.push_back(leq(x, Formula::fus(x, x), "contraction")); };
    auto modal_sig = [&] { C.base_sig = Signature::fl_modal(); };

    if (base == "fl") {
        // structural laws only
    } else if (base == "fle") {
        commutative();
    } else if (base == "flew") {
        commutative();
        integral();
    } else if (base == "flen") {
        require_n(1);
        commutative();
        n_contraction();
    } else if (base == "flewn") {
        require_n(1);
        commutative();
        integral();
        n_contraction();
    } else if (base == "heyting" || base == "godel" || base == "boolean") {
        commutative();
        integral();
        contraction();
        if (base == "godel")
            C.laws.push_back(eq(Formula::join(Formula::arrow(x, y), Formula::arrow(y, x)),
                                Formula::one(), "prelinearity"));
        if (base == "boolean")
            C.laws.push_back(eq(Formula::join(x, Formula::negb(x)), Formula::top(), "lem"));
    } else if (base == "bl" || base == "mv") {
        commutative();
        integral();
        C.laws.push_back(eq(Formula::join(Formula::arrow(x, y), Formula::arrow(y, x)),
                            Formula::one(), "prelinearity"));
        C.laws.push_back(eq(Formula::meet(x, y), Formula::fus(x, Formula::arrow(x, y)),
                            "divisibility"));
        if (base == "mv")
            C.laws.push_back(eq(Formula::negb(Formula::negb(x)), x, "involution"));
    } else if (base == "modal" || base == "s4" || base == "s5" || base == "kn4" ||
               base == "kn45") {
        modal_sig();
        commutative();
        integral();
        contraction();
        C.laws.push_back(eq(Formula::join(x, Formula::negb(x)), Formula::top(), "lem"));
        append(C.laws, modal_operator_laws(false, false));
        if (base == "s4" || base == "s5") {
            C.laws.push_back(leq(Formula::box(x), x, "reflexivity"));
            C.laws.push_back(leq(Formula::box(x), Formula::box(Formula::box(x)), "transitivity"));
            if (base == "s5")
                C.laws.push_back(leq(x, Formula::box(Formula::dia(x)), "symmetry"));
        } else if (base == "kn4" || base == "kn45") {
            require_n(1);
            C.laws.push_back(leq(Formula::boxn(n, x), Formula::boxn(n + 1, x),
                                 "weak-" + std::to_string(n) + "-transitivity"));
            if (base == "kn45")
                C.laws.push_back(eq(Formula::one(),
                                    Formula::join(x, Formula::boxn(1, Formula::negb(Formula::boxn(n, x)))),
                                    std::to_string(n) + "-cyclicity"));
        }
    } else if (base == "ik" || base == "ikn4" || base == "ikn45" || base == "is4" ||
               base == "mipc" || base == "ws5") {
        modal_sig();
        commutative();
        integral();
        contraction();
        append(C.laws, modal_operator_laws(true, !flag_nofs));
        if (base == "ikn4" || base == "ikn45") {
            require_n(1);
            C.laws.push_back(leq(Formula::boxn(n, x), Formula::boxn(n + 1, x),
                                 "weak-" + std::to_string(n) + "-transitivity"));
            if (flag_dual)
                C.laws.push_back(leq(Formula::dian(n + 1, x), Formula::dian(n, x),
                                     "dual-" + std::to_string(n) + "-transitivity"));
            if (base == "ikn45")
                C.laws.push_back(eq(Formula::one(),
                                    Formula::join(x, Formula::boxn(1, Formula::negb(Formula::boxn(n, x)))),
                                    std::to_string(n) + "-cyclicity"));
        } else if (base == "is4") {
            C.laws.push_back(leq(Formula::box(x), x, "reflexivity"));
            C.laws.push_back(leq(Formula::box(x), Formula::box(Formula::box(x)), "transitivity"));
            if (flag_dual) {
                C.laws.push_back(leq(x, Formula::dia(x), "dual-reflexivity"));
                C.laws.push_back(leq(Formula::dia(Formula::dia(x)), Formula::dia(x),
                                     "dual-transitivity"));
            }
        } else if (base == "mipc" || base == "ws5") {
            C.laws.push_back(leq(Formula::box(x), x, "reflexivity"));
            C.laws.push_back(eq(Formula::box(Formula::box(x)), Formula::box(x), "box-idempotent"));
            C.laws.push_back(leq(x, Formula::dia(x), "dual-reflexivity"));
            C.laws.push_back(eq(Formula::dia(Formula::dia(x)), Formula::dia(x), "dia-idempotent"));
            C.laws.push_back(leq(x, Formula::box(Formula::dia(x)), "box-dia"));
            C.laws.push_back(leq(Formula::dia(Formula::box(x)), x, "dia-box"));
            if (base == "ws5")
                C.laws.push_back(eq(Formula::dia(x), Formula::negb(Formula::box(Formula::negb(x))),
                                    "ws5"));
        }
    } else {
        fail(ErrorKind::InvalidArgument, "unknown class '" + token + "'");
    }
    return C;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

// assembles an FL-signature algebra from lattice tables + fusion + residuals
FiniteAlgebra assemble_fl(std::string name, int n, const std::vector<int>& meet,
                          const std::vector<int>& join, const std::vector<int>& fus,
                          const std::vector<int>& under, const std::vector<int>& over,
                          int one, int zero, int top, int bot,
                          std::vector<std::string> labels) {
    std::vector<std::vector<int>> tables{meet, join, fus, under, over,
                                         {one}, {zero}, {top}, {bot}};
    return FiniteAlgebra(std::move(name), n, Signature::fl(), std::move(tables),
                         std::move(labels));
}

} // namespace

FiniteAlgebra make_lukasiewicz_chain(int k) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "Lukasiewicz chain needs k >= 2");
    int n = k;
    int d = k - 1;  // element i represents i/d
    std::vector<int> meet(static_cast<std::size_t>(n * n)), join(meet.size()), fus(meet.size()),
        under(meet.size()), over(meet.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t i = static_cast<std::size_t>(a * n + b);
            meet[i] = std::min(a, b);
            join[i] = std::max(a, b);
            fus[i] = std::max(a + b - d, 0);
            under[i] = std::min(d - a + b, d);  // a \ b = min(1, 1 - a + b)
            over[i] = std::min(d - b + a, d);   // a / b = b \ a
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (i == 0) labels.push_back("0");
        else if (i == d) labels.push_back("1");
        else labels.push_back(std::to_string(i) + "/" + std::to_string(d));
    }
    return assemble_fl("luk" + std::to_string(k), n, meet, join, fus, under, over,
                       d, 0, d, 0, std::move(labels));
}

FiniteAlgebra make_godel_chain(int k) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "Godel chain needs k >= 2");
    int n = k;
    int d = k - 1;
    std::vector<int> meet(static_cast<std::size_t>(n * n)), join(meet.size()), fus(meet.size()),
        under(meet.size()), over(meet.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t i = static_cast<std::size_t>(a * n + b);
            meet[i] = std::min(a, b);
            join[i] = std::max(a, b);
            fus[i] = std::min(a, b);
            under[i] = a <= b ? d : b;
            over[i] = b <= a ? d : a;
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (i == 0) labels.push_back("0");
        else if (i == d) labels.push_back("1");
        else labels.push_back("a" + std::to_string(i));
    }
    return assemble_fl("godel" + std::to_string(k), n, meet, join, fus, under, over,
                       d, 0, d, 0, std::move(labels));
}

FiniteAlgebra make_boolean(int atoms) {
    if (atoms < 1) fail(ErrorKind::InvalidArgument, "Boolean algebra needs atoms >= 1");
    if (atoms > 20) fail(ErrorKind::CapExceeded, "Boolean algebra too large");
    int n = 1 << atoms;
    std::vector<int> meet(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
        join(meet.size()), fus(meet.size()), under(meet.size()), over(meet.size());
    int top = n - 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t i = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(b);
            meet[i] = a & b;
            join[i] = a | b;
            fus[i] = a & b;
            under[i] = (~a | b) & top;  // a -> b
            over[i] = (~b | a) & top;   // b -> a
        }
    return FiniteAlgebra("boolean" + std::to_string(n), n, Signature::fl(),
                         {meet, join, fus, under, over, {top}, {0}, {top}, {0}});
}

FiniteAlgebra make_monadic(const FiniteAlgebra& base,
                           const std::vector<std::vector<int>>& partition) {
    AlgebraClass heyting = class_by_name("heyting");
    ClassReport rep = check_membership(base, heyting);
    if (!rep.verdict)
        fail(ErrorKind::InvalidArgument,
             "make_monadic base " + base.name() + " is not a Heyting algebra");

    int n = base.size();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& blk : partition) {
        if (blk.empty()) fail(ErrorKind::InvalidArgument, "empty partition block");
        for (int a : blk) {
            if (a < 0 || a >= n) fail(ErrorKind::InvalidArgument, "partition element out of carrier");
            if (covered[static_cast<std::size_t>(a)])
                fail(ErrorKind::InvalidArgument, "partition blocks overlap");
            covered[static_cast<std::size_t>(a)] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        if (!covered[static_cast<std::size_t>(a)])
            fail(ErrorKind::InvalidArgument, "partition does not cover the carrier");

    // C = block meets and joins; must contain bounds and close under /\, \/, ->
    int under_sym = base.sym_under();
    std::set<int> C;
    for (const auto& blk : partition) {
        int m = blk[0], j = blk[0];
        for (int a : blk) {
            m = base.meet(m, a);
            j = base.join(j, a);
        }
        C.insert(m);
        C.insert(j);
    }
    int bot = base.op0(base.sym_bot()), top = base.op0(base.sym_top());
    auto invalid = [&](const std::string& why) {
        fail(ErrorKind::InvalidArgument,
             "invalid partition: blocks are not /\\,\\/-closed enough to define []/<>: " + why);
    };
    if (!C.count(bot) || !C.count(top)) invalid("bounds missing from the induced subalgebra");
    for (int a : C)
        for (int b : C) {
            if (!C.count(base.meet(a, b))) invalid("not meet-closed");
            if (!C.count(base.join(a, b))) invalid("not join-closed");
            if (!C.count(base.op2(under_sym, a, b))) invalid("not arrow-closed");
        }

    OrderRelation ord = order_from_meet(base);
    std::vector<int> box_t(static_cast<std::size_t>(n)), dia_t(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        int bx = bot, dx = top;
        for (int c : C) {
            if (ord.leq(c, a)) bx = base.join(bx, c);
            if (ord.leq(a, c)) dx = base.meet(dx, c);
        }
        // C is closed under join/meet, so these are genuine max/min
        box_t[static_cast<std::size_t>(a)] = bx;
        dia_t[static_cast<std::size_t>(a)] = dx;
    }

    std::vector<std::vector<int>> tables = base.tables();
    tables.push_back(box_t);
    tables.push_back(dia_t);
    FiniteAlgebra out(base.name() + "-monadic", n, Signature::fl_modal(), std::move(tables),
                      base.labels());

    ClassReport mipc = check_membership(out, class_by_name("mipc"));
    if (!mipc.verdict)
        invalid("induced operators violate " + mipc.failures.front().label);
    return out;
}

} // namespace alg
