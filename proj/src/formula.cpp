#include "alg/formula.hpp"

#include <cctype>
#include <sstream>

namespace alg {

Formula Formula::make(Kind k, Ptr l, Ptr r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return Formula(std::move(n));
}

Formula Formula::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::one()  { return make(Kind::One); }
Formula Formula::zero() { return make(Kind::Zero); }
Formula Formula::top()  { return make(Kind::Top); }
Formula Formula::bot()  { return make(Kind::Bot); }

Formula Formula::negb(Formula x) { return make(Kind::NegB, x.p_); }
Formula Formula::negz(Formula x) { return make(Kind::NegZ, x.p_); }
Formula Formula::box(Formula x)  { return make(Kind::Box, x.p_); }
Formula Formula::dia(Formula x)  { return make(Kind::Dia, x.p_); }

Formula Formula::meet(Formula l, Formula r)  { return make(Kind::Meet, l.p_, r.p_); }
Formula Formula::join(Formula l, Formula r)  { return make(Kind::Join, l.p_, r.p_); }
Formula Formula::fus(Formula l, Formula r)   { return make(Kind::Fus, l.p_, r.p_); }
Formula Formula::under(Formula l, Formula r) { return make(Kind::Under, l.p_, r.p_); }
Formula Formula::over(Formula l, Formula r)  { return make(Kind::Over, l.p_, r.p_); }
Formula Formula::arrow(Formula l, Formula r) { return make(Kind::Arrow, l.p_, r.p_); }

Formula Formula::power(Formula x, int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative power");
    if (n == 0) return one();
    Formula acc = x;
    for (int i = 1; i < n; ++i) acc = fus(acc, x);
    return acc;
}

Formula Formula::boxn(int n, Formula x) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative box index");
    Formula acc = x;
    Formula bx = x;
    for (int i = 1; i <= n; ++i) {
        bx = box(bx);
        acc = meet(acc, bx);
    }
    return acc;
}

Formula Formula::dian(int n, Formula x) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative diamond index");
    Formula acc = x;
    Formula dx = x;
    for (int i = 1; i <= n; ++i) {
        dx = dia(dx);
        acc = join(acc, dx);
    }
    return acc;
}

Formula Formula::oplus(Formula x, Formula y) {
    return negb(fus(negb(y), negb(x)));
}

Formula Formula::nfold(int n, Formula x) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative oplus index");
    if (n == 0) return zero();
    Formula acc = x;
    for (int i = 1; i < n; ++i) acc = oplus(x, acc);
    return acc;
}

const Formula::Node& Formula::node() const {
    if (!p_) fail(ErrorKind::InvalidArgument, "empty formula");
    return *p_;
}

Formula::Kind Formula::kind() const { return node().kind; }
const std::string& Formula::var_name() const { return node().var; }

Formula Formula::lhs() const { return Formula(node().lhs); }

Formula Formula::rhs() const { return Formula(node().rhs); }

bool Formula::is_binary() const {
    switch (kind()) {
        case Kind::Meet: case Kind::Join: case Kind::Fus:
        case Kind::Under: case Kind::Over: case Kind::Arrow:
            return true;
        default:
            return false;
    }
}

bool Formula::is_unary() const {
    switch (kind()) {
        case Kind::NegB: case Kind::NegZ: case Kind::Box: case Kind::Dia:
            return true;
        default:
            return false;
    }
}

bool Formula::is_constant() const {
    switch (kind()) {
        case Kind::One: case Kind::Zero: case Kind::Top: case Kind::Bot:
            return true;
        default:
            return false;
    }
}

bool Formula::operator==(const Formula& other) const {
    if (p_ == other.p_) return true;
    if (!p_ || !other.p_) return false;
    if (p_->kind != other.p_->kind) return false;
    if (p_->kind == Kind::Var) return p_->var == other.p_->var;
    Formula la(p_->lhs), lb(other.p_->lhs);
    if (p_->lhs || other.p_->lhs) {
        if (!p_->lhs || !other.p_->lhs || !(la == lb)) return false;
    }
    Formula ra(p_->rhs), rb(other.p_->rhs);
    if (p_->rhs || other.p_->rhs) {
        if (!p_->rhs || !other.p_->rhs || !(ra == rb)) return false;
    }
    return true;
}

Formula Formula::expand() const {
    const Node& n = node();
    switch (n.kind) {
        case Kind::Var: case Kind::One: case Kind::Zero:
        case Kind::Top: case Kind::Bot:
            return *this;
        case Kind::NegB: return under(Formula(n.lhs).expand(), bot());
        case Kind::NegZ: return under(Formula(n.lhs).expand(), zero());
        case Kind::Arrow:
            return under(Formula(n.lhs).expand(), Formula(n.rhs).expand());
        case Kind::Box: return box(Formula(n.lhs).expand());
        case Kind::Dia: return dia(Formula(n.lhs).expand());
        default: {
            Formula l = Formula(n.lhs).expand();
            Formula r = Formula(n.rhs).expand();
            return make(n.kind, l.p_, r.p_);
        }
    }
}

Formula Formula::substitute(const std::string& var, const Formula& repl) const {
    return substitute(std::map<std::string, Formula>{{var, repl}});
}

Formula Formula::substitute(const std::map<std::string, Formula>& repl) const {
    const Node& n = node();
    if (n.kind == Kind::Var) {
        auto it = repl.find(n.var);
        return it == repl.end() ? *this : it->second;
    }
    if (is_constant()) return *this;
    if (is_unary()) {
        Formula l = Formula(n.lhs).substitute(repl);
        return make(n.kind, l.p_);
    }
    Formula l = Formula(n.lhs).substitute(repl);
    Formula r = Formula(n.rhs).substitute(repl);
    return make(n.kind, l.p_, r.p_);
}

std::set<std::string> Formula::variables() const {
    std::set<std::string> out;
    std::function<void(const Node&)> walk = [&](const Node& n) {
        if (n.kind == Kind::Var) { out.insert(n.var); return; }
        if (n.lhs) walk(*n.lhs);
        if (n.rhs) walk(*n.rhs);
    };
    walk(node());
    return out;
}

int Formula::node_count() const {
    const Node& n = node();
    int c = 1;
    if (n.lhs) c += Formula(n.lhs).node_count();
    if (n.rhs) c += Formula(n.rhs).node_count();
    return c;
}

namespace {

// Precedence levels used by the printer and the parser.
// 0: -> \ /   1: \/   2: /\   3: *   4: unary prefixes   5: atoms
int level_of(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Under: case Formula::Kind::Over:
        case Formula::Kind::Arrow:
            return 0;
        case Formula::Kind::Join: return 1;
        case Formula::Kind::Meet: return 2;
        case Formula::Kind::Fus: return 3;
        case Formula::Kind::NegB: case Formula::Kind::NegZ:
        case Formula::Kind::Box: case Formula::Kind::Dia:
            return 4;
        default: return 5;
    }
}

const char* token_of(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::One: return "1";
        case Formula::Kind::Zero: return "0";
        case Formula::Kind::Top: return "T";
        case Formula::Kind::Bot: return "B";
        case Formula::Kind::NegB: return "~";
        case Formula::Kind::NegZ: return "!";
        case Formula::Kind::Box: return "[]";
        case Formula::Kind::Dia: return "<>";
        case Formula::Kind::Meet: return "/\\";
        case Formula::Kind::Join: return "\\/";
        case Formula::Kind::Fus: return "*";
        case Formula::Kind::Under: return "\\";
        case Formula::Kind::Over: return "/";
        case Formula::Kind::Arrow: return "->";
        default: return "?";
    }
}

} // namespace

void Formula::print(std::string& out, int min_level) const {
    const Node& n = node();
    int lv = level_of(n.kind);
    bool parens = lv < min_level;
    if (parens) out += '(';
    switch (n.kind) {
        case Kind::Var: out += n.var; break;
        case Kind::One: case Kind::Zero: case Kind::Top: case Kind::Bot:
            out += token_of(n.kind);
            break;
        case Kind::NegB: case Kind::NegZ: case Kind::Box: case Kind::Dia:
            out += token_of(n.kind);
            Formula(n.lhs).print(out, 4);
            break;
        case Kind::Under: case Kind::Over: case Kind::Arrow: {
            // right-associative tier; left operand must sit one level up, and a
            // right operand from a different residual operator needs parentheses
            Formula(n.lhs).print(out, 1);
            out += ' ';
            out += token_of(n.kind);
            out += ' ';
            Formula rhs(n.rhs);
            bool same_tier_mixed = level_of(rhs.kind()) == 0 && rhs.kind() != n.kind;
            rhs.print(out, same_tier_mixed ? 1 : 0);
            break;
        }
        default:
            // left-associative lattice/fusion tiers
            Formula(n.lhs).print(out, lv);
            out += ' ';
            out += token_of(n.kind);
            out += ' ';
            Formula(n.rhs).print(out, lv + 1);
            break;
    }
    if (parens) out += ')';
}

std::string Formula::str() const {
    std::string out;
    print(out, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
    End, LParen, RParen,
    And, Or, Star, Under, Over, Arrow,
    Tilde, Bang, Box, Dia,
    Caret, Dot, Underscore,
    Num, Ident,
};

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    long num = 0;
    std::size_t tok_pos = 0;

    [[noreturn]] void error(const std::string& msg) const {
        std::ostringstream os;
        os << "syntax error at position " << tok_pos << ": " << msg;
        fail(ErrorKind::Syntax, os.str());
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) { tok = Tok::End; return; }
        char c = text[pos];
        auto two = [&](char a, char b) {
            return c == a && pos + 1 < text.size() && text[pos + 1] == b;
        };
        if (two('/', '\\')) { tok = Tok::And; pos += 2; return; }
        if (two('\\', '/')) { tok = Tok::Or; pos += 2; return; }
        if (two('-', '>')) { tok = Tok::Arrow; pos += 2; return; }
        if (two('[', ']')) { tok = Tok::Box; pos += 2; return; }
        if (two('<', '>')) { tok = Tok::Dia; pos += 2; return; }
        switch (c) {
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '\\': tok = Tok::Under; ++pos; return;
            case '/': tok = Tok::Over; ++pos; return;
            case '~': tok = Tok::Tilde; ++pos; return;
            case '!': tok = Tok::Bang; ++pos; return;
            case '^': tok = Tok::Caret; ++pos; return;
            case '.': tok = Tok::Dot; ++pos; return;
            case '_': tok = Tok::Underscore; ++pos; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            num = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                num = num * 10 + (text[pos] - '0');
                // macro indices expand to trees of that depth; keep them sane
                if (num > 4096) error("numeral too large");
                ++pos;
            }
            tok = Tok::Num;
            return;
        }
        if (c == 'T' || c == 'B') {
            // reserved constants; must not continue as an identifier
            if (pos + 1 < text.size() &&
                (std::isalnum(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_'))
                error("identifiers must start with a lowercase letter");
            ident = c;
            tok = Tok::Ident;
            ++pos;
            return;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            ident = std::string(text.substr(start, pos - start));
            tok = Tok::Ident;
            return;
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

struct Parser {
    Lexer lx;

    explicit Parser(std::string_view text) {
        lx.text = text;
        lx.advance();
    }

    bool at(Tok t) const { return lx.tok == t; }

    void expect(Tok t, const char* what) {
        if (!at(t)) lx.error(std::string("expected ") + what);
        lx.advance();
    }

    Formula parse() {
        Formula f = parse_residual();
        if (!at(Tok::End)) lx.error("trailing input");
        return f;
    }

    // lowest tier: -> \ / ; right-associative, no mixing without parentheses
    Formula parse_residual() {
        Formula first = parse_join();
        std::vector<Tok> ops;
        std::vector<Formula> operands{first};
        while (at(Tok::Arrow) || at(Tok::Under) || at(Tok::Over)) {
            ops.push_back(lx.tok);
            lx.advance();
            operands.push_back(parse_join());
        }
        if (ops.empty()) return first;
        for (std::size_t i = 1; i < ops.size(); ++i)
            if (ops[i] != ops[0])
                lx.error("ambiguous residual mixing; parenthesize ->, \\ and / chains");
        Formula acc = operands.back();
        for (std::size_t i = operands.size() - 1; i-- > 0;) {
            switch (ops[0]) {
                case Tok::Arrow: acc = Formula::arrow(operands[i], acc); break;
                case Tok::Under: acc = Formula::under(operands[i], acc); break;
                default: acc = Formula::over(operands[i], acc); break;
            }
        }
        return acc;
    }

    Formula parse_join() {
        Formula acc = parse_meet();
        while (at(Tok::Or)) {
            lx.advance();
            acc = Formula::join(acc, parse_meet());
        }
        return acc;
    }

    Formula parse_meet() {
        Formula acc = parse_fusion();
        while (at(Tok::And)) {
            lx.advance();
            acc = Formula::meet(acc, parse_fusion());
        }
        return acc;
    }

    Formula parse_fusion() {
        Formula acc = parse_unary();
        while (at(Tok::Star)) {
            lx.advance();
            acc = Formula::fus(acc, parse_unary());
        }
        return acc;
    }

    int parse_subscript() {
        if (!at(Tok::Num)) lx.error("expected index after '_'");
        int n = static_cast<int>(lx.num);
        lx.advance();
        return n;
    }

    Formula parse_unary() {
        switch (lx.tok) {
            case Tok::Tilde:
                lx.advance();
                return Formula::negb(parse_unary());
            case Tok::Bang:
                lx.advance();
                return Formula::negz(parse_unary());
            case Tok::Box: {
                lx.advance();
                if (at(Tok::Underscore)) {
                    // subscript only when a numeral follows; bare _ is the hole
                    auto save = lx;
                    lx.advance();
                    if (at(Tok::Num)) {
                        int n = static_cast<int>(lx.num);
                        lx.advance();
                        return Formula::boxn(n, parse_unary());
                    }
                    lx = save;
                }
                return Formula::box(parse_unary());
            }
            case Tok::Dia: {
                lx.advance();
                if (at(Tok::Underscore)) {
                    auto save = lx;
                    lx.advance();
                    if (at(Tok::Num)) {
                        int n = static_cast<int>(lx.num);
                        lx.advance();
                        return Formula::dian(n, parse_unary());
                    }
                    lx = save;
                }
                return Formula::dia(parse_unary());
            }
            case Tok::Num: {
                long n = lx.num;
                lx.advance();
                if (at(Tok::Dot)) {
                    lx.advance();
                    return Formula::nfold(static_cast<int>(n), parse_unary());
                }
                Formula c;
                if (n == 0) c = Formula::zero();
                else if (n == 1) c = Formula::one();
                else lx.error("bare numeral; only constants 0 and 1 exist");
                return parse_postfix_tail(c);
            }
            default:
                return parse_postfix();
        }
    }

    Formula parse_postfix() {
        Formula f = parse_atom();
        return parse_postfix_tail(f);
    }

    Formula parse_postfix_tail(Formula f) {
        while (at(Tok::Caret)) {
            lx.advance();
            if (!at(Tok::Num)) lx.error("expected exponent after '^'");
            f = Formula::power(f, static_cast<int>(lx.num));
            lx.advance();
        }
        return f;
    }

    Formula parse_atom() {
        switch (lx.tok) {
            case Tok::LParen: {
                lx.advance();
                Formula f = parse_residual();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident: {
                std::string name = lx.ident;
                lx.advance();
                if (name == "T") return Formula::top();
                if (name == "B") return Formula::bot();
                return Formula::var(name);
            }
            case Tok::Underscore:
                lx.advance();
                return Formula::var("_");
            default:
                lx.error("expected a formula");
        }
    }
};

} // namespace

Formula parse_formula(std::string_view text) {
    Parser p(text);
    return p.parse();
}

// ---------------------------------------------------------------------------
// Scheme families

std::vector<Formula> expand_scheme(const SchemeFamily& f, int n, const Formula& arg) {
    if (n < 1 || n > f.bound)
        fail(ErrorKind::InvalidArgument,
             "scheme index " + std::to_string(n) + " out of bound 1.." + std::to_string(f.bound));
    std::vector<Formula> out;
    for (const Formula& g : f.generate(n)) out.push_back(g.substitute("p", arg));
    return out;
}

namespace {

std::pair<std::string, int> split_param(const std::string& token, const char* key) {
    auto colon = token.find(':');
    if (colon == std::string::npos) return {token, -1};
    std::string base = token.substr(0, colon);
    std::string rest = token.substr(colon + 1);
    std::string prefix = std::string(key) + "=";
    if (rest.rfind(prefix, 0) != 0)
        fail(ErrorKind::InvalidArgument, "malformed parameter in '" + token + "' (expected " + prefix + "<int>)");
    int v = std::stoi(rest.substr(prefix.size()));
    return {base, v};
}

Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }

} // namespace

SchemeFamily scheme_family(const std::string& token) {
    auto [base, k] = split_param(token, "k");
    SchemeFamily f;
    f.name = token;
    if (base == "classical") {
        f.stabilization = Stabilization::Constant;
        f.generate = [](int) { return std::vector<Formula>{Formula::negb(P())}; };
    } else if (base == "flew-il") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{Formula::negb(Formula::power(P(), n))};
        };
    } else if (base == "fle-il") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{
                Formula::negb(Formula::power(Formula::meet(Formula::one(), P()), n))};
        };
    } else if (base == "ik-il") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{Formula::negb(Formula::boxn(n, P()))};
        };
    } else if (base == "s4-il") {
        f.stabilization = Stabilization::Constant;
        f.generate = [](int) {
            return std::vector<Formula>{Formula::negb(Formula::box(P()))};
        };
    } else if (base == "luk-il") {
        if (k < 1) fail(ErrorKind::InvalidArgument, "luk-il requires k=<power>");
        f.stabilization = Stabilization::Constant;
        f.generate = [k = k](int) {
            return std::vector<Formula>{Formula::negb(Formula::power(P(), k))};
        };
    } else {
        fail(ErrorKind::InvalidArgument, "unknown scheme family '" + token + "'");
    }
    return f;
}

DdtFamily ddt_family(const std::string& token) {
    DdtFamily f;
    f.name = token;
    if (token == "heyting-ddt") {
        f.stabilization = Stabilization::Constant;
        f.generate = [](int) {
            return std::vector<Formula>{Formula::arrow(P(), Q())};
        };
    } else if (token == "flew-ddt") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{Formula::arrow(Formula::power(P(), n), Q())};
        };
    } else if (token == "fle-ddt") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{Formula::arrow(
                Formula::power(Formula::meet(Formula::one(), P()), n), Q())};
        };
    } else if (token == "ik-ddt") {
        f.stabilization = Stabilization::CarrierSize;
        f.generate = [](int n) {
            return std::vector<Formula>{Formula::arrow(Formula::boxn(n, P()), Q())};
        };
    } else if (token == "s4-ddt") {
        f.stabilization = Stabilization::Constant;
        f.generate = [](int) {
            return std::vector<Formula>{Formula::arrow(Formula::box(P()), Q())};
        };
    } else {
        fail(ErrorKind::InvalidArgument, "unknown DDT family '" + token + "'");
    }
    return f;
}

std::vector<Formula> join_scheme(const std::string& token) {
    auto [base, n] = split_param(token, "n");
    if (base == "or") return {Formula::join(P(), Q())};
    if (base == "fle-or")
        return {Formula::join(Formula::meet(Formula::one(), P()),
                              Formula::meet(Formula::one(), Q()))};
    if (base == "s4-or")
        return {Formula::join(Formula::box(P()), Formula::box(Q()))};
    if (base == "ikn4-or") {
        if (n < 0) fail(ErrorKind::InvalidArgument, "ikn4-or requires n=<index>");
        return {Formula::join(Formula::boxn(n, P()), Formula::boxn(n, Q()))};
    }
    fail(ErrorKind::InvalidArgument, "unknown join scheme '" + token + "'");
}

LemScheme lem_scheme(const std::string& class_token) {
    auto [base, n_param] = split_param(class_token, "n");
    (void)n_param;  // n is supplied per lem_axiom call
    LemScheme s;
    s.cls = base;
    if (base == "classical" || base == "heyting" || base == "boolean" || base == "godel") {
        s.indexed = false;
        s.imp = [](const Formula& a, const Formula& b, int) { return Formula::arrow(a, b); };
        s.neg = [](const Formula& a, int) { return Formula::negb(a); };
        s.disj = [](const Formula& a, const Formula& b, int) { return Formula::join(a, b); };
    } else if (base == "flew" || base == "flewn" || base == "bl" || base == "mv" || base == "luk") {
        s.imp = [](const Formula& a, const Formula& b, int n) {
            return Formula::arrow(Formula::power(a, n), b);
        };
        s.neg = [](const Formula& a, int n) { return Formula::negb(Formula::power(a, n)); };
        s.disj = [](const Formula& a, const Formula& b, int) { return Formula::join(a, b); };
    } else if (base == "fle" || base == "flen") {
        s.imp = [](const Formula& a, const Formula& b, int n) {
            return Formula::arrow(Formula::power(Formula::meet(Formula::one(), a), n), b);
        };
        s.neg = [](const Formula& a, int n) {
            return Formula::negb(Formula::power(Formula::meet(Formula::one(), a), n));
        };
        s.disj = [](const Formula& a, const Formula& b, int) {
            return Formula::join(Formula::meet(Formula::one(), a),
                                 Formula::meet(Formula::one(), b));
        };
    } else if (base == "ik" || base == "ikn4" || base == "ikn45" || base == "mipc" ||
               base == "ws5") {
        s.modal_validity = true;
        s.imp = [](const Formula& a, const Formula& b, int n) {
            return Formula::arrow(Formula::boxn(n, a), b);
        };
        s.neg = [](const Formula& a, int n) { return Formula::negb(Formula::boxn(n, a)); };
        s.disj = [](const Formula& a, const Formula& b, int n) {
            return Formula::join(Formula::boxn(n, a), Formula::boxn(n, b));
        };
    } else if (base == "modal" || base == "s4" || base == "s5" || base == "kn4" ||
               base == "kn45") {
        s.modal_validity = true;
        if (base == "s4" || base == "s5" || base == "modal") {
            s.indexed = false;
            s.imp = [](const Formula& a, const Formula& b, int) {
                return Formula::arrow(Formula::box(a), b);
            };
            s.neg = [](const Formula& a, int) { return Formula::negb(Formula::box(a)); };
            s.disj = [](const Formula& a, const Formula& b, int) {
                return Formula::join(Formula::box(a), Formula::box(b));
            };
        } else {
            s.imp = [](const Formula& a, const Formula& b, int n) {
                return Formula::arrow(Formula::boxn(n, a), b);
            };
            s.neg = [](const Formula& a, int n) { return Formula::negb(Formula::boxn(n, a)); };
            s.disj = [](const Formula& a, const Formula& b, int n) {
                return Formula::join(Formula::boxn(n, a), Formula::boxn(n, b));
            };
        }
    } else {
        fail(ErrorKind::InvalidArgument,
             "no registered DDT/PCP instantiation for class '" + class_token + "'");
    }
    return s;
}

Formula lem_axiom(LemForm form, const LemScheme& s, int n) {
    Formula p = P(), q = Q();
    if (form == LemForm::PCP) return s.disj(p, s.neg(p, n), n);
    Formula a = s.imp(p, q, n);
    Formula b = s.imp(s.neg(p, n), q, n);
    return s.imp(a, s.imp(b, q, n), n);
}

} // namespace alg
