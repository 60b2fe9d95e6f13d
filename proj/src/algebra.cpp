#include "alg/algebra.hpp"

#include <cmath>

namespace alg {

Signature::Signature(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {
    for (int i = 0; i < static_cast<int>(syms_.size()); ++i) {
        const Symbol& s = syms_[static_cast<std::size_t>(i)];
        if (s.arity < 0) fail(ErrorKind::InvalidArgument, "negative arity for " + s.name);
        if (!index_.emplace(s.name, i).second)
            fail(ErrorKind::InvalidArgument, "duplicate symbol " + s.name);
    }
}

int Signature::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Signature::arity_of(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) fail(ErrorKind::UnknownSymbol, "unknown symbol " + name);
    return at(i).arity;
}

Signature Signature::fl() {
    return Signature({{"/\\", 2}, {"\\/", 2}, {"*", 2}, {"\\", 2}, {"/", 2},
                      {"1", 0}, {"0", 0}, {"T", 0}, {"B", 0}});
}

Signature Signature::fl_modal() {
    return Signature({{"/\\", 2}, {"\\/", 2}, {"*", 2}, {"\\", 2}, {"/", 2},
                      {"1", 0}, {"0", 0}, {"T", 0}, {"B", 0}, {"[]", 1}, {"<>", 1}});
}

Signature Signature::lattice() {
    return Signature({{"/\\", 2}, {"\\/", 2}, {"T", 0}, {"B", 0}});
}

namespace {

std::size_t table_size(int n, int arity) {
    std::size_t s = 1;
    for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

} // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<int>> tables,
                             std::vector<std::string> labels)
    : name_(std::move(name)), n_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
    if (n_ <= 0) fail(ErrorKind::Format, "algebra size must be positive");
    if (static_cast<int>(tables_.size()) != sig_.size())
        fail(ErrorKind::Format, "table count does not match signature");
    for (int s = 0; s < sig_.size(); ++s) {
        const auto& t = tables_[static_cast<std::size_t>(s)];
        if (t.size() != table_size(n_, sig_.at(s).arity))
            fail(ErrorKind::Format, "table for " + sig_.at(s).name + " has wrong dimensions");
        for (int v : t)
            if (v < 0 || v >= n_)
                fail(ErrorKind::Format, "table entry out of carrier in " + sig_.at(s).name);
    }
    if (!labels.empty()) set_labels(std::move(labels));
    cache_symbols();
}

void FiniteAlgebra::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        fail(ErrorKind::Format, "label count does not match carrier size");
    labels_ = std::move(labels);
}

std::string FiniteAlgebra::label(int a) const {
    if (a < 0 || a >= n_) return "?";
    if (labels_.empty()) return std::to_string(a);
    return labels_[static_cast<std::size_t>(a)];
}

void FiniteAlgebra::cache_symbols() {
    sym_meet_ = sig_.index_of("/\\");
    sym_join_ = sig_.index_of("\\/");
    sym_fus_ = sig_.index_of("*");
    sym_under_ = sig_.index_of("\\");
    sym_over_ = sig_.index_of("/");
    sym_one_ = sig_.index_of("1");
    sym_zero_ = sig_.index_of("0");
    sym_top_ = sig_.index_of("T");
    sym_bot_ = sig_.index_of("B");
    sym_box_ = sig_.index_of("[]");
    sym_dia_ = sig_.index_of("<>");
}

int FiniteAlgebra::op(int sym, std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
    return tables_[static_cast<std::size_t>(sym)][idx];
}

int FiniteAlgebra::symbol_index(const std::string& name) const {
    int i = sig_.index_of(name);
    if (i < 0) fail(ErrorKind::UnknownSymbol, "unknown symbol " + name + " in algebra " + name_);
    return i;
}

namespace {

int need(const FiniteAlgebra& A, int sym, const char* name) {
    if (sym < 0)
        fail(ErrorKind::UnknownSymbol,
             std::string("algebra ") + A.name() + " has no " + name + " operation");
    return sym;
}

int eval_node(const FiniteAlgebra& A, const Formula& f, const Valuation& v) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::Var: {
            auto it = v.find(f.var_name());
            if (it == v.end())
                fail(ErrorKind::UnboundVariable, "unbound variable " + f.var_name());
            int a = it->second;
            if (a < 0 || a >= A.size())
                fail(ErrorKind::InvalidArgument, "valuation outside carrier for " + f.var_name());
            return a;
        }
        case K::One: return A.op0(need(A, A.sym_one(), "1"));
        case K::Zero: return A.op0(need(A, A.sym_zero(), "0"));
        case K::Top: return A.op0(need(A, A.sym_top(), "T"));
        case K::Bot: return A.op0(need(A, A.sym_bot(), "B"));
        case K::Box: return A.op1(need(A, A.sym_box(), "[]"), eval_node(A, f.lhs(), v));
        case K::Dia: return A.op1(need(A, A.sym_dia(), "<>"), eval_node(A, f.lhs(), v));
        case K::Meet:
            return A.op2(need(A, A.sym_meet(), "/\\"), eval_node(A, f.lhs(), v), eval_node(A, f.rhs(), v));
        case K::Join:
            return A.op2(need(A, A.sym_join(), "\\/"), eval_node(A, f.lhs(), v), eval_node(A, f.rhs(), v));
        case K::Fus:
            return A.op2(need(A, A.sym_fus(), "*"), eval_node(A, f.lhs(), v), eval_node(A, f.rhs(), v));
        case K::Under:
            return A.op2(need(A, A.sym_under(), "\\"), eval_node(A, f.lhs(), v), eval_node(A, f.rhs(), v));
        case K::Over:
            return A.op2(need(A, A.sym_over(), "/"), eval_node(A, f.lhs(), v), eval_node(A, f.rhs(), v));
        default:
            fail(ErrorKind::UnknownSymbol, "unexpanded derived connective");
    }
}

} // namespace

int evaluate(const FiniteAlgebra& A, const Formula& phi, const Valuation& v) {
    return eval_node(A, phi.expand(), v);
}

std::optional<OrderRelation> try_order_from_meet(const FiniteAlgebra& A) {
    if (A.sym_meet() < 0) return std::nullopt;
    int n = A.size();
    OrderRelation R;
    R.n = n;
    R.leq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            R.leq_[static_cast<std::size_t>(x * n + y)] = (A.meet(x, y) == x);
    for (int x = 0; x < n; ++x)
        if (!R.leq(x, x)) return std::nullopt;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && R.leq(x, y) && R.leq(y, x)) return std::nullopt;
            if (!R.leq(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (R.leq(y, z) && !R.leq(x, z)) return std::nullopt;
        }
    return R;
}

OrderRelation order_from_meet(const FiniteAlgebra& A) {
    if (A.sym_meet() < 0) fail(ErrorKind::UnknownSymbol, "algebra has no /\\ operation");
    int n = A.size();
    OrderRelation R;
    R.n = n;
    R.leq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            R.leq_[static_cast<std::size_t>(x * n + y)] = (A.meet(x, y) == x);
    for (int x = 0; x < n; ++x)
        if (!R.leq(x, x))
            fail(ErrorKind::NotAPartialOrder,
                 "not a partial order: reflexivity fails at (" + A.label(x) + ", " + A.label(x) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && R.leq(x, y) && R.leq(y, x))
                fail(ErrorKind::NotAPartialOrder,
                     "not a partial order: antisymmetry fails at (" + A.label(x) + ", " + A.label(y) + ")");
            if (!R.leq(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (R.leq(y, z) && !R.leq(x, z))
                    fail(ErrorKind::NotAPartialOrder,
                         "not a partial order: transitivity fails at (" + A.label(x) + ", " +
                             A.label(y) + ", " + A.label(z) + ")");
        }
    return R;
}

FiniteAlgebra direct_product(const FiniteAlgebra& A, const FiniteAlgebra& B) {
    if (!(A.signature() == B.signature()))
        fail(ErrorKind::SignatureMismatch,
             "direct product requires identical signatures (" + A.name() + ", " + B.name() + ")");
    int na = A.size(), nb = B.size();
    int n = na * nb;
    const Signature& sig = A.signature();
    std::vector<std::vector<int>> tables(static_cast<std::size_t>(sig.size()));
    std::vector<int> args_a, args_b, args(static_cast<std::size_t>(0));
    for (int s = 0; s < sig.size(); ++s) {
        int ar = sig.at(s).arity;
        std::size_t total = 1;
        for (int i = 0; i < ar; ++i) total *= static_cast<std::size_t>(n);
        std::vector<int>& t = tables[static_cast<std::size_t>(s)];
        t.resize(total);
        std::vector<int> tuple(static_cast<std::size_t>(ar), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int i = ar - 1; i >= 0; --i) {
                tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            args_a.clear();
            args_b.clear();
            for (int x : tuple) {
                args_a.push_back(product_left(B, x));
                args_b.push_back(product_right(B, x));
            }
            int ra = A.op(s, args_a);
            int rb = B.op(s, args_b);
            t[idx] = ra * nb + rb;
        }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
    return FiniteAlgebra(A.name() + "x" + B.name(), n, sig, std::move(tables), std::move(labels));
}

} // namespace alg
