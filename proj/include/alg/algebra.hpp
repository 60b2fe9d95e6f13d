#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alg/errors.hpp"
#include "alg/formula.hpp"

namespace alg {

struct Symbol {
    std::string name;
    int arity = 0;
    bool operator==(const Symbol&) const = default;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    int size() const { return static_cast<int>(syms_.size()); }
    const Symbol& at(int i) const { return syms_[static_cast<std::size_t>(i)]; }
    const std::vector<Symbol>& symbols() const { return syms_; }

    // -1 when absent
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const { return index_of(name) >= 0; }
    int arity_of(const std::string& name) const;

    bool operator==(const Signature&) const = default;

    // {/\, \/: 2; *: 2; \: 2; /: 2; 1, 0, T, B: 0}
    static Signature fl();
    // fl plus {[]: 1, <>: 1}
    static Signature fl_modal();
    // {/\, \/: 2; T, B: 0}
    static Signature lattice();

private:
    std::vector<Symbol> syms_;
    std::map<std::string, int> index_;
};

using Valuation = std::map<std::string, int>;

// Total operation tables over carrier {0..n-1}.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::string name, int size, Signature sig,
                  std::vector<std::vector<int>> tables,
                  std::vector<std::string> labels = {});

    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }
    int size() const { return n_; }
    const Signature& signature() const { return sig_; }
    const std::vector<std::vector<int>>& tables() const { return tables_; }
    const std::vector<int>& table(int sym) const { return tables_[static_cast<std::size_t>(sym)]; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;
    void set_labels(std::vector<std::string> labels);

    int op(int sym, std::span<const int> args) const;
    int op0(int sym) const { return tables_[static_cast<std::size_t>(sym)][0]; }
    int op1(int sym, int a) const { return tables_[static_cast<std::size_t>(sym)][static_cast<std::size_t>(a)]; }
    int op2(int sym, int a, int b) const {
        return tables_[static_cast<std::size_t>(sym)][static_cast<std::size_t>(a * n_ + b)];
    }

    int symbol_index(const std::string& name) const;  // throws UnknownSymbol

    // Cached well-known symbols; -1 when absent from the signature.
    int sym_meet() const { return sym_meet_; }
    int sym_join() const { return sym_join_; }
    int sym_fus() const { return sym_fus_; }
    int sym_under() const { return sym_under_; }
    int sym_over() const { return sym_over_; }
    int sym_one() const { return sym_one_; }
    int sym_zero() const { return sym_zero_; }
    int sym_top() const { return sym_top_; }
    int sym_bot() const { return sym_bot_; }
    int sym_box() const { return sym_box_; }
    int sym_dia() const { return sym_dia_; }

    int meet(int a, int b) const { return op2(sym_meet_, a, b); }
    int join(int a, int b) const { return op2(sym_join_, a, b); }
    int one() const { return op0(sym_one_); }

private:
    void cache_symbols();

    std::string name_;
    int n_ = 0;
    Signature sig_;
    std::vector<std::vector<int>> tables_;
    std::vector<std::string> labels_;
    int sym_meet_ = -1, sym_join_ = -1, sym_fus_ = -1, sym_under_ = -1, sym_over_ = -1;
    int sym_one_ = -1, sym_zero_ = -1, sym_top_ = -1, sym_bot_ = -1;
    int sym_box_ = -1, sym_dia_ = -1;
};

// Bottom-up evaluation; derived connectives are expanded first.
int evaluate(const FiniteAlgebra& A, const Formula& phi, const Valuation& v);

struct OrderRelation {
    int n = 0;
    std::vector<char> leq_;  // n*n, row-major

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a * n + b)] != 0; }
};

// x <= y iff x /\ y = x. Throws NotAPartialOrder with the violating pair
// when /\ is not a semilattice meet.
OrderRelation order_from_meet(const FiniteAlgebra& A);
// Non-throwing variant for search loops.
std::optional<OrderRelation> try_order_from_meet(const FiniteAlgebra& A);

// Componentwise product on carrier {0..|A|*|B|-1}, element (a,b) = a*|B|+b.
FiniteAlgebra direct_product(const FiniteAlgebra& A, const FiniteAlgebra& B);
inline int product_left(const FiniteAlgebra& B, int pair) { return pair / B.size(); }
inline int product_right(const FiniteAlgebra& B, int pair) { return pair % B.size(); }

} // namespace alg
