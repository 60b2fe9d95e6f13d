#include "alg/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace alg {

Congruence::Congruence(std::vector<int> block_of) : block_of_(std::move(block_of)) {
    *this = from_raw(block_of_);
}

Congruence Congruence::from_raw(const std::vector<int>& raw) {
    Congruence c;
    c.block_of_.assign(raw.size(), -1);
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int b = raw[i];
        if (b < 0 || b >= static_cast<int>(raw.size()))
            fail(ErrorKind::InvalidArgument, "partition block index out of range");
        if (remap[static_cast<std::size_t>(b)] < 0) remap[static_cast<std::size_t>(b)] = next++;
        c.block_of_[i] = remap[static_cast<std::size_t>(b)];
    }
    c.nblocks_ = next;
    return c;
}

Congruence Congruence::identity(int n) {
    Congruence c;
    c.block_of_.resize(static_cast<std::size_t>(n));
    std::iota(c.block_of_.begin(), c.block_of_.end(), 0);
    c.nblocks_ = n;
    return c;
}

Congruence Congruence::total(int n) {
    Congruence c;
    c.block_of_.assign(static_cast<std::size_t>(n), 0);
    c.nblocks_ = n > 0 ? 1 : 0;
    return c;
}

std::vector<std::vector<int>> Congruence::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nblocks_));
    for (int a = 0; a < size(); ++a) out[static_cast<std::size_t>(block_of(a))].push_back(a);
    return out;
}

bool Congruence::refines(const Congruence& other) const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (same(a, b) && !other.same(a, b)) return false;
    return true;
}

Congruence Congruence::intersect(const Congruence& other) const {
    int n = size();
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) raw[static_cast<std::size_t>(a)] = block_of(a) * n + other.block_of(a);
    // raw entries may exceed n; renumber manually
    std::vector<int> seen;
    Congruence c;
    c.block_of_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        int key = raw[static_cast<std::size_t>(a)];
        auto it = std::find(seen.begin(), seen.end(), key);
        if (it == seen.end()) {
            seen.push_back(key);
            c.block_of_[static_cast<std::size_t>(a)] = static_cast<int>(seen.size()) - 1;
        } else {
            c.block_of_[static_cast<std::size_t>(a)] = static_cast<int>(it - seen.begin());
        }
    }
    c.nblocks_ = static_cast<int>(seen.size());
    return c;
}

std::string Congruence::str(const FiniteAlgebra& A) const {
    std::ostringstream os;
    bool first_block = true;
    for (const auto& blk : blocks()) {
        if (!first_block) os << ' ';
        first_block = false;
        os << '{';
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (i) os << ',';
            os << A.label(blk[i]);
        }
        os << '}';
    }
    return os.str();
}

std::optional<std::string> compatibility_violation(const FiniteAlgebra& A, const Congruence& theta) {
    int n = A.size();
    const Signature& sig = A.signature();
    std::vector<int> args, args2;
    for (int s = 0; s < sig.size(); ++s) {
        int ar = sig.at(s).arity;
        if (ar == 0) continue;
        std::size_t total = 1;
        for (int i = 0; i < ar; ++i) total *= static_cast<std::size_t>(n);
        args.assign(static_cast<std::size_t>(ar), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int i = ar - 1; i >= 0; --i) {
                args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            int base = A.op(s, args);
            // vary one coordinate within its block
            for (int i = 0; i < ar; ++i) {
                int orig = args[static_cast<std::size_t>(i)];
                for (int y = 0; y < n; ++y) {
                    if (y == orig || !theta.same(orig, y)) continue;
                    args2 = args;
                    args2[static_cast<std::size_t>(i)] = y;
                    int other = A.op(s, args2);
                    if (!theta.same(base, other)) {
                        std::ostringstream os;
                        os << "operation " << sig.at(s).name << " breaks compatibility: arguments ("
                           << A.label(orig) << " ~ " << A.label(y) << ") give "
                           << A.label(base) << " !~ " << A.label(other);
                        return os.str();
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // true when a merge happened
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

Congruence congruence_generated(const FiniteAlgebra& A,
                                const std::vector<std::pair<int, int>>& pairs) {
    int n = A.size();
    for (auto [a, b] : pairs)
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(ErrorKind::InvalidArgument, "congruence seed pair out of carrier");
    UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    for (auto [a, b] : pairs)
        if (uf.unite(a, b)) work.emplace_back(a, b);

    const Signature& sig = A.signature();
    std::vector<int> args;
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        // close under every unary polynomial f(c.., _, c..)
        for (int s = 0; s < sig.size(); ++s) {
            int ar = sig.at(s).arity;
            if (ar == 0) continue;
            std::size_t others = 1;
            for (int i = 0; i + 1 < ar; ++i) others *= static_cast<std::size_t>(n);
            for (int pos = 0; pos < ar; ++pos) {
                for (std::size_t c = 0; c < others; ++c) {
                    args.assign(static_cast<std::size_t>(ar), 0);
                    std::size_t rest = c;
                    for (int i = ar - 1; i >= 0; --i) {
                        if (i == pos) continue;
                        args[static_cast<std::size_t>(i)] =
                            static_cast<int>(rest % static_cast<std::size_t>(n));
                        rest /= static_cast<std::size_t>(n);
                    }
                    args[static_cast<std::size_t>(pos)] = x;
                    int fx = A.op(s, args);
                    args[static_cast<std::size_t>(pos)] = y;
                    int fy = A.op(s, args);
                    if (uf.unite(fx, fy)) work.emplace_back(fx, fy);
                }
            }
        }
    }

    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) raw[static_cast<std::size_t>(a)] = uf.find(a);
    return Congruence::from_raw(raw);
}

int CongruenceLattice::index_of(const Congruence& theta) const {
    auto it = std::lower_bound(all.begin(), all.end(), theta);
    if (it == all.end() || !(*it == theta)) return -1;
    return static_cast<int>(it - all.begin());
}

std::vector<Congruence> CongruenceLattice::coatoms() const {
    std::vector<Congruence> out;
    for (const Congruence& t : all) {
        if (t.is_total()) continue;
        bool maximal = true;
        for (const Congruence& u : all) {
            if (u.is_total() || u == t) continue;
            if (t.refines(u)) { maximal = false; break; }
        }
        if (maximal) out.push_back(t);
    }
    return out;
}

CongruenceLattice all_congruences(const FiniteAlgebra& A, int cap) {
    int n = A.size();
    if (n > cap)
        fail(ErrorKind::CapExceeded, "congruence lattice cap exceeded: |A| = " + std::to_string(n) +
                                         " > " + std::to_string(cap));
    std::set<Congruence> found;
    found.insert(Congruence::identity(n));
    // principal congruences
    std::vector<Congruence> frontier;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Congruence c = congruence_generated(A, {{a, b}});
            if (found.insert(c).second) frontier.push_back(c);
        }
    // close under join (regenerated from the union of pairs)
    while (!frontier.empty()) {
        std::vector<Congruence> next;
        for (const Congruence& t : frontier) {
            for (const Congruence& u : std::vector<Congruence>(found.begin(), found.end())) {
                if (t.refines(u) || u.refines(t)) continue;
                std::vector<std::pair<int, int>> pairs;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (t.same(a, b) || u.same(a, b)) pairs.emplace_back(a, b);
                Congruence j = congruence_generated(A, pairs);
                if (found.insert(j).second) next.push_back(j);
            }
        }
        frontier = std::move(next);
    }
    CongruenceLattice lat;
    lat.all.assign(found.begin(), found.end());
    return lat;
}

bool is_simple(const FiniteAlgebra& A, int cap) {
    if (A.size() < 2) return false;
    return all_congruences(A, cap).all.size() == 2;
}

SemisimpleCertificate is_semisimple(const FiniteAlgebra& A, int cap) {
    SemisimpleCertificate cert;
    int n = A.size();
    if (n == 1) {
        // empty subdirect product; conventionally semisimple
        cert.semisimple = true;
        cert.simple = false;
        cert.coatom_meet = Congruence::identity(1);
        return cert;
    }
    CongruenceLattice lat = all_congruences(A, cap);
    cert.simple = lat.all.size() == 2;
    cert.coatoms = lat.coatoms();
    Congruence meet = Congruence::total(n);
    for (const Congruence& c : cert.coatoms) meet = meet.intersect(c);
    cert.coatom_meet = meet;
    cert.semisimple = meet.is_identity();
    cert.embedding.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (const Congruence& c : cert.coatoms)
            cert.embedding[static_cast<std::size_t>(a)].push_back(c.block_of(a));
    return cert;
}

FiniteAlgebra quotient(const FiniteAlgebra& A, const Congruence& theta) {
    if (theta.size() != A.size())
        fail(ErrorKind::InvalidArgument, "partition size does not match algebra");
    if (auto why = compatibility_violation(A, theta))
        fail(ErrorKind::NotCompatible, "not a congruence of " + A.name() + ": " + *why);

    int n = A.size();
    int m = theta.block_count();
    // representative = least member of each block
    std::vector<int> rep(static_cast<std::size_t>(m), -1);
    for (int a = n - 1; a >= 0; --a) rep[static_cast<std::size_t>(theta.block_of(a))] = a;

    const Signature& sig = A.signature();
    std::vector<std::vector<int>> tables(static_cast<std::size_t>(sig.size()));
    std::vector<int> args;
    for (int s = 0; s < sig.size(); ++s) {
        int ar = sig.at(s).arity;
        std::size_t total = 1;
        for (int i = 0; i < ar; ++i) total *= static_cast<std::size_t>(m);
        auto& t = tables[static_cast<std::size_t>(s)];
        t.resize(total);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            args.assign(static_cast<std::size_t>(ar), 0);
            for (int i = ar - 1; i >= 0; --i) {
                args[static_cast<std::size_t>(i)] =
                    rep[rest % static_cast<std::size_t>(m)];
                rest /= static_cast<std::size_t>(m);
            }
            t[idx] = theta.block_of(A.op(s, args));
        }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) {
        std::string l;
        for (int a = 0; a < n; ++a)
            if (theta.block_of(a) == b) l += (l.empty() ? "" : "|") + A.label(a);
        labels.push_back("[" + l + "]");
    }
    return FiniteAlgebra(A.name() + "/theta", m, sig, std::move(tables), std::move(labels));
}

} // namespace alg
