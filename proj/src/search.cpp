#include "alg/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace alg {

namespace {

struct LatticeTables {
    int n = 0;
    std::vector<char> leq;
    std::vector<int> meet, join;

    bool le(int a, int b) const { return leq[static_cast<std::size_t>(a * n + b)] != 0; }
    int mt(int a, int b) const { return meet[static_cast<std::size_t>(a * n + b)]; }
    int jn(int a, int b) const { return join[static_cast<std::size_t>(a * n + b)]; }
};

// meets/joins from a partial order, if they all exist
std::optional<LatticeTables> lattice_from_order(int n, const std::vector<char>& leq) {
    LatticeTables L;
    L.n = n;
    L.leq = leq;
    L.meet.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    L.join.assign(L.meet.size(), -1);
    auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a * n + b)] != 0; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int m = -1;
            for (int z = 0; z < n; ++z) {
                if (!le(z, x) || !le(z, y)) continue;
                if (m < 0 || le(m, z)) m = z;
            }
            if (m < 0) return std::nullopt;
            for (int z = 0; z < n; ++z)
                if (le(z, x) && le(z, y) && !le(z, m)) return std::nullopt;
            L.meet[static_cast<std::size_t>(x * n + y)] = m;
            int j = -1;
            for (int z = 0; z < n; ++z) {
                if (!le(x, z) || !le(y, z)) continue;
                if (j < 0 || le(z, j)) j = z;
            }
            if (j < 0) return std::nullopt;
            for (int z = 0; z < n; ++z)
                if (le(x, z) && le(y, z) && !le(j, z)) return std::nullopt;
            L.join[static_cast<std::size_t>(x * n + y)] = j;
        }
    return L;
}

FiniteAlgebra lattice_algebra(const LatticeTables& L, std::string name) {
    return FiniteAlgebra(std::move(name), L.n, Signature::lattice(),
                         {L.meet, L.join, {L.n - 1}, {0}});
}

LatticeTables lattice_tables_of(const FiniteAlgebra& A) {
    OrderRelation ord = order_from_meet(A);
    LatticeTables L;
    L.n = A.size();
    L.leq = ord.leq_;
    L.meet = A.table(A.sym_meet());
    L.join = A.table(A.sym_join());
    return L;
}

} // namespace

std::vector<FiniteAlgebra> enumerate_lattices(int n) {
    if (n < 1 || n > 7)
        fail(ErrorKind::CapExceeded, "lattice enumeration supports 1 <= n <= 7");
    std::vector<FiniteAlgebra> out;
    if (n == 1) {
        out.push_back(FiniteAlgebra("lattice1_0", 1, Signature::lattice(),
                                    {{0}, {0}, {0}, {0}}));
        return out;
    }
    // 0 = bottom, n-1 = top, order within a fixed linear extension
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 1; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) free_pairs.emplace_back(i, j);

    std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto set_le = [&](int a, int b, char v) { leq[static_cast<std::size_t>(a * n + b)] = v; };
    for (int i = 0; i < n; ++i) set_le(i, i, 1);
    for (int i = 0; i < n; ++i) {
        set_le(0, i, 1);
        set_le(i, n - 1, 1);
    }

    std::size_t total = std::size_t{1} << free_pairs.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        for (std::size_t b = 0; b < free_pairs.size(); ++b)
            set_le(free_pairs[b].first, free_pairs[b].second, (mask >> b) & 1 ? 1 : 0);
        // transitivity
        bool ok = true;
        for (int x = 1; x + 1 < n && ok; ++x)
            for (int y = 1; y + 1 < n && ok; ++y) {
                if (x == y || !leq[static_cast<std::size_t>(x * n + y)]) continue;
                for (int z = 1; z + 1 < n; ++z)
                    if (leq[static_cast<std::size_t>(y * n + z)] &&
                        !leq[static_cast<std::size_t>(x * n + z)]) {
                        ok = false;
                        break;
                    }
            }
        if (!ok) continue;
        auto L = lattice_from_order(n, leq);
        if (!L) continue;
        merge_up_to_iso(out, {lattice_algebra(*L, "lattice" + std::to_string(n))});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].rename("lattice" + std::to_string(n) + "_" + std::to_string(i));
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical forms

namespace {

// per-element invariant vector used to cut the bijection search
std::vector<std::uint64_t> element_invariants(const FiniteAlgebra& A) {
    int n = A.size();
    std::vector<std::uint64_t> inv(static_cast<std::size_t>(n), 1469598103934665603ull);
    auto mix = [](std::uint64_t& h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    const Signature& sig = A.signature();
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next = inv;
        for (int s = 0; s < sig.size(); ++s) {
            int ar = sig.at(s).arity;
            if (ar == 0) {
                mix(next[static_cast<std::size_t>(A.op0(s))], static_cast<std::uint64_t>(s) + 101);
            } else if (ar == 1) {
                for (int a = 0; a < n; ++a)
                    mix(next[static_cast<std::size_t>(a)],
                        inv[static_cast<std::size_t>(A.op1(s, a))] * (static_cast<std::uint64_t>(s) + 7));
            } else if (ar == 2) {
                for (int a = 0; a < n; ++a) {
                    std::uint64_t row = 0, col = 0;
                    for (int b = 0; b < n; ++b) {
                        row += inv[static_cast<std::size_t>(A.op2(s, a, b))] *
                               (inv[static_cast<std::size_t>(b)] | 1);
                        col += inv[static_cast<std::size_t>(A.op2(s, b, a))] *
                               (inv[static_cast<std::size_t>(b)] | 3);
                    }
                    mix(next[static_cast<std::size_t>(a)], row * 31 + col * 17 +
                                                               static_cast<std::uint64_t>(s));
                }
            }
        }
        inv = std::move(next);
    }
    return inv;
}

bool check_bijection(const FiniteAlgebra& A, const FiniteAlgebra& B, const std::vector<int>& map) {
    const Signature& sig = A.signature();
    int n = A.size();
    for (int s = 0; s < sig.size(); ++s) {
        int ar = sig.at(s).arity;
        if (ar == 0) {
            if (map[static_cast<std::size_t>(A.op0(s))] != B.op0(s)) return false;
        } else if (ar == 1) {
            for (int a = 0; a < n; ++a)
                if (map[static_cast<std::size_t>(A.op1(s, a))] !=
                    B.op1(s, map[static_cast<std::size_t>(a)]))
                    return false;
        } else if (ar == 2) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (map[static_cast<std::size_t>(A.op2(s, a, b))] !=
                        B.op2(s, map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
                        return false;
        } else {
            // arity >= 3 unused by the built-in signatures
            std::size_t totalsz = 1;
            for (int i = 0; i < ar; ++i) totalsz *= static_cast<std::size_t>(n);
            std::vector<int> args(static_cast<std::size_t>(ar));
            std::vector<int> margs(static_cast<std::size_t>(ar));
            for (std::size_t idx = 0; idx < totalsz; ++idx) {
                std::size_t rest = idx;
                for (int i = ar - 1; i >= 0; --i) {
                    args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n));
                    rest /= static_cast<std::size_t>(n);
                }
                for (int i = 0; i < ar; ++i)
                    margs[static_cast<std::size_t>(i)] = map[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
                if (map[static_cast<std::size_t>(A.op(s, args))] != B.op(s, margs)) return false;
            }
        }
    }
    return true;
}

bool extend_bijection(const FiniteAlgebra& A, const FiniteAlgebra& B,
                      const std::vector<std::uint64_t>& invA,
                      const std::vector<std::uint64_t>& invB, std::vector<int>& map,
                      std::vector<char>& used, int next) {
    int n = A.size();
    if (next == n) return check_bijection(A, B, map);
    for (int img = 0; img < n; ++img) {
        if (used[static_cast<std::size_t>(img)]) continue;
        if (invA[static_cast<std::size_t>(next)] != invB[static_cast<std::size_t>(img)]) continue;
        map[static_cast<std::size_t>(next)] = img;
        used[static_cast<std::size_t>(img)] = 1;
        if (extend_bijection(A, B, invA, invB, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(img)] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const FiniteAlgebra& A, const FiniteAlgebra& B) {
    if (!(A.signature() == B.signature()) || A.size() != B.size()) return false;
    std::vector<std::uint64_t> invA = element_invariants(A), invB = element_invariants(B);
    std::vector<std::uint64_t> sa = invA, sb = invB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(static_cast<std::size_t>(A.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(A.size()), 0);
    return extend_bijection(A, B, invA, invB, map, used, 0);
}

std::vector<int> canonical_key(const FiniteAlgebra& A) {
    int n = A.size();
    std::vector<int> perm(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best, cur;
    std::vector<int> args(8), pargs(8);
    const Signature& sig = A.signature();
    do {
        for (int i = 0; i < n; ++i)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        cur.clear();
        // -1: strictly below best (or no best yet), 0: equal so far
        int cmp = best.empty() ? -1 : 0;
        bool abandoned = false;
        for (int s = 0; s < sig.size() && !abandoned; ++s) {
            int ar = sig.at(s).arity;
            std::size_t totalsz = 1;
            for (int i = 0; i < ar; ++i) totalsz *= static_cast<std::size_t>(n);
            for (std::size_t idx = 0; idx < totalsz; ++idx) {
                std::size_t rest = idx;
                for (int i = ar - 1; i >= 0; --i) {
                    args[static_cast<std::size_t>(i)] =
                        static_cast<int>(rest % static_cast<std::size_t>(n));
                    rest /= static_cast<std::size_t>(n);
                }
                // relabeled entry at args = perm(op(inv(args)))
                for (int i = 0; i < ar; ++i)
                    pargs[static_cast<std::size_t>(i)] =
                        inv[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
                int val = perm[static_cast<std::size_t>(
                    A.op(s, std::span<const int>(pargs.data(), static_cast<std::size_t>(ar))))];
                cur.push_back(val);
                if (cmp == 0) {
                    int b = best[cur.size() - 1];
                    if (val > b) { abandoned = true; break; }
                    if (val < b) cmp = -1;
                }
            }
        }
        if (!abandoned && cmp == -1) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t canonical_hash(const FiniteAlgebra& A) {
    std::vector<int> key = canonical_key(A);
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ static_cast<std::uint64_t>(A.size())) * 1099511628211ull;
    for (int v : key) h = (h ^ (static_cast<std::uint64_t>(v) + 1)) * 1099511628211ull;
    return h;
}

void merge_up_to_iso(std::vector<FiniteAlgebra>& into, const std::vector<FiniteAlgebra>& fresh) {
    for (const FiniteAlgebra& f : fresh) {
        bool dup = false;
        for (const FiniteAlgebra& g : into)
            if (is_isomorphic(f, g)) { dup = true; break; }
        if (!dup) into.push_back(f);
    }
}

// ---------------------------------------------------------------------------
// Class enumeration

namespace {

bool has_law(const AlgebraClass& C, const std::string& label) {
    for (const Law& l : C.laws)
        if (l.label == label) return true;
    return false;
}

// left: table of x \ z = max{y : x*y <= z} at [x][z];
// right: table of z / x = max{y : y*x <= z} at [z][x]
std::optional<std::vector<int>> residuals_from_fusion(const LatticeTables& L,
                                                      const std::vector<int>& fus, bool left) {
    int n = L.n;
    std::vector<int> tab(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int cand = -1;
            for (int y = 0; y < n; ++y) {
                int prod = left ? fus[static_cast<std::size_t>(x * n + y)]
                                : fus[static_cast<std::size_t>(y * n + x)];
                if (L.le(prod, z)) cand = cand < 0 ? y : L.jn(cand, y);
            }
            if (cand < 0) return std::nullopt;
            int prod = left ? fus[static_cast<std::size_t>(x * n + cand)]
                            : fus[static_cast<std::size_t>(cand * n + x)];
            if (!L.le(prod, z)) return std::nullopt;
            tab[static_cast<std::size_t>(left ? x * n + z : z * n + x)] = cand;
        }
    return tab;
}

bool associative(int n, const std::vector<int>& fus) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = fus[static_cast<std::size_t>(a * n + b)];
            for (int c = 0; c < n; ++c) {
                int bc = fus[static_cast<std::size_t>(b * n + c)];
                if (fus[static_cast<std::size_t>(ab * n + c)] !=
                    fus[static_cast<std::size_t>(a * n + bc)])
                    return false;
            }
        }
    return true;
}

// enumerate commutative residuated structures on a base lattice
void enumerate_fl_on_base(const AlgebraClass& C, const FiniteAlgebra& base,
                          std::vector<FiniteAlgebra>& found) {
    LatticeTables L = lattice_tables_of(base);
    int n = L.n;
    const int bot = 0, top = n - 1;
    bool integral = has_law(C, "integrality");

    std::vector<int> units;
    if (integral) units.push_back(top);
    else
        for (int u = n == 1 ? 0 : 1; u < n; ++u) units.push_back(u);  // unit = bot only if trivial

    for (int unit : units) {
        std::vector<int> fus(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        auto set_fus = [&](int a, int b, int v) {
            fus[static_cast<std::size_t>(a * n + b)] = v;
            fus[static_cast<std::size_t>(b * n + a)] = v;
        };
        for (int x = 0; x < n; ++x) {
            set_fus(bot, x, bot);  // residuation forces a bottom-absorbing fusion
            set_fus(unit, x, x);
        }

        std::vector<std::pair<int, int>> free_entries;
        for (int i = 0; i <= top; ++i)
            for (int j = i; j <= top; ++j)
                if (fus[static_cast<std::size_t>(i * n + j)] < 0) free_entries.emplace_back(i, j);

        std::function<void(std::size_t)> dfs = [&](std::size_t k) {
            if (k == free_entries.size()) {
                if (!associative(n, fus)) return;
                auto under = residuals_from_fusion(L, fus, true);
                if (!under) return;
                auto over = residuals_from_fusion(L, fus, false);
                if (!over) return;
                std::vector<std::vector<int>> tables{L.meet, L.join, fus, *under, *over,
                                                     {unit}, {bot}, {top}, {bot}};
                FiniteAlgebra cand(C.name + std::to_string(n), n, Signature::fl(),
                                   std::move(tables));
                if (check_membership(cand, C).verdict) found.push_back(std::move(cand));
                return;
            }
            auto [i, j] = free_entries[k];
            for (int v = 0; v < n; ++v) {
                if (integral && !L.le(v, L.mt(i, j))) continue;
                // monotonicity against every already-fixed comparable entry
                bool ok = true;
                for (int a = 0; a < n && ok; ++a)
                    for (int b = 0; b < n && ok; ++b) {
                        int w = fus[static_cast<std::size_t>(a * n + b)];
                        if (w < 0) continue;
                        if (L.le(a, i) && L.le(b, j) && !L.le(w, v)) ok = false;
                        if (L.le(i, a) && L.le(j, b) && !L.le(v, w)) ok = false;
                    }
                if (!ok) continue;
                set_fus(i, j, v);
                dfs(k + 1);
                set_fus(i, j, -1);
            }
        };
        dfs(0);
    }
}

std::optional<std::vector<int>> complement_table(const LatticeTables& L) {
    int n = L.n;
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c)
            if (L.mt(a, c) == 0 && L.jn(a, c) == n - 1) {
                if (comp[static_cast<std::size_t>(a)] >= 0) return std::nullopt;  // not unique
                comp[static_cast<std::size_t>(a)] = c;
            }
        if (comp[static_cast<std::size_t>(a)] < 0) return std::nullopt;
    }
    return comp;
}

std::vector<int> upper_covers(const LatticeTables& L, int a) {
    std::vector<int> covers;
    for (int b = 0; b < L.n; ++b) {
        if (b == a || !L.le(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < L.n; ++c)
            if (c != a && c != b && L.le(a, c) && L.le(c, b)) { cover = false; break; }
        if (cover) covers.push_back(b);
    }
    return covers;
}

std::vector<int> lower_covers(const LatticeTables& L, int a) {
    std::vector<int> covers;
    for (int b = 0; b < L.n; ++b) {
        if (b == a || !L.le(b, a)) continue;
        bool cover = true;
        for (int c = 0; c < L.n; ++c)
            if (c != a && c != b && L.le(b, c) && L.le(c, a)) { cover = false; break; }
        if (cover) covers.push_back(b);
    }
    return covers;
}

// Boolean-based modal classes: box determined by its coatom values
void enumerate_modal_boolean(const AlgebraClass& C, const FiniteAlgebra& base,
                             std::vector<FiniteAlgebra>& found) {
    LatticeTables L = lattice_tables_of(base);
    int n = L.n;
    auto comp = complement_table(L);
    if (!comp) return;  // not a Boolean lattice
    int top = n - 1;

    std::vector<int> coatoms;
    for (int a = 0; a < n; ++a)
        if (a != top && L.le(a, top) && upper_covers(L, a) == std::vector<int>{top})
            coatoms.push_back(a);

    // under(a,b) = comp(a) \/ b
    std::vector<int> fusv(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> under(fusv.size()), over(fusv.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t i = static_cast<std::size_t>(a * n + b);
            fusv[i] = L.mt(a, b);
            under[i] = L.jn((*comp)[static_cast<std::size_t>(a)], b);
            over[i] = L.jn((*comp)[static_cast<std::size_t>(b)], a);
        }

    std::size_t total = 1;
    for (std::size_t i = 0; i < coatoms.size(); ++i) total *= static_cast<std::size_t>(n);
    std::vector<int> box(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::vector<int> cox(coatoms.size());
        for (std::size_t i = 0; i < coatoms.size(); ++i) {
            cox[i] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        for (int a = 0; a < n; ++a) {
            int v = top;
            for (std::size_t i = 0; i < coatoms.size(); ++i)
                if (L.le(a, coatoms[i])) v = L.mt(v, cox[i]);
            box[static_cast<std::size_t>(a)] = v;
        }
        std::vector<int> dia(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            dia[static_cast<std::size_t>(a)] =
                (*comp)[static_cast<std::size_t>(box[static_cast<std::size_t>(
                    (*comp)[static_cast<std::size_t>(a)])])];
        std::vector<std::vector<int>> tables{L.meet, L.join, fusv, under, over,
                                             {top}, {0}, {top}, {0}, box, dia};
        FiniteAlgebra cand(C.name + std::to_string(n), n, Signature::fl_modal(),
                           std::move(tables));
        if (check_membership(cand, C).verdict) found.push_back(std::move(cand));
    }
}

bool mentions(const Formula& f, Formula::Kind k) {
    if (f.kind() == k) return true;
    if (f.is_unary()) return mentions(f.lhs(), k);
    if (f.is_binary()) return mentions(f.lhs(), k) || mentions(f.rhs(), k);
    return false;
}

bool laws_hold(const FiniteAlgebra& A, const std::vector<Law>& laws) {
    int n = A.size();
    for (const Law& law : laws) {
        std::set<std::string> vars = law.lhs.variables();
        for (const std::string& s : law.rhs.variables()) vars.insert(s);
        std::vector<std::string> vs(vars.begin(), vars.end());
        Formula le = law.lhs.expand(), re = law.rhs.expand();
        std::size_t count = 1;
        for (std::size_t i = 0; i < vs.size(); ++i) count *= static_cast<std::size_t>(n);
        Valuation v;
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (const std::string& name : vs) {
                v[name] = static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            int lv = evaluate(A, le, v);
            int rv = evaluate(A, re, v);
            if (law.kind == Law::Kind::Eq ? lv != rv : A.meet(lv, rv) != lv) return false;
        }
    }
    return true;
}

// Heyting-based modal classes: box from monotone assignments on
// meet-irreducibles, dia dually on join-irreducibles.
void enumerate_modal_heyting(const AlgebraClass& C, const FiniteAlgebra& base,
                             std::vector<FiniteAlgebra>& found) {
    LatticeTables L = lattice_tables_of(base);
    int n = L.n;
    int top = n - 1, bot = 0;
    auto under = residuals_from_fusion(L, L.meet, true);
    if (!under) return;  // not a Heyting lattice
    // distributivity is implied by the residuation of meet

    std::vector<int> mirr, jirr;
    for (int a = 0; a < n; ++a) {
        if (a != top && upper_covers(L, a).size() == 1) mirr.push_back(a);
        if (a != bot && lower_covers(L, a).size() == 1) jirr.push_back(a);
    }

    auto extend_box = [&](const std::vector<int>& assign) {
        std::vector<int> box(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            int v = top;
            for (std::size_t i = 0; i < mirr.size(); ++i)
                if (L.le(a, mirr[i])) v = L.mt(v, assign[i]);
            box[static_cast<std::size_t>(a)] = v;
        }
        return box;
    };
    auto extend_dia = [&](const std::vector<int>& assign) {
        std::vector<int> dia(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) {
            int v = bot;
            for (std::size_t i = 0; i < jirr.size(); ++i)
                if (L.le(jirr[i], a)) v = L.jn(v, assign[i]);
            dia[static_cast<std::size_t>(a)] = v;
        }
        return dia;
    };

    // collect monotone assignments
    auto monotone_assignments = [&](const std::vector<int>& pts) {
        std::vector<std::vector<int>> result;
        std::vector<int> cur(pts.size(), 0);
        std::function<void(std::size_t)> dfs = [&](std::size_t k) {
            if (k == pts.size()) {
                result.push_back(cur);
                return;
            }
            for (int v = 0; v < n; ++v) {
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i) {
                    if (L.le(pts[i], pts[k]) && !L.le(cur[i], v)) ok = false;
                    if (L.le(pts[k], pts[i]) && !L.le(v, cur[i])) ok = false;
                }
                if (!ok) continue;
                cur[k] = v;
                dfs(k + 1);
            }
        };
        dfs(0);
        return result;
    };

    // a / b = b -> a for the commutative meet fusion
    std::vector<int> over(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            over[static_cast<std::size_t>(a * n + b)] = (*under)[static_cast<std::size_t>(b * n + a)];

    // split the modal laws so single-operator ones prune candidates before pairing
    std::vector<Law> box_laws, dia_laws;
    for (const Law& law : C.laws) {
        bool has_box = mentions(law.lhs, Formula::Kind::Box) || mentions(law.rhs, Formula::Kind::Box);
        bool has_dia = mentions(law.lhs, Formula::Kind::Dia) || mentions(law.rhs, Formula::Kind::Dia);
        if (has_box && !has_dia) box_laws.push_back(law);
        if (has_dia && !has_box) dia_laws.push_back(law);
    }
    std::vector<int> id_table(static_cast<std::size_t>(n));
    std::iota(id_table.begin(), id_table.end(), 0);
    auto candidate = [&](const std::vector<int>& box, const std::vector<int>& dia) {
        std::vector<std::vector<int>> tables{L.meet, L.join, L.meet, *under, over,
                                             {top}, {bot}, {top}, {bot}, box, dia};
        return FiniteAlgebra(C.name + std::to_string(n), n, Signature::fl_modal(),
                             std::move(tables));
    };

    std::vector<std::vector<int>> boxes;
    for (const auto& assign : monotone_assignments(mirr)) {
        std::vector<int> box = extend_box(assign);
        if (laws_hold(candidate(box, id_table), box_laws)) boxes.push_back(std::move(box));
    }
    std::vector<std::vector<int>> dias;
    for (const auto& assign : monotone_assignments(jirr)) {
        std::vector<int> dia = extend_dia(assign);
        if (laws_hold(candidate(id_table, dia), dia_laws)) dias.push_back(std::move(dia));
    }

    for (const auto& box : boxes)
        for (const auto& dia : dias) {
            FiniteAlgebra cand = candidate(box, dia);
            if (check_membership(cand, C).verdict) found.push_back(std::move(cand));
        }
}

enum class ClassFamily { Lattice, Fl, ModalBoolean, ModalHeyting };

ClassFamily family_of(const AlgebraClass& C) {
    if (C.name.rfind("lattice", 0) == 0) return ClassFamily::Lattice;
    if (C.base_sig.has("[]")) {
        std::string base = C.name.substr(0, C.name.find(':'));
        if (base == "modal" || base == "s4" || base == "s5" || base == "kn4" || base == "kn45")
            return ClassFamily::ModalBoolean;
        return ClassFamily::ModalHeyting;
    }
    return ClassFamily::Fl;
}

} // namespace

Catalog enumerate_class(const AlgebraClass& C, int n, const std::vector<FiniteAlgebra>& bases) {
    ClassFamily fam = family_of(C);
    int cap = fam == ClassFamily::ModalBoolean ? 8 : 6;
    if (n < 1 || n > cap)
        fail(ErrorKind::CapExceeded, "class enumeration for " + C.name + " supports 1 <= n <= " +
                                         std::to_string(cap));
    Catalog cat;
    cat.cls = C.name;
    cat.size = n;

    if (fam == ClassFamily::Lattice) {
        cat.algebras = bases;
    } else {
        std::vector<FiniteAlgebra> found;
        for (const FiniteAlgebra& base : bases) {
            if (base.size() != n) continue;
            switch (fam) {
                case ClassFamily::Fl: enumerate_fl_on_base(C, base, found); break;
                case ClassFamily::ModalBoolean: enumerate_modal_boolean(C, base, found); break;
                default: enumerate_modal_heyting(C, base, found); break;
            }
        }
        merge_up_to_iso(cat.algebras, found);
    }
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    for (std::size_t i = 0; i < cat.algebras.size(); ++i)
        keyed.emplace_back(canonical_key(cat.algebras[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<FiniteAlgebra> ordered;
    for (const auto& [key, i] : keyed) {
        ordered.push_back(std::move(cat.algebras[i]));
        std::uint64_t h = 1469598103934665603ull;
        h = (h ^ static_cast<std::uint64_t>(n)) * 1099511628211ull;
        for (int v : key) h = (h ^ (static_cast<std::uint64_t>(v) + 1)) * 1099511628211ull;
        cat.hashes.push_back(h);
    }
    cat.algebras = std::move(ordered);
    for (std::size_t i = 0; i < cat.algebras.size(); ++i)
        cat.algebras[i].rename(C.name + "_" + std::to_string(n) + "_" + std::to_string(i));
    return cat;
}

Catalog enumerate_class(const AlgebraClass& C, int n) {
    if (family_of(C) == ClassFamily::ModalBoolean) {
        // the Boolean lattice on n elements is unique (n a power of two)
        std::vector<FiniteAlgebra> bases;
        int atoms = 0;
        while ((1 << atoms) < n) ++atoms;
        if (n >= 2 && (1 << atoms) == n) bases.push_back(make_boolean(atoms));
        return enumerate_class(C, n, bases);
    }
    return enumerate_class(C, n, enumerate_lattices(n));
}

} // namespace alg
