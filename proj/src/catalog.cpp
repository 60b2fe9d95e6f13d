#include "alg/catalog.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>

#include "alg/io.hpp"

namespace alg {

namespace {

// "n=2,sizes=2,4,8": scalar k=v pairs first, an optional sizes=... list last
void parse_params(const std::string& rest, std::map<std::string, int>& params,
                  std::vector<int>& sizes) {
    std::string scalars = rest;
    auto pos = rest.find("sizes=");
    if (pos != std::string::npos) {
        scalars = rest.substr(0, pos);
        if (!scalars.empty() && scalars.back() == ',') scalars.pop_back();
        std::stringstream ss(rest.substr(pos + 6));
        std::string item;
        while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
    }
    std::stringstream ss(scalars);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::InvalidArgument, "malformed catalog parameter '" + item + "'");
        params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    }
}

std::vector<FiniteAlgebra> enumerate_sizes(const std::string& cls, const std::vector<int>& sizes) {
    std::vector<FiniteAlgebra> out;
    AlgebraClass C = class_by_name(cls);
    for (int n : sizes) {
        Catalog cat = enumerate_class(C, n);
        for (FiniteAlgebra& A : cat.algebras) out.push_back(std::move(A));
    }
    return out;
}

std::vector<int> range_to(int max) {
    std::vector<int> out;
    for (int i = 1; i <= max; ++i) out.push_back(i);
    return out;
}

bool is_chain(const FiniteAlgebra& A) {
    OrderRelation ord = order_from_meet(A);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b)
            if (!ord.leq(a, b) && !ord.leq(b, a)) return false;
    return true;
}

std::vector<FiniteAlgebra> resolve_uncached(const std::string& source) {
    if (std::filesystem::is_directory(source)) return read_algebra_dir(source);

    std::string base = source;
    std::string rest;
    auto colon = source.find(':');
    if (colon != std::string::npos) {
        base = source.substr(0, colon);
        rest = source.substr(colon + 1);
    }
    std::map<std::string, int> params;
    std::vector<int> sizes;
    parse_params(rest, params, sizes);
    auto param = [&](const std::string& key, int dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };

    if (base == "boolean2") return {make_boolean(1)};
    if (base == "luk") return {make_lukasiewicz_chain(param("k", 3))};
    if (base == "godel") return {make_godel_chain(param("k", 3))};
    if (base == "luk-chains") {
        std::vector<FiniteAlgebra> out;
        for (int k = 2; k <= param("max", 5); ++k) out.push_back(make_lukasiewicz_chain(k));
        return out;
    }
    if (base == "godel-chains") {
        std::vector<FiniteAlgebra> out;
        for (int k = 2; k <= param("max", 5); ++k) out.push_back(make_godel_chain(k));
        return out;
    }
    if (base == "bl-chains") {
        std::vector<FiniteAlgebra> all = enumerate_sizes("bl", range_to(param("max", 5)));
        std::vector<FiniteAlgebra> out;
        for (FiniteAlgebra& A : all)
            if (is_chain(A)) out.push_back(std::move(A));
        return out;
    }

    std::string cls = base;
    int n = param("n", -1);
    if (n >= 0) cls = base + ":n=" + std::to_string(n);

    if (base == "s4" || base == "s5" || base == "modal" || base == "kn4" || base == "kn45") {
        if (sizes.empty()) sizes = {2, 4, 8};
        return enumerate_sizes(cls, sizes);
    }
    if (base == "heyting" || base == "godel-alg" || base == "boolean" || base == "flew" ||
        base == "fle" || base == "flen" || base == "flewn" || base == "bl" || base == "mv" ||
        base == "mipc" || base == "ws5" || base == "ik" || base == "ikn4" || base == "ikn45" ||
        base == "is4") {
        if (base == "godel-alg") cls = "godel";
        if (sizes.empty()) sizes = range_to(param("max", 5));
        return enumerate_sizes(cls, sizes);
    }
    fail(ErrorKind::InvalidArgument, "unknown catalog source '" + source + "'");
}

} // namespace

std::vector<FiniteAlgebra> resolve_catalog(const std::string& source) {
    static std::mutex mu;
    static std::map<std::string, std::vector<FiniteAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(source);
    if (it != cache.end()) return it->second;
    std::vector<FiniteAlgebra> result = resolve_uncached(source);
    cache[source] = result;
    return result;
}

std::vector<Matrix> matrices_for(const std::vector<FiniteAlgebra>& algebras,
                                 TranslationStyle style, const std::string& designation) {
    std::vector<Matrix> out;
    for (const FiniteAlgebra& A : algebras) {
        Matrix m;
        m.algebra = &A;
        m.name = A.name();
        if (designation == "least") {
            m.designated = least_filter(A, style).set;
        } else {
            std::vector<int> elems;
            std::stringstream ss(designation);
            std::string item;
            while (std::getline(ss, item, ',')) elems.push_back(std::stoi(item));
            DeductiveFilter named{ElemSet::of(A.size(), elems), Congruence::identity(A.size())};
            // must actually be a deductive filter of A
            std::vector<DeductiveFilter> filters = all_filters(A, style);
            bool found = false;
            for (const DeductiveFilter& f : filters)
                if (f.set == named.set) { found = true; break; }
            if (!found)
                fail(ErrorKind::InvalidArgument,
                     "designated set is not a deductive filter of " + A.name());
            m.designated = named.set;
        }
        out.push_back(std::move(m));
    }
    return out;
}

TranslationStyle style_by_name(const std::string& token) {
    if (token == "fl") return TranslationStyle::FL;
    if (token == "modal") return TranslationStyle::Modal;
    fail(ErrorKind::InvalidArgument, "unknown translation style '" + token + "'");
}

} // namespace alg
