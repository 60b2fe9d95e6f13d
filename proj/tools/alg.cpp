#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "alg/catalog.hpp"
#include "alg/congruence.hpp"
#include "alg/glivenko.hpp"
#include "alg/io.hpp"
#include "alg/principles.hpp"
#include "alg/search.hpp"

using namespace alg;
using nlohmann::json;

namespace {

struct Options {
    bool machine = false;
    std::string catalog_dir;
    unsigned seed = 20240801;
    int jobs = 1;
    int cap = 12;
};

Options opts;

void emit(const json& record, const std::string& text) {
    if (opts.machine)
        std::cout << record.dump() << "\n";
    else
        std::cout << text << "\n";
}

json witness_json(const Witness& w) {
    json j{{"algebra", w.algebra}, {"filter", w.filter}, {"note", w.note}};
    if (w.a >= 0) j["a"] = w.a;
    if (w.b >= 0) j["b"] = w.b;
    if (w.index >= 0) j["index"] = w.index;
    return j;
}

json countermodel_json(const CounterModel& cm) {
    return json{{"matrix", cm.matrix}, {"matrix_name", cm.matrix_name},
                {"valuation", cm.valuation}};
}

std::string witness_text(const FiniteAlgebra* A, const Witness& w) {
    std::ostringstream os;
    os << "  witness: algebra " << w.algebra << ", F = {";
    for (std::size_t i = 0; i < w.filter.size(); ++i) {
        if (i) os << ",";
        os << (A ? A->label(w.filter[i]) : std::to_string(w.filter[i]));
    }
    os << "}";
    if (w.a >= 0) os << ", a = " << (A ? A->label(w.a) : std::to_string(w.a));
    if (w.b >= 0) os << ", b = " << (A ? A->label(w.b) : std::to_string(w.b));
    if (w.index >= 0) os << ", index = " << w.index;
    if (!w.note.empty()) os << "\n  " << w.note;
    return os.str();
}

std::string valuation_text(const Valuation& v) {
    std::ostringstream os;
    for (const auto& [name, val] : v) os << " " << name << "=" << val;
    return os.str();
}

int verdict_exit(const Verdict& v) { return v.status == Verdict::Status::Fails ? 1 : 0; }

std::vector<Formula> parse_gamma(const std::string& text) {
    std::vector<Formula> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        bool blank = item.find_first_not_of(" \t") == std::string::npos;
        if (!blank) out.push_back(parse_formula(item));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

TranslationStyle default_style(const FiniteAlgebra& A, const std::string& flag) {
    if (flag == "auto") return A.sym_box() >= 0 ? TranslationStyle::Modal : TranslationStyle::FL;
    return style_by_name(flag);
}

int resolve_bound(const std::string& bound_flag, const FiniteAlgebra& A) {
    if (bound_flag == "auto") return A.size();
    int b = std::stoi(bound_flag);
    if (b < 1) fail(ErrorKind::InvalidArgument, "bound must be >= 1");
    return b;
}

std::string source_or_dir(const std::string& source) {
    if (!source.empty()) return source;
    if (!opts.catalog_dir.empty()) return opts.catalog_dir;
    fail(ErrorKind::InvalidArgument,
         "no catalog given: pass --catalog or set ALG_CATALOG");
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& cls) {
    FiniteAlgebra A = read_algebra_file(file);
    AlgebraClass C = class_by_name(cls);
    ClassReport rep = check_membership(A, C);
    json rec{{"command", "check"}, {"algebra", A.name()}, {"class", cls},
             {"verdict", rep.verdict}};
    std::ostringstream os;
    os << A.name() << " vs " << cls << ": " << (rep.verdict ? "PASS" : "FAIL");
    json fails = json::array();
    for (const auto& f : rep.failures) {
        os << "\nFAIL " << f.label << valuation_text(f.valuation);
        fails.push_back({{"label", f.label}, {"valuation", f.valuation}, {"detail", f.detail}});
    }
    rec["failures"] = fails;
    emit(rec, os.str());
    return rep.verdict ? 0 : 1;
}

int cmd_congruences(const std::string& file) {
    FiniteAlgebra A = read_algebra_file(file);
    CongruenceLattice lat = all_congruences(A, opts.cap);
    json rec{{"command", "congruences"}, {"algebra", A.name()},
             {"count", lat.all.size()}};
    std::ostringstream os;
    os << A.name() << ": " << lat.all.size() << " congruences";
    json items = json::array();
    for (const Congruence& c : lat.all) {
        os << "\n" << c.str(A);
        json blocks = json::array();
        for (const auto& b : c.blocks()) blocks.push_back(b);
        items.push_back(blocks);
    }
    rec["congruences"] = items;
    emit(rec, os.str());
    return 0;
}

int cmd_semisimple(const std::string& file) {
    FiniteAlgebra A = read_algebra_file(file);
    SemisimpleCertificate cert = is_semisimple(A, opts.cap);
    json rec{{"command", "semisimple"}, {"algebra", A.name()},
             {"semisimple", cert.semisimple}, {"simple", cert.simple}};
    json coatoms = json::array();
    std::ostringstream os;
    os << "semisimple: " << (cert.semisimple ? "true" : "false");
    if (cert.simple) os << " (simple)";
    for (const Congruence& c : cert.coatoms) {
        os << "\ncoatom: " << c.str(A);
        json blocks = json::array();
        for (const auto& b : c.blocks()) blocks.push_back(b);
        coatoms.push_back(blocks);
    }
    rec["coatoms"] = coatoms;
    if (!cert.semisimple) {
        os << "\ncoatom meet: " << cert.coatom_meet.str(A);
        json blocks = json::array();
        for (const auto& b : cert.coatom_meet.blocks()) blocks.push_back(b);
        rec["coatom_meet"] = blocks;
    }
    emit(rec, os.str());
    return cert.semisimple ? 0 : 1;
}

int cmd_filters(const std::string& file, const std::string& style_flag) {
    FiniteAlgebra A = read_algebra_file(file);
    TranslationStyle style = default_style(A, style_flag);
    auto filters = all_filters(A, style, opts.cap);
    json rec{{"command", "filters"}, {"algebra", A.name()}, {"count", filters.size()}};
    std::ostringstream os;
    os << A.name() << ": " << filters.size() << " deductive filters";
    json items = json::array();
    for (const DeductiveFilter& f : filters) {
        os << "\n{";
        auto elems = f.set.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) os << ",";
            os << A.label(elems[i]);
        }
        os << "}";
        items.push_back(elems);
    }
    rec["filters"] = items;
    emit(rec, os.str());
    return 0;
}

int cmd_consequence(const std::string& source, const std::string& style_flag,
                    const std::string& designate, const std::string& gamma_text,
                    const std::string& phi_text, bool antitheorem_mode,
                    const char* command_name) {
    std::vector<FiniteAlgebra> algebras = resolve_catalog(source_or_dir(source));
    if (algebras.empty()) fail(ErrorKind::InvalidArgument, "empty catalog");
    TranslationStyle style = default_style(algebras.front(), style_flag);
    auto M = matrices_for(algebras, style, designate);
    std::vector<Formula> gamma = parse_gamma(gamma_text);
    ConsequenceResult res;
    if (antitheorem_mode)
        res = is_antitheorem(M, gamma);
    else
        res = consequence(M, gamma, parse_formula(phi_text));
    json rec{{"command", command_name}, {"catalog", source_or_dir(source)},
             {"verdict", res.holds ? "HOLDS" : "FAILS"}};
    std::ostringstream os;
    os << command_name << ": " << (res.holds ? "HOLDS" : "FAILS");
    if (res.witness) {
        rec["witness"] = countermodel_json(*res.witness);
        os << "\n  countermodel: " << res.witness->matrix_name
           << valuation_text(res.witness->valuation);
    }
    emit(rec, os.str());
    return res.holds ? 0 : 1;
}

int cmd_il_check(const std::string& file, const std::string& family, const std::string& bound_flag,
                 const std::string& style_flag, bool dual, const std::string& scope_flag) {
    FiniteAlgebra A = read_algebra_file(file);
    TranslationStyle style = default_style(A, style_flag);
    SchemeFamily psi = scheme_family(family);
    int bound = resolve_bound(bound_flag, A);
    psi.bound = std::max(psi.bound, bound);
    FilterScope scope = scope_flag == "simple" ? FilterScope::SimpleOnly : FilterScope::All;
    Verdict v = dual ? check_dual_il(A, style, psi, bound, std::nullopt, scope)
                     : check_il(A, style, psi, bound, std::nullopt, scope);
    const char* what = dual ? "dual-il-check" : "il-check";
    json rec{{"command", what}, {"algebra", A.name()}, {"family", family},
             {"bound", bound}, {"verdict", to_string(v.status)}};
    std::ostringstream os;
    os << what << " " << A.name() << " [" << family << ", bound " << bound
       << "]: " << to_string(v.status);
    if (v.witness) {
        rec["witness"] = witness_json(*v.witness);
        os << "\n" << witness_text(&A, *v.witness);
    }
    emit(rec, os.str());
    return verdict_exit(v);
}

int cmd_lem_check(const std::string& file, const std::string& cls, const std::string& range,
                  const std::string& form_flag) {
    FiniteAlgebra A = read_algebra_file(file);
    LemScheme scheme = lem_scheme(cls);
    LemForm form = form_flag == "ddt" ? LemForm::DDT : LemForm::PCP;
    auto [lo, hi] = parse_range(range);
    int least = -1;
    for (int n = lo; n <= hi && least < 0; ++n)
        if (check_lem_axiom(A, form, scheme, n)) least = n;
    json rec{{"command", "lem-check"}, {"algebra", A.name()}, {"class", cls},
             {"form", form_flag}, {"range", {lo, hi}}, {"least_n", least}};
    std::ostringstream os;
    if (least >= 0)
        os << A.name() << " validates the " << form_flag << " LEM axiom at n = " << least;
    else
        os << "no n <= " << hi << " validates the " << form_flag << " LEM axiom for " << cls
           << " on " << A.name();
    emit(rec, os.str());
    return least >= 0 ? 0 : 1;
}

int cmd_ddt_check(const std::string& file, const std::string& family,
                  const std::string& from_cil, const std::string& conj_flag,
                  const std::string& bound_flag, const std::string& style_flag) {
    FiniteAlgebra A = read_algebra_file(file);
    TranslationStyle style = default_style(A, style_flag);
    int bound = resolve_bound(bound_flag, A);
    DdtFamily fam;
    if (!from_cil.empty()) {
        SchemeFamily psi = scheme_family(from_cil);
        psi.bound = std::max(psi.bound, bound);
        ConjShape shape = conj_flag == "meet" ? ConjShape::Meet : ConjShape::Fusion;
        fam = ddt_from_cil(psi, bound, shape);
    } else {
        fam = ddt_family(family);
    }
    Verdict v = check_ddt(A, style, fam, bound);
    json rec{{"command", "ddt-check"}, {"algebra", A.name()}, {"family", fam.name},
             {"bound", bound}, {"verdict", to_string(v.status)}};
    std::ostringstream os;
    os << "ddt-check " << A.name() << " [" << fam.name << ", bound " << bound
       << "]: " << to_string(v.status);
    if (v.witness) {
        rec["witness"] = witness_json(*v.witness);
        os << "\n" << witness_text(&A, *v.witness);
    }
    emit(rec, os.str());
    return verdict_exit(v);
}

int cmd_pcp_check(const std::string& file, const std::string& join_flag,
                  const std::string& style_flag) {
    FiniteAlgebra A = read_algebra_file(file);
    TranslationStyle style = default_style(A, style_flag);
    Verdict v = check_pcp(A, style, join_scheme(join_flag));
    json rec{{"command", "pcp-check"}, {"algebra", A.name()}, {"join", join_flag},
             {"verdict", to_string(v.status)}};
    std::ostringstream os;
    os << "pcp-check " << A.name() << " [" << join_flag << "]: " << to_string(v.status);
    if (v.witness) {
        rec["witness"] = witness_json(*v.witness);
        os << "\n" << witness_text(&A, *v.witness);
    }
    emit(rec, os.str());
    return verdict_exit(v);
}

int cmd_cross_check(const std::string& source, const std::string& cls, const std::string& range,
                    const std::string& form_flag) {
    std::vector<FiniteAlgebra> algebras = resolve_catalog(source_or_dir(source));
    LemScheme scheme = lem_scheme(cls);
    LemForm form = form_flag == "ddt" ? LemForm::DDT : LemForm::PCP;
    auto [lo, hi] = parse_range(range);
    CrossReport rep = semisimple_vs_lem(algebras, form, scheme, lo, hi, opts.cap);
    json rows = json::array();
    std::ostringstream os;
    os << "cross-check [" << cls << ", " << form_flag << ", n " << lo << ".." << hi << "]";
    for (const CrossRow& r : rep.rows) {
        os << "\n" << r.algebra << ": semisimple=" << (r.semisimple ? "yes" : "no")
           << " least_n=" << r.least_n << (r.agree ? "" : "  << DISAGREE");
        rows.push_back({{"algebra", r.algebra}, {"semisimple", r.semisimple},
                        {"least_n", r.least_n}, {"agree", r.agree}});
    }
    os << "\n" << (rep.all_agree ? "all agree" : "DISAGREEMENT FOUND");
    json rec{{"command", "cross-check"}, {"class", cls}, {"form", form_flag},
             {"rows", rows}, {"all_agree", rep.all_agree}};
    emit(rec, os.str());
    return rep.all_agree ? 0 : 1;
}

int cmd_glivenko(std::string weak_src, std::string strong_src, std::string scheme_text,
                 const std::string& phi_text, const std::string& gamma_text,
                 const std::string& style_flag, bool strong_complete,
                 const std::string& pair_name, int pair_max, int random_count,
                 int random_nodes, int local_bound) {
    bool modal_sampling = false;
    if (!pair_name.empty()) {
        ShippedPair shipped = shipped_pair(pair_name, pair_max);
        weak_src = shipped.weak_source;
        strong_src = shipped.strong_source;
        scheme_text = shipped.scheme;
        strong_complete = shipped.strong_complete;
        modal_sampling = shipped.modal;
    }
    if (local_bound > 0) {
        // local form over the weak catalog alone: least k with
        // Gamma |= ~((~phi^n)^k), for each n up to the bound
        if (weak_src.empty()) fail(ErrorKind::InvalidArgument, "--local needs --weak");
        std::vector<FiniteAlgebra> weak = resolve_catalog(weak_src);
        if (weak.empty()) fail(ErrorKind::InvalidArgument, "empty catalog");
        auto M = matrices_for(weak, default_style(weak.front(), style_flag), "least");
        auto rows = local_glivenko_check(M, parse_gamma(gamma_text), parse_formula(phi_text),
                                         local_bound);
        json jrows = json::array();
        std::ostringstream os;
        os << "local correspondence over " << weak_src
           << " (witness functions sampled with range <= " << local_bound << " only)";
        for (const LocalGlivenkoRow& r : rows) {
            os << "\n  n = " << r.n << ": ";
            if (r.k > 0) os << "least k = " << r.k;
            else os << "NONE-UP-TO-BOUND";
            jrows.push_back({{"n", r.n}, {"k", r.k}});
        }
        json rec{{"command", "glivenko-local"}, {"weak", weak_src}, {"bound", local_bound},
                 {"bounded_witness_range", true}, {"rows", jrows}};
        emit(rec, os.str());
        return 0;
    }
    if (weak_src.empty() || strong_src.empty())
        fail(ErrorKind::InvalidArgument, "glivenko needs --pair or both --weak and --strong");
    std::vector<FiniteAlgebra> weak = resolve_catalog(weak_src);
    std::vector<FiniteAlgebra> strong = resolve_catalog(strong_src);
    if (weak.empty() || strong.empty()) fail(ErrorKind::InvalidArgument, "empty catalog");
    TranslationStyle style = default_style(weak.front(), style_flag);
    modal_sampling |= style == TranslationStyle::Modal;
    GlivenkoPair pair;
    pair.weak = matrices_for(weak, style, "least");
    pair.strong = matrices_for(strong, style, "least");
    pair.scheme = parse_formula(scheme_text);
    pair.strong_complete = strong_complete || strong_src == "boolean2";

    auto report_one = [&](const Formula& phi, const std::vector<Formula>& gamma) {
        GlivenkoReport rep = glivenko_check(pair, gamma, phi);
        json rec{{"command", "glivenko"},
                 {"phi", phi.str()},
                 {"strong", {{"holds", rep.strong_side.holds}, {"exact", rep.strong_side.exact}}},
                 {"weak", {{"holds", rep.weak_side.holds}, {"exact", rep.weak_side.exact}}},
                 {"match", rep.match},
                 {"exact_mismatch", rep.exact_mismatch}};
        std::ostringstream os;
        os << "phi = " << phi.str() << ": strong "
           << (rep.strong_side.holds ? "HOLDS" : "FAILS")
           << (rep.strong_side.exact ? "" : " (VALID-UP-TO-SIZE only)") << ", weak "
           << (rep.weak_side.holds ? "HOLDS" : "FAILS")
           << (rep.weak_side.exact ? "" : " (VALID-UP-TO-SIZE only)") << " -> "
           << (rep.match ? "MATCH" : (rep.exact_mismatch ? "EXACT MISMATCH" : "MISMATCH"));
        emit(rec, os.str());
        return rep;
    };

    if (random_count > 0) {
        std::mt19937 rng(opts.seed);
        std::vector<Formula> samples;
        samples.reserve(static_cast<std::size_t>(random_count));
        for (int i = 0; i < random_count; ++i)
            samples.push_back(random_formula(rng, random_nodes, {"p", "q"}, modal_sampling));

        int jobs = std::max(1, opts.jobs);
        std::vector<std::future<std::vector<GlivenkoReport>>> futures;
        std::size_t chunk = (samples.size() + static_cast<std::size_t>(jobs) - 1) /
                            static_cast<std::size_t>(jobs);
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = static_cast<std::size_t>(j) * chunk;
            std::size_t hi = std::min(samples.size(), lo + chunk);
            futures.push_back(std::async(std::launch::async, [&pair, &samples, lo, hi] {
                std::vector<GlivenkoReport> out;
                for (std::size_t i = lo; i < hi; ++i)
                    out.push_back(glivenko_check(pair, {}, samples[i]));
                return out;
            }));
        }
        int mismatches = 0, exact_mismatches = 0;
        std::size_t idx = 0;
        for (auto& f : futures)
            for (const GlivenkoReport& rep : f.get()) {
                if (!rep.match) ++mismatches;
                if (rep.exact_mismatch) ++exact_mismatches;
                if (!rep.match) report_one(samples[idx], {});
                ++idx;
            }
        json rec{{"command", "glivenko-random"}, {"seed", opts.seed},
                 {"samples", random_count}, {"mismatches", mismatches},
                 {"exact_mismatches", exact_mismatches}};
        std::ostringstream os;
        os << "seed " << opts.seed << ": " << random_count << " samples, " << mismatches
           << " mismatches, " << exact_mismatches << " exact mismatches";
        emit(rec, os.str());
        return exact_mismatches == 0 ? 0 : 1;
    }

    GlivenkoReport rep = report_one(parse_formula(phi_text), parse_gamma(gamma_text));
    return rep.match ? 0 : 1;
}

int cmd_luk_counterexample(int n) {
    LukCertificate cert = lukinfty_ddt_countermodel(n);
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    json qs = json::array(), chain = json::array(), escape = json::array();
    for (const Rational& q : cert.v_q) qs.push_back(rat(q));
    for (const Rational& p : cert.chain_premises) chain.push_back(rat(p));
    for (const Rational& p : cert.escape_premises) escape.push_back(rat(p));
    json rec{{"command", "luk-counterexample"}, {"n", cert.n}, {"eps", rat(cert.eps)},
             {"v_p", rat(cert.v_p)}, {"v_q", qs}, {"i_max", cert.i_max},
             {"chain_premises", chain}, {"escape_premises", escape},
             {"conclusion", rat(cert.conclusion)}, {"ok", cert.ok}};
    std::ostringstream os;
    os << "n = " << cert.n << ", eps = " << rat(cert.eps) << ", v(p) = " << rat(cert.v_p)
       << ", i_max = " << cert.i_max;
    for (std::size_t i = 0; i < cert.v_q.size(); ++i)
        os << "\n  v(q" << i << ") = " << rat(cert.v_q[i]);
    for (std::size_t i = 0; i < cert.chain_premises.size(); ++i)
        os << "\n  v(p^" << i + 1 << " -> (q" << i + 1 << " -> q" << i
           << ")) = " << rat(cert.chain_premises[i]);
    for (std::size_t i = 0; i < cert.escape_premises.size(); ++i)
        os << "\n  v(~q0 -> q" << i << "^" << i << ") = " << rat(cert.escape_premises[i]);
    os << "\n  v(p^" << cert.n << " -> q0) = " << rat(cert.conclusion) << " < 1";
    os << "\n  certificate " << (cert.ok ? "PASSES" : "FAILS");
    emit(rec, os.str());
    return cert.ok ? 0 : 1;
}

int cmd_enumerate(const std::string& cls, int size, const std::string& out_dir) {
    AlgebraClass C = class_by_name(cls);
    Catalog cat = enumerate_class(C, size);
    std::filesystem::create_directories(out_dir);
    json entries = json::array();
    std::ostringstream manifest;
    manifest << "class " << cls << "\nsize " << size << "\ncount " << cat.algebras.size()
             << "\n";
    for (std::size_t i = 0; i < cat.algebras.size(); ++i) {
        const FiniteAlgebra& A = cat.algebras[i];
        std::string fname = A.name() + ".alg";
        write_algebra_file(std::filesystem::path(out_dir) / fname, A);
        manifest << "entry " << fname << " " << std::hex << cat.hashes[i] << std::dec << "\n";
        entries.push_back({{"file", fname}, {"hash", cat.hashes[i]}});
    }
    std::ofstream mf(std::filesystem::path(out_dir) / "manifest.txt");
    mf << manifest.str();
    json rec{{"command", "enumerate"}, {"class", cls}, {"size", size},
             {"count", cat.algebras.size()}, {"entries", entries}, {"out", out_dir}};
    emit(rec, cls + " size " + std::to_string(size) + ": " +
                  std::to_string(cat.algebras.size()) + " algebras written to " + out_dir);
    return 0;
}

int cmd_antiadmissible(const std::string& source, const std::string& gamma_text,
                       const std::string& phi_text, const std::string& style_flag) {
    std::vector<FiniteAlgebra> algebras = resolve_catalog(source_or_dir(source));
    if (algebras.empty()) fail(ErrorKind::InvalidArgument, "empty catalog");
    TranslationStyle style = default_style(algebras.front(), style_flag);
    std::vector<Formula> gamma = parse_gamma(gamma_text);
    Formula phi = parse_formula(phi_text);
    Verdict v = antiadmissible(algebras, style, gamma, phi, opts.cap);
    json rec{{"command", "antiadmissible"}, {"catalog", source_or_dir(source)},
             {"verdict", to_string(v.status)}};
    std::ostringstream os;
    os << "antiadmissible: " << to_string(v.status);
    if (v.witness) {
        const FiniteAlgebra* A = nullptr;
        for (const FiniteAlgebra& cand : algebras)
            if (cand.name() == v.witness->algebra) A = &cand;
        rec["witness"] = witness_json(*v.witness);
        os << "\n" << witness_text(A, *v.witness);
    }
    emit(rec, os.str());
    return verdict_exit(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-algebra workbench: congruences, deductive filters, and "
                 "syntactic principles over finite algebras"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("ALG_CATALOG")) opts.catalog_dir = env;
    app.add_flag("--machine", opts.machine, "one self-describing JSON record per verdict");
    app.add_option("--catalog-dir", opts.catalog_dir,
                   "default catalog directory (or set ALG_CATALOG)");
    app.add_option("--seed", opts.seed, "seed for sampled checks (printed in transcripts)");
    app.add_option("--jobs", opts.jobs, "worker threads for sampled checks")
        ->check(CLI::Range(1, 64));
    app.add_option("--cap", opts.cap, "congruence lattice size cap")->check(CLI::Range(1, 16));

    std::string file, cls = "flew", family = "flew-il", bound = "auto", style = "auto";
    std::string scope = "all", range = "1..8", form = "pcp", designate = "least";
    std::string gamma, phi, source, weak_src, strong_src, scheme = "~~_";
    std::string from_cil, conj = "fusion", join = "or", out_dir = "catalog";
    bool strong_complete = false, antitheorem_mode = false;
    int n = 3, size = 3, random_count = 0, random_nodes = 8;

    auto* c_check = app.add_subcommand("check", "class membership with witnesses");
    c_check->add_option("file", file)->required();
    c_check->add_option("--class", cls)->required();

    auto* c_cong = app.add_subcommand("congruences", "print the congruence lattice");
    c_cong->add_option("file", file)->required();

    auto* c_semi = app.add_subcommand("semisimple", "simplicity / semisimplicity verdict");
    c_semi->add_option("file", file)->required();

    auto* c_filters = app.add_subcommand("filters", "deductive filters of an algebra");
    c_filters->add_option("file", file)->required();
    c_filters->add_option("--style", style, "fl | modal | auto");

    auto* c_cons = app.add_subcommand("consequence", "matrix consequence over a catalog");
    c_cons->add_option("--catalog", source);
    c_cons->add_option("--style", style);
    c_cons->add_option("--designate", designate, "least | comma-separated elements");
    c_cons->add_option("--gamma", gamma, "premises, ';'-separated");
    c_cons->add_option("--phi", phi);
    c_cons->add_flag("--antitheorem", antitheorem_mode, "check that gamma is an antitheorem");

    auto* c_il = app.add_subcommand("il-check", "inconsistency lemma on one algebra");
    c_il->add_option("file", file)->required();
    c_il->add_option("--family", family)->required();
    c_il->add_option("--bound", bound, "index bound or 'auto' (= |A|)");
    c_il->add_option("--style", style);
    c_il->add_option("--scope", scope, "all | simple");

    auto* c_lemr = app.add_subcommand("lem-check", "axiomatic LEM over an n range");
    c_lemr->add_option("file", file)->required();
    c_lemr->add_option("--class", cls)->required();
    c_lemr->add_option("--n", range, "single n or lo..hi");
    c_lemr->add_option("--form", form, "pcp | ddt");

    auto* c_ddt = app.add_subcommand("ddt-check", "deduction-detachment theorem");
    c_ddt->add_option("file", file)->required();
    c_ddt->add_option("--family", family, "built-in DDT family");
    c_ddt->add_option("--from-cil", from_cil, "derive the family from an IL family");
    c_ddt->add_option("--conj", conj, "fusion | meet (for --from-cil)");
    c_ddt->add_option("--bound", bound);
    c_ddt->add_option("--style", style);

    auto* c_pcp = app.add_subcommand("pcp-check", "proof-by-cases property");
    c_pcp->add_option("file", file)->required();
    c_pcp->add_option("--join", join, "join scheme token");
    c_pcp->add_option("--style", style);

    auto* c_dil = app.add_subcommand("dual-il-check", "dual IL / LEM meta-rule on one algebra");
    c_dil->add_option("file", file)->required();
    c_dil->add_option("--family", family)->required();
    c_dil->add_option("--bound", bound);
    c_dil->add_option("--style", style);
    c_dil->add_option("--scope", scope);

    auto* c_cross = app.add_subcommand("cross-check", "semisimplicity vs LEM over a catalog");
    c_cross->add_option("--catalog", source);
    c_cross->add_option("--class", cls)->required();
    c_cross->add_option("--n-range", range);
    c_cross->add_option("--form", form);

    std::string pair_name;
    int pair_max = 4;
    auto* c_gliv = app.add_subcommand("glivenko", "double-negation correspondence");
    c_gliv->add_option("--weak", weak_src);
    c_gliv->add_option("--strong", strong_src);
    c_gliv->add_option("--scheme", scheme, "translation with hole _, e.g. ~~_");
    c_gliv->add_option("--pair", pair_name,
                       "shipped pair: heyting-classical | s4-s5 | ikn4-lem | mipc-ws5 | bl-luk");
    c_gliv->add_option("--max", pair_max, "catalog size bound for --pair");
    c_gliv->add_option("--phi", phi);
    c_gliv->add_option("--gamma", gamma);
    c_gliv->add_option("--style", style);
    c_gliv->add_flag("--strong-complete", strong_complete,
                     "strong catalog decides its logic exactly (boolean2 is inferred)");
    c_gliv->add_option("--random", random_count, "sampled formulas instead of --phi");
    c_gliv->add_option("--nodes", random_nodes, "node budget for sampled formulas");
    int local_bound = 0;
    c_gliv->add_option("--local", local_bound,
                       "local form: least k <= N with Gamma |= ~((~phi^n)^k), n <= N");

    auto* c_luk = app.add_subcommand("luk-counterexample",
                                     "exact-rational countermodel on the [0,1] chain");
    c_luk->add_option("--n", n)->required();

    auto* c_enum = app.add_subcommand("enumerate", "enumerate a class up to isomorphism");
    c_enum->add_option("--class", cls)->required();
    c_enum->add_option("--size", size)->required();
    c_enum->add_option("--out", out_dir);

    auto* c_rule = app.add_subcommand("rule-check", "rule validity over a catalog");
    c_rule->add_option("--catalog", source);
    c_rule->add_option("--style", style);
    c_rule->add_option("--designate", designate);
    c_rule->add_option("--gamma", gamma);
    c_rule->add_option("--phi", phi)->required();

    auto* c_anti = app.add_subcommand("antiadmissible", "antiadmissibility over a catalog");
    c_anti->add_option("--catalog", source);
    c_anti->add_option("--gamma", gamma);
    c_anti->add_option("--phi", phi)->required();
    c_anti->add_option("--style", style);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_check->parsed()) return cmd_check(file, cls);
        if (c_cong->parsed()) return cmd_congruences(file);
        if (c_semi->parsed()) return cmd_semisimple(file);
        if (c_filters->parsed()) return cmd_filters(file, style);
        if (c_cons->parsed())
            return cmd_consequence(source, style, designate, gamma, phi, antitheorem_mode,
                                   antitheorem_mode ? "antitheorem" : "consequence");
        if (c_il->parsed()) return cmd_il_check(file, family, bound, style, false, scope);
        if (c_dil->parsed()) return cmd_il_check(file, family, bound, style, true, scope);
        if (c_lemr->parsed()) return cmd_lem_check(file, cls, range, form);
        if (c_ddt->parsed()) return cmd_ddt_check(file, family, from_cil, conj, bound, style);
        if (c_pcp->parsed()) return cmd_pcp_check(file, join, style);
        if (c_cross->parsed()) return cmd_cross_check(source, cls, range, form);
        if (c_gliv->parsed())
            return cmd_glivenko(weak_src, strong_src, scheme, phi, gamma, style,
                                strong_complete, pair_name, pair_max, random_count,
                                random_nodes, local_bound);
        if (c_luk->parsed()) return cmd_luk_counterexample(n);
        if (c_enum->parsed()) return cmd_enumerate(cls, size, out_dir);
        if (c_rule->parsed())
            return cmd_consequence(source, style, designate, gamma, phi, false, "rule-check");
        if (c_anti->parsed()) return cmd_antiadmissible(source, gamma, phi, style);
    } catch (const AlgError& e) {
        switch (e.kind()) {
            case ErrorKind::CapExceeded: std::cerr << "cap exceeded: "; break;
            case ErrorKind::Format: std::cerr << "malformed file: "; break;
            case ErrorKind::Syntax: std::cerr << "formula "; break;
            default: std::cerr << "error: "; break;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
