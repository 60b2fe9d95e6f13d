#include "alg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace alg {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

struct LineReader {
    std::istream& in;
    std::string origin;
    int lineno = 0;

    [[noreturn]] void error(const std::string& msg) const {
        std::ostringstream os;
        os << origin << ":" << lineno << ": " << msg;
        fail(ErrorKind::Format, os.str());
    }

    // next non-empty line, split into whitespace tokens; false at EOF
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = strip_comment(line);
            std::istringstream ss(s);
            tokens.clear();
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

std::size_t table_rows(int n, int arity) {
    if (arity == 0) return 1;
    std::size_t r = 1;
    for (int i = 0; i + 1 < arity; ++i) r *= static_cast<std::size_t>(n);
    return r;
}

} // namespace

FiniteAlgebra read_algebra(std::istream& in, const std::string& origin) {
    LineReader rd{in, origin};
    std::vector<std::string> tok;

    if (!rd.next(tok) || tok[0] != "algebra" || tok.size() != 2)
        rd.error("expected 'algebra <name>'");
    std::string name = tok[1];

    if (!rd.next(tok) || tok[0] != "size" || tok.size() != 2)
        rd.error("expected 'size <n>'");
    int n = 0;
    try {
        n = std::stoi(tok[1]);
    } catch (...) {
        rd.error("bad size");
    }
    if (n <= 0) rd.error("size must be positive");

    std::vector<std::string> labels;
    std::vector<Symbol> symbols;
    std::vector<std::vector<int>> tables_by_symbol;
    std::vector<bool> seen;

    bool done = false;
    while (!done && rd.next(tok)) {
        const std::string& kw = tok[0];
        if (kw == "labels") {
            if (static_cast<int>(tok.size()) != n + 1) rd.error("labels line needs one label per element");
            labels.assign(tok.begin() + 1, tok.end());
        } else if (kw == "op") {
            if (tok.size() != 3) rd.error("expected 'op <symbol> <arity>'");
            int ar = 0;
            try {
                ar = std::stoi(tok[2]);
            } catch (...) {
                rd.error("bad arity");
            }
            if (ar < 0) rd.error("negative arity");
            symbols.push_back({tok[1], ar});
            tables_by_symbol.emplace_back();
            seen.push_back(false);
        } else if (kw == "table") {
            if (tok.size() != 2) rd.error("expected 'table <symbol>'");
            auto it = std::find_if(symbols.begin(), symbols.end(),
                                   [&](const Symbol& s) { return s.name == tok[1]; });
            if (it == symbols.end()) rd.error("table for undeclared symbol " + tok[1]);
            std::size_t si = static_cast<std::size_t>(it - symbols.begin());
            if (seen[si]) rd.error("duplicate table for " + tok[1]);
            seen[si] = true;
            int arity = it->arity;
            std::size_t rows = table_rows(n, arity);
            std::size_t cols = arity == 0 ? 1 : static_cast<std::size_t>(n);
            std::vector<int>& t = tables_by_symbol[si];
            t.reserve(rows * cols);
            for (std::size_t r = 0; r < rows; ++r) {
                if (!rd.next(tok)) rd.error("unexpected end of file inside table " + it->name);
                if (tok.size() != cols) rd.error("table row has wrong width in " + it->name);
                for (const std::string& cell : tok) {
                    int v = 0;
                    try {
                        v = std::stoi(cell);
                    } catch (...) {
                        rd.error("bad table entry '" + cell + "'");
                    }
                    if (v < 0 || v >= n) rd.error("table entry out of carrier in " + it->name);
                    t.push_back(v);
                }
            }
            if (!rd.next(tok) || tok[0] != "end") rd.error("expected 'end' after table " + it->name);
        } else if (kw == "end") {
            done = true;
        } else {
            rd.error("unknown directive '" + kw + "'");
        }
    }

    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (!seen[i]) rd.error("missing table for " + symbols[i].name);

    return FiniteAlgebra(name, n, Signature(symbols), std::move(tables_by_symbol),
                         std::move(labels));
}

FiniteAlgebra read_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Format, "cannot open " + path.string());
    return read_algebra(in, path.string());
}

void write_algebra(std::ostream& out, const FiniteAlgebra& A) {
    out << "algebra " << A.name() << "\n";
    out << "size " << A.size() << "\n";
    if (A.has_labels()) {
        out << "labels";
        for (const std::string& l : A.labels()) out << ' ' << l;
        out << "\n";
    }
    const Signature& sig = A.signature();
    for (int s = 0; s < sig.size(); ++s)
        out << "op " << sig.at(s).name << ' ' << sig.at(s).arity << "\n";
    for (int s = 0; s < sig.size(); ++s) {
        const Symbol& sym = sig.at(s);
        out << "table " << sym.name << "\n";
        const std::vector<int>& t = A.table(s);
        std::size_t cols = sym.arity == 0 ? 1 : static_cast<std::size_t>(A.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << t[i];
            out << ((i % cols == cols - 1) ? '\n' : ' ');
        }
        out << "end\n";
    }
}

void write_algebra_file(const std::filesystem::path& path, const FiniteAlgebra& A) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Format, "cannot write " + path.string());
    write_algebra(out, A);
}

std::vector<FiniteAlgebra> read_algebra_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        fail(ErrorKind::Format, dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<FiniteAlgebra> out;
    out.reserve(files.size());
    for (const auto& p : files) out.push_back(read_algebra_file(p));
    return out;
}

} // namespace alg
