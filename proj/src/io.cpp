#include "fcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fcx {

namespace {

bool blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_vertex(const std::string& tok, int lineno) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error(lineno, "expected a vertex number, got '" + tok + "'");
    if (tok.size() > 2) throw parse_error(lineno, "vertex number '" + tok + "' out of range");
    int v = std::stoi(tok);
    return v;
}

} // namespace

Complex parse_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = 0;
    bool have_header = false;
    std::vector<Mask> facets;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::vector<std::string> toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "n")
                throw parse_error(lineno, "expected header 'n <count>' before any facet");
            try {
                n = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw parse_error(lineno, "vertex count '" + toks[1] + "' is not a number");
            }
            if (n < 1 || n > kMaxVertices)
                throw parse_error(lineno, "vertex count " + std::to_string(n) + " outside [1, 64]");
            have_header = true;
            continue;
        }
        std::vector<int> vs;
        for (const std::string& tok : toks) {
            if (n <= 9 && tok.size() > 1 &&
                std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '1' && c <= '9'; })) {
                for (char c : tok) vs.push_back(c - '0');
            } else {
                vs.push_back(parse_vertex(tok, lineno));
            }
        }
        Mask m;
        try {
            m = mask_from_vertices(vs, n);
        } catch (const precondition_error& e) {
            throw parse_error(lineno, e.what());
        }
        if (std::find(facets.begin(), facets.end(), m) != facets.end())
            throw parse_error(lineno, "duplicate facet " + mask_to_string(m));
        facets.push_back(m);
    }
    if (!have_header) throw parse_error(lineno, "missing header 'n <count>'");
    if (facets.empty()) return Complex::empty_complex(n);
    return Complex::generated(n, facets);
}

Complex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    return parse_complex(in);
}

std::string write_complex(const Complex& c) {
    if (c.is_void())
        throw precondition_error("the void complex has no serialization");
    std::string out = "n " + std::to_string(c.n()) + "\n";
    for (Mask f : c.facets()) out += mask_to_spaced(f) + "\n";
    return out;
}

void write_complex_file(const Complex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open '" + path + "' for writing");
    out << write_complex(c);
}

} // namespace fcx
