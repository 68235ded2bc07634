#include "cdc/io.hpp"

#include <fstream>
#include <sstream>

#include "cdc/bigint.hpp"
#include "cdc/errors.hpp"

namespace cdc {

namespace {

// key=value pairs from the header line after '#'
void parse_header(const std::string& line, SkeletonCode& s, const std::string& origin) {
    std::istringstream ss(line);
    std::string token;
    bool have_n = false, have_d = false, have_k = false;
    while (ss >> token) {
        if (token == "#") continue;
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ValidationError(origin + ": malformed header token `" + token + "`");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "n") {
                s.n = std::stoi(value);
                have_n = true;
            } else if (key == "d") {
                s.d = std::stoi(value);
                have_d = true;
            } else if (key == "k") {
                s.k = std::stoi(value);
                have_k = true;
            } else if (key == "m") {
                s.m = std::stoi(value);
            } else if (key == "label") {
                s.label = value;
            } else {
                throw ValidationError(origin + ": unknown header key `" + key + "`");
            }
        } catch (const std::invalid_argument&) {
            throw ValidationError(origin + ": non-numeric header value `" + value + "`");
        }
    }
    if (!have_n || !have_d || !have_k)
        throw ValidationError(origin + ": header must declare n, d and k");
}

}  // namespace

SkeletonCode parse_skeleton(std::istream& in, const std::string& origin) {
    SkeletonCode s;
    std::string line;
    bool header_done = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!header_done) {
            if (line.empty() || line[0] != '#')
                throw ValidationError(origin + ": first line must be the `# n=.. d=.. k=..` header");
            parse_header(line.substr(1), s, origin);
            header_done = true;
            continue;
        }
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            try {
                std::size_t used = 0;
                const unsigned long long v = std::stoull(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                s.vectors.push_back(v);
            } catch (const std::exception&) {
                throw ValidationError(origin + " line " + std::to_string(lineno) +
                                      ": malformed integer `" + token + "`");
            }
        }
    }
    if (!header_done) throw ValidationError(origin + ": empty file");
    try {
        s.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return s;
}

SkeletonCode parse_skeleton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open skeleton file " + path);
    return parse_skeleton(in, path);
}

void emit_skeleton(std::ostream& out, const SkeletonCode& s) {
    out << "# n=" << s.n << " d=" << s.d << " k=" << s.k;
    if (s.m) out << " m=" << *s.m;
    if (!s.label.empty()) out << " label=" << s.label;
    out << '\n';
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        out << s.vectors[i];
        out << ((i % 15 == 14 || i + 1 == s.vectors.size()) ? '\n' : ' ');
    }
}

void emit_skeleton_file(const std::string& path, const SkeletonCode& s) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write skeleton file " + path);
    emit_skeleton(out, s);
}

std::vector<MultilevelExpectation> load_multilevel_expectations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open expectations file " + path);
    std::vector<MultilevelExpectation> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        MultilevelExpectation e;
        std::string value;
        if (ss >> e.q >> e.n >> e.k >> e.skeleton >> value) {
            e.expected = BigInt(value);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<LinkageExpectation> load_linkage_expectations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open expectations file " + path);
    std::vector<LinkageExpectation> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        LinkageExpectation e;
        std::string value;
        if (ss >> e.q >> e.n >> e.k >> e.m >> value) {
            e.expected = BigInt(value);
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace cdc
