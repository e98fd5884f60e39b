#include "conelift/io.hpp"

#include <fstream>
#include <sstream>

namespace conelift {

namespace {

// next non-comment line with content
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Mat read_matrix(std::istream& in) {
    std::string line;
    if (!next_line(in, line))
        throw std::invalid_argument("matrix file: missing header");
    std::istringstream header(line);
    long m, n;
    if (!(header >> m >> n) || m < 0 || n < 1)
        throw std::invalid_argument("matrix file: bad header");

    Mat rows;
    rows.reserve(m);
    for (long i = 0; i < m; ++i) {
        if (!next_line(in, line))
            throw std::invalid_argument("matrix file: missing row");
        std::istringstream ls(line);
        Vec row;
        row.reserve(n);
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        if ((long)row.size() != n)
            throw std::invalid_argument("matrix file: wrong row length");
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Mat& rows, size_t cols) {
    out << rows.size() << " " << cols << "\n";
    for (const Vec& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

Bounds parse_bounds(const std::string& text) {
    Bounds b;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "inf") {
            b.limits.emplace_back(std::nullopt);
        } else {
            Int v(tok);
            if (v < 0) throw std::invalid_argument("bounds must be nonnegative");
            b.limits.emplace_back(std::move(v));
        }
    }
    if (b.limits.empty()) throw std::invalid_argument("empty bounds list");
    return b;
}

}  // namespace conelift
