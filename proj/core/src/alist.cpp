#include "ldpcdist/alist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldpcdist {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("alist: line " + std::to_string(line) + ": " + what);
}

struct LineReader {
    std::istream& in;
    std::size_t lineno = 0;

    std::vector<long long> next_ints(const std::string& what) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream iss(line);
            std::vector<long long> vals;
            long long v;
            while (iss >> v) vals.push_back(v);
            std::string trailing;
            if (iss.clear(), iss >> trailing)
                fail(lineno, "non-numeric token in " + what);
            if (!vals.empty()) return vals;
            // blank lines are tolerated
        }
        fail(lineno + 1, "unexpected end of file, expected " + what);
    }
};

} // namespace

BitMatrix alist_read(std::istream& in) {
    LineReader rd{in};

    auto dims = rd.next_ints("n r");
    if (dims.size() != 2 || dims[0] <= 0 || dims[1] <= 0)
        fail(rd.lineno, "expected two positive integers n r");
    const std::size_t n = std::size_t(dims[0]), r = std::size_t(dims[1]);

    auto maxima = rd.next_ints("max_col_wt max_row_wt");
    if (maxima.size() != 2 || maxima[0] < 0 || maxima[1] < 0)
        fail(rd.lineno, "expected max_col_wt max_row_wt");
    const std::size_t max_col = std::size_t(maxima[0]), max_row = std::size_t(maxima[1]);

    auto col_wts = rd.next_ints("column weights");
    if (col_wts.size() != n) fail(rd.lineno, "expected " + std::to_string(n) + " column weights");
    auto row_wts = rd.next_ints("row weights");
    if (row_wts.size() != r) fail(rd.lineno, "expected " + std::to_string(r) + " row weights");
    for (auto w : col_wts)
        if (w < 0 || std::size_t(w) > max_col) fail(rd.lineno, "column weight out of range");
    for (auto w : row_wts)
        if (w < 0 || std::size_t(w) > max_row) fail(rd.lineno, "row weight out of range");

    BitMatrix m(r, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto idx = rd.next_ints("column adjacency");
        if (idx.size() != max_col)
            fail(rd.lineno, "expected " + std::to_string(max_col) + " entries in column block");
        std::size_t nonzero = 0;
        for (auto v : idx) {
            if (v == 0) continue;
            if (v < 1 || std::size_t(v) > r) fail(rd.lineno, "row index out of range");
            if (m.get(std::size_t(v) - 1, c)) fail(rd.lineno, "duplicate row index");
            m.set(std::size_t(v) - 1, c);
            ++nonzero;
        }
        if (nonzero != std::size_t(col_wts[c]))
            fail(rd.lineno, "column weight disagrees with declared weight");
    }
    for (std::size_t row = 0; row < r; ++row) {
        auto idx = rd.next_ints("row adjacency");
        if (idx.size() != max_row)
            fail(rd.lineno, "expected " + std::to_string(max_row) + " entries in row block");
        std::size_t nonzero = 0;
        for (auto v : idx) {
            if (v == 0) continue;
            if (v < 1 || std::size_t(v) > n) fail(rd.lineno, "column index out of range");
            if (!m.get(row, std::size_t(v) - 1))
                fail(rd.lineno, "row block disagrees with column block at row " +
                                    std::to_string(row + 1) + ", column " + std::to_string(v));
            ++nonzero;
        }
        if (nonzero != std::size_t(row_wts[row]))
            fail(rd.lineno, "row weight disagrees with declared weight");
        if (nonzero != m.row_weight(row))
            fail(rd.lineno, "row block misses entries present in column block");
    }
    return m;
}

BitMatrix alist_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("alist: cannot open " + path);
    return alist_read(in);
}

void alist_write(const BitMatrix& m, std::ostream& out) {
    const std::size_t r = m.rows(), n = m.cols();
    std::size_t max_col = 0, max_row = 0;
    std::vector<std::size_t> col_wts(n), row_wts(r);
    for (std::size_t c = 0; c < n; ++c) {
        col_wts[c] = m.column_weight(c);
        max_col = std::max(max_col, col_wts[c]);
    }
    for (std::size_t row = 0; row < r; ++row) {
        row_wts[row] = m.row_weight(row);
        max_row = std::max(max_row, row_wts[row]);
    }

    auto emit_row = [&out](const std::vector<std::size_t>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out << (i ? " " : "") << vals[i];
        out << "\n";
    };

    out << n << " " << r << "\n";
    out << max_col << " " << max_row << "\n";
    emit_row(col_wts);
    emit_row(row_wts);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t row = 0; row < r; ++row)
            if (m.get(row, c)) idx.push_back(row + 1);
        idx.resize(max_col, 0);
        emit_row(idx);
    }
    for (std::size_t row = 0; row < r; ++row) {
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(row, c)) idx.push_back(c + 1);
        idx.resize(max_row, 0);
        emit_row(idx);
    }
    if (!out) throw std::runtime_error("alist: write failed");
}

void alist_write_file(const BitMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("alist: cannot open " + path + " for writing");
    alist_write(m, out);
}

std::string alist_to_string(const BitMatrix& m) {
    std::ostringstream oss;
    alist_write(m, oss);
    return oss.str();
}

} // namespace ldpcdist
