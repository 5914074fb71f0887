#include "gomplab/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gomplab/errors.hpp"

namespace gomplab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(const std::string& path, const Matrix& matrix) {
    std::ofstream out(path);
    if (!out) throw Error("write_matrix: cannot open " + path);
    out << matrix.rows() << " " << matrix.cols() << "\n";
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            if (j) out << " ";
            out << format_double(matrix(i, j));
        }
        out << "\n";
    }
    if (!out) throw Error("write_matrix: write failed for " + path);
}

Matrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_matrix: cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing header line", 1, 1);
    std::istringstream hs(header);
    long rows = 0, cols = 0;
    if (!(hs >> rows >> cols) || rows < 1 || cols < 1)
        throw ParseError("header must be two positive integers", 1, 1);
    std::string tail;
    if (hs >> tail) throw ParseError("trailing tokens after header", 1, 1);

    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("unexpected end of file", static_cast<int>(i) + 2, 1);
        std::istringstream ls(line);
        for (long j = 0; j < cols; ++j) {
            double v;
            if (!(ls >> v))
                throw ParseError("expected a number", static_cast<int>(i) + 2,
                                 static_cast<int>(j) + 1);
            m(i, j) = v;
        }
        if (ls >> tail)
            throw ParseError("too many values on row", static_cast<int>(i) + 2,
                             static_cast<int>(cols) + 1);
    }
    return m;
}

} // namespace gomplab
