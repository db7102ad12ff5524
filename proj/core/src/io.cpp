#include "krylovium/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "krylovium/errors.hpp"

namespace krylovium {

namespace {

std::vector<std::uint64_t> split_u64(const std::string& line, std::size_t lineno) {
    std::vector<std::uint64_t> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        if (*p == ' ') {
            ++p;
            continue;
        }
        std::uint64_t v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc() || (next < end && *next != ' '))
            throw ParseError("expected a nonnegative integer", lineno);
        out.push_back(v);
        p = next;
    }
    return out;
}

std::string read_line(std::istream& in, std::size_t lineno, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("missing ") + what, lineno);
    if (!line.empty() && line.back() == '\r') throw ParseError("CR line ending (LF required)", lineno);
    return line;
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
    std::string header = read_line(in, 1, "header line \"p n m\"");
    std::vector<std::uint64_t> h = split_u64(header, 1);
    if (h.size() != 3) throw ParseError("header must be \"p n m\"", 1);
    if (!is_prime_u64(h[0]) || h[0] >= PrimeModulus::max_modulus)
        throw ParseError("p is not a supported prime", 1);
    PrimeModulus mod(h[0]);
    std::size_t n = static_cast<std::size_t>(h[1]), m = static_cast<std::size_t>(h[2]);
    DenseMatrix mat(n, m, mod);
    for (std::size_t i = 0; i < n; ++i) {
        std::string line = read_line(in, i + 2, "matrix row");
        std::vector<std::uint64_t> row = split_u64(line, i + 2);
        if (row.size() != m) throw ParseError("row has wrong number of entries", i + 2);
        for (std::size_t j = 0; j < m; ++j) {
            if (row[j] >= mod.value()) throw ParseError("entry not reduced mod p", i + 2);
            mat.set(i, j, row[j]);
        }
    }
    return mat;
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
    out << m.modulus().value() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

DenseMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix_file(const std::string& path, const DenseMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrix(out, m);
}

DegreeTuple read_tuple(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) line.clear();  // empty file = empty tuple
    if (!line.empty() && line.back() == '\r') throw ParseError("CR line ending (LF required)", 1);
    std::vector<std::uint64_t> vals = split_u64(line, 1);
    DegreeTuple d;
    d.values.reserve(vals.size());
    for (std::uint64_t v : vals) {
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError("order too large", 1);
        d.values.push_back(static_cast<std::int64_t>(v));
    }
    return d;
}

void write_tuple(std::ostream& out, const DegreeTuple& d) { out << d.to_string() << '\n'; }

DegreeTuple read_tuple_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_tuple(in);
}

std::string poly_to_line(const Poly& f) {
    std::ostringstream s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s << ' ';
        s << f.coeffs()[i];
    }
    return s.str();
}

}  // namespace krylovium
