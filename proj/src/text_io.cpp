#include "reconf/text_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace reconf {

namespace {

void expect_header(std::istream& in, int& rows, int& cols) {
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw std::runtime_error("matrix read: bad header line");
}

double parse_entry(const std::string& tok) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::runtime_error("matrix read: bad entry '" + tok + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const Eigen::MatrixXi& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_distance_matrix(std::ostream& out,
                           const NeighborDistanceMatrix& d) {
    const int n = d.n();
    out << n << ' ' << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            if (i != j && d.has(i, j))
                out << format_double(d.edge_distance(i, j));
            else if (i == j)
                out << 0;
            else
                out << "inf";
        }
        out << '\n';
    }
}

Eigen::MatrixXd read_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    expect_header(in, rows, cols);
    Eigen::MatrixXd m(rows, cols);
    std::string tok;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!(in >> tok)) throw std::runtime_error("matrix read: truncated");
            m(i, j) = parse_entry(tok);
        }
    return m;
}

Eigen::MatrixXi read_int_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    expect_header(in, rows, cols);
    Eigen::MatrixXi m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(in >> m(i, j)))
                throw std::runtime_error("matrix read: truncated");
    return m;
}

NeighborDistanceMatrix read_distance_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    expect_header(in, rows, cols);
    if (rows != cols)
        throw std::runtime_error("distance matrix read: must be square");
    NeighborDistanceMatrix d(rows);
    std::string tok;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!(in >> tok))
                throw std::runtime_error("distance matrix read: truncated");
            if (tok == "inf") continue;
            const double v = parse_entry(tok);
            if (i == j) {
                if (v != 0.0)
                    throw std::runtime_error(
                        "distance matrix read: nonzero diagonal");
                continue;
            }
            if (i < j) d.set(i, j, v);
            else if (!d.has(i, j) || d.edge_distance(i, j) != v)
                throw std::runtime_error("distance matrix read: asymmetric");
        }
    return d;
}

void write_edge_list(std::ostream& out, const Topology& t) {
    for (auto [i, j] : t.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

Topology read_edge_list(std::istream& in, int n) {
    std::vector<EdgePair> edges;
    int i = 0, j = 0;
    while (in >> i >> j) edges.push_back({i - 1, j - 1});
    if (!in.eof() && in.fail() && !in.bad()) {
        in.clear();
        std::string rest;
        if (in >> rest) throw std::runtime_error("edge list read: bad token");
    }
    return Topology(n, std::move(edges));
}

void write_formation(std::ostream& out,
                     const std::vector<Eigen::Vector3d>& points) {
    for (const auto& p : points)
        out << format_double(p.x()) << ' ' << format_double(p.y()) << ' '
            << format_double(p.z()) << '\n';
}

std::vector<Eigen::Vector3d> read_formation(std::istream& in) {
    std::vector<Eigen::Vector3d> points;
    std::string sx, sy, sz;
    while (in >> sx >> sy >> sz)
        points.emplace_back(parse_entry(sx), parse_entry(sy), parse_entry(sz));
    return points;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    f << contents;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for read: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace reconf
