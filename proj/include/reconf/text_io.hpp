#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "reconf/laplacian.hpp"
#include "reconf/topology.hpp"

namespace reconf {

/// Plain-text matrix exchange: header line "rows cols", then row-major
/// whitespace-separated entries. Absent distance entries are written as the
/// literal string "inf".

std::string format_double(double v);  // shortest round-trip representation

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);
void write_matrix(std::ostream& out, const Eigen::MatrixXi& m);
void write_distance_matrix(std::ostream& out, const NeighborDistanceMatrix& d);

Eigen::MatrixXd read_matrix(std::istream& in);
Eigen::MatrixXi read_int_matrix(std::istream& in);
NeighborDistanceMatrix read_distance_matrix(std::istream& in);

/// Edge list exchange: one "i j" pair per line, 1-indexed. The vertex count
/// is supplied by the caller (an edge list alone cannot carry trailing
/// isolated vertices).
void write_edge_list(std::ostream& out, const Topology& t);
Topology read_edge_list(std::istream& in, int n);

/// Formation exchange: one "x y z" line per robot, meters, robot order.
void write_formation(std::ostream& out,
                     const std::vector<Eigen::Vector3d>& points);
std::vector<Eigen::Vector3d> read_formation(std::istream& in);

// File-path conveniences; throw std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace reconf
