#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "chunkph/boundary_matrix.hpp"
#include "chunkph/builders.hpp"
#include "chunkph/pairing.hpp"

namespace chunkph {

// Malformed input; what() carries "<source>:<line>: <reason>".
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& source, std::size_t line, const std::string& reason);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input whose content violates a semantic invariant (e.g. a
// parsed matrix that fails validate()).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Boundary-matrix text format:
//   # chunkph-bm v1 n=<n> orientation=<homology|cohomology>
//   <dim> <k> <i_1> ... <i_k>        (one line per column, 1-based rows)
// The parsed matrix must pass validate(); violations raise std::runtime_error.
boundary_matrix read_matrix(std::istream& in, const std::string& source = "<stream>");
boundary_matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const boundary_matrix& m);
void write_matrix_file(const boundary_matrix& m, const std::string& path);
std::string matrix_to_string(const boundary_matrix& m);

// Pairs text format:
//   # chunkph-pairs v1 n=<n>
//   <i> <j>            for a pair
//   <i> essential      for an essential index
// Lines ascending in the first index.
persistence_pairing read_pairs(std::istream& in, const std::string& source = "<stream>");
persistence_pairing read_pairs_file(const std::string& path);
void write_pairs(std::ostream& out, const persistence_pairing& p);
void write_pairs_file(const persistence_pairing& p, const std::string& path);
std::string pairs_to_string(const persistence_pairing& p);

// Image text format: dimension count, extents, then all values row-major:
//   <d>
//   <e_1> ... <e_d>
//   <v_1> ... <v_p>
grayscale_image read_image(std::istream& in, const std::string& source = "<stream>");
grayscale_image read_image_file(const std::string& path);
void write_image(std::ostream& out, const grayscale_image& img);
void write_image_file(const grayscale_image& img, const std::string& path);

// Point cloud CSV: one point per line, comma-separated coordinates.
point_cloud read_point_cloud(std::istream& in, const std::string& source = "<stream>");
point_cloud read_point_cloud_file(const std::string& path);
void write_point_cloud(std::ostream& out, const point_cloud& pc);
void write_point_cloud_file(const point_cloud& pc, const std::string& path);

// Per-column filtration values (the lower-star chunk labels):
//   # chunkph-values v1 n=<n>
//   <v>                (one line per column)
std::vector<double> read_values(std::istream& in, const std::string& source = "<stream>");
std::vector<double> read_values_file(const std::string& path);
void write_values(std::ostream& out, const std::vector<double>& values);
void write_values_file(const std::vector<double>& values, const std::string& path);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_value(double v);

// FNV-1a 64-bit digest of a byte string; used to fingerprint pairs files.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace chunkph
