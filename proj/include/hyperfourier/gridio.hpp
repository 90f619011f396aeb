#pragma once

// Grid files.
//
// Binary layout, little-endian:
//   magic "QF2D" | "ST4D"     4 bytes
//   version                   u32 (= 1)
//   sizes                     u32 x rank   (QF2D: M, N; ST4D: T, X, Y, Z)
//   spacings                  f64 x rank
//   element width             u32          (QF2D: 4 reals; ST4D: 16 reals)
//   payload                   f64 x product(sizes) x width
//
// QF2D samples are (r, i, j, k) in index order y * M + x. ST4D samples are
// Cl(3,1) coefficients in blade bitmask order (e1, e2, e3, e0 = bits 0..3),
// t-major. Every writer goes through a temporary file and a rename.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperfourier/field2d.hpp"
#include "hyperfourier/spacetime.hpp"

namespace hyperfourier {

enum class GridKind { QF2D, ST4D };

struct GridFileHeader {
  GridKind kind = GridKind::QF2D;
  std::uint32_t version = 1;
  std::vector<std::uint32_t> sizes;
  std::vector<double> spacings;
  std::uint32_t width = 4;

  std::size_t rank() const { return kind == GridKind::QF2D ? 2 : 4; }
  std::size_t element_count() const;
};

struct GridFile {
  GridFileHeader header;
  std::vector<double> payload;
};

/// Throws PreconditionError when the header and payload disagree, IoError on I/O failure.
void write_grid_file(const std::string& path, const GridFile& file);
/// Throws ParseError (byte offset) on malformed content, IoError when unreadable.
GridFile read_grid_file(const std::string& path);
/// Reads the magic only; throws ParseError for unknown magic.
GridKind peek_grid_kind(const std::string& path);

/// Writes `contents` to `path` via a temporary sibling file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

GridFile to_grid_file(std::size_t M, std::size_t N, double dx, double dy, std::span<const Quaternion> data);
GridFile to_grid_file(const SpacetimeField4D::Dims& dims, const SpacetimeField4D::Spacings& spacing,
                      std::span<const Multivector> data);

template <class Tag>
void write_qf2d(const std::string& path, const QuaternionGrid2D<Tag>& g) {
  write_grid_file(path, to_grid_file(g.M(), g.N(), g.dx(), g.dy(), g.data()));
}

template <class Tag>
void write_st4d(const std::string& path, const SpacetimeGrid4D<Tag>& g) {
  write_grid_file(path, to_grid_file(g.dims(), g.spacing(), g.data()));
}

/// Throws ParseError when the file is not QF2D.
QuaternionField2D quaternion_grid_from_file(const GridFile& file);
/// Throws ParseError when the file is not ST4D.
SpacetimeField4D spacetime_grid_from_file(const GridFile& file);

template <class Tag = FieldTag>
QuaternionGrid2D<Tag> read_qf2d(const std::string& path) {
  QuaternionField2D f = quaternion_grid_from_file(read_grid_file(path));
  return QuaternionGrid2D<Tag>(f.M(), f.N(), f.values(), f.dx(), f.dy());
}

template <class Tag = FieldTag>
SpacetimeGrid4D<Tag> read_st4d(const std::string& path) {
  SpacetimeField4D f = spacetime_grid_from_file(read_grid_file(path));
  return SpacetimeGrid4D<Tag>(f.dims(), {f.data().begin(), f.data().end()}, f.spacing());
}

// CSV rows "x,y,r,i,j,k" with an optional header line of exactly those names.
// Every (x, y) of the bounding grid must appear once; values print with %.17g
// so a write/read cycle is bit-exact.
std::string format_csv(std::size_t M, std::size_t N, std::span<const Quaternion> data);
/// Throws ParseError (1-based line) for malformed rows, duplicates or holes.
QuaternionField2D parse_csv(const std::string& text);
QuaternionField2D read_csv(const std::string& path);

template <class Tag>
void write_csv(const std::string& path, const QuaternionGrid2D<Tag>& g) {
  write_file_atomic(path, format_csv(g.M(), g.N(), g.data()));
}

/// "x,y,magnitude" rows for external plotting.
std::string format_magnitude_csv(std::size_t M, std::size_t N, std::span<const Quaternion> data);

template <class Tag>
void write_magnitude_csv(const std::string& path, const QuaternionGrid2D<Tag>& g) {
  write_file_atomic(path, format_magnitude_csv(g.M(), g.N(), g.data()));
}

/// 8-bit RGB PPM (P6 or P3). Pixel (R, G, B) / maxval becomes 0 + R i + G j + B k.
/// Throws ParseError (byte offset) for malformed images.
QuaternionField2D parse_ppm(const std::string& bytes);
QuaternionField2D read_ppm(const std::string& path);

/// Whole file as bytes; throws IoError.
std::string read_file(const std::string& path);

}  // namespace hyperfourier
