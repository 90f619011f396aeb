#include "hyperfourier/gridio.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hyperfourier/errors.hpp"

namespace hyperfourier {

namespace {

constexpr std::uint32_t kFormatVersion = 1;

const char* magic_of(GridKind kind) { return kind == GridKind::QF2D ? "QF2D" : "ST4D"; }
std::uint32_t width_of(GridKind kind) { return kind == GridKind::QF2D ? 4 : 16; }

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xffu));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xffu));
}

class ByteReader {
 public:
  explicit ByteReader(const std::string& bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + b])) << (8 * b);
    pos_ += 4;
    return v;
  }

  double f64(const char* what) {
    need(8, what);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + b])) << (8 * b);
    pos_ += 8;
    return std::bit_cast<double>(v);
  }

  std::string raw(std::size_t n, const char* what) {
    need(n, what);
    std::string s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  void need(std::size_t n, const char* what) const {
    if (remaining() < n) throw ParseError(std::string("truncated grid file: missing ") + what, pos_);
  }

  const std::string& bytes_;
  std::size_t pos_ = 0;
};

GridKind kind_from_magic(const std::string& magic) {
  if (magic == "QF2D") return GridKind::QF2D;
  if (magic == "ST4D") return GridKind::ST4D;
  throw ParseError("unknown grid file magic '" + magic + "'", 0);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::size_t GridFileHeader::element_count() const {
  std::size_t n = 1;
  for (std::uint32_t s : sizes) n *= s;
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return bytes;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
  }
}

void write_grid_file(const std::string& path, const GridFile& file) {
  const GridFileHeader& h = file.header;
  if (h.sizes.size() != h.rank() || h.spacings.size() != h.rank()) {
    throw PreconditionError("grid header rank does not match its kind");
  }
  if (h.width != width_of(h.kind)) throw PreconditionError("grid header element width does not match its kind");
  for (std::uint32_t s : h.sizes) {
    if (s == 0) throw PreconditionError("grid sizes must be positive");
  }
  if (file.payload.size() != h.element_count() * h.width) {
    throw PreconditionError("grid payload length does not match the header");
  }
  std::string out(magic_of(h.kind), 4);
  put_u32(out, h.version);
  for (std::uint32_t s : h.sizes) put_u32(out, s);
  for (double d : h.spacings) put_f64(out, d);
  put_u32(out, h.width);
  out.reserve(out.size() + 8 * file.payload.size());
  for (double v : file.payload) put_f64(out, v);
  write_file_atomic(path, out);
}

GridFile read_grid_file(const std::string& path) {
  const std::string bytes = read_file(path);
  ByteReader r(bytes);
  GridFile file;
  GridFileHeader& h = file.header;
  h.kind = kind_from_magic(r.raw(4, "magic"));
  const std::size_t version_at = r.offset();
  h.version = r.u32("version");
  if (h.version != kFormatVersion) {
    throw ParseError("unsupported grid file version " + std::to_string(h.version), version_at);
  }
  for (std::size_t a = 0; a < h.rank(); ++a) {
    const std::size_t at = r.offset();
    h.sizes.push_back(r.u32("sizes"));
    if (h.sizes.back() == 0) throw ParseError("grid size must be positive", at);
  }
  for (std::size_t a = 0; a < h.rank(); ++a) {
    const std::size_t at = r.offset();
    h.spacings.push_back(r.f64("spacings"));
    if (!(h.spacings.back() > 0.0) || !std::isfinite(h.spacings.back())) {
      throw ParseError("grid spacing must be positive and finite", at);
    }
  }
  const std::size_t width_at = r.offset();
  h.width = r.u32("element width");
  if (h.width != width_of(h.kind)) {
    throw ParseError("element width " + std::to_string(h.width) + " does not match " + magic_of(h.kind), width_at);
  }
  const std::size_t expected = h.element_count() * h.width;
  if (r.remaining() != 8 * expected) {
    throw ParseError("payload holds " + std::to_string(r.remaining()) + " bytes, header implies " +
                         std::to_string(8 * expected),
                     r.offset());
  }
  file.payload.reserve(expected);
  for (std::size_t n = 0; n < expected; ++n) file.payload.push_back(r.f64("payload"));
  return file;
}

GridKind peek_grid_kind(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string magic(4, '\0');
  in.read(magic.data(), 4);
  if (in.gcount() != 4) throw ParseError("file too short for a grid magic", static_cast<std::size_t>(in.gcount()));
  return kind_from_magic(magic);
}

GridFile to_grid_file(std::size_t M, std::size_t N, double dx, double dy, std::span<const Quaternion> data) {
  GridFile f;
  f.header.kind = GridKind::QF2D;
  f.header.sizes = {static_cast<std::uint32_t>(M), static_cast<std::uint32_t>(N)};
  f.header.spacings = {dx, dy};
  f.header.width = 4;
  f.payload.reserve(4 * data.size());
  for (const Quaternion& q : data) f.payload.insert(f.payload.end(), {q.r, q.i, q.j, q.k});
  return f;
}

GridFile to_grid_file(const SpacetimeField4D::Dims& dims, const SpacetimeField4D::Spacings& spacing,
                      std::span<const Multivector> data) {
  GridFile f;
  f.header.kind = GridKind::ST4D;
  for (std::size_t a = 0; a < 4; ++a) f.header.sizes.push_back(static_cast<std::uint32_t>(dims[a]));
  f.header.spacings.assign(spacing.begin(), spacing.end());
  f.header.width = 16;
  f.payload.reserve(16 * data.size());
  for (const Multivector& mv : data) {
    for (unsigned b = 0; b < 16; ++b) f.payload.push_back(mv[b]);
  }
  return f;
}

QuaternionField2D quaternion_grid_from_file(const GridFile& file) {
  const GridFileHeader& h = file.header;
  if (h.kind != GridKind::QF2D) throw ParseError("expected a QF2D file, found ST4D", 0);
  std::vector<Quaternion> data(h.element_count());
  for (std::size_t n = 0; n < data.size(); ++n) {
    const double* p = &file.payload[4 * n];
    data[n] = {p[0], p[1], p[2], p[3]};
  }
  return QuaternionField2D(h.sizes[0], h.sizes[1], std::move(data), h.spacings[0], h.spacings[1]);
}

SpacetimeField4D spacetime_grid_from_file(const GridFile& file) {
  const GridFileHeader& h = file.header;
  if (h.kind != GridKind::ST4D) throw ParseError("expected an ST4D file, found QF2D", 0);
  std::vector<Multivector> data(h.element_count(), Multivector(sta::signature()));
  for (std::size_t n = 0; n < data.size(); ++n) {
    for (unsigned b = 0; b < 16; ++b) data[n][b] = file.payload[16 * n + b];
  }
  return SpacetimeField4D({h.sizes[0], h.sizes[1], h.sizes[2], h.sizes[3]}, std::move(data),
                          {h.spacings[0], h.spacings[1], h.spacings[2], h.spacings[3]});
}

std::string format_csv(std::size_t M, std::size_t N, std::span<const Quaternion> data) {
  if (data.size() != M * N) throw PreconditionError("format_csv: data length must equal M * N");
  std::string out = "x,y,r,i,j,k\n";
  for (std::size_t y = 0; y < N; ++y) {
    for (std::size_t x = 0; x < M; ++x) {
      const Quaternion& q = data[y * M + x];
      out += std::to_string(x) + "," + std::to_string(y) + "," + format_number(q.r) + "," + format_number(q.i) + "," +
             format_number(q.j) + "," + format_number(q.k) + "\n";
    }
  }
  return out;
}

std::string format_magnitude_csv(std::size_t M, std::size_t N, std::span<const Quaternion> data) {
  if (data.size() != M * N) throw PreconditionError("format_magnitude_csv: data length must equal M * N");
  std::string out = "x,y,magnitude\n";
  for (std::size_t y = 0; y < N; ++y) {
    for (std::size_t x = 0; x < M; ++x) {
      out += std::to_string(x) + "," + std::to_string(y) + "," + format_number(norm(data[y * M + x])) + "\n";
    }
  }
  return out;
}

QuaternionField2D parse_csv(const std::string& text) {
  struct Row {
    std::size_t x, y;
    Quaternion q;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (first) {
      first = false;
      std::string compact;
      for (char c : t) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
      }
      if (compact == "x,y,r,i,j,k") continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) fields.push_back(trim(cell));
    if (!t.empty() && t.back() == ',') fields.emplace_back();
    if (fields.size() != 6) {
      throw ParseError("expected 6 comma-separated fields, found " + std::to_string(fields.size()), lineno);
    }
    std::size_t idx[2];
    for (int c = 0; c < 2; ++c) {
      const std::string& f = fields[c];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), idx[c]);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw ParseError("invalid grid index '" + f + "'", lineno);
      }
      if (idx[c] >= (std::size_t{1} << 31)) throw ParseError("grid index '" + f + "' is too large", lineno);
    }
    double v[4];
    for (int c = 0; c < 4; ++c) {
      const std::string& f = fields[2 + c];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v[c]);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() || !std::isfinite(v[c])) {
        throw ParseError("invalid value '" + f + "'", lineno);
      }
    }
    rows.push_back({idx[0], idx[1], {v[0], v[1], v[2], v[3]}, lineno});
  }
  if (rows.empty()) throw ParseError("CSV holds no data rows", lineno == 0 ? 1 : lineno);

  std::size_t M = 0, N = 0;
  for (const Row& r : rows) {
    M = std::max(M, r.x + 1);
    N = std::max(N, r.y + 1);
  }
  if (M * N > 4 * rows.size()) {
    throw ParseError("grid bounds " + std::to_string(M) + "x" + std::to_string(N) + " far exceed the " +
                         std::to_string(rows.size()) + " rows given",
                     rows.back().line);
  }
  QuaternionField2D f(M, N);
  std::vector<bool> seen(M * N, false);
  for (const Row& r : rows) {
    const std::size_t k = r.y * M + r.x;
    if (seen[k]) {
      throw ParseError("duplicate sample (" + std::to_string(r.x) + ", " + std::to_string(r.y) + ")", r.line);
    }
    seen[k] = true;
    f.at(r.x, r.y) = r.q;
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) {
      throw ParseError("missing sample (" + std::to_string(k % M) + ", " + std::to_string(k / M) + ") in a " +
                           std::to_string(M) + "x" + std::to_string(N) + " grid",
                       lineno);
    }
  }
  return f;
}

QuaternionField2D read_csv(const std::string& path) { return parse_csv(read_file(path)); }

QuaternionField2D parse_ppm(const std::string& bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      const auto c = static_cast<unsigned char>(bytes[pos]);
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  };
  std::size_t token_at = 0;
  auto read_int = [&](const char* what) {
    skip_space();
    const std::size_t at = token_at = pos;
    std::size_t v = 0;
    const auto res = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), v);
    if (res.ec != std::errc() || res.ptr == bytes.data() + pos) {
      throw ParseError(std::string("PPM: expected ") + what, at);
    }
    pos = static_cast<std::size_t>(res.ptr - bytes.data());
    return v;
  };

  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '6' && bytes[1] != '3')) {
    throw ParseError("PPM: expected magic P6 or P3", 0);
  }
  const bool binary = bytes[1] == '6';
  pos = 2;
  const std::size_t W = read_int("width");
  const std::size_t H = read_int("height");
  const std::size_t maxval = read_int("maxval");
  const std::size_t maxval_at = token_at;
  if (W == 0 || H == 0) throw ParseError("PPM: image dimensions must be positive", maxval_at);
  if (maxval == 0 || maxval > 255) throw ParseError("PPM: only 8-bit images (maxval 1..255) are supported", maxval_at);

  QuaternionField2D f(W, H);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (binary) {
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      throw ParseError("PPM: expected whitespace before pixel data", pos);
    }
    ++pos;
    if (bytes.size() - pos < 3 * W * H) throw ParseError("PPM: truncated pixel data", bytes.size());
    for (std::size_t y = 0; y < H; ++y) {
      for (std::size_t x = 0; x < W; ++x) {
        const std::size_t at = pos + 3 * (y * W + x);
        double c[3];
        for (int ch = 0; ch < 3; ++ch) {
          const auto v = static_cast<unsigned char>(bytes[at + ch]);
          if (v > maxval) throw ParseError("PPM: sample exceeds maxval", at + ch);
          c[ch] = v * scale;
        }
        f.at(x, y) = {0.0, c[0], c[1], c[2]};
      }
    }
  } else {
    for (std::size_t y = 0; y < H; ++y) {
      for (std::size_t x = 0; x < W; ++x) {
        double c[3];
        for (int ch = 0; ch < 3; ++ch) {
          const std::size_t v = read_int("pixel sample");
          if (v > maxval) throw ParseError("PPM: sample exceeds maxval", token_at);
          c[ch] = static_cast<double>(v) * scale;
        }
        f.at(x, y) = {0.0, c[0], c[1], c[2]};
      }
    }
  }
  return f;
}

QuaternionField2D read_ppm(const std::string& path) { return parse_ppm(read_file(path)); }

}  // namespace hyperfourier
