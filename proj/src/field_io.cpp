#include "nsalpha/field_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace nsalpha {

namespace {

constexpr char kMagic[4] = {'A', 'F', 'L', 'D'};
constexpr std::uint32_t kFlagMeanZero = 1u;
constexpr std::uint32_t kFlagDivergenceFree = 2u;

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

// Shortest round-trip decimal; locale-free and deterministic.
std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_afld(const SpectralField& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_afld: cannot open " + path);
  os.write(kMagic, 4);
  put_u32(os, kAfldVersion);
  put_u32(os, static_cast<std::uint32_t>(f.dim()));
  put_u32(os, static_cast<std::uint32_t>(f.n_components()));
  for (int a = 0; a < f.dim(); ++a) put_u32(os, static_cast<std::uint32_t>(f.shape()[a]));
  put_f64(os, f.box_length());
  std::uint32_t flags = 0;
  if (f.mean_zero()) flags |= kFlagMeanZero;
  if (f.divergence_free()) flags |= kFlagDivergenceFree;
  put_u32(os, flags);
  const ArrayXXr& v = f.values();
  for (int c = 0; c < f.n_components(); ++c)
    for (Index p = 0; p < f.n_points(); ++p) put_f64(os, v(p, c));
  if (!os) throw std::runtime_error("write_afld: short write to " + path);
}

SpectralField read_afld(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_afld: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_afld: bad magic in " + path);
  const std::uint32_t version = get_u32(is);
  if (version != kAfldVersion) throw std::runtime_error("read_afld: unsupported version");
  const int dim = static_cast<int>(get_u32(is));
  const int nc = static_cast<int>(get_u32(is));
  std::array<int, 3> shape = {1, 1, 1};
  for (int a = 0; a < dim; ++a) shape[a] = static_cast<int>(get_u32(is));
  const double box_length = get_f64(is);
  const std::uint32_t flags = get_u32(is);
  if (!is) throw std::runtime_error("read_afld: truncated header in " + path);

  SpectralField f(dim, nc, shape, box_length);
  ArrayXXr& v = f.values_mut();
  for (int c = 0; c < nc; ++c)
    for (Index p = 0; p < f.n_points(); ++p) v(p, c) = get_f64(is);
  if (!is) throw std::runtime_error("read_afld: truncated data in " + path);
  f.set_mean_zero(flags & kFlagMeanZero);
  f.set_divergence_free(flags & kFlagDivergenceFree);
  return f;
}

void write_csv(const SpectralField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path);
  os << "x0,x1";
  if (f.dim() > 2) os << ",x2";
  for (int c = 0; c < f.n_components(); ++c) os << ",v" << c;
  os << "\n";
  const ArrayXXr& v = f.values();
  for (Index p = 0; p < f.n_points(); ++p) {
    const Vec3 x = f.point(p);
    os << format_double(x[0]) << ',' << format_double(x[1]);
    if (f.dim() > 2) os << ',' << format_double(x[2]);
    for (int c = 0; c < f.n_components(); ++c) os << ',' << format_double(v(p, c));
    os << "\n";
  }
}

}  // namespace nsalpha
