#include <charconv>
#include <fstream>
#include <sstream>

#include "bmt/errors.hpp"
#include "bmt/matroid.hpp"

namespace bmt {

namespace {

constexpr std::string_view kMagic = "BMAT1 dim=";

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FormatError(std::string("BMAT: bad ") + what + " '" + std::string(s) + "'");
  return v;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Matroid parse_bmat(std::string_view text) {
  const auto nl1 = text.find('\n');
  if (nl1 == std::string_view::npos) throw FormatError("BMAT: missing header line");
  std::string_view header = text.substr(0, nl1);
  if (header.substr(0, kMagic.size()) != kMagic) throw FormatError("BMAT: malformed header");
  const int n = parse_int(header.substr(kMagic.size()), "dimension");
  if (n < 1 || n > kMaxDim) throw FormatError("BMAT: dimension out of range");

  std::string_view rest = text.substr(nl1 + 1);
  const auto nl2 = rest.find('\n');
  if (nl2 == std::string_view::npos) throw FormatError("BMAT: body line must end with a newline");
  std::string_view body = rest.substr(0, nl2);
  for (char c : rest.substr(nl2 + 1))
    if (c != '\n' && c != ' ' && c != '\r' && c != '\t') throw FormatError("BMAT: trailing content");
  if (!body.empty() && body.back() == '\r') body.remove_suffix(1);

  PointSet E(n);
  const std::size_t universe = E.universe();
  if (body.substr(0, 7) == "points=") {
    std::string_view list = body.substr(7);
    std::size_t i = 0;
    while (i < list.size()) {
      if (list[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = list.find(' ', i);
      if (j == std::string_view::npos) j = list.size();
      const long long p = parse_int(list.substr(i, j - i), "point");
      if (p == 0) throw FormatError("BMAT: zero is not a point");
      if (p < 0 || static_cast<std::size_t>(p) >= universe) throw FormatError("BMAT: point out of range");
      if (E.test(static_cast<Point>(p))) throw FormatError("BMAT: duplicate point " + std::to_string(p));
      E.set(static_cast<Point>(p));
      i = j;
    }
  } else if (body.substr(0, 5) == "bits=") {
    std::string_view hex = body.substr(5);
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const int v = hex_value(hex[k]);
      if (v < 0) throw FormatError("BMAT: bad hex digit");
      for (int b = 0; b < 4; ++b) {
        if (!((v >> b) & 1)) continue;
        const std::size_t idx = 4 * k + static_cast<std::size_t>(b);
        if (idx == 0) throw FormatError("BMAT: zero is not a point");
        if (idx >= universe) throw FormatError("BMAT: point out of range");
        E.set(static_cast<Point>(idx));
      }
    }
  } else {
    throw FormatError("BMAT: expected 'points=' or 'bits='");
  }
  return Matroid(n, std::move(E));
}

std::string serialize_bmat(const Matroid& M) {
  std::string out = std::string(kMagic) + std::to_string(M.dim) + "\npoints=";
  bool first = true;
  M.points.for_each([&](Point p) {
    if (!first) out += ' ';
    out += std::to_string(p);
    first = false;
  });
  out += '\n';
  return out;
}

std::string serialize_bmat_bits(const Matroid& M) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::string(kMagic) + std::to_string(M.dim) + "\nbits=";
  const std::size_t nibbles = (M.points.universe() + 3) / 4;
  for (std::size_t k = 0; k < nibbles; ++k) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t idx = 4 * k + static_cast<std::size_t>(b);
      if (idx < M.points.universe() && M.points.test(static_cast<Point>(idx))) v |= 1 << b;
    }
    out += kHex[v];
  }
  out += '\n';
  return out;
}

Matroid read_bmat_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bmat(ss.str());
}

void write_bmat_file(const std::string& path, const Matroid& M) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << serialize_bmat(M);
}

}  // namespace bmt
