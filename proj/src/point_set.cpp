#include "bmt/point_set.hpp"

#include <stdexcept>

namespace bmt {

namespace {

// Masks selecting the lower half of each 2^b-bit block inside a word.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

std::uint64_t permute_word(std::uint64_t w, unsigned low) {
  for (int b = 0; b < 6; ++b) {
    if (low & (1u << b)) {
      const int s = 1 << b;
      w = ((w & kLowHalf[b]) << s) | ((w >> s) & kLowHalf[b]);
    }
  }
  return w;
}

std::uint64_t universe_mask(int dim) {
  return dim >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << dim)) - 1);
}

}  // namespace

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("PointSet: dimension out of range");
  const std::size_t bits = std::size_t{1} << dim;
  words_.assign((bits + 63) / 64, 0);
}

std::size_t PointSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool PointSet::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

Point PointSet::next(Point from) const {
  std::size_t idx = from;
  if (idx >= universe()) return 0;
  std::size_t w = idx >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (idx & 63));
  while (true) {
    if (bits) return static_cast<Point>((w << 6) | static_cast<std::size_t>(__builtin_ctzll(bits)));
    if (++w >= words_.size()) return 0;
    bits = words_[w];
  }
}

PointSet PointSet::translate(Point s) const {
  PointSet out(dim_);
  const unsigned low = s & 63u;
  const std::size_t high = s >> 6;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w ^ high] = permute_word(words_[w], low);
  }
  return out;
}

PointSet PointSet::complement() const {
  PointSet out(dim_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.words_.back() &= universe_mask(dim_);
  out.words_[0] &= ~std::uint64_t{1};
  return out;
}

PointSet& PointSet::operator&=(const PointSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}
PointSet& PointSet::operator|=(const PointSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}
PointSet& PointSet::operator^=(const PointSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}
PointSet& PointSet::subtract(const PointSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

void PointSet::clear_upto(Point p) {
  const std::size_t idx = p;
  const std::size_t full = (idx + 1) >> 6;
  for (std::size_t w = 0; w < full && w < words_.size(); ++w) words_[w] = 0;
  if (full < words_.size()) {
    const unsigned rem = (idx + 1) & 63;
    if (rem) words_[full] &= ~std::uint64_t{0} << rem;
  }
}

bool PointSet::intersects(const PointSet& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

bool PointSet::subset_of(const PointSet& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

std::vector<Point> PointSet::to_vector() const {
  std::vector<Point> out;
  out.reserve(count());
  for_each([&](Point p) { out.push_back(p); });
  return out;
}

PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
PointSet operator^(PointSet a, const PointSet& b) { return a ^= b; }

PointSet full_set(int dim) { return PointSet(dim).complement(); }

PointSet make_set(int dim, const std::vector<Point>& pts) {
  PointSet s(dim);
  for (Point p : pts) {
    if (p == 0 || p >= s.universe()) throw std::out_of_range("point out of range");
    s.set(p);
  }
  return s;
}

std::strong_ordering compare_point_lists(const PointSet& a, const PointSet& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const std::uint64_t diff = wa[w] ^ wb[w];
    if (!diff) continue;
    const int bit = __builtin_ctzll(diff);
    const Point i = static_cast<Point>((w << 6) | static_cast<std::size_t>(bit));
    const bool a_has = (wa[w] >> bit) & 1u;
    const PointSet& other = a_has ? b : a;
    // The set holding the first differing point is smaller unless the other
    // list ends there (then the other one is a proper prefix).
    const bool other_continues = other.next(i + 1) != 0;
    if (a_has) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace bmt
