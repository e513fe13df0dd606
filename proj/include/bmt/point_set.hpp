#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bmt {

/// Points of PG(n-1,2) are nonzero vectors of F_2^n encoded as integer
/// masks: bit i is the coefficient of e_{i+1}. Vector addition is XOR.
using Point = std::uint32_t;

/// Largest ambient dimension accepted anywhere in the library.
inline constexpr int kMaxDim = 16;

/// Dynamic bitset indexed by point mask over [0, 2^n). Bit 0 stands for the
/// zero vector; it is only ever set transiently (e.g. inside translates).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int dim);

  int dim() const { return dim_; }
  std::size_t universe() const { return std::size_t{1} << dim_; }

  bool test(Point p) const { return (words_[p >> 6] >> (p & 63)) & 1u; }
  void set(Point p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void reset(Point p) { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  void assign(Point p, bool v) { v ? set(p) : reset(p); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  /// Least set bit at index >= from, or 0 if there is none (0 is never a
  /// valid point, so it doubles as the end marker when bit 0 is clear).
  Point next(Point from) const;
  Point first() const { return next(1); }

  /// s XOR A = {s ^ a : a in A}, as a raw set over [0, 2^n) (may contain 0).
  PointSet translate(Point s) const;

  /// Every nonzero point not in the set.
  PointSet complement() const;

  PointSet& operator&=(const PointSet& o);
  PointSet& operator|=(const PointSet& o);
  PointSet& operator^=(const PointSet& o);
  /// this &= ~o
  PointSet& subtract(const PointSet& o);
  /// Clears every bit at index <= p.
  void clear_upto(Point p);

  bool intersects(const PointSet& o) const;
  bool subset_of(const PointSet& o) const;

  std::vector<Point> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<Point>((w << 6) | static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

PointSet operator&(PointSet a, const PointSet& b);
PointSet operator|(PointSet a, const PointSet& b);
PointSet operator^(PointSet a, const PointSet& b);

/// Set with all nonzero points of PG(dim-1,2).
PointSet full_set(int dim);

PointSet make_set(int dim, const std::vector<Point>& pts);

/// Order on equal-universe sets by their ascending sorted point lists; for
/// sets of equal size this is the lexicographic order of those lists.
std::strong_ordering compare_point_lists(const PointSet& a, const PointSet& b);

}  // namespace bmt
