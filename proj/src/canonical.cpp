#include "bmt/canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace bmt {

namespace {

using Block = std::vector<std::uint64_t>;

// Bits [lo, lo + len) of a set, packed from bit 0.
Block extract(const PointSet& s, std::size_t lo, std::size_t len) {
  Block out((len + 63) / 64, 0);
  const auto& w = s.words();
  if (len >= 64) {
    // lo is a multiple of len, hence word aligned.
    std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(lo / 64), out.size(), out.begin());
  } else {
    out[0] = (w[lo / 64] >> (lo % 64)) & ((std::uint64_t{1} << len) - 1);
  }
  return out;
}

// +1 if a is better (holds the first differing bit), -1 if worse, 0 if equal.
int compare_blocks(const Block& a, const Block& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t d = a[i] ^ b[i];
    if (d) return ((a[i] >> __builtin_ctzll(d)) & 1u) ? 1 : -1;
  }
  return 0;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Point{0}); }
  Point find(Point x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Point> parent_;
};

// Dense (or very sparse) sets with trivial automorphism group are the worst
// case: every ordered basis of a subspace inside E ties on the prefix.
// TODO: carry GL(V_k) cosets symbolically while the prefix subspace lies
// inside E or its complement, so such ties collapse into one branch.
class MinImageSearch {
 public:
  explicit MinImageSearch(const Matroid& M) : n_(M.dim), top_(Point{1} << M.dim), E_(M.points), cur_(M.dim) {}

  CanonicalForm run() {
    img_.push_back(0);
    dfs(0);
    LinearMap h{n_, n_, best_h_};
    return {Matroid(n_, best_), h.inverse()};
  }

 private:
  static constexpr int kContinue = INT_MAX;

  // Compare the current path's canonical bits with the best leaf on [1, 2^k).
  int compare_prefix(int k) const {
    if (!have_best_) return 1;
    const std::size_t len = std::size_t{1} << k;
    return compare_blocks(extract(cur_, 0, len), extract(best_, 0, len));
  }

  Block block_for(Point t) const {
    const std::size_t len = img_.size();
    Block b((len + 63) / 64, 0);
    for (std::size_t q = 0; q < len; ++q)
      if (E_.test(t ^ img_[q])) b[q >> 6] |= std::uint64_t{1} << (q & 63);
    return b;
  }

  UnionFind orbits_fixing_path() const {
    UnionFind uf(top_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (Point p : h_)
        if (g[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (Point p = 1; p < top_; ++p) uf.unite(p, g[p]);
    }
    return uf;
  }

  int leaf() {
    const int c = compare_prefix(n_);
    if (c > 0) {
      best_ = cur_;
      best_h_ = h_;
      have_best_ = true;
      return kContinue;
    }
    if (c < 0) return kContinue;
    // Equal leaf: sigma = h . best_h^{-1} is an automorphism of E.
    const LinearMap from_best = compose(LinearMap{n_, n_, h_}, LinearMap{n_, n_, best_h_}.inverse());
    std::vector<Point> table(top_);
    for (Point p = 0; p < top_; ++p) table[p] = from_best(p);
    gens_.push_back(std::move(table));
    int d = 0;
    while (h_[static_cast<std::size_t>(d)] == best_h_[static_cast<std::size_t>(d)]) ++d;
    // The subtree below the divergence node is the sigma-image of one that
    // has already been searched.
    return d;
  }

  int dfs(int k) {
    if (k == n_) return leaf();
    if (compare_prefix(k) < 0) return kContinue;

    struct Cand {
      Point t;
      Block block;
    };
    const std::size_t len = img_.size();
    // With a best leaf whose prefix ties ours, only candidates whose block is
    // at least as good as the best one's matter; most lose within one word.
    const bool tied = have_best_ && compare_prefix(k) == 0;
    const Block target = tied ? extract(best_, len, len) : Block{};
    std::vector<Cand> cands;
    PointSet span(n_);
    for (Point q : img_) span.set(q);
    for (Point t = 1; t < top_; ++t) {
      if (span.test(t)) continue;
      if (!tied) {
        cands.push_back({t, block_for(t)});
        continue;
      }
      Block b((len + 63) / 64, 0);
      int cmp = 0;
      for (std::size_t w = 0; w < b.size() && cmp == 0; ++w) {
        const std::size_t hi = std::min(len, 64 * w + 64);
        for (std::size_t q = 64 * w; q < hi; ++q)
          if (E_.test(t ^ img_[q])) b[w] |= std::uint64_t{1} << (q & 63);
        const std::uint64_t d = b[w] ^ target[w];
        if (d) cmp = ((b[w] >> __builtin_ctzll(d)) & 1u) ? 1 : -1;
      }
      if (cmp < 0) continue;
      if (cmp > 0) b = block_for(t);
      cands.push_back({t, std::move(b)});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return compare_blocks(a.block, b.block) > 0; });

    std::vector<Point> explored;
    std::size_t gens_seen = gens_.size();
    UnionFind uf = orbits_fixing_path();

    for (const Cand& c : cands) {
      if (have_best_) {
        const int pc = compare_prefix(k);
        if (pc < 0) return kContinue;
        if (pc == 0 && compare_blocks(c.block, extract(best_, len, len)) < 0) break;
      }
      if (gens_.size() != gens_seen) {
        uf = orbits_fixing_path();
        gens_seen = gens_.size();
      }
      const Point root = uf.find(c.t);
      if (std::any_of(explored.begin(), explored.end(), [&](Point e) { return uf.find(e) == root; })) continue;
      explored.push_back(c.t);

      h_.push_back(c.t);
      for (std::size_t q = 0; q < len; ++q) {
        img_.push_back(c.t ^ img_[q]);
        cur_.assign(static_cast<Point>(len + q), (c.block[q >> 6] >> (q & 63)) & 1u);
      }
      const int jump = dfs(k + 1);
      img_.resize(len);
      h_.pop_back();
      for (std::size_t q = 0; q < len; ++q) cur_.reset(static_cast<Point>(len + q));
      if (jump < k) return jump;
    }
    return kContinue;
  }

  int n_;
  Point top_;
  const PointSet& E_;
  std::vector<Point> h_;
  std::vector<Point> img_;
  PointSet cur_;
  PointSet best_;
  std::vector<Point> best_h_;
  bool have_best_ = false;
  std::vector<std::vector<Point>> gens_;
};

}  // namespace

CanonicalForm canonical_form(const Matroid& M) {
  const std::size_t sz = M.size();
  if (sz == 0 || sz + 1 == M.points.universe()) return {M, LinearMap::identity(M.dim)};
  return MinImageSearch(M).run();
}

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.dim != b.dim || a.size() != b.size()) return false;
  return canonical_form(a).matroid == canonical_form(b).matroid;
}

}  // namespace bmt
