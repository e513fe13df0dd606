#include "bmt/census.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "bmt/canonical.hpp"
#include "bmt/certificate.hpp"
#include "bmt/constructions.hpp"
#include "bmt/decomposer.hpp"
#include "bmt/errors.hpp"

namespace bmt {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Matroid> canonicalize_all(const std::vector<Matroid>& in, int threads) {
  std::vector<Matroid> out(in.size());
  const auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < in.size(); i += stride) out[i] = canonical_form(in[i]).matroid;
  };
  const std::size_t t = static_cast<std::size_t>(std::max(1, threads));
  if (t == 1 || in.size() < 2) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < t; ++i) pool.emplace_back(work, i, t);
  for (auto& th : pool) th.join();
  return out;
}

struct PointListLess {
  bool operator()(const Matroid& a, const Matroid& b) const {
    if (a.dim != b.dim) return a.dim < b.dim;
    return compare_point_lists(a.points, b.points) < 0;
  }
};

using ClassSet = std::set<Matroid, PointListLess>;

ClassSet dedup(const std::vector<Matroid>& labeled, int threads) {
  ClassSet out;
  for (Matroid& m : canonicalize_all(labeled, threads)) out.insert(std::move(m));
  return out;
}

// Build states: the AI4 class is every alpha0/alpha1/beta1 sequence over a
// 1-dimensional base, optionally followed by one beta0 and then alpha steps
// only. State 1 records that beta0 has been used.
const std::vector<Step>& steps_for(CensusClass cls, int state) {
  static const std::vector<Step> affine{Step::Expand0, Step::Expand1};
  static const std::vector<Step> ai4_open{Step::Alpha0, Step::Alpha1, Step::Beta0, Step::Beta1};
  static const std::vector<Step> ai4_closed{Step::Alpha0, Step::Alpha1};
  if (cls == CensusClass::I4tfAffine) return affine;
  return state == 0 ? ai4_open : ai4_closed;
}

int next_state(Step s, int state) { return s == Step::Beta0 ? 1 : state; }

std::vector<Matroid> one_dim_bases() { return {Matroid::empty(1), Matroid(1, {1})}; }

void fill(CensusReport& r, const ClassSet& classes) {
  r.representatives.assign(classes.begin(), classes.end());
  r.iso_classes = r.representatives.size();
  r.full_rank_classes = static_cast<std::size_t>(
      std::count_if(r.representatives.begin(), r.representatives.end(), [](const Matroid& m) { return m.full_rank(); }));
}

std::string key_of(const Matroid& M, int state) {
  std::string k = std::to_string(M.dim) + ":" + std::to_string(state) + ":";
  for (auto w : M.points.words()) k += std::to_string(w) + ",";
  return k;
}

// Peels one alpha/beta step at a time, trying every hyperplane and every
// admissible new point. state 0: any step may be peeled; state 1: beta0 is no
// longer allowed (either one was peeled, or a beta1 sits above).
class NormalFormSearch {
 public:
  explicit NormalFormSearch(bool alpha_only) : alpha_only_(alpha_only) {}

  bool run(const Matroid& M, int state) {
    if (M.dim == 1) return true;
    const Matroid canon = canonical_form(M).matroid;
    const std::string key = key_of(canon, state);
    if (failed_.count(key)) return false;
    const int n = canon.dim;
    const PointSet& E = canon.points;
    const Point top = Point{1} << n;
    for (Point w = 1; w < top; ++w) {
      PointSet K = kernel_set(n, w);
      K.reset(0);
      const Flat H = kernel_flat(n, w);
      auto down = [&](PointSet inner, int next_state) {
        return run(induced_restriction(Matroid(n, std::move(inner)), H).matroid, next_state);
      };
      if (E.subset_of(K) && down(E, state)) return true;
      if (K.complement().subset_of(E) && down(E & K, state)) return true;
      if (alpha_only_) continue;
      if (state == 0 && E.any() && !E.intersects(K)) {
        for (Point x = E.first(); x != 0; x = E.next(x + 1)) {
          PointSet inner = E.translate(x);
          inner.reset(0);
          if (down(std::move(inner), 1)) return true;
        }
      }
      if (K.subset_of(E)) {
        PointSet rest = E;
        rest.subtract(K);
        for (Point x = rest.first(); x != 0; x = rest.next(x + 1)) {
          PointSet inner = rest.translate(x);
          inner.reset(0);
          if (down(std::move(inner), 1)) return true;
        }
      }
    }
    failed_.insert(key);
    return false;
  }

 private:
  bool alpha_only_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::string to_string(CensusClass c) {
  switch (c) {
    case CensusClass::I4tfNonaffine: return "i4tf_nonaffine";
    case CensusClass::I4tfAffine: return "i4tf_affine";
    case CensusClass::Ai4: return "ai4";
  }
  return "?";
}

CensusClass census_class_from_string(std::string_view s) {
  if (s == "i4tf_nonaffine") return CensusClass::I4tfNonaffine;
  if (s == "i4tf_affine") return CensusClass::I4tfAffine;
  if (s == "ai4") return CensusClass::Ai4;
  throw PreconditionError("unknown class '" + std::string(s) + "' (expected i4tf_nonaffine, i4tf_affine or ai4)");
}

CensusReport enumerate_generated(int dim, CensusClass cls, const CensusOptions& opts) {
  if (dim < 1 || dim > opts.max_dim || dim > kMaxDim)
    throw PreconditionError("enumerate: dimension " + std::to_string(dim) + " outside [1, " +
                            std::to_string(std::min(opts.max_dim, kMaxDim)) + "]");
  const auto t0 = Clock::now();
  CensusReport r;
  r.dim = dim;
  r.cls = cls;
  if (cls == CensusClass::I4tfNonaffine) {
    std::vector<Matroid> labeled;
    for (int m = 3; m + 1 <= dim; ++m) {
      Matroid M = sag(m);
      for (int k = 0; k < dim - 1 - m; ++k) M = doubled(M);
      labeled.push_back(std::move(M));
    }
    r.total_labeled = labeled.size();
    fill(r, dedup(labeled, opts.threads));
  } else {
    // A class reachable in several states keeps the least one, which allows
    // a superset of the continuations.
    std::map<Matroid, int, PointListLess> level;
    for (const Matroid& b : one_dim_bases()) level.emplace(b, 0);
    r.total_labeled = level.size();
    for (int d = 1; d < dim; ++d) {
      std::vector<Matroid> labeled;
      std::vector<int> states;
      for (const auto& [M, state] : level)
        for (Step s : steps_for(cls, state)) {
          labeled.push_back(apply_step(s, M));
          states.push_back(next_state(s, state));
        }
      r.total_labeled = labeled.size();
      std::vector<Matroid> canon = canonicalize_all(labeled, opts.threads);
      level.clear();
      for (std::size_t i = 0; i < canon.size(); ++i) {
        auto [it, fresh] = level.emplace(std::move(canon[i]), states[i]);
        if (!fresh) it->second = std::min(it->second, states[i]);
      }
    }
    ClassSet classes;
    for (const auto& entry : level) classes.insert(entry.first);
    fill(r, classes);
  }
  r.elapsed = Clock::now() - t0;
  return r;
}

std::string report_to_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["class"] = to_string(r.cls);
  j["total_labeled"] = r.total_labeled;
  j["iso_classes"] = r.iso_classes;
  j["full_rank_classes"] = r.full_rank_classes;
  j["elapsed_seconds"] = r.elapsed.count();
  auto reps = nlohmann::json::array();
  for (const Matroid& m : r.representatives) reps.push_back(m.elements());
  j["representatives"] = reps;
  return j.dump();
}

std::string report_to_text(const CensusReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "class" << to_string(r.cls) << "\n"
     << std::setw(18) << "dim" << r.dim << "\n"
     << std::setw(18) << "total_labeled" << r.total_labeled << "\n"
     << std::setw(18) << "iso_classes" << r.iso_classes << "\n"
     << std::setw(18) << "full_rank" << r.full_rank_classes << "\n"
     << std::setw(18) << "elapsed_s" << std::fixed << std::setprecision(3) << r.elapsed.count() << "\n";
  std::size_t i = 0;
  for (const Matroid& m : r.representatives) {
    os << "  #" << std::setw(4) << i++ << " |E|=" << std::setw(4) << m.size() << (m.full_rank() ? " full " : " def  ");
    for (Point p : m.elements()) os << ' ' << p;
    os << "\n";
  }
  return os.str();
}

void write_representatives(const CensusReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    std::ostringstream name;
    name << "rep_" << std::setw(3) << std::setfill('0') << i << ".bmat";
    write_bmat_file((std::filesystem::path(dir) / name.str()).string(), r.representatives[i]);
  }
}

bool brute_force_i4tf(const Matroid& M) {
  const std::vector<Point> e = M.elements();
  const std::size_t s = e.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      if (M.contains(e[a] ^ e[b])) return false;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        for (std::size_t d = c + 1; d < s; ++d) {
          const Point g[4] = {e[a], e[b], e[c], e[d]};
          bool independent = true;
          int hits = 0;
          for (unsigned sub = 1; sub < 16; ++sub) {
            Point v = 0;
            for (int i = 0; i < 4; ++i)
              if ((sub >> i) & 1u) v ^= g[i];
            if (v == 0) independent = false;
            if (M.contains(v)) ++hits;
          }
          if (independent && hits == 4) return false;
        }
  return true;
}

CrosscheckReport exhaustive_crosscheck(int dim) {
  if (dim < 1 || dim > 4) throw PreconditionError("exhaustive_crosscheck: dim must be in [1, 4]");
  const auto t0 = Clock::now();
  CrosscheckReport rep;
  rep.dim = dim;
  const Point top = Point{1} << dim;
  const std::uint64_t subsets = std::uint64_t{1} << (top - 1);
  std::vector<Matroid> affine_full, nonaffine_full;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    PointSet E(dim);
    for (Point p = 1; p < top; ++p)
      if ((mask >> (p - 1)) & 1u) E.set(p);
    const Matroid M(dim, std::move(E));
    ++rep.subsets;
    const bool brute = brute_force_i4tf(M);
    const Matroid core = restrict_to_closure(M).matroid;
    Discrepancy d{M, brute, false, ""};
    try {
      const DecompositionResult res = decompose_i4tf(core);
      d.decomposed = res.outcome != DecompositionResult::Outcome::NotMember;
      if (d.decomposed && realize(*res.certificate) != core) d.note = "certificate does not replay";
      if (!d.decomposed && !verify_witness(core, *res.witness)) d.note = "witness does not verify";
      if (d.decomposed) {
        ++rep.members;
        const bool affine = res.outcome == DecompositionResult::Outcome::AffineChain;
        ++(affine ? rep.affine_members : rep.nonaffine_members);
        if (M.full_rank()) (affine ? affine_full : nonaffine_full).push_back(M);
      }
    } catch (const TheoremViolation& e) {
      d.note = e.what();
    }
    if (d.decomposed != brute && d.note.empty()) d.note = "membership disagrees";
    if (!d.note.empty()) rep.discrepancies.push_back(std::move(d));
  }
  rep.affine_full_rank_classes = dedup(affine_full, 1).size();
  rep.nonaffine_full_rank_classes = dedup(nonaffine_full, 1).size();
  rep.elapsed = Clock::now() - t0;
  return rep;
}

std::string crosscheck_to_json(const CrosscheckReport& r) {
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["subsets"] = r.subsets;
  j["members"] = r.members;
  j["affine_members"] = r.affine_members;
  j["nonaffine_members"] = r.nonaffine_members;
  j["affine_full_rank_classes"] = r.affine_full_rank_classes;
  j["nonaffine_full_rank_classes"] = r.nonaffine_full_rank_classes;
  auto disc = nlohmann::json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"points", d.matroid.elements()}, {"brute_member", d.brute_member},
                    {"decomposed", d.decomposed}, {"note", d.note}});
  j["discrepancies"] = disc;
  j["elapsed_seconds"] = r.elapsed.count();
  return j.dump();
}

std::vector<Matroid> random_members(int dim, std::size_t count, std::uint64_t seed, CensusClass cls) {
  if (dim < 1 || dim > kMaxDim) throw PreconditionError("random_members: dimension out of range");
  if (cls == CensusClass::I4tfNonaffine && dim < 4)
    throw PreconditionError("random_members: non-affine members need dimension at least 4");
  std::mt19937_64 rng(seed);
  std::vector<Matroid> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Matroid M;
    if (cls == CensusClass::I4tfNonaffine) {
      const int m = std::uniform_int_distribution<int>(3, dim - 1)(rng);
      M = sag(m);
      while (M.dim < dim) M = doubled(M);
    } else {
      M = one_dim_bases()[std::uniform_int_distribution<std::size_t>(0, 1)(rng)];
      int state = 0;
      while (M.dim < dim) {
        const auto& steps = steps_for(cls, state);
        const Step s = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
        M = apply_step(s, M);
        state = next_state(s, state);
      }
    }
    out.push_back(apply_map(random_invertible_map(dim, rng()), M));
  }
  return out;
}

bool has_ai4_normal_form(const Matroid& M) { return NormalFormSearch(false).run(M, 0); }

bool has_alpha_only_form(const Matroid& M) { return NormalFormSearch(true).run(M, 0); }

}  // namespace bmt
