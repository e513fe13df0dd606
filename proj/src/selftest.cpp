#include "bmt/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "bmt/census.hpp"
#include "bmt/constructions.hpp"
#include "bmt/decomposer.hpp"
#include "bmt/errors.hpp"

namespace bmt {

namespace {

// Time budgets (seconds) and sample sizes for the full level.
constexpr double kBudgetCensus = 120;
constexpr double kBudgetEquivalence = 60;
constexpr double kBudgetChi = 120;
constexpr double kBudgetAffine = 120;
constexpr double kBudgetDefault = 300;

constexpr int kChiSamples = 1000;
constexpr int kSpecialSamples = 500;
constexpr int kStabilizerSamples = 1000;
constexpr int kPreservationSamples = 200;
constexpr int kClauseSamples = 200;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    if (!first.empty()) s += "; first: " + first;
    return s;
  }
};

std::string show(const Matroid& M) {
  std::string s = "dim=" + std::to_string(M.dim) + " E={";
  bool first = true;
  for (Point p : M.elements()) {
    s += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return s + "}";
}

template <typename F>
void for_all_subsets(int dim, F&& f) {
  const Point top = Point{1} << dim;
  const std::uint64_t count = std::uint64_t{1} << (top - 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PointSet E(dim);
    for (Point p = 1; p < top; ++p)
      if ((mask >> (p - 1)) & 1u) E.set(p);
    f(Matroid(dim, std::move(E)));
  }
}

// Uniform dimension in [lo, hi], then a density drawn from (0.05, 0.95) and
// independent point membership.
Matroid random_matroid(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution in(density);
  PointSet E(n);
  for (Point p = 1; p < (Point{1} << n); ++p)
    if (in(rng)) E.set(p);
  return Matroid(n, std::move(E));
}

Matroid random_affine(std::mt19937_64& rng, int lo, int hi) {
  Matroid M = random_matroid(rng, lo, hi);
  const Point w = std::uniform_int_distribution<Point>(1, (Point{1} << M.dim) - 1)(rng);
  PointSet keep = kernel_set(M.dim, w).complement();
  keep.reset(0);
  M.points &= keep;
  return M;
}

Matroid random_flat(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const int d = std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<Point> gens;
  std::uniform_int_distribution<Point> pt(1, (Point{1} << n) - 1);
  for (int i = 0; i < d; ++i) gens.push_back(pt(rng));
  Matroid M = Matroid::empty(n);
  if (!gens.empty()) M.points = closure(gens, n).members;
  return M;
}

bool is_flat(const Matroid& M) { return M.points.none() || closure(M.points).members == M.points; }

bool has_I(const Matroid& M, int s) { return find_induced_Is(M, s).has_value(); }
bool ai4_free(const Matroid& M) { return !is_AI4_free(M).has_value(); }

CriterionResult criterion_census(SelftestLevel level, int threads) {
  CriterionResult r{1, "census: non-affine I4-free triangle-free classes = dim - 3", false, "", 0, kBudgetCensus};
  const int top = level == SelftestLevel::Full ? 8 : 7;
  Tally t;
  std::ostringstream counts;
  for (int dim = 4; dim <= top; ++dim) {
    const CensusReport rep = enumerate_generated(dim, CensusClass::I4tfNonaffine, {8, threads});
    counts << (dim == 4 ? "" : ",") << rep.iso_classes;
    t.check(rep.iso_classes == static_cast<std::size_t>(dim - 3),
            [&] { return "dim " + std::to_string(dim) + " gave " + std::to_string(rep.iso_classes); });
    for (const Matroid& m : rep.representatives)
      t.check(is_i4tf_member(m) == std::nullopt && critical_number(m) == 2, [&] { return "bad rep " + show(m); });
  }
  r.pass = t.ok();
  r.detail = "classes for dim 4.." + std::to_string(top) + " = [" + counts.str() + "]; " + t.summary();
  return r;
}

CriterionResult criterion_equivalence(SelftestLevel level) {
  CriterionResult r{2, "exhaustive equivalence of decomposition and forbidden-substructure membership", false, "", 0,
                    kBudgetEquivalence};
  const int top = level == SelftestLevel::Full ? 4 : 3;
  Tally t;
  std::size_t members = 0;
  for (int dim = 1; dim <= top; ++dim) {
    const CrosscheckReport rep = exhaustive_crosscheck(dim);
    members += rep.members;
    t.check(rep.discrepancies.empty(), [&] {
      return "dim " + std::to_string(dim) + ": " + show(rep.discrepancies.front().matroid) + " " +
             rep.discrepancies.front().note;
    });
    if (dim == 4)
      t.check(rep.nonaffine_full_rank_classes == 1,
              [&] { return "non-affine classes at dim 4: " + std::to_string(rep.nonaffine_full_rank_classes); });
  }
  r.pass = t.ok();
  r.detail = std::to_string(members) + " members up to dim " + std::to_string(top) + "; " + t.summary();
  return r;
}

CriterionResult criterion_chi(SelftestLevel level) {
  CriterionResult r{3, "critical number of members is at most 2", false, "", 0, kBudgetChi};
  Tally t;
  const int top = level == SelftestLevel::Full ? 4 : 3;
  for (int dim = 1; dim <= top; ++dim)
    for_all_subsets(dim, [&](const Matroid& M) {
      if (!brute_force_i4tf(M)) return;
      const int chi = critical_number(M);
      t.check(chi <= 2, [&] { return show(M) + " chi=" + std::to_string(chi); });
    });
  const int samples = level == SelftestLevel::Full ? kChiSamples : kChiSamples / 10;
  for (int i = 0; i < samples; ++i) {
    const int dim = 5 + i % 5;
    const bool affine = (i / 5) % 2 == 0;
    const Matroid M = random_members(dim, 1, 1000 + static_cast<std::uint64_t>(i),
                                     affine ? CensusClass::I4tfAffine : CensusClass::I4tfNonaffine)
                          .front();
    const int chi = critical_number(M);
    t.check(!is_i4tf_member(M) && chi <= 2 && (affine ? chi <= 1 : chi == 2),
            [&] { return show(M) + " chi=" + std::to_string(chi); });
  }
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

CriterionResult criterion_affine(SelftestLevel level) {
  CriterionResult r{4, "affine iff no induced odd circuit", false, "", 0, kBudgetAffine};
  Tally t;
  const int top = level == SelftestLevel::Full ? 4 : 3;
  for (int dim = 1; dim <= top; ++dim)
    for_all_subsets(dim, [&](const Matroid& M) {
      const bool affine = is_affine(M).has_value();
      const auto circuit = find_induced_odd_circuit(M, dim + 1);
      t.check(affine != circuit.has_value(), [&] { return show(M); });
      if (circuit) t.check(verify_witness(M, *circuit), [&] { return "bad witness on " + show(M); });
    });
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

bool special_case_holds(const Matroid& M, const SpecialHyperplane& sh) {
  const PointSet& E = M.points;
  const PointSet& H = sh.H.members;
  switch (sh.which) {
    case SpecialCase::E_subset_H: return E.subset_of(H);
    case SpecialCase::Complement_subset_H: return H.complement().subset_of(E);
    case SpecialCase::E_disjoint_H: return !E.intersects(H);
    case SpecialCase::H_subset_E: return H.subset_of(E);
  }
  return false;
}

CriterionResult criterion_special_hyperplane(SelftestLevel level) {
  CriterionResult r{5, "every AI4-free matroid has a special hyperplane", false, "", 0, kBudgetDefault};
  Tally t;
  auto probe = [&](const Matroid& M) {
    try {
      const SpecialHyperplane sh = find_special_hyperplane(M);
      t.check(sh.H.dim == M.dim - 1 && special_case_holds(M, sh), [&] { return "case mismatch on " + show(M); });
    } catch (const TheoremViolation& e) {
      t.check(false, [&] { return show(M) + ": " + e.what(); });
    }
  };
  const int top = level == SelftestLevel::Full ? 4 : 3;
  for (int dim = 1; dim <= top; ++dim)
    for_all_subsets(dim, [&](const Matroid& M) {
      if (ai4_free(M)) probe(M);
    });
  const int samples = level == SelftestLevel::Full ? kSpecialSamples : kSpecialSamples / 10;
  for (const Matroid& M : random_members(5, static_cast<std::size_t>(samples), 5, CensusClass::Ai4)) {
    t.check(ai4_free(M), [&] { return "generated member is not AI4-free: " + show(M); });
    probe(M);
  }
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

CriterionResult criterion_stabilizer(SelftestLevel level) {
  CriterionResult r{6, "stabilizer flat: U^c = E + E^c and the containment clauses", false, "", 0, kBudgetDefault};
  Tally t;
  auto probe = [&](const Matroid& M) {
    try {
      const StabilizerResult s = stabilizer_flat(M);
      const PointSet& E = M.points;
      const PointSet Ec = E.complement();
      const std::size_t g = E.universe() - 1;
      t.check(s.U.members.complement() == sumset(E, Ec), [&] { return "U^c clause on " + show(M); });
      if (E.count() >= 2) t.check(s.U.members.subset_of(sumset(E, E)), [&] { return "E+E clause on " + show(M); });
      if (E.count() + 2 <= g)
        t.check(s.U.members.subset_of(sumset(Ec, Ec)), [&] { return "Ec+Ec clause on " + show(M); });
    } catch (const TheoremViolation& e) {
      t.check(false, [&] { return show(M) + ": " + e.what(); });
    }
  };
  for (int dim = 1; dim <= 3; ++dim) for_all_subsets(dim, probe);
  std::mt19937_64 rng(6);
  const int samples = level == SelftestLevel::Full ? kStabilizerSamples : kStabilizerSamples / 10;
  for (int i = 0; i < samples; ++i) probe(random_matroid(rng, 1, 6));
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

CriterionResult criterion_preservation(SelftestLevel level) {
  CriterionResult r{7, "doubling and 1-expansion preservation", false, "", 0, kBudgetDefault};
  Tally t;
  const int samples = level == SelftestLevel::Full ? kPreservationSamples : kPreservationSamples / 10;
  std::mt19937_64 rng(7);
  for (int i = 0; i < samples; ++i) {
    const Matroid M = random_matroid(rng, 1, 6);
    const Matroid D = doubled(M);
    t.check(critical_number(D) == critical_number(M), [&] { return "chi changed on " + show(M); });
    t.check(find_triangle(D).has_value() == find_triangle(M).has_value(),
            [&] { return "triangle-freeness changed on " + show(M); });
    for (int s : {3, 4})
      t.check(has_I(D, s) == has_I(M, s), [&] { return "I" + std::to_string(s) + "-freeness changed on " + show(M); });
  }
  const auto members = random_members(6, static_cast<std::size_t>(samples / 2), 77, CensusClass::I4tfAffine);
  for (int i = 0; i < samples; ++i) {
    const Matroid M = i < samples / 2 ? members[static_cast<std::size_t>(i)] : random_affine(rng, 1, 6);
    const Matroid X = expand1(M);
    t.check(is_affine(X).has_value(), [&] { return "1-expansion not affine: " + show(M); });
    for (int s : {4, 5})
      if (!has_I(M, s)) t.check(!has_I(X, s), [&] { return "1-expansion created I" + std::to_string(s) + ": " + show(M); });
  }
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

CriterionResult criterion_alpha_beta(SelftestLevel level) {
  CriterionResult r{8, "alpha/beta operation ledger and AI4 decomposition round trip", false, "", 0, kBudgetDefault};
  Tally t;
  const int samples = level == SelftestLevel::Full ? kClauseSamples : kClauseSamples / 10;
  std::mt19937_64 rng(8);
  using Op = Matroid (*)(const Matroid&);
  const std::pair<const char*, Op> alphas[] = {{"alpha0", alpha0}, {"alpha1", alpha1}};
  const std::pair<const char*, Op> betas[] = {{"beta0", beta0}, {"beta1", beta1}};

  // Pools of structured inputs.
  std::vector<Matroid> ai4_pool, ai4_i3free_pool, with_i3_pool;
  for (std::uint64_t seed = 0; ai4_i3free_pool.size() < static_cast<std::size_t>(samples) || ai4_pool.size() < static_cast<std::size_t>(samples); ++seed) {
    const int dim = 1 + static_cast<int>(seed % 5);
    const Matroid M = random_members(dim, 1, 800 + seed, CensusClass::Ai4).front();
    if (ai4_pool.size() < static_cast<std::size_t>(samples)) ai4_pool.push_back(M);
    if (!has_I(M, 3) && ai4_i3free_pool.size() < static_cast<std::size_t>(samples)) ai4_i3free_pool.push_back(M);
  }
  while (with_i3_pool.size() < static_cast<std::size_t>(samples)) {
    Matroid M = random_matroid(rng, 3, 5);
    if (has_I(M, 3)) with_i3_pool.push_back(std::move(M));
  }

  for (int i = 0; i < samples; ++i) {
    const Matroid M = random_matroid(rng, 1, 5);
    for (const auto& [name, op] : alphas) {
      t.check(!ai4_free(op(M)) || ai4_free(M), [&] { return std::string("clause 1 ") + name + " on " + show(M); });
      t.check(has_I(M, 3) == has_I(op(M), 3), [&] { return std::string("clause 3 ") + name + " on " + show(M); });
    }
    for (const auto& [name, op] : betas)
      t.check(!ai4_free(op(M)) || ai4_free(M), [&] { return std::string("clause 1 ") + name + " on " + show(M); });
    t.check(!has_I(beta1(M), 3), [&] { return "clause 6 on " + show(M); });
    if (!is_flat(M)) t.check(has_I(beta0(M), 3), [&] { return "clause 7 on " + show(M); });
  }
  for (const Matroid& M : ai4_pool)
    for (const auto& [name, op] : alphas)
      t.check(ai4_free(op(M)), [&] { return std::string("clause 2 ") + name + " on " + show(M); });
  for (const Matroid& M : ai4_i3free_pool)
    for (const auto& [name, op] : betas)
      t.check(ai4_free(op(M)), [&] { return std::string("clause 4 ") + name + " on " + show(M); });
  for (const Matroid& M : with_i3_pool)
    for (const auto& [name, op] : betas)
      t.check(!ai4_free(op(M)), [&] { return std::string("clause 5 ") + name + " on " + show(M); });
  for (int i = 0; i < samples; ++i) {
    const Matroid F = random_flat(rng, 1, 4);
    t.check(has_alpha_only_form(beta0(F)), [&] { return "clause 8 on " + show(F); });
  }

  for (int dim = 1; dim <= 3; ++dim)
    for_all_subsets(dim, [&](const Matroid& M) {
      const auto res = decompose_ai4(M);
      if (const auto* c = std::get_if<Certificate>(&res)) {
        t.check(ai4_free(M) && realize(*c) == M, [&] { return "round trip on " + show(M); });
      } else {
        t.check(!ai4_free(M) && verify_witness(M, std::get<Witness>(res)), [&] { return "witness on " + show(M); });
      }
    });
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

CriterionResult criterion_sag() {
  CriterionResult r{9, "SAG: size, I4-free, triangle-free, chi = 2, recognized", false, "", 0, kBudgetDefault};
  Tally t;
  for (int n = 3; n <= 8; ++n) {
    const Matroid S = sag(n);
    const std::string tag = "sag(" + std::to_string(n) + ")";
    t.check(S.size() == (std::size_t{1} << (n - 1)) + 1, [&] { return tag + " size"; });
    t.check(!find_triangle(S).has_value(), [&] { return tag + " has a triangle"; });
    t.check(!has_I(S, 4), [&] { return tag + " has an induced I4"; });
    t.check(critical_number(S) == 2, [&] { return tag + " chi"; });
    const auto shape = recognize_sag(S);
    t.check(shape && shape->m == n && apply_map(shape->map, sag(n)) == S, [&] { return tag + " not recognized"; });
  }
  r.pass = t.ok();
  r.detail = t.summary();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(SelftestLevel level, int threads,
                                            const std::function<void(const CriterionResult&)>& on_result, int only) {
  const std::function<CriterionResult()> criteria[] = {
      [&] { return criterion_census(level, threads); },
      [&] { return criterion_equivalence(level); },
      [&] { return criterion_chi(level); },
      [&] { return criterion_affine(level); },
      [&] { return criterion_special_hyperplane(level); },
      [&] { return criterion_stabilizer(level); },
      [&] { return criterion_preservation(level); },
      [&] { return criterion_alpha_beta(level); },
      [&] { return criterion_sag(); },
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& run : criteria) {
    if (only != 0 && only != id) {
      ++id;
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (level == SelftestLevel::Full && r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
      r.pass = false;
      r.detail += "; over time budget";
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
    ++id;
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << "s / " << r.budget_seconds
     << "s) " << r.detail;
  return os.str();
}

}  // namespace bmt
