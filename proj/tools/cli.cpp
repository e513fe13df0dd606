#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bmt/canonical.hpp"
#include "bmt/census.hpp"
#include "bmt/certificate.hpp"
#include "bmt/decomposer.hpp"
#include "bmt/errors.hpp"
#include "bmt/selftest.hpp"

namespace bmt::cli {

namespace {

using json = nlohmann::ordered_json;

json witness_json(const Witness& w) {
  return {{"kind", to_string(w.kind)}, {"size", w.size}, {"points", w.points}};
}

std::string points_text(const std::vector<Point>& pts) {
  std::string s;
  for (Point p : pts) s += (s.empty() ? "" : " ") + std::to_string(p);
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

// A property verdict: holds, or a witness against it. chi carries a value.
struct Verdict {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;
  std::optional<int> value;
};

Verdict evaluate(const std::string& prop, const Matroid& M) {
  Verdict v;
  v.name = prop;
  if (prop == "triangle") {
    v.witness = find_triangle(M);
  } else if (prop == "i4") {
    v.witness = find_induced_Is(M, 4);
  } else if (prop == "i3") {
    v.witness = find_induced_Is(M, 3);
  } else if (prop == "ai4") {
    v.witness = is_AI4_free(M);
  } else if (prop == "oddcircuit") {
    v.witness = find_induced_odd_circuit(M, M.dim + 1);
  } else if (prop == "affine") {
    if (const auto w = is_affine(M)) {
      v.value = static_cast<int>(*w);
    } else {
      v.witness = find_induced_odd_circuit(M, M.dim + 1);
      v.holds = false;
    }
    return v;
  } else if (prop == "chi") {
    v.value = critical_number(M);
    return v;
  } else {
    throw CLI::ValidationError("--props", "unknown property " + prop);
  }
  v.holds = !v.witness.has_value();
  return v;
}

std::vector<std::string> split_props(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw CLI::ValidationError("--props", "empty property list");
  return out;
}

struct Options {
  bool as_json = false;
  std::string file;
  std::string output;
  std::string props = "triangle,i4";
  std::string out_dir;
  std::string cls;
  std::string level = "quick";
  int dim = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  int threads = 1;
};

int cmd_check(const Options& o, std::ostream& out) {
  const Matroid M = read_bmat_file(o.file);
  std::vector<Verdict> verdicts;
  for (const std::string& p : split_props(o.props)) verdicts.push_back(evaluate(p, M));
  const bool all = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
  if (o.as_json) {
    json props = json::object();
    for (const Verdict& v : verdicts) {
      json j{{"holds", v.holds}};
      if (v.witness) j["witness"] = witness_json(*v.witness);
      if (v.value) j[v.name == "chi" ? "value" : "functional"] = *v.value;
      props[v.name] = j;
    }
    out << json{{"file", o.file}, {"dim", M.dim}, {"size", M.size()}, {"properties", props}}.dump() << "\n";
  } else {
    for (const Verdict& v : verdicts) {
      out << v.name << ": ";
      if (v.name == "chi") {
        out << *v.value << "\n";
      } else if (v.holds) {
        out << (v.name == "affine" ? "affine, functional " + std::to_string(*v.value) : "free") << "\n";
      } else if (v.witness) {
        out << "witness " << points_text(v.witness->points) << " (" << describe(*v.witness) << ")\n";
      } else {
        out << "fails\n";
      }
    }
  }
  return all ? kOk : kWitness;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Matroid M = read_bmat_file(o.file);
  const DecompositionResult r = decompose_i4tf(M);
  json doc{{"outcome", to_string(r.outcome)}};
  if (r.outcome == DecompositionResult::Outcome::DoubledSag) {
    doc["k"] = r.k;
    doc["n"] = r.sag_n;
  }
  if (r.certificate) {
    doc["rank_deficiency"] = r.rank_deficiency;
    doc["certificate"] = json::parse(certificate_to_json(*r.certificate));
  }
  if (r.witness) doc["witness"] = witness_json(*r.witness);

  if (!o.output.empty()) {
    write_text(o.output, (r.certificate ? doc["certificate"] : doc["witness"]).dump(2) + "\n");
  }
  if (o.as_json) {
    out << doc.dump() << "\n";
  } else {
    out << "outcome " << to_string(r.outcome);
    if (r.outcome == DecompositionResult::Outcome::DoubledSag) out << " k=" << r.k << " n=" << r.sag_n;
    out << "\n";
    if (r.certificate) {
      std::string steps;
      for (Step s : r.certificate->steps) steps += (steps.empty() ? "" : " ") + to_string(s);
      out << "steps " << (steps.empty() ? "(none)" : steps) << "\n";
    }
    if (r.witness) out << "witness " << points_text(r.witness->points) << " (" << describe(*r.witness) << ")\n";
  }
  return r.certificate ? kOk : kWitness;
}

int cmd_build(const Options& o, std::ostream& out) {
  const Certificate c = certificate_from_json(read_text(o.file));
  const std::string text = serialize_bmat(realize(c));
  if (o.output.empty())
    out << text;
  else
    write_text(o.output, text);
  return kOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const CanonicalForm cf = canonical_form(read_bmat_file(o.file));
  if (o.as_json) {
    std::vector<Point> images = cf.map.images;
    out << json{{"points", cf.matroid.elements()}, {"dim", cf.matroid.dim}, {"map", images}}.dump() << "\n";
  } else {
    out << serialize_bmat(cf.matroid);
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const CensusReport r = enumerate_generated(o.dim, census_class_from_string(o.cls), {8, o.threads});
  if (!o.out_dir.empty()) write_representatives(r, o.out_dir);
  out << (o.as_json ? report_to_json(r) + "\n" : report_to_text(r));
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  const auto members = random_members(o.dim, o.count, o.seed, census_class_from_string(o.cls));
  if (o.out_dir.empty()) {
    for (const Matroid& M : members) out << serialize_bmat(M);
    return kOk;
  }
  std::filesystem::create_directories(o.out_dir);
  for (std::size_t i = 0; i < members.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "rand_%03zu.bmat", i);
    const std::string path = (std::filesystem::path(o.out_dir) / name).string();
    write_bmat_file(path, members[i]);
    out << path << "\n";
  }
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const SelftestLevel level = o.level == "full" ? SelftestLevel::Full : SelftestLevel::Quick;
  json results = json::array();
  const auto all = run_acceptance(level, o.threads, [&](const CriterionResult& r) {
    if (o.as_json) {
      results.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds},
                         {"detail", r.detail}});
    } else {
      out << format_result(r) << std::endl;
    }
  });
  const bool pass = std::all_of(all.begin(), all.end(), [](const CriterionResult& r) { return r.pass; });
  if (o.as_json) out << json{{"level", o.level}, {"pass", pass}, {"criteria", results}}.dump() << "\n";
  return pass ? kOk : kWitness;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary matroid structure toolkit: I4-free, triangle-free membership and decomposition"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable JSON on stdout");

  const std::vector<std::string> classes{"i4tf_nonaffine", "i4tf_affine", "ai4"};

  auto* check = app.add_subcommand("check", "Test forbidden-substructure properties of a BMAT file");
  check->add_option("file", o.file)->required();
  check->add_option("--props", o.props, "Comma list of triangle,i4,i3,ai4,affine,oddcircuit,chi")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Certificate or witness for I4-free triangle-free membership");
  decompose->add_option("file", o.file)->required();
  decompose->add_option("-o", o.output, "Write the certificate (or witness) JSON here");

  auto* build = app.add_subcommand("build", "Replay a certificate to BMAT");
  build->add_option("file", o.file)->required();
  build->add_option("-o", o.output, "Output BMAT path (default stdout)");

  auto* canon = app.add_subcommand("canon", "Canonical BMAT under GL(n,2)");
  canon->add_option("file", o.file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Census of a class up to isomorphism");
  enumerate->add_option("--dim", o.dim)->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--class", o.cls)->required()->check(CLI::IsMember(classes));
  enumerate->add_option("--out", o.out_dir, "Directory for representative BMAT files");

  auto* random = app.add_subcommand("random", "Random class members as BMAT");
  random->add_option("--dim", o.dim)->required()->check(CLI::Range(1, 16));
  random->add_option("--count", o.count)->required();
  random->add_option("--seed", o.seed)->required();
  random->add_option("--class", o.cls)->required()->check(CLI::IsMember(classes));
  random->add_option("--out", o.out_dir, "Directory for rand_NNN.bmat (default: concatenated on stdout)");

  auto* selftest = app.add_subcommand("selftest", "Acceptance suites");
  selftest->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  for (auto* sub : {enumerate, selftest})
    sub->add_option("--threads", o.threads)->envname("BMT_THREADS")->check(CLI::PositiveNumber);
  for (auto* sub : {check, decompose, build, canon, enumerate, random, selftest})
    sub->add_flag("--json", o.as_json, "Machine-readable JSON on stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*build) return cmd_build(o, out);
    if (*canon) return cmd_canon(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*random) return cmd_random(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kViolation;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bmt::cli
