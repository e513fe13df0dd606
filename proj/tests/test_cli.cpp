#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "bmt/constructions.hpp"
#include "bmt/matroid.hpp"
#include "cli.hpp"

using namespace bmt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("bmt_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decompose a C5") {
  TempDir dir;
  const std::string f = dir.write("c5.bmat", serialize_bmat(c_n(5)));
  const Run r = run({"decompose", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome DoubledSag k=0 n=3") != std::string::npos);
}

TEST_CASE("check finds a triangle") {
  TempDir dir;
  const std::string f = dir.write("triangle.bmat", "BMAT1 dim=2\npoints=1 2 3\n");
  const Run r = run({"check", f, "--props", "triangle"});
  CHECK(r.code == 1);
  CHECK(r.out.find("1 2 3") != std::string::npos);
  const Run j = run({"check", f, "--props", "triangle,chi", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["properties"]["triangle"]["holds"] == false);
  CHECK(doc["properties"]["triangle"]["witness"]["points"] == std::vector<int>{1, 2, 3});
  CHECK(doc["properties"]["chi"]["value"] == 2);
}

TEST_CASE("check passes on a member") {
  TempDir dir;
  const std::string f = dir.write("s.bmat", serialize_bmat(sag(4)));
  CHECK(run({"check", f}).code == 0);
  CHECK(run({"check", f, "--props", "affine"}).code == 1);
  CHECK(run({"check", f, "--props", "bogus"}).code == 2);
}

TEST_CASE("decompose, build and canon round trip") {
  TempDir dir;
  const std::vector<Matroid> inputs{
      apply_map(random_invertible_map(6, 5), doubled(sag(4))),
      apply_map(random_invertible_map(5, 6), expand1(expand1(expand0(ag(2))))),
      Matroid(4, {1, 2, 4}),
  };
  int i = 0;
  for (const Matroid& M : inputs) {
    const std::string in = dir.write("in" + std::to_string(i) + ".bmat", serialize_bmat(M));
    const std::string cert = dir.file("cert" + std::to_string(i) + ".json");
    const std::string back = dir.file("back" + std::to_string(i) + ".bmat");
    REQUIRE(run({"decompose", in, "-o", cert}).code == 0);
    REQUIRE(run({"build", cert, "-o", back}).code == 0);
    CHECK(slurp(back) == serialize_bmat(M));
    const Run a = run({"canon", in});
    const Run b = run({"canon", back});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    ++i;
  }
}

TEST_CASE("decompose a non-member writes the witness") {
  TempDir dir;
  const std::string in = dir.write("i4.bmat", serialize_bmat(i_n(4)));
  const std::string w = dir.file("w.json");
  CHECK(run({"decompose", in, "-o", w}).code == 1);
  const auto doc = nlohmann::json::parse(slurp(w));
  CHECK(doc["points"] == std::vector<int>{1, 2, 4, 8});
  const Run j = run({"decompose", in, "--json"});
  CHECK(nlohmann::json::parse(j.out)["outcome"] == "NotMember");
}

TEST_CASE("enumerate and random") {
  TempDir dir;
  const Run e = run({"enumerate", "--dim", "5", "--class", "i4tf_nonaffine", "--out", dir.file("reps"), "--json"});
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["iso_classes"] == 2);
  CHECK(std::filesystem::exists(dir.file("reps/rep_001.bmat")));

  const Run r = run({"random", "--dim", "6", "--count", "3", "--seed", "9", "--class", "i4tf_affine", "--out",
                     dir.file("rand")});
  CHECK(r.code == 0);
  const Matroid M = read_bmat_file(dir.file("rand/rand_002.bmat"));
  CHECK(M.dim == 6);
  CHECK(run({"random", "--dim", "6", "--count", "2", "--seed", "9", "--class", "ai4"}).out ==
        run({"random", "--dim", "6", "--count", "2", "--seed", "9", "--class", "ai4"}).out);
}

TEST_CASE("usage and format errors") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"enumerate", "--dim", "4", "--class", "nope"}).code == 2);
  CHECK(run({"canon", dir.file("missing.bmat")}).code == 2);
  const std::string bad = dir.write("bad.bmat", "BMAT1 dim=2\npoints=9\n");
  const Run r = run({"canon", bad});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  const std::string cert = dir.write("bad.json", "{\"base\":1}");
  CHECK(run({"build", cert}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest quick") {
  const Run r = run({"selftest", "--level", "quick", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["criteria"].size() == 9);
  CHECK(r.code == (doc["pass"] == true ? 0 : 1));
}
