#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "framegraph/cli.hpp"
#include "framegraph/frames.hpp"
#include "framegraph/graph.hpp"

using namespace framegraph;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("framegraph_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_frame(const std::string& path, const Frame& f) {
  std::ofstream out(path);
  write_frame_csv(out, f);
}

}  // namespace

TEST_CASE("bounds examples") {
  const Json c6 = run({"bounds", "cycle:6"}).json();
  CHECK(c6["lower"]["value"] == 4);
  CHECK(c6["upper"]["value"] == 4);
  CHECK(c6["exact"] == true);
  CHECK(c6["lower"]["cert"] == "os_witness");

  const Json cor = run({"bounds", "corona(complete:2,complete:2)"}).json();
  CHECK(cor["lower"]["value"] == 3);
  CHECK(cor["upper"]["value"] == 3);

  const Json kb = run({"bounds", "kbip:4,3"}).json();
  CHECK(kb["lower"]["value"] == 4);
  CHECK(kb["upper"]["value"] == 4);
  CHECK(kb["dims"]["min"] == 4);
  CHECK(kb["dims"]["max"] == 7);
  CHECK(kb["order"] == 7);
}

TEST_CASE("bounds certificates are present") {
  const Json j = run({"bounds", "strong(path:3,path:3)"}).json();
  CHECK(j["lower"]["value"] == 4);
  CHECK(j["upper"]["value"] == 4);
  CHECK(j["certificates"].contains("os_witness"));
  CHECK(j["certificates"].contains("clique_cover"));
  CHECK(j["certificates"]["os_witness"]["ordered"].size() == 4);
}

TEST_CASE("bounds csv and complex field") {
  const Run r = run({"bounds", "corona(complete:2,complete:2)", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("graph,order,field,lower", 0) == 0);
  CHECK(r.out.find(",3,os_witness,3,") != std::string::npos);

  const Json cx = run({"--field", "complex", "bounds", "hreg:6"}).json();
  CHECK(cx["field"] == "complex");
  CHECK(cx["lower"]["value"] == 2);
  CHECK(cx["upper"]["value"] == 2);
}

TEST_CASE("global flags may follow the subcommand") {
  const Json a = run({"bounds", "cycle:5", "--field", "complex"}).json();
  const Json b = run({"--field", "complex", "bounds", "cycle:5"}).json();
  CHECK(a["field"] == "complex");
  CHECK(a["lower"] == b["lower"]);
}

TEST_CASE("edge-list files are accepted as graphs") {
  const std::string path = temp_path("c5.txt");
  {
    std::ofstream out(path);
    write_edge_list(out, make_cycle(5));
  }
  const Json j = run({"bounds", path}).json();
  CHECK(j["lower"]["value"] == 3);
  CHECK(j["upper"]["value"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"bounds"}).code == kExitUsage);
  CHECK(run({"--field", "quaternion", "bounds", "path:3"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "bounds", "path:3"}).code == kExitUsage);

  const Run parse = run({"bounds", "cycle:"});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("6") != std::string::npos);

  CHECK(run({"bounds", "cycle:2"}).code == kExitUsage);
  CHECK(run({"bounds", "join(complete:1,complete:1)"}).code == kExitOk);

  const Run cap = run({"--os-cap", "4", "--cc-cap", "4", "bounds", "tree:[0-1,1-2,2-3,3-4,4-5,0-6]"});
  // Trees carry a structural OS witness, so a small cap is still answerable.
  CHECK(cap.code == kExitOk);
  const Run cap2 = run({"--os-cap", "4", "--cc-cap", "4", "bounds",
                        "join(cycle:5,cycle:4)"});
  CHECK(cap2.code == kExitCapacity);
  CHECK(cap2.err.find("--os-cap") != std::string::npos);

  const Run infeasible = run({"realize", "cycle:5", "--rank", "2"});
  CHECK(infeasible.code == kExitVerify);
  CHECK(infeasible.err.find("infeasible") != std::string::npos);
  CHECK(run({"realize", "cycle:5", "--rank", "0"}).code == kExitUsage);
}

TEST_CASE("realize writes a verified frame") {
  const std::string path = temp_path("c5_frame.csv");
  const Run r = run({"--seed", "3", "realize", "cycle:5", "--rank", "3", "--frame-out", path});
  CHECK(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["found"] == true);
  CHECK(j["verified"] == true);
  CHECK(j["rank"] == 3);
  std::ifstream in(path);
  const Frame f = read_frame_csv(in);
  CHECK(f.dim() == 3);
  CHECK(verifies(f, make_cycle(5)));

  const Run v = run({"verify-frame", path, "cycle:5"});
  CHECK(v.code == kExitOk);
  CHECK(v.json()["status"] == "match");
  std::remove(path.c_str());
}

TEST_CASE("realize minimum search") {
  const Json j = run({"realize", "strong(path:3,path:3)"}).json();
  CHECK(j["mode"] == "search");
  CHECK(j["rank"] == 4);
  CHECK(j["best_realized"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j["verified"] == true);
  CHECK(j["frame"]["dim"] == 4);
}

TEST_CASE("verify-frame examples") {
  const std::string inc = temp_path("p4.csv");
  write_frame(inc, tree_frame(make_path(4)));
  const Run p = run({"verify-frame", inc, "path:4"});
  CHECK(p.code == kExitOk);
  CHECK(p.json()["rank"] == 3);
  CHECK(p.json()["frame_graph_matches"] == true);

  const std::string id = temp_path("id3.csv");
  write_frame(id, Frame::from_real(Eigen::MatrixXd::Identity(3, 3)));
  const Run o = run({"verify-frame", id, "complete:3"});
  CHECK(o.code == kExitVerify);
  const Json oj = o.json();
  CHECK(oj["status"] == "mismatch");
  CHECK(oj["frame_graph_edges"].empty());
  CHECK(oj["missing_edges"].size() == 3);
  CHECK(oj["frame_constants"]["A"].get<double>() == doctest::Approx(1.0));

  const std::string ex = temp_path("kminus.csv");
  {
    std::ofstream out(ex);
    out << "# field=real dim=2\n1,1\n1,-1\n1,0\n1,0\n";
  }
  const Run k = run({"verify-frame", ex, "kminus:4"});
  CHECK(k.code == kExitOk);
  CHECK(k.json()["rank"] == 2);

  const std::string bad = temp_path("bad.csv");
  {
    std::ofstream out(bad);
    out << "# field=real dim=2\n1,1\n1,oops\n";
  }
  const Run b = run({"verify-frame", bad, "path:2"});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("3") != std::string::npos);
  CHECK(run({"verify-frame", temp_path("missing.csv"), "path:2"}).code == kExitUsage);
  for (const auto& f : {inc, id, ex, bad}) std::remove(f.c_str());
}

TEST_CASE("product emits edge lists") {
  const Run a = run({"product", "cartesian", "path:2", "path:2"});
  CHECK(a.code == kExitOk);
  std::istringstream in(a.out);
  const Graph g = read_edge_list(in);
  CHECK(g == cartesian(make_path(2), make_path(2)));

  const Run b = run({"product", "corona(complete:2,complete:2)"});
  std::istringstream in2(b.out);
  CHECK(read_edge_list(in2) == corona(make_complete(2), make_complete(2)));

  const Run c = run({"product", "vsum", "path:3", "cycle:4", "--attach", "2,0"});
  CHECK(c.code == kExitOk);
  std::istringstream in3(c.out);
  CHECK(read_edge_list(in3) == vertex_sum(make_path(3), 2, make_cycle(4), 0));
  CHECK(run({"product", "vsum", "path:3", "cycle:4"}).code == kExitUsage);
  CHECK(run({"product", "wreath", "path:3", "cycle:4"}).code == kExitUsage);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = temp_path("report.json");
  const Run r = run({"--out", path, "bounds", "path:4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  const Json j = Json::parse(slurp(path));
  CHECK(j["lower"]["value"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("table1 examples on a small range") {
  const Run r = run({"table1", "--n-max", "3", "--m-max", "3", "--no-probe"});
  CHECK(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["summary"]["fail"] == 0);
  bool saw_ck = false, saw_tt = false, saw_strong = false;
  for (const auto& row : j["rows"]) {
    CHECK(row["status"] == "PASS");
    if (row["row"] == "C_n ∘ K_m" && row["params"]["n"] == 3 && row["params"]["m"] == 2) {
      saw_ck = true;
      CHECK(row["expected"] == 4);
    }
    if (row["row"] == "T ∘ T'" && row["params"]["m"] == 2 && row["params"]["m'"] == 2 &&
        row["graph"].get<std::string>().find("path") != std::string::npos) {
      saw_tt = true;
      CHECK(row["expected"] == 3);
    }
    if (row["row"] == "P_n ⊠ P_m" && row["params"]["n"] == 2 && row["params"]["m"] == 2) {
      saw_strong = true;
      CHECK(row["expected"] == 1);
    }
  }
  CHECK(saw_ck);
  CHECK(saw_tt);
  CHECK(saw_strong);

  const Run csv = run({"--format", "csv", "table1", "--n-max", "2", "--m-max", "2", "--no-probe"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.find("PASS") != std::string::npos);
  CHECK(csv.out.find("FAIL") == std::string::npos);
}

TEST_CASE("table1 is deterministic and independent of job count") {
  const std::vector<std::string> base{"--seed", "5", "table1", "--n-max", "3", "--m-max", "3"};
  const Run a = run(base);
  const Run b = run(base);
  CHECK(a.out == b.out);
  std::vector<std::string> jobs = base;
  jobs.insert(jobs.end(), {"--jobs", "2"});
  Json ja = a.json();
  Json jb = run(jobs).json();
  ja.erase("invocation");
  jb.erase("invocation");
  CHECK(ja == jb);
}
