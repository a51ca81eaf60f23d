#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "qpr/cli.hpp"
#include "qpr/json_io.hpp"
#include "qpr/quasi_rep.hpp"

using namespace qpr;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test run.
fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "qpr_test_scratch";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string path_in_scratch(const std::string& name) { return (scratch_dir() / name).string(); }

}  // namespace

TEST_CASE("operator JSON round trip is exact") {
  const HermitianOperator a = random_hermitian(3, 77);
  const HermitianOperator back = operator_from_json(operator_to_json(a));
  CHECK(back.matrix() == a.matrix());

  Json j = operator_to_json(a);
  j["re"][0][1] = j["re"][0][1].get<double>() + 0.5;  // break Hermiticity
  CHECK_THROWS_WITH_AS(operator_from_json(j), doctest::Contains("Hermitian"),
                       std::runtime_error);
}

TEST_CASE("frame JSON round trip and validation") {
  const Frame f = mub_frame(2);
  const Frame back = frame_from_json(frame_to_json(f));
  REQUIRE(back.size() == f.size());
  CHECK(back.labels == f.labels);
  for (int j = 0; j < f.size(); ++j)
    CHECK(back.elements[j].matrix() == f.elements[j].matrix());

  Json j = frame_to_json(f);
  j["elements"].erase(5);  // drop one element: the family no longer sums to I
  j["labels"].erase(5);
  CHECK_THROWS_WITH_AS(frame_from_json(j), doctest::Contains("sum"), std::runtime_error);
}

TEST_CASE("dual JSON carries the parent hash") {
  const Frame f = sic_frame_qubit();
  const DualFrame d = canonical_dual(f);
  const Json j = dual_to_json(d, "00112233aabbccdd");
  std::string hash;
  const DualFrame back = dual_from_json(j, &hash);
  CHECK(hash == "00112233aabbccdd");
  for (int k = 0; k < d.size(); ++k)
    CHECK(back.elements[k].matrix() == d.elements[k].matrix());
}

TEST_CASE("fnv1a hash is stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("qpr") != fnv1a_hex("qpq"));
}

TEST_CASE("wigner grid JSON and CSV") {
  const PhaseGrid grid = make_phase_grid(-2.0, 2.0, -2.0, 2.0, 9, 9);
  Matrix vac(1, 1);
  vac(0, 0) = 1.0;
  const WignerGrid w = wigner_transform(make_fock_state(std::move(vac)), grid);

  const WignerGrid back = wigner_grid_from_json(wigner_grid_to_json(w));
  CHECK(back.values == w.values);
  CHECK(back.grid.n_q == 9);

  const std::string csv = wigner_grid_to_csv(w);
  CHECK(csv.rfind("q,p,W\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 81);
}

TEST_CASE("negativity report JSON shape") {
  const Frame f = wootters_frame(2);
  const NegativityReport r = certify_negativity(f, canonical_dual(f));
  const Json j = negativity_report_to_json(r);
  CHECK(j.at("verdict").get<std::string>() == "BOTH_NEGATIVE");
  CHECK(j.at("witnesses").contains("state"));
  CHECK(j.at("witnesses").contains("effect"));
  CHECK(j.at("frame_lambda_min").get<double>() < 0.0);
}

TEST_CASE("cli: frame build summaries and errors") {
  cli::FrameBuildOptions w2;
  w2.kind = "wootters";
  w2.d = 2;
  w2.out_path = path_in_scratch("w2.json");
  const cli::CommandResult r = cli::cmd_frame_build(w2);
  CHECK(r.exit_code == 0);
  CHECK(r.summary.find("tight IC frame, a=b=0.5") != std::string::npos);
  CHECK(fs::exists(w2.out_path));

  cli::FrameBuildOptions sic;
  sic.kind = "sic2";
  sic.out_path = path_in_scratch("sic2.json");
  const cli::CommandResult rs = cli::cmd_frame_build(sic);
  CHECK(rs.exit_code == 0);
  CHECK(rs.summary.find("IC-POVM, bounds (0.1667, 0.5)") != std::string::npos);

  cli::FrameBuildOptions bad;
  bad.kind = "wootters";
  bad.d = 4;
  bad.out_path = path_in_scratch("w4.json");
  const cli::CommandResult rb = cli::cmd_frame_build(bad);
  CHECK(rb.exit_code == 1);
  CHECK(rb.summary.find("prime") != std::string::npos);
}

TEST_CASE("cli: frame check reads back what build wrote") {
  cli::FrameBuildOptions mub;
  mub.kind = "mub";
  mub.d = 2;
  mub.out_path = path_in_scratch("mub2.json");
  REQUIRE(cli::cmd_frame_build(mub).exit_code == 0);

  const cli::CommandResult r =
      cli::cmd_frame_check(mub.out_path, path_in_scratch("mub2_report.json"), 1e-10);
  CHECK(r.exit_code == 0);
  CHECK(r.summary.find("IC-POVM") != std::string::npos);
  const Json report = Json::parse(read_file(path_in_scratch("mub2_report.json")));
  CHECK(report.at("informationally_complete").get<bool>());
  CHECK(report.at("gram_rank").get<int>() == 4);
}

TEST_CASE("cli: dual canonical and certify flow") {
  cli::FrameBuildOptions w2;
  w2.kind = "wootters";
  w2.d = 2;
  w2.out_path = path_in_scratch("flow_w2.json");
  REQUIRE(cli::cmd_frame_build(w2).exit_code == 0);

  cli::DualOptions dual;
  dual.frame_path = w2.out_path;
  dual.mode = "canonical";
  dual.out_path = path_in_scratch("flow_w2_dual.json");
  const cli::CommandResult rd = cli::cmd_dual(dual);
  CHECK(rd.exit_code == 0);

  // Duals equal the phase-point operators.
  const Frame f = load_frame(w2.out_path);
  const DualFrame d = load_dual(dual.out_path);
  for (int j = 0; j < f.size(); ++j)
    CHECK(max_abs_diff(d.elements[j].matrix(), (2.0 * f.elements[j]).matrix()) <= 1e-9);

  const cli::CommandResult rc =
      cli::cmd_certify(w2.out_path, dual.out_path, path_in_scratch("flow_report.json"));
  CHECK(rc.exit_code == 0);
  CHECK(rc.summary.find("BOTH_NEGATIVE") != std::string::npos);

  // A dual produced from a different frame is rejected by the hash check.
  cli::FrameBuildOptions sic;
  sic.kind = "sic2";
  sic.out_path = path_in_scratch("flow_sic.json");
  REQUIRE(cli::cmd_frame_build(sic).exit_code == 0);
  const cli::CommandResult rx = cli::cmd_certify(sic.out_path, dual.out_path, std::nullopt);
  CHECK(rx.exit_code == 1);
  CHECK(rx.summary.find("hash mismatch") != std::string::npos);
}

TEST_CASE("cli: dual canonical reports the sic eigenvalue floor") {
  cli::FrameBuildOptions sic;
  sic.kind = "sic2";
  sic.out_path = path_in_scratch("sicd.json");
  REQUIRE(cli::cmd_frame_build(sic).exit_code == 0);

  cli::DualOptions dual;
  dual.frame_path = sic.out_path;
  dual.mode = "canonical";
  dual.out_path = path_in_scratch("sicd_dual.json");
  const cli::CommandResult r = cli::cmd_dual(dual);
  CHECK(r.exit_code == 0);
  CHECK(r.summary.find("min eigenvalue -1") != std::string::npos);
}

TEST_CASE("cli: dual on a rank-deficient frame fails cleanly") {
  // Hand-written two-element frame {I/2, I/2}.
  const HermitianOperator half = 0.5 * identity_operator(2);
  Json j{{"dim", 2},
         {"labels", {"a", "b"}},
         {"elements", {operator_to_json(half), operator_to_json(half)}}};
  const std::string path = path_in_scratch("degenerate.json");
  save_json(path, j);

  cli::DualOptions dual;
  dual.frame_path = path;
  dual.mode = "canonical";
  dual.out_path = path_in_scratch("degenerate_dual.json");
  const cli::CommandResult r = cli::cmd_dual(dual);
  CHECK(r.exit_code == 1);
  CHECK(r.summary.find("rank") != std::string::npos);
}

TEST_CASE("cli: dual optimize writes a monotone trace report") {
  cli::FrameBuildOptions mub;
  mub.kind = "mub";
  mub.d = 2;
  mub.out_path = path_in_scratch("opt_mub.json");
  REQUIRE(cli::cmd_frame_build(mub).exit_code == 0);

  cli::DualOptions dual;
  dual.frame_path = mub.out_path;
  dual.mode = "optimize";
  dual.iters = 200;
  dual.out_path = path_in_scratch("opt_mub_dual.json");
  const cli::CommandResult r = cli::cmd_dual(dual);
  CHECK(r.exit_code == 0);

  const Json report = Json::parse(read_file(dual.out_path + ".report.json"));
  CHECK(report.at("value").get<double>() < 0.0);
  const auto trace = report.at("trace").get<std::vector<double>>();
  REQUIRE(trace.size() == 200);
  for (std::size_t t = 1; t < trace.size(); ++t) CHECK(trace[t] >= trace[t - 1]);
}

TEST_CASE("cli: rep commands") {
  cli::FrameBuildOptions sic;
  sic.kind = "sic2";
  sic.out_path = path_in_scratch("rep_sic.json");
  REQUIRE(cli::cmd_frame_build(sic).exit_code == 0);

  cli::DualOptions dual;
  dual.frame_path = sic.out_path;
  dual.mode = "canonical";
  dual.out_path = path_in_scratch("rep_sic_dual.json");
  REQUIRE(cli::cmd_dual(dual).exit_code == 0);

  save_json(path_in_scratch("mixed.json"),
            operator_to_json(0.5 * identity_operator(2)));
  save_json(path_in_scratch("id.json"), operator_to_json(identity_operator(2)));

  cli::RepOptions rs;
  rs.mode = "state";
  rs.frame_path = sic.out_path;
  rs.state_path = path_in_scratch("mixed.json");
  const cli::CommandResult r1 = cli::cmd_rep(rs);
  CHECK(r1.exit_code == 0);
  CHECK(r1.summary.find("0.25") != std::string::npos);
  CHECK(r1.summary.find("negativity 0") != std::string::npos);

  cli::RepOptions re;
  re.mode = "effect";
  re.dual_path = dual.out_path;
  re.effect_path = path_in_scratch("id.json");
  const cli::CommandResult r2 = cli::cmd_rep(re);
  CHECK(r2.exit_code == 0);
  CHECK(r2.summary.find("1") != std::string::npos);
  CHECK(r2.summary.find("negativity 0") != std::string::npos);

  cli::RepOptions rb;
  rb.mode = "born";
  rb.frame_path = sic.out_path;
  rb.dual_path = dual.out_path;
  rb.state_path = path_in_scratch("mixed.json");
  rb.effect_path = path_in_scratch("id.json");
  const cli::CommandResult r3 = cli::cmd_rep(rb);
  CHECK(r3.exit_code == 0);
  CHECK(r3.summary.find("residual") != std::string::npos);

  cli::RepOptions bad;
  bad.mode = "state";
  bad.frame_path = sic.out_path;
  bad.state_path = path_in_scratch("id.json");  // trace 2: not a state
  CHECK(cli::cmd_rep(bad).exit_code == 1);
}

TEST_CASE("cli: wigner transform") {
  Matrix vac(1, 1);
  vac(0, 0) = 1.0;
  save_json(path_in_scratch("vacuum.json"),
            operator_to_json(HermitianOperator(std::move(vac))));

  cli::WignerOptions w;
  w.state_path = path_in_scratch("vacuum.json");
  w.out_path = path_in_scratch("vacuum_w.json");
  w.csv_path = path_in_scratch("vacuum_w.csv");
  const cli::CommandResult r = cli::cmd_wigner(w);
  CHECK(r.exit_code == 0);
  CHECK(r.summary.find("W(0,0)=0.318310") != std::string::npos);
  CHECK(r.summary.find("default grid") != std::string::npos);
  CHECK(fs::exists(*w.csv_path));

  Matrix one(2, 2);
  one(1, 1) = 1.0;
  save_json(path_in_scratch("one.json"),
            operator_to_json(HermitianOperator(std::move(one))));

  cli::WignerOptions w1;
  w1.state_path = path_in_scratch("one.json");
  w1.grid_spec = "-6,6,-6,6,201,201";
  w1.out_path = path_in_scratch("one_w.json");
  w1.with_reconstruct = true;
  const cli::CommandResult r1 = cli::cmd_wigner(w1);
  CHECK(r1.exit_code == 0);
  CHECK(r1.summary.find("min -0.318310") != std::string::npos);
  CHECK(r1.summary.find("reconstruction residual") != std::string::npos);

  cli::WignerOptions bad = w;
  bad.grid_spec = "1,2,3";
  CHECK(cli::cmd_wigner(bad).exit_code == 1);
}

TEST_CASE("cli: random frame builds are deterministic per seed") {
  cli::FrameBuildOptions a;
  a.kind = "random-povm";
  a.d = 2;
  a.n = 5;
  a.seed = 42;
  a.out_path = path_in_scratch("rnd_a.json");
  REQUIRE(cli::cmd_frame_build(a).exit_code == 0);

  cli::FrameBuildOptions b = a;
  b.out_path = path_in_scratch("rnd_b.json");
  REQUIRE(cli::cmd_frame_build(b).exit_code == 0);

  CHECK(read_file(a.out_path) == read_file(b.out_path));
  CHECK(fnv1a_hex(read_file(a.out_path)) == fnv1a_hex(read_file(b.out_path)));
}
