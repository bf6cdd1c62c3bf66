#include <doctest.h>

#include <cmath>
#include <sstream>

#include "wavedmd/errors.hpp"
#include "wavedmd/harness.hpp"
#include "wavedmd/io.hpp"

using namespace wavedmd;

namespace {

ExperimentConfig generated(const std::string& spec) {
  ExperimentConfig cfg;
  cfg.source.generator = parse_generator_spec(spec);
  return cfg;
}

}  // namespace

TEST_CASE("generator spec parsing") {
  const GeneratorSpec s = parse_generator_spec("line:n=10,weak=5");
  CHECK(s.kind == "line");
  CHECK(s.params.at("n") == "10");
  CHECK(s.params.at("weak") == "5");
  CHECK(parse_generator_spec("karate").params.empty());
  CHECK_THROWS_AS(parse_generator_spec("line:n"), InputError);
  CHECK_THROWS_AS(make_generated_graph(parse_generator_spec("line:q=1")), InputError);
  CHECK_THROWS_AS(make_generated_graph(parse_generator_spec("line:n=ten")), InputError);
  CHECK_THROWS_AS(make_generated_graph(parse_generator_spec("torus")), InputError);
  CHECK(make_generated_graph(parse_generator_spec("line:n=10,weak=5")).graph.num_nodes() == 10);
  CHECK(make_generated_graph(parse_generator_spec("planted:blocks=2,size=20,p_in=0.5,p_out=0.05"))
            .planted_labels->size() == 40);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = generated("karate");
  cfg.validate();
  cfg.source.file = "x.txt";
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = generated("karate");
  cfg.k = 1;
  CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("embedding defaults") {
  CHECK(resolve_embedding(34, 50).k_rows == 25);
  CHECK(resolve_embedding(34, 50).m_cols == 25);
  CHECK(resolve_embedding(50, 200).k_rows == 100);
  CHECK(resolve_embedding(34, 300).k_rows == 68);
  CHECK(resolve_embedding(34, 300).m_cols == 232);
  CHECK(resolve_embedding(34, 300, 10, 20).m_cols == 20);
  CHECK_THROWS_AS(resolve_embedding(34, 50, 40, 20), InputError);
}

TEST_CASE("grids") {
  CHECK(TmaxGrid{TmaxGrid::Kind::powers_of_two, 64, 0, 1024}.points() == std::vector<Index>{64, 128, 256, 512, 1024});
  CHECK(TmaxGrid{TmaxGrid::Kind::arithmetic, 20, 10, 50}.points() == std::vector<Index>{20, 30, 40, 50});
  CHECK_THROWS_AS((TmaxGrid{TmaxGrid::Kind::arithmetic, 20, 0, 50}.points()), InputError);
}

TEST_CASE("karate DMD pipeline at T_max = 50 agrees with the spectral reference") {
  ExperimentConfig cfg = generated("karate");
  cfg.t_max = 50;
  const ClusterReport r = run_cluster(cfg);
  CHECK(r.embedding.k_rows == 25);
  CHECK(r.embedding.m_cols == 25);
  REQUIRE(r.agreement);
  CHECK(*r.agreement == 1.0);
  CHECK(r.degraded_nodes.empty());
}

TEST_CASE("line graph pipeline splits at the weak edge") {
  ExperimentConfig cfg = generated("line");
  cfg.c = 1.4;
  const ClusterReport r = run_cluster(cfg);
  REQUIRE(r.agreement);
  CHECK(*r.agreement == 1.0);
}

TEST_CASE("spectral method reports itself as the reference") {
  ExperimentConfig cfg = generated("karate");
  cfg.method = Method::spectral;
  cfg.k = 0;
  const ClusterReport r = run_cluster(cfg);
  CHECK(r.k_estimated);
  CHECK(*r.agreement == 1.0);
}

TEST_CASE("reports are byte-identical for identical configs") {
  ExperimentConfig cfg = generated("karate");
  cfg.t_max = 64;
  cfg.method = Method::fft;
  const std::string a = report_json(run_cluster(cfg));
  const std::string b = report_json(run_cluster(cfg));
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
  CHECK(report_json(run_cluster(cfg), true).find("seconds") != std::string::npos);
}

TEST_CASE("oracle is skipped above the size limit") {
  ExperimentConfig cfg = generated("karate");
  cfg.oracle_limit = 10;
  const ClusterReport r = run_cluster(cfg);
  CHECK_FALSE(r.agreement);
  CHECK(report_json(r).find("\"agreement\": null") != std::string::npos);
}

TEST_CASE("minimum T_max search on karate") {
  const LoadedGraph g = make_generated_graph(parse_generator_spec("karate"));
  const ExperimentConfig cfg = generated("karate");
  const MinTmaxResult r =
      run_min_tmax_search(g, cfg, Method::dmd, {TmaxGrid::Kind::arithmetic, 20, 10, 200}, true);
  REQUIRE(r.minimum);
  CHECK(*r.minimum <= 60);
  CHECK(r.monotonicity_violations.empty());
  // The grid point before the minimum fails.
  for (std::size_t i = 1; i < r.scanned.size(); ++i) {
    if (r.scanned[i].t_max == *r.minimum) CHECK(r.scanned[i - 1].agreement < 1.0);
  }
  const MinTmaxResult none = run_min_tmax_search(g, cfg, Method::fft, {TmaxGrid::Kind::powers_of_two, 4, 0, 16});
  CHECK_FALSE(none.minimum);
  CHECK(none.describe() == "> 16");
}

TEST_CASE("error sweep on an on-grid tone graph") {
  // Two nodes: omega_2 = pi / 2 at c = 1, on every power-of-two grid from 4.
  ExperimentConfig cfg;
  const LoadedGraph g{Graph(2, {{0, 1, 1.0}}), "pair", std::nullopt};
  const auto rows = run_error_sweep(g, cfg, {16, 64});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CAPTURE(to_string(r.method));
    CHECK(r.nodes_used == 2);
    CHECK(r.mean_rel_err < 1e-12);
  }
}

TEST_CASE("error sweep csv and gnuplot output") {
  const std::vector<ErrorSweepRow> rows{{64, Method::dmd, 1e-5, 34, ""},
                                        {64, Method::fft, std::nan(""), 0, "no node produced an estimate"}};
  std::ostringstream csv;
  write_error_sweep_csv(csv, rows);
  CHECK(csv.str() == "t_max,method,mean_rel_err,nodes_used,note\n64,dmd,1.0000000000000001e-05,34,\n"
                     "64,fft,NaN,0,no node produced an estimate\n");
  std::ostringstream gp;
  write_error_sweep_gnuplot(gp, rows);
  CHECK(gp.str() == "# dmd\n# t_max mean_rel_err\n64 1e-05\n\n\n# fft\n# t_max mean_rel_err\n64 NaN\n");
}

TEST_CASE("adaptive DMD converges on karate") {
  ExperimentConfig cfg = generated("karate");
  const AdaptiveResult r = adaptive_dmd(karate_club(), cfg, 2, 32, 1024);
  CHECK(r.converged);
  CHECK(r.t_max <= 256);
  CHECK(r.spectra.size() == 34);
}

TEST_CASE("spectrum json") {
  const LocalSpectrum s = local_spectrum(Eigen::VectorXd::Constant(10, 2.0), 4, 6, 1.0, {}, 3);
  const std::string j = spectrum_json(s);
  CHECK(j.find("\"node\":3") != std::string::npos);
  CHECK(j.find("\"method\":\"dmd\"") != std::string::npos);
  CHECK(j.find("\"re_a\":2.0") != std::string::npos);
}
