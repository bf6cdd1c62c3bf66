#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wavedmd/errors.hpp"
#include "wavedmd/random.hpp"
#include "wavedmd/wave.hpp"

using namespace wavedmd;

namespace {

WaveConfig config(Index t_max, Eigen::VectorXd u0, double c = 1.0) {
  WaveConfig cfg;
  cfg.c = c;
  cfg.t_max = t_max;
  cfg.init = std::move(u0);
  return cfg;
}

}  // namespace

TEST_CASE("local step hand evaluation") {
  const std::vector<NeighborValue> nb{{1.0, 1.0}, {-1.0, 0.0}};
  CHECK(step_local(1.0, 1.0, nb, 1.0) == 0.0);
  const std::vector<NeighborValue> zero{{1.0, 0.0}, {-1.0, 0.0}};
  CHECK(step_local(0.0, 0.0, zero, 1.0) == 0.0);
  const std::vector<NeighborValue> flat{{1.0, 3.0}, {-0.5, 3.0}, {-0.5, 3.0}};
  CHECK(step_local(3.0, 3.0, flat, 0.7) == 3.0);
}

TEST_CASE("two-node trace by hand") {
  const Graph g(2, {{0, 1, 1.0}});
  const TraceMatrix tr = propagate(g, config(4, Eigen::Vector2d(1.0, 0.0)));
  Eigen::MatrixXd expected(2, 4);
  expected << 1, 0, 0, 1, 0, 1, 1, 0;
  CHECK(tr.values == expected);
}

TEST_CASE("constant initial state stays constant") {
  const Graph g = karate_club();
  const TraceMatrix tr = propagate(g, config(40, Eigen::VectorXd::Constant(34, 0.25)));
  CHECK((tr.values.array() - 0.25).abs().maxCoeff() < 1e-12);
}

TEST_CASE("propagation matches powers of M on random graphs") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = generate_random_connected(4 + static_cast<Index>(s), 0.4, 0.1, 5.0, 100 + s);
    const Laplacian lap = build_laplacian(g);
    const Eigen::VectorXd u0 = random_initial_state(g.num_nodes(), s);
    const TraceMatrix a = propagate(lap, config(100, u0, 1.2));
    const TraceMatrix b = propagate_with_matrix(build_propagator(lap, 1.2), u0, 100);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("worker count does not change the trace") {
  const Laplacian lap = build_laplacian(karate_club());
  WaveConfig cfg;
  cfg.t_max = 300;
  cfg.init = RandomInit{3};
  const TraceMatrix serial = propagate(lap, cfg);
  cfg.workers = 4;
  const TraceMatrix parallel = propagate(lap, cfg);
  CHECK(serial.values == parallel.values);
}

TEST_CASE("seeded initial state is reproducible and in [0, 1)") {
  const Eigen::VectorXd a = random_initial_state(50, 9);
  CHECK(a == random_initial_state(50, 9));
  CHECK(a != random_initial_state(50, 10));
  CHECK(a.minCoeff() >= 0.0);
  CHECK(a.maxCoeff() < 1.0);
  Rng rng(9);
  CHECK(a(0) == unit_uniform(rng));
}

TEST_CASE("traces stay bounded for valid c") {
  const Laplacian lap = build_laplacian(generate_random_connected(10, 0.3, 0.1, 10.0, 4));
  for (double c : {0.3, 1.0, 1.41}) {
    WaveConfig cfg;
    cfg.c = c;
    cfg.t_max = 5000;
    const TraceMatrix tr = propagate(lap, cfg);
    // Neutral stability: growth at most linear (Jordan block at alpha = 1).
    CHECK(tr.values.cwiseAbs().maxCoeff() < 1e3);
  }
}

TEST_CASE("invalid wave speed and length are rejected") {
  const Graph g = karate_club();
  WaveConfig cfg;
  cfg.t_max = 10;
  for (double c : {0.0, -1.0, std::numbers::sqrt2, 2.0}) {
    cfg.c = c;
    CHECK_THROWS_AS(propagate(g, cfg), InputError);
  }
  cfg.c = 1.0;
  cfg.t_max = 1;
  CHECK_THROWS_AS(propagate(g, cfg), InputError);
  CHECK_THROWS_AS(propagate(g, config(10, Eigen::VectorXd::Zero(3))), InputError);
}

TEST_CASE("two-node propagator eigenvalues") {
  const Laplacian lap = build_laplacian(Graph(2, {{0, 1, 1.0}}));
  const WavePropagator prop = build_propagator(lap, 1.0);
  CHECK(prop.m.topLeftCorner(2, 2).isApprox((Eigen::Matrix2d() << 1, 1, 1, 1).finished()));
  Eigen::VectorXcd ev = prop.eigenvalues();
  std::vector<std::complex<double>> got(ev.data(), ev.data() + ev.size());
  std::sort(got.begin(), got.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
  CHECK(std::abs(got[0] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(std::abs(got[1] - 1.0) < 1e-7);
  CHECK(std::abs(got[2] - 1.0) < 1e-7);
  CHECK(std::abs(got[3] - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("alpha from lambda") {
  auto [a, b] = alpha_from_lambda(0.0, 0.8);
  CHECK(a == std::complex<double>(1.0, 0.0));
  CHECK(b == std::complex<double>(1.0, 0.0));
  std::tie(a, b) = alpha_from_lambda(2.0, 1.0);
  CHECK(std::abs(a - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(b - std::complex<double>(0, -1)) < 1e-15);
  CHECK_THROWS_AS(alpha_from_lambda(2.5, 1.0), InputError);
  CHECK_THROWS_AS(alpha_from_lambda(-0.1, 1.0), InputError);
}

TEST_CASE("lambda -> alpha -> lambda round trip on the unit circle") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = uniform_in(rng, 0.0, 2.0);
    const double c = uniform_in(rng, 0.01, std::numbers::sqrt2 - 1e-6);
    const auto [a, b] = alpha_from_lambda(lambda, c);
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-12);
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
    const double omega = std::arg(a);
    CHECK(std::abs(lambda_from_omega(omega, c) - lambda) < 1e-12);
    CHECK(std::abs(omega_from_lambda(lambda, c) - omega) < 1e-12);
  }
}

TEST_CASE("closed form on a ring matches propagation") {
  const Laplacian lap = build_laplacian(generate_ring(8));
  const Eigen::VectorXd u0 = random_initial_state(8, 1);
  const TraceMatrix tr = propagate(lap, config(64, u0));
  double worst = 0.0;
  for (Index t = 0; t < 64; ++t) {
    worst = std::max(worst, (closed_form_trace(lap, u0, 1.0, t) - tr.values.col(t)).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-9);
  CHECK((closed_form_trace(lap, u0, 1.0, 0) - u0).cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(8);
  CHECK((closed_form_trace(lap, ones, 1.0, 37) - ones).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("closed form refuses irregular graphs") {
  const Laplacian lap = build_laplacian(karate_club());
  CHECK_THROWS_AS(closed_form_trace(lap, Eigen::VectorXd::Ones(34), 1.0, 3), InputError);
}

TEST_CASE("propagator frequencies follow the Laplacian spectrum") {
  const Laplacian lap = build_laplacian(generate_ring(6));
  const Eigen::VectorXd freqs = propagator_frequencies(build_propagator(lap, 1.0), 1e-6);
  // Ring of 6: lambda = 1 - cos(2 pi k / 6) = {0, 0.5, 1.5, 2}.
  REQUIRE(freqs.size() == 4);
  const double lambdas[] = {0.0, 0.5, 1.5, 2.0};
  for (int j = 0; j < 4; ++j) CHECK(freqs(j) == doctest::Approx(omega_from_lambda(lambdas[j], 1.0)).epsilon(1e-7));
}

TEST_CASE("trace csv has one row per node") {
  const TraceMatrix tr = propagate(Graph(2, {{0, 1, 1.0}}), config(4, Eigen::Vector2d(1.0, 0.0)));
  std::ostringstream out;
  write_trace_csv(out, tr);
  CHECK(out.str() == "1,0,0,1\n0,1,1,0\n");
}
