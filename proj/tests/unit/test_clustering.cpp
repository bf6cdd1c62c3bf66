#include <doctest.h>

#include <sstream>

#include "wavedmd/clustering.hpp"
#include "wavedmd/errors.hpp"
#include "wavedmd/kmeans.hpp"
#include "wavedmd/random.hpp"

using namespace wavedmd;

TEST_CASE("bits for clusters") {
  CHECK(bits_for_clusters(2) == 1);
  CHECK(bits_for_clusters(3) == 2);
  CHECK(bits_for_clusters(4) == 2);
  CHECK(bits_for_clusters(7) == 3);
  CHECK(bits_for_clusters(8) == 3);
}

TEST_CASE("sign encoding skips the constant mode") {
  const std::vector<double> coeffs{0.9, 0.3, -0.2};
  CHECK(sign_encode(coeffs, 2) == 1);
  CHECK(sign_encode(std::vector<double>{-1.0, 0.5, 0.5}, 2) == 3);
  CHECK(sign_encode(std::vector<double>{1.0, -0.5, -0.5}, 2) == 0);
  CHECK_THROWS_AS(sign_encode(std::vector<double>{1.0, 0.5}, 2), InputError);
}

TEST_CASE("sign encoding is scale invariant and flip-equivariant") {
  Rng rng(1);
  std::vector<std::vector<double>> rows(30, std::vector<double>(4));
  for (auto& r : rows) {
    for (auto& v : r) v = uniform_in(rng, -1, 1);
  }
  std::vector<int> base;
  std::vector<int> scaled;
  std::vector<int> flipped;
  for (auto r : rows) {
    base.push_back(sign_encode(r, 3));
    auto s = r;
    for (auto& v : s) v *= 2.5;
    scaled.push_back(sign_encode(s, 3));
    r[2] = -r[2];
    flipped.push_back(sign_encode(r, 3));
  }
  CHECK(base == scaled);
  CHECK(agreement(base, flipped) == 1.0);
}

TEST_CASE("agreement under relabeling") {
  const std::vector<int> a{0, 0, 1, 1, 2, 2};
  const std::vector<int> b{2, 2, 0, 0, 1, 1};
  const std::vector<int> c{0, 1, 1, 1, 2, 2};
  CHECK(agreement(a, a) == 1.0);
  CHECK(agreement(a, b) == 1.0);
  CHECK(agreement(a, c) == doctest::Approx(5.0 / 6.0));
  CHECK(agreement(c, a) == agreement(a, c));
  const std::vector<int> d{7, 7, 7, 7, 7, 7};
  CHECK(agreement(a, d) == doctest::Approx(2.0 / 6.0));
  CHECK_THROWS_AS(agreement(a, std::vector<int>{0, 1}), InputError);
}

TEST_CASE("one flipped node costs one node of agreement") {
  const auto factions = karate_factions();
  auto flipped = factions;
  flipped[5] = 1 - flipped[5];
  CHECK(agreement(factions, flipped) == doctest::Approx(33.0 / 34.0));
}

TEST_CASE("k-means recovers separated clouds") {
  Rng rng(3);
  const double centres[4][2] = {{0, 0}, {10, 0}, {0, 10}, {10, 10}};
  Eigen::MatrixXd rows(80, 2);
  std::vector<int> truth;
  for (Index i = 0; i < 80; ++i) {
    const int c = static_cast<int>(i % 4);
    rows(i, 0) = centres[c][0] + uniform_in(rng, -0.5, 0.5);
    rows(i, 1) = centres[c][1] + uniform_in(rng, -0.5, 0.5);
    truth.push_back(c);
  }
  const KMeansResult r = kmeans(rows, 4);
  CHECK(agreement(r.labels, truth) == 1.0);
  CHECK(r.labels[0] == 0);
  CHECK(r.labels[1] == 1);
  CHECK(r.centers.rows() == 4);
  const ClusterAssignment a = kmeans_assign(rows, 4, 0);
  CHECK(a.labels == r.labels);
  CHECK(a.method == AssignmentMethod::kmeans);
}

TEST_CASE("k-means is deterministic per seed") {
  Rng rng(4);
  Eigen::MatrixXd rows(60, 3);
  for (Index i = 0; i < rows.size(); ++i) rows.data()[i] = uniform_in(rng, 0, 1);
  KMeansOptions opts;
  opts.seed = 17;
  const KMeansResult a = kmeans(rows, 5, opts);
  const KMeansResult b = kmeans(rows, 5, opts);
  CHECK(a.labels == b.labels);
  CHECK(a.inertia == b.inertia);
  for (int l : a.labels) CHECK(l < 5);
}

TEST_CASE("k-means input validation") {
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(5, 2);
  rows(0, 0) = 1.0;
  CHECK_THROWS_AS(kmeans(rows, 3), InputError);
  CHECK(kmeans(rows, 2).inertia == doctest::Approx(0.0));
  CHECK_THROWS_AS(kmeans(rows, 0), InputError);
}

TEST_CASE("assignment csv") {
  ClusterAssignment a;
  a.labels = {1, 0};
  std::ostringstream out;
  write_assignment_csv(out, a);
  CHECK(out.str() == "node,label\n0,1\n1,0\n");
}
