// Copyright 2026 The spapt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "spapt/measures.hpp"
#include "spapt/states.hpp"

using namespace spapt;

namespace {
std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("validate: maximally mixed is accepted") {
  CHECK_NOTHROW((void)validate(0.25 * Matrix4::identity()));
}

TEST_CASE("validate: negative eigenvalue with unit trace") {
  // 0.5 + 0.6 + 0 - 0.1 = 1, so only positivity fails.
  try {
    (void)validate(Matrix4::diag({0.5, 0.6, 0.0, -0.1}));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.has(Violation::Kind::NotPsd));
    CHECK_FALSE(e.has(Violation::Kind::TraceNotOne));
    CHECK_FALSE(e.has(Violation::Kind::NotHermitian));
    CHECK(e.violations().front().magnitude == doctest::Approx(0.1));
  }
}

TEST_CASE("validate: trace and positivity both fail") {
  try {
    (void)validate(Matrix4::diag({0.5, 0.6, 0.1, -0.1}));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.has(Violation::Kind::TraceNotOne));
    CHECK(e.has(Violation::Kind::NotPsd));
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("validate: trace and Hermiticity magnitudes") {
  Matrix4 m = Matrix4::diag({0.3, 0.3, 0.2, 0.1});
  m(0, 1) = 0.01;
  try {
    (void)validate(m);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.has(Violation::Kind::NotHermitian));
    CHECK(e.has(Violation::Kind::TraceNotOne));
    for (const auto& v : e.violations())
      if (v.kind == Violation::Kind::TraceNotOne) CHECK(v.magnitude == doctest::Approx(0.1));
    CHECK(std::string(e.what()).find("trace deviation 0.1") != std::string::npos);
  }
}

TEST_CASE("validate: non-finite entries are rejected") {
  Matrix4 m = 0.25 * Matrix4::identity();
  m(2, 2) = std::nan("");
  CHECK_THROWS_AS((void)validate(m), ValidationError);
}

TEST_CASE("state file round trip is exact") {
  const DensityMatrix rho = family_pure_m(0.3);
  const auto path = temp_file("spapt_roundtrip.json");
  save_state(path, rho);
  const DensityMatrix back = load_state(path);
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) <= 1e-15);

  // Complex entries too.
  const DensityMatrix r2 = random_mixed(std::uint64_t{99});
  save_state(path, r2);
  CHECK(load_state(path).matrix() == r2.matrix());
  std::filesystem::remove(path);
}

TEST_CASE("state file: shape errors and missing files") {
  CHECK_THROWS_AS(parse_state_json("{\"re\": [[1,0],[0,0]]}"), InputError);
  CHECK_THROWS_AS(parse_state_json("not json"), InputError);
  CHECK_THROWS_AS(parse_state_json("{\"im\": []}"), InputError);
  CHECK_THROWS_AS(
      parse_state_json("{\"re\": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,\"x\"]]}"),
      InputError);
  const Matrix4 m = parse_state_json("{\"re\": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}");
  CHECK(m(0, 0) == cplx(1.0));
  CHECK_THROWS_AS((void)load_state("/nonexistent/spapt.json"), InputError);
}

TEST_CASE("pure_from_vector") {
  CHECK(pure_from_vector({1, 0, 0, 0}).matrix() == Matrix4::outer({1, 0, 0, 0}, {1, 0, 0, 0}));

  const double h = 1.0 / std::sqrt(2.0);
  const DensityMatrix bell = pure_from_vector({h, 0, 0, h});
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}})
    CHECK(std::abs(bell(i, j) - 0.5) <= 1e-15);

  CHECK_THROWS_AS((void)pure_from_vector({0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS((void)pure_from_vector({1, 0, 0, 1}), InputError);
  // Within 1e-6 of unit norm: renormalized.
  const DensityMatrix near = pure_from_vector({1.0 + 5e-7, 0, 0, 0});
  CHECK(near(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pure_from_vector: Schmidt form has concurrence 2|ab|") {
  for (double t : {0.1, 0.4, 0.7, 1.2}) {
    const cplx a = std::cos(t);
    const cplx b = std::polar(std::sin(t), 0.3);
    CHECK(concurrence_wootters(pure_from_vector({a, 0, 0, b})) ==
          doctest::Approx(2.0 * std::abs(a * b)).epsilon(1e-10));
  }
}

TEST_CASE("family_pure_m") {
  Matrix4 ket10;
  ket10(2, 2) = 1.0;
  CHECK(family_pure_m(0.0).matrix() == ket10);
  CHECK(negativity_exact(family_pure_m(0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  // sqrt(0.25 * 0.75) = sqrt(0.1875) = 0.4330127...
  CHECK(family_pure_m(0.25)(1, 2).real() == doctest::Approx(0.4330127018922193).epsilon(1e-15));
  CHECK_THROWS_AS((void)family_pure_m(1.01), InputError);
  CHECK_THROWS_AS((void)family_pure_m(-0.01), InputError);
}

TEST_CASE("family_horodecki") {
  Matrix4 ket00;
  ket00(0, 0) = 1.0;
  CHECK(family_horodecki(0.0).matrix() == ket00);
  CHECK(negativity_exact(family_horodecki(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negativity_exact(family_horodecki(0.5)) ==
        doctest::Approx(std::sqrt(0.5) - 0.5).epsilon(1e-13));
  CHECK(concurrence_wootters(family_horodecki(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS((void)family_horodecki(2.0), InputError);
}

TEST_CASE("family_quasi") {
  Matrix4 ket01;
  ket01(1, 1) = 1.0;
  CHECK(family_quasi(0.0).matrix() == ket01);
  CHECK(max_abs_diff(family_quasi(1.0).matrix(), bell_state(0).matrix()) <= 1e-15);
  CHECK(concurrence_wootters(family_quasi(0.5)) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS((void)family_quasi(std::nan("")), InputError);
}

TEST_CASE("families: every grid point validates; pure_m is rank one") {
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    CHECK(check_density(family_pure_m(x).matrix()).empty());
    CHECK(check_density(family_horodecki(x).matrix()).empty());
    CHECK(check_density(family_quasi(x).matrix()).empty());
    CHECK(herm_eigen(family_pure_m(x).matrix()).eigenvalues[2] <= 1e-10);
  }
  for (int k = 0; k < 4; ++k) CHECK(check_density(bell_state(k).matrix()).empty());
  CHECK_THROWS_AS((void)bell_state(4), InputError);
}

TEST_CASE("random states: valid, deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(check_density(random_pure(seed).matrix()).empty());
    for (int rank = 1; rank <= 4; ++rank)
      CHECK(check_density(random_mixed(seed, rank).matrix()).empty());
  }
  CHECK(random_pure(std::uint64_t{7}).matrix() == random_pure(std::uint64_t{7}).matrix());
  CHECK(random_mixed(std::uint64_t{7}).matrix() == random_mixed(std::uint64_t{7}).matrix());
  CHECK_FALSE(random_mixed(std::uint64_t{7}).matrix() == random_mixed(std::uint64_t{8}).matrix());
  CHECK_THROWS_AS((void)random_mixed(std::uint64_t{1}, 0), InputError);
  CHECK_THROWS_AS((void)random_mixed(std::uint64_t{1}, 5), InputError);
}

TEST_CASE("random states: rank matches the Ginibre width") {
  for (int rank = 1; rank <= 4; ++rank) {
    const auto s = herm_eigen(random_mixed(std::uint64_t{3}, rank).matrix());
    for (int i = 0; i < 4 - rank; ++i) CHECK(std::abs(s.eigenvalues[i]) <= 1e-12);
    CHECK(s.eigenvalues[4 - rank] > 1e-6);
  }
}

TEST_CASE("random_mixed ensemble: mean eigenvalue 1/4") {
  std::array<double, 4> sum{};
  const int n = 10000;
  Rng rng(2024);
  for (int i = 0; i < n; ++i) {
    const auto s = herm_eigen(random_mixed(rng, 4).matrix());
    for (std::size_t k = 0; k < 4; ++k) sum[k] += s.eigenvalues[k];
  }
  double total = 0;
  for (double v : sum) total += v / n;
  CHECK(total / 4.0 == doctest::Approx(0.25).epsilon(1e-12));
  // Expected matrix entry: E[rho] = I/4 for the unitarily invariant ensemble.
  Matrix4 mean;
  Rng rng2(2025);
  for (int i = 0; i < n; ++i) mean += random_mixed(rng2, 4).matrix();
  mean *= cplx(1.0 / n);
  CHECK(max_abs_diff(mean, 0.25 * Matrix4::identity()) <= 0.01);
}

TEST_CASE("resolve and family names") {
  CHECK(parse_family("horodecki") == StateSpec::Kind::Horodecki);
  CHECK_FALSE(parse_family("werner").has_value());
  CHECK(family_name(StateSpec::Kind::PureM) == "pure_m");
  CHECK(resolve({StateSpec::Kind::Bell, 2.0, std::nullopt}).matrix() == bell_state(2).matrix());
  CHECK_THROWS_AS((void)resolve({StateSpec::Kind::Bell, 1.5, std::nullopt}), InputError);
  CHECK_THROWS_AS((void)resolve({StateSpec::Kind::Raw, 0.0, std::nullopt}), InputError);
}
