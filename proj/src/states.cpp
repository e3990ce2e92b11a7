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

#include "spapt/states.hpp"

#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "json.hpp"

namespace spapt {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw InputError(fmt::format("{} must lie in [0, 1], got {}", name, x));
}

}  // namespace

std::vector<Violation> check_density(const Matrix4& raw) {
  for (const auto& x : raw.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      return {{Violation::Kind::NotFinite, 0.0}};

  std::vector<Violation> out;
  const double defect = raw.hermitian_defect();
  if (defect > tol::kValidate) out.push_back({Violation::Kind::NotHermitian, defect});

  const double trace_dev = std::abs(raw.trace() - 1.0);
  if (trace_dev > tol::kValidate) out.push_back({Violation::Kind::TraceNotOne, trace_dev});

  const Matrix4 herm = 0.5 * (raw + raw.adjoint());
  const double lmin = herm_eigen(herm).min();
  if (lmin < -tol::kPsdClamp) out.push_back({Violation::Kind::NotPsd, -lmin});
  return out;
}

DensityMatrix validate(const Matrix4& raw) {
  auto violations = check_density(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return DensityMatrix(raw);
}

DensityMatrix pure_from_vector(const Vector<4>& v) {
  const double n = norm(v);
  if (n == 0.0) throw InputError("state vector is zero");
  if (std::abs(n - 1.0) > 1e-6)
    throw InputError(fmt::format("state vector norm {} is not 1", n));
  Vector<4> u = v;
  for (auto& x : u) x /= n;
  return validate(Matrix4::projector(u));
}

DensityMatrix family_pure_m(double m) {
  require_unit_interval(m, "M");
  Matrix4 r;
  const double off = std::sqrt(m * (1.0 - m));
  r(1, 1) = m;
  r(2, 2) = 1.0 - m;
  r(1, 2) = off;
  r(2, 1) = off;
  return validate(r);
}

DensityMatrix family_horodecki(double p) {
  require_unit_interval(p, "p");
  Matrix4 r;
  r(0, 0) = 1.0 - p;
  r(1, 1) = 0.5 * p;
  r(2, 2) = 0.5 * p;
  r(1, 2) = 0.5 * p;
  r(2, 1) = 0.5 * p;
  return validate(r);
}

DensityMatrix family_quasi(double c) {
  require_unit_interval(c, "C");
  Matrix4 r;
  r(0, 0) = r(3, 3) = r(0, 3) = r(3, 0) = 0.5 * c;
  r(1, 1) = 1.0 - c;
  return validate(r);
}

Vector<4> bell_vector(int index) {
  const double h = std::sqrt(0.5);
  switch (index) {
    case 0: return {h, 0.0, 0.0, h};
    case 1: return {h, 0.0, 0.0, -h};
    case 2: return {0.0, h, h, 0.0};
    case 3: return {0.0, h, -h, 0.0};
    default: throw InputError(fmt::format("Bell index must be 0..3, got {}", index));
  }
}

DensityMatrix bell_state(int index) {
  return validate(Matrix4::projector(bell_vector(index)));
}

DensityMatrix maximally_mixed() { return validate(0.25 * Matrix4::identity()); }

DensityMatrix random_pure(Rng& rng) {
  Vector<4> v;
  for (auto& x : v) x = rng.complex_normal();
  const double n = norm(v);
  for (auto& x : v) x /= n;
  return validate(Matrix4::projector(v));
}

DensityMatrix random_pure(std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(rng);
}

DensityMatrix random_mixed(Rng& rng, int rank) {
  if (rank < 1 || rank > 4)
    throw InputError(fmt::format("rank must be 1..4, got {}", rank));
  std::array<std::array<cplx, 4>, 4> g{};
  for (std::size_t i = 0; i < 4; ++i)
    for (int k = 0; k < rank; ++k) g[i][static_cast<std::size_t>(k)] = rng.complex_normal();
  Matrix4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < static_cast<std::size_t>(rank); ++k)
        r(i, j) += g[i][k] * std::conj(g[j][k]);
  r *= cplx(1.0 / r.trace().real());
  // Hermitian by construction; enforce it bitwise so validation is exact.
  for (std::size_t i = 0; i < 4; ++i) {
    r(i, i) = r(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) r(j, i) = std::conj(r(i, j));
  }
  return validate(r);
}

DensityMatrix random_mixed(std::uint64_t seed, int rank) {
  Rng rng(seed);
  return random_mixed(rng, rank);
}

std::optional<StateSpec::Kind> parse_family(std::string_view name) {
  using K = StateSpec::Kind;
  if (name == "pure_m") return K::PureM;
  if (name == "horodecki") return K::Horodecki;
  if (name == "quasi") return K::Quasi;
  if (name == "bell") return K::Bell;
  return std::nullopt;
}

std::string_view family_name(StateSpec::Kind kind) {
  switch (kind) {
    case StateSpec::Kind::Raw: return "raw";
    case StateSpec::Kind::PureM: return "pure_m";
    case StateSpec::Kind::Horodecki: return "horodecki";
    case StateSpec::Kind::Quasi: return "quasi";
    case StateSpec::Kind::Bell: return "bell";
  }
  return "unknown";
}

DensityMatrix resolve(const StateSpec& spec) {
  switch (spec.kind) {
    case StateSpec::Kind::Raw:
      if (!spec.source_path) throw InputError("raw state requires a file path");
      return load_state(*spec.source_path);
    case StateSpec::Kind::PureM: return family_pure_m(spec.param);
    case StateSpec::Kind::Horodecki: return family_horodecki(spec.param);
    case StateSpec::Kind::Quasi: return family_quasi(spec.param);
    case StateSpec::Kind::Bell: {
      const double idx = spec.param;
      if (idx != std::floor(idx) || idx < 0.0 || idx > 3.0)
        throw InputError(fmt::format("Bell index must be 0..3, got {}", idx));
      return bell_state(static_cast<int>(idx));
    }
  }
  throw InputError("unknown state kind");
}

Matrix4 parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(fmt::format("state file is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("re"))
    throw InputError("state file must be an object with a \"re\" array");

  auto read_part = [&doc](const char* key, Matrix4& m, bool imaginary) {
    const auto& rows = doc.at(key);
    if (!rows.is_array() || rows.size() != 4)
      throw InputError(fmt::format("\"{}\" must be a 4x4 array", key));
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != 4)
        throw InputError(fmt::format("\"{}\" row {} must have 4 entries", key, i));
      for (std::size_t j = 0; j < 4; ++j) {
        if (!row[j].is_number())
          throw InputError(fmt::format("\"{}\"[{}][{}] is not a number", key, i, j));
        const double x = row[j].get<double>();
        if (imaginary)
          m(i, j).imag(x);
        else
          m(i, j).real(x);
      }
    }
  };

  Matrix4 m;
  read_part("re", m, false);
  if (doc.contains("im")) read_part("im", m, true);
  return m;
}

std::string to_state_json(const Matrix4& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ii = nlohmann::json::array();
    for (std::size_t j = 0; j < 4; ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  nlohmann::json doc;
  doc["re"] = re;
  doc["im"] = im;
  return doc.dump() + "\n";
}

DensityMatrix load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open state file {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return validate(parse_state_json(buf.str()));
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(fmt::format("cannot write state file {}", path.string()));
  out << to_state_json(rho.matrix());
}

}  // namespace spapt
