// Coordinate models of Riemannian Poisson-Lie groups used by the numeric suite.
#include <cmath>

#include "plie/numcheck.hpp"

namespace plie::numeric {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd bivector(int n, std::initializer_list<std::tuple<int, int, double>> entries) {
  MatrixXd m = MatrixXd::Zero(n, n);
  for (const auto& [i, j, v] : entries) {
    m(i, j) = v;
    m(j, i) = -v;
  }
  return m;
}

Point additive(const Point& a, const Point& b) { return a + b; }

VectorXd components(std::initializer_list<double> values) {
  VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

CoordinateModel dim3_abelian() {
  constexpr double lambda = 1.0;
  CoordinateModel m;
  m.name = "dim3-abelian";
  m.description = "abelian R^3, pi = lambda dx^(z dy - y dz), Euclidean volume, lambda = 1";
  m.dim = 3;
  m.pi = [](const Point& p) { return bivector(3, {{0, 1, lambda * p[2]}, {0, 2, -lambda * p[1]}}); };
  m.mu = [](const Point&) { return 1.0; };
  m.group_law = additive;
  m.domain = Box::cube(3);
  // i_pi mu = lambda (y dy + z dz); components on (dx, dy, dz)
  m.closed_form = [](const Point& p) { return components({0.0, lambda * p[1], lambda * p[2]}); };
  m.identity = Point::Zero(3);
  return m;
}

CoordinateModel dim3_heisenberg() {
  constexpr double lambda = 1.0;
  constexpr double a = 2.0;
  CoordinateModel m;
  m.name = "dim3-heisenberg";
  m.description = "Heisenberg group, pi = lambda (x dy - y dx)^dz, metric dx^2 + dy^2 + a (dz - x dy)^2, a = 2";
  m.dim = 3;
  m.pi = [](const Point& p) { return bivector(3, {{1, 2, lambda * p[0]}, {0, 2, -lambda * p[1]}}); };
  m.mu = [](const Point&) { return std::sqrt(a); };
  m.group_law = [](const Point& u, const Point& v) {
    Point w = u + v;
    w[2] += u[0] * v[1];
    return w;
  };
  m.domain = Box::cube(3);
  m.closed_form = [](const Point& p) {
    return components({std::sqrt(a) * lambda * p[0], std::sqrt(a) * lambda * p[1], 0.0});
  };
  m.identity = Point::Zero(3);
  return m;
}

// pi = dx^(z dt - t dz) on coordinates (x, y, z, t)
MatrixXd rotation_bivector(const Point& p) { return bivector(4, {{0, 3, p[2]}, {0, 2, -p[3]}}); }

CoordinateModel dim4_unimodular_a() {
  CoordinateModel m;
  m.name = "dim4-unimodular-a";
  m.description = "abelian R^4, pi = dx^(z dt - t dz), Euclidean volume";
  m.dim = 4;
  m.pi = rotation_bivector;
  m.mu = [](const Point&) { return 1.0; };
  m.group_law = additive;
  m.domain = Box::cube(4);
  // z dy^dz + t dy^dt on (xy, xz, xt, yz, yt, zt)
  m.closed_form = [](const Point& p) { return components({0, 0, 0, p[2], p[3], 0}); };
  m.identity = Point::Zero(4);
  return m;
}

CoordinateModel dim4_unimodular_d() {
  constexpr double a = 2.0;
  CoordinateModel m;
  m.name = "dim4-unimodular-d";
  m.description = "R^4 with rotation-by-y law, pi = dx^(z dt - t dz), metric dx^2 + a dy^2 + dz^2 + dt^2, a = 2";
  m.dim = 4;
  m.pi = rotation_bivector;
  m.mu = [](const Point&) { return std::sqrt(a); };
  m.group_law = [](const Point& u, const Point& v) {
    const double c = std::cos(u[1]);
    const double s = std::sin(u[1]);
    Point w(4);
    w << u[0] + v[0], u[1] + v[1], u[2] + v[2] * c + v[3] * s, u[3] - v[2] * s + v[3] * c;
    return w;
  };
  m.domain = Box::cube(4);
  m.closed_form = [](const Point& p) {
    return components({0, 0, 0, std::sqrt(a) * p[2], std::sqrt(a) * p[3], 0});
  };
  m.identity = Point::Zero(4);
  return m;
}

constexpr double kB = 1.0;
constexpr double kC = 1.0;

Point exponential_rotation_law(const Point& u, const Point& v) {
  const double e = std::exp(u[0] * kB);
  const double c = std::cos(u[0] * kC);
  const double s = std::sin(u[0] * kC);
  Point w(4);
  w << u[0] + v[0], u[1] + v[1], u[2] + e * (v[2] * c + v[3] * s), u[3] + e * (-v[2] * s + v[3] * c);
  return w;
}

// pi = dy^(z dt - t dz)
MatrixXd nonunimodular_bivector(const Point& p) { return bivector(4, {{1, 3, p[2]}, {1, 2, -p[3]}}); }

CoordinateModel dim4_nonunimodular() {
  CoordinateModel m;
  m.name = "dim4-nonunimodular";
  m.description = "R^4 with exponential-rotation law (b = 1, c = 1), pi = dy^(z dt - t dz), mu = exp(-2bx)";
  m.dim = 4;
  m.pi = nonunimodular_bivector;
  m.mu = [](const Point& p) { return std::exp(-2.0 * kB * p[0]); };
  m.group_law = exponential_rotation_law;
  m.domain = Box::cube(4);
  // -exp(-2bx) (z dx^dz + t dx^dt)
  m.closed_form = [](const Point& p) {
    const double e = std::exp(-2.0 * kB * p[0]);
    return components({0, -e * p[2], -e * p[3], 0, 0, 0});
  };
  m.identity = Point::Zero(4);
  return m;
}

CoordinateModel perturbed(std::string name, std::string description, std::function<double(const Point&)> mu) {
  CoordinateModel m = dim4_nonunimodular();
  m.name = std::move(name);
  m.description = std::move(description);
  m.mu = std::move(mu);
  m.closed_form = nullptr;
  return m;
}

std::vector<CoordinateModel> build_models() {
  std::vector<CoordinateModel> all{dim3_abelian(), dim3_heisenberg(), dim4_unimodular_a(), dim4_unimodular_d(),
                                   dim4_nonunimodular()};
  all.push_back(perturbed("dim4-nonunimodular-perturbed",
                          "negative control: mu = exp(-2bx + x^2/2); depends on x only, so i_pi mu stays closed",
                          [](const Point& p) { return std::exp(-2.0 * kB * p[0] + 0.5 * p[0] * p[0]); }));
  all.push_back(perturbed("dim4-nonunimodular-perturbed-y", "negative control: mu = exp(-2bx + y^2/2)",
                          [](const Point& p) { return std::exp(-2.0 * kB * p[0] + 0.5 * p[1] * p[1]); }));
  return all;
}

}  // namespace

const std::vector<CoordinateModel>& models() {
  static const std::vector<CoordinateModel> all = build_models();
  return all;
}

const CoordinateModel& find_model(const std::string& name) {
  for (const auto& m : models())
    if (m.name == name) return m;
  throw UnknownNameError("numeric model " + name);
}

}  // namespace plie::numeric
