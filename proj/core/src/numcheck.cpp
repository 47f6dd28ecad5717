#include "plie/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "plie/exterior.hpp"

namespace plie::numeric {

Box Box::cube(int dim, double lo, double hi) {
  return {Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi)};
}

bool Box::contains(const Point& p, double margin) const {
  if (p.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] + margin || p[i] > hi[i] - margin) return false;
  return true;
}

void NumericTolerance::validate() const {
  if (!(fd_step >= 1e-6 && fd_step <= 1e-2))
    throw PreconditionError("fd_step must lie in [1e-6, 1e-2], got " + std::to_string(fd_step));
  if (!(abs_tol > 0.0)) throw PreconditionError("abs_tol must be positive");
}

std::vector<Point> sample_points(const Box& box, int count, double margin, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int s = 0; s < count; ++s) {
    Point p(box.dim());
    for (int i = 0; i < box.dim(); ++i) {
      const double lo = box.lo[i] + margin;
      const double hi = box.hi[i] - margin;
      p[i] = lo + (hi - lo) * unit(rng);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Eigen::VectorXd fd_exterior_derivative(const FormField& omega, const Point& p, double step, const Box& domain) {
  if (!domain.contains(p, step)) throw DomainError("fd_exterior_derivative: point too close to the domain boundary");
  const int n = omega.dim;
  const int k = omega.degree;
  const auto lower = combinations(n, k);
  const auto upper = combinations(n, k + 1);

  // partial[i] = ∂ω/∂x_i, all components
  std::vector<Eigen::VectorXd> partial;
  for (int i = 0; i < n; ++i) {
    Point plus = p;
    Point minus = p;
    plus[i] += step;
    minus[i] -= step;
    partial.push_back((omega.eval(plus) - omega.eval(minus)) / (2.0 * step));
  }

  const auto position = [&](const MultiIndex& idx) {
    return static_cast<Eigen::Index>(std::lower_bound(lower.begin(), lower.end(), idx) - lower.begin());
  };

  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(upper.size()));
  for (std::size_t u = 0; u < upper.size(); ++u) {
    const auto& idx = upper[u];
    for (std::size_t j = 0; j < idx.size(); ++j) {
      MultiIndex rest;
      for (std::size_t m = 0; m < idx.size(); ++m)
        if (m != j) rest.push_back(idx[m]);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      d[static_cast<Eigen::Index>(u)] += sign * partial[static_cast<std::size_t>(idx[j])][position(rest)];
    }
  }
  return d;
}

Eigen::VectorXd contract_bivector(const Eigen::MatrixXd& pi, double density) {
  const int n = static_cast<int>(pi.rows());
  const auto lower = combinations(n, n - 2);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(lower.size()));
  // complement of {i,j} in lexicographic order sits at reverse position of (i,j)
  const auto pairs = combinations(n, 2);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int i = pairs[p][0];
    const int j = pairs[p][1];
    const double sign = ((i + j - 1) % 2 == 0) ? 1.0 : -1.0;
    out[static_cast<Eigen::Index>(pairs.size() - 1 - p)] = sign * pi(i, j) * density;
  }
  return out;
}

namespace {

bool antisymmetric(const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

// ∂m(a, b)/∂b (which = 0) or ∂m(a, b)/∂a (which = 1) by central differences.
Eigen::MatrixXd law_jacobian(const CoordinateModel& model, const Point& a, const Point& b, int which, double step) {
  const int n = model.dim;
  Eigen::MatrixXd jac(n, n);
  for (int i = 0; i < n; ++i) {
    Point plus = which == 0 ? b : a;
    Point minus = plus;
    plus[i] += step;
    minus[i] -= step;
    const Point fp = which == 0 ? model.group_law(a, plus) : model.group_law(plus, b);
    const Point fm = which == 0 ? model.group_law(a, minus) : model.group_law(minus, b);
    jac.col(i) = (fp - fm) / (2.0 * step);
  }
  return jac;
}

}  // namespace

VolumeReport check_volume_condition(const CoordinateModel& model, const std::vector<Point>& points,
                                    const NumericTolerance& tol) {
  tol.validate();
  if (!model.pi || !model.mu) throw PreconditionError("check_volume_condition: model lacks pi or mu");
  VolumeReport r;
  r.model = model.name;
  r.points = points.size();
  r.tolerance = tol;

  const FormField contraction{model.dim, model.dim - 2, [&](const Point& p) {
                                const double m = model.mu(p);
                                if (!(m > 0.0)) throw DegenerateVolumeError("mu is not positive at a sample point");
                                return contract_bivector(model.pi(p), m);
                              }};

  std::vector<PointResidual> all;
  for (const auto& p : points) {
    const Eigen::MatrixXd pi = model.pi(p);
    if (!antisymmetric(pi)) r.pi_antisymmetric = false;
    if (model.closed_form) {
      const double dev = (contraction.eval(p) - model.closed_form(p)).cwiseAbs().maxCoeff();
      r.closed_form_deviation = std::max(r.closed_form_deviation.value_or(0.0), dev);
    }
    const Eigen::VectorXd d = fd_exterior_derivative(contraction, p, tol.fd_step, model.domain);
    const double value = d.size() == 0 ? 0.0 : d.cwiseAbs().maxCoeff();
    r.max_residual = std::max(r.max_residual, value);
    all.push_back({p, value});
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.value > y.value; });
  all.resize(std::min<std::size_t>(all.size(), 5));
  r.worst = std::move(all);
  r.passed = r.pi_antisymmetric && r.max_residual < tol.abs_tol;
  return r;
}

VolumeReport check_volume_condition(const CoordinateModel& model, int points, const NumericTolerance& tol,
                                    std::uint64_t seed) {
  tol.validate();
  return check_volume_condition(model, sample_points(model.domain, points, 2.0 * tol.fd_step, seed), tol);
}

double multiplicativity_deviation(const CoordinateModel& model, const Point& a, const Point& b, double step) {
  if (!model.group_law) throw PreconditionError("model " + model.name + " has no group law");
  const Eigen::MatrixXd left = law_jacobian(model, a, b, 0, step);   // (L_a)_* at b
  const Eigen::MatrixXd right = law_jacobian(model, a, b, 1, step);  // (R_b)_* at a
  const Eigen::MatrixXd expected = left * model.pi(b) * left.transpose() + right * model.pi(a) * right.transpose();
  return (model.pi(model.group_law(a, b)) - expected).norm();
}

MultiplicativityReport check_multiplicativity(const CoordinateModel& model,
                                              const std::vector<std::pair<Point, Point>>& pairs,
                                              const NumericTolerance& tol) {
  tol.validate();
  if (!model.group_law) throw PreconditionError("model " + model.name + " has no group law");
  MultiplicativityReport r;
  r.model = model.name;
  r.pairs = pairs.size();
  r.tolerance = tol;
  for (const auto& [a, b] : pairs) {
    const double dev = multiplicativity_deviation(model, a, b, tol.fd_step);
    if (!r.worst_pair || dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_pair = {a, b};
    }
  }
  r.passed = r.max_deviation < tol.abs_tol;
  return r;
}

MultiplicativityReport check_multiplicativity(const CoordinateModel& model, int pairs, const NumericTolerance& tol,
                                              std::uint64_t seed) {
  tol.validate();
  const auto pts = sample_points(model.domain, 2 * pairs, 0.0, seed);
  std::vector<std::pair<Point, Point>> ps;
  for (int i = 0; i < pairs; ++i) ps.emplace_back(pts[2 * static_cast<std::size_t>(i)], pts[2 * static_cast<std::size_t>(i) + 1]);
  return check_multiplicativity(model, ps, tol);
}

}  // namespace plie::numeric
