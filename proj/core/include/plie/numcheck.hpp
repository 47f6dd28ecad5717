#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "plie/errors.hpp"

namespace plie::numeric {

using Point = Eigen::VectorXd;

/// Axis-aligned box; sample points are drawn from its interior.
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  static Box cube(int dim, double lo = -1.0, double hi = 1.0);
  int dim() const { return static_cast<int>(lo.size()); }
  /// True when every coordinate is at least `margin` inside the box.
  bool contains(const Point& p, double margin = 0.0) const;
};

/// Differential k-form on an open subset of ℝⁿ: components in
/// combinations(n, k) order (lexicographic, 0-based indices).
struct FormField {
  int dim = 0;
  int degree = 0;
  std::function<Eigen::VectorXd(const Point&)> eval;
};

struct CoordinateModel {
  std::string name;
  std::string description;
  int dim = 0;
  /// π^{ij}(p), antisymmetric.
  std::function<Eigen::MatrixXd(const Point&)> pi;
  /// Density m with μ = m dx_1∧…∧dx_n.
  std::function<double(const Point&)> mu;
  /// Group multiplication in coordinates; empty when not available.
  std::function<Point(const Point&, const Point&)> group_law;
  Box domain;
  /// Closed-form i_π μ in (n−2)-form components, when known.
  std::function<Eigen::VectorXd(const Point&)> closed_form;
  /// Where sample points for the multiplicativity check are drawn from, and
  /// the identity element of the group law.
  Point identity;
};

class DegenerateVolumeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

struct NumericTolerance {
  double fd_step = 1e-4;
  double abs_tol = 1e-5;

  /// Throws PreconditionError unless fd_step ∈ [1e−6, 1e−2] and abs_tol > 0.
  void validate() const;
};

/// Uniform points in the box shrunk by `margin` on every side.
std::vector<Point> sample_points(const Box& box, int count, double margin, std::uint64_t seed);

/// (dω)_{i0…ik} = Σ_j (−1)^j ∂_{ij} ω_{i0…îj…ik} with central differences.
/// Throws DomainError unless p lies at least `step` inside `domain`.
Eigen::VectorXd fd_exterior_derivative(const FormField& omega, const Point& p, double step, const Box& domain);

/// i_π(m·dx_1∧…∧dx_n): component on the complement of {i, j} is
/// (−1)^{i+j−1} π^{ij} m for 0-based i < j.
Eigen::VectorXd contract_bivector(const Eigen::MatrixXd& pi, double density);

struct PointResidual {
  Point point;
  double value = 0.0;
};

struct VolumeReport {
  std::string model;
  std::size_t points = 0;
  double max_residual = 0.0;
  /// Largest residuals, descending, at most five.
  std::vector<PointResidual> worst;
  std::optional<double> closed_form_deviation;
  bool pi_antisymmetric = true;
  NumericTolerance tolerance;
  bool passed = false;
};

/// Throws DegenerateVolumeError when μ is not strictly positive at a sample point.
VolumeReport check_volume_condition(const CoordinateModel& model, int points, const NumericTolerance& tol,
                                    std::uint64_t seed = 20240101);
VolumeReport check_volume_condition(const CoordinateModel& model, const std::vector<Point>& points,
                                    const NumericTolerance& tol);

struct MultiplicativityReport {
  std::string model;
  std::size_t pairs = 0;
  double max_deviation = 0.0;
  std::optional<std::pair<Point, Point>> worst_pair;
  NumericTolerance tolerance;
  bool passed = false;
};

/// Frobenius norm of π(ab) − (L_a)_*π(b) − (R_b)_*π(a).
double multiplicativity_deviation(const CoordinateModel& model, const Point& a, const Point& b, double step);

/// Throws PreconditionError when the model has no group law.
MultiplicativityReport check_multiplicativity(const CoordinateModel& model, int pairs, const NumericTolerance& tol,
                                              std::uint64_t seed = 20240101);
MultiplicativityReport check_multiplicativity(const CoordinateModel& model,
                                              const std::vector<std::pair<Point, Point>>& pairs,
                                              const NumericTolerance& tol);

/// Registered coordinate models, addressable by name.
const std::vector<CoordinateModel>& models();
/// Throws UnknownNameError.
const CoordinateModel& find_model(const std::string& name);

}  // namespace plie::numeric
