#include "plie/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "plie/errors.hpp"

namespace plie {

Space opposite(Space s) { return s == Space::Primal ? Space::Dual : Space::Primal; }

std::vector<MultiIndex> combinations(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

KVector::KVector(int dim, int degree, Space space) : dim_(dim), degree_(degree), space_(space) {
  if (dim < 0 || degree < 0) throw DimensionError("KVector: negative dim or degree");
}

KVector KVector::basis(int dim, Space space, MultiIndex indices) {
  KVector v(dim, static_cast<int>(indices.size()), space);
  v.add_term(std::move(indices), Rational(1));
  return v;
}

KVector KVector::from_vector(Space space, const Vector& v) {
  const int n = static_cast<int>(v.size());
  KVector out(n, 1, space);
  for (int i = 0; i < n; ++i)
    if (!v[i].is_zero()) out.terms_[{i}] = v[i];
  return out;
}

KVector KVector::scalar(int dim, Space space, const Rational& value) {
  KVector out(dim, 0, space);
  if (!value.is_zero()) out.terms_[{}] = value;
  return out;
}

KVector KVector::top(int dim, Space space) {
  MultiIndex all(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) all[i] = i;
  return basis(dim, space, all);
}

Rational KVector::coeff(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational() : it->second;
}

void KVector::add_term(MultiIndex idx, const Rational& value) {
  if (static_cast<int>(idx.size()) != degree_) throw DimensionError("KVector: index length != degree");
  for (int i : idx)
    if (i < 0 || i >= dim_) throw DimensionError("KVector: basis index out of range");
  const int s = sort_with_sign(idx);
  if (s == 0 || value.is_zero()) return;
  Rational& slot = terms_[idx];
  if (s > 0)
    slot += value;
  else
    slot -= value;
  if (slot.is_zero()) terms_.erase(idx);
}

Vector KVector::to_dense() const {
  const auto basis = combinations(dim_, degree_);
  Vector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = coeff(basis[i]);
  return out;
}

KVector KVector::from_dense(int dim, int degree, Space space, const Vector& coeffs) {
  const auto basis = combinations(dim, degree);
  if (coeffs.size() != basis.size()) throw DimensionError("KVector::from_dense: size mismatch");
  KVector out(dim, degree, space);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out.terms_[basis[i]] = coeffs[i];
  return out;
}

KVector KVector::retagged(Space space) const {
  KVector out = *this;
  out.space_ = space;
  return out;
}

void KVector::check_compatible(const KVector& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_ || space_ != other.space_)
    throw DimensionError("KVector: incompatible operands");
}

KVector& KVector::operator+=(const KVector& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.terms_) {
    Rational& slot = terms_[idx];
    slot += c;
    if (slot.is_zero()) terms_.erase(idx);
  }
  return *this;
}

KVector& KVector::operator-=(const KVector& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.terms_) {
    Rational& slot = terms_[idx];
    slot -= c;
    if (slot.is_zero()) terms_.erase(idx);
  }
  return *this;
}

KVector& KVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

std::string KVector::str(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Rational shown = c;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      shown = abs(c);
    }
    os << shown;
    if (!idx.empty()) os << " ";
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (p) os << "^";
      if (static_cast<int>(labels.size()) == dim_)
        os << labels[idx[p]];
      else
        os << "e" << idx[p] + 1;
      if (space_ == Space::Dual && static_cast<int>(labels.size()) != dim_) os << "*";
    }
    first = false;
  }
  return os.str();
}

KVector wedge(const KVector& a, const KVector& b) {
  if (a.dim() != b.dim() || a.space() != b.space()) throw DimensionError("wedge: dim or space mismatch");
  KVector out(a.dim(), a.degree() + b.degree(), a.space());
  if (out.degree() > out.dim()) return out;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      MultiIndex joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      out.add_term(std::move(joined), ca * cb);
    }
  }
  return out;
}

Rational pairing(const KVector& a, const KVector& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    throw DimensionError("pairing: dim or degree mismatch");
  if (a.space() == b.space()) throw DimensionError("pairing: arguments must have opposite space tags");
  Rational s;
  for (const auto& [idx, c] : a.terms()) {
    const Rational other = b.coeff(idx);
    if (!other.is_zero()) s += c * other;
  }
  return s;
}

namespace {

// i_{e_m} applied to a single sorted basis element.
void contract_basis(int m, const MultiIndex& idx, const Rational& c, KVector& out) {
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] != m) continue;
    MultiIndex rest;
    rest.reserve(idx.size() - 1);
    for (std::size_t q = 0; q < idx.size(); ++q)
      if (q != p) rest.push_back(idx[q]);
    out.add_term(std::move(rest), (p % 2 == 0) ? c : -c);
    return;
  }
}

KVector contract_vector(int m, const Rational& weight, const KVector& x) {
  KVector out(x.dim(), x.degree() - 1, x.space());
  for (const auto& [idx, c] : x.terms()) contract_basis(m, idx, weight * c, out);
  return out;
}

}  // namespace

KVector interior(const KVector& alpha, const KVector& x) {
  if (alpha.dim() != x.dim()) throw DimensionError("interior: dim mismatch");
  if (alpha.space() == x.space()) throw DimensionError("interior: arguments must have opposite space tags");
  if (alpha.degree() > x.degree()) throw DimensionError("interior: degree(alpha) > degree(x)");
  KVector out(x.dim(), x.degree() - alpha.degree(), x.space());
  for (const auto& [aidx, ac] : alpha.terms()) {
    // i_{e_{a1}∧…∧e_{ap}} = i_{e_ap} ∘ … ∘ i_{e_a1}
    KVector cur = x;
    for (int m : aidx) cur = contract_vector(m, Rational(1), cur);
    out += ac * cur;
  }
  return out;
}

KVector ce_differential(const LieAlgebra& alg, const KVector& omega) {
  const int n = alg.dim();
  if (omega.dim() != n) throw DimensionError("ce_differential: dim mismatch");
  if (omega.space() != Space::Dual) throw DimensionError("ce_differential: expects a form (Dual tag)");
  const int k = omega.degree();
  KVector out(n, k + 1, Space::Dual);
  if (k + 1 > n || omega.is_zero()) return out;

  for (const MultiIndex& J : combinations(n, k + 1)) {
    Rational value;
    for (int a = 0; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        MultiIndex rest;
        for (int p = 0; p <= k; ++p)
          if (p != a && p != b) rest.push_back(J[p]);
        Rational term;
        for (int m = 0; m < n; ++m) {
          const Rational& c = alg.constant(J[a], J[b], m);
          if (c.is_zero()) continue;
          MultiIndex args{m};
          args.insert(args.end(), rest.begin(), rest.end());
          const int s = sort_with_sign(args);
          if (s == 0) continue;
          const Rational w = omega.coeff(args);
          if (w.is_zero()) continue;
          term += (s > 0 ? c * w : -(c * w));
        }
        if ((a + b) % 2 == 0)
          value += term;
        else
          value -= term;
      }
    }
    if (!value.is_zero()) out.add_term(J, value);
  }
  return out;
}

}  // namespace plie
