#include "plie/bialgebra.hpp"

#include "plie/errors.hpp"

namespace plie {
namespace {

std::vector<std::string> starred(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (!l.empty() && l.back() == '*')
      out.push_back(l.substr(0, l.size() - 1));
    else
      out.push_back(l + "*");
  }
  return out;
}

}  // namespace

Cocycle::Cocycle(std::vector<KVector> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  for (const auto& v : values_) {
    if (v.dim() != n || v.degree() != 2 || v.space() != Space::Primal)
      throw DimensionError("cocycle values must be primal 2-vectors of matching dimension");
  }
}

Cocycle Cocycle::zero(int dim) {
  return Cocycle(std::vector<KVector>(static_cast<std::size_t>(dim), KVector(dim, 2, Space::Primal)));
}

Cocycle Cocycle::from_entries(int dim, const std::vector<CocycleEntry>& entries) {
  std::vector<KVector> values(static_cast<std::size_t>(dim), KVector(dim, 2, Space::Primal));
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw DimensionError("cocycle entry index out of range");
    if (e.j >= e.k) throw PreconditionError("cocycle entries require j < k");
    values[static_cast<std::size_t>(e.i)].add_term({e.j, e.k}, e.value);
  }
  return Cocycle(std::move(values));
}

KVector Cocycle::apply(const Vector& u) const {
  if (static_cast<int>(u.size()) != dim()) throw DimensionError("cocycle apply: dim mismatch");
  KVector out(dim(), 2, Space::Primal);
  for (int i = 0; i < dim(); ++i)
    if (!u[i].is_zero()) out += u[i] * values_[i];
  return out;
}

std::vector<CocycleEntry> Cocycle::entries() const {
  std::vector<CocycleEntry> out;
  for (int i = 0; i < dim(); ++i)
    for (const auto& [idx, c] : values_[i].terms()) out.push_back({i, idx[0], idx[1], c});
  return out;
}

bool Cocycle::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Cocycle Cocycle::scaled(const Rational& s) const {
  Cocycle c = *this;
  for (auto& v : c.values_) v *= s;
  return c;
}

Bialgebra::Bialgebra(LieAlgebra algebra, Cocycle cocycle)
    : algebra_(std::move(algebra)), cocycle_(std::move(cocycle)) {
  if (algebra_.dim() != cocycle_.dim()) throw DimensionError("bialgebra: algebra and cocycle dims differ");
  const int n = algebra_.dim();
  std::vector<StructureConstant> consts;
  for (int m = 0; m < n; ++m)
    for (const auto& [idx, c] : cocycle_.value(m).terms()) consts.push_back({idx[0], idx[1], m, c});
  dual_ = LieAlgebra::raw(n, consts, starred(algebra_.labels()));
}

Vector dual_bracket(const Bialgebra& bi, const Vector& alpha, const Vector& beta) {
  const int n = bi.algebra().dim();
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw DimensionError("dual_bracket: dim mismatch");
  const KVector ab = wedge(KVector::from_vector(Space::Dual, alpha), KVector::from_vector(Space::Dual, beta));
  Vector out(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) out[m] = pairing(ab, bi.cocycle().value(m));
  return out;
}

LieAlgebra dual_algebra(const Bialgebra& bi) { return bi.dual_algebra(); }

Cocycle dual_cocycle(const Bialgebra& bi) {
  const LieAlgebra& alg = bi.algebra();
  const int n = alg.dim();
  std::vector<KVector> values(static_cast<std::size_t>(n), KVector(n, 2, Space::Primal));
  for (const auto& e : alg.entries()) values[static_cast<std::size_t>(e.k)].add_term({e.i, e.j}, e.value);
  return Cocycle(std::move(values));
}

Bialgebra dual_bialgebra(const Bialgebra& bi) { return Bialgebra(bi.dual_algebra(), dual_cocycle(bi)); }

KVector cocycle_defect(const Bialgebra& bi, const Vector& u, const Vector& v) {
  const LieAlgebra& alg = bi.algebra();
  const Cocycle& xi = bi.cocycle();
  KVector d = xi.apply(bracket_of(alg, u, v));
  d -= ad_apply(alg, u, xi.apply(v));
  d += ad_apply(alg, v, xi.apply(u));
  return d;
}

CocycleCheck is_cocycle(const Bialgebra& bi) {
  CocycleCheck out;
  const auto n = static_cast<std::size_t>(bi.algebra().dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      KVector d = cocycle_defect(bi, unit_vector(n, i), unit_vector(n, j));
      if (!d.is_zero()) {
        out.holds = false;
        out.witness = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        out.defect = std::move(d);
        return out;
      }
    }
  return out;
}

Vector modular_form(const Bialgebra& bi) { return ad_traces(bi.dual_algebra()); }

}  // namespace plie
