#include "plcov/realization.hpp"

namespace plcov {

RationalRealization realize(const SimplicialComplex& x) {
  if (x.empty()) throw InvalidInput("realize: empty complex");
  auto ids = x.vertex_ids();
  int ambient = ids.back() + 1;
  RationalRealization r;
  r.ambient_dim = ambient;
  r.coords.assign(static_cast<size_t>(ambient), {});
  for (VertexId v : ids) {
    std::vector<Rational> p(static_cast<size_t>(ambient), Rational(0));
    p[static_cast<size_t>(v)] = 1;
    r.coords[static_cast<size_t>(v)] = std::move(p);
  }
  return r;
}

RationalRealization realize(const DerivedComplex& dc,
                            const RationalRealization& base,
                            std::optional<std::uint64_t> seed) {
  constexpr std::uint64_t kWeightScale = 1u << 20;
  RationalRealization r;
  r.ambient_dim = base.ambient_dim;
  r.coords.assign(static_cast<size_t>(dc.barycenter_count()), {});
  for (int b = 0; b < dc.barycenter_count(); ++b) {
    const Simplex& s = dc.base_simplex(b);
    std::vector<Rational> weights(static_cast<size_t>(s.size()), Rational(1));
    if (seed && s.dim() >= 1) {
      SplitMix64 rng(derive_seed(*seed, static_cast<std::uint64_t>(b)));
      for (auto& w : weights)
        w = Rational(Integer(kWeightScale + rng.next() % kWeightScale));
    }
    Rational total(0);
    for (const auto& w : weights) total += w;
    std::vector<Rational> p(static_cast<size_t>(base.ambient_dim), Rational(0));
    for (int i = 0; i < s.size(); ++i) {
      const auto& v = base.point(s[i]);
      for (size_t k = 0; k < p.size(); ++k)
        p[k] += weights[static_cast<size_t>(i)] / total * v[k];
    }
    r.coords[static_cast<size_t>(b)] = std::move(p);
  }
  return r;
}

bool affinely_independent(const std::vector<std::vector<Rational>>& points) {
  if (points.size() <= 1) return true;
  // Rank of the difference matrix via Gaussian elimination.
  std::vector<std::vector<Rational>> m;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(points[i].size());
    for (size_t k = 0; k < row.size(); ++k) row[k] = points[i][k] - points[0][k];
    m.push_back(std::move(row));
  }
  size_t rank = 0;
  size_t cols = m[0].size();
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank == m.size();
}

}  // namespace plcov
