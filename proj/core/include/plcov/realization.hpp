#ifndef PLCOV_REALIZATION_HPP
#define PLCOV_REALIZATION_HPP

#include <optional>
#include <vector>

#include "plcov/derived.hpp"

namespace plcov {

/// Exact rational coordinates per vertex id.  Seeded barycenter
/// perturbations draw weights (D + r) with r < D = 2^20 from a splitmix64
/// stream, so every barycentric weight is positive with denominator at most
/// (dim+1) * 2^21 times the base denominators.
struct RationalRealization {
  int ambient_dim = 0;
  std::vector<std::vector<Rational>> coords;  // indexed by vertex id

  const std::vector<Rational>& point(VertexId v) const {
    return coords[static_cast<size_t>(v)];
  }
};

/// Standard-simplex embedding: vertex i -> i-th unit vector; ambient
/// dimension = max vertex id + 1.
RationalRealization realize(const SimplicialComplex& x);

/// Realization of T' over a realization of its base.  Without a seed every
/// barycenter is the true barycenter; with a seed, barycenters of simplices
/// of dimension >= 1 are perturbed to deterministic rational interior
/// points (vertices stay put).
RationalRealization realize(const DerivedComplex& dc,
                            const RationalRealization& base,
                            std::optional<std::uint64_t> seed = std::nullopt);

/// Affine independence of a point set, by exact rank computation.
bool affinely_independent(const std::vector<std::vector<Rational>>& points);

}  // namespace plcov

#endif  // PLCOV_REALIZATION_HPP
