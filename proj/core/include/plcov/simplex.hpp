#ifndef PLCOV_SIMPLEX_HPP
#define PLCOV_SIMPLEX_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "plcov/base.hpp"

namespace plcov {

/// An abstract simplex: a strictly increasing, nonempty list of vertex ids.
/// Dimension is length - 1.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> verts)
      : verts_(verts) {
    validate();
  }
  explicit Simplex(std::vector<VertexId> verts) : verts_(std::move(verts)) {
    validate();
  }

  /// Builds from an arbitrary vertex list, sorting first.  Throws
  /// InvalidInput on duplicate vertices.
  static Simplex sorted(std::vector<VertexId> verts) {
    std::sort(verts.begin(), verts.end());
    return Simplex(std::move(verts));
  }

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  const std::vector<VertexId>& vertices() const { return verts_; }
  VertexId operator[](int i) const { return verts_[static_cast<size_t>(i)]; }
  VertexId min_vertex() const { return verts_.front(); }
  VertexId max_vertex() const { return verts_.back(); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  /// True iff `other` is a (not necessarily proper) face of this simplex.
  bool has_face(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
  }

  /// Face obtained by deleting the i-th vertex (0-based).
  Simplex face_opposite(int i) const {
    std::vector<VertexId> out;
    out.reserve(verts_.size() - 1);
    for (int j = 0; j < size(); ++j)
      if (j != i) out.push_back(verts_[static_cast<size_t>(j)]);
    return Simplex(std::move(out));
  }

  /// Vertices of this simplex that pass the predicate, as a simplex
  /// (possibly empty -> returned as an empty Simplex).
  template <typename Pred>
  Simplex restrict_to(Pred&& keep) const {
    std::vector<VertexId> out;
    for (VertexId v : verts_)
      if (keep(v)) out.push_back(v);
    Simplex s;
    s.verts_ = std::move(out);
    return s;
  }

  /// Join with a vertex-disjoint simplex.
  Simplex join(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;

 private:
  void validate() const {
    if (verts_.empty()) throw InvalidInput("simplex: empty vertex list");
    for (size_t i = 0; i + 1 < verts_.size(); ++i) {
      if (verts_[i] == verts_[i + 1])
        throw InvalidInput("simplex: duplicate vertex " +
                           std::to_string(verts_[i]));
      if (verts_[i] > verts_[i + 1])
        throw InvalidInput("simplex: vertices not sorted");
    }
    if (verts_.front() < 0) throw InvalidInput("simplex: negative vertex id");
  }

  std::vector<VertexId> verts_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

}  // namespace plcov

#endif  // PLCOV_SIMPLEX_HPP
