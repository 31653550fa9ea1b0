#include "plcov/derived.hpp"

#include <algorithm>

namespace plcov {

DerivedComplex DerivedComplex::of(const SimplicialComplex& base) {
  if (base.empty()) throw InvalidInput("barycentric subdivision: empty complex");
  DerivedComplex dc;
  dc.base_ = base;
  dc.base_simplices_ = base.all_simplices();
  for (size_t i = 0; i < dc.base_simplices_.size(); ++i)
    dc.bary_id_[dc.base_simplices_[i]] = static_cast<int>(i);

  // Facets of T' are the maximal chains; they descend one dimension at a
  // time from a facet of the base.
  std::vector<Simplex> derived_facets;
  std::vector<int> chain;
  auto descend = [&](auto&& self, const Simplex& s) -> void {
    chain.push_back(dc.bary_id_.at(s));
    if (s.dim() == 0) {
      std::vector<VertexId> vs(chain.rbegin(), chain.rend());
      derived_facets.emplace_back(std::move(vs));
    } else {
      for (int i = 0; i < s.size(); ++i) self(self, s.face_opposite(i));
    }
    chain.pop_back();
  };
  for (const auto& f : base.facets()) descend(descend, f);
  dc.flat_ = SimplicialComplex::closure_from_facets(std::move(derived_facets));
  return dc;
}

int DerivedComplex::barycenter_of(const Simplex& s) const {
  auto it = bary_id_.find(s);
  if (it == bary_id_.end())
    throw InvalidInput("barycenter_of: simplex not in base complex");
  return it->second;
}

std::vector<int> DerivedComplex::chain_of(const Simplex& derived) const {
  std::vector<int> ids(derived.vertices().begin(), derived.vertices().end());
  std::reverse(ids.begin(), ids.end());
  return ids;
}

FlattenedSub flatten_sub(const SimplicialComplex& sub) {
  FlattenedSub out;
  out.complex = sub.densify(&out.to_bary);
  for (size_t i = 0; i < out.to_bary.size(); ++i)
    out.from_bary[out.to_bary[i]] = static_cast<int>(i);
  return out;
}

}  // namespace plcov
