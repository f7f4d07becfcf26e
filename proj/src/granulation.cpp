#include "granrough/granulation.hpp"

#include <algorithm>

#include "granrough/error.hpp"

namespace granrough {

std::string to_string(Closure c) {
  switch (c) {
    case Closure::None:
      return "none";
    case Closure::Reflexive:
      return "reflexive";
    case Closure::Symmetric:
      return "symmetric";
    case Closure::Tolerance:
      return "tolerance";
    case Closure::Equivalence:
      return "equivalence";
  }
  return "none";
}

Closure parse_closure(const std::string& text) {
  for (Closure c : {Closure::None, Closure::Reflexive, Closure::Symmetric, Closure::Tolerance, Closure::Equivalence}) {
    if (to_string(c) == text) return c;
  }
  throw ParameterError("unknown closure '" + text +
                       "' (expected none, reflexive, symmetric, tolerance or equivalence)");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Explicit:
      return "explicit";
    case Provenance::PredecessorNeighborhood:
      return "predecessor-neighborhood";
    case Provenance::SuccessorNeighborhood:
      return "successor-neighborhood";
  }
  return "explicit";
}

Relation::Relation(Universe universe, std::vector<Mask> rows) : universe_(std::move(universe)), rows_(std::move(rows)) {
  if (rows_.size() != universe_.size()) throw ParameterError("relation row count must match universe size");
  for (Mask r : rows_) {
    if (!is_subset(r, universe_.full())) throw ParameterError("relation row outside universe");
  }
}

Relation Relation::from_spec(const Universe& u, const RelationSpec& spec) {
  std::vector<Mask> rows(u.size(), 0);
  for (const auto& [from, to] : spec.pairs) {
    const std::size_t i = u.index_of(from);
    const std::size_t j = u.index_of(to);
    rows[i] |= Mask{1} << j;
  }
  return Relation(u, std::move(rows)).closed(spec.closure);
}

Relation Relation::closed(Closure c) const {
  std::vector<Mask> rows = rows_;
  const std::size_t n = rows.size();
  const bool reflexive = c == Closure::Reflexive || c == Closure::Tolerance || c == Closure::Equivalence;
  const bool symmetric = c == Closure::Symmetric || c == Closure::Tolerance || c == Closure::Equivalence;
  if (reflexive) {
    for (std::size_t i = 0; i < n; ++i) rows[i] |= Mask{1} << i;
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((rows[i] >> j) & 1U) rows[j] |= Mask{1} << i;
      }
    }
  }
  if (c == Closure::Equivalence) {
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((rows[i] >> k) & 1U) rows[i] |= rows[k];
      }
    }
  }
  return Relation(universe_, std::move(rows));
}

bool Relation::is_symmetric() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (related(i, j) != related(j, i)) return false;
    }
  }
  return true;
}

Mask Relation::predecessors(std::size_t i) const {
  Mask m = 0;
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    if (related(y, i)) m |= Mask{1} << y;
  }
  return m;
}

NeighborhoodMap::NeighborhoodMap(Universe universe, std::vector<Mask> neighborhoods)
    : universe_(std::move(universe)), neighborhoods_(std::move(neighborhoods)) {
  if (neighborhoods_.size() != universe_.size()) {
    throw ParameterError("neighborhood map must assign a set to every element");
  }
  for (Mask m : neighborhoods_) {
    if (!is_subset(m, universe_.full())) throw ParameterError("neighborhood outside universe");
  }
}

Granulation::Granulation(Universe universe, std::vector<Mask> granules)
    : universe_(std::move(universe)), granules_(std::move(granules)) {
  for (std::size_t i = 0; i < granules_.size(); ++i) {
    const Mask g = granules_[i];
    if (g == 0) throw ParameterError("granule " + std::to_string(i) + " is empty");
    if (!is_subset(g, universe_.full())) throw ParameterError("granule outside universe");
    if (std::find(granules_.begin(), granules_.begin() + static_cast<std::ptrdiff_t>(i), g) !=
        granules_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw ParameterError("duplicate granule " + universe_.format(g));
    }
  }
}

Granulation::Granulation(Universe universe, std::vector<Mask> granules, Provenance provenance,
                         NeighborhoodMap neighborhoods)
    : Granulation(std::move(universe), std::move(granules)) {
  provenance_ = provenance;
  neighborhoods_ = std::move(neighborhoods);
}

Mask Granulation::cover() const {
  Mask m = 0;
  for (Mask g : granules_) m |= g;
  return m;
}

bool Granulation::contains(Mask granule) const {
  return std::find(granules_.begin(), granules_.end(), granule) != granules_.end();
}

Granulation build_neighborhood_granulation(const Universe& u, const RelationSpec& r, NeighborhoodMode mode) {
  const Relation rel = Relation::from_spec(u, r);
  std::vector<Mask> hoods(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    hoods[i] = mode == NeighborhoodMode::Predecessor ? rel.predecessors(i) : rel.successors(i);
  }
  std::vector<Mask> granules;
  for (Mask h : hoods) {
    if (h != 0 && std::find(granules.begin(), granules.end(), h) == granules.end()) granules.push_back(h);
  }
  const Provenance p =
      mode == NeighborhoodMode::Predecessor ? Provenance::PredecessorNeighborhood : Provenance::SuccessorNeighborhood;
  return Granulation(u, std::move(granules), p, NeighborhoodMap(u, std::move(hoods)));
}

}  // namespace granrough
