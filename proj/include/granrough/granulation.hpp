#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "granrough/universe.hpp"

namespace granrough {

enum class Closure { None, Reflexive, Symmetric, Tolerance, Equivalence };
enum class NeighborhoodMode { Predecessor, Successor };
enum class Provenance { Explicit, PredecessorNeighborhood, SuccessorNeighborhood };

std::string to_string(Closure c);
Closure parse_closure(const std::string& text);
std::string to_string(Provenance p);

/// Binary relation given by generator pairs and a closure rule.
struct RelationSpec {
  std::vector<std::pair<std::string, std::string>> pairs;
  Closure closure = Closure::None;
};

/// A binary relation on a universe as successor rows: bit j of rows[i] is set iff (i, j) is related.
class Relation {
 public:
  Relation(Universe universe, std::vector<Mask> rows);
  /// Throws ParameterError naming any label that is not an element.
  static Relation from_spec(const Universe& u, const RelationSpec& spec);

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& rows() const { return rows_; }
  bool related(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }

  Relation closed(Closure c) const;
  bool is_symmetric() const;
  /// Row i of the predecessor view: {y : (y, i) related}.
  Mask predecessors(std::size_t i) const;
  Mask successors(std::size_t i) const { return rows_[i]; }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.rows_ == b.rows_;
  }

 private:
  Universe universe_;
  std::vector<Mask> rows_;
};

/// Element-indexed neighborhood map, as used by the pointwise approximations.
class NeighborhoodMap {
 public:
  NeighborhoodMap(Universe universe, std::vector<Mask> neighborhoods);
  const Universe& universe() const { return universe_; }
  Mask of(std::size_t element) const { return neighborhoods_.at(element); }
  const std::vector<Mask>& all() const { return neighborhoods_; }

 private:
  Universe universe_;
  std::vector<Mask> neighborhoods_;
};

/// Ordered collection of distinct, non-empty granules over one universe.
class Granulation {
 public:
  /// Explicit granulation; throws ParameterError on empty or duplicate granules.
  Granulation(Universe universe, std::vector<Mask> granules);

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& granules() const { return granules_; }
  std::size_t size() const { return granules_.size(); }
  Provenance provenance() const { return provenance_; }
  /// Per-element neighborhoods (before empty ones were dropped), for relation-derived granulations.
  const std::optional<NeighborhoodMap>& neighborhoods() const { return neighborhoods_; }
  /// Union of all granules.
  Mask cover() const;
  bool contains(Mask granule) const;

  friend Granulation build_neighborhood_granulation(const Universe& u, const RelationSpec& r, NeighborhoodMode mode);

 private:
  Granulation(Universe universe, std::vector<Mask> granules, Provenance provenance, NeighborhoodMap neighborhoods);

  Universe universe_;
  std::vector<Mask> granules_;
  Provenance provenance_ = Provenance::Explicit;
  std::optional<NeighborhoodMap> neighborhoods_;
};

/// Granules are the (predecessor or successor) neighborhoods of the closed
/// relation, in element order; duplicates collapse onto their first occurrence
/// and empty neighborhoods are dropped.
Granulation build_neighborhood_granulation(const Universe& u, const RelationSpec& r, NeighborhoodMode mode);

}  // namespace granrough
