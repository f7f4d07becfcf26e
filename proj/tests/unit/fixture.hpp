#pragma once

#include <string>
#include <vector>

#include "granrough/approx.hpp"
#include "granrough/granulation.hpp"
#include "granrough/universe.hpp"
#include "oracle.hpp"

namespace testfx {

/// Four-element universe with the tolerance generated by (x1,x2), (x2,x3);
/// granules are predecessor neighborhoods.
struct Tolerance4 {
  granrough::Universe u{{"x1", "x2", "x3", "x4"}};
  granrough::Granulation g = granrough::build_neighborhood_granulation(
      u, granrough::RelationSpec{{{"x1", "x2"}, {"x2", "x3"}}, granrough::Closure::Tolerance},
      granrough::NeighborhoodMode::Predecessor);

  /// Subsets A1..A16 in the numbering of the worked example.
  granrough::Mask A(int i) const {
    static const std::vector<std::vector<std::string>> sets = {{"x1"},
                                                               {"x2"},
                                                               {"x3"},
                                                               {"x4"},
                                                               {"x1", "x2"},
                                                               {"x1", "x3"},
                                                               {"x1", "x4"},
                                                               {"x2", "x3"},
                                                               {"x2", "x4"},
                                                               {"x3", "x4"},
                                                               {"x1", "x2", "x3"},
                                                               {"x1", "x2", "x4"},
                                                               {"x2", "x3", "x4"},
                                                               {"x1", "x3", "x4"},
                                                               {"x1", "x2", "x3", "x4"},
                                                               {}};
    return u.mask_of(sets.at(static_cast<std::size_t>(i - 1)));
  }

  oracle::SSet top() const { return {"x1", "x2", "x3", "x4"}; }
  std::vector<oracle::SSet> oracle_granules() const {
    return oracle::tolerance_granules({"x1", "x2", "x3", "x4"}, {{"x1", "x2"}, {"x2", "x3"}});
  }
};

inline oracle::SSet to_sset(const granrough::Universe& u, granrough::Mask m) {
  const auto labels = u.labels_of(m);
  return {labels.begin(), labels.end()};
}

inline granrough::Mask to_mask(const granrough::Universe& u, const oracle::SSet& s) {
  return u.mask_of({s.begin(), s.end()});
}

}  // namespace testfx
