#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "granrough/universe.hpp"

namespace granrough {

/// A total map from subsets of a universe to subsets of the same universe
/// (a lower or upper approximation, for instance).
class SetOperator {
 public:
  using Fn = std::function<Mask(Mask)>;

  SetOperator(Universe universe, std::string name, Fn fn);

  const Universe& universe() const { return universe_; }
  const std::string& name() const { return name_; }

  Mask operator()(Mask x) const { return table_ ? (*table_)[x] : fn_(x); }
  ESet operator()(const ESet& x) const;

  /// Copy with every value precomputed; universes above 24 elements are refused.
  SetOperator tabulated() const;
  bool is_tabulated() const { return table_ != nullptr; }

 private:
  Universe universe_;
  std::string name_;
  Fn fn_;
  std::shared_ptr<const std::vector<Mask>> table_;
};

}  // namespace granrough
