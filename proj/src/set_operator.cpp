#include "granrough/set_operator.hpp"

#include "granrough/error.hpp"

namespace granrough {

SetOperator::SetOperator(Universe universe, std::string name, Fn fn)
    : universe_(std::move(universe)), name_(std::move(name)), fn_(std::move(fn)) {
  if (!fn_) throw ParameterError("operator '" + name_ + "' has no definition");
}

ESet SetOperator::operator()(const ESet& x) const {
  require_same(universe_, x.universe());
  return ESet(universe_, (*this)(x.mask()));
}

SetOperator SetOperator::tabulated() const {
  if (table_) return *this;
  const std::size_t n = universe_.size();
  if (n > 24) {
    throw SizeLimitError("refusing to tabulate operator '" + name_ + "' over " + std::to_string(n) +
                         " elements (limit 24)");
  }
  auto table = std::make_shared<std::vector<Mask>>(std::size_t{1} << n);
  for (Mask m = 0; m < table->size(); ++m) (*table)[m] = fn_(m);
  SetOperator out = *this;
  out.table_ = std::move(table);
  return out;
}

}  // namespace granrough
