#include "granrough/universe.hpp"

#include <algorithm>
#include <set>

#include "granrough/error.hpp"

namespace granrough {

Universe::Universe() : rep_(std::make_shared<const Rep>()) {}

Universe::Universe(std::vector<std::string> labels, ElementOrder order) {
  if (labels.size() > kMaxUniverseSize) {
    throw SizeLimitError("universe has " + std::to_string(labels.size()) + " elements; at most " +
                         std::to_string(kMaxUniverseSize) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ParameterError("element labels must be non-empty");
    if (!seen.insert(l).second) throw ParameterError("duplicate element label '" + l + "'");
  }
  if (order == ElementOrder::Lexical) std::sort(labels.begin(), labels.end());
  rep_ = std::make_shared<const Rep>(Rep{std::move(labels)});
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  const auto& ls = rep_->labels;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ParameterError("unknown element label '" + std::string(label) + "'");
}

ESet Universe::top() const { return ESet(*this, full()); }
ESet Universe::bottom() const { return ESet(*this, 0); }

ESet Universe::set(std::initializer_list<std::string_view> labels) const {
  Mask m = 0;
  for (auto l : labels) m |= Mask{1} << index_of(l);
  return ESet(*this, m);
}

ESet Universe::set(const std::vector<std::string>& labels) const { return ESet(*this, mask_of(labels)); }

ESet Universe::from_mask(Mask bits) const { return ESet(*this, bits); }

Mask Universe::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::vector<std::string> Universe::labels_of(Mask bits) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((bits >> i) & 1U) out.push_back(rep_->labels[i]);
  }
  return out;
}

std::string Universe::format(Mask bits) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(bits)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

ESet::ESet(Universe universe, Mask bits) : universe_(std::move(universe)), bits_(bits) {
  if ((bits & ~universe_.full()) != 0) throw ParameterError("set has members outside its universe");
}

bool ESet::contains(std::string_view label) const {
  auto i = universe_.find(label);
  return i && contains(*i);
}

void require_same(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch();
}

bool ESet::subset_of(const ESet& other) const {
  require_same(universe_, other.universe_);
  return is_subset(bits_, other.bits_);
}

bool ESet::proper_subset_of(const ESet& other) const {
  require_same(universe_, other.universe_);
  return is_proper_subset(bits_, other.bits_);
}

bool ESet::meets(const ESet& other) const {
  require_same(universe_, other.universe_);
  return (bits_ & other.bits_) != 0;
}

ESet ESet::complement() const { return ESet(universe_, universe_.full() & ~bits_); }

ESet operator|(const ESet& a, const ESet& b) {
  require_same(a.universe_, b.universe_);
  return ESet(a.universe_, a.bits_ | b.bits_);
}

ESet operator&(const ESet& a, const ESet& b) {
  require_same(a.universe_, b.universe_);
  return ESet(a.universe_, a.bits_ & b.bits_);
}

ESet operator-(const ESet& a, const ESet& b) {
  require_same(a.universe_, b.universe_);
  return ESet(a.universe_, a.bits_ & ~b.bits_);
}

bool operator==(const ESet& a, const ESet& b) { return a.universe_ == b.universe_ && a.bits_ == b.bits_; }

std::vector<Mask> enumerate_subsets(std::size_t n) {
  if (n > 30) throw SizeLimitError("cannot enumerate the powerset of " + std::to_string(n) + " elements");
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  const Mask total = Mask{1} << n;
  for (Mask m = 0; m < total; ++m) out.push_back(m);
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) { return card(a) < card(b); });
  return out;
}

}  // namespace granrough
