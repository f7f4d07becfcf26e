#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace granrough {

/// Membership bits of a subset, bit i set iff element i of the universe is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverseSize = 64;

inline int card(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool is_proper_subset(Mask a, Mask b) { return is_subset(a, b) && a != b; }
inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls fn(s) for every submask s of m, in decreasing numeric order, ending with 0.
template <typename Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

enum class ElementOrder { Lexical, AsGiven };

class ESet;

/// Finite ground set with a fixed element order. Cheap to copy; copies share identity.
class Universe {
 public:
  /// The empty universe.
  Universe();
  explicit Universe(std::vector<std::string> labels, ElementOrder order = ElementOrder::Lexical);

  std::size_t size() const { return rep_->labels.size(); }
  const std::vector<std::string>& labels() const { return rep_->labels; }
  const std::string& label(std::size_t i) const { return rep_->labels.at(i); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws ParameterError naming the label when it is not an element.
  std::size_t index_of(std::string_view label) const;
  Mask full() const { return full_mask(size()); }

  ESet top() const;
  ESet bottom() const;
  ESet set(std::initializer_list<std::string_view> labels) const;
  ESet set(const std::vector<std::string>& labels) const;
  ESet from_mask(Mask bits) const;
  Mask mask_of(const std::vector<std::string>& labels) const;

  /// Sorted (universe order) labels of the members of `bits`.
  std::vector<std::string> labels_of(Mask bits) const;
  /// "{x1,x2}" style rendering; the empty set renders as "{}".
  std::string format(Mask bits) const;

  /// Identity comparison: true only for copies of the same constructed universe.
  friend bool operator==(const Universe& a, const Universe& b) { return a.rep_ == b.rep_; }

 private:
  struct Rep {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Rep> rep_;
};

/// A subset of a Universe.
class ESet {
 public:
  ESet(Universe universe, Mask bits);

  const Universe& universe() const { return universe_; }
  Mask mask() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(card(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t element) const { return element < 64 && ((bits_ >> element) & 1U) != 0; }
  bool contains(std::string_view label) const;

  bool subset_of(const ESet& other) const;
  bool proper_subset_of(const ESet& other) const;
  bool meets(const ESet& other) const;
  ESet complement() const;
  std::vector<std::string> labels() const { return universe_.labels_of(bits_); }
  std::string to_string() const { return universe_.format(bits_); }

  friend ESet operator|(const ESet& a, const ESet& b);
  friend ESet operator&(const ESet& a, const ESet& b);
  friend ESet operator-(const ESet& a, const ESet& b);
  friend bool operator==(const ESet& a, const ESet& b);

 private:
  Universe universe_;
  Mask bits_;
};

/// Throws UniverseMismatch unless both universes are the same object.
void require_same(const Universe& a, const Universe& b);

/// All subsets of an n-element universe, ordered by cardinality and then by
/// numeric mask (the empty set first, the full set last).
std::vector<Mask> enumerate_subsets(std::size_t n);

}  // namespace granrough
