#pragma once

#include <map>
#include <string>
#include <vector>

#include "granrough/check_report.hpp"
#include "granrough/granulation.hpp"
#include "granrough/rational.hpp"

namespace granrough {

enum class Side { Lower, Upper };

std::string to_string(Side s);

/// Subsets grouped by the grade at which a graded operator reproduces the
/// starred VPRS operator under K0.
struct GradePartition {
  Rational alpha;
  Side side = Side::Upper;
  /// Nonempty subsets by grade, each block in subset enumeration order.
  std::map<int, std::vector<Mask>> blocks;
  /// The empty set, kept apart: K0(∅,h) = 1 puts every granule in both starred approximations.
  std::vector<Mask> empty_block;
  std::string comparison_note;
  /// Block-wise equality of the two operators; a failure here is an engine defect.
  CheckReport verification;
  /// Lower side only: agreement of the literal k-lower operator at each block's grade.
  CheckReport literal_agreement;
};

/// Grade ⌊α·#x⌋, compared against u_k (#(h∩x) > k). Requires 0 < α < 1/2.
GradePartition build_upper_correspondence(const Granulation& g, const Rational& alpha, const CheckOptions& opts = {});

/// Grade ⌈(1−α)·#x⌉, compared against "#(h∩x) ≥ grade". Requires 0 < α < 1/2.
GradePartition build_lower_correspondence(const Granulation& g, const Rational& alpha, const CheckOptions& opts = {});

/// For each nonempty x, α_x = k/#x. Violations are the x with α_x outside
/// (0, 1/2); at the others, u*_{α_x}(x) is compared with u_k(x).
CheckReport check_nonrepresentability(const Granulation& g, int k, const CheckOptions& opts = {});

}  // namespace granrough
