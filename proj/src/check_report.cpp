#include "granrough/check_report.hpp"

#include "granrough/error.hpp"

namespace granrough {

void CheckReport::add_violation(Witness w, std::size_t cap) {
  holds = false;
  ++violation_count;
  if (witnesses.size() < cap || witnesses.empty()) witnesses.push_back(std::move(w));
}

void CheckReport::absorb(const CheckReport& other, std::size_t cap) {
  if (other.holds) return;
  holds = false;
  violation_count += other.violation_count;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= cap && !witnesses.empty()) break;
    witnesses.push_back(w);
  }
}

void require_exhaustive(std::size_t n, const ExhaustiveLimits& limits, int arity, const std::string& what) {
  if (n > limits.max_universe) {
    throw SizeLimitError(what + ": universe of " + std::to_string(n) + " elements exceeds the exhaustive limit of " +
                         std::to_string(limits.max_universe));
  }
  if (arity >= 3 && n > limits.max_triple_universe) {
    throw SizeLimitError(what + ": triple quantification over " + std::to_string(n) +
                         " elements exceeds the limit of " + std::to_string(limits.max_triple_universe));
  }
}

}  // namespace granrough
