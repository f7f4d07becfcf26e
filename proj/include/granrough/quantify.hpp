#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "granrough/check_report.hpp"
#include "granrough/parallel.hpp"

namespace granrough {

/// Exhaustive evaluation of universally quantified set formulas over the
/// powerset of an n-element universe. The outermost variable is partitioned
/// across workers; witnesses come back in mask order for any thread count.
template <std::size_t Arity, typename Pred>
CheckReport check_forall(const std::string& name, std::size_t n, const std::array<const char*, Arity>& vars,
                         Pred&& pred, const CheckOptions& opts) {
  static_assert(Arity >= 1 && Arity <= 3);
  require_exhaustive(n, opts.limits, static_cast<int>(Arity), name);
  const Mask total = Mask{1} << n;
  const Mask blocks = std::min<Mask>(total, 256);
  const Mask per_block = (total + blocks - 1) / blocks;
  auto chunk = [&](std::size_t block) {
    CheckReport part;
    const Mask begin = static_cast<Mask>(block) * per_block;
    const Mask end = std::min<Mask>(total, begin + per_block);
    for (Mask a = begin; a < end; ++a) {
      auto fail = [&](std::initializer_list<Mask> values) {
        Witness w;
        std::size_t k = 0;
        for (Mask v : values) w.push_back(Binding{vars[k++], v});
        part.add_violation(std::move(w), opts.max_witnesses);
      };
      if constexpr (Arity == 1) {
        if (!pred(a)) fail({a});
      } else if constexpr (Arity == 2) {
        for (Mask b = 0; b < total; ++b) {
          if (!pred(a, b)) fail({a, b});
        }
      } else {
        for (Mask b = 0; b < total; ++b) {
          for (Mask c = 0; c < total; ++c) {
            if (!pred(a, b, c)) fail({a, b, c});
          }
        }
      }
    }
    return part;
  };
  const auto parts = parallel_map<CheckReport>(static_cast<std::size_t>(blocks), opts.threads, chunk);
  CheckReport report;
  report.name = name;
  report.universe_size = n;
  for (const auto& p : parts) report.absorb(p, opts.max_witnesses);
  return report;
}

}  // namespace granrough
