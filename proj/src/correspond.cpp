#include "granrough/correspond.hpp"

#include "granrough/approx.hpp"
#include "granrough/error.hpp"
#include "granrough/rif.hpp"

namespace granrough {

namespace {

void require_open_alpha(const Rational& alpha) {
  require_alpha(alpha);
  if (alpha == Rational(0)) throw ParameterError("the correspondence needs 0 < alpha < 1/2, got 0");
}

CheckReport blank_report(const std::string& name, std::size_t n) {
  CheckReport r;
  r.name = name;
  r.universe_size = n;
  return r;
}

int to_int(std::int64_t v) { return static_cast<int>(v); }

}  // namespace

std::string to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

GradePartition build_upper_correspondence(const Granulation& g, const Rational& alpha, const CheckOptions& opts) {
  require_open_alpha(alpha);
  const std::size_t n = g.universe().size();
  require_exhaustive(n, opts.limits, 1, "upper correspondence");
  const InclusionFn k0 = InclusionFn::k0(g.universe());

  GradePartition p;
  p.alpha = alpha;
  p.side = Side::Upper;
  p.comparison_note =
      "grade k = floor(alpha*#x); u_alpha* keeps h with #(h∩x) > alpha*#x, i.e. #(h∩x) >= k+1, "
      "which is u_k's #(h∩x) > k; equals ceil(alpha*#x) except when alpha*#x is an integer";
  p.verification = blank_report("upper-correspondence", n);
  p.verification.parameters["alpha"] = alpha.to_string();
  p.literal_agreement = blank_report("literal-k-lower-agreement", n);
  p.literal_agreement.applicable = false;

  for (Mask x : enumerate_subsets(n)) {
    const Mask star = vprs_star_upper(x, g, k0, alpha);
    if (x == 0) {
      p.empty_block.push_back(x);
      if (star != g.cover()) {
        p.verification.add_violation({{"x", x}, {"u_alpha*", star}, {"graded", g.cover()}}, opts.max_witnesses);
      }
      continue;
    }
    const int grade = to_int((alpha * Rational(card(x))).floor());
    p.blocks[grade].push_back(x);
    const Mask graded = graded_upper_literal(x, g, grade);
    if (star != graded) {
      p.verification.add_violation({{"x", x}, {"u_alpha*", star}, {"graded", graded}}, opts.max_witnesses);
    }
  }
  return p;
}

GradePartition build_lower_correspondence(const Granulation& g, const Rational& alpha, const CheckOptions& opts) {
  require_open_alpha(alpha);
  const std::size_t n = g.universe().size();
  require_exhaustive(n, opts.limits, 1, "lower correspondence");
  const InclusionFn k0 = InclusionFn::k0(g.universe());
  const Rational beta = Rational(1) - alpha;

  GradePartition p;
  p.alpha = alpha;
  p.side = Side::Lower;
  p.comparison_note =
      "grade m = ceil((1-alpha)*#x); l_alpha* keeps h with #(h∩x) >= (1-alpha)*#x, i.e. #(h∩x) >= m; "
      "the literal k-lower operator at grade m is compared separately";
  p.verification = blank_report("lower-correspondence", n);
  p.verification.parameters["alpha"] = alpha.to_string();
  p.literal_agreement = blank_report("literal-k-lower-agreement", n);
  p.literal_agreement.severity = Severity::Soft;
  p.literal_agreement.parameters["alpha"] = alpha.to_string();

  for (Mask x : enumerate_subsets(n)) {
    const Mask star = vprs_star_lower(x, g, k0, alpha);
    if (x == 0) {
      p.empty_block.push_back(x);
      if (star != g.cover()) {
        p.verification.add_violation({{"x", x}, {"l_alpha*", star}, {"graded", g.cover()}}, opts.max_witnesses);
      }
      continue;
    }
    const int grade = to_int((beta * Rational(card(x))).ceil());
    p.blocks[grade].push_back(x);
    const Mask graded = overlap_at_least(x, g, grade);
    if (star != graded) {
      p.verification.add_violation({{"x", x}, {"l_alpha*", star}, {"graded", graded}}, opts.max_witnesses);
    }
    const Mask literal = graded_lower_literal(x, g, grade);
    if (star != literal) {
      p.literal_agreement.add_violation({{"x", x}, {"l_alpha*", star}, {"l_k", literal}}, opts.max_witnesses);
    }
  }
  return p;
}

CheckReport check_nonrepresentability(const Granulation& g, int k, const CheckOptions& opts) {
  if (k < 0) throw ParameterError("grade k must be >= 0, got " + std::to_string(k));
  const std::size_t n = g.universe().size();
  require_exhaustive(n, opts.limits, 1, "non-representability");
  const InclusionFn k0 = InclusionFn::k0(g.universe());
  const Rational half(1, 2);

  CheckReport r = blank_report("nonrepresentability", n);
  r.severity = Severity::Soft;
  r.parameters["k"] = std::to_string(k);
  std::size_t representable = 0;
  std::size_t agreeing = 0;
  for (Mask x : enumerate_subsets(n)) {
    if (x == 0) continue;
    const Rational ax(k, card(x));
    if (ax > Rational(0) && ax < half) {
      ++representable;
      if (vprs_star_upper(x, g, k0, ax) == graded_upper_literal(x, g, k)) ++agreeing;
    } else {
      r.add_violation({{"x", x}, {"alpha_x", ax}}, opts.max_witnesses);
    }
  }
  r.note = std::to_string(representable) + " nonempty sets have alpha_x in (0,1/2); u*_{alpha_x} equals u_k at " +
           std::to_string(agreeing) + " of them; the empty set is skipped";
  return r;
}

}  // namespace granrough
