#include "granrough/ggs.hpp"

#include "granrough/quantify.hpp"

namespace granrough {

namespace {

Mask join(Mask a, Mask b) { return a | b; }
Mask meet(Mask a, Mask b) { return a & b; }

void tag_operators(std::vector<CheckReport>& reports, const SetOperator& lower, const SetOperator& upper) {
  for (auto& r : reports) {
    r.parameters["lower"] = lower.name();
    r.parameters["upper"] = upper.name();
  }
}

}  // namespace

bool is_granule_union(Mask x, const Granulation& g) {
  Mask u = 0;
  for (Mask h : g.granules()) {
    if (is_subset(h, x)) u |= h;
  }
  return u == x;
}

std::vector<CheckReport> check_ggs_axioms(const Granulation& g, const SetOperator& lower_in,
                                          const SetOperator& upper_in, const CheckOptions& opts) {
  require_same(g.universe(), lower_in.universe());
  require_same(g.universe(), upper_in.universe());
  const std::size_t n = g.universe().size();
  require_exhaustive(n, opts.limits, 3, "GGS axioms");
  const SetOperator lower = lower_in.tabulated();
  const SetOperator upper = upper_in.tabulated();
  const Mask top = g.universe().full();

  std::vector<CheckReport> out;
  out.push_back(check_forall<1>("PT1", n, {"x"}, [](Mask x) { return is_subset(x, x); }, opts));
  out.push_back(check_forall<2>(
      "PT2", n, {"x", "b"}, [](Mask x, Mask b) { return !(is_subset(x, b) && is_subset(b, x)) || x == b; }, opts));
  out.push_back(check_forall<2>(
      "G1", n, {"a", "b"}, [](Mask a, Mask b) { return join(a, b) == join(b, a) && meet(a, b) == meet(b, a); }, opts));
  out.push_back(check_forall<2>(
      "G2", n, {"a", "b"}, [](Mask a, Mask b) { return ((a | b) & a) == a && ((a & b) | a) == a; }, opts));
  out.push_back(check_forall<3>(
      "G3", n, {"a", "b", "c"}, [](Mask a, Mask b, Mask c) { return ((a & b) | c) == ((a | c) & (b | c)); }, opts));
  out.push_back(check_forall<3>(
      "G4", n, {"a", "b", "c"}, [](Mask a, Mask b, Mask c) { return ((a | b) & c) == ((a & c) | (b & c)); }, opts));
  out.push_back(check_forall<2>(
      "G5", n, {"a", "b"},
      [](Mask a, Mask b) {
        const bool le = is_subset(a, b);
        return le == ((a | b) == b) && le == ((a & b) == a);
      },
      opts));

  auto contract = [&](Mask a) { return is_subset(lower(a), a); };
  auto idem_l = [&](Mask a) { return lower(lower(a)) == lower(a); };
  auto idem_u = [&](Mask a) { return is_subset(upper(a), upper(upper(a))); };
  out.push_back(check_forall<1>("UL1", n, {"a"}, [&](Mask a) { return contract(a) && idem_l(a) && idem_u(a); }, opts));
  out.push_back(check_forall<1>("UL1.contract", n, {"a"}, contract, opts));
  out.push_back(check_forall<1>("UL1.idem-l", n, {"a"}, idem_l, opts));
  out.push_back(check_forall<1>("UL1.idem-u", n, {"a"}, idem_u, opts));
  out.push_back(check_forall<2>(
      "UL2", n, {"a", "b"},
      [&](Mask a, Mask b) {
        return !is_subset(a, b) || (is_subset(lower(a), lower(b)) && is_subset(upper(a), upper(b)));
      },
      opts));
  {
    CheckReport ul3;
    ul3.name = "UL3";
    ul3.universe_size = n;
    if (lower(0) != 0) ul3.add_violation({Binding{"lower(bottom)", lower(0)}}, opts.max_witnesses);
    if (upper(0) != 0) ul3.add_violation({Binding{"upper(bottom)", upper(0)}}, opts.max_witnesses);
    if (!is_subset(lower(top), top)) ul3.add_violation({Binding{"lower(top)", lower(top)}}, opts.max_witnesses);
    if (!is_subset(upper(top), top)) ul3.add_violation({Binding{"upper(top)", upper(top)}}, opts.max_witnesses);
    out.push_back(std::move(ul3));
  }
  out.push_back(check_forall<1>("TB", n, {"a"}, [&](Mask a) { return is_subset(0, a) && is_subset(a, top); }, opts));
  tag_operators(out, lower_in, upper_in);
  return out;
}

std::vector<CheckReport> check_admissibility(const Granulation& g, const SetOperator& lower_in,
                                             const SetOperator& upper_in, const CheckOptions& opts) {
  require_same(g.universe(), lower_in.universe());
  require_same(g.universe(), upper_in.universe());
  const std::size_t n = g.universe().size();
  require_exhaustive(n, opts.limits, 2, "admissibility");
  const SetOperator lower = lower_in.tabulated();
  const SetOperator upper = upper_in.tabulated();
  const auto& gs = g.granules();
  std::vector<CheckReport> out;

  out.push_back(check_forall<1>(
      "WRA", n, {"x"}, [&](Mask x) { return is_granule_union(lower(x), g) && is_granule_union(upper(x), g); }, opts));

  CheckReport ls;
  ls.name = "LS";
  ls.universe_size = n;
  const Mask total = Mask{1} << n;
  for (Mask h : gs) {
    for (Mask x = 0; x < total; ++x) {
      if (is_subset(h, x) && !is_subset(h, lower(x))) {
        ls.add_violation({Binding{"granule", h}, Binding{"x", x}, Binding{"lower(x)", lower(x)}}, opts.max_witnesses);
      }
    }
  }
  out.push_back(std::move(ls));

  // Definite objects are the only candidates for the existential z.
  std::vector<Mask> definite;
  for (Mask z = 0; z < total; ++z) {
    if (lower(z) == z && upper(z) == z) definite.push_back(z);
  }
  CheckReport fu;
  fu.name = "FU";
  fu.universe_size = n;
  for (Mask x : gs) {
    for (Mask a : gs) {
      bool found = false;
      for (Mask z : definite) {
        if (is_proper_subset(x, z) && is_proper_subset(a, z)) {
          found = true;
          break;
        }
      }
      if (!found) fu.add_violation({Binding{"x", x}, Binding{"a", a}}, opts.max_witnesses);
    }
  }
  out.push_back(std::move(fu));
  tag_operators(out, lower_in, upper_in);
  return out;
}

}  // namespace granrough
