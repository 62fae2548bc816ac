#include "schreier/factors.hpp"

#include <algorithm>
#include <numeric>

#include "schreier/perm.hpp"

namespace schreier {

namespace {

constexpr Order kStandIn = 3;  // finite stand-in for infinite factors

std::unique_ptr<FactorNode> leaf(Order order, int pos, bool from_inf) {
  auto n = std::make_unique<FactorNode>();
  n->order = order;
  n->input_pos = pos;
  n->from_infinite = from_inf;
  return n;
}

}  // namespace

ReductionPlan plan_reduction(const FreeProductSignature& sig) {
  if (sig.size() < 2)
    throw DomainError("realization needs at least two cyclic factors");
  for (Label i = 0; i < sig.size(); ++i)
    if (is_finite(sig.order(i)) && sig.order(i) < 2)
      throw DomainError("cyclic factors must be non-trivial");
  if (sig.size() == 2 && sig.order(0) == 2 && sig.order(1) == 2)
    throw DomainError(
        "Z_2 * Z_2 (the infinite dihedral group) is not freely telescopic");

  ReductionPlan plan{sig, sig, {}, {}};
  std::vector<std::unique_ptr<FactorNode>> work;
  for (Label i = 0; i < sig.size(); ++i) {
    Order p = sig.order(i);
    if (is_finite(p)) {
      work.push_back(leaf(p, static_cast<int>(i), false));
    } else {
      work.push_back(leaf(kStandIn, static_cast<int>(i), true));
      plan.steps.push_back("collapse " + sig.label_name(i) + ": inf -> " +
                           std::to_string(kStandIn));
    }
  }

  auto all_two = [&] {
    return std::all_of(work.begin(), work.end(),
                       [](const auto& n) { return n->order == 2; });
  };
  while (work.size() > 2 && !(work.size() == 3 && all_two())) {
    std::size_t i1 = 0;
    for (std::size_t t = 1; t < work.size(); ++t)
      if (work[t]->order > work[i1]->order) i1 = t;
    std::size_t i2 = i1 == 0 ? 1 : 0;
    for (std::size_t t = 0; t < work.size(); ++t)
      if (t != i1 && work[t]->order > work[i2]->order) i2 = t;

    Order m = static_cast<Order>(
        std::lcm<std::uint64_t>(work[i1]->order, work[i2]->order));
    if (m > (1u << 20)) throw DomainError("merged factor order too large");
    plan.steps.push_back("merge lcm(" + std::to_string(work[i1]->order) + "," +
                         std::to_string(work[i2]->order) + ") = " +
                         std::to_string(m));
    auto merged = std::make_unique<FactorNode>();
    merged->order = m;
    merged->left = std::move(work[i1]);
    merged->right = std::move(work[i2]);
    std::size_t keep = std::min(i1, i2), drop = std::max(i1, i2);
    work[keep] = std::move(merged);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  if (work.size() == 2) {
    if (work[0]->order < work[1]->order) std::swap(work[0], work[1]);
    if (work[0]->order < 3)
      throw GuardError("reduction reached the excluded (2,2) base");
  }
  std::vector<Order> base_orders;
  for (const auto& n : work) base_orders.push_back(n->order);
  plan.base = FreeProductSignature(base_orders);
  plan.roots = std::move(work);
  plan.steps.push_back("base " + plan.base.to_string());
  return plan;
}

namespace {

LabelledDigraph with_signature(const LabelledDigraph& g,
                               FreeProductSignature sig,
                               const std::vector<Label>& old_label_of) {
  LabelledDigraph out(std::move(sig), g.vertex_count());
  for (Label l = 0; l < out.label_count(); ++l) {
    Label ol = old_label_of[l];
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.succ(ol, v) != kNoVertex) out.set_edge(l, v, g.succ(ol, v));
  }
  out.set_basepoint(g.basepoint());
  return out;
}

}  // namespace

LabelledDigraph lift_lcm(const LabelledDigraph& g, Label li, Order a, Order b) {
  if (li >= g.label_count()) throw DomainError("lift_lcm: label out of range");
  if (a < 2 || b < 2) throw DomainError("lift_lcm: orders must be >= 2");
  Order m = g.signature().order(li);
  if (!is_finite(m) || std::lcm<std::uint64_t>(a, b) != m)
    throw DomainError("lift_lcm: lcm(a,b) must equal the label's order");
  if (!g.danglers().empty() || !validate(g).is_free)
    throw DomainError("lift_lcm: input must be a free Schreier graph");

  auto pi = g.label_perm(li);
  Perm pa = perm_power(*pi, m / a);
  Perm pb = perm_power(*pi, m / b);

  std::vector<Order> orders;
  std::vector<std::string> names;
  for (Label l = 0; l < g.label_count(); ++l) {
    if (l == li) {
      orders.push_back(a);
      orders.push_back(b);
      names.push_back(g.signature().label_name(l) + ".a");
      names.push_back(g.signature().label_name(l) + ".b");
    } else {
      orders.push_back(g.signature().order(l));
      names.push_back(g.signature().label_name(l));
    }
  }
  LabelledDigraph out(FreeProductSignature(orders, names), g.vertex_count());
  for (Label l = 0; l < out.label_count(); ++l) {
    const Perm* col;
    Perm old;
    if (l == li) {
      col = &pa;
    } else if (l == li + 1) {
      col = &pb;
    } else {
      old = *g.label_perm(l < li ? l : l - 1);
      col = &old;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.set_edge(l, v, (*col)[v]);
  }
  out.set_basepoint(g.basepoint());
  return out;
}

LabelledDigraph lift_Z(const LabelledDigraph& g, Label li) {
  if (li >= g.label_count()) throw DomainError("lift_Z: label out of range");
  if (!g.danglers().empty() || !validate(g).is_free)
    throw DomainError("lift_Z: input must be a free Schreier graph");
  std::vector<Order> orders = g.signature().orders();
  orders[li] = kInfiniteOrder;
  std::vector<Label> same(g.label_count());
  std::iota(same.begin(), same.end(), Label{0});
  return with_signature(
      g, FreeProductSignature(orders, g.signature().label_names()), same);
}

namespace {

std::vector<Perm> sorted_elements(const PermutationGroup& pg) {
  std::vector<Perm> out = pg.elements;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Realization realize(const FiniteGroup& group, const FreeProductSignature& sig,
                    bool fast) {
  ReductionPlan plan = plan_reduction(sig);
  Realization base = realize_base(group, plan.base, fast);

  LabelledDigraph g = base.schreier;
  Certificate cert = base.certificate;
  for (const auto& s : plan.steps) cert.notes.push_back("plan: " + s);

  const auto aut_set = sorted_elements(base.aut);
  const Vertex index = g.vertex_count();
  unsigned step_no = 0;

  auto certify_step = [&](const std::string& what) {
    const std::string tag = "lift" + std::to_string(step_no) + "_" + what;
    ++step_no;
    auto rep = validate(g);
    bool ok = g.vertex_count() == index && rep.is_free &&
              sorted_elements(automorphisms(g)) == aut_set;
    cert.checks.push_back({tag, ok, 0.0});
    if (!ok) throw GuardError("certification failed: " + tag);
  };

  // replay the plan backward: expand each base label into its factor tree
  std::vector<int> leaf_inputs;  // input position per current label, in order
  auto expand = [&](auto&& self, const FactorNode& node, Label pos) -> Label {
    if (node.is_leaf()) {
      if (node.from_infinite) {
        g = lift_Z(g, pos);
        certify_step("Z@" + std::to_string(pos));
      }
      leaf_inputs.push_back(node.input_pos);
      return 1;
    }
    g = lift_lcm(g, pos, node.left->order, node.right->order);
    certify_step("lcm@" + std::to_string(pos));
    Label nl = self(self, *node.left, pos);
    Label nr = self(self, *node.right, pos + nl);
    return nl + nr;
  };
  Label pos = 0;
  for (const auto& root : plan.roots) pos += expand(expand, *root, pos);

  if (leaf_inputs.size() != sig.size())
    throw GuardError("lift replay produced the wrong label count");

  // reorder labels into the input signature's positions
  std::vector<Label> old_label_of(sig.size());
  for (Label cur = 0; cur < leaf_inputs.size(); ++cur)
    old_label_of[static_cast<Label>(leaf_inputs[cur])] = cur;
  for (Label i = 0; i < sig.size(); ++i) {
    Order got = g.signature().order(old_label_of[i]);
    if (got != sig.order(i))
      throw GuardError("lift replay produced the wrong factor order");
  }
  g = with_signature(g, sig, old_label_of);

  PermutationGroup aut = automorphisms(g);
  bool final_ok = sorted_elements(aut) == aut_set &&
                  groups_isomorphic(to_finite_group(aut), group);
  cert.checks.push_back({"aut_iso_group_final", final_ok, 0.0});
  if (!final_ok) throw GuardError("certification failed: aut_iso_group_final");

  return Realization{std::move(g),  group,           sig,
                     std::move(aut), std::move(cert), base.substitution};
}

}  // namespace schreier
