#include "sglab/ore.hpp"

#include "sglab/error.hpp"

namespace sglab {

const char* to_string(WitnessMethod m) noexcept {
  switch (m) {
    case WitnessMethod::Brute: return "brute";
    case WitnessMethod::BooleanRecursive: return "boolean_recursive";
    case WitnessMethod::TopReduction: return "top_reduction";
  }
  return "unknown";
}

namespace {

std::string describe(const Interval& i) {
  return "[" + std::to_string(i.bottom) + ", " + std::to_string(i.top) + "]";
}

}  // namespace

bool validate(const SubgroupLattice& l, const OreWitness& w) {
  const FiniteGroup& g = l.group();
  if (!l.node(w.top).contains(w.element)) return false;
  Subgroup generated = extend_subgroup(g, l.node(w.bottom), w.element);
  return generated == l.node(w.top);
}

std::optional<OreWitness> hcyclic_witness(const Interval& i) {
  const SubgroupLattice& l = *i.lattice;
  const Subgroup& top = l.node(i.top);
  for (ElementIndex x : top.elements())
    if (l.join(i.bottom, l.cyclic_node(x)) == i.top) return OreWitness{i.bottom, i.top, x, WitnessMethod::Brute};
  return std::nullopt;
}

namespace {

ElementIndex boolean_element(const Interval& i, std::size_t cap) {
  const SubgroupLattice& l = *i.lattice;
  BooleanInfo info = boolean_info(i, cap);
  if (!info.boolean) throw Error(ErrorKind::NotBoolean, "interval " + describe(i) + " is not Boolean");
  if (info.rank == 0) return 0;
  if (info.rank == 1) {
    const Subgroup& bottom = l.node(i.bottom);
    for (ElementIndex x : l.node(i.top).elements())
      if (!bottom.contains(x)) return x;
  }
  NodeIndex m = coatoms(i).front();
  NodeIndex mc = 0;
  for (std::size_t k = 0; k < i.members.size(); ++k)
    if (i.members[k] == m) mc = info.complement[k];
  ElementIndex a = boolean_element(make_interval(l, i.bottom, m), cap);
  ElementIndex b = boolean_element(make_interval(l, i.bottom, mc), cap);
  return l.group().product(a, b);
}

}  // namespace

OreWitness boolean_witness_construct(const Interval& i, std::size_t triple_scan_cap) {
  OreWitness w{i.bottom, i.top, boolean_element(i, triple_scan_cap), WitnessMethod::BooleanRecursive};
  if (!validate(*i.lattice, w))
    throw Error(ErrorKind::TheoremViolation, "recursive Boolean witness fails on " + describe(i));
  return w;
}

OreWitness top_reduction_witness(const Interval& i, std::size_t triple_scan_cap) {
  if (i.degenerate()) throw Error(ErrorKind::DegenerateInterval, "interval has a single node");
  Interval top = top_interval(i);
  if (!is_boolean(top, triple_scan_cap))
    throw Error(ErrorKind::NotTopBoolean, "interval " + describe(i) + " is not top Boolean");
  OreWitness w = boolean_witness_construct(top, triple_scan_cap);
  w.bottom = i.bottom;
  w.method = WitnessMethod::TopReduction;
  if (!validate(*i.lattice, w))
    throw Error(ErrorKind::TheoremViolation, "top-reduction witness fails on " + describe(i));
  return w;
}

OreReport verify_ore(const SubgroupLattice& l, std::size_t triple_scan_cap) {
  OreReport report;
  for (NodeIndex h = 0; h < l.size(); ++h) {
    const NodeSet& up = l.up_set(h);
    for (auto k = up.find_next(h); k != NodeSet::npos; k = up.find_next(k)) {
      Interval iv = make_interval(l, h, k);
      OreIntervalRecord rec{h, k, classify(iv, triple_scan_cap), hcyclic_witness(iv), std::nullopt};
      if (rec.brute) {
        if (!validate(l, *rec.brute))
          throw Error(ErrorKind::TheoremViolation, "brute-force witness fails to validate on " + describe(iv));
        ++report.hcyclic_count;
      }
      if (rec.classification.top_boolean) {
        ++report.top_boolean_count;
        if (!rec.brute) throw Error(ErrorKind::TheoremViolation, "top Boolean interval " + describe(iv) + " is not H-cyclic");
        rec.reduction = top_reduction_witness(iv, triple_scan_cap);
      } else if (rec.brute) {
        ++report.hcyclic_not_top_boolean;
      }
      report.intervals.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace sglab
