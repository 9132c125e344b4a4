#pragma once

#include <map>
#include <string>

#include "gtf/json_io.hh"
#include "gtf/space.hh"

namespace fixtures {

// Shorthand for building a point set from a comma-separated label literal.
inline gtf::PointSet pts(const gtf::GtfSpace& s, const std::string& literal) {
    return gtf::parse_set_literal(s.universe, literal);
}

// Two points, a single generator {w}. The point v is orphaned yet its family
// still points at {w}, which makes the two operator levels pull apart: every
// f-open set is trivial, f-interiors overshoot, and the constant gnet at v
// e-converges to v without converging to it.
inline gtf::GtfSpace tp_space() {
    gtf::Universe u({"w", "v"});
    gtf::SetFamily gens;
    gens.insert(gtf::PointSet::single(0));
    std::map<std::string, gtf::SetFamily> orphan;
    orphan["v"] = gens;
    return gtf::make_space(u, gtf::build_topology(u, gens), orphan);
}

// Nothing is open except the empty set, a carries no family at all, and b
// carries just the empty set. Every gnet converges to a vacuously, while
// nothing converges to b; so the constant gnet at b converges, but only to
// the other point.
inline gtf::GtfSpace degenerate_pair_space() {
    gtf::Universe u({"a", "b"});
    std::map<std::string, gtf::SetFamily> orphan;
    gtf::SetFamily fb;
    fb.insert(gtf::PointSet{});
    orphan["b"] = fb;
    return gtf::make_space(u, gtf::build_topology(u, {}), orphan);
}

// Three points, empty-set-only topology; w and v both flag the empty set and
// u carries nothing. Every gnet that converges to w also converges to v
// (none do), the constant gnet at w converges (to u), and yet w is outside
// the kernel of v.
inline gtf::GtfSpace vacuous_transfer_space() {
    gtf::Universe u({"w", "v", "u"});
    gtf::SetFamily empty_only;
    empty_only.insert(gtf::PointSet{});
    std::map<std::string, gtf::SetFamily> orphan;
    orphan["w"] = empty_only;
    orphan["v"] = empty_only;
    return gtf::make_space(u, gtf::build_topology(u, {}), orphan);
}

}  // namespace fixtures
