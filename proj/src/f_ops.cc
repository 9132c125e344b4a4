#include "gtf/f_ops.hh"

namespace gtf {

PointSet f_interior(const GtfSpace& s, PointSet a) {
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        for (PointSet g : s.assoc[w]) {
            if (g.subset_of(a)) {
                out = out.with(w);
                break;
            }
        }
    }
    return out;
}

PointSet f_closure(const GtfSpace& s, PointSet a) {
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        bool all_meet = true;
        for (PointSet g : s.assoc[w]) {
            if (!g.intersects(a)) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) out = out.with(w);
    }
    return out;
}

OpennessFlags classify_openness(const GtfSpace& s, PointSet a) {
    PointSet fi = f_interior(s, a);
    return OpennessFlags{fi == a, fi.subset_of(a), a.subset_of(fi)};
}

ClosednessFlags classify_closedness(const GtfSpace& s, PointSet a) {
    PointSet fc = f_closure(s, a);
    return ClosednessFlags{fc == a, fc.subset_of(a), a.subset_of(fc)};
}

PointSet open_hull(const GtfSpace& s, PointSet a) {
    if (!s.topology.mu.contains(a))
        throw DomainError("open_hull needs an open set; " + format_set(s.universe, a) +
                          " is not in mu");
    PointSet hull = a | f_interior(s, a);
    if (f_interior(s, hull) != hull)
        throw Error("internal: open_hull produced a set that is not f-open");
    return hull;
}

SetFamily enumerate_f_open(const GtfSpace& s, unsigned cap) {
    if (s.universe.size() > cap)
        throw ResourceError("f-open enumeration over " + std::to_string(s.universe.size()) +
                            " points exceeds the cap of " + std::to_string(cap) +
                            " (pass a larger cap to force it)");
    SetFamily out;
    Mask full = s.universe.full_mask();
    for (Mask m = 0;; ++m) {
        PointSet a = PointSet::from_mask(m);
        if (f_interior(s, a) == a) out.insert(a);
        if (m == full) break;
    }
    return out;
}

}  // namespace gtf
