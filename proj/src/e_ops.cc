#include "gtf/e_ops.hh"

namespace gtf {

SetFamily e_neighbourhoods_over(const SetFamily& f_open, std::size_t w) {
    SetFamily out;
    for (PointSet s : f_open)
        if (s.contains(w)) out.insert(s);
    return out;
}

PointSet e_interior_over(const SetFamily& f_open, std::size_t n_points, PointSet a) {
    PointSet out;
    for (std::size_t w = 0; w < n_points; ++w) {
        for (PointSet s : f_open) {
            if (s.contains(w) && s.subset_of(a)) {
                out = out.with(w);
                break;
            }
        }
    }
    return out;
}

PointSet e_closure_over(const SetFamily& f_open, std::size_t n_points, PointSet a) {
    PointSet out;
    for (std::size_t w = 0; w < n_points; ++w) {
        bool all_meet = true;
        for (PointSet s : f_open) {
            if (s.contains(w) && !s.intersects(a)) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) out = out.with(w);
    }
    return out;
}

SetFamily e_neighbourhoods(const GtfSpace& s, std::size_t w, unsigned cap) {
    return e_neighbourhoods_over(enumerate_f_open(s, cap), w);
}

PointSet e_interior(const GtfSpace& s, PointSet a, unsigned cap) {
    return e_interior_over(enumerate_f_open(s, cap), s.universe.size(), a);
}

PointSet e_closure(const GtfSpace& s, PointSet a, unsigned cap) {
    return e_closure_over(enumerate_f_open(s, cap), s.universe.size(), a);
}

GeneralizedTopology e_open_family(const GtfSpace& s, unsigned cap) {
    SetFamily f_open = enumerate_f_open(s, cap);
    std::size_t n = s.universe.size();
    SetFamily out;
    Mask full = s.universe.full_mask();
    for (Mask m = 0;; ++m) {
        PointSet a = PointSet::from_mask(m);
        if (e_interior_over(f_open, n, a) == a) out.insert(a);
        if (m == full) break;
    }
    ValidationReport r = validate_topology(s.universe, out);
    if (!r.pass) throw Error("internal: e-open family failed topology validation");
    return GeneralizedTopology{std::move(out)};
}

}  // namespace gtf
