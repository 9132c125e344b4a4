// Operators over E-neighbourhoods: the f-open sets containing a point.
#ifndef GTF_E_OPS_HH
#define GTF_E_OPS_HH

#include "gtf/f_ops.hh"

namespace gtf {

// E_w: every f-open set containing w. Empty exactly when assoc(w) is empty.
SetFamily e_neighbourhoods(const GtfSpace& s, std::size_t w, unsigned cap = kDefaultEnumCap);

// {w : some member of E_w is contained in a} / {w : every member of E_w
// meets a}. Defined like the f-operators with E_w in place of assoc(w), so
// points with an empty family are excluded from the interior and vacuously
// included in the closure.
PointSet e_interior(const GtfSpace& s, PointSet a, unsigned cap = kDefaultEnumCap);
PointSet e_closure(const GtfSpace& s, PointSet a, unsigned cap = kDefaultEnumCap);

// All subsets fixed by e_interior. Post-verified to be a generalized
// topology; it is strong whenever every point has a nonempty family.
GeneralizedTopology e_open_family(const GtfSpace& s, unsigned cap = kDefaultEnumCap);

// Same operators computed against an already enumerated f-open family; the
// space itself is not consulted. Used where many queries share one space.
SetFamily e_neighbourhoods_over(const SetFamily& f_open, std::size_t w);
PointSet e_interior_over(const SetFamily& f_open, std::size_t n_points, PointSet a);
PointSet e_closure_over(const SetFamily& f_open, std::size_t n_points, PointSet a);

}  // namespace gtf

#endif
