// Interior and closure operators driven by the associating function.
#ifndef GTF_F_OPS_HH
#define GTF_F_OPS_HH

#include "gtf/space.hh"

namespace gtf {

inline constexpr unsigned kDefaultEnumCap = 16;

// {w : some member of assoc(w) is contained in a}. Points with an empty
// family never qualify.
PointSet f_interior(const GtfSpace& s, PointSet a);

// {w : every member of assoc(w) meets a}. Points with an empty family belong
// vacuously.
PointSet f_closure(const GtfSpace& s, PointSet a);

struct OpennessFlags {
    bool f_open;   // a == f_interior(a)
    bool df_open;  // f_interior(a) subset of a
    bool uf_open;  // a subset of f_interior(a)
};
struct ClosednessFlags {
    bool f_closed;   // a == f_closure(a)
    bool df_closed;  // f_closure(a) subset of a
    bool uf_closed;  // a subset of f_closure(a)
};
OpennessFlags classify_openness(const GtfSpace& s, PointSet a);
ClosednessFlags classify_closedness(const GtfSpace& s, PointSet a);

// a | f_interior(a) for open a; the result is f-open and contains every point
// whose family has a as a member. Throws DomainError when a is not open.
PointSet open_hull(const GtfSpace& s, PointSet a);

// All f-open subsets of the universe, in canonical order. Walks all 2^n
// subsets; universes beyond `cap` points are refused with a ResourceError
// (raise the cap knowingly if you need more).
SetFamily enumerate_f_open(const GtfSpace& s, unsigned cap = kDefaultEnumCap);

}  // namespace gtf

#endif
