// Gnets: point-valued maps on finite posets, convergence and separation.
//
// The domain need not be directed. "Eventually in U" means some element's
// whole up-set lands in U; "frequently in U" means every element has
// something above it landing in U. A gnet converges to w when it is
// eventually in every member of assoc(w); a point with an empty family is
// therefore a limit of every gnet. The E-variants quantify over the
// E-neighbourhoods instead.
#ifndef GTF_GNET_HH
#define GTF_GNET_HH

#include <memory>
#include <optional>

#include "gtf/e_ops.hh"
#include "gtf/poset.hh"
#include "gtf/space.hh"

namespace gtf {

struct Gnet {
    std::shared_ptr<const FinitePoset> domain;
    std::vector<std::size_t> values;  // point index per poset element

    std::size_t at(std::size_t elem) const { return values.at(elem); }
    PointSet value_set() const;
};

Gnet constant_gnet(std::shared_ptr<const FinitePoset> domain, std::size_t w);

bool eventually(const Gnet& g, PointSet u);
bool frequently(const Gnet& g, PointSet u);

// Eventually in every member of the family (vacuously true for the empty
// family).
bool eventually_in_all(const Gnet& g, const SetFamily& fam);
bool frequently_in_all(const Gnet& g, const SetFamily& fam);

bool converges(const GtfSpace& s, const Gnet& g, std::size_t w);
PointSet limits(const GtfSpace& s, const Gnet& g);
PointSet limit_points(const GtfSpace& s, const Gnet& g);

bool e_converges(const GtfSpace& s, const Gnet& g, std::size_t w, unsigned cap = kDefaultEnumCap);
PointSet e_limits(const GtfSpace& s, const Gnet& g, unsigned cap = kDefaultEnumCap);
PointSet e_limit_points(const GtfSpace& s, const Gnet& g, unsigned cap = kDefaultEnumCap);

// Separation: any two distinct points have, each, a family member missing
// the other. The E-variant uses E-neighbourhoods.
bool is_ft1(const GtfSpace& s);
bool is_et1(const GtfSpace& s, unsigned cap = kDefaultEnumCap);

// All nonempty subsets of the universe ordered by reverse inclusion
// (C <= D iff D is a subset of C). Capped at 10 points.
inline constexpr std::size_t kSubsetPosetCap = 10;
std::shared_ptr<const FinitePoset> subset_poset(const Universe& u);

// Gnet on subset_poset picking the least-index member of each subset. It
// converges to every point of a valid space.
Gnet subset_choice_gnet(const GtfSpace& s);

// A gnet with values in `a` converging to w exists iff w lies in
// f_closure(a); this returns one such gnet, or nothing.
//   - assoc(w) empty: constant least-index member of `a` on subset_poset;
//   - otherwise: domain is assoc(w) under reverse inclusion, each element G
//     mapped to the least-index point of G intersected with a; absence of
//     such a point for some G refutes w in f_closure(a).
// `a` must be nonempty.
std::optional<Gnet> witness_gnet(const GtfSpace& s, std::size_t w, PointSet a);

}  // namespace gtf

#endif
