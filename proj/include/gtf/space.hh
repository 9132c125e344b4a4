// Generalized topologies and structures with an associating function.
//
// A generalized topology mu over a finite universe W contains the empty set
// and is closed under unions; W itself need not be a member. Points outside
// the union of mu are called orphaned. A structure attaches to every point w
// a family assoc(w) of sets: for w inside the union of mu the family is
// forced to be exactly the open sets containing w, for orphaned w it may be
// any subfamily of mu (the empty set included).
#ifndef GTF_SPACE_HH
#define GTF_SPACE_HH

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gtf/sets.hh"

namespace gtf {

struct GeneralizedTopology {
    SetFamily mu;

    PointSet union_mu() const { return mu.union_all(); }
    bool is_strong(const Universe& u) const {
        return union_mu() == PointSet::from_mask(u.full_mask());
    }

    bool operator==(const GeneralizedTopology&) const = default;
};

// Checks that `fam` is a generalized topology over `u`: members fit in the
// universe, the empty set is present, binary unions stay inside. For finite
// families closure under binary unions coincides with closure under unions of
// arbitrary nonempty subfamilies, since any such union is a finite fold.
struct ValidationReport {
    bool pass = true;
    std::vector<std::string> problems;

    std::string to_string() const;
};

ValidationReport validate_topology(const Universe& u, const SetFamily& fam);

// Union closure of arbitrary generator sets (the generators need not include
// the empty set). Result always contains the empty set.
GeneralizedTopology build_topology(const Universe& u, const SetFamily& generators);

struct GtfSpace {
    Universe universe;
    GeneralizedTopology topology;
    std::vector<SetFamily> assoc;  // indexed by point

    const SetFamily& assoc_of(std::size_t w) const { return assoc.at(w); }
    PointSet carrier() const { return topology.union_mu(); }
    PointSet all_points() const { return PointSet::from_mask(universe.full_mask()); }

    bool operator==(const GtfSpace&) const = default;
};

// Re-checks the whole structure from raw data: topology validity, assoc arity,
// the forced clause on carrier points, membership of orphan families in mu.
ValidationReport validate(const GtfSpace& s);
void ensure_valid(const GtfSpace& s);  // throws ValidationError listing every problem

// Builds a valid space: assoc on carrier points is derived from mu, orphan
// families are taken from `orphan_assoc` (missing orphans get the empty
// family). Keys must name orphaned points.
GtfSpace make_space(Universe universe, GeneralizedTopology topology,
                    const std::map<std::string, SetFamily>& orphan_assoc = {});

PointSet interior(const GtfSpace& s, PointSet a);
PointSet closure(const GtfSpace& s, PointSet a);
PointSet orphaned_points(const GtfSpace& s);

// {z : a is a member of assoc(z)}; `a` must be open.
PointSet preimage(const GtfSpace& s, PointSet a);

// Intersection of assoc(v); the whole universe when assoc(v) is empty.
PointSet kernel_of(const GtfSpace& s, std::size_t v);

// {z : the empty set is a member of assoc(z)}.
PointSet empty_flagged_points(const GtfSpace& s);

// Family of spaces over W = {1,...,2k} with opens {1,3,...,2j-1} for j <= k.
// Odd points carry their forced families; the variants differ in what the
// (orphaned) even points carry:
//   Base        - the empty family;
//   Prime       - the family of the nearest odd point below;
//   DoublePrime - the family of the nearest odd point above (empty at the
//                 upper truncation edge, where that point falls outside W);
//   TriplePrime - all nonempty opens not carried by the odd point above.
enum class ExampleVariant { Base, Prime, DoublePrime, TriplePrime };

ExampleVariant parse_variant(const std::string& name);  // "base", "prime", ...
std::string variant_name(ExampleVariant v);

GtfSpace example_space(ExampleVariant variant, unsigned k);

}  // namespace gtf

#endif
