#include "gtf/laws.hh"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "gtf/f_ops.hh"
#include "gtf/gnet.hh"

namespace gtf {
namespace {

std::string set_literal(const Universe& u, PointSet s) {
    std::string out;
    for (std::size_t i : s.members()) {
        if (!out.empty()) out += ',';
        out += u.label(i);
    }
    return out;
}

std::string family_literals(const Universe& u, const std::vector<PointSet>& fam) {
    std::string out;
    for (PointSet s : fam) {
        if (!out.empty()) out += " | ";
        out += format_set(u, s);
    }
    return out;
}

// Members with no strictly smaller member. Both "some member inside A" and
// "every member meets A" are decided by the minimal members alone.
std::vector<PointSet> minimal_members(const SetFamily& fam) {
    std::vector<PointSet> out;
    for (PointSet s : fam) {
        bool minimal = true;
        for (PointSet t : fam)
            if (t != s && t.subset_of(s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

std::size_t a4_kinds_found(const LawReport& r) {
    std::set<std::string> kinds;
    for (const auto& w : r.witnesses) kinds.insert(w.data.value("which", ""));
    kinds.erase("");
    return kinds.size();
}

// Limit sets of one sampled gnet, precomputed in bulk.
struct GnetFacts {
    PointSet values;
    PointSet lims;
    PointSet elims;
    PointSet max_images;
};

// Everything the checks need about one space: operator tables over all
// subsets, the f-open enumeration, e-neighbourhoods, kernels, and lazily a
// deterministic sample of set families and gnets.
struct Ctx {
    const GtfSpace& s;
    const SuiteParams& par;
    std::uint64_t stream_index;

    std::size_t n;
    Mask full;
    PointSet all, carrier, zset;
    bool every_family_nonempty;

    std::vector<PointSet> fint, fcl, cint, ccl, eint, ecl;
    SetFamily f_open;
    PointSet f_open_union;
    std::vector<SetFamily> e_fams;
    std::vector<PointSet> kernels;       // intersection of assoc(u), empty family gives W
    std::vector<PointSet> einters;       // intersection of E_u, empty family gives W
    std::vector<PointSet> const_lims;    // limits of the constant gnet at w: {u : w in kernels[u]}
    std::vector<PointSet> e_const_lims;  // e-limits of the constant gnet at w
    std::vector<std::vector<Mask>> min_f, min_e;
    std::vector<char> has_open_sub;      // per mask: some nonempty open set fits inside

    bool families_ready = false;
    std::vector<std::vector<PointSet>> family_sample;
    bool gnets_ready = false;
    std::vector<Gnet> gnet_sample;
    std::vector<GnetFacts> gnet_facts;
    bool json_ready = false;
    Json sjson;

    Ctx(const GtfSpace& sp, const SuiteParams& p, std::uint64_t idx)
        : s(sp), par(p), stream_index(idx) {
        n = s.universe.size();
        full = s.universe.full_mask();
        all = PointSet::from_mask(full);
        carrier = s.carrier();
        zset = empty_flagged_points(s);
        every_family_nonempty = true;
        for (std::size_t w = 0; w < n; ++w)
            if (s.assoc_of(w).empty()) every_family_nonempty = false;

        std::size_t nm = static_cast<std::size_t>(full) + 1;
        fint.reserve(nm);
        fcl.reserve(nm);
        cint.reserve(nm);
        ccl.reserve(nm);
        for (Mask m = 0; m <= full; ++m) {
            PointSet a = PointSet::from_mask(m);
            fint.push_back(f_interior(s, a));
            fcl.push_back(f_closure(s, a));
            cint.push_back(interior(s, a));
            ccl.push_back(closure(s, a));
        }
        for (Mask m = 0; m <= full; ++m)
            if (fint[m].mask() == m) f_open.insert(PointSet::from_mask(m));
        f_open_union = f_open.union_all();
        eint.reserve(nm);
        ecl.reserve(nm);
        for (Mask m = 0; m <= full; ++m) {
            PointSet a = PointSet::from_mask(m);
            eint.push_back(e_interior_over(f_open, n, a));
            ecl.push_back(e_closure_over(f_open, n, a));
        }
        e_fams.reserve(n);
        kernels.reserve(n);
        einters.reserve(n);
        min_f.reserve(n);
        min_e.reserve(n);
        for (std::size_t w = 0; w < n; ++w) {
            e_fams.push_back(e_neighbourhoods_over(f_open, w));
            kernels.push_back(kernel_of(s, w));
            einters.push_back(e_fams[w].intersect_all(all));
            std::vector<Mask> mf, me;
            for (PointSet g : minimal_members(s.assoc_of(w))) mf.push_back(g.mask());
            for (PointSet g : minimal_members(e_fams[w])) me.push_back(g.mask());
            min_f.push_back(std::move(mf));
            min_e.push_back(std::move(me));
        }
        const_lims.assign(n, PointSet{});
        e_const_lims.assign(n, PointSet{});
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t u = 0; u < n; ++u) {
                if (kernels[u].contains(w)) const_lims[w] = const_lims[w].with(u);
                if (einters[u].contains(w)) e_const_lims[w] = e_const_lims[w].with(u);
            }
        has_open_sub.assign(nm, 0);
        for (Mask m = 0; m <= full; ++m)
            for (PointSet x : s.topology.mu)
                if (!x.empty() && x.subset_of(PointSet::from_mask(m))) {
                    has_open_sub[m] = 1;
                    break;
                }
    }

    const Json& space_json() {
        if (!json_ready) {
            sjson = space_to_json(s);
            json_ready = true;
        }
        return sjson;
    }

    void record(LawReport& r, Json data, std::string note) {
        if (r.witnesses.size() < par.witness_cap)
            r.witnesses.push_back(LawWitness{space_json(), std::move(data), std::move(note)});
    }

    std::string lit(PointSet a) const { return set_literal(s.universe, a); }
    std::string pretty(PointSet a) const { return format_set(s.universe, a); }

    // Families of subsets with 1 to 4 members: every such family when the
    // universe has at most 3 points, otherwise a seeded sample.
    void ensure_families() {
        if (families_ready) return;
        families_ready = true;
        std::size_t nm = static_cast<std::size_t>(full) + 1;
        if (n <= 3) {
            for (std::size_t k = 1; k <= 4 && k <= nm; ++k) {
                std::vector<std::size_t> idx(k);
                std::iota(idx.begin(), idx.end(), std::size_t{0});
                while (true) {
                    std::vector<PointSet> fam;
                    for (std::size_t i : idx) fam.push_back(PointSet::from_mask(i));
                    family_sample.push_back(std::move(fam));
                    std::size_t j = k;
                    while (j > 0 && idx[j - 1] == nm - k + (j - 1)) --j;
                    if (j == 0) break;
                    ++idx[j - 1];
                    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
                }
            }
        } else {
            Rng rng(mix_seed(par.space.seed, "families", stream_index));
            for (std::size_t i = 0; i < par.family_samples; ++i) {
                std::size_t k = 1 + rng.below(4);
                std::vector<PointSet> fam;
                for (std::size_t j = 0; j < k; ++j)
                    fam.push_back(PointSet::from_mask(rng.next() & full));
                family_sample.push_back(std::move(fam));
            }
        }
    }

    // Every gnet over short chains plus seeded random gnets over small
    // posets, with limit sets precomputed through an eventually-table.
    void ensure_gnets() {
        if (gnets_ready) return;
        gnets_ready = true;
        gnet_sample = chain_gnets(n, par.chain_gnet_max_len);
        Rng rng(mix_seed(par.space.seed, "gnets", stream_index));
        for (std::size_t i = 0; i < par.random_gnets_per_space; ++i) {
            auto dom = random_poset(rng, par.max_poset_elems);
            gnet_sample.push_back(random_gnet(rng, dom, n));
        }
        gnet_facts.reserve(gnet_sample.size());
        for (const Gnet& g : gnet_sample) gnet_facts.push_back(facts_for(g));
    }

    GnetFacts facts_for(const Gnet& g) const {
        const FinitePoset& p = *g.domain;
        std::size_t pn = p.size();
        if (pn > 64) throw ResourceError("sampled gnet domain too large for the fact table");
        std::vector<std::uint64_t> up(pn, 0), fiber(n, 0);
        for (std::size_t i = 0; i < pn; ++i) {
            const auto& bits = p.upset(i);
            for (auto j = bits.find_first(); j != FinitePoset::Bits::npos; j = bits.find_next(j))
                up[i] |= std::uint64_t{1} << j;
            fiber[g.values[i]] |= std::uint64_t{1} << i;
        }
        // landing[m]: poset elements whose image lies in the point set m;
        // ev[m]: some element's whole up-set lands in m ("eventually in m")
        std::vector<std::uint64_t> landing(static_cast<std::size_t>(full) + 1, 0);
        std::vector<char> ev(static_cast<std::size_t>(full) + 1, 0);
        for (Mask m = 1; m <= full; ++m) {
            Mask low = m & (~m + 1);
            landing[m] = landing[m ^ low] | fiber[static_cast<std::size_t>(std::countr_zero(low))];
        }
        for (Mask m = 0; m <= full; ++m)
            for (std::size_t i = 0; i < pn; ++i)
                if ((up[i] & ~landing[m]) == 0) {
                    ev[m] = 1;
                    break;
                }
        GnetFacts f;
        f.values = g.value_set();
        for (std::size_t w = 0; w < n; ++w) {
            bool lim = true, elim = true;
            for (Mask m : min_f[w])
                if (!ev[m]) {
                    lim = false;
                    break;
                }
            for (Mask m : min_e[w])
                if (!ev[m]) {
                    elim = false;
                    break;
                }
            if (lim) f.lims = f.lims.with(w);
            if (elim) f.elims = f.elims.with(w);
        }
        for (std::size_t m : p.maximal_elements()) f.max_images = f.max_images.with(g.values[m]);
        return f;
    }

    Json gnet_json(std::size_t gi) { return gnet_to_json(gnet_sample[gi], s.universe); }
};

// The universally quantified side of the limit-transfer converse, decided
// exactly: every gnet converging to w also converges to v iff either no gnet
// converges to w at all (the empty set sits in assoc(w)), or every member H
// of assoc(v) is the whole universe or contains some member of assoc(w).
// Anything else admits a branching gnet that reaches w and dodges H.
bool limit_transfer_holds(const GtfSpace& s, PointSet all, std::size_t w, std::size_t v) {
    if (s.assoc_of(w).contains(PointSet{})) return true;
    for (PointSet h : s.assoc_of(v)) {
        if (h == all) continue;
        bool dominated = false;
        for (PointSet g : s.assoc_of(w))
            if (g.subset_of(h)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

PointSet const_limits_of(const GtfSpace& s, std::size_t w) {
    PointSet out;
    for (std::size_t u = 0; u < s.universe.size(); ++u)
        if (kernel_of(s, u).contains(w)) out = out.with(u);
    return out;
}

bool constant_limits_unique(const GtfSpace& s) {
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        if (const_limits_of(s, w).count() > 1) return false;
    return true;
}

// ---------------------------------------------------------------- f-interior

void law_l1(Ctx& c, LawReport& r) {
    for (Mask b = 0; b <= c.full; ++b) {
        Mask a = b;
        while (true) {
            ++r.checks;
            if (!c.fint[a].subset_of(c.fint[b]))
                c.record(r, {{"a", c.lit(PointSet::from_mask(a))}, {"b", c.lit(PointSet::from_mask(b))}},
                         "subset with an f-interior point its superset lacks");
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
}

void law_l2(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        PointSet a = PointSet::from_mask(m);
        ++r.checks;
        if (!c.cint[m].subset_of(c.fint[m]))
            c.record(r, {{"set", c.lit(a)}}, "interior point missing from the f-interior");
        if (c.s.topology.mu.contains(a)) {
            ++r.checks;
            if (!a.subset_of(c.fint[m]))
                c.record(r, {{"set", c.lit(a)}}, "open set not below its own f-interior");
        }
    }
}

void law_l3(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if ((c.fint[m] & c.carrier) != c.cint[m])
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "f-interior cut to the carrier differs from the interior");
    }
}

void law_l4(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!(c.fint[c.fint[m].mask()] & c.carrier).subset_of(c.fint[m]))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "twice-applied f-interior leaves the first one on the carrier");
    }
}

void law_l5(Ctx& c, LawReport& r) {
    for (PointSet a : c.s.topology.mu) {
        ++r.checks;
        if (!preimage(c.s, a).subset_of(c.fint[a.mask()]))
            c.record(r, {{"set", c.lit(a)}}, "a point carrying this open set misses its f-interior");
    }
}

void law_l6(Ctx& c, LawReport& r) {
    ++r.checks;
    if ((c.fint[c.full] == c.all) != c.every_family_nonempty)
        c.record(r, Json::object(),
                 "full-universe f-interior disagrees with families being nonempty");
}

void law_l7(Ctx& c, LawReport& r) {
    ++r.checks;
    if (c.fint[0].empty() != c.zset.empty())
        c.record(r, Json::object(),
                 "empty-set f-interior disagrees with empty-set membership flags");
}

void law_l8(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        if (c.has_open_sub[m]) continue;
        ++r.checks;
        if (!c.fint[m].empty() && !c.fint[m].subset_of(c.zset))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "set without nonempty open subsets has an unflagged f-interior point");
    }
    bool some_empty = false;
    for (Mask m = 0; m <= c.full && !some_empty; ++m) some_empty = c.fint[m].empty();
    ++r.checks;
    if (some_empty && !c.zset.empty())
        c.record(r, Json::object(),
                 "some set has an empty f-interior although a point flags the empty set");
}

void law_l9(Ctx& c, LawReport& r) {
    c.ensure_families();
    for (const auto& fam : c.family_sample) {
        PointSet uni, ints;
        bool all_uf = true;
        for (PointSet x : fam) {
            uni = uni | x;
            ints = ints | c.fint[x.mask()];
            if (!x.subset_of(c.fint[x.mask()])) all_uf = false;
        }
        ++r.checks;
        if (!ints.subset_of(c.fint[uni.mask()]))
            c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                     "union of f-interiors escapes the f-interior of the union");
        if (all_uf) {
            ++r.checks;
            if (!uni.subset_of(c.fint[uni.mask()]))
                c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                         "union of inflationary sets is not inflationary");
        }
    }
}

void law_l10(Ctx& c, LawReport& r) {
    c.ensure_families();
    for (const auto& fam : c.family_sample) {
        PointSet inter = c.all, ints = c.all;
        bool all_df = true;
        for (PointSet x : fam) {
            inter = inter & x;
            ints = ints & c.fint[x.mask()];
            if (!c.fint[x.mask()].subset_of(x)) all_df = false;
        }
        ++r.checks;
        if (!c.fint[inter.mask()].subset_of(ints))
            c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                     "f-interior of the intersection escapes the intersection of f-interiors");
        if (all_df) {
            ++r.checks;
            if (!c.fint[inter.mask()].subset_of(inter))
                c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                         "intersection of deflationary sets is not deflationary");
        }
    }
}

void law_l11(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        PointSet a = PointSet::from_mask(m);
        if (!a.subset_of(c.fint[m]) || !c.fint[m].subset_of(c.carrier)) continue;
        ++r.checks;
        if (!c.s.topology.mu.contains(a))
            c.record(r, {{"set", c.lit(a)}},
                     "inflationary set with carrier-bound f-interior is not open");
    }
}

void law_l12(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        if (!c.s.assoc_of(w).empty() != c.f_open_union.contains(w))
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "family emptiness disagrees with membership in some f-open set");
        for (PointSet a : c.s.assoc_of(w)) {
            ++r.checks;
            try {
                PointSet h = open_hull(c.s, a);
                if (c.fint[h.mask()] != h || !h.contains(w))
                    c.record(r, {{"point", c.s.universe.label(w)}, {"set", c.lit(a)}},
                             "hull of a family member fails to be an f-open set around the point");
            } catch (const Error& e) {
                c.record(r, {{"point", c.s.universe.label(w)}, {"set", c.lit(a)}},
                         std::string("hull construction failed: ") + e.what());
            }
        }
    }
}

// ----------------------------------------------------------------- f-closure

void law_l13(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        if (c.fint[m].mask() != m) continue;
        PointSet comp = PointSet::from_mask(m).complement_in(c.all);
        ++r.checks;
        if (c.fcl[comp.mask()] != comp)
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "complement of an f-open set is not f-closed");
    }
}

void law_l14(Ctx& c, LawReport& r) {
    ++r.checks;
    if (c.fcl[0].empty() != c.every_family_nonempty)
        c.record(r, Json::object(),
                 "empty-set f-closure disagrees with families being nonempty");
    ++r.checks;
    if ((c.fcl[c.full] == c.all) != c.zset.empty())
        c.record(r, Json::object(),
                 "full-universe f-closure disagrees with empty-set membership flags");
    c.ensure_families();
    for (const auto& fam : c.family_sample) {
        PointSet uni, inter = c.all, cl_union, cl_inter = c.all;
        bool all_uf = true, all_df = true;
        for (PointSet x : fam) {
            uni = uni | x;
            inter = inter & x;
            cl_union = cl_union | c.fcl[x.mask()];
            cl_inter = cl_inter & c.fcl[x.mask()];
            if (!x.subset_of(c.fcl[x.mask()])) all_uf = false;
            if (!c.fcl[x.mask()].subset_of(x)) all_df = false;
        }
        ++r.checks;
        if (!cl_union.subset_of(c.fcl[uni.mask()]))
            c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                     "union of f-closures escapes the f-closure of the union");
        if (all_uf) {
            ++r.checks;
            if (!uni.subset_of(c.fcl[uni.mask()]))
                c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                         "union of expansively closed sets loses the property");
        }
        ++r.checks;
        if (!c.fcl[inter.mask()].subset_of(cl_inter))
            c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                     "f-closure of the intersection escapes the intersection of f-closures");
        if (all_df) {
            ++r.checks;
            if (!c.fcl[inter.mask()].subset_of(inter))
                c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                         "intersection of contractively closed sets loses the property");
        }
    }
}

void law_l15(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.fcl[m].subset_of(c.ccl[m]))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}}, "f-closure point outside the closure");
    }
}

// ------------------------------------------------------------------- e-level

void law_e1(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        if (c.e_fams[w].empty() != c.s.assoc_of(w).empty())
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "e-neighbourhood emptiness disagrees with family emptiness");
    }
}

void law_e2(Ctx& c, LawReport& r) {
    SetFamily eo;
    for (Mask m = 0; m <= c.full; ++m)
        if (c.eint[m].mask() == m) eo.insert(PointSet::from_mask(m));
    ValidationReport rep = validate_topology(c.s.universe, eo);
    ++r.checks;
    if (!rep.pass)
        c.record(r, {{"problems", rep.to_string()}}, "e-open family is not a generalized topology");
    if (c.every_family_nonempty) {
        ++r.checks;
        if (eo.union_all() != c.all)
            c.record(r, Json::object(),
                     "families all nonempty yet the e-open family is not strong");
    }
}

void law_e3(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w)
        if (!c.carrier.contains(w) && !c.s.assoc_of(w).empty()) return;
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        bool okay = c.carrier.contains(w) ? c.e_fams[w] == c.s.assoc_of(w) : c.e_fams[w].empty();
        if (!okay)
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "with bare orphans, e-neighbourhoods should equal the family on the "
                     "carrier and vanish elsewhere");
    }
}

void law_e4(Ctx& c, LawReport& r) {
    c.ensure_families();
    for (const auto& fam : c.family_sample) {
        PointSet inter = c.all;
        for (PointSet x : fam) inter = inter & x;
        ++r.checks;
        if (!c.eint[inter.mask()].subset_of(inter))
            c.record(r, {{"family", family_literals(c.s.universe, fam)}},
                     "e-interior of an intersection escapes the intersection");
    }
}

void law_e5(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        bool okay = true;
        for (PointSet x : c.e_fams[w])
            if (!x.contains(w)) okay = false;
        if (!okay)
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "an e-neighbourhood does not contain its point");
    }
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.eint[m].subset_of(PointSet::from_mask(m)))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}}, "e-interior reaches outside the set");
    }
}

// --------------------------------------------------------------- convergence

void law_g1(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        if (!c.const_lims[w].empty() != c.const_lims[w].contains(w))
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "constant gnet at " + c.s.universe.label(w) + " has limits " +
                         c.pretty(c.const_lims[w]) + " yet not its own point");
    }
}

void law_g2(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        bool conv = !c.const_lims[w].empty();
        bool predicted = c.carrier.contains(w) || c.s.assoc_of(w).empty();
        if (conv != predicted)
            c.record(r, {{"point", c.s.universe.label(w)}},
                     std::string("constant gnet is ") + (conv ? "convergent" : "not convergent") +
                         " although the point is " + (predicted ? "on" : "neither on") +
                         " the carrier " + (predicted ? "or" : "nor") + " family-free");
    }
}

void law_g3(Ctx& c, LawReport& r) {
    ++r.checks;
    bool unique = true;
    for (std::size_t w = 0; w < c.n; ++w)
        if (c.const_lims[w].count() > 1) unique = false;
    if (unique != is_ft1(c.s))
        c.record(r, Json::object(),
                 unique ? "all constant limits are unique yet two points lack separating members"
                        : "separation holds yet some constant gnet has two limits");
}

void law_g4(Ctx& c, LawReport& r) {
    std::vector<std::pair<std::size_t, std::size_t>> kernel_pairs;
    for (std::size_t w = 0; w < c.n; ++w)
        for (std::size_t v = 0; v < c.n; ++v)
            if (w != v && c.kernels[v].contains(w)) kernel_pairs.emplace_back(w, v);
    if (!kernel_pairs.empty()) {
        c.ensure_gnets();
        for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
            const GnetFacts& f = c.gnet_facts[gi];
            for (auto [w, v] : kernel_pairs) {
                ++r.checks;
                if (f.lims.contains(w) && !f.lims.contains(v))
                    c.record(r,
                             {{"part", "transfer"},
                              {"w", c.s.universe.label(w)},
                              {"v", c.s.universe.label(v)},
                              {"gnet", c.gnet_json(gi)}},
                             "kernel membership fails to transfer this limit");
            }
        }
    }
    for (std::size_t w = 0; w < c.n; ++w) {
        if (c.const_lims[w].empty()) continue;  // the stated premise: the constant gnet converges
        for (std::size_t v = 0; v < c.n; ++v) {
            if (v == w) continue;
            ++r.checks;
            if (limit_transfer_holds(c.s, c.all, w, v) && !c.kernels[v].contains(w))
                c.record(r, {{"part", "converse"}, {"w", c.s.universe.label(w)}, {"v", c.s.universe.label(v)}},
                         "every gnet reaching " + c.s.universe.label(w) + " also reaches " +
                             c.s.universe.label(v) + ", yet " + c.s.universe.label(w) +
                             " misses the kernel " + c.pretty(c.kernels[v]));
        }
    }
}

void law_g5(Ctx& c, LawReport& r) {
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        ++r.checks;
        PointSet bad = c.gnet_facts[gi].lims & c.zset;
        if (!bad.empty())
            c.record(r,
                     {{"gnet", c.gnet_json(gi)},
                      {"point", c.s.universe.label(bad.members().front())}},
                     "gnet converges to a point flagging the empty set");
    }
}

void law_g6(Ctx& c, LawReport& r) {
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        const GnetFacts& f = c.gnet_facts[gi];
        for (std::size_t p : f.max_images.members()) {
            if (c.carrier.contains(p) || c.s.assoc_of(p).empty()) {
                ++r.checks;
                if (!f.lims.contains(p))
                    c.record(r, {{"gnet", c.gnet_json(gi)}, {"point", c.s.universe.label(p)}},
                             "image of a maximal element fails to be a limit");
            }
            ++r.checks;
            if (!f.elims.contains(p))
                c.record(r, {{"gnet", c.gnet_json(gi)}, {"point", c.s.universe.label(p)}},
                         "image of a maximal element fails to be an e-limit");
        }
    }
}

void law_g7(Ctx& c, LawReport& r) {
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        ++r.checks;
        const GnetFacts& f = c.gnet_facts[gi];
        if (!f.lims.subset_of(f.elims)) {
            PointSet bad = f.lims - f.elims;
            c.record(r,
                     {{"gnet", c.gnet_json(gi)},
                      {"point", c.s.universe.label(bad.members().front())}},
                     "a limit is not an e-limit");
        }
    }
}

void law_g8(Ctx& c, LawReport& r) {
    for (std::size_t w = 0; w < c.n; ++w) {
        ++r.checks;
        if (!c.e_const_lims[w].contains(w))
            c.record(r, {{"point", c.s.universe.label(w)}},
                     "constant gnet fails to e-converge to its own point");
    }
    ++r.checks;
    bool unique = true;
    for (std::size_t w = 0; w < c.n; ++w)
        if (c.e_const_lims[w] != PointSet::single(w)) unique = false;
    if (unique != is_et1(c.s))
        c.record(r, Json::object(),
                 unique ? "unique constant e-limits yet e-separation fails"
                        : "e-separation holds yet constant e-limits are not unique");
}

void law_g9(Ctx& c, LawReport& r) {
    auto query = [&](std::size_t w, PointSet a) {
        ++r.checks;
        std::optional<Gnet> wg;
        try {
            wg = witness_gnet(c.s, w, a);
        } catch (const Error& e) {
            c.record(r, {{"point", c.s.universe.label(w)}, {"set", c.lit(a)}},
                     std::string("witness construction failed: ") + e.what());
            return;
        }
        bool inside = c.fcl[a.mask()].contains(w);
        if (wg.has_value() != inside) {
            c.record(r, {{"point", c.s.universe.label(w)}, {"set", c.lit(a)}},
                     std::string("witness ") + (wg ? "exists" : "is absent") + " yet the point is " +
                         (inside ? "inside" : "outside") + " the f-closure");
            return;
        }
        if (wg) {
            ++r.checks;
            if (!wg->value_set().subset_of(a) || !converges(c.s, *wg, w))
                c.record(r, {{"point", c.s.universe.label(w)}, {"set", c.lit(a)}},
                         "returned witness leaves the set or misses the point");
        }
    };
    if (c.n <= 2) {
        for (std::size_t w = 0; w < c.n; ++w)
            for (Mask m = 1; m <= c.full; ++m) query(w, PointSet::from_mask(m));
    } else {
        Rng rng(mix_seed(c.par.space.seed, "pairs", c.stream_index));
        for (std::size_t i = 0; i < c.par.pair_samples; ++i) {
            std::size_t w = rng.below(c.n);
            Mask m = rng.next() & c.full;
            if (m == 0) m = c.full;
            query(w, PointSet::from_mask(m));
        }
    }
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        const GnetFacts& f = c.gnet_facts[gi];
        for (std::size_t w : f.lims.members()) {
            ++r.checks;
            if (!c.fcl[f.values.mask()].contains(w))
                c.record(r, {{"gnet", c.gnet_json(gi)}, {"point", c.s.universe.label(w)}},
                         "limit of a gnet escapes the f-closure of its value set");
        }
    }
}

// ---------------------------------------------------- counterexample hunting

void law_a1(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.fint[m].subset_of(PointSet::from_mask(m))) {
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "f-interior " + c.pretty(c.fint[m]) + " reaches outside " +
                         c.pretty(PointSet::from_mask(m)));
            return;
        }
    }
}

void law_a2(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!PointSet::from_mask(m).subset_of(c.fcl[m])) {
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     c.pretty(PointSet::from_mask(m)) + " escapes its f-closure " + c.pretty(c.fcl[m]));
            return;
        }
    }
}

void law_a3(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.fcl[m].subset_of(PointSet::from_mask(m))) {
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "f-closure " + c.pretty(c.fcl[m]) + " reaches outside " +
                         c.pretty(PointSet::from_mask(m)));
            return;
        }
    }
}

void law_a4(Ctx& c, LawReport& r) {
    std::set<std::string> found;
    for (const auto& w : r.witnesses) found.insert(w.data.value("which", ""));
    bool need_ui = !found.count("reverse-union-interior");
    bool need_ii = !found.count("reverse-intersection-interior");
    bool need_uc = !found.count("reverse-union-closure");
    for (Mask a = 0; a <= c.full; ++a)
        for (Mask b = 0; b <= c.full; ++b) {
            if (need_ui) {
                ++r.checks;
                if (!c.fint[a | b].subset_of(c.fint[a] | c.fint[b])) {
                    c.record(r,
                             {{"which", "reverse-union-interior"},
                              {"a", c.lit(PointSet::from_mask(a))},
                              {"b", c.lit(PointSet::from_mask(b))}},
                             "f-interior of the union exceeds the union of f-interiors");
                    need_ui = false;
                }
            }
            if (need_ii) {
                ++r.checks;
                if (!(c.fint[a] & c.fint[b]).subset_of(c.fint[a & b])) {
                    c.record(r,
                             {{"which", "reverse-intersection-interior"},
                              {"a", c.lit(PointSet::from_mask(a))},
                              {"b", c.lit(PointSet::from_mask(b))}},
                             "intersection of f-interiors exceeds the f-interior of the intersection");
                    need_ii = false;
                }
            }
            if (need_uc) {
                ++r.checks;
                if (!c.fcl[a | b].subset_of(c.fcl[a] | c.fcl[b])) {
                    c.record(r,
                             {{"which", "reverse-union-closure"},
                              {"a", c.lit(PointSet::from_mask(a))},
                              {"b", c.lit(PointSet::from_mask(b))}},
                             "f-closure of the union exceeds the union of f-closures");
                    need_uc = false;
                }
            }
            if (!need_ui && !need_ii && !need_uc) return;
        }
}

void law_a5(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.ccl[m].subset_of(c.fcl[m])) {
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "closure " + c.pretty(c.ccl[m]) + " exceeds the f-closure " + c.pretty(c.fcl[m]));
            return;
        }
    }
}

void law_a6(Ctx& c, LawReport& r) {
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        ++r.checks;
        PointSet diff = c.gnet_facts[gi].elims - c.gnet_facts[gi].lims;
        if (!diff.empty()) {
            c.record(r,
                     {{"gnet", c.gnet_json(gi)},
                      {"point", c.s.universe.label(diff.members().front())}},
                     "gnet e-converges here without converging");
            return;
        }
    }
}

void law_a7(Ctx& c, LawReport& r) {
    c.ensure_gnets();
    for (std::size_t gi = 0; gi < c.gnet_facts.size(); ++gi) {
        ++r.checks;
        const GnetFacts& f = c.gnet_facts[gi];
        PointSet diff = f.elims - c.fcl[f.values.mask()];
        if (!diff.empty()) {
            c.record(r,
                     {{"gnet", c.gnet_json(gi)},
                      {"point", c.s.universe.label(diff.members().front())}},
                     "e-limit of a gnet escapes the f-closure of its value set");
            return;
        }
    }
}

// -------------------------------------------------- e-level analogue probes

void law_el1(Ctx& c, LawReport& r) {
    for (Mask b = 0; b <= c.full; ++b) {
        Mask a = b;
        while (true) {
            ++r.checks;
            if (!c.eint[a].subset_of(c.eint[b]))
                c.record(r, {{"a", c.lit(PointSet::from_mask(a))}, {"b", c.lit(PointSet::from_mask(b))}},
                         "e-interior is not monotone here");
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
}

void law_el2(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.cint[m].subset_of(c.eint[m]))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "interior " + c.pretty(c.cint[m]) + " is not below the e-interior " +
                         c.pretty(c.eint[m]));
    }
}

void law_el13(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        if (c.eint[m].mask() != m) continue;
        PointSet comp = PointSet::from_mask(m).complement_in(c.all);
        ++r.checks;
        if (c.ecl[comp.mask()] != comp)
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "complement of an e-open set is not e-closed");
    }
}

void law_el15(Ctx& c, LawReport& r) {
    for (Mask m = 0; m <= c.full; ++m) {
        ++r.checks;
        if (!c.ecl[m].subset_of(c.ccl[m]))
            c.record(r, {{"set", c.lit(PointSet::from_mask(m))}},
                     "e-closure " + c.pretty(c.ecl[m]) + " is not below the closure " +
                         c.pretty(c.ccl[m]));
    }
}

struct LawDef {
    const char* id;
    LawKind kind;
    const char* title;
    void (*check)(Ctx&, LawReport&);
};

const LawDef kLaws[] = {
    {"L1", LawKind::Positive, "f-interior is monotone", law_l1},
    {"L2", LawKind::Positive, "interior lies below f-interior; open sets are inflationary", law_l2},
    {"L3", LawKind::Positive, "f-interior cut to the carrier is the interior", law_l3},
    {"L4", LawKind::Positive, "f-interior is idempotent on the carrier", law_l4},
    {"L5", LawKind::Positive, "points carrying an open set sit in its f-interior", law_l5},
    {"L6", LawKind::Positive, "full f-interior means every family is nonempty", law_l6},
    {"L7", LawKind::Positive, "empty f-interior of the empty set means no empty-set flags", law_l7},
    {"L8", LawKind::Positive, "sets without open content have only flagged f-interior points", law_l8},
    {"L9", LawKind::Positive, "f-interior union law with the inflationary strengthening", law_l9},
    {"L10", LawKind::Positive, "f-interior intersection law with the deflationary strengthening", law_l10},
    {"L11", LawKind::Positive, "inflationary sets inside the carrier are open", law_l11},
    {"L12", LawKind::Positive, "nonempty families are exactly the points inside f-open sets", law_l12},
    {"L13", LawKind::Positive, "complements of f-open sets are f-closed", law_l13},
    {"L14", LawKind::Positive, "f-closure boundary values and union and intersection laws", law_l14},
    {"L15", LawKind::Positive, "f-closure lies below the closure", law_l15},
    {"E1", LawKind::Positive, "e-neighbourhoods vanish exactly with the family", law_e1},
    {"E2", LawKind::Positive, "e-open sets form a generalized topology, strong without empty families", law_e2},
    {"E3", LawKind::Positive, "bare orphans collapse e-neighbourhoods to the families", law_e3},
    {"E4", LawKind::Positive, "e-interior of an intersection stays inside it", law_e4},
    {"E5", LawKind::Positive, "e-neighbourhoods contain their point", law_e5},
    {"G1", LawKind::Positive, "convergent constant gnets converge to their own point", law_g1},
    {"G2", LawKind::Positive, "constant convergence matches carrier membership or a bare family", law_g2},
    {"G3", LawKind::Positive, "unique constant limits exactly under pairwise separation", law_g3},
    {"G4", LawKind::Positive, "kernel membership matches universal limit transfer", law_g4},
    {"G5", LawKind::Positive, "no gnet converges to a point flagging the empty set", law_g5},
    {"G6", LawKind::Positive, "maximal-element images are limits under the stated conditions", law_g6},
    {"G7", LawKind::Positive, "convergence implies e-convergence", law_g7},
    {"G8", LawKind::Positive, "constant gnets e-converge; uniqueness marks e-separation", law_g8},
    {"G9", LawKind::Positive, "f-closure membership is equivalent to a convergent gnet witness", law_g9},
    {"A1", LawKind::Anti, "f-interior can escape the set", law_a1},
    {"A2", LawKind::Anti, "a set can escape its f-closure", law_a2},
    {"A3", LawKind::Anti, "f-closure can escape the set", law_a3},
    {"A4", LawKind::Anti, "all three reverse inclusions can fail", law_a4},
    {"A5", LawKind::Anti, "closure can exceed f-closure", law_a5},
    {"A6", LawKind::Anti, "e-convergence does not imply convergence", law_a6},
    {"A7", LawKind::Anti, "an e-convergent gnet can evade the f-closure of its values", law_a7},
    {"EL1", LawKind::Info, "does e-interior monotonicity hold", law_el1},
    {"EL2", LawKind::Info, "does the interior lie below the e-interior", law_el2},
    {"EL13", LawKind::Info, "are complements of e-open sets e-closed", law_el13},
    {"EL15", LawKind::Info, "does the e-closure lie below the closure", law_el15},
};

constexpr std::size_t kLawCount = sizeof(kLaws) / sizeof(kLaws[0]);

bool anti_done(const LawReport& r) {
    if (r.id == "A4") return a4_kinds_found(r) == 3;
    return !r.witnesses.empty();
}

const char* kind_name(LawKind k) {
    switch (k) {
        case LawKind::Positive: return "positive";
        case LawKind::Anti: return "anti";
        case LawKind::Info: return "info";
    }
    return "?";
}

}  // namespace

bool LawReport::ok() const {
    switch (kind) {
        case LawKind::Positive: return witnesses.empty();
        case LawKind::Anti: return id == "A4" ? a4_kinds_found(*this) == 3 : !witnesses.empty();
        case LawKind::Info: return true;
    }
    return false;
}

std::string LawReport::status() const {
    switch (kind) {
        case LawKind::Positive: return ok() ? "pass" : "fail";
        case LawKind::Anti: return ok() ? "counterexample-found" : "fail";
        case LawKind::Info: return "info";
    }
    return "?";
}

std::vector<std::string> law_ids() {
    std::vector<std::string> out;
    for (const LawDef& d : kLaws) out.push_back(d.id);
    return out;
}

std::vector<LawReport> run_laws(const SuiteParams& params, const std::vector<std::string>& only) {
    if (params.witness_cap < 1) throw ValidationError("witness_cap must be at least 1");
    std::vector<bool> selected(kLawCount, only.empty());
    for (const std::string& id : only) {
        bool known = false;
        for (std::size_t i = 0; i < kLawCount; ++i)
            if (id == kLaws[i].id) {
                selected[i] = true;
                known = true;
            }
        if (!known) throw ValidationError("unknown law id: " + id);
    }
    std::vector<LawReport> reports(kLawCount);
    for (std::size_t i = 0; i < kLawCount; ++i) {
        reports[i].id = kLaws[i].id;
        reports[i].kind = kLaws[i].kind;
        reports[i].title = kLaws[i].title;
    }

    std::uint64_t stream_index = 0;
    auto process = [&](const GtfSpace& sp) {
        ensure_valid(sp);
        Ctx c(sp, params, stream_index);
        for (std::size_t i = 0; i < kLawCount; ++i) {
            if (!selected[i]) continue;
            if (kLaws[i].kind == LawKind::Anti && anti_done(reports[i])) continue;
            kLaws[i].check(c, reports[i]);
            ++reports[i].spaces_checked;
        }
        ++stream_index;
    };

    for (std::size_t k = 1; k <= params.exhaustive_max; ++k)
        for (const GtfSpace& sp : exhaustive_spaces(k)) process(sp);
    for (std::uint64_t i = 0; i < params.random_spaces; ++i) process(random_space(params.space, i));

    std::vector<LawReport> out;
    for (std::size_t i = 0; i < kLawCount; ++i)
        if (selected[i]) out.push_back(std::move(reports[i]));
    return out;
}

bool all_ok(const std::vector<LawReport>& reports) {
    for (const LawReport& r : reports)
        if (!r.ok()) return false;
    return true;
}

bool replay_witness(const std::string& law_id, const LawWitness& wit) {
    GtfSpace s = space_from_json(wit.space);
    const Universe& u = s.universe;
    PointSet all = s.all_points();
    const Json& d = wit.data;
    auto set_of = [&](const char* key) {
        return parse_set_literal(u, d.at(key).get<std::string>());
    };
    auto point_of = [&](const char* key) { return u.index_of(d.at(key).get<std::string>()); };

    if (law_id == "A1") {
        PointSet a = set_of("set");
        return !f_interior(s, a).subset_of(a);
    }
    if (law_id == "A2") {
        PointSet a = set_of("set");
        return !a.subset_of(f_closure(s, a));
    }
    if (law_id == "A3") {
        PointSet a = set_of("set");
        return !f_closure(s, a).subset_of(a);
    }
    if (law_id == "A4") {
        PointSet a = set_of("a"), b = set_of("b");
        std::string which = d.at("which").get<std::string>();
        if (which == "reverse-union-interior")
            return !f_interior(s, a | b).subset_of(f_interior(s, a) | f_interior(s, b));
        if (which == "reverse-intersection-interior")
            return !(f_interior(s, a) & f_interior(s, b)).subset_of(f_interior(s, a & b));
        if (which == "reverse-union-closure")
            return !f_closure(s, a | b).subset_of(f_closure(s, a) | f_closure(s, b));
        throw ValidationError("unknown reversal kind in witness: " + which);
    }
    if (law_id == "A5") {
        PointSet a = set_of("set");
        return !closure(s, a).subset_of(f_closure(s, a));
    }
    if (law_id == "A6") {
        Gnet g = gnet_from_json(d.at("gnet"), u);
        std::size_t w = point_of("point");
        return e_converges(s, g, w) && !converges(s, g, w);
    }
    if (law_id == "A7") {
        Gnet g = gnet_from_json(d.at("gnet"), u);
        std::size_t w = point_of("point");
        return e_converges(s, g, w) && !f_closure(s, g.value_set()).contains(w);
    }
    if (law_id == "G1") {
        std::size_t w = point_of("point");
        PointSet lims = const_limits_of(s, w);
        return !lims.empty() != lims.contains(w);
    }
    if (law_id == "G2") {
        std::size_t w = point_of("point");
        bool conv = !const_limits_of(s, w).empty();
        return conv != (s.carrier().contains(w) || s.assoc_of(w).empty());
    }
    if (law_id == "G3") {
        return constant_limits_unique(s) != is_ft1(s);
    }
    if (law_id == "G4") {
        std::size_t w = point_of("w"), v = point_of("v");
        std::string part = d.at("part").get<std::string>();
        if (part == "transfer") {
            Gnet g = gnet_from_json(d.at("gnet"), u);
            return kernel_of(s, v).contains(w) && converges(s, g, w) && !converges(s, g, v);
        }
        if (part == "converse") {
            return !const_limits_of(s, w).empty() && limit_transfer_holds(s, all, w, v) &&
                   !kernel_of(s, v).contains(w);
        }
        throw ValidationError("unknown limit-transfer part in witness: " + part);
    }
    if (law_id == "G9") {
        std::size_t w = point_of("point");
        PointSet a = set_of("set");
        std::optional<Gnet> wg = witness_gnet(s, w, a);
        bool inside = f_closure(s, a).contains(w);
        if (wg.has_value() != inside) return true;
        if (wg && (!wg->value_set().subset_of(a) || !converges(s, *wg, w))) return true;
        return false;
    }
    throw ValidationError("no replay procedure for law " + law_id);
}

Json report_to_json(const LawReport& r) {
    Json witnesses = Json::array();
    for (const LawWitness& w : r.witnesses)
        witnesses.push_back({{"space", w.space}, {"data", w.data}, {"note", w.note}});
    return {{"id", r.id},
            {"kind", kind_name(r.kind)},
            {"title", r.title},
            {"status", r.status()},
            {"ok", r.ok()},
            {"spaces_checked", r.spaces_checked},
            {"checks", r.checks},
            {"witnesses", witnesses}};
}

Json reports_to_json(const std::vector<LawReport>& reports, const SuiteParams& params) {
    Json laws = Json::array();
    for (const LawReport& r : reports) laws.push_back(report_to_json(r));
    return {{"params",
             {{"seed", params.space.seed},
              {"max_universe_size", params.space.max_universe_size},
              {"max_generators", params.space.max_generators},
              {"orphan_assoc_density", params.space.orphan_assoc_density},
              {"include_empty_prob", params.space.include_empty_prob},
              {"random_spaces", params.random_spaces},
              {"exhaustive_max", params.exhaustive_max},
              {"random_gnets_per_space", params.random_gnets_per_space},
              {"chain_gnet_max_len", params.chain_gnet_max_len},
              {"max_poset_elems", params.max_poset_elems},
              {"family_samples", params.family_samples},
              {"pair_samples", params.pair_samples},
              {"witness_cap", params.witness_cap}}},
            {"laws", laws},
            {"ok", all_ok(reports)}};
}

std::string reports_to_text(const std::vector<LawReport>& reports) {
    std::ostringstream out;
    std::vector<std::string> failing;
    for (const LawReport& r : reports) {
        std::string id = r.id;
        id.resize(6, ' ');
        std::string st = r.status();
        st.resize(22, ' ');
        out << id << st << r.title << "\n";
        out << "      spaces " << r.spaces_checked << ", checks " << r.checks;
        if (!r.witnesses.empty()) out << ", witnesses " << r.witnesses.size();
        if (r.kind == LawKind::Info)
            out << (r.witnesses.empty() ? "; analogue held on every instance checked"
                                        : "; analogue refuted, see witnesses");
        out << "\n";
        for (const LawWitness& w : r.witnesses) {
            out << "      witness: " << w.note << "\n";
            out << "        space " << w.space.dump() << "\n";
            if (!w.data.empty()) out << "        data  " << w.data.dump() << "\n";
        }
        if (!r.ok()) failing.push_back(r.id);
    }
    if (failing.empty()) {
        out << "result: every law holds and every sought counterexample was found\n";
    } else {
        out << "result: " << failing.size() << " law(s) failing:";
        for (const std::string& id : failing) out << " " << id;
        out << "\n";
    }
    return out.str();
}

}  // namespace gtf
