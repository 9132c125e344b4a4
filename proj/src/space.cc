#include "gtf/space.hh"

#include <algorithm>

namespace gtf {

std::string ValidationReport::to_string() const {
    if (pass) return "valid";
    std::string out;
    for (const auto& p : problems) {
        if (!out.empty()) out += "\n";
        out += "fail: " + p;
    }
    return out;
}

ValidationReport validate_topology(const Universe& u, const SetFamily& fam) {
    ValidationReport r;
    PointSet full = PointSet::from_mask(u.full_mask());
    for (PointSet s : fam) {
        if (!s.subset_of(full)) {
            r.pass = false;
            r.problems.push_back("family member does not fit in the universe");
            return r;
        }
    }
    if (!fam.contains(PointSet{})) {
        r.pass = false;
        r.problems.push_back("mu does not contain the empty set");
    }
    for (PointSet a : fam) {
        for (PointSet b : fam) {
            if (!fam.contains(a | b)) {
                r.pass = false;
                r.problems.push_back("mu is not union-closed: " + format_set(u, a) + " ∪ " +
                                     format_set(u, b) + " = " + format_set(u, a | b) +
                                     " is missing");
                return r;
            }
        }
    }
    return r;
}

GeneralizedTopology build_topology(const Universe& u, const SetFamily& generators) {
    PointSet full = PointSet::from_mask(u.full_mask());
    for (PointSet s : generators) {
        if (!s.subset_of(full))
            throw ValidationError("generator set does not fit in the universe");
    }
    SetFamily mu;
    mu.insert(PointSet{});
    for (PointSet s : generators) mu.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> cur = mu.sets();
        for (PointSet a : cur) {
            for (PointSet b : cur) {
                PointSet un = a | b;
                if (!mu.contains(un)) {
                    mu.insert(un);
                    grew = true;
                }
            }
        }
    }
    return GeneralizedTopology{std::move(mu)};
}

ValidationReport validate(const GtfSpace& s) {
    ValidationReport r = validate_topology(s.universe, s.topology.mu);
    if (s.assoc.size() != s.universe.size()) {
        r.pass = false;
        r.problems.push_back("assoc must assign a family to every point");
        return r;
    }
    PointSet carrier = s.carrier();
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        const std::string& wl = s.universe.label(w);
        if (carrier.contains(w)) {
            SetFamily forced;
            for (PointSet x : s.topology.mu)
                if (x.contains(w)) forced.insert(x);
            if (s.assoc[w] != forced) {
                r.pass = false;
                r.problems.push_back("assoc(" + wl + ") must equal the open sets containing " +
                                     wl + ", i.e. " + format_family(s.universe, forced) +
                                     ", got " + format_family(s.universe, s.assoc[w]));
            }
        } else {
            for (PointSet x : s.assoc[w]) {
                if (!s.topology.mu.contains(x)) {
                    r.pass = false;
                    r.problems.push_back("assoc(" + wl + ") contains " +
                                         format_set(s.universe, x) + " which is not in mu");
                }
            }
        }
    }
    return r;
}

void ensure_valid(const GtfSpace& s) {
    ValidationReport r = validate(s);
    if (!r.pass) throw ValidationError(r.to_string());
}

GtfSpace make_space(Universe universe, GeneralizedTopology topology,
                    const std::map<std::string, SetFamily>& orphan_assoc) {
    GtfSpace s{std::move(universe), std::move(topology), {}};
    s.assoc.resize(s.universe.size());
    PointSet carrier = s.carrier();
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        if (carrier.contains(w)) {
            SetFamily forced;
            for (PointSet x : s.topology.mu)
                if (x.contains(w)) forced.insert(x);
            s.assoc[w] = std::move(forced);
        }
    }
    for (const auto& [label, fam] : orphan_assoc) {
        std::size_t w = s.universe.index_of(label);
        if (carrier.contains(w))
            throw ValidationError("assoc for '" + label +
                                  "' given explicitly, but the point is not orphaned");
        s.assoc[w] = fam;
    }
    ensure_valid(s);
    return s;
}

PointSet interior(const GtfSpace& s, PointSet a) {
    PointSet out;
    for (PointSet x : s.topology.mu)
        if (x.subset_of(a)) out = out | x;
    return out;
}

PointSet closure(const GtfSpace& s, PointSet a) {
    PointSet w = s.all_points();
    return interior(s, a.complement_in(w)).complement_in(w);
}

PointSet orphaned_points(const GtfSpace& s) {
    return s.carrier().complement_in(s.all_points());
}

PointSet preimage(const GtfSpace& s, PointSet a) {
    if (!s.topology.mu.contains(a))
        throw DomainError("preimage is defined for open sets only; " +
                          format_set(s.universe, a) + " is not in mu");
    PointSet out;
    for (std::size_t z = 0; z < s.universe.size(); ++z)
        if (s.assoc[z].contains(a)) out = out.with(z);
    return out;
}

PointSet kernel_of(const GtfSpace& s, std::size_t v) {
    return s.assoc_of(v).intersect_all(s.all_points());
}

PointSet empty_flagged_points(const GtfSpace& s) {
    PointSet out;
    for (std::size_t z = 0; z < s.universe.size(); ++z)
        if (s.assoc[z].contains(PointSet{})) out = out.with(z);
    return out;
}

ExampleVariant parse_variant(const std::string& name) {
    if (name == "base") return ExampleVariant::Base;
    if (name == "prime") return ExampleVariant::Prime;
    if (name == "double_prime") return ExampleVariant::DoublePrime;
    if (name == "triple_prime") return ExampleVariant::TriplePrime;
    throw ValidationError("unknown example variant '" + name +
                          "' (base, prime, double_prime, triple_prime)");
}

std::string variant_name(ExampleVariant v) {
    switch (v) {
        case ExampleVariant::Base: return "base";
        case ExampleVariant::Prime: return "prime";
        case ExampleVariant::DoublePrime: return "double_prime";
        case ExampleVariant::TriplePrime: return "triple_prime";
    }
    return "?";
}

GtfSpace example_space(ExampleVariant variant, unsigned k) {
    if (k < 1 || k > 32) throw ValidationError("example_space needs 1 <= k <= 32");
    std::size_t n = 2 * static_cast<std::size_t>(k);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Universe u{std::move(labels)};

    // open_j = {1,3,...,2j-1}, as index mask (point m has index m-1)
    auto open_j = [&](unsigned j) {
        PointSet s;
        for (unsigned m = 1; m <= 2 * j - 1; m += 2) s = s.with(m - 1);
        return s;
    };
    SetFamily gens;
    for (unsigned j = 1; j <= k; ++j) gens.insert(open_j(j));
    GeneralizedTopology top = build_topology(u, gens);

    // forced family of an odd value m, empty when m lies outside the universe
    auto forced_at = [&](unsigned m) {
        SetFamily f;
        if (m >= 1 && m <= n) {
            for (PointSet x : top.mu)
                if (x.contains(m - 1)) f.insert(x);
        }
        return f;
    };

    std::map<std::string, SetFamily> orphan;
    for (unsigned m = 2; m <= n; m += 2) {
        SetFamily fam;
        switch (variant) {
            case ExampleVariant::Base:
                break;
            case ExampleVariant::Prime:
                fam = forced_at(m - 1);  // nearest odd below, always in range
                break;
            case ExampleVariant::DoublePrime:
                fam = forced_at(m + 1);  // nearest odd above, empty past the edge
                break;
            case ExampleVariant::TriplePrime: {
                SetFamily above = forced_at(m + 1);
                for (PointSet x : top.mu)
                    if (!x.empty() && !above.contains(x)) fam.insert(x);
                break;
            }
        }
        orphan.emplace(std::to_string(m), std::move(fam));
    }
    return make_space(std::move(u), std::move(top), orphan);
}

}  // namespace gtf
