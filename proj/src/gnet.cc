#include "gtf/gnet.hh"

#include <bit>

namespace gtf {

PointSet Gnet::value_set() const {
    PointSet out;
    for (std::size_t v : values) out = out.with(v);
    return out;
}

Gnet constant_gnet(std::shared_ptr<const FinitePoset> domain, std::size_t w) {
    std::size_t n = domain->size();
    return Gnet{std::move(domain), std::vector<std::size_t>(n, w)};
}

namespace {

FinitePoset::Bits elements_landing_in(const Gnet& g, PointSet u) {
    FinitePoset::Bits in(g.domain->size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (u.contains(g.values[i])) in.set(i);
    return in;
}

}  // namespace

bool eventually(const Gnet& g, PointSet u) {
    FinitePoset::Bits in = elements_landing_in(g, u);
    for (std::size_t i = 0; i < g.domain->size(); ++i)
        if (g.domain->upset(i).is_subset_of(in)) return true;
    return false;
}

bool frequently(const Gnet& g, PointSet u) {
    FinitePoset::Bits in = elements_landing_in(g, u);
    for (std::size_t i = 0; i < g.domain->size(); ++i)
        if (!(g.domain->upset(i) & in).any()) return false;
    return true;
}

bool eventually_in_all(const Gnet& g, const SetFamily& fam) {
    for (PointSet u : fam)
        if (!eventually(g, u)) return false;
    return true;
}

bool frequently_in_all(const Gnet& g, const SetFamily& fam) {
    for (PointSet u : fam)
        if (!frequently(g, u)) return false;
    return true;
}

bool converges(const GtfSpace& s, const Gnet& g, std::size_t w) {
    return eventually_in_all(g, s.assoc_of(w));
}

PointSet limits(const GtfSpace& s, const Gnet& g) {
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        if (eventually_in_all(g, s.assoc[w])) out = out.with(w);
    return out;
}

PointSet limit_points(const GtfSpace& s, const Gnet& g) {
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        if (frequently_in_all(g, s.assoc[w])) out = out.with(w);
    return out;
}

bool e_converges(const GtfSpace& s, const Gnet& g, std::size_t w, unsigned cap) {
    return eventually_in_all(g, e_neighbourhoods(s, w, cap));
}

PointSet e_limits(const GtfSpace& s, const Gnet& g, unsigned cap) {
    SetFamily f_open = enumerate_f_open(s, cap);
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        if (eventually_in_all(g, e_neighbourhoods_over(f_open, w))) out = out.with(w);
    return out;
}

PointSet e_limit_points(const GtfSpace& s, const Gnet& g, unsigned cap) {
    SetFamily f_open = enumerate_f_open(s, cap);
    PointSet out;
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        if (frequently_in_all(g, e_neighbourhoods_over(f_open, w))) out = out.with(w);
    return out;
}

namespace {

bool separates(const SetFamily& fam, std::size_t other) {
    for (PointSet g : fam)
        if (!g.contains(other)) return true;
    return false;
}

}  // namespace

bool is_ft1(const GtfSpace& s) {
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        for (std::size_t v = 0; v < s.universe.size(); ++v)
            if (w != v && !separates(s.assoc[w], v)) return false;
    return true;
}

bool is_et1(const GtfSpace& s, unsigned cap) {
    SetFamily f_open = enumerate_f_open(s, cap);
    for (std::size_t w = 0; w < s.universe.size(); ++w)
        for (std::size_t v = 0; v < s.universe.size(); ++v)
            if (w != v && !separates(e_neighbourhoods_over(f_open, w), v)) return false;
    return true;
}

std::shared_ptr<const FinitePoset> subset_poset(const Universe& u) {
    std::size_t n = u.size();
    if (n > kSubsetPosetCap)
        throw ResourceError("subset poset over " + std::to_string(n) +
                            " points exceeds the cap of " + std::to_string(kSubsetPosetCap));
    std::vector<std::string> labels;
    std::vector<Mask> masks;
    Mask full = u.full_mask();
    // ascending mask order keeps element indices deterministic
    for (Mask m = 1; m <= full; ++m) {
        masks.push_back(m);
        labels.push_back(format_set(u, PointSet::from_mask(m)));
    }
    auto leq = [&masks](std::size_t i, std::size_t j) {
        return (masks[j] & ~masks[i]) == 0;  // i <= j iff masks[j] subset of masks[i]
    };
    return std::make_shared<FinitePoset>(FinitePoset::from_relation(std::move(labels), leq));
}

namespace {

std::size_t least_member(PointSet s) {
    return static_cast<std::size_t>(std::countr_zero(s.mask()));
}

}  // namespace

Gnet subset_choice_gnet(const GtfSpace& s) {
    auto p = subset_poset(s.universe);
    std::vector<std::size_t> values;
    values.reserve(p->size());
    Mask m = 1;
    for (std::size_t i = 0; i < p->size(); ++i, ++m)
        values.push_back(least_member(PointSet::from_mask(m)));
    return Gnet{std::move(p), std::move(values)};
}

std::optional<Gnet> witness_gnet(const GtfSpace& s, std::size_t w, PointSet a) {
    if (a.empty()) throw DomainError("witness_gnet needs a nonempty target set");
    const SetFamily& fw = s.assoc_of(w);
    if (fw.empty()) {
        // every gnet converges to w; pick a constant one inside `a`
        auto p = subset_poset(s.universe);
        return constant_gnet(std::move(p), least_member(a));
    }
    std::vector<PointSet> picks;
    for (PointSet g : fw) {
        PointSet meet = g & a;
        if (meet.empty()) return std::nullopt;  // w cannot lie in f_closure(a)
        picks.push_back(meet);
    }
    std::vector<std::string> labels;
    for (PointSet g : fw) labels.push_back(format_set(s.universe, g));
    const auto& sets = fw.sets();
    auto leq = [&sets](std::size_t i, std::size_t j) { return sets[j].subset_of(sets[i]); };
    auto p = std::make_shared<FinitePoset>(FinitePoset::from_relation(std::move(labels), leq));
    std::vector<std::size_t> values;
    values.reserve(picks.size());
    for (PointSet m : picks) values.push_back(least_member(m));
    return Gnet{std::move(p), std::move(values)};
}

}  // namespace gtf
