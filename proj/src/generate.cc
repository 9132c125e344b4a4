#include "gtf/generate.hh"

namespace gtf {

std::size_t Rng::below(std::size_t n) {
    // modulo bias is irrelevant at these ranges and keeps draws portable
    return static_cast<std::size_t>(next() % n);
}

bool Rng::chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
    for (char c : tag) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ull;
    }
    h ^= index + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    // splitmix64 finalizer
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
}

namespace {

std::vector<std::string> letter_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
    return labels;
}

void check_params(const SpaceGenParams& p) {
    if (p.max_universe_size < 2 || p.max_universe_size > 8)
        throw ValidationError("max_universe_size must lie in 2..8");
    if (p.max_generators > 6) throw ValidationError("max_generators must lie in 0..6");
    if (p.orphan_assoc_density < 0 || p.orphan_assoc_density > 1 ||
        p.include_empty_prob < 0 || p.include_empty_prob > 1)
        throw ValidationError("probabilities must lie in [0, 1]");
}

}  // namespace

GtfSpace random_space(const SpaceGenParams& p, std::uint64_t index) {
    check_params(p);
    Rng rng(mix_seed(p.seed, "space", index));
    std::size_t n = 2 + rng.below(p.max_universe_size - 1);
    Universe u{letter_labels(n)};
    Mask full = u.full_mask();

    std::size_t gens = rng.below(p.max_generators + 1);
    SetFamily generators;
    for (std::size_t i = 0; i < gens; ++i)
        generators.insert(PointSet::from_mask(rng.next() & full));
    GeneralizedTopology top = build_topology(u, generators);

    PointSet carrier = top.union_mu();
    std::map<std::string, SetFamily> orphan;
    for (std::size_t w = 0; w < n; ++w) {
        if (carrier.contains(w)) continue;
        SetFamily fam;
        for (PointSet x : top.mu) {
            if (x.empty()) continue;
            if (rng.chance(p.orphan_assoc_density)) fam.insert(x);
        }
        if (rng.chance(p.include_empty_prob)) fam.insert(PointSet{});
        orphan.emplace(u.label(w), std::move(fam));
    }
    return make_space(std::move(u), std::move(top), orphan);
}

std::vector<GtfSpace> exhaustive_spaces(std::size_t n) {
    if (n < 1) throw ValidationError("exhaustive_spaces needs n >= 1");
    if (n > 3)
        throw ResourceError("exhaustive enumeration over " + std::to_string(n) +
                            " points is out of reach; the cap is 3");
    Universe u{letter_labels(n)};
    Mask full = u.full_mask();

    // nonempty subsets in ascending mask order; a family is a bitmask over them
    std::vector<PointSet> nonempty;
    for (Mask m = 1; m <= full; ++m) nonempty.push_back(PointSet::from_mask(m));
    std::size_t nsub = nonempty.size();

    std::vector<GtfSpace> out;
    for (std::uint64_t fam_bits = 0; fam_bits < (1ull << nsub); ++fam_bits) {
        SetFamily mu;
        mu.insert(PointSet{});
        for (std::size_t i = 0; i < nsub; ++i)
            if ((fam_bits >> i) & 1) mu.insert(nonempty[i]);
        bool closed = true;
        for (PointSet a : mu) {
            for (PointSet b : mu)
                if (!mu.contains(a | b)) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (!closed) continue;
        GeneralizedTopology top{mu};
        PointSet carrier = top.union_mu();
        std::vector<std::size_t> orphans;
        for (std::size_t w = 0; w < n; ++w)
            if (!carrier.contains(w)) orphans.push_back(w);

        // mixed-radix counter over per-orphan subfamily masks
        std::size_t musz = mu.size();
        std::vector<std::uint64_t> pick(orphans.size(), 0);
        while (true) {
            std::map<std::string, SetFamily> orphan_assoc;
            for (std::size_t oi = 0; oi < orphans.size(); ++oi) {
                SetFamily fam;
                for (std::size_t i = 0; i < musz; ++i)
                    if ((pick[oi] >> i) & 1) fam.insert(mu.sets()[i]);
                orphan_assoc.emplace(u.label(orphans[oi]), std::move(fam));
            }
            out.push_back(make_space(u, top, orphan_assoc));
            std::size_t oi = 0;
            for (; oi < orphans.size(); ++oi) {
                if (++pick[oi] < (1ull << musz)) break;
                pick[oi] = 0;
            }
            if (oi == orphans.size()) break;
        }
    }
    return out;
}

std::shared_ptr<const FinitePoset> random_poset(Rng& rng, std::size_t max_elems) {
    std::size_t n = 1 + rng.below(max_elems);
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    // edges only from lower to higher index, so the closure is a poset
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(0.35)) covers.emplace_back(i, j);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return std::make_shared<const FinitePoset>(FinitePoset::from_covers(std::move(labels), covers));
}

Gnet random_gnet(Rng& rng, std::shared_ptr<const FinitePoset> domain, std::size_t n_points) {
    std::vector<std::size_t> values;
    values.reserve(domain->size());
    for (std::size_t i = 0; i < domain->size(); ++i) values.push_back(rng.below(n_points));
    return Gnet{std::move(domain), std::move(values)};
}

std::vector<Gnet> chain_gnets(std::size_t n_points, std::size_t max_len) {
    std::vector<Gnet> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        auto chain = std::make_shared<const FinitePoset>(FinitePoset::chain(len));
        std::vector<std::size_t> values(len, 0);
        while (true) {
            out.push_back(Gnet{chain, values});
            std::size_t i = 0;
            for (; i < len; ++i) {
                if (++values[i] < n_points) break;
                values[i] = 0;
            }
            if (i == len) break;
        }
    }
    return out;
}

}  // namespace gtf
