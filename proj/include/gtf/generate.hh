// Deterministic sources of spaces, posets and gnets for the law suite.
#ifndef GTF_GENERATE_HH
#define GTF_GENERATE_HH

#include <cstdint>
#include <random>
#include <string_view>

#include "gtf/gnet.hh"
#include "gtf/space.hh"

namespace gtf {

// mt19937_64 with helper draws that avoid the standard distributions, whose
// outputs differ between library implementations. Identical seeds give
// identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    std::size_t below(std::size_t n);  // uniform-ish in [0, n), n > 0
    bool chance(double p);

private:
    std::mt19937_64 eng_;
};

// Stable derivation of independent sub-streams from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index);

struct SpaceGenParams {
    std::size_t max_universe_size = 7;  // per-space size drawn uniformly from 2..max (cap 8)
    std::size_t max_generators = 6;     // per-space count drawn uniformly from 0..max
    double orphan_assoc_density = 0.30;  // chance per (orphan, nonempty open) pair
    double include_empty_prob = 0.15;    // chance the empty set joins an orphan family
    std::uint64_t seed = 7;
};

// Deterministic function of (params, index); every result passes validate().
GtfSpace random_space(const SpaceGenParams& p, std::uint64_t index);

// Every space over n points, each exactly once: all union-closed open
// families, then all orphan family assignments. n <= 3 (counts: 3, 16, 209);
// larger n is refused with a ResourceError.
std::vector<GtfSpace> exhaustive_spaces(std::size_t n);

std::shared_ptr<const FinitePoset> random_poset(Rng& rng, std::size_t max_elems = 5);
Gnet random_gnet(Rng& rng, std::shared_ptr<const FinitePoset> domain, std::size_t n_points);

// All |W|^len maps over chains of length 1..max_len.
std::vector<Gnet> chain_gnets(std::size_t n_points, std::size_t max_len = 3);

}  // namespace gtf

#endif
