// Property suite: runs every operator law over streams of generated spaces
// and hunts for the documented counterexample phenomena.
#ifndef GTF_LAWS_HH
#define GTF_LAWS_HH

#include <cstddef>
#include <string>
#include <vector>

#include "gtf/generate.hh"
#include "gtf/json_io.hh"

namespace gtf {

// Positive laws must hold everywhere; anti laws assert that a counterexample
// exists and search for one; info probes record whether an analogue of a
// lower-level law survives at the e-level, without asserting either way.
enum class LawKind { Positive, Anti, Info };

struct LawWitness {
    Json space;        // full serialization of the space involved
    Json data;         // law-specific payload: sets, points, gnets
    std::string note;  // human-readable account of what the instance shows
};

struct LawReport {
    std::string id;
    LawKind kind = LawKind::Positive;
    std::string title;
    std::size_t spaces_checked = 0;
    std::size_t checks = 0;
    std::vector<LawWitness> witnesses;

    // Positive: no witnesses. Anti: the phenomenon was found (A4 needs all
    // three of its reversal kinds). Info: always true.
    bool ok() const;
    // "pass", "fail", "counterexample-found", or "info".
    std::string status() const;
};

struct SuiteParams {
    SpaceGenParams space;                     // sizes, densities, master seed
    std::size_t random_spaces = 500;          // generated spaces in the stream
    std::size_t exhaustive_max = 2;           // prepend all spaces of sizes 1..this (0 disables, cap 3)
    std::size_t random_gnets_per_space = 200;
    std::size_t chain_gnet_max_len = 3;       // plus every gnet over chains up to this length
    std::size_t max_poset_elems = 5;          // domain size cap for random gnets
    std::size_t family_samples = 48;          // sampled set families per space (exhaustive when the space has at most 3 points)
    std::size_t pair_samples = 16;            // sampled (point, set) witness queries per space (exhaustive at 2 points)
    std::size_t witness_cap = 3;              // recorded witnesses per law
};

// Ids of every law, in report order.
std::vector<std::string> law_ids();

// Runs the selected laws (all when `only` is empty) over the space stream:
// exhaustive spaces first, then the generated ones. Reports are a pure
// function of the parameters; restricting `only` never changes what the
// selected laws see. Unknown ids throw ValidationError.
std::vector<LawReport> run_laws(const SuiteParams& params,
                                const std::vector<std::string>& only = {});

// Every positive law passed and every anti law found its phenomenon.
bool all_ok(const std::vector<LawReport>& reports);

// Re-evaluates a recorded witness from its serialization alone: for anti
// laws, whether the phenomenon still shows on that instance; for positive
// laws, whether the violation still reproduces. Supported for the laws that
// can emit witnesses; others throw ValidationError.
bool replay_witness(const std::string& law_id, const LawWitness& w);

Json report_to_json(const LawReport& r);
Json reports_to_json(const std::vector<LawReport>& reports, const SuiteParams& params);
std::string reports_to_text(const std::vector<LawReport>& reports);

}  // namespace gtf

#endif
