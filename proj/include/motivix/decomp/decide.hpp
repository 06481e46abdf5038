#pragma once

#include "motivix/cmlat/model.hpp"
#include "motivix/decomp/candidate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace motivix::decomp {

using cmlat::AbelianModel;
using cmlat::EndoQ;
using cmlat::Permutation;
using exact::Int;
using exact::Rat;

struct Probe {
    int id = 0;
    Permutation sigma;
    EndoQ endo;  // σ_J
    std::string name;
    // σ_J and its transpose integral. Lattice mode checks it; axiomatic
    // models take it from the group action.
    bool usable = true;
};

// Identity first, then transpositions (a b), a < b, lexicographic.
std::vector<Probe> probes_for(const AbelianModel& m);

// 2[W] − ½[U] − ½[V] over the cells of one side at (i, j).
Rat cell_coefficient(const Candidate& c, int i, int j, Side s);

struct ProbeImage {
    EndoQ lambda, xi;
};
// conv_{Σ_J} of Λ and Ξ: Σ_i c_i·E_{σ(i),i} with c_i read at (i, σ(i)).
ProbeImage eval_probe(const Candidate& c, const Probe& p, const AbelianModel& m);

// The image on one side composed with σ_J^⊤ on the right; diagonal with
// entry c_{σ(t)} at t. Integral whenever the image is.
EndoQ probe_query(const Candidate& c, const Probe& p, const AbelianModel& m, Side s);

struct Decision {
    std::optional<bool> integral;  // empty when undecided
    std::string rule;              // "lattice", "axiomatic", "liverpool" or "unknown"
};
// Exact integrality; for axiomatic queries outside the divisibility rule,
// values in {2,1,0,−1} fall to the subsets lemma: integral iff scalar.
Decision query_integral(const AbelianModel& m, const EndoQ& q);

struct Step {
    std::string probe;  // probe name, or "-" for steps without one
    std::optional<EndoQ> query;
    std::optional<bool> integral;
    std::string rule;
    std::string detail;
};

struct Refutation {
    bool refuted = false;
    bool undecided = false;  // some probe query could not be decided
    std::vector<Step> steps;
};

// Throws HypothesisError when the subsets lemma hypothesis fails.
Refutation refute(const Candidate& c, const AbelianModel& m, const std::vector<Probe>& probes);
Refutation refute(const Candidate& c, const AbelianModel& m);

enum class Status { Indecomposable, SurvivingCandidate, Undecided };
enum class DecideMode { Exhaustive, ProofTrace };
const char* status_name(Status s);
const char* mode_name(DecideMode m);

struct Verdict {
    Status status = Status::Undecided;
    DecideMode mode = DecideMode::ProofTrace;
    std::vector<std::string> probes;
    std::vector<Step> steps;
    std::optional<Candidate> witness;
    // Exhaustive counts over grid assignments, up to Λ↔Ξ; the eight B-type
    // cells are invisible to every probe and not counted.
    Int candidates = 0, refuted = 0, survivors = 0;
};

struct DecideOptions {
    int threads = 0;  // 0: MOTIVIX_THREADS or hardware concurrency
};

Verdict decide(const AbelianModel& m, DecideMode mode, const DecideOptions& opt = {});

int worker_count(int requested);

}  // namespace motivix::decomp
