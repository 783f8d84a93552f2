#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chebmat/diagrams.hpp"
#include "chebmat/dynamics.hpp"
#include "chebmat/int_matrix.hpp"

namespace chebmat {

// Ext-matrix of the radical-cube-zero symmetric algebra attached to a
// diagram: each edge contributes a pair of opposite arrows, a loop one; this
// is exactly the adjacency matrix.
IntMatrix ext_matrix(const DiagramSpec& spec);

// The 2n x 2n companion operator B = [[E, -I], [I, 0]] driving syzygy
// dimension vectors.
IntMatrix b_matrix(const IntMatrix& e);

struct BPowerBlocks {
    IntMatrix top_left;      // f_k(E)
    IntMatrix top_right;     // -f_{k-1}(E)
    IntMatrix bottom_left;   // f_{k-1}(E)
    IntMatrix bottom_right;  // -f_{k-2}(E)
};

// The blocks of B^k, computed through the Chebyshev recurrence rather than
// repeated 2n x 2n multiplication. k >= 0; k = 0 uses the backward extension
// f_{-2} = -I so that B^0 = I.
BPowerBlocks b_power_blocks(const IntMatrix& e, long k);
IntMatrix b_power_reassembled(const BPowerBlocks& blocks);

// Radical-layer dimension vectors (alpha, E alpha, alpha) of the projective
// cover determined by a head vector alpha >= 0.
std::array<std::vector<Int>, 3> projective_layers(const IntMatrix& e, const std::vector<Int>& alpha);

// Head / radical dimension vector pair of a syzygy.
struct DimVector {
    std::vector<Int> alpha;
    std::vector<Int> beta;
};

struct TraceStep {
    long k = 0;
    DimVector d;                    // corrected dimension vector of Omega^k(S_i)
    std::vector<Int> projectives;   // multiplicities in the k-th resolution term (= d.alpha)
    std::optional<int> simple_hit;  // 1-based j when Omega^k(S_i) = S_j
    bool semisimple_reset = false;  // head vanished but the tail was not a unit vector
};

struct ResolutionTrace {
    IntMatrix ext;
    int start = 1;                // 1-based simple index
    std::vector<TraceStep> steps; // steps[k] describes Omega^k, k = 0..requested
    std::vector<std::string> warnings;
};

// Iterates d <- B d from (e_i, 0). When the head vanishes and the tail is a
// unit vector e_j the syzygy is the simple S_j and the trace restarts from
// (e_j, 0); a vanished head with a non-unit tail is recorded but not treated
// as a simple. A negative head entry is impossible for a valid Ext-matrix
// and raises model_violation_error.
ResolutionTrace syzygy_trace(const IntMatrix& e, int i, long steps);

// Multiplicities of the indecomposable projectives in the k-th term of the
// minimal projective resolution of S_i. Equals row i of f_k(E) before the
// first simple hit.
std::vector<Int> resolution_terms(const IntMatrix& e, int i, long k);

// Least p > 0 with Omega^p(S_i) = S_i for every i, from the first-hit data
// of the traces; nullopt when some simple never hits within the scan bound.
// k_max = 0 picks a bound sufficient for every finite-type diagram.
std::optional<long> resolution_period(const IntMatrix& e, long k_max = 0);

struct GrowthFactorResult {
    long q = 0;                      // certified step (empirically minimal for its kind)
    GrowthKind kind = GrowthKind::uniform;
    long paper_q = 0;                // tabulated value, for comparison
    bool paper_step_valid = false;   // does the tabulated step satisfy its difference identity?
    std::vector<std::string> warnings;
};

// The linear-growth factor of the resolutions of an extended-type diagram:
// the certified growth step, with the tabulated value attached. LTilde keeps
// its reversal certificate (extrapolation uses the row-reversed variant);
// everything else is promoted to the minimal uniform step.
GrowthFactorResult growth_factor(const DiagramSpec& spec);

}  // namespace chebmat
