#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebmat/int_matrix.hpp"

namespace chebmat {

enum class DiagramFamily {
    A,
    D,
    E6,
    E7,
    E8,
    L,
    ATilde,
    DTilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
    LTilde,
    DLTilde,
};

// A labeled diagram together with its adjacency matrix. Loops are encoded
// as diagonal entry 1, so L_n = A_n + E_11 holds verbatim.
struct DiagramSpec {
    DiagramFamily family;
    int index;  // the subscript n
    int size;   // vertex count
    IntMatrix adjacency;
    // DTilde with index 3 degenerates (the four outer vertices sit on two
    // centers that are themselves outer); its shape is convention-dependent.
    bool convention_dependent = false;
};

// Index bounds: A_n n>=2, D_n n>=4, L_n n>=2, ATilde_n n>=3 (size n+1),
// DTilde_n n>=3 (size n+1), LTilde_n n>=2, DLTilde_n n>=3, E/ETilde fixed.
DiagramSpec build_diagram(DiagramFamily family, int index);

bool family_is_finite(DiagramFamily family);
bool family_is_extended(DiagramFamily family);
// Canonical index for the fixed-size families (E6 -> 6, ...); 0 for the
// parametric ones.
int family_fixed_index(DiagramFamily family);
std::string family_name(DiagramFamily family);
std::optional<DiagramFamily> family_from_name(std::string_view name);

// I^0 X I^0: the matrix with vertex order reversed.
IntMatrix reverse_labeling(const IntMatrix& x);

// Coxeter number h of a finite-type family: the first zero of (f_k) occurs
// at k = h - 1. Extended families are rejected.
int coxeter_number(DiagramFamily family, int index);

struct FamilyMatch {
    DiagramFamily family;
    int index;
    // relabeling[i] = input vertex playing canonical vertex i, i.e.
    // canonical.at(i, j) == input.at(relabeling[i], relabeling[j]).
    std::vector<int> relabeling;
};

// Recognizes x as a relabeled diagram adjacency matrix. Input must be
// symmetric, nonnegative and connected; finite families are preferred when
// several match. Exhaustive (backtracking with degree and loop pruning), so
// exact at any size that terminates in reasonable time.
std::optional<FamilyMatch> identify_family(const IntMatrix& x);

// Connectivity of the graph underlying a symmetric nonnegative matrix
// (nonzero off-diagonal entries are edges).
bool is_connected(const IntMatrix& x);

}  // namespace chebmat
