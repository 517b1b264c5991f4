#pragma once

#include <cstdint>

#include "hsc/structures.hpp"

namespace hsc {

// Subspace of a coalgebra given by an injective inclusion map.
struct Subcoalgebra {
    Coalgebra parent;
    LinearMap inclusion;  // n x k, columns span the subspace

    int dim() const { return inclusion.cols(); }
};

// Injectivity, Delta(D) <= D (x) D. (The counit restricts automatically.)
CheckReport check_subcoalgebra(const Subcoalgebra& d);
// Additionally action(H (x) D) <= D.
CheckReport check_module_subcoalgebra(const Subcoalgebra& d, const ModuleCoalgebra& c);

// The largest subcomodule of M whose coaction lands in M (x) D: fixpoint of
// V_{k+1} = { v in V_k : rho(v) in V_k (x) D } starting from
// V_0 = rho^{-1}(M (x) D). `steps` is the number of refinements after V_0
// that changed the space (0 means V_0 was already a subcomodule).
struct TauResult {
    RightComodule restricted;  // carrier V with the C-coaction of M
    LinearMap inclusion;       // V -> M
    int steps;
};
TauResult tau(const Subcoalgebra& d, const RightComodule& m);

// Whether X (x) tau(M) <= tau(X (x) M) inside X (x) M, and whether the
// inclusion is proper. X is a comodule over the acting bialgebra of c, M over
// its coalgebra.
struct InclusionReport {
    bool included;
    bool strict;
    int sub_dim;  // dim X (x) tau(M)
    int big_dim;  // dim tau(X (x) M)
};
InclusionReport check_equivariance_inclusion(const ModuleCoalgebra& c, const Subcoalgebra& d,
                                             const RightComodule& x, const RightComodule& m);

// Data-level shadow of the subcoalgebra <-> closed-subcategory bijection:
// tau(D, C-regular) recovers D, and D is H-stable exactly when the
// equivariance inclusion holds on the probe set {k, H} (x) {C}.
CheckReport roundtrip_correspondence(const ModuleCoalgebra& c, const Subcoalgebra& d);

// M []_D N with the induced left/right coactions and diagonal H-action; m
// must be a C-D-bicomodule and n a D-E-bicomodule over the same H.
EquivariantBicomodule cotensor_bicomodule(const EquivariantBicomodule& m,
                                          const EquivariantBicomodule& n);

// Search for invertible intertwiners M []_D N -> C and N []_C M -> D. The
// space of structure-preserving maps is solved exactly; an invertible element
// is then sought by sampling (seeded, so reproducible). A miss is reported as
// unverified together with the solution-space dimensions — it does not prove
// the objects fail to be inverse to each other.
struct MoritaWitness {
    bool verified;  // both intertwiners found and invertible
    int mn_solution_dim;
    int nm_solution_dim;
    std::optional<LinearMap> to_c;  // M []_D N -> C
    std::optional<LinearMap> to_d;  // N []_C M -> D
};
MoritaWitness morita_witness_check(const EquivariantBicomodule& m, const EquivariantBicomodule& n,
                                   std::uint64_t seed);

}  // namespace hsc
