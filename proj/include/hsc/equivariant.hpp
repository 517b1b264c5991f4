#pragma once

#include <functional>
#include <vector>

#include "hsc/cotensor.hpp"
#include "hsc/structures.hpp"

namespace hsc {

// The structure maps of W [] M as a functor of M: a family
// xi_{X,W} : X (x) (W [] M) -> (X (x) W) [] M, indexed by a right H-comodule
// X and a right C-comodule W. The whole family is determined by its value at
// (H, C); we carry a procedure so externally supplied tables and derived
// families share one interface.
struct XiFamily {
    EquivariantBicomodule M;
    std::function<LinearMap(const RightComodule& x, const RightComodule& w)> eval;
};

// xi_{X,W}(x (x) w (x) m) = x0 (x) w (x) (x1 . m), restricted to the cotensor
// subspaces. Throws NotWellDefined when the image escapes (X (x) W) [] M or
// the result is not D-colinear — either signals that the action violates the
// equivariance equations.
LinearMap xi_from_action(const EquivariantBicomodule& m, const RightComodule& x,
                         const RightComodule& w);

XiFamily xi_family_from_action(const EquivariantBicomodule& m);

// Derive the action table h . m = (eps (x) eps (x) id) xi_{H,C}(h (x) lambda(m))
// from a stored xi_{H,C} block; no axiom check.
LinearMap derive_action(const EquivariantBicomodule& m, const LinearMap& xi_hc);

// Family reconstructed from the (H, C) block: the derived action is plugged
// into the closed form above for every probe.
XiFamily xi_family_from_table(const EquivariantBicomodule& m, const LinearMap& xi_hc);

// Recover the action from a family and verify it makes M an equivariant
// bicomodule; throws AxiomFailure naming the first failing axiom otherwise.
LinearMap action_from_xi(const XiFamily& xi);

struct LaxProbe {
    RightComodule X;  // over H
    RightComodule Y;  // over H
    RightComodule W;  // over C
};

// Default probe set: X, Y range over {k, H} (so X (x) Y reaches H (x) H) and
// W over {C, C-free of rank 2, zero}.
std::vector<LaxProbe> default_probes(const EquivariantBicomodule& m);

// Per probe: unit law xi_{k,W} == id, coherence
// xi_{X(x)Y,W} == xi_{X,Y(x)W} o (id_X (x) xi_{Y,W}), D-colinearity at every
// slot, and agreement with the closed form derived from the family's action.
CheckReport check_lax_axioms(const XiFamily& xi, const std::vector<LaxProbe>& probes);

// Both directions of the action <-> lax-structure bijection: deriving the
// action back from xi recovers the original table, and rebuilding xi from its
// (H, C) block reproduces it on regular and free probes.
CheckReport roundtrip_bijection(const EquivariantBicomodule& m);

// Naturality of the family in each slot, for a right-colinear morphism.
bool naturality_in_x(const XiFamily& xi, const LinearMap& f, const RightComodule& x_from,
                     const RightComodule& x_to, const RightComodule& w);
bool naturality_in_w(const XiFamily& xi, const LinearMap& g, const RightComodule& w_from,
                     const RightComodule& w_to, const RightComodule& x);

// Whether a bicomodule map f : M -> N commutes with the two families at the
// probe (X, W); equivalent to H-linearity of f.
bool xi_commutes_with(const XiFamily& xi_m, const XiFamily& xi_n, const LinearMap& f,
                      const RightComodule& x, const RightComodule& w);

// ---- Right-handed and two-sided variants, by delegation through K^op ----

struct RightModuleCoalgebra {
    Bialgebra over;    // K, acting on the right
    Coalgebra coalg;   // C
    LinearMap action;  // n_C x (n_C * n_K)
};

struct RightEquivariantBicomodule {
    Bialgebra K;
    RightModuleCoalgebra C, D;
    int dim;
    LinearMap left_coaction;
    LinearMap right_coaction;
    LinearMap action;  // d x (d * n_K)
    std::vector<std::string> basis;
};

// The same data viewed as a left module over the opposite bialgebra.
EquivariantBicomodule to_op(const RightEquivariantBicomodule& m);
CheckReport check_right_equivariant_bicomodule(const RightEquivariantBicomodule& m);

// W (x) X with coaction w (x) x -> w0 (x) x0 (x) (w1 . x1), the right-handed
// analogue of tensor_comodule.
RightComodule tensor_comodule_right(const RightComodule& w, const RightComodule& x,
                                    const RightModuleCoalgebra& c);

// xi^r_{W,X} : (W [] M) (x) X -> (W (x) X) [] M, built from the left-handed
// theory over K^op and a leg swap.
LinearMap right_xi_from_action(const RightEquivariantBicomodule& m, const RightComodule& w,
                               const RightComodule& x);

struct BimoduleCoalgebra {
    Bialgebra H, K;
    Coalgebra coalg;
    LinearMap left_action;   // n_C x (n_H * n_C)
    LinearMap right_action;  // n_C x (n_C * n_K)
};

struct BiequivariantBicomodule {
    Bialgebra H, K;
    BimoduleCoalgebra C, D;
    int dim;
    LinearMap left_coaction;
    LinearMap right_coaction;
    LinearMap left_action;   // d x (n_H * d)
    LinearMap right_action;  // d x (d * n_K)
    std::vector<std::string> basis;
};

EquivariantBicomodule left_side(const BiequivariantBicomodule& m);
RightEquivariantBicomodule right_side(const BiequivariantBicomodule& m);

// Both one-sided checkers plus commutation of the two actions on M, C and D.
CheckReport check_biequivariant_bicomodule(const BiequivariantBicomodule& m);

// Middle coherence at a probe: the two ways of moving X and Y across W [] M
// agree as maps X (x) (W [] M) (x) Y -> (X (x) W (x) Y) [] M.
CheckReport bimodule_coherence(const BiequivariantBicomodule& m, const RightComodule& x,
                               const RightComodule& w, const RightComodule& y);

}  // namespace hsc
