#pragma once

#include <optional>

#include "hsc/equivariant.hpp"
#include "hsc/structures.hpp"

namespace hsc {

// beta : H (x) H -> H (x) H, h (x) h' -> h1 (x) h2 h'. Invertible exactly
// when H has an antipode.
LinearMap beta_map(const Bialgebra& h);

// S(h) = (eps (x) id) beta^{-1}(h (x) 1). Returns nullopt when beta is
// singular; throws InternalError if beta inverts but the antipode axioms fail
// (that would contradict the theorem this implements).
std::optional<LinearMap> extract_antipode(const Bialgebra& h);

// xi-bar_{X,W} : (X (x) W) [] M -> X (x) (W [] M),
// x (x) w (x) m -> x0 (x) (w (x) S(x1) m). Two-sided inverse of xi when S is
// an antipode for H.
LinearMap xi_inverse(const EquivariantBicomodule& m, const LinearMap& antipode,
                     const RightComodule& x, const RightComodule& w);

// The induced Hopf module H (x) W: left coaction Delta (x) id, right coaction
// h (x) w -> h1 (x) w0 (x) h2.w1, H acting by multiplication on the first
// leg. C = H with the regular structure.
EquivariantBicomodule psi_functor(const Bialgebra& h, const ModuleCoalgebra& d,
                                  const RightComodule& w);

// m with lambda(m) = 1 (x) m, as a right D-comodule; the coaction of M
// restricts (checked).
struct Coinvariants {
    RightComodule comodule;
    LinearMap inclusion;  // into the carrier of M
};
Coinvariants coinvariants(const EquivariantBicomodule& m);

// For each W probe: W -> coinv(H (x) W), w -> 1 (x) w, is a colinear
// isomorphism. For each Hopf module probe M: H (x) coinv(M) -> M, h (x) m ->
// h.m, is an isomorphism.
CheckReport fundamental_theorem_check(const Bialgebra& h, const ModuleCoalgebra& d,
                                      const std::vector<RightComodule>& w_probes,
                                      const std::vector<EquivariantBicomodule>& m_probes);

// Bounded search for a Hopf-module-like object whose freeness-counit map
// fails to be invertible: exhaustive over one-dimensional objects with
// coefficients in {0, +-1} (all residues over a small prime field). When H is
// Hopf no such object can exist; when H has no antipode one should turn up.
// The report says which happened and whether that matches H.
CheckReport converse_probe_search(const Bialgebra& h, const ModuleCoalgebra& d);

}  // namespace hsc
