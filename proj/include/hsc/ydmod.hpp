#pragma once

#include "hsc/equivariant.hpp"
#include "hsc/structures.hpp"

namespace hsc {

// Yetter-Drinfeld module over H (acting as its own bicomodule algebra): a
// right H-module and right C-comodule for a bimodule coalgebra C, subject to
// the crossed compatibility condition
//   (m a0)(0) (x) a(-1) |> (m a0)(1) == m0 a0 (x) m1 <| a1.
struct YDModule {
    Bialgebra H;
    BimoduleCoalgebra C;  // over (H, H)
    int dim;
    LinearMap action;    // right H-action, d x (d * n)
    LinearMap coaction;  // right C-coaction, (d * n_C) x d
    std::vector<std::string> basis;
};

// Underlying module/comodule/bimodule-coalgebra axioms plus the crossed
// condition; when H is Hopf also the antipode form
//   rho(m a) == m0 a(0) (x) S(a(-1)) |> m1 <| a(1)
// and agreement of the two.
CheckReport check_yd(const YDModule& m);

// sigma_{M,X} : M (x) X -> X (x) M, m (x) x -> x0 (x) m.x1.
LinearMap sigma_from_yd(const YDModule& m, const RightComodule& x);

// Lax-center structure of sigma on the probe set: sigma at the trivial
// object is the identity, each sigma_X is a C-comodule map for the
// module-category coactions on M (x) X and X (x) M, and sigma_{X (x) Y} ==
// (id_X (x) sigma_Y) o (sigma_X (x) id_Y) for all probe pairs. Passes
// exactly when check_yd does.
CheckReport check_lax_center(const YDModule& m, const std::vector<RightComodule>& x_probes);

// H (x) M with the free left structures and the crossed right ones; an
// object with left H-coaction/action and right C-coaction, right H-action.
// Throws NotHopf when H has no antipode.
BiequivariantBicomodule yd_to_bicomodule(const YDModule& m);

// Inverse construction on the coinvariants of the left coaction.
YDModule bicomodule_to_yd(const BiequivariantBicomodule& n);

}  // namespace hsc
