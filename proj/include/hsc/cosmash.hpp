#pragma once

#include "hsc/structures.hpp"

namespace hsc {

// Coordinate dual of a finite-dimensional bialgebra: multiplication is the
// convolution product (transpose of Delta), comultiplication the transpose of
// multiplication, unit = eps^T, counit = evaluation at 1. Involutive:
// dual(dual(H)) has exactly H's tables.
Bialgebra dual_bialgebra(const Bialgebra& h);

// Right H*-coaction c -> c[0] (x) c[1] induced by a left H-action on a
// carrier of dimension `dim`: the partial transpose of the action table, so
// that h . c == sum c[1](h) c[0].
LinearMap induced_dual_coaction(const LinearMap& action, int h_dim);

// The coalgebra H* (x) C with
//   Delta(f (x) c) = (f1 (x) c1[0]) (x) (f2 * c1[1] (x) c2),
// a module coalgebra over H* via free multiplication on the first leg.
// The axioms are guaranteed; a failure raises InternalError.
ModuleCoalgebra cosmash(const Bialgebra& h, const ModuleCoalgebra& c);

// Left H-module that is simultaneously a right C-comodule, with the coaction
// H-equivariant for the diagonal action on M (x) C.
struct HModuleComodule {
    Bialgebra H;
    ModuleCoalgebra C;
    int dim;
    LinearMap action;    // d x (n_H * d)
    LinearMap coaction;  // (d * n_C) x d
    std::vector<std::string> basis;
};

CheckReport check_h_module_comodule(const HModuleComodule& m);

// The same data as a single comodule over the cosmash coalgebra:
// m -> (m0)[0] (x) (m0)[1] (x) m1. Inverse below; the two are mutually
// inverse on tables, and f is (H-linear and C-colinear) iff it is colinear
// for the translated comodules.
RightComodule to_cosmash_comodule(const HModuleComodule& m);
HModuleComodule from_cosmash_comodule(const Bialgebra& h, const ModuleCoalgebra& c,
                                      const RightComodule& m);

}  // namespace hsc
