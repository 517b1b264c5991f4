#pragma once

#include "hsc/structures.hpp"

namespace hsc {

// M []_C N = Ker(rho_M (x) id_N - id_M (x) lambda_N), carried by its
// echelonized inclusion into M (x) N.
struct CotensorSpace {
    RightComodule left;
    LeftComodule right;
    LinearMap inclusion;  // k -> dim(M)*dim(N)

    int dim() const { return inclusion.cols(); }
};

CotensorSpace cotensor(const RightComodule& m, const LeftComodule& n);

// The canonical isomorphism C []_C M -> M, (epsilon (x) id) restricted to the
// cotensor. Throws InternalError when not invertible (that would contradict a
// theorem, so it flags an upstream bug rather than bad input).
LinearMap counit_iso(const Coalgebra& c, const LeftComodule& m);

// W []_C M with the right D-coaction inherited from id_W (x) rho_M. Throws
// NotWellDefined when the coaction does not preserve the kernel.
RightComodule apply_TM(const EquivariantBicomodule& m, const RightComodule& w);

// Verifies that C []_C M recovers M: the counit map is an invertible
// D-colinear map, and transporting Delta_C through the cotensor recovers the
// left coaction of M.
CheckReport takeuchi_roundtrip(const EquivariantBicomodule& m);

}  // namespace hsc
