#pragma once

#include <string>
#include <vector>

#include "hsc/linmap.hpp"
#include "hsc/report.hpp"

namespace hsc {

// Structure-constant records over a fixed basis. All values are immutable
// after construction; basis labels are for report readability only.

struct Coalgebra {
    Field field;
    int dim;
    LinearMap comul;   // n^2 x n, Delta
    LinearMap counit;  // 1 x n, epsilon
    std::vector<std::string> basis;
};

struct Algebra {
    Field field;
    int dim;
    LinearMap mul;   // n x n^2
    LinearMap unit;  // n x 1
    std::vector<std::string> basis;
};

struct Bialgebra {
    Coalgebra coalg;
    Algebra alg;  // same carrier

    const Field& field() const { return coalg.field; }
    int dim() const { return coalg.dim; }
    const LinearMap& comul() const { return coalg.comul; }
    const LinearMap& counit() const { return coalg.counit; }
    const LinearMap& mul() const { return alg.mul; }
    const LinearMap& unit() const { return alg.unit; }
};

struct HopfAlgebra {
    Bialgebra bialg;
    LinearMap antipode;  // n x n
};

struct RightComodule {
    Coalgebra over;
    int dim;
    LinearMap coaction;  // (d*n) x d, carrier leg first: m -> m0 (x) m1
    std::vector<std::string> basis;
};

struct LeftComodule {
    Coalgebra over;
    int dim;
    LinearMap coaction;  // (n*d) x d, coalgebra leg first: n -> n(-1) (x) n(0)
    std::vector<std::string> basis;
};

struct LeftModule {
    Algebra over;
    int dim;
    LinearMap action;  // d x (n*d)
    std::vector<std::string> basis;
};

// Coalgebra object in the category of left H-modules.
struct ModuleCoalgebra {
    Bialgebra over;    // H
    Coalgebra coalg;   // C
    LinearMap action;  // n_C x (n_H * n_C), left H-action on the carrier of C

    const Field& field() const { return coalg.field; }
    int dim() const { return coalg.dim; }
};

// Object of the category of C-D-bicomodules in left H-modules: both
// coactions H-equivariant.
struct EquivariantBicomodule {
    Bialgebra H;
    ModuleCoalgebra C;
    ModuleCoalgebra D;
    int dim;
    LinearMap left_coaction;   // (n_C * d) x d
    LinearMap right_coaction;  // (d * n_D) x d
    LinearMap action;          // d x (n_H * d)
    std::vector<std::string> basis;
};

std::vector<std::string> default_basis(int dim, const std::string& prefix = "e");

// ---- Axiom checkers (one report entry per axiom) ----

CheckReport check_coalgebra(const Coalgebra& c);
CheckReport check_algebra(const Algebra& a);
CheckReport check_bialgebra(const Bialgebra& b);
CheckReport check_hopf(const HopfAlgebra& h);
CheckReport check_comodule(const RightComodule& m);
CheckReport check_comodule(const LeftComodule& m);
CheckReport check_module(const LeftModule& m);
CheckReport check_module_coalgebra(const ModuleCoalgebra& c);
CheckReport check_equivariant_bicomodule(const EquivariantBicomodule& m);

// ---- Constructors ----

// Carrier k*n with coaction id_k (x) Delta.
RightComodule free_comodule(const Coalgebra& c, int k);
// (C, Delta) as a right (resp. left) comodule over itself.
RightComodule regular_right_comodule(const Coalgebra& c);
LeftComodule regular_left_comodule(const Coalgebra& c);
// One-dimensional comodule via a group-like element g (coaction w -> w (x) g).
RightComodule line_comodule(const Coalgebra& c, const Vec& grouplike);
LeftComodule line_comodule_left(const Coalgebra& c, const Vec& grouplike);

// X (x) M with coaction x (x) m -> x0 (x) m0 (x) (x1 . m1), where H acts on
// the carrier of C; X is a right H-comodule, M a right C-comodule.
RightComodule tensor_comodule(const RightComodule& x, const RightComodule& m, const ModuleCoalgebra& c);
// Tensor of two right H-comodules over a bialgebra H (diagonal coaction);
// equals tensor_comodule with C = H acting on itself.
RightComodule tensor_h_comodule(const Bialgebra& h, const RightComodule& x, const RightComodule& y);
// Trivial right H-comodule k via the unit group-like.
RightComodule trivial_h_comodule(const Bialgebra& h);

RightComodule direct_sum(const RightComodule& a, const RightComodule& b);

// H itself as a left H-module coalgebra via multiplication.
ModuleCoalgebra self_module_coalgebra(const Bialgebra& h);
// The one-dimensional module coalgebra k (H acts through the counit).
ModuleCoalgebra trivial_module_coalgebra(const Bialgebra& h);
// Opposite bialgebra (multiplication reversed, coalgebra unchanged).
Bialgebra op_bialgebra(const Bialgebra& h);

// M viewed as a left C-comodule / right D-comodule.
LeftComodule left_part(const EquivariantBicomodule& m);
RightComodule right_part(const EquivariantBicomodule& m);

EquivariantBicomodule direct_sum(const EquivariantBicomodule& a, const EquivariantBicomodule& b);

// ---- Morphism predicates ----

bool is_right_colinear(const LinearMap& f, const RightComodule& from, const RightComodule& to);
bool is_left_colinear(const LinearMap& f, const LeftComodule& from, const LeftComodule& to);
bool is_linear_over(const LinearMap& f, const LinearMap& action_from, const LinearMap& action_to, int alg_dim);

}  // namespace hsc
