#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hsc/structures.hpp"

namespace hsc {

// Canonical example structures with known properties; every test suite draws
// its instances from here.

// Group algebra kG from a multiplication table t (t[i][j] = index of g_i g_j).
// Basis elements are group-like; the antipode sends each g to its inverse.
HopfAlgebra group_algebra(const Field& field, const std::vector<std::vector<int>>& table,
                          const std::vector<std::string>& names = {});
// Cyclic group C_n (n >= 1; n == 1 gives the trivial Hopf algebra k).
HopfAlgebra cyclic_group_algebra(const Field& field, int n);

// The four-dimensional Hopf algebra with basis {1, g, x, gx}, relations
// g^2 = 1, x^2 = 0, xg = -gx, comultiplication Delta(g) = g (x) g,
// Delta(x) = x (x) 1 + g (x) x, antipode S(g) = g, S(x) = -gx.
// Throws CharTwo over F_2 (the relations collapse there).
HopfAlgebra sweedler_h4(const Field& field);

// Basis {1, x}, x^2 = x, both basis elements group-like. A bialgebra with no
// antipode (over every field).
Bialgebra idempotent_monoid_bialgebra(const Field& field);

// Machine-readable expectations consumed by the acceptance suite.
struct ZooExpectation {
    std::string name;  // unique
    std::string kind;  // "hopf" | "bialgebra"
    std::string field;
    int dim;
    bool is_hopf;
    int antipode_order;  // 0 when not Hopf
};

struct ZooItem {
    ZooExpectation expect;
    std::variant<HopfAlgebra, Bialgebra> value;

    const Bialgebra& bialgebra() const {
        if (auto* h = std::get_if<HopfAlgebra>(&value)) return h->bialg;
        return std::get<Bialgebra>(value);
    }
};

std::vector<ZooItem> zoo_catalog();

// Named equivariant bicomodule instances over kC2 and H4 (regular objects,
// induced H (x) W objects, a trivial-H instance, and a direct sum).
std::vector<std::pair<std::string, EquivariantBicomodule>> zoo_bicomodules();

}  // namespace hsc
