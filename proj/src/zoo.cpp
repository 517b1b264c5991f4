#include "hsc/zoo.hpp"

#include "hsc/hopf.hpp"

namespace hsc {

namespace {

// C itself as a C-C-bicomodule: both coactions Delta, action = multiplication.
EquivariantBicomodule regular_bicomodule(const Bialgebra& h) {
    ModuleCoalgebra c = self_module_coalgebra(h);
    return EquivariantBicomodule{h, c, c, h.dim(), h.comul(), h.comul(), h.mul(), h.coalg.basis};
}

}  // namespace

HopfAlgebra group_algebra(const Field& field, const std::vector<std::vector<int>>& table,
                          const std::vector<std::string>& names) {
    const int n = static_cast<int>(table.size());
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw DimensionMismatch("group_algebra: ragged table");
        for (int v : row)
            if (v < 0 || v >= n) throw SemanticError("table", "index out of range");
    }
    // Locate the identity.
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw SemanticError("table", "no identity element");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[i][j] == e) inv[i] = j;
        if (inv[i] < 0) throw SemanticError("table", "element without inverse");
    }
    Scalar one = Scalar::one(field);
    std::vector<Entry> comul, counit, mul, unit, antipode;
    for (int i = 0; i < n; ++i) {
        comul.push_back({i * n + i, i, one});
        counit.push_back({0, i, one});
        antipode.push_back({inv[i], i, one});
        for (int j = 0; j < n; ++j) mul.push_back({table[i][j], i * n + j, one});
    }
    unit.push_back({e, 0, one});
    std::vector<std::string> basis = names.empty() ? default_basis(n, "g") : names;
    if (static_cast<int>(basis.size()) != n) throw DimensionMismatch("group_algebra: bad basis labels");
    Coalgebra co{field, n, LinearMap(field, n * n, n, comul), LinearMap(field, 1, n, counit), basis};
    Algebra al{field, n, LinearMap(field, n, n * n, mul), LinearMap(field, n, 1, unit), basis};
    return HopfAlgebra{Bialgebra{co, al}, LinearMap(field, n, n, antipode)};
}

HopfAlgebra cyclic_group_algebra(const Field& field, int n) {
    if (n < 1) throw DimensionMismatch("cyclic_group_algebra: order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return group_algebra(field, t);
}

HopfAlgebra sweedler_h4(const Field& field) {
    if (field.kind() == Field::Kind::Prime && field.p() == 2)
        throw CharTwo("sweedler_h4: undefined in characteristic two");
    const int n = 4;  // basis order {1, g, x, gx}
    Scalar one = Scalar::one(field);
    Scalar neg = -one;
    // Multiplication: (coeff, result) for each ordered pair, zeros omitted.
    std::vector<Entry> mul = {
        {0, 0 * n + 0, one}, {1, 0 * n + 1, one}, {2, 0 * n + 2, one}, {3, 0 * n + 3, one},
        {1, 1 * n + 0, one}, {0, 1 * n + 1, one}, {3, 1 * n + 2, one}, {2, 1 * n + 3, one},
        {2, 2 * n + 0, one}, {3, 2 * n + 1, neg},
        {3, 3 * n + 0, one}, {2, 3 * n + 1, neg},
    };
    std::vector<Entry> unit = {{0, 0, one}};
    std::vector<Entry> comul = {
        {0 * n + 0, 0, one},                       // 1 -> 1 (x) 1
        {1 * n + 1, 1, one},                       // g -> g (x) g
        {2 * n + 0, 2, one}, {1 * n + 2, 2, one},  // x -> x (x) 1 + g (x) x
        {3 * n + 1, 3, one}, {0 * n + 3, 3, one},  // gx -> gx (x) g + 1 (x) gx
    };
    std::vector<Entry> counit = {{0, 0, one}, {0, 1, one}};
    std::vector<Entry> antipode = {{0, 0, one}, {1, 1, one}, {3, 2, neg}, {2, 3, one}};
    std::vector<std::string> basis = {"1", "g", "x", "gx"};
    Coalgebra co{field, n, LinearMap(field, n * n, n, comul), LinearMap(field, 1, n, counit), basis};
    Algebra al{field, n, LinearMap(field, n, n * n, mul), LinearMap(field, n, 1, unit), basis};
    return HopfAlgebra{Bialgebra{co, al}, LinearMap(field, n, n, antipode)};
}

Bialgebra idempotent_monoid_bialgebra(const Field& field) {
    const int n = 2;  // basis {1, x}, x^2 = x, both group-like
    Scalar one = Scalar::one(field);
    std::vector<Entry> mul = {{0, 0, one}, {1, 1, one}, {1, 2, one}, {1, 3, one}};
    std::vector<Entry> unit = {{0, 0, one}};
    std::vector<Entry> comul = {{0, 0, one}, {3, 1, one}};
    std::vector<Entry> counit = {{0, 0, one}, {0, 1, one}};
    std::vector<std::string> basis = {"1", "x"};
    Coalgebra co{field, n, LinearMap(field, n * n, n, comul), LinearMap(field, 1, n, counit), basis};
    Algebra al{field, n, LinearMap(field, n, n * n, mul), LinearMap(field, n, 1, unit), basis};
    return Bialgebra{co, al};
}

std::vector<ZooItem> zoo_catalog() {
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    Field f3 = Field::prime(3);
    std::vector<ZooItem> items;
    auto hopf = [&](std::string name, const Field& f, HopfAlgebra h, int s_order) {
        items.push_back({{std::move(name), "hopf", f.name(), h.bialg.dim(), true, s_order}, std::move(h)});
    };
    auto bi = [&](std::string name, const Field& f, Bialgebra b) {
        items.push_back({{std::move(name), "bialgebra", f.name(), b.dim(), false, 0}, std::move(b)});
    };
    hopf("trivial", q, cyclic_group_algebra(q, 1), 1);
    hopf("kc2", q, cyclic_group_algebra(q, 2), 1);
    hopf("kc2_f2", f2, cyclic_group_algebra(f2, 2), 1);
    hopf("kc2_f3", f3, cyclic_group_algebra(f3, 2), 1);
    hopf("c3_f2", f2, cyclic_group_algebra(f2, 3), 2);
    hopf("h4", q, sweedler_h4(q), 4);
    hopf("h4_f3", f3, sweedler_h4(f3), 4);
    bi("m2", q, idempotent_monoid_bialgebra(q));
    bi("m2_f2", f2, idempotent_monoid_bialgebra(f2));
    return items;
}

std::vector<std::pair<std::string, EquivariantBicomodule>> zoo_bicomodules() {
    Field q = Field::rationals();
    Bialgebra kc2 = cyclic_group_algebra(q, 2).bialg;
    Bialgebra h4 = sweedler_h4(q).bialg;
    std::vector<std::pair<std::string, EquivariantBicomodule>> out;

    out.emplace_back("kc2_regular", regular_bicomodule(kc2));
    out.emplace_back("h4_regular", regular_bicomodule(h4));

    // Induced object H (x) W over kC2 with W the regular right kC2-comodule.
    ModuleCoalgebra c2 = self_module_coalgebra(kc2);
    out.emplace_back("kc2_induced_regular", psi_functor(kc2, c2, regular_right_comodule(kc2.coalg)));

    // Induced object H4 (x) k with trivial D = k.
    ModuleCoalgebra h4triv = trivial_module_coalgebra(h4);
    RightComodule w_triv{h4triv.coalg, 1, LinearMap::identity(q, 1), {"w"}};
    out.emplace_back("h4_induced_trivial", psi_functor(h4, h4triv, w_triv));

    // Trivial acting bialgebra: kC2 as a bicomodule over itself in k-modules.
    Bialgebra k = cyclic_group_algebra(q, 1).bialg;
    ModuleCoalgebra c2_over_k{k, kc2.coalg, LinearMap::identity(q, 2)};
    out.emplace_back("kc2_over_k",
                     EquivariantBicomodule{k, c2_over_k, c2_over_k, 2, kc2.comul(), kc2.comul(),
                                           LinearMap::identity(q, 2), kc2.coalg.basis});

    out.emplace_back("kc2_regular_sum", direct_sum(out[0].second, out[0].second));
    return out;
}

}  // namespace hsc
