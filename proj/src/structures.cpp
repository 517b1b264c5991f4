#include "hsc/structures.hpp"

namespace hsc {

namespace {

LinearMap id(const Field& f, int n) { return LinearMap::identity(f, n); }

// Block inclusions for direct sums.
LinearMap block_inclusion(const Field& f, int total, int offset, int dim) {
    std::vector<Entry> es;
    for (int i = 0; i < dim; ++i) es.push_back({offset + i, i, Scalar::one(f)});
    return LinearMap(f, total, dim, std::move(es));
}

LinearMap block_projection(const Field& f, int total, int offset, int dim) {
    return block_inclusion(f, total, offset, dim).transpose();
}

}  // namespace

std::vector<std::string> default_basis(int dim, const std::string& prefix) {
    std::vector<std::string> b;
    b.reserve(dim);
    for (int i = 0; i < dim; ++i) b.push_back(prefix + std::to_string(i));
    return b;
}

CheckReport check_coalgebra(const Coalgebra& c) {
    CheckReport r;
    const int n = c.dim;
    const Field& f = c.field;
    bool shapes = c.comul.rows() == n * n && c.comul.cols() == n && c.counit.rows() == 1 && c.counit.cols() == n;
    r.add("coalgebra.shapes", shapes);
    if (!shapes) return r;
    r.expect_equal("coalgebra.coassociativity", c.comul.tensor(id(f, n)).compose(c.comul),
                   id(f, n).tensor(c.comul).compose(c.comul));
    r.expect_equal("coalgebra.counit_left", c.counit.tensor(id(f, n)).compose(c.comul), id(f, n));
    r.expect_equal("coalgebra.counit_right", id(f, n).tensor(c.counit).compose(c.comul), id(f, n));
    return r;
}

CheckReport check_algebra(const Algebra& a) {
    CheckReport r;
    const int n = a.dim;
    const Field& f = a.field;
    bool shapes = a.mul.rows() == n && a.mul.cols() == n * n && a.unit.rows() == n && a.unit.cols() == 1;
    r.add("algebra.shapes", shapes);
    if (!shapes) return r;
    r.expect_equal("algebra.associativity", a.mul.compose(a.mul.tensor(id(f, n))),
                   a.mul.compose(id(f, n).tensor(a.mul)));
    r.expect_equal("algebra.unit_left", a.mul.compose(a.unit.tensor(id(f, n))), id(f, n));
    r.expect_equal("algebra.unit_right", a.mul.compose(id(f, n).tensor(a.unit)), id(f, n));
    return r;
}

CheckReport check_bialgebra(const Bialgebra& b) {
    CheckReport r;
    r.merge("", check_coalgebra(b.coalg));
    r.merge("", check_algebra(b.alg));
    if (!r.all_pass()) return r;
    const int n = b.dim();
    const Field& f = b.field();
    LinearMap mid = id(f, n).tensor(LinearMap::swap_legs(f, n, n)).tensor(id(f, n));
    r.expect_equal("bialgebra.comul_multiplicative", b.comul().compose(b.mul()),
                   b.mul().tensor(b.mul()).compose(mid).compose(b.comul().tensor(b.comul())));
    r.expect_equal("bialgebra.comul_unit", b.comul().compose(b.unit()), b.unit().tensor(b.unit()));
    r.expect_equal("bialgebra.counit_multiplicative", b.counit().compose(b.mul()),
                   b.counit().tensor(b.counit()));
    r.expect_equal("bialgebra.counit_unit", b.counit().compose(b.unit()), id(f, 1));
    return r;
}

CheckReport check_hopf(const HopfAlgebra& h) {
    CheckReport r;
    r.merge("", check_bialgebra(h.bialg));
    if (!r.all_pass()) return r;
    const int n = h.bialg.dim();
    const Field& f = h.bialg.field();
    LinearMap unit_counit = h.bialg.unit().compose(h.bialg.counit());
    r.expect_equal("hopf.antipode_left",
                   h.bialg.mul().compose(h.antipode.tensor(id(f, n))).compose(h.bialg.comul()), unit_counit);
    r.expect_equal("hopf.antipode_right",
                   h.bialg.mul().compose(id(f, n).tensor(h.antipode)).compose(h.bialg.comul()), unit_counit);
    return r;
}

CheckReport check_comodule(const RightComodule& m) {
    CheckReport r;
    const int n = m.over.dim;
    const int d = m.dim;
    const Field& f = m.over.field;
    bool shapes = m.coaction.rows() == d * n && m.coaction.cols() == d && m.coaction.field() == f;
    r.add("comodule_r.shapes", shapes);
    if (!shapes) return r;
    r.expect_equal("comodule_r.coassociativity", m.coaction.tensor(id(f, n)).compose(m.coaction),
                   id(f, d).tensor(m.over.comul).compose(m.coaction));
    r.expect_equal("comodule_r.counit", id(f, d).tensor(m.over.counit).compose(m.coaction), id(f, d));
    return r;
}

CheckReport check_comodule(const LeftComodule& m) {
    CheckReport r;
    const int n = m.over.dim;
    const int d = m.dim;
    const Field& f = m.over.field;
    bool shapes = m.coaction.rows() == n * d && m.coaction.cols() == d && m.coaction.field() == f;
    r.add("comodule_l.shapes", shapes);
    if (!shapes) return r;
    r.expect_equal("comodule_l.coassociativity", id(f, n).tensor(m.coaction).compose(m.coaction),
                   m.over.comul.tensor(id(f, d)).compose(m.coaction));
    r.expect_equal("comodule_l.counit", m.over.counit.tensor(id(f, d)).compose(m.coaction), id(f, d));
    return r;
}

CheckReport check_module(const LeftModule& m) {
    CheckReport r;
    const int n = m.over.dim;
    const int d = m.dim;
    const Field& f = m.over.field;
    bool shapes = m.action.rows() == d && m.action.cols() == n * d && m.action.field() == f;
    r.add("module_l.shapes", shapes);
    if (!shapes) return r;
    r.expect_equal("module_l.associativity", m.action.compose(m.over.mul.tensor(id(f, d))),
                   m.action.compose(id(f, n).tensor(m.action)));
    r.expect_equal("module_l.unit", m.action.compose(m.over.unit.tensor(id(f, d))), id(f, d));
    return r;
}

CheckReport check_module_coalgebra(const ModuleCoalgebra& c) {
    CheckReport r;
    r.merge("", check_coalgebra(c.coalg));
    r.merge("", check_module(LeftModule{c.over.alg, c.dim(), c.action, c.coalg.basis}));
    if (!r.all_pass()) return r;
    const int nh = c.over.dim();
    const int nc = c.dim();
    const Field& f = c.field();
    // Delta_C(h.c) = (h1.c1) (x) (h2.c2)
    LinearMap perm = LinearMap::leg_permutation(f, {nh, nh, nc, nc}, {0, 2, 1, 3});
    r.expect_equal("module_coalgebra.comul_linear", c.coalg.comul.compose(c.action),
                   c.action.tensor(c.action).compose(perm).compose(c.over.comul().tensor(c.coalg.comul)));
    r.expect_equal("module_coalgebra.counit_linear", c.coalg.counit.compose(c.action),
                   c.over.counit().tensor(c.coalg.counit));
    return r;
}

CheckReport check_equivariant_bicomodule(const EquivariantBicomodule& m) {
    CheckReport r;
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int nc = m.C.dim();
    const int nd = m.D.dim();
    const int d = m.dim;
    r.merge("", check_comodule(LeftComodule{m.C.coalg, d, m.left_coaction, m.basis}));
    r.merge("", check_comodule(RightComodule{m.D.coalg, d, m.right_coaction, m.basis}));
    r.merge("", check_module(LeftModule{m.H.alg, d, m.action, m.basis}));
    if (!r.all_pass()) return r;
    r.expect_equal("bicomodule.compatibility", id(f, nc).tensor(m.right_coaction).compose(m.left_coaction),
                   m.left_coaction.tensor(id(f, nd)).compose(m.right_coaction));
    // lambda(h m) = h1 m(-1) (x) h2 m(0)
    LinearMap perm_l = LinearMap::leg_permutation(f, {nh, nh, nc, d}, {0, 2, 1, 3});
    r.expect_equal("equivariance.left_coaction", m.left_coaction.compose(m.action),
                   m.C.action.tensor(m.action).compose(perm_l).compose(m.H.comul().tensor(m.left_coaction)));
    // rho(h m) = h1 m(0) (x) h2 m(1)
    LinearMap perm_r = LinearMap::leg_permutation(f, {nh, nh, d, nd}, {0, 2, 1, 3});
    r.expect_equal("equivariance.right_coaction", m.right_coaction.compose(m.action),
                   m.action.tensor(m.D.action).compose(perm_r).compose(m.H.comul().tensor(m.right_coaction)));
    return r;
}

RightComodule free_comodule(const Coalgebra& c, int k) {
    if (k < 0) throw DimensionMismatch("free_comodule: negative rank");
    return RightComodule{c, k * c.dim, id(c.field, k).tensor(c.comul), default_basis(k * c.dim)};
}

RightComodule regular_right_comodule(const Coalgebra& c) {
    return RightComodule{c, c.dim, c.comul, c.basis};
}

LeftComodule regular_left_comodule(const Coalgebra& c) { return LeftComodule{c, c.dim, c.comul, c.basis}; }

RightComodule line_comodule(const Coalgebra& c, const Vec& grouplike) {
    if (static_cast<int>(grouplike.size()) != c.dim) throw DimensionMismatch("line_comodule: bad group-like");
    return RightComodule{c, 1, LinearMap::from_vec(c.field, grouplike), {"w"}};
}

LeftComodule line_comodule_left(const Coalgebra& c, const Vec& grouplike) {
    if (static_cast<int>(grouplike.size()) != c.dim) throw DimensionMismatch("line_comodule: bad group-like");
    return LeftComodule{c, 1, LinearMap::from_vec(c.field, grouplike), {"w"}};
}

RightComodule tensor_comodule(const RightComodule& x, const RightComodule& m, const ModuleCoalgebra& c) {
    const Field& f = c.field();
    if (x.over.field != f || m.over.field != f) throw FieldMismatch("tensor_comodule: field mismatch");
    const int nh = x.over.dim;
    const int nc = c.dim();
    if (c.over.dim() != nh) throw DimensionMismatch("tensor_comodule: X not a comodule over the acting bialgebra");
    if (m.over.dim != nc) throw DimensionMismatch("tensor_comodule: M not a comodule over C");
    const int dx = x.dim;
    const int dm = m.dim;
    // x (x) m -> x0 (x) m0 (x) x1 m1
    LinearMap perm = LinearMap::leg_permutation(f, {dx, nh, dm, nc}, {0, 2, 1, 3});
    LinearMap coact =
        id(f, dx * dm).tensor(c.action).compose(perm).compose(x.coaction.tensor(m.coaction));
    return RightComodule{c.coalg, dx * dm, coact, default_basis(dx * dm)};
}

RightComodule tensor_h_comodule(const Bialgebra& h, const RightComodule& x, const RightComodule& y) {
    return tensor_comodule(x, y, self_module_coalgebra(h));
}

RightComodule trivial_h_comodule(const Bialgebra& h) {
    return RightComodule{h.coalg, 1, h.unit(), {"1"}};
}

RightComodule direct_sum(const RightComodule& a, const RightComodule& b) {
    if (a.over.field != b.over.field || a.over.dim != b.over.dim)
        throw DimensionMismatch("direct_sum: comodules over different coalgebras");
    const Field& f = a.over.field;
    const int n = a.over.dim;
    const int d = a.dim + b.dim;
    LinearMap i1 = block_inclusion(f, d, 0, a.dim);
    LinearMap i2 = block_inclusion(f, d, a.dim, b.dim);
    LinearMap coact = i1.tensor(id(f, n)).compose(a.coaction).compose(block_projection(f, d, 0, a.dim)) +
                      i2.tensor(id(f, n)).compose(b.coaction).compose(block_projection(f, d, a.dim, b.dim));
    return RightComodule{a.over, d, coact, default_basis(d)};
}

ModuleCoalgebra self_module_coalgebra(const Bialgebra& h) { return ModuleCoalgebra{h, h.coalg, h.mul()}; }

ModuleCoalgebra trivial_module_coalgebra(const Bialgebra& h) {
    const Field& f = h.field();
    Coalgebra unit{f, 1, id(f, 1), id(f, 1), {"1"}};
    return ModuleCoalgebra{h, unit, h.counit()};
}

Bialgebra op_bialgebra(const Bialgebra& h) {
    const int n = h.dim();
    Algebra op{h.field(), n, h.mul().compose(LinearMap::swap_legs(h.field(), n, n)), h.unit(), h.alg.basis};
    return Bialgebra{h.coalg, op};
}

LeftComodule left_part(const EquivariantBicomodule& m) {
    return LeftComodule{m.C.coalg, m.dim, m.left_coaction, m.basis};
}

RightComodule right_part(const EquivariantBicomodule& m) {
    return RightComodule{m.D.coalg, m.dim, m.right_coaction, m.basis};
}

EquivariantBicomodule direct_sum(const EquivariantBicomodule& a, const EquivariantBicomodule& b) {
    const Field& f = a.H.field();
    const int d = a.dim + b.dim;
    const int nc = a.C.dim();
    const int nd = a.D.dim();
    const int nh = a.H.dim();
    LinearMap i1 = block_inclusion(f, d, 0, a.dim);
    LinearMap i2 = block_inclusion(f, d, a.dim, b.dim);
    LinearMap p1 = block_projection(f, d, 0, a.dim);
    LinearMap p2 = block_projection(f, d, a.dim, b.dim);
    LinearMap lam = id(f, nc).tensor(i1).compose(a.left_coaction).compose(p1) +
                    id(f, nc).tensor(i2).compose(b.left_coaction).compose(p2);
    LinearMap rho = i1.tensor(id(f, nd)).compose(a.right_coaction).compose(p1) +
                    i2.tensor(id(f, nd)).compose(b.right_coaction).compose(p2);
    LinearMap act = i1.compose(a.action).compose(id(f, nh).tensor(p1)) +
                    i2.compose(b.action).compose(id(f, nh).tensor(p2));
    return EquivariantBicomodule{a.H, a.C, a.D, d, lam, rho, act, default_basis(d)};
}

bool is_right_colinear(const LinearMap& f, const RightComodule& from, const RightComodule& to) {
    const int n = from.over.dim;
    return to.coaction.compose(f) == f.tensor(id(f.field(), n)).compose(from.coaction);
}

bool is_left_colinear(const LinearMap& f, const LeftComodule& from, const LeftComodule& to) {
    const int n = from.over.dim;
    return to.coaction.compose(f) == id(f.field(), n).tensor(f).compose(from.coaction);
}

bool is_linear_over(const LinearMap& f, const LinearMap& action_from, const LinearMap& action_to, int alg_dim) {
    return f.compose(action_from) == action_to.compose(id(f.field(), alg_dim).tensor(f));
}

}  // namespace hsc
