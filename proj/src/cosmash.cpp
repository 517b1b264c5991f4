#include "hsc/cosmash.hpp"

namespace hsc {

namespace {

LinearMap id(const Field& f, int n) { return LinearMap::identity(f, n); }

}  // namespace

Bialgebra dual_bialgebra(const Bialgebra& h) {
    const Field& f = h.field();
    const int n = h.dim();
    std::vector<std::string> basis;
    basis.reserve(n);
    for (const auto& b : h.coalg.basis) basis.push_back(b + "*");
    Coalgebra co{f, n, h.mul().transpose(), h.unit().transpose(), basis};
    Algebra al{f, n, h.comul().transpose(), h.counit().transpose(), basis};
    return Bialgebra{co, al};
}

LinearMap induced_dual_coaction(const LinearMap& action, int h_dim) {
    const int nc = action.rows();
    if (action.cols() != h_dim * nc)
        throw DimensionMismatch("induced_dual_coaction: action table has the wrong shape");
    // kappa[(c', h), c] = action[c', (h, c)]: move the acted-on input leg to
    // the input side, keep the acting leg as an output.
    std::vector<Entry> es;
    es.reserve(action.entries().size());
    for (const Entry& e : action.entries()) {
        int h = e.col / nc;
        int c = e.col % nc;
        es.push_back({e.row * h_dim + h, c, e.value});
    }
    return LinearMap(action.field(), nc * h_dim, nc, std::move(es));
}

ModuleCoalgebra cosmash(const Bialgebra& h, const ModuleCoalgebra& c) {
    const Field& f = h.field();
    const int nh = h.dim();
    const int nc = c.dim();
    Bialgebra hd = dual_bialgebra(h);
    LinearMap kappa = induced_dual_coaction(c.action, nh);

    // Delta(f (x) c) = (f1 (x) c1[0]) (x) (f2 * c1[1] (x) c2)
    LinearMap comul = id(f, nh * nc).tensor(hd.mul()).tensor(id(f, nc))
                          .compose(LinearMap::leg_permutation(f, {nh, nh, nc, nh, nc},
                                                              {0, 2, 1, 3, 4}))
                          .compose(id(f, nh * nh).tensor(kappa).tensor(id(f, nc)))
                          .compose(hd.comul().tensor(c.coalg.comul));
    LinearMap counit = hd.counit().tensor(c.coalg.counit);
    std::vector<std::string> basis;
    basis.reserve(nh * nc);
    for (const auto& a : hd.coalg.basis)
        for (const auto& b : c.coalg.basis) basis.push_back(a + "#" + b);
    Coalgebra co{f, nh * nc, comul, counit, basis};
    ModuleCoalgebra out{hd, co, hd.mul().tensor(id(f, nc))};
    CheckReport r = check_module_coalgebra(out);
    if (!r.all_pass())
        throw InternalError("cosmash: the product fails its own axioms:\n" + r.str());
    return out;
}

CheckReport check_h_module_comodule(const HModuleComodule& m) {
    CheckReport r;
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    r.merge("module.", check_module(LeftModule{m.H.alg, m.dim, m.action, m.basis}));
    r.merge("comodule.", check_comodule(RightComodule{m.C.coalg, m.dim, m.coaction, m.basis}));
    // rho(h . m) == h1 m0 (x) h2 . m1
    LinearMap perm = LinearMap::leg_permutation(f, {nh, nh, m.dim, m.C.dim()}, {0, 2, 1, 3});
    r.expect_equal("equivariance", m.coaction.compose(m.action),
                   m.action.tensor(m.C.action).compose(perm).compose(
                       m.H.comul().tensor(m.coaction)));
    return r;
}

RightComodule to_cosmash_comodule(const HModuleComodule& m) {
    const int nh = m.H.dim();
    LinearMap kappa = induced_dual_coaction(m.action, nh);
    LinearMap coact = kappa.tensor(id(m.H.field(), m.C.dim())).compose(m.coaction);
    return RightComodule{cosmash(m.H, m.C).coalg, m.dim, coact, m.basis};
}

HModuleComodule from_cosmash_comodule(const Bialgebra& h, const ModuleCoalgebra& c,
                                      const RightComodule& m) {
    const Field& f = h.field();
    const int nh = h.dim();
    const int nc = c.dim();
    const int d = m.dim;
    if (m.over.dim != nh * nc)
        throw DimensionMismatch("from_cosmash_comodule: comodule is not over H* (x) C");
    // strip the H* leg with its counit (evaluation at 1)
    LinearMap rho = id(f, d).tensor(h.unit().transpose()).tensor(id(f, nc)).compose(m.coaction);
    // h . m = sum m[0] m[1](h), pairing the H leg against the H* leg
    std::vector<Entry> ev_entries;
    for (int i = 0; i < nh; ++i) ev_entries.push_back({0, i * nh + i, Scalar::one(f)});
    LinearMap ev(f, 1, nh * nh, std::move(ev_entries));
    LinearMap strip_c = id(f, d * nh).tensor(c.coalg.counit).compose(m.coaction);
    LinearMap action = id(f, d).tensor(ev)
                           .compose(LinearMap::leg_permutation(f, {nh, d, nh}, {1, 0, 2}))
                           .compose(id(f, nh).tensor(strip_c));
    return HModuleComodule{h, c, d, action, rho, m.basis};
}

}  // namespace hsc
