#include "hsc/cotensor.hpp"

namespace hsc {

CotensorSpace cotensor(const RightComodule& m, const LeftComodule& n) {
    if (m.over.field != n.over.field) throw FieldMismatch("cotensor: fields differ");
    if (m.over.dim != n.over.dim || m.over.comul != n.over.comul)
        throw DimensionMismatch("cotensor: comodules are over different coalgebras");
    const Field& f = m.over.field;
    LinearMap lhs = m.coaction.tensor(LinearMap::identity(f, n.dim));
    LinearMap rhs = LinearMap::identity(f, m.dim).tensor(n.coaction);
    return CotensorSpace{m, n, (lhs - rhs).kernel()};
}

LinearMap counit_iso(const Coalgebra& c, const LeftComodule& m) {
    CotensorSpace ct = cotensor(regular_right_comodule(c), m);
    LinearMap phi = c.counit.tensor(LinearMap::identity(c.field, m.dim)).compose(ct.inclusion);
    if (phi.rows() != phi.cols() || !phi.invert().has_value())
        throw InternalError("counit_iso: C []_C M -> M is not invertible");
    return phi;
}

RightComodule apply_TM(const EquivariantBicomodule& m, const RightComodule& w) {
    const Field& f = m.H.field();
    const int nd = m.D.dim();
    CotensorSpace ct = cotensor(w, left_part(m));
    LinearMap pushed = LinearMap::identity(f, w.dim).tensor(m.right_coaction).compose(ct.inclusion);
    LinearMap coact = factor_through(ct.inclusion.tensor(LinearMap::identity(f, nd)), pushed,
                                     "apply_TM: right coaction does not preserve the cotensor");
    return RightComodule{m.D.coalg, ct.dim(), coact, default_basis(ct.dim())};
}

CheckReport takeuchi_roundtrip(const EquivariantBicomodule& m) {
    CheckReport r;
    const Field& f = m.H.field();
    const Coalgebra& c = m.C.coalg;
    const int nc = c.dim;
    const int d = m.dim;
    LinearMap idm = LinearMap::identity(f, d);

    CotensorSpace ct = cotensor(regular_right_comodule(c), left_part(m));
    LinearMap phi = c.counit.tensor(idm).compose(ct.inclusion);
    bool invertible = phi.rows() == phi.cols() && phi.invert().has_value();
    r.add("takeuchi.counit_invertible", invertible,
          invertible ? "" : "C []_C M -> M has rank " + std::to_string(phi.rank()));
    if (!invertible) return r;

    // phi must carry the induced D-coaction to rho_M
    try {
        RightComodule tmc = apply_TM(m, regular_right_comodule(c));
        r.add("takeuchi.counit_colinear", is_right_colinear(phi, tmc, right_part(m)));
    } catch (const NotWellDefined& e) {
        r.add("takeuchi.counit_colinear", false, e.what());
    }

    // transport Delta_C : C -> C (x) C through the cotensor and compare the
    // induced coaction with lambda_M
    try {
        LinearMap pushed = c.comul.tensor(idm).compose(ct.inclusion);
        LinearMap tdelta = factor_through(LinearMap::identity(f, nc).tensor(ct.inclusion), pushed,
                                          "takeuchi: transported comultiplication");
        r.expect_equal("takeuchi.left_coaction_recovered",
                       LinearMap::identity(f, nc).tensor(phi).compose(tdelta),
                       m.left_coaction.compose(phi));
    } catch (const NotWellDefined& e) {
        r.add("takeuchi.left_coaction_recovered", false, e.what());
    }
    return r;
}

}  // namespace hsc
