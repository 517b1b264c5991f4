#include "hsc/equivariant.hpp"

namespace hsc {

namespace {

LinearMap id(const Field& f, int n) { return LinearMap::identity(f, n); }

// id_W [] f for f : M -> N between the right slots of two cotensors.
LinearMap cotensor_map_right_slot(const CotensorSpace& src, const CotensorSpace& dst,
                                  const LinearMap& f) {
    const Field& fld = f.field();
    LinearMap pushed = id(fld, src.left.dim).tensor(f).compose(src.inclusion);
    return factor_through(dst.inclusion, pushed, "cotensor map on the right slot");
}

// f [] id_M for f : W -> W' between the left slots.
LinearMap cotensor_map_left_slot(const CotensorSpace& src, const CotensorSpace& dst,
                                 const LinearMap& f) {
    const Field& fld = f.field();
    LinearMap pushed = f.tensor(id(fld, src.right.dim)).compose(src.inclusion);
    return factor_through(dst.inclusion, pushed, "cotensor map on the left slot");
}

}  // namespace

LinearMap xi_from_action(const EquivariantBicomodule& m, const RightComodule& x,
                         const RightComodule& w) {
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int dx = x.dim;
    const int dw = w.dim;
    const int dm = m.dim;

    CotensorSpace ct_wm = cotensor(w, left_part(m));
    RightComodule xw = tensor_comodule(x, w, m.C);
    CotensorSpace ct_xwm = cotensor(xw, left_part(m));

    // x (x) w (x) m -> x0 (x) w (x) (x1 . m) on the ambient space
    LinearMap big = id(f, dx * dw).tensor(m.action)
                        .compose(id(f, dx).tensor(LinearMap::swap_legs(f, nh, dw)).tensor(id(f, dm)))
                        .compose(x.coaction.tensor(id(f, dw * dm)));
    LinearMap restricted = big.compose(id(f, dx).tensor(ct_wm.inclusion));
    LinearMap xi = factor_through(ct_xwm.inclusion, restricted,
                                  "xi: image escapes the cotensor (equivariance violated)");

    // D-colinearity of the result: the domain X (x) (W [] M) carries the
    // diagonal coaction x0 (x) n0 (x) (x1 . n1) with H acting on D
    RightComodule domain = tensor_comodule(x, apply_TM(m, w), m.D);
    RightComodule codomain = apply_TM(m, xw);
    if (!is_right_colinear(xi, domain, codomain))
        throw NotWellDefined("xi: result is not D-colinear (equivariance violated)");
    return xi;
}

XiFamily xi_family_from_action(const EquivariantBicomodule& m) {
    return XiFamily{m, [m](const RightComodule& x, const RightComodule& w) {
                        return xi_from_action(m, x, w);
                    }};
}

LinearMap derive_action(const EquivariantBicomodule& m, const LinearMap& xi_hc) {
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int nc = m.C.dim();
    const int dm = m.dim;

    RightComodule h_reg = regular_right_comodule(m.H.coalg);
    RightComodule c_reg = regular_right_comodule(m.C.coalg);
    CotensorSpace ct_cm = cotensor(c_reg, left_part(m));
    LinearMap kappa = factor_through(ct_cm.inclusion, m.left_coaction,
                                     "derive_action: left coaction does not land in C [] M");
    CotensorSpace ct_hcm = cotensor(tensor_comodule(h_reg, c_reg, m.C), left_part(m));
    if (xi_hc.rows() != ct_hcm.dim() || xi_hc.cols() != nh * ct_cm.dim())
        throw DimensionMismatch("derive_action: xi block has the wrong shape");
    LinearMap counits = m.H.counit().tensor(m.C.coalg.counit).tensor(id(f, dm));
    return counits.compose(ct_hcm.inclusion).compose(xi_hc).compose(id(f, nh).tensor(kappa));
}

XiFamily xi_family_from_table(const EquivariantBicomodule& m, const LinearMap& xi_hc) {
    EquivariantBicomodule derived = m;
    derived.action = derive_action(m, xi_hc);
    return xi_family_from_action(derived);
}

LinearMap action_from_xi(const XiFamily& xi) {
    LinearMap xi_hc = xi.eval(regular_right_comodule(xi.M.H.coalg),
                              regular_right_comodule(xi.M.C.coalg));
    LinearMap a = derive_action(xi.M, xi_hc);
    EquivariantBicomodule candidate = xi.M;
    candidate.action = a;
    CheckReport r = check_equivariant_bicomodule(candidate);
    for (const auto& e : r.entries)
        if (!e.pass) throw AxiomFailure(e.name, "action_from_xi: derived action fails " + e.name +
                                                    (e.detail.empty() ? "" : " (" + e.detail + ")"));
    return a;
}

std::vector<LaxProbe> default_probes(const EquivariantBicomodule& m) {
    RightComodule triv = trivial_h_comodule(m.H);
    RightComodule h_reg = regular_right_comodule(m.H.coalg);
    RightComodule c_reg = regular_right_comodule(m.C.coalg);
    RightComodule free2 = free_comodule(m.C.coalg, 2);
    RightComodule zero{m.C.coalg, 0, LinearMap::zero(m.H.field(), 0, 0), {}};
    return {
        {triv, h_reg, c_reg}, {h_reg, triv, c_reg},  {h_reg, h_reg, c_reg},
        {triv, h_reg, free2}, {h_reg, triv, free2},  {h_reg, h_reg, zero},
    };
}

CheckReport check_lax_axioms(const XiFamily& xi, const std::vector<LaxProbe>& probes) {
    CheckReport r;
    const EquivariantBicomodule& m = xi.M;
    const Field& f = m.H.field();
    RightComodule triv = trivial_h_comodule(m.H);
    int idx = 0;
    for (const auto& p : probes) {
        std::string tag = "probe" + std::to_string(idx++) + ".";
        try {
            // unit law
            LinearMap unit_xi = xi.eval(triv, p.W);
            r.expect_equal(tag + "unit", unit_xi, id(f, unit_xi.cols()));

            // coherence
            RightComodule xy = tensor_h_comodule(m.H, p.X, p.Y);
            RightComodule yw = tensor_comodule(p.Y, p.W, m.C);
            LinearMap lhs = xi.eval(xy, p.W);
            LinearMap rhs = xi.eval(p.X, yw).compose(id(f, p.X.dim).tensor(xi.eval(p.Y, p.W)));
            r.expect_equal(tag + "coherence", lhs, rhs);

            // D-colinearity at (X, W), with the diagonal coaction on the domain
            LinearMap v = xi.eval(p.X, p.W);
            RightComodule domain = tensor_comodule(p.X, apply_TM(m, p.W), m.D);
            r.add(tag + "colinear", is_right_colinear(v, domain, apply_TM(m, tensor_comodule(p.X, p.W, m.C))));

            // closed form from the family's own action
            r.expect_equal(tag + "closed_form", v, xi_from_action(m, p.X, p.W));
        } catch (const std::exception& e) {
            r.add(tag + "well_defined", false, e.what());
        }
    }
    return r;
}

CheckReport roundtrip_bijection(const EquivariantBicomodule& m) {
    CheckReport r;
    RightComodule h_reg = regular_right_comodule(m.H.coalg);
    RightComodule c_reg = regular_right_comodule(m.C.coalg);
    try {
        XiFamily fam = xi_family_from_action(m);
        LinearMap recovered = action_from_xi(fam);
        r.expect_equal("roundtrip.action_recovered", recovered, m.action);

        LinearMap xi_hc = xi_from_action(m, h_reg, c_reg);
        XiFamily from_table = xi_family_from_table(m, xi_hc);
        r.expect_equal("roundtrip.xi_recovered_regular", from_table.eval(h_reg, c_reg), xi_hc);
        RightComodule free2 = free_comodule(m.C.coalg, 2);
        r.expect_equal("roundtrip.xi_recovered_free", from_table.eval(h_reg, free2),
                       xi_from_action(m, h_reg, free2));
    } catch (const std::exception& e) {
        r.add("roundtrip.well_defined", false, e.what());
    }
    return r;
}

bool naturality_in_x(const XiFamily& xi, const LinearMap& f, const RightComodule& x_from,
                     const RightComodule& x_to, const RightComodule& w) {
    const Field& fld = f.field();
    const EquivariantBicomodule& m = xi.M;
    CotensorSpace ct = cotensor(w, left_part(m));
    CotensorSpace src = cotensor(tensor_comodule(x_from, w, m.C), left_part(m));
    CotensorSpace dst = cotensor(tensor_comodule(x_to, w, m.C), left_part(m));
    LinearMap induced = cotensor_map_left_slot(src, dst, f.tensor(id(fld, w.dim)));
    return xi.eval(x_to, w).compose(f.tensor(id(fld, ct.dim()))) ==
           induced.compose(xi.eval(x_from, w));
}

bool naturality_in_w(const XiFamily& xi, const LinearMap& g, const RightComodule& w_from,
                     const RightComodule& w_to, const RightComodule& x) {
    const Field& fld = g.field();
    const EquivariantBicomodule& m = xi.M;
    CotensorSpace src = cotensor(w_from, left_part(m));
    CotensorSpace dst = cotensor(w_to, left_part(m));
    LinearMap g_cot = cotensor_map_left_slot(src, dst, g);
    CotensorSpace big_src = cotensor(tensor_comodule(x, w_from, m.C), left_part(m));
    CotensorSpace big_dst = cotensor(tensor_comodule(x, w_to, m.C), left_part(m));
    LinearMap induced = cotensor_map_left_slot(big_src, big_dst, id(fld, x.dim).tensor(g));
    return xi.eval(x, w_to).compose(id(fld, x.dim).tensor(g_cot)) ==
           induced.compose(xi.eval(x, w_from));
}

bool xi_commutes_with(const XiFamily& xi_m, const XiFamily& xi_n, const LinearMap& f,
                      const RightComodule& x, const RightComodule& w) {
    const Field& fld = f.field();
    LinearMap wf = cotensor_map_right_slot(cotensor(w, left_part(xi_m.M)),
                                           cotensor(w, left_part(xi_n.M)), f);
    RightComodule xw_m = tensor_comodule(x, w, xi_m.M.C);
    RightComodule xw_n = tensor_comodule(x, w, xi_n.M.C);
    LinearMap xwf = cotensor_map_right_slot(cotensor(xw_m, left_part(xi_m.M)),
                                            cotensor(xw_n, left_part(xi_n.M)), f);
    return xi_n.eval(x, w).compose(id(fld, x.dim).tensor(wf)) == xwf.compose(xi_m.eval(x, w));
}

// ---- right-handed and two-sided variants ----

EquivariantBicomodule to_op(const RightEquivariantBicomodule& m) {
    const Field& f = m.K.field();
    Bialgebra kop = op_bialgebra(m.K);
    const int nk = m.K.dim();
    auto flip = [&](const LinearMap& right_action, int carrier) {
        return right_action.compose(LinearMap::swap_legs(f, nk, carrier));
    };
    ModuleCoalgebra c_op{kop, m.C.coalg, flip(m.C.action, m.C.coalg.dim)};
    ModuleCoalgebra d_op{kop, m.D.coalg, flip(m.D.action, m.D.coalg.dim)};
    return EquivariantBicomodule{kop,  c_op, d_op, m.dim, m.left_coaction, m.right_coaction,
                                 flip(m.action, m.dim), m.basis};
}

CheckReport check_right_equivariant_bicomodule(const RightEquivariantBicomodule& m) {
    return check_equivariant_bicomodule(to_op(m));
}

RightComodule tensor_comodule_right(const RightComodule& w, const RightComodule& x,
                                    const RightModuleCoalgebra& c) {
    const Field& f = c.coalg.field;
    const int nk = x.over.dim;
    const int nc = c.coalg.dim;
    if (w.over.dim != nc) throw DimensionMismatch("tensor_comodule_right: W not a comodule over C");
    if (c.over.dim() != nk) throw DimensionMismatch("tensor_comodule_right: X not over the acting bialgebra");
    // w (x) x -> w0 (x) x0 (x) (w1 . x1)
    LinearMap perm = LinearMap::leg_permutation(f, {w.dim, nc, x.dim, nk}, {0, 2, 1, 3});
    LinearMap coact = LinearMap::identity(f, w.dim * x.dim).tensor(c.action).compose(perm).compose(
        w.coaction.tensor(x.coaction));
    return RightComodule{c.coalg, w.dim * x.dim, coact, default_basis(w.dim * x.dim)};
}

LinearMap right_xi_from_action(const RightEquivariantBicomodule& m, const RightComodule& w,
                               const RightComodule& x) {
    const Field& f = m.K.field();
    EquivariantBicomodule op = to_op(m);
    LinearMap xi_op = xi_from_action(op, x, w);

    CotensorSpace ct_wm = cotensor(w, left_part(op));
    CotensorSpace ct_op = cotensor(tensor_comodule(x, w, op.C), left_part(op));
    CotensorSpace ct_right = cotensor(tensor_comodule_right(w, x, m.C), left_part(op));
    LinearMap sigma = LinearMap::swap_legs(f, x.dim, w.dim).tensor(id(f, m.dim));
    LinearMap reorder = factor_through(ct_right.inclusion, sigma.compose(ct_op.inclusion),
                                       "right xi: leg reordering does not preserve the cotensor");
    return reorder.compose(xi_op).compose(LinearMap::swap_legs(f, ct_wm.dim(), x.dim));
}

EquivariantBicomodule left_side(const BiequivariantBicomodule& m) {
    ModuleCoalgebra c{m.H, m.C.coalg, m.C.left_action};
    ModuleCoalgebra d{m.H, m.D.coalg, m.D.left_action};
    return EquivariantBicomodule{m.H, c, d, m.dim, m.left_coaction, m.right_coaction, m.left_action,
                                 m.basis};
}

RightEquivariantBicomodule right_side(const BiequivariantBicomodule& m) {
    RightModuleCoalgebra c{m.K, m.C.coalg, m.C.right_action};
    RightModuleCoalgebra d{m.K, m.D.coalg, m.D.right_action};
    return RightEquivariantBicomodule{m.K,          c, d, m.dim, m.left_coaction, m.right_coaction,
                                      m.right_action, m.basis};
}

CheckReport check_biequivariant_bicomodule(const BiequivariantBicomodule& m) {
    CheckReport r;
    r.merge("left.", check_equivariant_bicomodule(left_side(m)));
    r.merge("right.", check_right_equivariant_bicomodule(right_side(m)));
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int nk = m.K.dim();
    auto commute = [&](const std::string& name, const LinearMap& left, const LinearMap& right) {
        // (h . c) . k == h . (c . k)
        r.expect_equal(name, right.compose(left.tensor(id(f, nk))),
                       left.compose(id(f, nh).tensor(right)));
    };
    commute("actions_commute.M", m.left_action, m.right_action);
    commute("actions_commute.C", m.C.left_action, m.C.right_action);
    commute("actions_commute.D", m.D.left_action, m.D.right_action);
    return r;
}

CheckReport bimodule_coherence(const BiequivariantBicomodule& m, const RightComodule& x,
                               const RightComodule& w, const RightComodule& y) {
    CheckReport r;
    const Field& f = m.H.field();
    EquivariantBicomodule left = left_side(m);
    RightEquivariantBicomodule right = right_side(m);
    try {
        RightComodule wy = tensor_comodule_right(w, y, right.C);
        RightComodule xw = tensor_comodule(x, w, left.C);
        LinearMap lhs = xi_from_action(left, x, wy)
                            .compose(id(f, x.dim).tensor(right_xi_from_action(right, w, y)));
        LinearMap rhs = right_xi_from_action(right, xw, y)
                            .compose(xi_from_action(left, x, w).tensor(id(f, y.dim)));
        r.expect_equal("bimodule.middle_coherence", lhs, rhs);
    } catch (const std::exception& e) {
        r.add("bimodule.middle_coherence", false, e.what());
    }
    return r;
}

}  // namespace hsc
