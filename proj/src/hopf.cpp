#include "hsc/hopf.hpp"

namespace hsc {

namespace {

LinearMap id(const Field& f, int n) { return LinearMap::identity(f, n); }

// coefficient pool for the bounded converse search
std::vector<Scalar> coefficient_pool(const Field& f) {
    if (f.kind() == Field::Kind::Prime && f.p() <= 3) {
        std::vector<Scalar> all;
        for (long v = 0; v < f.p(); ++v) all.emplace_back(f, v);
        return all;
    }
    return {Scalar::zero(f), Scalar::one(f), -Scalar::one(f)};
}

// enumerate all vectors of the given length over the pool
bool next_vector(std::vector<int>& digits, int base) {
    for (size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

LinearMap beta_map(const Bialgebra& h) {
    const int n = h.dim();
    return id(h.field(), n).tensor(h.mul()).compose(h.comul().tensor(id(h.field(), n)));
}

std::optional<LinearMap> extract_antipode(const Bialgebra& h) {
    const int n = h.dim();
    auto inv = beta_map(h).invert();
    if (!inv) return std::nullopt;
    LinearMap s = h.counit().tensor(id(h.field(), n)).compose(*inv).compose(
        id(h.field(), n).tensor(h.unit()));
    HopfAlgebra candidate{h, s};
    CheckReport r = check_hopf(candidate);
    if (!r.all_pass())
        throw InternalError("extract_antipode: beta inverts but the antipode axioms fail:\n" + r.str());
    return s;
}

LinearMap xi_inverse(const EquivariantBicomodule& m, const LinearMap& antipode,
                     const RightComodule& x, const RightComodule& w) {
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int dx = x.dim;
    const int dw = w.dim;
    const int dm = m.dim;
    CotensorSpace ct_wm = cotensor(w, left_part(m));
    CotensorSpace ct_xwm = cotensor(tensor_comodule(x, w, m.C), left_part(m));

    // x (x) w (x) m -> x0 (x) w (x) S(x1) m on the ambient space
    LinearMap twisted = id(f, dx).tensor(antipode).compose(x.coaction);
    LinearMap big = id(f, dx * dw).tensor(m.action)
                        .compose(id(f, dx).tensor(LinearMap::swap_legs(f, nh, dw)).tensor(id(f, dm)))
                        .compose(twisted.tensor(id(f, dw * dm)));
    return factor_through(id(f, dx).tensor(ct_wm.inclusion), big.compose(ct_xwm.inclusion),
                          "xi_inverse: image escapes X (x) (W [] M)");
}

EquivariantBicomodule psi_functor(const Bialgebra& h, const ModuleCoalgebra& d,
                                  const RightComodule& w) {
    const Field& f = h.field();
    const int nh = h.dim();
    const int nd = d.dim();
    const int dw = w.dim;
    if (w.over.dim != nd) throw DimensionMismatch("psi_functor: W is not a comodule over D");
    const int dim = nh * dw;
    LinearMap idw = id(f, dw);
    LinearMap lam = h.comul().tensor(idw);
    LinearMap perm = LinearMap::leg_permutation(f, {nh, nh, dw, nd}, {0, 2, 1, 3});
    LinearMap rho = id(f, dim).tensor(d.action).compose(perm).compose(h.comul().tensor(w.coaction));
    LinearMap act = h.mul().tensor(idw);
    return EquivariantBicomodule{h,   self_module_coalgebra(h), d, dim, lam, rho, act,
                                 default_basis(dim)};
}

Coinvariants coinvariants(const EquivariantBicomodule& m) {
    const Field& f = m.H.field();
    const int d = m.dim;
    const int nd = m.D.dim();
    LinearMap incl = (m.left_coaction - m.H.unit().tensor(id(f, d))).kernel();
    LinearMap coact = factor_through(incl.tensor(id(f, nd)), m.right_coaction.compose(incl),
                                     "coinvariants: right coaction does not restrict");
    RightComodule sub{m.D.coalg, incl.cols(), coact, default_basis(incl.cols())};
    return Coinvariants{sub, incl};
}

CheckReport fundamental_theorem_check(const Bialgebra& h, const ModuleCoalgebra& d,
                                      const std::vector<RightComodule>& w_probes,
                                      const std::vector<EquivariantBicomodule>& m_probes) {
    CheckReport r;
    const Field& f = h.field();
    int idx = 0;
    for (const auto& w : w_probes) {
        std::string tag = "fundthm.unit.W" + std::to_string(idx++);
        try {
            EquivariantBicomodule psi = psi_functor(h, d, w);
            Coinvariants coinv = coinvariants(psi);
            bool dim_ok = coinv.comodule.dim == w.dim;
            r.add(tag + ".dim", dim_ok,
                  dim_ok ? "" : "coinvariants have dim " + std::to_string(coinv.comodule.dim));
            LinearMap eta = factor_through(coinv.inclusion, h.unit().tensor(id(f, w.dim)),
                                           "unit map does not land in the coinvariants");
            r.add(tag + ".iso", eta.rows() == eta.cols() && eta.invert().has_value());
            r.add(tag + ".colinear", is_right_colinear(eta, w, coinv.comodule));
        } catch (const std::exception& e) {
            r.add(tag, false, e.what());
        }
    }
    idx = 0;
    for (const auto& m : m_probes) {
        std::string tag = "fundthm.counit.M" + std::to_string(idx++);
        try {
            Coinvariants coinv = coinvariants(m);
            LinearMap counit = m.action.compose(id(f, h.dim()).tensor(coinv.inclusion));
            r.add(tag + ".iso", counit.rows() == counit.cols() && counit.invert().has_value(),
                  "H (x) coinv -> M is " + std::to_string(counit.cols()) + " -> " +
                      std::to_string(counit.rows()));
        } catch (const std::exception& e) {
            r.add(tag, false, e.what());
        }
    }
    return r;
}

CheckReport converse_probe_search(const Bialgebra& h, const ModuleCoalgebra& d) {
    CheckReport r;
    const Field& f = h.field();
    const int nh = h.dim();
    bool is_hopf = false;
    try {
        is_hopf = extract_antipode(h).has_value();
    } catch (const InternalError&) {
        is_hopf = false;
    }

    std::vector<Scalar> pool = coefficient_pool(f);
    const int base = static_cast<int>(pool.size());
    auto vec_of = [&](const std::vector<int>& digits) {
        Vec v;
        for (int t : digits) v.push_back(pool[t]);
        return v;
    };

    // group-like candidates in H and in D (comodule axiom for a line)
    auto group_likes = [&](const Coalgebra& c) {
        std::vector<Vec> out;
        std::vector<int> digits(c.dim, 0);
        do {
            Vec v = vec_of(digits);
            LinearMap col = LinearMap::from_vec(f, v);
            if (c.comul.compose(col) == col.tensor(col) &&
                c.counit.compose(col) == LinearMap::identity(f, 1))
                out.push_back(v);
        } while (next_vector(digits, base));
        return out;
    };

    bool found_failing = false;
    std::string witness;
    ModuleCoalgebra c_self = self_module_coalgebra(h);
    for (const Vec& v : group_likes(h.coalg)) {
        for (const Vec& w : group_likes(d.coalg)) {
            std::vector<int> digits(nh, 0);
            do {
                LinearMap action(f, 1, nh, [&] {
                    std::vector<Entry> es;
                    Vec t = vec_of(digits);
                    for (int i = 0; i < nh; ++i)
                        if (!t[i].is_zero()) es.push_back({0, i, t[i]});
                    return es;
                }());
                EquivariantBicomodule cand{h, c_self, d, 1, LinearMap::from_vec(f, v),
                                           LinearMap::from_vec(f, w), action, {"m"}};
                if (!check_equivariant_bicomodule(cand).all_pass()) continue;
                try {
                    Coinvariants coinv = coinvariants(cand);
                    LinearMap counit = cand.action.compose(
                        LinearMap::identity(f, nh).tensor(coinv.inclusion));
                    if (counit.rows() != counit.cols() || !counit.invert().has_value()) {
                        found_failing = true;
                        witness = "one-dimensional object with coinvariants of dim " +
                                  std::to_string(coinv.comodule.dim);
                    }
                } catch (const NotWellDefined&) {
                    found_failing = true;
                    witness = "one-dimensional object whose coaction does not restrict";
                }
            } while (!found_failing && next_vector(digits, base));
            if (found_failing) break;
        }
        if (found_failing) break;
    }

    if (is_hopf)
        r.add("converse.no_failing_probe", !found_failing,
              found_failing ? witness : "search space exhausted at dimension 1");
    else
        r.add("converse.failing_probe_found", found_failing,
              found_failing ? witness : "no failing probe found (search bounded to dimension 1)");
    return r;
}

}  // namespace hsc
