#include "hsc/subcat.hpp"

#include <functional>
#include <random>

#include "hsc/cotensor.hpp"

namespace hsc {

namespace {

LinearMap id(const Field& f, int n) { return LinearMap::identity(f, n); }

// Rows spanning the annihilator of the column space of incl.
LinearMap annihilator(const LinearMap& incl) {
    return incl.transpose().kernel().transpose();
}

// Basis of the space of maps cod <- dom killed by every condition; returned
// as a (cod*dom) x r matrix of vectorized maps (row-major).
LinearMap solve_map_space(const Field& f, int cod, int dom,
                          const std::vector<std::function<LinearMap(const LinearMap&)>>& conds) {
    // shapes of the condition outputs, probed once on the zero map
    std::vector<int> block_rows, block_cols, offsets;
    int total = 0;
    LinearMap z = LinearMap::zero(f, cod, dom);
    for (const auto& c : conds) {
        LinearMap probe = c(z);
        block_rows.push_back(probe.rows());
        block_cols.push_back(probe.cols());
        offsets.push_back(total);
        total += probe.rows() * probe.cols();
    }
    std::vector<Entry> ces;
    for (int i = 0; i < cod; ++i) {
        for (int j = 0; j < dom; ++j) {
            int var = i * dom + j;
            LinearMap basis_map(f, cod, dom, {{i, j, Scalar::one(f)}});
            for (size_t k = 0; k < conds.size(); ++k) {
                LinearMap out = conds[k](basis_map);
                for (const Entry& e : out.entries())
                    ces.push_back({offsets[k] + e.row * block_cols[k] + e.col, var, e.value});
            }
        }
    }
    return LinearMap(f, total, cod * dom, std::move(ces)).kernel();
}

LinearMap assemble(const Field& f, int cod, int dom, const LinearMap& sols, const Vec& coeffs) {
    Vec flat = sols.apply(coeffs);
    std::vector<Entry> es;
    for (int t = 0; t < cod * dom; ++t)
        if (!flat[t].is_zero()) es.push_back({t / dom, t % dom, flat[t]});
    return LinearMap(f, cod, dom, std::move(es));
}

std::optional<LinearMap> find_invertible(const Field& f, int cod, int dom, const LinearMap& sols,
                                         std::mt19937_64& rng) {
    if (cod != dom || sols.cols() == 0) return std::nullopt;
    const int r = sols.cols();
    // deterministic pass over the basis solutions first
    for (int j = 0; j < r; ++j) {
        Vec coeffs(r, Scalar::zero(f));
        coeffs[j] = Scalar::one(f);
        LinearMap cand = assemble(f, cod, dom, sols, coeffs);
        if (cand.invert()) return cand;
    }
    long lo = -3, hi = 3;
    if (f.kind() == Field::Kind::Prime) {
        lo = 0;
        hi = f.p() - 1;
    }
    std::uniform_int_distribution<long> dist(lo, hi);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vec coeffs;
        coeffs.reserve(r);
        for (int j = 0; j < r; ++j) coeffs.emplace_back(f, dist(rng));
        LinearMap cand = assemble(f, cod, dom, sols, coeffs);
        if (cand.invert()) return cand;
    }
    return std::nullopt;
}

}  // namespace

CheckReport check_subcoalgebra(const Subcoalgebra& d) {
    CheckReport r;
    r.add("sub.injective", d.inclusion.rank() == d.inclusion.cols());
    r.add("sub.comul_restricts",
          image_contained(d.parent.comul.compose(d.inclusion), d.inclusion.tensor(d.inclusion)));
    return r;
}

CheckReport check_module_subcoalgebra(const Subcoalgebra& d, const ModuleCoalgebra& c) {
    CheckReport r = check_subcoalgebra(d);
    const Field& f = c.field();
    r.add("sub.h_stable",
          image_contained(c.action.compose(id(f, c.over.dim()).tensor(d.inclusion)), d.inclusion));
    return r;
}

TauResult tau(const Subcoalgebra& d, const RightComodule& m) {
    const Field& f = m.over.field;
    const int dm = m.dim;
    const int nc = m.over.dim;
    // V0 = rho^{-1}(M (x) D), via the annihilator of D in the last leg
    LinearMap ann = annihilator(d.inclusion);
    LinearMap v = id(f, dm).tensor(ann).compose(m.coaction).kernel();
    int steps = 0;
    for (;;) {
        // refine: keep v with rho(v) in V (x) D
        LinearMap refine =
            annihilator(v.tensor(d.inclusion)).compose(m.coaction).compose(v).kernel();
        if (refine.cols() == v.cols()) break;
        v = v.compose(refine);
        ++steps;
    }
    try {
        factor_through(v.tensor(d.inclusion), m.coaction.compose(v), "tau");
    } catch (const NotWellDefined&) {
        throw InternalError("tau: fixpoint is not a D-subcomodule");
    }
    LinearMap coact = factor_through(v.tensor(id(f, nc)), m.coaction.compose(v),
                                     "tau: coaction does not restrict");
    return TauResult{RightComodule{m.over, v.cols(), coact, default_basis(v.cols())}, v, steps};
}

InclusionReport check_equivariance_inclusion(const ModuleCoalgebra& c, const Subcoalgebra& d,
                                             const RightComodule& x, const RightComodule& m) {
    const Field& f = c.field();
    TauResult inner = tau(d, m);
    TauResult outer = tau(d, tensor_comodule(x, m, c));
    LinearMap sub = id(f, x.dim).tensor(inner.inclusion);
    bool included = image_contained(sub, outer.inclusion);
    int sub_dim = x.dim * inner.restricted.dim;
    int big_dim = outer.restricted.dim;
    return InclusionReport{included, included && sub_dim != big_dim, sub_dim, big_dim};
}

CheckReport roundtrip_correspondence(const ModuleCoalgebra& c, const Subcoalgebra& d) {
    CheckReport r;
    const Field& f = c.field();
    RightComodule reg = regular_right_comodule(c.coalg);
    TauResult t = tau(d, reg);
    bool recovers = t.restricted.dim == d.dim() && image_contained(t.inclusion, d.inclusion) &&
                    image_contained(d.inclusion, t.inclusion);
    r.add("roundtrip.tau_of_regular_is_D", recovers,
          "tau has dim " + std::to_string(t.restricted.dim) + ", D has dim " +
              std::to_string(d.dim()));

    bool stable =
        image_contained(c.action.compose(id(f, c.over.dim()).tensor(d.inclusion)), d.inclusion);
    bool all_included = true;
    for (const RightComodule& x :
         {trivial_h_comodule(c.over), regular_right_comodule(c.over.coalg)})
        all_included = all_included && check_equivariance_inclusion(c, d, x, reg).included;
    r.add("roundtrip.stability_iff_inclusion", stable == all_included,
          std::string("H-stable: ") + (stable ? "yes" : "no") + ", inclusion on probes: " +
              (all_included ? "holds" : "fails"));
    return r;
}

EquivariantBicomodule cotensor_bicomodule(const EquivariantBicomodule& m,
                                          const EquivariantBicomodule& n) {
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    const int nc = m.C.dim();
    const int ne = n.D.dim();
    if (m.H.comul() != n.H.comul() || m.H.mul() != n.H.mul())
        throw FieldMismatch("cotensor_bicomodule: different acting bialgebras");
    CotensorSpace p = cotensor(right_part(m), left_part(n));
    const LinearMap& incl = p.inclusion;
    LinearMap lam = factor_through(id(f, nc).tensor(incl),
                                   m.left_coaction.tensor(id(f, n.dim)).compose(incl),
                                   "cotensor_bicomodule: left coaction does not restrict");
    LinearMap rho = factor_through(incl.tensor(id(f, ne)),
                                   id(f, m.dim).tensor(n.right_coaction).compose(incl),
                                   "cotensor_bicomodule: right coaction does not restrict");
    LinearMap diag = m.action.tensor(n.action)
                         .compose(LinearMap::leg_permutation(f, {nh, nh, m.dim, n.dim},
                                                             {0, 2, 1, 3}))
                         .compose(m.H.comul().tensor(id(f, m.dim * n.dim)));
    LinearMap act = factor_through(incl, diag.compose(id(f, nh).tensor(incl)),
                                   "cotensor_bicomodule: action does not restrict");
    return EquivariantBicomodule{m.H, m.C,          n.D, p.dim(), lam, rho, act,
                                 default_basis(p.dim())};
}

MoritaWitness morita_witness_check(const EquivariantBicomodule& m, const EquivariantBicomodule& n,
                                   std::uint64_t seed) {
    const Field& f = m.H.field();
    const int nh = m.H.dim();
    std::mt19937_64 rng(seed);

    // one direction: intertwiners from M []_D N (resp. N []_C M) to the
    // regular bicomodule on the matching coalgebra
    auto side = [&](const EquivariantBicomodule& a, const EquivariantBicomodule& b,
                    const ModuleCoalgebra& target) {
        EquivariantBicomodule p = cotensor_bicomodule(a, b);
        const int nt = target.dim();
        std::vector<std::function<LinearMap(const LinearMap&)>> conds = {
            [&](const LinearMap& phi) {
                return target.coalg.comul.compose(phi) -
                       id(f, nt).tensor(phi).compose(p.left_coaction);
            },
            [&](const LinearMap& phi) {
                return target.coalg.comul.compose(phi) -
                       phi.tensor(id(f, nt)).compose(p.right_coaction);
            },
            [&](const LinearMap& phi) {
                return phi.compose(p.action) - target.action.compose(id(f, nh).tensor(phi));
            },
        };
        LinearMap sols = solve_map_space(f, nt, p.dim, conds);
        return std::make_pair(sols.cols(), find_invertible(f, nt, p.dim, sols, rng));
    };

    auto [mn_dim, to_c] = side(m, n, m.C);
    auto [nm_dim, to_d] = side(n, m, m.D);
    return MoritaWitness{to_c.has_value() && to_d.has_value(), mn_dim, nm_dim, to_c, to_d};
}

}  // namespace hsc
