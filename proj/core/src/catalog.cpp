#include "ybx/catalog.hpp"

#include "ybx/errors.hpp"

namespace ybx {

std::pair<Rat, Rat> adler(const Rat& beta1, const Rat& beta2, const Rat& f1, const Rat& f2) {
    Rat s = f1 + f2;
    if (s == 0) throw SingularInput("adler: f1 + f2 == 0");
    Rat d = (beta1 - beta2) / s;
    return {f2 - d, f1 + d};
}

std::pair<VectorCovector, VectorCovector> soliton_rank1(const Rat& lambda1, const Rat& lambda2,
                                                        const VectorCovector& p1,
                                                        const VectorCovector& p2) {
    if (lambda1 == lambda2) throw ParameterCollision("soliton_rank1: lambda1 == lambda2");
    if (is_zero_vec(p1.xi) || is_zero_vec(p1.eta) || is_zero_vec(p2.xi) || is_zero_vec(p2.eta))
        throw SingularInput("soliton_rank1: zero vector slot");
    Rat q11 = dot(p1.xi, p1.eta), q22 = dot(p2.xi, p2.eta);
    if (q11 == 0 || q22 == 0) throw SingularInput("soliton_rank1: slot pairing vanishes");
    Rat q12 = dot(p1.xi, p2.eta), q21 = dot(p2.xi, p1.eta);

    Rat c1 = 2 * lambda2 * q12 / ((lambda1 - lambda2) * q22);
    Rat c2 = 2 * lambda2 * q21 / ((lambda1 - lambda2) * q22);
    Rat c3 = 2 * lambda1 * q21 / ((lambda2 - lambda1) * q11);
    Rat c4 = 2 * lambda1 * q12 / ((lambda2 - lambda1) * q11);

    size_t n = p1.xi.size();
    VectorCovector o1{Vec(n), Vec(n)}, o2{Vec(n), Vec(n)};
    for (size_t k = 0; k < n; ++k) {
        o1.xi[k] = p1.xi[k] + c1 * p2.xi[k];
        o1.eta[k] = p1.eta[k] + c2 * p2.eta[k];
        o2.xi[k] = p2.xi[k] + c3 * p1.xi[k];
        o2.eta[k] = p2.eta[k] + c4 * p1.eta[k];
    }
    if (dot(o1.xi, o1.eta) == 0 || dot(o2.xi, o2.eta) == 0)
        throw DegenerateOutput("soliton_rank1: output pairing vanishes");
    return {o1, o2};
}

namespace {
QMatrix plus_scaled_projector(const Rat& coeff, const QMatrix& p) {
    return QMatrix::identity(p.rows()) + p.scaled(coeff);
}
} // namespace

std::pair<ProjectorPair, ProjectorPair> grassmann_projector(const Rat& lambda1, const Rat& lambda2,
                                                            const ProjectorPair& s1,
                                                            const ProjectorPair& s2) {
    if (lambda1 == lambda2 || lambda1 == -lambda2)
        throw ParameterCollision("grassmann_projector: lambda1 == +-lambda2");
    if (lambda1 == 0 || lambda2 == 0)
        throw ParameterCollision("grassmann_projector: parameters must be nonzero");
    QMatrix p1 = projector_from_pair(s1.kernel, s1.image);
    QMatrix p2 = projector_from_pair(s2.kernel, s2.image);

    ProjectorPair o1{apply(plus_scaled_projector(-2 * lambda2 / (lambda1 + lambda2), p2), s1.kernel),
                     apply(plus_scaled_projector(2 * lambda2 / (lambda1 - lambda2), p2), s1.image)};
    ProjectorPair o2{apply(plus_scaled_projector(-2 * lambda1 / (lambda1 + lambda2), p1), s2.kernel),
                     apply(plus_scaled_projector(2 * lambda1 / (lambda2 - lambda1), p1), s2.image)};
    if (!complementary(o1.kernel, o1.image) || !complementary(o2.kernel, o2.image))
        throw DegenerateOutput("grassmann_projector: transformed pair lost complementarity");
    return {o1, o2};
}

std::pair<Subspace, Subspace> grassmannian_selfadjoint(const Rat& lambda1, const Rat& lambda2,
                                                       const Subspace& image1,
                                                       const Subspace& image2,
                                                       const QMatrix& form) {
    if (lambda1 == lambda2 || lambda1 == -lambda2)
        throw ParameterCollision("grassmannian_selfadjoint: lambda1 == +-lambda2");
    if (lambda1 == 0 || lambda2 == 0)
        throw ParameterCollision("grassmannian_selfadjoint: parameters must be nonzero");
    auto orth = [&form](const Subspace& l) {
        Subspace k = orthogonal_complement(l, form);
        if (!complementary(k, l))
            throw IsotropicSubspace("grassmannian_selfadjoint: subspace meets its own complement");
        return k;
    };
    QMatrix p1 = projector_from_pair(orth(image1), image1);
    QMatrix p2 = projector_from_pair(orth(image2), image2);
    Subspace o1 = apply(plus_scaled_projector(2 * lambda2 / (lambda1 - lambda2), p2), image1);
    Subspace o2 = apply(plus_scaled_projector(2 * lambda1 / (lambda2 - lambda1), p1), image2);
    orth(o1); // transformed images must stay anisotropic
    orth(o2);
    return {o1, o2};
}

std::pair<Subspace, Subspace> grassmannian_selfadjoint(const Rat& lambda1, const Rat& lambda2,
                                                       const Subspace& image1,
                                                       const Subspace& image2) {
    return grassmannian_selfadjoint(lambda1, lambda2, image1, image2,
                                    QMatrix::identity(image1.ambient_dim()));
}

std::pair<Vec, Vec> crystal(const Vec& x, const Vec& y) {
    int n = static_cast<int>(x.size());
    if (static_cast<int>(y.size()) != n || n < 1) throw Error("crystal: size mismatch");
    for (const auto& v : x)
        if (v == 0) throw SingularInput("crystal: zero coordinate");
    for (const auto& v : y)
        if (v == 0) throw SingularInput("crystal: zero coordinate");

    // P_j = sum_{a=1..n} prod_{k<a} x_{j+k} prod_{k>a} y_{j+k}, indices mod n.
    Vec p(n);
    for (int j = 1; j <= n; ++j) {
        Rat sum = 0;
        for (int a = 1; a <= n; ++a) {
            Rat term = 1;
            for (int k = 1; k < a; ++k) term *= x[(j + k - 1) % n];
            for (int k = a + 1; k <= n; ++k) term *= y[(j + k - 1) % n];
            sum += term;
        }
        if (sum == 0) throw SingularInput("crystal: P_" + std::to_string(j) + " vanishes");
        p[j - 1] = sum;
    }
    auto pj = [&](int j) { return p[((j - 1) % n + n) % n]; }; // P_0 means P_n
    Vec xo(n), yo(n);
    for (int j = 1; j <= n; ++j) {
        xo[j - 1] = x[j - 1] * pj(j) / pj(j - 1);
        yo[j - 1] = y[j - 1] * pj(j - 1) / pj(j);
    }
    return {xo, yo};
}

namespace {

const Rat& param_or_throw(const OptRat& p, const char* who) {
    if (!p) throw Error(std::string(who) + ": missing parameter");
    return *p;
}

YbMap make_adler_map() {
    YbMap m;
    m.id = "adler";
    m.kind = SlotKind::Scalar;
    m.param_arity = 1;
    m.rule = [](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        auto [u, v] = adler(param_or_throw(l, "adler"), param_or_throw(mu, "adler"),
                            std::get<Rat>(x), std::get<Rat>(y));
        return SlotPair{u, v};
    };
    m.in_domain = [](const OptRat&, const OptRat&, const SlotValue& x, const SlotValue& y) {
        return std::get<Rat>(x) + std::get<Rat>(y) != 0;
    };
    return m;
}

YbMap make_soliton_map() {
    YbMap m;
    m.id = "soliton-rank1";
    m.kind = SlotKind::VectorCovector;
    m.param_arity = 1;
    m.rule = [](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        auto [u, v] =
            soliton_rank1(param_or_throw(l, "soliton"), param_or_throw(mu, "soliton"),
                          std::get<VectorCovector>(x), std::get<VectorCovector>(y));
        return SlotPair{u, v};
    };
    return m;
}

YbMap make_grassmann_map() {
    YbMap m;
    m.id = "grassmann";
    m.kind = SlotKind::ProjectorPair;
    m.param_arity = 1;
    m.rule = [](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        auto [u, v] =
            grassmann_projector(param_or_throw(l, "grassmann"), param_or_throw(mu, "grassmann"),
                                std::get<ProjectorPair>(x), std::get<ProjectorPair>(y));
        return SlotPair{u, v};
    };
    return m;
}

YbMap make_grassmann_sa_map() {
    YbMap m;
    m.id = "grassmann-sa";
    m.kind = SlotKind::ProjectorPair;
    m.param_arity = 1;
    m.rule = [](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        const auto& px = std::get<ProjectorPair>(x);
        const auto& py = std::get<ProjectorPair>(y);
        auto [u, v] = grassmannian_selfadjoint(param_or_throw(l, "grassmann-sa"),
                                               param_or_throw(mu, "grassmann-sa"), px.image,
                                               py.image);
        return SlotPair{ProjectorPair{orthogonal_complement(u), u},
                        ProjectorPair{orthogonal_complement(v), v}};
    };
    return m;
}

YbMap make_crystal_map() {
    YbMap m;
    m.id = "crystal";
    m.kind = SlotKind::Vector;
    m.param_arity = 0;
    m.rule = [](const OptRat&, const OptRat&, const SlotValue& x, const SlotValue& y) {
        auto [u, v] = crystal(std::get<Vec>(x), std::get<Vec>(y));
        return SlotPair{u, v};
    };
    return m;
}

YbMap make_swap_map() {
    YbMap m;
    m.id = "swap";
    m.kind = SlotKind::Scalar;
    m.param_arity = 0;
    m.rule = [](const OptRat&, const OptRat&, const SlotValue& x, const SlotValue& y) {
        return SlotPair{y, x};
    };
    return m;
}

YbMap make_identity_map() {
    YbMap m;
    m.id = "identity";
    m.kind = SlotKind::Scalar;
    m.param_arity = 0;
    m.rule = [](const OptRat&, const OptRat&, const SlotValue& x, const SlotValue& y) {
        return SlotPair{x, y};
    };
    return m;
}

YbMap make_fv_negated_map() {
    YbMap m;
    m.id = "fv-negated";
    m.kind = SlotKind::Scalar;
    m.param_arity = 1;
    m.rule = [](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        auto [u, v] = fv_negated(param_or_throw(l, "fv-negated"), param_or_throw(mu, "fv-negated"),
                                 std::get<Rat>(x), std::get<Rat>(y));
        return SlotPair{u, v};
    };
    return m;
}

TupleSampler scalar_sampler() {
    TupleSampler s;
    s.param_arity = 1;
    s.value = [](SplitMix64& rng) { return SlotValue{sample_rat(rng)}; };
    s.params = [](SplitMix64& rng, int n) { return sample_params_plain(rng, n); };
    return s;
}

TupleSampler unparameterized_scalar_sampler() {
    TupleSampler s;
    s.param_arity = 0;
    s.value = [](SplitMix64& rng) { return SlotValue{sample_rat(rng)}; };
    return s;
}

LaxPack direct_pack(const LaxFamily& fam) {
    return LaxPack{fam, fam, fam, false};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    {
        CatalogEntry e;
        e.id = "adler";
        e.summary = "Adler map on scalars f with slot parameters beta";
        e.kind = SlotKind::Scalar;
        e.param_arity = 1;
        e.yang_baxter = true;
        e.reversible = true;
        e.param_note = "any rationals; singular when f1 + f2 = 0";
        e.make = [](const CatalogConfig&) { return make_adler_map(); };
        e.sampler = [](const CatalogConfig&) { return scalar_sampler(); };
        e.lax = [](const CatalogConfig&) { return direct_pack(adler_lax_family()); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "soliton-rank1";
        e.summary = "two-soliton polarization interaction on (xi, eta) pairs";
        e.kind = SlotKind::VectorCovector;
        e.param_arity = 1;
        e.yang_baxter = true;
        e.reversible = true; // and moreover R_21 = R
        e.param_note = "nonzero, pairwise distinct in absolute value";
        e.uses_dim = true;
        e.make = [](const CatalogConfig&) { return make_soliton_map(); };
        e.sampler = [](const CatalogConfig& c) {
            TupleSampler s;
            s.param_arity = 1;
            s.value = [dim = c.dim](SplitMix64& rng) {
                return SlotValue{sample_vector_covector(rng, dim)};
            };
            s.params = [](SplitMix64& rng, int n) {
                return sample_params_nonzero_distinct_abs(rng, n);
            };
            return s;
        };
        e.lax = [](const CatalogConfig& c) { return direct_pack(soliton_lax_family(c.dim)); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "grassmann";
        e.summary = "projector map on complementary (K, L) pairs";
        e.kind = SlotKind::ProjectorPair;
        e.param_arity = 1;
        e.yang_baxter = true;
        e.reversible = true;
        e.param_note = "nonzero, lambda_i != +-lambda_j";
        e.uses_dim = true;
        e.uses_rank = true;
        e.make = [](const CatalogConfig&) { return make_grassmann_map(); };
        e.sampler = [](const CatalogConfig& c) {
            TupleSampler s;
            s.param_arity = 1;
            s.value = [dim = c.dim, rank = c.rank](SplitMix64& rng) {
                return SlotValue{sample_projector_pair(rng, dim, rank)};
            };
            s.params = [](SplitMix64& rng, int n) {
                return sample_params_nonzero_distinct_abs(rng, n);
            };
            return s;
        };
        e.lax = [](const CatalogConfig& c) { return direct_pack(projector_lax_family(c.dim)); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "grassmann-sa";
        e.summary = "image-only projector map, kernels = orthogonal complements";
        e.kind = SlotKind::ProjectorPair;
        e.param_arity = 1;
        e.yang_baxter = true;
        e.reversible = true;
        e.param_note = "nonzero, lambda_i != +-lambda_j";
        e.uses_dim = true;
        e.uses_rank = true;
        e.make = [](const CatalogConfig&) { return make_grassmann_sa_map(); };
        e.sampler = [](const CatalogConfig& c) {
            TupleSampler s;
            s.param_arity = 1;
            s.value = [dim = c.dim, rank = c.rank](SplitMix64& rng) {
                return SlotValue{sample_selfadjoint_pair(rng, dim, rank)};
            };
            s.params = [](SplitMix64& rng, int n) {
                return sample_params_nonzero_distinct_abs(rng, n);
            };
            return s;
        };
        e.lax = [](const CatalogConfig& c) { return direct_pack(projector_lax_family(c.dim)); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "crystal";
        e.summary = "geometric-crystal map on pairs of n-tuples, parameterless";
        e.kind = SlotKind::Vector;
        e.param_arity = 0;
        e.yang_baxter = true;
        e.reversible = std::nullopt; // not asserted; reported empirically
        e.param_note = "parameters derived: lambda = prod x_k, mu = prod y_k";
        e.uses_dim = true;
        e.make = [](const CatalogConfig&) { return make_crystal_map(); };
        e.sampler = [](const CatalogConfig& c) {
            TupleSampler s;
            s.param_arity = 0;
            s.value = [dim = c.dim](SplitMix64& rng) {
                return SlotValue{sample_vec_nonzero_coords(rng, dim)};
            };
            return s;
        };
        e.lax = [](const CatalogConfig& c) {
            LaxPack p;
            p.mono = crystal_lax_family(c.dim, CrystalSide::B);
            p.lax_a = crystal_lax_family(c.dim, CrystalSide::A);
            p.lax_b = crystal_lax_family(c.dim, CrystalSide::B);
            p.crystal_embedding = true;
            return p;
        };
        cat.push_back(e);
    }

    const struct {
        QuadriForm form;
        const char* note;
    } forms[] = {
        {QuadriForm::FI, "parameters avoid 0 and 1"},
        {QuadriForm::FII, "parameters nonzero"},
        {QuadriForm::FIII, "parameters nonzero"},
        {QuadriForm::FIV, "any rationals; singular when x = y"},
        {QuadriForm::FV, "any rationals; singular when x = y"},
    };
    for (const auto& f : forms) {
        CatalogEntry e;
        e.id = to_string(f.form);
        e.summary = "quadrirational normal form " + e.id;
        e.kind = SlotKind::Scalar;
        e.param_arity = 1;
        e.yang_baxter = true;
        e.reversible = true;
        e.param_note = f.note;
        e.make = [form = f.form](const CatalogConfig&) { return quadri_form_to_map(form); };
        e.sampler = [form = f.form](const CatalogConfig&) {
            TupleSampler s;
            s.param_arity = 1;
            s.value = [](SplitMix64& rng) { return SlotValue{sample_rat(rng)}; };
            s.params = [form](SplitMix64& rng, int n) {
                switch (form) {
                    case QuadriForm::FI:
                        return sample_params_avoiding(rng, n, {Rat(0), Rat(1)});
                    case QuadriForm::FII:
                    case QuadriForm::FIII:
                        return sample_params_avoiding(rng, n, {Rat(0)});
                    default:
                        return sample_params_plain(rng, n);
                }
            };
            return s;
        };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "fv-negated";
        e.summary = "F_V with negated inputs: quadrirational but not Yang-Baxter";
        e.kind = SlotKind::Scalar;
        e.param_arity = 1;
        e.yang_baxter = false;
        e.reversible = std::nullopt;
        e.param_note = "any rationals; singular when x = y";
        e.make = [](const CatalogConfig&) { return make_fv_negated_map(); };
        e.sampler = [](const CatalogConfig&) { return scalar_sampler(); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "swap";
        e.summary = "slot swap P(x, y) = (y, x)";
        e.kind = SlotKind::Scalar;
        e.param_arity = 0;
        e.yang_baxter = true;
        e.reversible = true;
        e.make = [](const CatalogConfig&) { return make_swap_map(); };
        e.sampler = [](const CatalogConfig&) { return unparameterized_scalar_sampler(); };
        cat.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "identity";
        e.summary = "identity map";
        e.kind = SlotKind::Scalar;
        e.param_arity = 0;
        e.yang_baxter = true;
        e.reversible = true;
        e.make = [](const CatalogConfig&) { return make_identity_map(); };
        e.sampler = [](const CatalogConfig&) { return unparameterized_scalar_sampler(); };
        cat.push_back(e);
    }
    return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry* find_map(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

YbMap quadri_to_map(const QuadriMap& q, const std::string& id) {
    q.validate();
    YbMap m;
    m.id = id;
    m.kind = SlotKind::Scalar;
    m.param_arity = 0;
    m.rule = [q](const OptRat&, const OptRat&, const SlotValue& x, const SlotValue& y) {
        auto [u, v] = quadri_apply(q, std::get<Rat>(x), std::get<Rat>(y));
        return SlotPair{u, v};
    };
    return m;
}

YbMap quadri_form_to_map(QuadriForm form) {
    YbMap m;
    m.id = to_string(form);
    m.kind = SlotKind::Scalar;
    m.param_arity = 1;
    m.rule = [form](const OptRat& l, const OptRat& mu, const SlotValue& x, const SlotValue& y) {
        auto [u, v] = quadrirational(form, param_or_throw(l, "quadrirational"),
                                     param_or_throw(mu, "quadrirational"), std::get<Rat>(x),
                                     std::get<Rat>(y));
        return SlotPair{u, v};
    };
    return m;
}

CatalogEntry custom_entry(const QuadriMap& q, const std::string& id) {
    CatalogEntry e;
    e.id = id;
    e.summary = "custom quadrirational map from coefficient file";
    e.kind = SlotKind::Scalar;
    e.param_arity = 0;
    e.make = [q, id](const CatalogConfig&) { return quadri_to_map(q, id); };
    e.sampler = [](const CatalogConfig&) { return unparameterized_scalar_sampler(); };
    return e;
}

YbMap conjugate_map(const YbMap& base, const Moebius& sx, const Moebius& sy, const Moebius& su,
                    const Moebius& sv) {
    if (base.kind != SlotKind::Scalar) throw Error("conjugate_map: scalar slots required");
    YbMap m = base;
    m.id = base.id + "-conjugated";
    m.rule = [base, sx, sy, su, sv](const OptRat& l, const OptRat& mu, const SlotValue& x,
                                    const SlotValue& y) {
        SlotValue xs = sx(std::get<Rat>(x));
        SlotValue ys = sy(std::get<Rat>(y));
        auto [u, v] = apply(base, l, mu, xs, ys);
        return SlotPair{su(std::get<Rat>(u)), sv(std::get<Rat>(v))};
    };
    m.in_domain = nullptr; // the rule throws where the composite is singular
    return m;
}

YbMap conjugate_map_diagonal(const YbMap& base, const Moebius& m) {
    Moebius mi = m.inverse();
    YbMap out = conjugate_map(base, mi, mi, m, m);
    out.id = base.id + "-diag";
    return out;
}

} // namespace ybx
