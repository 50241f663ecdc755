// Induction of precosheaves and interior algebras along a functor that
// is injective on objects and surjective on morphisms: the invariant
// subalgebras M_S(x), Turull induction, the monoid of identity-class
// sums, Puig induction via quotient-then-fix, and the graded isomorphism
// connecting the two inductions.
#pragma once

#include "catalg/algebra.hpp"
#include "catalg/constructions.hpp"
#include "catalg/fincat.hpp"
#include "catalg/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catalg {

/// Everything the induction pipeline needs about a functor s: D -> C and
/// a precosheaf S on D, precomputed once. Immutable after construction.
template <typename K>
struct InductionContext {
    Functor F;        // injective on objects, surjective on morphisms
    Precosheaf<K> S;  // precosheaf on F.source
    MorPartition partition;
    std::vector<std::vector<std::size_t>> id_classes; // source object -> Id_x
    bool condition_423 = false;

    std::vector<std::size_t> obj_preimage;               // target object -> source object
    std::vector<std::vector<std::size_t>> mor_preimages; // target morphism -> fibers

    const FinCategory& D() const { return F.source; }
    const FinCategory& C() const { return F.target; }
};

template <typename K>
InductionContext<K> make_induction_context(const Functor& F, const Precosheaf<K>& S) {
    require_induction_profile(F);
    InductionContext<K> ctx;
    ctx.F = F;
    ctx.S = S;
    ctx.partition = sim_partition(F);
    for (std::size_t x = 0; x < F.source.num_objects(); ++x)
        ctx.id_classes.push_back(id_class(F, x));
    ctx.condition_423 = check_condition_423(F).holds;

    ctx.obj_preimage.assign(F.target.num_objects(), F.source.num_objects());
    for (std::size_t x = 0; x < F.source.num_objects(); ++x)
        ctx.obj_preimage[F.obj_map[x]] = x;
    ctx.mor_preimages.assign(F.target.num_morphisms(), {});
    for (std::size_t f = 0; f < F.source.num_morphisms(); ++f)
        ctx.mor_preimages[F.mor_map[f]].push_back(f);
    return ctx;
}

/// M_S(x): elements of S(x) on which equivalent morphisms out of x act
/// identically, computed as the kernel of the stacked difference maps.
/// Under the class-equality condition the fixed-point description through
/// Id_x must agree, and the two subspaces are compared.
template <typename K>
Subspace<K> ms_subspace(const InductionContext<K>& ctx, std::size_t x) {
    const auto& D = ctx.D();
    std::size_t sx = ctx.S.obj_alg[x].dim();
    std::vector<Vec<K>> constraint_rows;
    for (std::size_t f = 0; f < D.num_morphisms(); ++f) {
        if (D.dom(f) != x) continue;
        for (auto g : ctx.partition.classes[ctx.partition.class_of[f]]) {
            if (g == f) continue;
            Matrix<K> diff = ctx.S.mor_map[f] - ctx.S.mor_map[g];
            for (std::size_t i = 0; i < diff.rows(); ++i) {
                Vec<K> row(sx);
                for (std::size_t j = 0; j < sx; ++j) row[j] = diff(i, j);
                constraint_rows.push_back(std::move(row));
            }
        }
    }
    Matrix<K> stacked(constraint_rows.size(), sx);
    for (std::size_t i = 0; i < constraint_rows.size(); ++i)
        for (std::size_t j = 0; j < sx; ++j) stacked(i, j) = constraint_rows[i][j];
    Subspace<K> result = kernel(stacked);

    if (ctx.condition_423) {
        std::vector<Matrix<K>> id_actions;
        for (auto fx : ctx.id_classes[x]) id_actions.push_back(ctx.S.mor_map[fx]);
        Subspace<K> fixed = simultaneous_fixed_space(id_actions, sx);
        if (!(fixed == result))
            throw std::logic_error(
                "ms_subspace: kernel and fixed-point descriptions disagree at object " +
                D.obj_id(x));
    }
    return result;
}

/// Structure constants of M_S(x) in its echelon basis. Signals if the
/// subspace misses the unit or is not closed under products, which would
/// contradict it being a subalgebra.
template <typename K>
FinAlgebra<K> ms_algebra(const InductionContext<K>& ctx, std::size_t x,
                         const Subspace<K>& sub) {
    const auto& big = ctx.S.obj_alg[x];
    FinAlgebra<K> a;
    auto unit_coords = sub.coordinates(big.unit);
    if (!unit_coords)
        throw std::logic_error("ms_algebra: unit of S(" + ctx.D().obj_id(x) +
                               ") is not in the invariant subspace");
    a.unit = *unit_coords;
    std::size_t d = sub.dim();
    for (std::size_t i = 0; i < d; ++i)
        a.basis_labels.push_back("m" + std::to_string(i + 1) + "@" + ctx.D().obj_id(x));
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> prod = big.multiply(sub.basis()[i], sub.basis()[j]);
            auto coords = sub.coordinates(prod);
            if (!coords)
                throw std::logic_error("ms_algebra: invariant subspace at " +
                                       ctx.D().obj_id(x) + " is not closed under products");
            a.struct_consts[i][j] = *coords;
        }
    return a;
}

template <typename K>
FinAlgebra<K> ms_algebra(const InductionContext<K>& ctx, std::size_t x) {
    return ms_algebra(ctx, x, ms_subspace(ctx, x));
}

/// The module of all invariant blocks with the target-category action: a
/// morphism g acts through any preimage on the dom block. All preimages
/// must agree on the invariant subspace; a disagreement is signalled.
template <typename K>
CatModule<K> mbar_module(const InductionContext<K>& ctx) {
    const auto& C = ctx.C();
    const auto& D = ctx.D();
    std::vector<Subspace<K>> subs;
    std::vector<std::size_t> offset(1, 0);
    for (std::size_t x = 0; x < D.num_objects(); ++x) {
        subs.push_back(ms_subspace(ctx, x));
        offset.push_back(offset.back() + subs.back().dim());
    }
    CatModule<K> m;
    m.category = C;
    m.dim = offset.back();
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
        Matrix<K> act(m.dim, m.dim);
        const auto& preimages = ctx.mor_preimages[g];
        if (preimages.empty())
            throw std::logic_error("mbar_module: morphism without preimage");
        std::size_t x = D.dom(preimages.front());
        std::size_t y = D.cod(preimages.front());
        std::optional<Matrix<K>> restricted;
        for (auto f : preimages) {
            Matrix<K> cur(subs[y].dim(), subs[x].dim());
            for (std::size_t j = 0; j < subs[x].dim(); ++j) {
                Vec<K> img = ctx.S.mor_map[f].apply(subs[x].basis()[j]);
                auto coords = subs[y].coordinates(img);
                if (!coords)
                    throw std::logic_error("mbar_module: image of invariant vector under " +
                                           D.mor_id(f) + " leaves the invariant subspace");
                cur.set_col(j, *coords);
            }
            if (restricted && !(*restricted == cur))
                throw std::logic_error("mbar_module: preimages of " + C.mor_id(g) +
                                       " disagree on the invariant subspace");
            restricted = std::move(cur);
        }
        for (std::size_t i = 0; i < restricted->rows(); ++i)
            for (std::size_t j = 0; j < restricted->cols(); ++j)
                act(offset[y] + i, offset[x] + j) = (*restricted)(i, j);
        m.action.push_back(std::move(act));
    }
    return m;
}

/// The induced precosheaf on the target category together with the
/// invariant subspaces it came from.
template <typename K>
struct TurullInduced {
    Precosheaf<K> precosheaf;            // on the target category
    std::vector<Subspace<K>> subspaces;  // per target object, inside S(preimage)
};

template <typename K>
TurullInduced<K> turull_induce(const InductionContext<K>& ctx) {
    const auto& C = ctx.C();
    const auto& D = ctx.D();
    TurullInduced<K> out;
    out.precosheaf.category = C;

    std::vector<Subspace<K>> by_source_obj;
    for (std::size_t x = 0; x < D.num_objects(); ++x)
        by_source_obj.push_back(ms_subspace(ctx, x));

    for (std::size_t xp = 0; xp < C.num_objects(); ++xp) {
        std::size_t x = ctx.obj_preimage[xp];
        out.subspaces.push_back(by_source_obj[x]);
        out.precosheaf.obj_alg.push_back(ms_algebra(ctx, x, by_source_obj[x]));
    }
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
        const auto& preimages = ctx.mor_preimages[g];
        if (preimages.empty())
            throw std::logic_error("turull_induce: morphism without preimage");
        std::size_t xp = C.dom(g), yp = C.cod(g);
        const auto& src = out.subspaces[xp];
        const auto& dst = out.subspaces[yp];
        std::optional<Matrix<K>> restricted;
        for (auto f : preimages) {
            Matrix<K> cur(dst.dim(), src.dim());
            for (std::size_t j = 0; j < src.dim(); ++j) {
                Vec<K> img = ctx.S.mor_map[f].apply(src.basis()[j]);
                auto coords = dst.coordinates(img);
                if (!coords)
                    throw std::logic_error(
                        "turull_induce: restriction of " + D.mor_id(f) +
                        " does not land in the invariant subspace of the codomain");
                cur.set_col(j, *coords);
            }
            if (restricted && !(*restricted == cur))
                throw std::logic_error("turull_induce: preimages of " + C.mor_id(g) +
                                       " disagree on the invariant subspace");
            restricted = std::move(cur);
        }
        out.precosheaf.mor_map.push_back(std::move(*restricted));
    }
    auto violations = validate_precosheaf(out.precosheaf);
    if (!violations.empty())
        throw std::logic_error("turull_induce: induced data is not a precosheaf: " +
                               violations.front());
    return out;
}

/// The monoid of sums with one Id_x member per object, inside the
/// category algebra of the source.
template <typename K>
struct SMonoid {
    std::vector<std::vector<std::size_t>> choices; // element -> morphism per object
    std::vector<Vec<K>> elements;                  // coordinate vectors in kD
    std::vector<std::vector<std::size_t>> mult_table;
    std::size_t neutral = 0;
};

template <typename K>
SMonoid<K> s_monoid(const InductionContext<K>& ctx) {
    const auto& D = ctx.D();
    SMonoid<K> out;
    std::vector<std::size_t> pick(D.num_objects(), 0);
    bool running = true;
    while (running) {
        std::vector<std::size_t> choice;
        Vec<K> v = zero_vec<K>(D.num_morphisms());
        for (std::size_t x = 0; x < D.num_objects(); ++x) {
            std::size_t f = ctx.id_classes[x][pick[x]];
            choice.push_back(f);
            v[f] += K(1);
        }
        out.choices.push_back(std::move(choice));
        out.elements.push_back(std::move(v));
        std::size_t x = pick.size();
        running = false;
        while (x-- > 0) {
            if (++pick[x] < ctx.id_classes[x].size()) { running = true; break; }
            pick[x] = 0;
        }
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        bool all_id = true;
        for (std::size_t x = 0; x < D.num_objects(); ++x)
            if (out.choices[i][x] != D.identities[x]) all_id = false;
        if (all_id) out.neutral = i;
    }

    FinAlgebra<K> kd = category_algebra<K>(D);
    out.mult_table.assign(out.elements.size(),
                          std::vector<std::size_t>(out.elements.size(), 0));
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        for (std::size_t j = 0; j < out.elements.size(); ++j) {
            Vec<K> prod = kd.multiply(out.elements[i], out.elements[j]);
            bool found = false;
            for (std::size_t t = 0; t < out.elements.size(); ++t)
                if (prod == out.elements[t]) {
                    out.mult_table[i][j] = t;
                    found = true;
                    break;
                }
            if (!found)
                throw std::logic_error(
                    "s_monoid: a product of identity-class sums left the monoid");
        }
    // neutrality of the all-identities sum
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        if (out.mult_table[out.neutral][i] != i || out.mult_table[i][out.neutral] != i)
            throw std::logic_error("s_monoid: the identity sum is not neutral");
    return out;
}

/// The skew category algebra as an interior algebra over the category
/// algebra of its base, through f -> (f, unit of S(cod f)).
template <typename K>
InteriorAlgebra<K> skew_as_interior(const Precosheaf<K>& s) {
    const auto& c = s.category;
    GradedAlgebra<K> skew = skew_category_algebra(s);
    auto sb = skew_basis(s);

    InteriorAlgebra<K> out;
    out.base = category_algebra<K>(c);
    out.structural = Matrix<K>(skew.algebra.dim(), c.num_morphisms());
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        const Vec<K>& u = s.obj_alg[c.cod(f)].unit;
        for (std::size_t i = 0; i < u.size(); ++i)
            out.structural(sb.index(f, i), f) = u[i];
    }
    out.algebra = std::move(skew.algebra);

    AlgebraHom<K> h{&out.base, &out.algebra, out.structural};
    auto violations = validate_hom(h);
    if (!violations.empty())
        throw std::logic_error("skew_as_interior: structural map is not a homomorphism: " +
                               violations.front());
    // the structural map is degree-preserving by construction; assert it
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        Vec<K> img = out.structural.col(f);
        for (std::size_t b = 0; b < img.size(); ++b)
            if (!(img[b] == K(0)) && skew.degree[b] != f)
                throw std::logic_error("skew_as_interior: structural map breaks the grading");
    }
    return out;
}

/// Result of Puig induction: the fixed points of the quotient of the
/// interior algebra by the monoid relations, with its structural map
/// from the target category algebra.
template <typename K>
struct PuigInduced {
    QuotientMap<K> quotient;     // C -> Q and back
    Subspace<K> fixed;           // inside Q
    FinAlgebra<K> algebra;       // structure constants in the fixed basis
    Matrix<K> structural;        // |Mor C| -> fixed basis ("tau bar")

    PuigInduced() : fixed(0) {}
};

/// Quotient-then-fix, refusing to run when the class-equality condition
/// fails (the construction is only meaningful under it). Every
/// well-definedness step is asserted: the relation span is stable under
/// right multiplication, products of fixed classes do not depend on the
/// chosen representatives, and the structural map does not depend on the
/// chosen preimages.
template <typename K>
PuigInduced<K> puig_induce(const InductionContext<K>& ctx, const InteriorAlgebra<K>& ia) {
    if (!ctx.condition_423)
        throw std::invalid_argument(
            "puig_induce: the functor violates the class-equality condition");
    const auto& C_alg = ia.algebra;
    const auto& C = ctx.C();
    std::size_t cdim = C_alg.dim();
    SMonoid<K> monoid = s_monoid(ctx);

    std::vector<Vec<K>> sigma_s;
    for (const auto& s : monoid.elements) sigma_s.push_back(ia.structural.apply(s));

    // relation span: sigma(s) c - c over all monoid elements and basis c
    std::vector<Vec<K>> relations;
    for (const auto& ss : sigma_s)
        for (std::size_t j = 0; j < cdim; ++j) {
            Vec<K> rel = C_alg.multiply(ss, unit_vec<K>(cdim, j));
            rel[j] -= K(1);
            if (!is_zero_vec(rel)) relations.push_back(std::move(rel));
        }
    Subspace<K> N(cdim, std::move(relations));

    PuigInduced<K> out;
    out.quotient = quotient_map(cdim, N);
    const Matrix<K>& P = out.quotient.proj;
    const Matrix<K>& J = out.quotient.section;
    std::size_t qdim = P.rows();

    // the relation span must absorb right multiplication by anything,
    // otherwise nothing downstream is well-defined
    for (const auto& n : N.basis())
        for (std::size_t j = 0; j < cdim; ++j) {
            Vec<K> img = C_alg.multiply(n, unit_vec<K>(cdim, j));
            if (!is_zero_vec(P.apply(img)))
                throw std::logic_error(
                    "puig_induce: relation span is not a right ideal direction");
        }

    std::vector<Matrix<K>> right_actions;
    for (const auto& ss : sigma_s) {
        // well-definedness on the quotient: right multiplication must map
        // the relation span into itself
        Matrix<K> rm = C_alg.right_mult(ss);
        for (const auto& n : N.basis())
            if (!is_zero_vec(P.apply(rm.apply(n))))
                throw std::logic_error(
                    "puig_induce: right action does not descend to the quotient");
        right_actions.push_back(P * rm * J);
    }
    out.fixed = simultaneous_fixed_space(right_actions, qdim);

    // induced algebra on the fixed classes
    std::size_t d = out.fixed.dim();
    FinAlgebra<K>& a = out.algebra;
    for (std::size_t i = 0; i < d; ++i) a.basis_labels.push_back("q" + std::to_string(i + 1));
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t i = 0; i < d; ++i) {
        Vec<K> lift_i = J.apply(out.fixed.basis()[i]);
        // section independence: (J(u) sigma(s) - J(u)) c must stay in the
        // relation span for every fixed basis vector u
        for (std::size_t si = 0; si < sigma_s.size(); ++si) {
            Vec<K> drift = C_alg.multiply(lift_i, sigma_s[si]);
            for (std::size_t t = 0; t < cdim; ++t) drift[t] -= lift_i[t];
            for (std::size_t j = 0; j < cdim; ++j)
                if (!is_zero_vec(P.apply(C_alg.multiply(drift, unit_vec<K>(cdim, j)))))
                    throw std::logic_error(
                        "puig_induce: product depends on the chosen section");
        }
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> lift_j = J.apply(out.fixed.basis()[j]);
            Vec<K> prod = P.apply(C_alg.multiply(lift_i, lift_j));
            auto coords = out.fixed.coordinates(prod);
            if (!coords)
                throw std::logic_error(
                    "puig_induce: product of fixed classes is not fixed");
            a.struct_consts[i][j] = *coords;
        }
    }
    {
        Vec<K> unit_class = P.apply(C_alg.unit);
        auto coords = out.fixed.coordinates(unit_class);
        if (!coords)
            throw std::logic_error("puig_induce: the class of the unit is not fixed");
        a.unit = *coords;
    }
    auto violations = validate_algebra(a);
    if (!violations.empty())
        throw std::logic_error("puig_induce: induced product is not an algebra: " +
                               violations.front());

    // structural map from the target category algebra, through preimages
    out.structural = Matrix<K>(d, C.num_morphisms());
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
        std::optional<Vec<K>> cls;
        for (auto f : ctx.mor_preimages[g]) {
            Vec<K> img = P.apply(ia.structural.col(f));
            auto coords = out.fixed.coordinates(img);
            if (!coords)
                throw std::logic_error(
                    "puig_induce: structural image of " + ctx.D().mor_id(f) + " is not fixed");
            if (cls && !(*cls == *coords))
                throw std::logic_error("puig_induce: structural map depends on the preimage of " +
                                       C.mor_id(g));
            cls = std::move(coords);
        }
        out.structural.set_col(g, *cls);
    }
    {
        FinAlgebra<K> kc = category_algebra<K>(C);
        AlgebraHom<K> h{&kc, &a, out.structural};
        auto hom_violations = validate_hom(h);
        if (!hom_violations.empty())
            throw std::logic_error(
                "puig_induce: structural map is not a homomorphism: " +
                hom_violations.front());
    }
    return out;
}

/// For every morphism f and monoid element s, searches exhaustively for
/// s' with s * f = f * s' in the category algebra of the source. Returns
/// the witness index per (f, s), or signals the pair without one.
template <typename K>
std::vector<std::vector<std::size_t>> commutation_witnesses(const InductionContext<K>& ctx,
                                                            const SMonoid<K>& monoid) {
    const auto& D = ctx.D();
    FinAlgebra<K> kd = category_algebra<K>(D);
    std::vector<std::vector<std::size_t>> witness(
        D.num_morphisms(), std::vector<std::size_t>(monoid.elements.size()));
    for (std::size_t f = 0; f < D.num_morphisms(); ++f) {
        Vec<K> ef = unit_vec<K>(kd.dim(), f);
        for (std::size_t si = 0; si < monoid.elements.size(); ++si) {
            Vec<K> lhs = kd.multiply(monoid.elements[si], ef);
            bool found = false;
            for (std::size_t ti = 0; ti < monoid.elements.size(); ++ti)
                if (lhs == kd.multiply(ef, monoid.elements[ti])) {
                    witness[f][si] = ti;
                    found = true;
                    break;
                }
            if (!found)
                throw std::logic_error("commutation_witnesses: no witness for " +
                                       D.mor_id(f) + " and monoid element " +
                                       std::to_string(si));
        }
    }
    return witness;
}

struct Thm13Report {
    bool is_algebra_iso = false;
    bool is_graded = false;
    bool is_interior_compatible = false;
    std::size_t dim_left = 0;  // skew algebra of the induced precosheaf
    std::size_t dim_right = 0; // Puig induction of the skew algebra
    std::vector<std::string> failures;
};

template <typename K>
struct Thm13Result {
    Thm13Report report;
    Matrix<K> psi;
};

/// Builds both sides of the graded isomorphism and certifies it: the map
/// sending an invariant element in degree g' to the class of the same
/// element placed in a preimage degree is unital, multiplicative,
/// bijective, degree-compatible and intertwines the structural maps.
template <typename K>
Thm13Result<K> thm13_isomorphism(const InductionContext<K>& ctx) {
    Thm13Result<K> result;
    auto& rep = result.report;
    const auto& C = ctx.C();

    TurullInduced<K> ti = turull_induce(ctx);
    GradedAlgebra<K> left = skew_category_algebra(ti.precosheaf);
    InteriorAlgebra<K> left_interior = skew_as_interior(ti.precosheaf);
    auto left_basis = skew_basis(ti.precosheaf);

    InteriorAlgebra<K> ia = skew_as_interior(ctx.S);
    PuigInduced<K> right = puig_induce(ctx, ia);
    auto skew_d_basis = skew_basis(ctx.S);
    std::size_t skew_d_dim = skew_d_basis.dim();

    rep.dim_left = left.algebra.dim();
    rep.dim_right = right.algebra.dim();
    if (rep.dim_left != rep.dim_right)
        rep.failures.push_back("dimension mismatch between the two inductions");

    // psi on the basis of the left side: (g', j-th invariant vector)
    result.psi = Matrix<K>(rep.dim_right, rep.dim_left);
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
        const auto& sub = ti.subspaces[C.cod(g)];
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            std::optional<Vec<K>> cls;
            for (auto f : ctx.mor_preimages[g]) {
                // place the invariant vector into the block of degree f
                Vec<K> elem = zero_vec<K>(skew_d_dim);
                const Vec<K>& m = sub.basis()[j];
                for (std::size_t t = 0; t < m.size(); ++t)
                    elem[skew_d_basis.index(f, t)] = m[t];
                Vec<K> img = right.quotient.proj.apply(elem);
                auto coords = right.fixed.coordinates(img);
                if (!coords) {
                    rep.failures.push_back("image of a homogeneous basis element of degree " +
                                           C.mor_id(g) + " is not a fixed class");
                    continue;
                }
                if (cls && !(*cls == *coords))
                    rep.failures.push_back("map depends on the preimage choice at " +
                                           C.mor_id(g));
                cls = std::move(coords);
            }
            if (cls) result.psi.set_col(left_basis.index(g, j), *cls);
        }
    }

    bool unital = result.psi.apply(left.algebra.unit) == right.algebra.unit;
    if (!unital) rep.failures.push_back("map is not unital");
    bool multiplicative = true;
    for (std::size_t i = 0; i < rep.dim_left && multiplicative; ++i)
        for (std::size_t j = 0; j < rep.dim_left; ++j) {
            Vec<K> lhs = result.psi.apply(left.algebra.struct_consts[i][j]);
            Vec<K> rhs = right.algebra.multiply(result.psi.col(i), result.psi.col(j));
            if (lhs != rhs) {
                rep.failures.push_back("map is not multiplicative on (" +
                                       left.algebra.basis_labels[i] + ", " +
                                       left.algebra.basis_labels[j] + ")");
                multiplicative = false;
                break;
            }
        }
    bool bijective = rep.dim_left == rep.dim_right && rank(result.psi) == rep.dim_left;
    if (!bijective) rep.failures.push_back("map is not bijective");
    rep.is_algebra_iso = unital && multiplicative && bijective && rep.failures.empty();

    // degree compatibility: the g'-homogeneous part of the right side is
    // the projected span of the blocks of all preimages of g'
    rep.is_graded = true;
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
        std::vector<Vec<K>> span;
        for (auto f : ctx.mor_preimages[g]) {
            std::size_t dim_f = ctx.S.obj_alg[ctx.D().cod(f)].dim();
            for (std::size_t t = 0; t < dim_f; ++t)
                span.push_back(right.quotient.proj.apply(
                    unit_vec<K>(skew_d_dim, skew_d_basis.index(f, t))));
        }
        Subspace<K> homog(right.quotient.proj.rows(), std::move(span));
        const auto& sub = ti.subspaces[C.cod(g)];
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            Vec<K> img_q = right.fixed.from_coordinates(
                result.psi.col(left_basis.index(g, j)));
            if (!homog.contains(img_q)) {
                rep.is_graded = false;
                rep.failures.push_back("degree " + C.mor_id(g) +
                                       " is not preserved by the map");
            }
        }
    }

    rep.is_interior_compatible =
        result.psi * left_interior.structural == right.structural;
    if (!rep.is_interior_compatible)
        rep.failures.push_back("map does not intertwine the structural maps");
    return result;
}

struct ThetaReport {
    std::size_t dim_fixed_tensor = 0;
    std::size_t dim_indp = 0;
    bool dims_agree = false;
    bool closing_identity_holds = false; // fixed tensor space = sum of graded blocks
    bool equivariant = false;
    bool bijective_on_fixed = false;
    std::vector<std::string> failures;
};

/// Cross-checks the two fixed-point descriptions: the monoid-fixed part
/// of (direct sum of the object spaces) tensor (target category algebra)
/// must coincide with the blockwise invariant spaces in the codomain
/// positions, and carry the same dimension as Puig induction; the
/// comparison map from the invariant skew elements is checked to be
/// equivariant and bijective onto it.
template <typename K>
ThetaReport theta_check(const InductionContext<K>& ctx) {
    ThetaReport rep;
    const auto& C = ctx.C();
    const auto& D = ctx.D();
    if (!ctx.condition_423)
        throw std::invalid_argument("theta_check: the class-equality condition fails");

    // M_S (x) kC with basis (object block coordinate, target morphism)
    std::vector<std::size_t> offset(1, 0);
    for (std::size_t x = 0; x < D.num_objects(); ++x)
        offset.push_back(offset.back() + ctx.S.obj_alg[x].dim());
    std::size_t ms_dim = offset.back();
    std::size_t cm = C.num_morphisms();
    std::size_t tdim = ms_dim * cm;
    auto tindex = [&](std::size_t block_coord, std::size_t g) {
        return block_coord * cm + g;
    };

    SMonoid<K> monoid = s_monoid(ctx);
    FinAlgebra<K> kc = category_algebra<K>(C);

    // right action of a monoid element: apply S(g_x) on the block of x
    // and left-compose the morphism factor with the image identity of x
    std::vector<Matrix<K>> actions;
    for (const auto& choice : monoid.choices) {
        Matrix<K> act(tdim, tdim);
        for (std::size_t x = 0; x < D.num_objects(); ++x) {
            std::size_t gx = choice[x];
            const Matrix<K>& sg = ctx.S.mor_map[gx];
            std::size_t id_img = C.identities[ctx.F.obj_map[x]];
            for (std::size_t g = 0; g < cm; ++g) {
                auto comp = C.compose(id_img, g); // zero unless cod g = image of x
                if (!comp) continue;
                for (std::size_t i = 0; i < sg.rows(); ++i)
                    for (std::size_t j = 0; j < sg.cols(); ++j)
                        act(tindex(offset[x] + i, *comp), tindex(offset[x] + j, g)) +=
                            sg(i, j);
            }
        }
        actions.push_back(std::move(act));
    }
    Subspace<K> fixed_tensor = simultaneous_fixed_space(actions, tdim);
    rep.dim_fixed_tensor = fixed_tensor.dim();

    // expected description: invariant vectors sitting in the codomain
    // block of their morphism
    std::vector<Subspace<K>> subs;
    for (std::size_t x = 0; x < D.num_objects(); ++x) subs.push_back(ms_subspace(ctx, x));
    std::vector<Vec<K>> expected_span;
    for (std::size_t g = 0; g < cm; ++g) {
        std::size_t x = ctx.obj_preimage[C.cod(g)];
        for (const auto& m : subs[x].basis()) {
            Vec<K> v = zero_vec<K>(tdim);
            for (std::size_t t = 0; t < m.size(); ++t) v[tindex(offset[x] + t, g)] = m[t];
            expected_span.push_back(std::move(v));
        }
    }
    Subspace<K> expected(tdim, std::move(expected_span));
    rep.closing_identity_holds = expected == fixed_tensor;
    if (!rep.closing_identity_holds)
        rep.failures.push_back("fixed tensor space differs from the graded description");

    InteriorAlgebra<K> ia = skew_as_interior(ctx.S);
    PuigInduced<K> right = puig_induce(ctx, ia);
    rep.dim_indp = right.algebra.dim();
    rep.dims_agree = rep.dim_indp == rep.dim_fixed_tensor;
    if (!rep.dims_agree) rep.failures.push_back("fixed-space dimensions disagree");

    // the comparison map on invariant skew elements: (f, m) -> m (x) s(f)
    auto sdb = skew_basis(ctx.S);
    std::size_t skew_dim = sdb.dim();
    Matrix<K> theta(tdim, skew_dim);
    for (std::size_t f = 0; f < D.num_morphisms(); ++f) {
        std::size_t x = D.cod(f);
        std::size_t g = ctx.F.mor_map[f];
        for (std::size_t t = 0; t < ctx.S.obj_alg[x].dim(); ++t)
            theta(tindex(offset[x] + t, g), sdb.index(f, t)) = K(1);
    }

    // equivariance on the invariant part: right-multiplying by sigma(s)
    // before theta agrees with the tensor-side action after theta
    rep.equivariant = true;
    std::vector<Vec<K>> invariant_skew;
    for (std::size_t f = 0; f < D.num_morphisms(); ++f) {
        std::size_t x = D.cod(f);
        for (const auto& m : subs[x].basis()) {
            Vec<K> v = zero_vec<K>(skew_dim);
            for (std::size_t t = 0; t < m.size(); ++t) v[sdb.index(f, t)] = m[t];
            invariant_skew.push_back(std::move(v));
        }
    }
    for (std::size_t si = 0; si < monoid.elements.size() && rep.equivariant; ++si) {
        Vec<K> sigma_s = ia.structural.apply(monoid.elements[si]);
        for (const auto& v : invariant_skew) {
            Vec<K> lhs = theta.apply(ia.algebra.multiply(v, sigma_s));
            Vec<K> rhs = actions[si].apply(theta.apply(v));
            if (lhs != rhs) {
                rep.equivariant = false;
                rep.failures.push_back("comparison map is not equivariant");
                break;
            }
        }
    }

    // bijectivity of the comparison on the invariant part: the images of
    // the invariant skew elements span the fixed tensor space with the
    // right dimension
    std::vector<Vec<K>> images;
    for (const auto& v : invariant_skew) images.push_back(theta.apply(v));
    Subspace<K> image_span(tdim, images);
    rep.bijective_on_fixed =
        image_span == fixed_tensor && rep.dim_indp == image_span.dim();
    if (!rep.bijective_on_fixed)
        rep.failures.push_back("comparison map is not bijective onto the fixed space");
    return rep;
}

} // namespace catalg
