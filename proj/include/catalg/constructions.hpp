// Algebras built from categories and precosheaves: the category
// convolution algebra, the skew category algebra, the tensor product of
// the object algebras, the twisting map between them, the twisted tensor
// product, and the embedding of the skew algebra into it.
#pragma once

#include "catalg/algebra.hpp"
#include "catalg/fincat.hpp"
#include "catalg/matrix.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace catalg {

/// Convolution algebra on the morphisms: g*f is the composite when
/// composable and zero otherwise; the unit is the sum of the identities.
template <typename K>
FinAlgebra<K> category_algebra(const FinCategory& c) {
    FinAlgebra<K> a;
    std::size_t d = c.num_morphisms();
    for (std::size_t f = 0; f < d; ++f) a.basis_labels.push_back(c.mor_id(f));
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t g = 0; g < d; ++g)
        for (std::size_t f = 0; f < d; ++f)
            if (auto gf = c.compose(g, f)) a.struct_consts[g][f][*gf] = K(1);
    a.unit = zero_vec<K>(d);
    for (std::size_t x = 0; x < c.num_objects(); ++x) a.unit[c.identities[x]] = K(1);
    return a;
}

/// Basis bookkeeping for the skew category algebra: basis elements are
/// pairs (morphism f, basis element of R(cod f)), grouped by morphism.
template <typename K>
struct SkewBasis {
    std::vector<std::size_t> offset; // morphism index -> first basis index; back() = dim
    std::size_t index(std::size_t f, std::size_t r) const { return offset[f] + r; }
    std::size_t morphism_of(std::size_t b) const {
        std::size_t f = 0;
        while (offset[f + 1] <= b) ++f;
        return f;
    }
    std::size_t coeff_of(std::size_t b) const { return b - offset[morphism_of(b)]; }
    std::size_t dim() const { return offset.back(); }
};

template <typename K>
SkewBasis<K> skew_basis(const Precosheaf<K>& r) {
    SkewBasis<K> b;
    b.offset.assign(1, 0);
    for (std::size_t f = 0; f < r.category.num_morphisms(); ++f)
        b.offset.push_back(b.offset.back() + r.obj_alg[r.category.cod(f)].dim());
    return b;
}

/// Skew category algebra: (s g) * (r f) = (s . R(g)(r)) (g o f) when
/// composable, zero otherwise; graded by the category with the pair
/// (f, -) in degree f.
template <typename K>
GradedAlgebra<K> skew_category_algebra(const Precosheaf<K>& r) {
    const auto& c = r.category;
    auto basis = skew_basis(r);
    std::size_t d = basis.dim();

    GradedAlgebra<K> out;
    out.grading_category = c;
    FinAlgebra<K>& a = out.algebra;
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    a.unit = zero_vec<K>(d);

    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        const auto& alg = r.obj_alg[c.cod(f)];
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            a.basis_labels.push_back("(" + c.mor_id(f) + ", " + alg.basis_labels[i] + ")");
            out.degree.push_back(f);
        }
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        std::size_t e = c.identities[x];
        const Vec<K>& u = r.obj_alg[x].unit;
        for (std::size_t i = 0; i < u.size(); ++i) a.unit[basis.index(e, i)] = u[i];
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g)
        for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
            auto gf = c.compose(g, f);
            if (!gf) continue;
            const auto& target = r.obj_alg[c.cod(g)];
            for (std::size_t si = 0; si < r.obj_alg[c.cod(g)].dim(); ++si)
                for (std::size_t ri = 0; ri < r.obj_alg[c.cod(f)].dim(); ++ri) {
                    // s . R(g)(r) in R(cod g), placed in degree g o f
                    Vec<K> moved = r.mor_map[g].col(ri);
                    Vec<K> prod = target.multiply(unit_vec<K>(target.dim(), si), moved);
                    auto& entry = a.struct_consts[basis.index(g, si)][basis.index(f, ri)];
                    for (std::size_t t = 0; t < prod.size(); ++t)
                        entry[basis.index(*gf, t)] = prod[t];
                }
        }
    return out;
}

/// Basis bookkeeping for the tensor product over all objects, in
/// lexicographic order (object order major, factor basis order minor).
template <typename K>
struct ObjectTensorBasis {
    std::vector<std::size_t> factor_dims;
    std::vector<std::size_t> strides;
    std::size_t dim = 1;

    explicit ObjectTensorBasis(const Precosheaf<K>& r) {
        for (const auto& alg : r.obj_alg) factor_dims.push_back(alg.dim());
        // lexicographic: object 0 is the most significant position
        strides.assign(factor_dims.size(), 1);
        for (std::size_t x = factor_dims.size(); x-- > 0;) {
            strides[x] = dim;
            dim *= factor_dims[x];
        }
    }

    std::size_t index(const std::vector<std::size_t>& choice) const {
        std::size_t idx = 0;
        for (std::size_t x = 0; x < choice.size(); ++x) idx += choice[x] * strides[x];
        return idx;
    }
    std::vector<std::size_t> unrank(std::size_t idx) const {
        std::vector<std::size_t> choice(factor_dims.size());
        for (std::size_t x = 0; x < factor_dims.size(); ++x) {
            choice[x] = idx / strides[x];
            idx %= strides[x];
        }
        return choice;
    }
};

/// Tensor product over all objects of the object algebras, with
/// componentwise multiplication.
template <typename K>
FinAlgebra<K> object_tensor_algebra(const Precosheaf<K>& r) {
    ObjectTensorBasis<K> tb(r);
    FinAlgebra<K> a;
    std::size_t d = tb.dim;
    for (std::size_t idx = 0; idx < d; ++idx) {
        auto choice = tb.unrank(idx);
        std::string label;
        for (std::size_t x = 0; x < choice.size(); ++x) {
            if (x) label += "(x)";
            label += r.obj_alg[x].basis_labels[choice[x]];
        }
        a.basis_labels.push_back(label);
    }
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t i = 0; i < d; ++i) {
        auto ci = tb.unrank(i);
        for (std::size_t j = 0; j < d; ++j) {
            auto cj = tb.unrank(j);
            // componentwise product, expanded factor by factor
            std::vector<Vec<K>> factors;
            for (std::size_t x = 0; x < ci.size(); ++x)
                factors.push_back(r.obj_alg[x].struct_consts[ci[x]][cj[x]]);
            // distribute the pure tensors
            Vec<K>& entry = a.struct_consts[i][j];
            std::vector<std::size_t> pick(ci.size(), 0);
            while (true) {
                K coeff(1);
                for (std::size_t x = 0; x < pick.size(); ++x) coeff *= factors[x][pick[x]];
                if (!(coeff == K(0))) entry[tb.index(pick)] += coeff;
                std::size_t x = pick.size();
                while (x-- > 0) {
                    if (++pick[x] < tb.factor_dims[x]) break;
                    pick[x] = 0;
                    if (x == 0) goto done;
                }
                if (pick.empty()) break;
            }
        done:;
        }
    }
    a.unit = zero_vec<K>(d);
    {
        std::vector<Vec<K>> units;
        for (const auto& alg : r.obj_alg) units.push_back(alg.unit);
        std::vector<std::size_t> pick(units.size(), 0);
        bool running = true;
        while (running) {
            K coeff(1);
            for (std::size_t x = 0; x < pick.size(); ++x) coeff *= units[x][pick[x]];
            if (!(coeff == K(0))) a.unit[tb.index(pick)] += coeff;
            std::size_t x = pick.size();
            running = false;
            while (x-- > 0) {
                if (++pick[x] < tb.factor_dims[x]) { running = true; break; }
                pick[x] = 0;
            }
        }
        if (tb.factor_dims.empty()) a.unit = {K(1)};
    }
    return a;
}

/// A linear map B (x) A -> A (x) B subject to the two unit axioms and
/// the hexagon compatibility; tensor bases are ordered left factor major.
template <typename K>
struct TwistingMap {
    const FinAlgebra<K>* alg_a = nullptr;
    const FinAlgebra<K>* alg_b = nullptr;
    Matrix<K> map; // (dimA*dimB) x (dimB*dimA)
};

template <typename K>
std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim_second) {
    return i * dim_second + j;
}

/// Pure tensor u (x) v as a coordinate vector, left factor major.
template <typename K>
Vec<K> tensor_vec(const Vec<K>& u, const Vec<K>& v) {
    Vec<K> out(u.size() * v.size(), K(0));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == K(0)) continue;
        for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
    }
    return out;
}

template <typename K>
ValidationReport validate_twisting_map(const TwistingMap<K>& t) {
    ValidationReport report;
    const auto& A = *t.alg_a;
    const auto& B = *t.alg_b;
    std::size_t da = A.dim(), db = B.dim();
    if (t.map.rows() != da * db || t.map.cols() != db * da) {
        report.push_back("twisting map has wrong dimensions");
        return report;
    }
    for (std::size_t j = 0; j < db; ++j) {
        Vec<K> in = tensor_vec(unit_vec<K>(db, j), A.unit);
        Vec<K> expect = tensor_vec(A.unit, unit_vec<K>(db, j));
        if (t.map.apply(in) != expect)
            report.push_back("unit axiom tau(b (x) 1) = 1 (x) b fails at " + B.basis_labels[j]);
    }
    for (std::size_t i = 0; i < da; ++i) {
        Vec<K> in = tensor_vec(B.unit, unit_vec<K>(da, i));
        Vec<K> expect = tensor_vec(unit_vec<K>(da, i), B.unit);
        if (t.map.apply(in) != expect)
            report.push_back("unit axiom tau(1 (x) a) = a (x) 1 fails at " + A.basis_labels[i]);
    }

    // hexagon: tau after multiplying must agree with the route
    // (mu_A (x) mu_B) o (id (x) tau (x) id) o (tau (x) tau) o (id (x) tau (x) id)
    auto tau_pure = [&](std::size_t b, std::size_t a) {
        return t.map.col(b * da + a); // element of A (x) B
    };
    for (std::size_t b1 = 0; b1 < db && report.size() < 20; ++b1)
        for (std::size_t b2 = 0; b2 < db; ++b2)
            for (std::size_t a1 = 0; a1 < da; ++a1)
                for (std::size_t a2 = 0; a2 < da; ++a2) {
                    Vec<K> lhs = t.map.apply(
                        tensor_vec(B.struct_consts[b1][b2], A.struct_consts[a1][a2]));
                    // inner step: tau(b2 (x) a1) = sum_k c_k (ak (x) bk)
                    Vec<K> mid = tau_pure(b2, a1);
                    Vec<K> rhs(da * db, K(0));
                    for (std::size_t ak = 0; ak < da; ++ak)
                        for (std::size_t bk = 0; bk < db; ++bk) {
                            K c = mid[ak * db + bk];
                            if (c == K(0)) continue;
                            // tau (x) tau on (b1 (x) ak) and (bk (x) a2)
                            Vec<K> left = tau_pure(b1, ak);
                            Vec<K> right = tau_pure(bk, a2);
                            for (std::size_t ai = 0; ai < da; ++ai)
                                for (std::size_t bi = 0; bi < db; ++bi) {
                                    K cl = left[ai * db + bi];
                                    if (cl == K(0)) continue;
                                    for (std::size_t aj = 0; aj < da; ++aj)
                                        for (std::size_t bj = 0; bj < db; ++bj) {
                                            K cr = right[aj * db + bj];
                                            if (cr == K(0)) continue;
                                            // middle step: tau(bi (x) aj)
                                            Vec<K> thr = tau_pure(bi, aj);
                                            K cc = c * cl * cr;
                                            for (std::size_t au = 0; au < da; ++au)
                                                for (std::size_t bu = 0; bu < db; ++bu) {
                                                    K ct = thr[au * db + bu];
                                                    if (ct == K(0)) continue;
                                                    const Vec<K>& pa = A.struct_consts[ai][au];
                                                    const Vec<K>& pb = B.struct_consts[bu][bj];
                                                    for (std::size_t u = 0; u < da; ++u) {
                                                        if (pa[u] == K(0)) continue;
                                                        for (std::size_t v = 0; v < db; ++v)
                                                            rhs[u * db + v] +=
                                                                cc * ct * pa[u] * pb[v];
                                                    }
                                                }
                                        }
                                }
                        }
                    if (lhs != rhs)
                        report.push_back("hexagon axiom fails on basis tuple (" +
                                         B.basis_labels[b1] + ", " + B.basis_labels[b2] + ", " +
                                         A.basis_labels[a1] + ", " + A.basis_labels[a2] + ")");
                }
    return report;
}

/// The flip b (x) a -> a (x) b, which is always a twisting map.
template <typename K>
TwistingMap<K> flip_twisting_map(const FinAlgebra<K>& a, const FinAlgebra<K>& b) {
    TwistingMap<K> t{&a, &b, Matrix<K>(a.dim() * b.dim(), b.dim() * a.dim())};
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i)
            t.map(i * b.dim() + j, j * a.dim() + i) = K(1);
    return t;
}

/// Holds the two tensor factors of the construction so their lifetimes
/// cover the twisting map and product that reference them.
template <typename K>
struct TwistedSetup {
    FinAlgebra<K> tensor_alg;  // A = (x)_x R(x)
    FinAlgebra<K> cat_alg;     // B = kC
    TwistingMap<K> twist;      // tau : B (x) A -> A (x) B

    TwistedSetup(const TwistedSetup&) = delete;
    TwistedSetup& operator=(const TwistedSetup&) = delete;
    TwistedSetup(TwistedSetup&&) = delete;
    TwistedSetup() = default;
};

/// A character (algebra map onto the scalars) of a finite algebra,
/// found among the scaled coordinate functionals, returned as a row
/// functional on the basis. Covers products of fields and every
/// one-dimensional algebra, which is what the bundled structure maps
/// need; returns nothing when no coordinate functional works.
template <typename K>
std::optional<Vec<K>> coordinate_character(const FinAlgebra<K>& alg) {
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (alg.unit[i] == K(0)) continue;
        K scale = K(1) / alg.unit[i]; // eta(v) = v_i * scale, so eta(1) = 1
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n && ok; ++k) {
                K lhs = alg.struct_consts[j][k][i] * scale;
                K rhs = (j == i ? scale : K(0)) * (k == i ? scale : K(0));
                ok = (lhs == rhs);
            }
        if (ok) {
            Vec<K> eta = zero_vec<K>(n);
            eta[i] = scale;
            return eta;
        }
    }
    return std::nullopt;
}

/// The twisting map that moves a morphism past a tensor of object
/// elements: the domain component is consumed and pushed forward along
/// the hom of the morphism into the codomain slot, the emptied domain
/// slot is refilled with the unit, and the displaced codomain component
/// is collapsed through a character of its object algebra. For an
/// endomorphism the slot is simply consumed and refilled in place.
/// The character collapse is the unique linearization of the pointwise
/// overwrite rule that is compatible with both the twisting axioms and
/// the skew-algebra embedding.
template <typename K>
void build_paper_twisting_map(const Precosheaf<K>& r, TwistedSetup<K>& setup) {
    const auto& c = r.category;
    setup.tensor_alg = object_tensor_algebra(r);
    setup.cat_alg = category_algebra<K>(c);
    ObjectTensorBasis<K> tb(r);

    std::size_t da = setup.tensor_alg.dim();
    std::size_t db = setup.cat_alg.dim();

    // characters of the codomain algebras, computed lazily per object
    std::vector<std::optional<Vec<K>>> characters(c.num_objects());
    std::vector<bool> computed(c.num_objects(), false);
    auto character_at = [&](std::size_t x) -> const Vec<K>& {
        if (!computed[x]) {
            characters[x] = coordinate_character(r.obj_alg[x]);
            computed[x] = true;
        }
        if (!characters[x])
            throw std::invalid_argument(
                "build_paper_twisting_map: no coordinate character on the "
                "object algebra at " + c.objects[x]);
        return *characters[x];
    };

    Matrix<K> tau(da * db, db * da);
    for (std::size_t f = 0; f < db; ++f) {
        std::size_t src = c.dom(f), dst = c.cod(f);
        for (std::size_t idx = 0; idx < da; ++idx) {
            auto choice = tb.unrank(idx);
            Vec<K> moved = r.mor_map[f].col(choice[src]);
            if (src == dst) {
                // endomorphism: the slot is consumed and refilled in place
                for (std::size_t m = 0; m < moved.size(); ++m) {
                    if (moved[m] == K(0)) continue;
                    auto target = choice;
                    target[dst] = m;
                    tau(tb.index(target) * db + f, f * da + idx) += moved[m];
                }
            } else {
                K collapse = character_at(dst)[choice[dst]];
                if (collapse == K(0)) continue;
                const Vec<K>& backfill = r.obj_alg[src].unit;
                for (std::size_t i = 0; i < backfill.size(); ++i) {
                    if (backfill[i] == K(0)) continue;
                    for (std::size_t m = 0; m < moved.size(); ++m) {
                        if (moved[m] == K(0)) continue;
                        auto target = choice;
                        target[src] = i;
                        target[dst] = m;
                        tau(tb.index(target) * db + f, f * da + idx) +=
                            collapse * backfill[i] * moved[m];
                    }
                }
            }
        }
    }
    setup.twist = TwistingMap<K>{&setup.tensor_alg, &setup.cat_alg, std::move(tau)};
}

/// Product of the twisted tensor product algebra: (a1 (x) b1)(a2 (x) b2)
/// = (mu_A (x) mu_B)(a1 (x) tau(b1 (x) a2) (x) b2). Refuses to build on a
/// map that fails a twisting axiom.
template <typename K>
FinAlgebra<K> twisted_tensor_product(const TwistingMap<K>& t) {
    auto axiom_failures = validate_twisting_map(t);
    if (!axiom_failures.empty())
        throw std::invalid_argument("twisted_tensor_product: invalid twisting map: " +
                                    axiom_failures.front());
    const auto& A = *t.alg_a;
    const auto& B = *t.alg_b;
    std::size_t da = A.dim(), db = B.dim(), d = da * db;

    FinAlgebra<K> out;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            out.basis_labels.push_back(A.basis_labels[i] + " (x) " + B.basis_labels[j]);
    out.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t a1 = 0; a1 < da; ++a1)
        for (std::size_t b1 = 0; b1 < db; ++b1)
            for (std::size_t a2 = 0; a2 < da; ++a2)
                for (std::size_t b2 = 0; b2 < db; ++b2) {
                    Vec<K> mid = t.map.apply(
                        tensor_vec(unit_vec<K>(db, b1), unit_vec<K>(da, a2)));
                    Vec<K>& entry =
                        out.struct_consts[a1 * db + b1][a2 * db + b2];
                    for (std::size_t ak = 0; ak < da; ++ak)
                        for (std::size_t bk = 0; bk < db; ++bk) {
                            K c = mid[ak * db + bk];
                            if (c == K(0)) continue;
                            const Vec<K>& pa = A.struct_consts[a1][ak];
                            const Vec<K>& pb = B.struct_consts[bk][b2];
                            for (std::size_t u = 0; u < da; ++u) {
                                if (pa[u] == K(0)) continue;
                                for (std::size_t v = 0; v < db; ++v)
                                    entry[u * db + v] += c * pa[u] * pb[v];
                            }
                        }
                }
    out.unit = tensor_vec(A.unit, B.unit);
    return out;
}

template <typename K>
struct PsiEmbedding {
    Matrix<K> psi; // skew algebra -> A (x)_tau kC
    Matrix<K> phi; // A (x)_tau kC -> skew algebra, left inverse of psi
};

/// The embedding of the skew algebra: a pair (f, r) goes to the pure
/// tensor with r in the codomain component and units elsewhere, tensored
/// with f; its left inverse reads the codomain component back off.
template <typename K>
PsiEmbedding<K> psi_embedding(const Precosheaf<K>& r) {
    const auto& c = r.category;
    auto sb = skew_basis(r);
    ObjectTensorBasis<K> tb(r);
    std::size_t da = tb.dim, db = c.num_morphisms();

    PsiEmbedding<K> out{Matrix<K>(da * db, sb.dim()), Matrix<K>(sb.dim(), da * db)};
    for (std::size_t f = 0; f < db; ++f) {
        std::size_t dst = c.cod(f);
        const auto dim_r = r.obj_alg[dst].dim();
        for (std::size_t i = 0; i < dim_r; ++i) {
            // pure tensor: unit everywhere, basis element i at cod(f)
            std::vector<Vec<K>> factors;
            for (std::size_t x = 0; x < c.num_objects(); ++x)
                factors.push_back(x == dst ? unit_vec<K>(r.obj_alg[x].dim(), i)
                                           : r.obj_alg[x].unit);
            Vec<K> ta = zero_vec<K>(da);
            std::vector<std::size_t> pick(factors.size(), 0);
            bool running = !factors.empty();
            if (factors.empty()) ta = {K(1)};
            while (running) {
                K coeff(1);
                for (std::size_t x = 0; x < pick.size(); ++x) coeff *= factors[x][pick[x]];
                if (!(coeff == K(0))) ta[tb.index(pick)] += coeff;
                std::size_t x = pick.size();
                running = false;
                while (x-- > 0) {
                    if (++pick[x] < tb.factor_dims[x]) { running = true; break; }
                    pick[x] = 0;
                }
            }
            for (std::size_t m = 0; m < da; ++m)
                out.psi(m * db + f, sb.index(f, i)) = ta[m];
        }
    }
    // phi keeps the codomain component and collapses every other factor
    // through a linear functional normalized to send that factor's unit
    // to 1 (the first nonzero unit coordinate is used), so phi o psi is
    // the identity on the nose.
    std::vector<std::size_t> unit_idx(c.num_objects());
    std::vector<K> unit_scale(c.num_objects(), K(1));
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        const Vec<K>& u = r.obj_alg[x].unit;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!(u[i] == K(0))) {
                unit_idx[x] = i;
                unit_scale[x] = K(1) / u[i];
                break;
            }
    }
    for (std::size_t f = 0; f < db; ++f) {
        std::size_t dst = c.cod(f);
        for (std::size_t idx = 0; idx < da; ++idx) {
            auto choice = tb.unrank(idx);
            K coeff(1);
            bool kept = true;
            for (std::size_t x = 0; x < c.num_objects(); ++x) {
                if (x == dst) continue;
                if (choice[x] != unit_idx[x]) { kept = false; break; }
                coeff *= unit_scale[x];
            }
            if (kept) out.phi(sb.index(f, choice[dst]), idx * db + f) = coeff;
        }
    }
    return out;
}

struct WeakBialgebraReport {
    bool delta_multiplicative = false;
    bool unit_axiom_holds = false;
    std::string witness;
};

/// The diagonal comultiplication on a category algebra is multiplicative,
/// but respects the unit only for one-object categories.
template <typename K>
WeakBialgebraReport check_weak_bialgebra_unit_failure(const FinCategory& c) {
    FinAlgebra<K> kc = category_algebra<K>(c);
    std::size_t d = kc.dim();
    WeakBialgebraReport report;

    report.delta_multiplicative = true;
    for (std::size_t g = 0; g < d && report.delta_multiplicative; ++g)
        for (std::size_t f = 0; f < d; ++f) {
            // Delta(g . f) vs Delta(g) Delta(f) in kC (x) kC
            const Vec<K>& prod = kc.struct_consts[g][f];
            Vec<K> lhs(d * d, K(0));
            for (std::size_t t = 0; t < d; ++t) lhs[t * d + t] = prod[t];
            Vec<K> rhs(d * d, K(0));
            // (g (x) g)(f (x) f) = gf (x) gf
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t v = 0; v < d; ++v)
                    rhs[u * d + v] = prod[u] * prod[v];
            if (lhs != rhs) {
                report.delta_multiplicative = false;
                report.witness = "(" + kc.basis_labels[g] + ", " + kc.basis_labels[f] + ")";
                break;
            }
        }

    Vec<K> delta_unit(d * d, K(0));
    for (std::size_t t = 0; t < d; ++t)
        if (!(kc.unit[t] == K(0))) delta_unit[t * d + t] = kc.unit[t];
    Vec<K> unit_tensor = tensor_vec(kc.unit, kc.unit);
    report.unit_axiom_holds = delta_unit == unit_tensor;
    return report;
}

} // namespace catalg
