// Finite-dimensional unital associative algebras over an exact field,
// given by structure constants, together with homomorphisms, precosheaves
// of algebras, gradings, interior algebras and modules over category
// algebras (including the precosheaf <-> module correspondence).
#pragma once

#include "catalg/fincat.hpp"
#include "catalg/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace catalg {

template <typename K>
struct FinAlgebra {
    std::vector<std::string> basis_labels;
    // struct_consts[i][j] = coordinates of b_i * b_j
    std::vector<std::vector<Vec<K>>> struct_consts;
    Vec<K> unit;

    std::size_t dim() const { return basis_labels.size(); }

    Vec<K> multiply(const Vec<K>& u, const Vec<K>& v) const {
        if (u.size() != dim() || v.size() != dim())
            throw std::invalid_argument("FinAlgebra::multiply: coordinate size mismatch");
        Vec<K> out = zero_vec<K>(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i] == K(0)) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (v[j] == K(0)) continue;
                axpy(out, u[i] * v[j], struct_consts[i][j]);
            }
        }
        return out;
    }

    /// Matrix of left multiplication by u.
    Matrix<K> left_mult(const Vec<K>& u) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            m.set_col(j, multiply(u, unit_vec<K>(dim(), j)));
        return m;
    }
    Matrix<K> right_mult(const Vec<K>& u) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            m.set_col(j, multiply(unit_vec<K>(dim(), j), u));
        return m;
    }
};

/// The base field as a one-dimensional algebra.
template <typename K>
FinAlgebra<K> field_algebra() {
    FinAlgebra<K> a;
    a.basis_labels = {"1"};
    a.struct_consts = {{{K(1)}}};
    a.unit = {K(1)};
    return a;
}

/// k x ... x k with idempotent basis e1..en; unit e1+...+en.
template <typename K>
FinAlgebra<K> product_of_fields(std::size_t n) {
    FinAlgebra<K> a;
    for (std::size_t i = 0; i < n; ++i) a.basis_labels.push_back("e" + std::to_string(i + 1));
    a.struct_consts.assign(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (std::size_t i = 0; i < n; ++i) a.struct_consts[i][i][i] = K(1);
    a.unit = Vec<K>(n, K(1));
    return a;
}

/// Full matrix algebra M_n(k) with basis E_{ij} in row-major order.
template <typename K>
FinAlgebra<K> matrix_algebra(std::size_t n) {
    FinAlgebra<K> a;
    std::size_t d = n * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.basis_labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) a.struct_consts[i * n + j][k * n + l][i * n + l] = K(1);
    a.unit = zero_vec<K>(d);
    for (std::size_t i = 0; i < n; ++i) a.unit[i * n + i] = K(1);
    return a;
}

/// Group algebra of the cyclic group C_n, basis g^0..g^{n-1}.
template <typename K>
FinAlgebra<K> cyclic_group_algebra(std::size_t n) {
    FinAlgebra<K> a;
    for (std::size_t i = 0; i < n; ++i) a.basis_labels.push_back("g" + std::to_string(i));
    a.struct_consts.assign(n, std::vector<Vec<K>>(n, zero_vec<K>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.struct_consts[i][j][(i + j) % n] = K(1);
    a.unit = unit_vec<K>(n, 0);
    return a;
}

template <typename K>
ValidationReport validate_algebra(const FinAlgebra<K>& a) {
    ValidationReport report;
    std::size_t d = a.dim();
    if (a.struct_consts.size() != d || a.unit.size() != d) {
        report.push_back("structure constant table or unit has wrong dimensions");
        return report;
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (a.struct_consts[i].size() != d) {
            report.push_back("structure constant table has wrong dimensions");
            return report;
        }
        for (std::size_t j = 0; j < d; ++j)
            if (a.struct_consts[i][j].size() != d) {
                report.push_back("structure constant table has wrong dimensions");
                return report;
            }
    }
    for (std::size_t i = 0; i < d; ++i) {
        Vec<K> b = unit_vec<K>(d, i);
        if (a.multiply(a.unit, b) != b)
            report.push_back("left unit law fails at " + a.basis_labels[i]);
        if (a.multiply(b, a.unit) != b)
            report.push_back("right unit law fails at " + a.basis_labels[i]);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec<K>& ij = a.struct_consts[i][j];
            for (std::size_t k = 0; k < d; ++k) {
                Vec<K> left = a.multiply(ij, unit_vec<K>(d, k));
                Vec<K> right = a.multiply(unit_vec<K>(d, i), a.struct_consts[j][k]);
                if (left != right)
                    report.push_back("associativity fails on (" + a.basis_labels[i] + ", " +
                                     a.basis_labels[j] + ", " + a.basis_labels[k] + ")");
            }
        }
    return report;
}

template <typename K>
struct AlgebraHom {
    const FinAlgebra<K>* source = nullptr;
    const FinAlgebra<K>* target = nullptr;
    Matrix<K> map;
};

template <typename K>
ValidationReport validate_hom(const AlgebraHom<K>& h) {
    ValidationReport report;
    const auto& A = *h.source;
    const auto& B = *h.target;
    if (h.map.rows() != B.dim() || h.map.cols() != A.dim()) {
        report.push_back("hom matrix has wrong dimensions");
        return report;
    }
    if (h.map.apply(A.unit) != B.unit) report.push_back("hom is not unital");
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Vec<K> lhs = h.map.apply(A.struct_consts[i][j]);
            Vec<K> rhs = B.multiply(h.map.col(i), h.map.col(j));
            if (lhs != rhs)
                report.push_back("hom is not multiplicative on (" + A.basis_labels[i] + ", " +
                                 A.basis_labels[j] + ")");
        }
    return report;
}

/// A covariant functor from a finite category into k-algebras: one
/// algebra per object, one unital homomorphism per morphism.
template <typename K>
struct Precosheaf {
    FinCategory category;
    std::vector<FinAlgebra<K>> obj_alg; // object index -> algebra
    std::vector<Matrix<K>> mor_map;     // morphism index -> hom matrix

    const FinAlgebra<K>& at(std::size_t x) const { return obj_alg[x]; }
    const Matrix<K>& hom(std::size_t f) const { return mor_map[f]; }
};

/// The constant precosheaf k with identity maps.
template <typename K>
Precosheaf<K> constant_precosheaf(const FinCategory& c) {
    Precosheaf<K> r;
    r.category = c;
    r.obj_alg.assign(c.num_objects(), field_algebra<K>());
    r.mor_map.assign(c.num_morphisms(), Matrix<K>::identity(1));
    return r;
}

template <typename K>
ValidationReport validate_precosheaf(const Precosheaf<K>& r) {
    ValidationReport report;
    const auto& c = r.category;
    if (r.obj_alg.size() != c.num_objects() || r.mor_map.size() != c.num_morphisms()) {
        report.push_back("precosheaf does not cover all objects/morphisms");
        return report;
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x)
        for (const auto& v : validate_algebra(r.obj_alg[x]))
            report.push_back("algebra at " + c.obj_id(x) + ": " + v);
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        AlgebraHom<K> h{&r.obj_alg[c.dom(f)], &r.obj_alg[c.cod(f)], r.mor_map[f]};
        for (const auto& v : validate_hom(h))
            report.push_back("hom at " + c.mor_id(f) + ": " + v);
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        std::size_t e = c.identities[x];
        if (!(r.mor_map[e] == Matrix<K>::identity(r.obj_alg[x].dim())))
            report.push_back("identity morphism " + c.mor_id(e) + " is not the identity map");
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g)
        for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
            auto gf = c.compose(g, f);
            if (!gf) continue;
            if (!(r.mor_map[*gf] == r.mor_map[g] * r.mor_map[f]))
                report.push_back("functoriality fails on (" + c.mor_id(g) + ", " + c.mor_id(f) +
                                 ")");
        }
    return report;
}

/// An algebra whose basis is partitioned by morphisms of a category, with
/// the product of homogeneous elements landing in the composite degree.
template <typename K>
struct GradedAlgebra {
    FinAlgebra<K> algebra;
    FinCategory grading_category;
    std::vector<std::size_t> degree; // basis index -> morphism index
};

template <typename K>
ValidationReport validate_graded(const GradedAlgebra<K>& g) {
    ValidationReport report;
    const auto& a = g.algebra;
    const auto& c = g.grading_category;
    if (g.degree.size() != a.dim()) {
        report.push_back("degree map does not cover the basis");
        return report;
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec<K>& prod = a.struct_consts[i][j];
            auto comp = c.compose(g.degree[i], g.degree[j]);
            if (!comp) {
                if (!is_zero_vec(prod))
                    report.push_back("non-composable degrees give nonzero product at (" +
                                     a.basis_labels[i] + ", " + a.basis_labels[j] + ")");
                continue;
            }
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!(prod[k] == K(0)) && g.degree[k] != *comp)
                    report.push_back("product of (" + a.basis_labels[i] + ", " +
                                     a.basis_labels[j] + ") has a component of wrong degree " +
                                     a.basis_labels[k]);
        }
    return report;
}

/// An algebra with a structural homomorphism from a category algebra.
template <typename K>
struct InteriorAlgebra {
    FinAlgebra<K> algebra;
    FinAlgebra<K> base;
    Matrix<K> structural; // base -> algebra
};

/// A left module over a category algebra, given by one square matrix per
/// morphism of the base category.
template <typename K>
struct CatModule {
    FinCategory category;
    std::size_t dim = 0;
    std::vector<Matrix<K>> action; // morphism index -> dim x dim matrix
};

template <typename K>
ValidationReport validate_module(const CatModule<K>& m) {
    ValidationReport report;
    const auto& c = m.category;
    if (m.action.size() != c.num_morphisms()) {
        report.push_back("action does not cover all morphisms");
        return report;
    }
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) {
            report.push_back("action matrix has wrong dimensions");
            return report;
        }
    Matrix<K> unit_sum(m.dim, m.dim);
    for (std::size_t x = 0; x < c.num_objects(); ++x)
        unit_sum = unit_sum + m.action[c.identities[x]];
    if (!(unit_sum == Matrix<K>::identity(m.dim)))
        report.push_back("sum of identity actions is not the identity");
    for (std::size_t g = 0; g < c.num_morphisms(); ++g)
        for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
            Matrix<K> prod = m.action[g] * m.action[f];
            auto gf = c.compose(g, f);
            if (gf) {
                if (!(prod == m.action[*gf]))
                    report.push_back("action not compatible with composite (" + c.mor_id(g) +
                                     ", " + c.mor_id(f) + ")");
            } else if (!(prod == Matrix<K>(m.dim, m.dim))) {
                report.push_back("non-composable actions are not orthogonal: (" + c.mor_id(g) +
                                 ", " + c.mor_id(f) + ")");
            }
        }
    return report;
}

/// Block offsets of the direct sum over objects of a precosheaf.
template <typename K>
std::vector<std::size_t> block_offsets(const Precosheaf<K>& s) {
    std::vector<std::size_t> off(s.category.num_objects() + 1, 0);
    for (std::size_t x = 0; x < s.category.num_objects(); ++x)
        off[x + 1] = off[x] + s.obj_alg[x].dim();
    return off;
}

/// The module on the direct sum of the object spaces: a morphism f acts
/// by its hom matrix on the dom block into the cod block and kills the
/// other blocks.
template <typename K>
CatModule<K> precosheaf_to_module(const Precosheaf<K>& s) {
    const auto& c = s.category;
    auto off = block_offsets(s);
    CatModule<K> m;
    m.category = c;
    m.dim = off.back();
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        Matrix<K> a(m.dim, m.dim);
        const Matrix<K>& h = s.mor_map[f];
        std::size_t src = off[c.dom(f)], dst = off[c.cod(f)];
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j)
                a(dst + i, src + j) = h(i, j);
        m.action.push_back(std::move(a));
    }
    return m;
}

/// Vector-space functor data recovered from a module: dims per object and
/// a linear map per morphism (the correspondence lands in vector spaces,
/// not algebras).
template <typename K>
struct VectFunctorData {
    FinCategory category;
    std::vector<std::size_t> dims;  // object index -> dim of 1_x . M
    std::vector<Matrix<K>> mor_map; // morphism index -> dims[cod] x dims[dom]
};

/// Recovers functor data via the images of the identity actions; each
/// object space gets the canonical echelon basis of im(action(1_x)).
template <typename K>
VectFunctorData<K> module_to_precosheaf(const CatModule<K>& m) {
    const auto& c = m.category;
    VectFunctorData<K> out;
    out.category = c;
    std::vector<Subspace<K>> spaces;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        spaces.push_back(image(m.action[c.identities[x]]));
        out.dims.push_back(spaces.back().dim());
    }
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        const auto& src = spaces[c.dom(f)];
        const auto& dst = spaces[c.cod(f)];
        Matrix<K> restricted(dst.dim(), src.dim());
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vec<K> img = m.action[f].apply(src.basis()[j]);
            auto coords = dst.coordinates(img);
            if (!coords)
                throw std::logic_error("module action does not restrict to the object blocks");
            restricted.set_col(j, *coords);
        }
        out.mor_map.push_back(std::move(restricted));
    }
    return out;
}

} // namespace catalg
