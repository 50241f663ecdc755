// Finite categories given by explicit composition tables, functors
// between them, the fiber partition of a functor, and the class-equality
// condition that gates the induction pipeline.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalg {

/// A finite category. Objects and morphisms are opaque string ids;
/// internally everything is indexed by position in declaration order.
struct FinCategory {
    struct Morphism {
        std::string id;
        std::size_t dom; // object index
        std::size_t cod;
    };

    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    // comp[{g, f}] = index of g∘f; defined exactly when dom(g) == cod(f)
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
    std::vector<std::size_t> identities; // object index -> morphism index

    std::size_t num_objects() const { return objects.size(); }
    std::size_t num_morphisms() const { return morphisms.size(); }

    std::size_t dom(std::size_t f) const { return morphisms[f].dom; }
    std::size_t cod(std::size_t f) const { return morphisms[f].cod; }

    bool composable(std::size_t g, std::size_t f) const { return dom(g) == cod(f); }

    std::optional<std::size_t> compose(std::size_t g, std::size_t f) const {
        auto it = comp.find({g, f});
        if (it == comp.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> object_index(const std::string& id) const {
        auto it = std::find(objects.begin(), objects.end(), id);
        if (it == objects.end()) return std::nullopt;
        return static_cast<std::size_t>(it - objects.begin());
    }
    std::optional<std::size_t> morphism_index(const std::string& id) const {
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].id == id) return i;
        return std::nullopt;
    }

    const std::string& mor_id(std::size_t f) const { return morphisms[f].id; }
    const std::string& obj_id(std::size_t x) const { return objects[x]; }
};

/// Single-object category with one (identity) morphism.
inline FinCategory point_category() {
    FinCategory c;
    c.objects = {"pt"};
    c.morphisms = {{"1_pt", 0, 0}};
    c.comp[{0, 0}] = 0;
    c.identities = {0};
    return c;
}

/// Fills in the composites forced by the identity laws, so callers only
/// list the genuinely non-trivial entries of the table.
inline void add_identity_composites(FinCategory& c) {
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        c.comp[{c.identities[c.cod(f)], f}] = f;
        c.comp[{f, c.identities[c.dom(f)]}] = f;
    }
}

using ValidationReport = std::vector<std::string>;

/// Checks all category axioms; each violation names the axiom and the
/// witnessing ids. An empty report means the data is a category.
inline ValidationReport validate_category(const FinCategory& c) {
    ValidationReport report;
    const std::size_t n = c.num_morphisms();

    {
        std::set<std::string> seen;
        for (const auto& o : c.objects)
            if (!seen.insert(o).second)
                report.push_back("duplicate object id: " + o);
        seen.clear();
        for (const auto& m : c.morphisms)
            if (!seen.insert(m.id).second)
                report.push_back("duplicate morphism id: " + m.id);
    }
    for (const auto& m : c.morphisms) {
        if (m.dom >= c.num_objects() || m.cod >= c.num_objects())
            report.push_back("morphism " + m.id + " has out-of-range dom/cod");
    }
    if (c.identities.size() != c.num_objects()) {
        report.push_back("identities table does not cover every object");
        return report; // the remaining checks rely on it
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        std::size_t e = c.identities[x];
        if (e >= n || c.dom(e) != x || c.cod(e) != x)
            report.push_back("identity of object " + c.obj_id(x) + " is not an endomorphism of it");
    }

    // composition table defined exactly on composable pairs, with the
    // right boundary objects
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            auto gf = c.compose(g, f);
            if (c.composable(g, f)) {
                if (!gf) {
                    report.push_back("missing composite " + c.mor_id(g) + " o " + c.mor_id(f));
                } else if (c.dom(*gf) != c.dom(f) || c.cod(*gf) != c.cod(g)) {
                    report.push_back("composite " + c.mor_id(g) + " o " + c.mor_id(f) +
                                     " has wrong dom/cod");
                }
            } else if (gf) {
                report.push_back("composite defined for non-composable pair (" + c.mor_id(g) +
                                 ", " + c.mor_id(f) + ")");
            }
        }

    // identity laws
    for (std::size_t f = 0; f < n; ++f) {
        auto left = c.compose(c.identities[c.cod(f)], f);
        if (!left || *left != f)
            report.push_back("left identity law fails for " + c.mor_id(f));
        auto right = c.compose(f, c.identities[c.dom(f)]);
        if (!right || *right != f)
            report.push_back("right identity law fails for " + c.mor_id(f));
    }

    // associativity over all composable triples
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            if (!c.composable(h, g)) continue;
            auto hg = c.compose(h, g);
            if (!hg) continue;
            for (std::size_t f = 0; f < n; ++f) {
                if (!c.composable(g, f)) continue;
                auto gf = c.compose(g, f);
                if (!gf) continue;
                auto l = c.compose(h, *gf);
                auto r = c.compose(*hg, f);
                if (!l || !r || *l != *r)
                    report.push_back("associativity fails on (" + c.mor_id(h) + ", " +
                                     c.mor_id(g) + ", " + c.mor_id(f) + ")");
            }
        }
    return report;
}

struct Functor {
    FinCategory source;
    FinCategory target;
    std::vector<std::size_t> obj_map; // source object index -> target object index
    std::vector<std::size_t> mor_map; // source morphism index -> target morphism index
};

inline Functor identity_functor(const FinCategory& c) {
    Functor f{c, c, {}, {}};
    for (std::size_t x = 0; x < c.num_objects(); ++x) f.obj_map.push_back(x);
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) f.mor_map.push_back(m);
    return f;
}

inline ValidationReport validate_functor(const Functor& F) {
    ValidationReport report;
    const auto& S = F.source;
    const auto& T = F.target;
    if (F.obj_map.size() != S.num_objects() || F.mor_map.size() != S.num_morphisms()) {
        report.push_back("object/morphism map does not cover the source");
        return report;
    }
    for (auto x : F.obj_map)
        if (x >= T.num_objects()) report.push_back("object map out of range");
    for (auto f : F.mor_map)
        if (f >= T.num_morphisms()) report.push_back("morphism map out of range");
    if (!report.empty()) return report;

    for (std::size_t f = 0; f < S.num_morphisms(); ++f) {
        std::size_t ff = F.mor_map[f];
        if (T.dom(ff) != F.obj_map[S.dom(f)] || T.cod(ff) != F.obj_map[S.cod(f)])
            report.push_back("dom/cod not preserved at " + S.mor_id(f));
    }
    for (std::size_t x = 0; x < S.num_objects(); ++x)
        if (F.mor_map[S.identities[x]] != T.identities[F.obj_map[x]])
            report.push_back("identity not preserved at object " + S.obj_id(x));
    for (std::size_t g = 0; g < S.num_morphisms(); ++g)
        for (std::size_t f = 0; f < S.num_morphisms(); ++f) {
            auto gf = S.compose(g, f);
            if (!gf) continue;
            auto img = T.compose(F.mor_map[g], F.mor_map[f]);
            if (!img || *img != F.mor_map[*gf])
                report.push_back("composition not preserved on (" + S.mor_id(g) + ", " +
                                 S.mor_id(f) + ")");
        }
    return report;
}

struct FunctorTraits {
    bool injective_on_objects = false;
    bool surjective_on_objects = false;
    bool injective_on_morphisms = false;
    bool surjective_on_morphisms = false;
};

inline FunctorTraits functor_traits(const Functor& F) {
    FunctorTraits t;
    std::set<std::size_t> obj_img(F.obj_map.begin(), F.obj_map.end());
    std::set<std::size_t> mor_img(F.mor_map.begin(), F.mor_map.end());
    t.injective_on_objects = obj_img.size() == F.obj_map.size();
    t.surjective_on_objects = obj_img.size() == F.target.num_objects();
    t.injective_on_morphisms = mor_img.size() == F.mor_map.size();
    t.surjective_on_morphisms = mor_img.size() == F.target.num_morphisms();
    return t;
}

/// Partition of the source morphisms of a functor into map fibers.
struct MorPartition {
    std::vector<std::vector<std::size_t>> classes; // morphism indices
    std::vector<std::size_t> class_of;             // morphism index -> class index
};

/// Fibers of the morphism map. For a functor injective on objects, every
/// class has constant dom and cod; a failure of that here means the
/// functor data is corrupt upstream.
inline MorPartition sim_partition(const Functor& F) {
    MorPartition p;
    std::map<std::size_t, std::size_t> fiber_index; // target morphism -> class
    p.class_of.resize(F.source.num_morphisms());
    for (std::size_t f = 0; f < F.source.num_morphisms(); ++f) {
        auto [it, fresh] = fiber_index.try_emplace(F.mor_map[f], p.classes.size());
        if (fresh) p.classes.emplace_back();
        p.classes[it->second].push_back(f);
        p.class_of[f] = it->second;
    }
    if (functor_traits(F).injective_on_objects) {
        for (const auto& cls : p.classes)
            for (auto f : cls)
                if (F.source.dom(f) != F.source.dom(cls[0]) ||
                    F.source.cod(f) != F.source.cod(cls[0]))
                    throw std::logic_error(
                        "sim_partition: class with non-constant dom/cod under an "
                        "injective-on-objects functor");
    }
    return p;
}

inline void require_induction_profile(const Functor& F) {
    auto t = functor_traits(F);
    if (!t.injective_on_objects || !t.surjective_on_morphisms)
        throw std::invalid_argument(
            "functor must be injective on objects and surjective on morphisms");
}

/// The class of 1_x: all source morphisms mapped to the identity of the
/// image object.
inline std::vector<std::size_t> id_class(const Functor& F, std::size_t x) {
    require_induction_profile(F);
    std::size_t target_id = F.target.identities[F.obj_map[x]];
    std::vector<std::size_t> cls;
    for (std::size_t f = 0; f < F.source.num_morphisms(); ++f)
        if (F.mor_map[f] == target_id) cls.push_back(f);
    return cls;
}

struct Condition423Report {
    bool holds = true;
    struct Witness {
        std::string morphism;
        std::string side; // "left" (Id_y o f) or "right" (f o Id_x)
        std::vector<std::string> fiber_class;
        std::vector<std::string> composite_class;
    };
    std::vector<Witness> witnesses;
};

/// Checks, for every f: x -> y of the source, that the fiber class of f
/// equals Id_y ∘ f and f ∘ Id_x as sets of morphisms.
inline Condition423Report check_condition_423(const Functor& F) {
    require_induction_profile(F);
    const auto& D = F.source;
    auto partition = sim_partition(F);
    Condition423Report report;

    auto names = [&](const std::set<std::size_t>& s) {
        std::vector<std::string> out;
        for (auto f : s) out.push_back(D.mor_id(f));
        return out;
    };

    for (std::size_t f = 0; f < D.num_morphisms(); ++f) {
        std::set<std::size_t> fiber(partition.classes[partition.class_of[f]].begin(),
                                    partition.classes[partition.class_of[f]].end());
        std::set<std::size_t> left, right;
        for (auto g : id_class(F, D.cod(f))) {
            if (auto gf = D.compose(g, f)) left.insert(*gf);
        }
        for (auto g : id_class(F, D.dom(f))) {
            if (auto fg = D.compose(f, g)) right.insert(*fg);
        }
        if (left != fiber) {
            report.holds = false;
            report.witnesses.push_back({D.mor_id(f), "left", names(fiber), names(left)});
        }
        if (right != fiber) {
            report.holds = false;
            report.witnesses.push_back({D.mor_id(f), "right", names(fiber), names(right)});
        }
    }
    return report;
}

inline FinCategory opposite_category(const FinCategory& c) {
    FinCategory op;
    op.objects = c.objects;
    op.identities = c.identities;
    for (const auto& m : c.morphisms)
        op.morphisms.push_back({m.id, m.cod, m.dom});
    for (const auto& [pair, gf] : c.comp)
        op.comp[{pair.second, pair.first}] = gf;
    return op;
}

} // namespace catalg
