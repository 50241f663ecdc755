// Declarative workbench: a line-oriented text format for categories,
// functors, algebras and precosheaves, bundled fixture files, and a task
// runner that drives the construction and verification modules and emits
// a deterministic line-oriented report.
#pragma once

#include "catalg/algebra.hpp"
#include "catalg/constructions.hpp"
#include "catalg/field.hpp"
#include "catalg/fincat.hpp"
#include "catalg/induction.hpp"
#include "catalg/matrix.hpp"

#include <chrono>
#include <cstddef>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catalg {

/// Error in the spec text itself, with 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + what),
          line_(line), col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_, col_;
};

/// Error raised while resolving or executing a task (unknown name,
/// wrong argument count); reported per task without aborting the run.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything declared by one spec file, resolved against the scalar
/// field K. Declarations keep their order so reports are stable.
template <typename K>
struct Workbench {
    std::vector<std::pair<std::string, FinCategory>> categories;
    std::vector<std::pair<std::string, Functor>> functors;
    std::vector<std::pair<std::string, FinAlgebra<K>>> algebras;
    std::vector<std::pair<std::string, Precosheaf<K>>> precosheaves;
    std::vector<std::vector<std::string>> tasks;

    // declared field: "rationals" or "gf" with a prime
    std::string field_name = "rationals";
    long long field_prime = 0;

    template <typename T>
    static const T& find(const std::vector<std::pair<std::string, T>>& decls,
                         const std::string& name, const char* kind) {
        for (const auto& [n, v] : decls)
            if (n == name) return v;
        throw SpecError(std::string("unknown ") + kind + ": " + name);
    }
    const FinCategory& category(const std::string& n) const {
        return find(categories, n, "category");
    }
    const Functor& functor(const std::string& n) const { return find(functors, n, "functor"); }
    const FinAlgebra<K>& algebra(const std::string& n) const {
        return find(algebras, n, "algebra");
    }
    const Precosheaf<K>& precosheaf(const std::string& n) const {
        return find(precosheaves, n, "precosheaf");
    }
};

namespace detail {

struct Token {
    std::string text;
    std::size_t col; // 1-based start column
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
        if (c == ';' || c == '=') {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#' && line[i] != ';' && line[i] != '=')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

template <typename K>
K parse_entry(const Token& t, std::size_t line) {
    try {
        return parse_scalar<K>(t.text);
    } catch (const std::exception& e) {
        throw ParseError(line, t.col, std::string("bad matrix entry: ") + e.what());
    }
}

/// Rows separated by ";" after the "=" token.
template <typename K>
Matrix<K> parse_matrix(const std::vector<Token>& toks, std::size_t first, std::size_t line,
                       std::size_t rows, std::size_t cols) {
    Matrix<K> m(rows, cols);
    std::size_t i = first;
    for (std::size_t r = 0; r < rows; ++r) {
        if (r > 0) {
            if (i >= toks.size() || toks[i].text != ";")
                throw ParseError(line, i < toks.size() ? toks[i].col : 1,
                                 "expected ';' between matrix rows");
            ++i;
        }
        for (std::size_t c = 0; c < cols; ++c, ++i) {
            if (i >= toks.size() || toks[i].text == ";")
                throw ParseError(line, i < toks.size() ? toks[i].col : 1,
                                 "matrix row has too few entries (expected " +
                                     std::to_string(cols) + ")");
            m(r, c) = parse_entry<K>(toks[i], line);
        }
    }
    if (i != toks.size())
        throw ParseError(line, toks[i].col, "trailing tokens after matrix");
    return m;
}

inline std::size_t lookup(const std::vector<std::string>& names, const Token& t,
                          std::size_t line, const char* kind) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == t.text) return i;
    throw ParseError(line, t.col, std::string("unknown ") + kind + ": " + t.text);
}

} // namespace detail

/// Parses the documented spec format. Grammar (one declaration per line,
/// '#' comments, blocks closed by 'end'):
///
///   field rationals            |  field gf <p>
///   category NAME
///     objects x y ...
///     identity OBJ MOR         # declares the identity morphism of OBJ
///     morphism MOR DOM COD
///     compose G F GF           # G o F = GF; identity composites implied
///   end
///   functor NAME SOURCE TARGET
///     object X X'
///     morphism F F'            # identities are mapped automatically
///   end
///   algebra NAME field | product_of_fields N | matrix N | group_algebra N
///   algebra NAME explicit
///     basis U V ...
///     unit <coeffs>
///     mult U V = <coeffs>      # unlisted products are zero
///   end
///   precosheaf NAME CATEGORY
///     at OBJ ALGEBRA
///     map MOR = row ; row ...  # identities get identity matrices
///   end
///   task <words>
template <typename K>
Workbench<K> parse_spec(const std::string& text) {
    using detail::Token;
    Workbench<K> wb;

    std::vector<std::pair<std::vector<Token>, std::size_t>> lines; // tokens + line no
    {
        std::istringstream in(text);
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            auto toks = detail::tokenize_line(line);
            if (!toks.empty()) lines.emplace_back(std::move(toks), no);
        }
    }

    auto declared = [&](const std::string& name) {
        for (const auto& [n, v] : wb.categories)
            if (n == name) return true;
        for (const auto& [n, v] : wb.functors)
            if (n == name) return true;
        for (const auto& [n, v] : wb.algebras)
            if (n == name) return true;
        for (const auto& [n, v] : wb.precosheaves)
            if (n == name) return true;
        return false;
    };
    auto claim_name = [&](const Token& t, std::size_t ln) {
        if (declared(t.text)) throw ParseError(ln, t.col, "duplicate id: " + t.text);
        return t.text;
    };

    std::size_t li = 0;
    auto expect_args = [&](const std::vector<Token>& t, std::size_t ln, std::size_t n) {
        if (t.size() != n)
            throw ParseError(ln, t.empty() ? 1 : t.back().col,
                             "expected " + std::to_string(n - 1) + " argument(s) after '" +
                                 t[0].text + "'");
    };

    while (li < lines.size()) {
        const auto& [toks, ln] = lines[li];
        const std::string& head = toks[0].text;

        if (head == "field") {
            if (toks.size() == 2 && toks[1].text == "rationals") {
                wb.field_name = "rationals";
            } else if (toks.size() == 3 && toks[1].text == "gf") {
                wb.field_name = "gf";
                try {
                    wb.field_prime = std::stoll(toks[2].text);
                } catch (const std::exception&) {
                    throw ParseError(ln, toks[2].col, "bad modulus: " + toks[2].text);
                }
            } else {
                throw ParseError(ln, toks[0].col, "expected 'field rationals' or 'field gf <p>'");
            }
            ++li;
        } else if (head == "category") {
            expect_args(toks, ln, 2);
            std::string name = claim_name(toks[1], ln);
            FinCategory c;
            std::vector<std::array<std::size_t, 3>> composites;
            ++li;
            for (; li < lines.size() && lines[li].first[0].text != "end"; ++li) {
                const auto& [t, n] = lines[li];
                const std::string& key = t[0].text;
                if (key == "objects") {
                    for (std::size_t i = 1; i < t.size(); ++i) c.objects.push_back(t[i].text);
                } else if (key == "identity") {
                    expect_args(t, n, 3);
                    std::size_t x = detail::lookup(c.objects, t[1], n, "object");
                    if (c.identities.size() <= x) c.identities.resize(c.objects.size(), SIZE_MAX);
                    c.identities[x] = c.morphisms.size();
                    c.morphisms.push_back({t[2].text, x, x});
                } else if (key == "morphism") {
                    expect_args(t, n, 4);
                    std::size_t d = detail::lookup(c.objects, t[2], n, "object");
                    std::size_t cod = detail::lookup(c.objects, t[3], n, "object");
                    c.morphisms.push_back({t[1].text, d, cod});
                } else if (key == "compose") {
                    expect_args(t, n, 4);
                    auto mor_names = [&]() {
                        std::vector<std::string> names;
                        for (const auto& m : c.morphisms) names.push_back(m.id);
                        return names;
                    }();
                    composites.push_back({detail::lookup(mor_names, t[1], n, "morphism"),
                                          detail::lookup(mor_names, t[2], n, "morphism"),
                                          detail::lookup(mor_names, t[3], n, "morphism")});
                } else {
                    throw ParseError(n, t[0].col, "unknown category entry: " + key);
                }
            }
            if (li == lines.size())
                throw ParseError(ln, toks[0].col, "unterminated category block");
            ++li; // consume 'end'
            if (c.identities.size() != c.objects.size())
                throw ParseError(ln, toks[0].col,
                                 "category " + name + " is missing identity declarations");
            for (std::size_t x = 0; x < c.objects.size(); ++x)
                if (c.identities[x] == SIZE_MAX)
                    throw ParseError(ln, toks[0].col,
                                     "object " + c.objects[x] + " has no identity");
            add_identity_composites(c);
            for (auto [g, f, gf] : composites) c.comp[{g, f}] = gf;
            wb.categories.emplace_back(name, std::move(c));
        } else if (head == "functor") {
            expect_args(toks, ln, 4);
            std::string name = claim_name(toks[1], ln);
            const FinCategory* src = nullptr;
            const FinCategory* tgt = nullptr;
            try {
                src = &wb.category(toks[2].text);
            } catch (const SpecError& e) {
                throw ParseError(ln, toks[2].col, e.what());
            }
            try {
                tgt = &wb.category(toks[3].text);
            } catch (const SpecError& e) {
                throw ParseError(ln, toks[3].col, e.what());
            }
            std::vector<std::string> src_objs = src->objects, tgt_objs = tgt->objects;
            auto names_of = [](const FinCategory& c) {
                std::vector<std::string> names;
                for (const auto& m : c.morphisms) names.push_back(m.id);
                return names;
            };
            auto src_mors = names_of(*src), tgt_mors = names_of(*tgt);

            std::vector<std::size_t> obj_map(src_objs.size(), SIZE_MAX);
            std::vector<std::size_t> mor_map(src_mors.size(), SIZE_MAX);
            ++li;
            for (; li < lines.size() && lines[li].first[0].text != "end"; ++li) {
                const auto& [t, n] = lines[li];
                if (t[0].text == "object") {
                    expect_args(t, n, 3);
                    obj_map[detail::lookup(src_objs, t[1], n, "object")] =
                        detail::lookup(tgt_objs, t[2], n, "object");
                } else if (t[0].text == "morphism") {
                    expect_args(t, n, 3);
                    mor_map[detail::lookup(src_mors, t[1], n, "morphism")] =
                        detail::lookup(tgt_mors, t[2], n, "morphism");
                } else {
                    throw ParseError(n, t[0].col, "unknown functor entry: " + t[0].text);
                }
            }
            if (li == lines.size())
                throw ParseError(ln, toks[0].col, "unterminated functor block");
            ++li;
            for (std::size_t x = 0; x < obj_map.size(); ++x)
                if (obj_map[x] == SIZE_MAX)
                    throw ParseError(ln, toks[0].col,
                                     "functor " + name + " misses object " + src_objs[x]);
            for (std::size_t f = 0; f < mor_map.size(); ++f) {
                if (mor_map[f] != SIZE_MAX) continue;
                bool is_identity = false;
                for (std::size_t x = 0; x < src->identities.size(); ++x)
                    if (src->identities[x] == f) {
                        mor_map[f] = tgt->identities[obj_map[x]];
                        is_identity = true;
                    }
                if (!is_identity)
                    throw ParseError(ln, toks[0].col,
                                     "functor " + name + " misses morphism " + src_mors[f]);
            }
            wb.functors.emplace_back(name,
                                     Functor{*src, *tgt, std::move(obj_map), std::move(mor_map)});
        } else if (head == "algebra") {
            if (toks.size() < 3)
                throw ParseError(ln, toks[0].col, "expected: algebra NAME KIND [N]");
            std::string name = claim_name(toks[1], ln);
            const std::string& kind = toks[2].text;
            auto preset_size = [&]() -> std::size_t {
                expect_args(toks, ln, 4);
                try {
                    long long v = std::stoll(toks[3].text);
                    if (v <= 0) throw std::invalid_argument("not positive");
                    return static_cast<std::size_t>(v);
                } catch (const std::exception&) {
                    throw ParseError(ln, toks[3].col, "bad size: " + toks[3].text);
                }
            };
            if (kind == "field") {
                expect_args(toks, ln, 3);
                wb.algebras.emplace_back(name, field_algebra<K>());
                ++li;
            } else if (kind == "product_of_fields") {
                wb.algebras.emplace_back(name, product_of_fields<K>(preset_size()));
                ++li;
            } else if (kind == "matrix") {
                wb.algebras.emplace_back(name, matrix_algebra<K>(preset_size()));
                ++li;
            } else if (kind == "group_algebra") {
                wb.algebras.emplace_back(name, cyclic_group_algebra<K>(preset_size()));
                ++li;
            } else if (kind == "explicit") {
                expect_args(toks, ln, 3);
                FinAlgebra<K> a;
                bool have_unit = false;
                std::vector<std::array<std::size_t, 2>> mult_seen;
                ++li;
                for (; li < lines.size() && lines[li].first[0].text != "end"; ++li) {
                    const auto& [t, n] = lines[li];
                    if (t[0].text == "basis") {
                        for (std::size_t i = 1; i < t.size(); ++i)
                            a.basis_labels.push_back(t[i].text);
                        std::size_t d = a.dim();
                        a.struct_consts.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
                        a.unit = zero_vec<K>(d);
                    } else if (t[0].text == "unit") {
                        if (a.dim() == 0) throw ParseError(n, t[0].col, "unit before basis");
                        if (t.size() != a.dim() + 1)
                            throw ParseError(n, t[0].col, "unit needs " +
                                                              std::to_string(a.dim()) +
                                                              " coefficients");
                        for (std::size_t i = 0; i < a.dim(); ++i)
                            a.unit[i] = detail::parse_entry<K>(t[i + 1], n);
                        have_unit = true;
                    } else if (t[0].text == "mult") {
                        if (a.dim() == 0) throw ParseError(n, t[0].col, "mult before basis");
                        if (t.size() != a.dim() + 4 || t[3].text != "=")
                            throw ParseError(n, t[0].col,
                                             "expected: mult U V = <coefficients>");
                        std::size_t i = detail::lookup(a.basis_labels, t[1], n, "basis element");
                        std::size_t j = detail::lookup(a.basis_labels, t[2], n, "basis element");
                        for (std::size_t k = 0; k < a.dim(); ++k)
                            a.struct_consts[i][j][k] = detail::parse_entry<K>(t[k + 4], n);
                        mult_seen.push_back({i, j});
                    } else {
                        throw ParseError(n, t[0].col, "unknown algebra entry: " + t[0].text);
                    }
                }
                if (li == lines.size())
                    throw ParseError(ln, toks[0].col, "unterminated algebra block");
                ++li;
                if (a.dim() == 0 || !have_unit)
                    throw ParseError(ln, toks[0].col,
                                     "explicit algebra needs basis and unit lines");
                wb.algebras.emplace_back(name, std::move(a));
            } else {
                throw ParseError(ln, toks[2].col, "unknown algebra kind: " + kind);
            }
        } else if (head == "precosheaf") {
            expect_args(toks, ln, 3);
            std::string name = claim_name(toks[1], ln);
            const FinCategory* cat = nullptr;
            try {
                cat = &wb.category(toks[2].text);
            } catch (const SpecError& e) {
                throw ParseError(ln, toks[2].col, e.what());
            }
            Precosheaf<K> s;
            s.category = *cat;
            s.obj_alg.resize(cat->objects.size());
            std::vector<bool> have_alg(cat->objects.size(), false);
            auto mor_names = [&]() {
                std::vector<std::string> names;
                for (const auto& m : cat->morphisms) names.push_back(m.id);
                return names;
            }();
            // map lines are parsed after all 'at' lines resolve the dims,
            // so collect (line index, morphism) first
            std::vector<std::pair<std::size_t, std::size_t>> map_lines; // line list idx, mor
            ++li;
            for (; li < lines.size() && lines[li].first[0].text != "end"; ++li) {
                const auto& [t, n] = lines[li];
                if (t[0].text == "at") {
                    expect_args(t, n, 3);
                    std::size_t x = detail::lookup(cat->objects, t[1], n, "object");
                    try {
                        s.obj_alg[x] = wb.algebra(t[2].text);
                    } catch (const SpecError& e) {
                        throw ParseError(n, t[2].col, e.what());
                    }
                    have_alg[x] = true;
                } else if (t[0].text == "map") {
                    if (t.size() < 3 || t[2].text != "=")
                        throw ParseError(n, t[0].col, "expected: map MOR = row ; row ...");
                    map_lines.emplace_back(li, detail::lookup(mor_names, t[1], n, "morphism"));
                } else {
                    throw ParseError(n, t[0].col, "unknown precosheaf entry: " + t[0].text);
                }
            }
            if (li == lines.size())
                throw ParseError(ln, toks[0].col, "unterminated precosheaf block");
            ++li;
            for (std::size_t x = 0; x < have_alg.size(); ++x)
                if (!have_alg[x])
                    throw ParseError(ln, toks[0].col,
                                     "precosheaf " + name + " misses object " + cat->objects[x]);
            s.mor_map.resize(cat->morphisms.size());
            std::vector<bool> have_map(cat->morphisms.size(), false);
            for (auto [lidx, f] : map_lines) {
                const auto& [t, n] = lines[lidx];
                std::size_t rows = s.obj_alg[cat->cod(f)].dim();
                std::size_t cols = s.obj_alg[cat->dom(f)].dim();
                s.mor_map[f] = detail::parse_matrix<K>(t, 3, n, rows, cols);
                have_map[f] = true;
            }
            for (std::size_t f = 0; f < cat->morphisms.size(); ++f) {
                if (have_map[f]) continue;
                bool is_identity = false;
                for (auto id : cat->identities)
                    if (id == f) is_identity = true;
                if (!is_identity)
                    throw ParseError(ln, toks[0].col,
                                     "precosheaf " + name + " misses morphism " + mor_names[f]);
                s.mor_map[f] = Matrix<K>::identity(s.obj_alg[cat->dom(f)].dim());
            }
            wb.precosheaves.emplace_back(name, std::move(s));
        } else if (head == "task") {
            if (toks.size() < 2)
                throw ParseError(ln, toks[0].col, "empty task line");
            std::vector<std::string> words;
            for (std::size_t i = 1; i < toks.size(); ++i) words.push_back(toks[i].text);
            wb.tasks.push_back(std::move(words));
            ++li;
        } else {
            throw ParseError(ln, toks[0].col, "unknown declaration: " + head);
        }
    }
    return wb;
}

/// Reads the declared field without resolving the rest; used by the CLI
/// to dispatch the scalar type before the full parse.
inline std::pair<std::string, long long> peek_field(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (toks[0].text != "field") return {"rationals", 0};
        if (toks.size() == 2 && toks[1].text == "rationals") return {"rationals", 0};
        if (toks.size() == 3 && toks[1].text == "gf") {
            try {
                return {"gf", std::stoll(toks[2].text)};
            } catch (const std::exception&) {
                throw ParseError(no, toks[2].col, "bad modulus: " + toks[2].text);
            }
        }
        throw ParseError(no, toks[0].col, "expected 'field rationals' or 'field gf <p>'");
    }
    return {"rationals", 0};
}

struct TaskResult {
    std::string label;
    std::string status; // "pass", "fail" or "error"
    std::vector<std::string> detail;
    long long ms = 0;
};

struct RunReport {
    std::string field_label;
    std::vector<TaskResult> tasks;

    bool all_pass() const {
        for (const auto& t : tasks)
            if (t.status != "pass") return false;
        return true;
    }
    /// 0 all pass, 1 at least one verification failure, 2 input error.
    int exit_code() const {
        for (const auto& t : tasks)
            if (t.status == "error") return 2;
        return all_pass() ? 0 : 1;
    }

    /// Line-oriented rendering; 'time_ms' lines are the only
    /// nondeterministic part, the final summary block is bit-exact.
    std::string render() const {
        std::ostringstream out;
        out << "# catalg report\n";
        out << "field: " << field_label << "\n";
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const auto& t = tasks[i];
            out << "task " << (i + 1) << ": " << t.label << "\n";
            out << "status: " << t.status << "\n";
            for (const auto& d : t.detail) out << "  " << d << "\n";
            out << "time_ms: " << t.ms << "\n";
        }
        std::size_t pass = 0, fail = 0, err = 0;
        for (const auto& t : tasks) {
            if (t.status == "pass") ++pass;
            else if (t.status == "fail") ++fail;
            else ++err;
        }
        out << "summary: tasks=" << tasks.size() << " pass=" << pass << " fail=" << fail
            << " error=" << err << "\n";
        return out.str();
    }
};

namespace detail {

template <typename K>
void task_check(const Workbench<K>& wb, TaskResult& res) {
    std::vector<std::string> failures;
    for (const auto& [n, c] : wb.categories)
        for (const auto& f : validate_category(c)) failures.push_back(n + ": " + f);
    for (const auto& [n, f] : wb.functors)
        for (const auto& w : validate_functor(f)) failures.push_back(n + ": " + w);
    for (const auto& [n, a] : wb.algebras)
        for (const auto& w : validate_algebra(a)) failures.push_back(n + ": " + w);
    for (const auto& [n, s] : wb.precosheaves)
        for (const auto& w : validate_precosheaf(s)) failures.push_back(n + ": " + w);
    res.detail.push_back("categories: " + std::to_string(wb.categories.size()));
    res.detail.push_back("functors: " + std::to_string(wb.functors.size()));
    res.detail.push_back("algebras: " + std::to_string(wb.algebras.size()));
    res.detail.push_back("precosheaves: " + std::to_string(wb.precosheaves.size()));
    for (const auto& f : failures) res.detail.push_back("witness: " + f);
    res.status = failures.empty() ? "pass" : "fail";
}

template <typename K>
void report_validation(TaskResult& res, const std::vector<std::string>& failures) {
    for (const auto& f : failures) res.detail.push_back("witness: " + f);
    res.status = failures.empty() ? "pass" : "fail";
}

template <typename K>
void task_build(const Workbench<K>& wb, const std::vector<std::string>& args, TaskResult& res) {
    if (args.size() != 2) throw SpecError("expected: build <construction> <name>");
    const std::string& what = args[0];
    if (what == "category_algebra") {
        auto a = category_algebra<K>(wb.category(args[1]));
        res.detail.push_back("dim: " + std::to_string(a.dim()));
        report_validation<K>(res, validate_algebra(a));
    } else if (what == "skew") {
        auto g = skew_category_algebra(wb.precosheaf(args[1]));
        res.detail.push_back("dim: " + std::to_string(g.algebra.dim()));
        auto failures = validate_algebra(g.algebra);
        for (const auto& f : validate_graded(g)) failures.push_back(f);
        report_validation<K>(res, failures);
    } else if (what == "tensor") {
        auto a = object_tensor_algebra(wb.precosheaf(args[1]));
        res.detail.push_back("dim: " + std::to_string(a.dim()));
        report_validation<K>(res, validate_algebra(a));
    } else if (what == "twisted") {
        TwistedSetup<K> setup;
        build_paper_twisting_map(wb.precosheaf(args[1]), setup);
        auto a = twisted_tensor_product(setup.twist);
        res.detail.push_back("dim: " + std::to_string(a.dim()));
        report_validation<K>(res, validate_algebra(a));
    } else {
        throw SpecError("unknown construction: " + what);
    }
}

template <typename K>
void task_induct(const Workbench<K>& wb, const std::vector<std::string>& args, TaskResult& res) {
    if (args.size() != 3) throw SpecError("expected: induct <turull|puig> <functor> <precosheaf>");
    auto ctx = make_induction_context(wb.functor(args[1]), wb.precosheaf(args[2]));
    if (args[0] == "turull") {
        auto ind = turull_induce(ctx);
        for (std::size_t x = 0; x < ind.precosheaf.obj_alg.size(); ++x)
            res.detail.push_back("dim at " + ctx.C().objects[x] + ": " +
                                 std::to_string(ind.precosheaf.obj_alg[x].dim()));
        report_validation<K>(res, validate_precosheaf(ind.precosheaf));
    } else if (args[0] == "puig") {
        auto ia = skew_as_interior(wb.precosheaf(args[2]));
        auto ind = puig_induce(ctx, ia);
        res.detail.push_back("quotient_dim: " + std::to_string(ind.quotient.proj.rows()));
        res.detail.push_back("dim: " + std::to_string(ind.algebra.dim()));
        report_validation<K>(res, validate_algebra(ind.algebra));
    } else {
        throw SpecError("unknown induction: " + args[0]);
    }
}

template <typename K>
void task_verify(const Workbench<K>& wb, const std::vector<std::string>& args, TaskResult& res) {
    if (args.empty()) throw SpecError("expected: verify <check> <names...>");
    const std::string& what = args[0];
    if (what == "twisting") {
        if (args.size() != 2) throw SpecError("expected: verify twisting <precosheaf>");
        TwistedSetup<K> setup;
        build_paper_twisting_map(wb.precosheaf(args[1]), setup);
        res.detail.push_back("dim_a: " + std::to_string(setup.tensor_alg.dim()));
        res.detail.push_back("dim_b: " + std::to_string(setup.cat_alg.dim()));
        report_validation<K>(res, validate_twisting_map(setup.twist));
    } else if (what == "thm11") {
        if (args.size() != 2) throw SpecError("expected: verify thm11 <precosheaf>");
        const auto& s = wb.precosheaf(args[1]);
        TwistedSetup<K> setup;
        build_paper_twisting_map(s, setup);
        auto twisted = twisted_tensor_product(setup.twist);
        auto skew = skew_category_algebra(s);
        auto emb = psi_embedding(s);
        AlgebraHom<K> psi_hom{&skew.algebra, &twisted, emb.psi};
        auto failures = validate_hom(psi_hom);
        std::size_t rk = rank(emb.psi);
        res.detail.push_back("dim_skew: " + std::to_string(skew.algebra.dim()));
        res.detail.push_back("dim_twisted: " + std::to_string(twisted.dim()));
        res.detail.push_back("rank_psi: " + std::to_string(rk));
        if (rk != skew.algebra.dim()) failures.push_back("psi is not injective");
        if (!(emb.phi * emb.psi == Matrix<K>::identity(skew.algebra.dim())))
            failures.push_back("phi o psi is not the identity");
        res.detail.push_back(std::string("bijective: ") +
                             (rk == twisted.dim() ? "yes" : "no"));
        report_validation<K>(res, failures);
    } else if (what == "lemma42") {
        if (args.size() != 3) throw SpecError("expected: verify lemma42 <functor> <precosheaf>");
        auto ctx = make_induction_context(wb.functor(args[1]), wb.precosheaf(args[2]));
        std::vector<std::string> failures;
        for (std::size_t x = 0; x < ctx.C().objects.size(); ++x) {
            auto m = ms_subspace(ctx, x); // throws if the two routes disagree
            res.detail.push_back("dim M_S at " + ctx.C().objects[x] + ": " +
                                 std::to_string(m.dim()));
        }
        res.detail.push_back(std::string("fixed_point_route_compared: ") +
                             (ctx.condition_423 ? "yes" : "no"));
        report_validation<K>(res, failures);
    } else if (what == "cond423") {
        if (args.size() != 2) throw SpecError("expected: verify cond423 <functor>");
        auto rep = check_condition_423(wb.functor(args[1]));
        if (rep.holds) {
            res.status = "pass";
        } else {
            res.status = "fail";
            auto join = [](const std::vector<std::string>& v) {
                std::string out;
                for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
                return "{" + out + "}";
            };
            for (const auto& w : rep.witnesses)
                res.detail.push_back("witness: morphism " + w.morphism + " (" + w.side +
                                     "): fiber class " + join(w.fiber_class) +
                                     " composes to " + join(w.composite_class));
        }
    } else if (what == "thm13") {
        if (args.size() != 3) throw SpecError("expected: verify thm13 <functor> <precosheaf>");
        auto ctx = make_induction_context(wb.functor(args[1]), wb.precosheaf(args[2]));
        auto result = thm13_isomorphism(ctx);
        const auto& rep = result.report;
        res.detail.push_back("dim_left: " + std::to_string(rep.dim_left));
        res.detail.push_back("dim_right: " + std::to_string(rep.dim_right));
        res.detail.push_back(std::string("algebra_iso: ") + (rep.is_algebra_iso ? "yes" : "no"));
        res.detail.push_back(std::string("graded: ") + (rep.is_graded ? "yes" : "no"));
        res.detail.push_back(std::string("interior_compatible: ") +
                             (rep.is_interior_compatible ? "yes" : "no"));
        report_validation<K>(res, rep.failures);
    } else if (what == "weakbialg") {
        if (args.size() != 2) throw SpecError("expected: verify weakbialg <category>");
        const auto& c = wb.category(args[1]);
        auto rep = check_weak_bialgebra_unit_failure<K>(c);
        bool unit_expected = (c.objects.size() == 1);
        res.detail.push_back(std::string("delta_multiplicative: ") +
                             (rep.delta_multiplicative ? "yes" : "no"));
        res.detail.push_back(std::string("unit_axiom: ") +
                             (rep.unit_axiom_holds ? "holds" : "fails"));
        res.detail.push_back(std::string("unit_axiom_expected: ") +
                             (unit_expected ? "holds" : "fails"));
        res.status = (rep.delta_multiplicative && rep.unit_axiom_holds == unit_expected)
                         ? "pass"
                         : "fail";
    } else {
        throw SpecError("unknown verification: " + what);
    }
}

} // namespace detail

/// Runs one task; module-level refusals (invalid arguments, violated
/// preconditions) are reported as failures, resolution problems as errors.
template <typename K>
TaskResult run_task(const Workbench<K>& wb, const std::vector<std::string>& words) {
    TaskResult res;
    {
        std::string label;
        for (const auto& w : words) label += (label.empty() ? "" : " ") + w;
        res.label = label;
    }
    auto start = std::chrono::steady_clock::now();
    try {
        if (words[0] == "check") {
            detail::task_check(wb, res);
        } else if (words[0] == "build") {
            detail::task_build(wb, {words.begin() + 1, words.end()}, res);
        } else if (words[0] == "induct") {
            detail::task_induct(wb, {words.begin() + 1, words.end()}, res);
        } else if (words[0] == "verify") {
            detail::task_verify(wb, {words.begin() + 1, words.end()}, res);
        } else {
            throw SpecError("unknown task: " + words[0]);
        }
    } catch (const SpecError& e) {
        res.status = "error";
        res.detail.push_back(std::string("error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        res.status = "fail";
        res.detail.push_back(std::string("refused: ") + e.what());
    } catch (const std::logic_error& e) {
        res.status = "fail";
        res.detail.push_back(std::string("inconsistency: ") + e.what());
    }
    res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return res;
}

/// Runs the whole task list, sequentially or with one async job per task
/// (all module operations are pure, so parallel execution is safe).
template <typename K>
RunReport run(const Workbench<K>& wb, bool parallel = false) {
    RunReport report;
    report.field_label = wb.field_name == "gf"
                             ? "gf " + std::to_string(wb.field_prime)
                             : wb.field_name;
    if (parallel) {
        std::vector<std::future<TaskResult>> jobs;
        for (const auto& t : wb.tasks)
            jobs.push_back(std::async(std::launch::async,
                                      [&wb, &t] { return run_task(wb, t); }));
        for (auto& j : jobs) report.tasks.push_back(j.get());
    } else {
        for (const auto& t : wb.tasks) report.tasks.push_back(run_task(wb, t));
    }
    return report;
}

// --- bundled fixtures -------------------------------------------------

inline std::vector<std::string> bundled_fixture_names() {
    return {"example43b", "monoid_c2", "poset_chain3", "groupoid_c2_to_triv",
            "parallel_collapse"};
}

/// Spec text of a bundled fixture; each carries a task list that
/// exercises every check meaningful for it.
inline std::string bundled_fixture_text(const std::string& name) {
    if (name == "example43b")
        return R"(# two-object source with an order-2 endomorphism collapsed by the functor
field rationals
category D
  objects x y
  identity x 1x
  identity y 1y
  morphism f1 x y
  morphism f2 y y
  compose f2 f1 f1
  compose f2 f2 1y
end
category C
  objects x' y'
  identity x' 1x'
  identity y' 1y'
  morphism f1' x' y'
end
functor F D C
  object x x'
  object y y'
  morphism f1 f1'
  morphism f2 1y'
end
algebra A2 product_of_fields 2
precosheaf S D
  at x A2
  at y A2
  map f1 = 1 0 ; 1 0
  map f2 = 0 1 ; 1 0
end
task check
task build skew S
task build twisted S
task verify twisting S
task verify thm11 S
task verify cond423 F
task verify lemma42 F S
task induct turull F S
task induct puig F S
task verify thm13 F S
task verify weakbialg D
)";
    if (name == "monoid_c2")
        return R"(# one-object category C2 under the identity functor
field rationals
category D
  objects x
  identity x 1
  morphism g x x
  compose g g 1
end
functor F D D
  object x x
  morphism g g
end
algebra A2 product_of_fields 2
precosheaf S D
  at x A2
  map g = 0 1 ; 1 0
end
task check
task verify twisting S
task verify thm11 S
task verify cond423 F
task verify lemma42 F S
task verify thm13 F S
task verify weakbialg D
)";
    if (name == "poset_chain3")
        return R"(# chain x <= y <= z with the identity functor
field rationals
category D
  objects x y z
  identity x 1x
  identity y 1y
  identity z 1z
  morphism a x y
  morphism b y z
  morphism c x z
  compose b a c
end
functor F D D
  object x x
  object y y
  object z z
  morphism a a
  morphism b b
  morphism c c
end
algebra A2 product_of_fields 2
algebra K1 field
precosheaf S D
  at x A2
  at y K1
  at z K1
  map a = 1 0
  map b = 1
  map c = 1 0
end
task check
task verify twisting S
task verify thm11 S
task verify cond423 F
task verify lemma42 F S
task verify thm13 F S
)";
    if (name == "groupoid_c2_to_triv")
        return R"(# the group C2 collapsed onto the trivial group
field rationals
category D
  objects x
  identity x 1
  morphism g x x
  compose g g 1
end
category C
  objects x'
  identity x' 1x'
end
functor F D C
  object x x'
  morphism g 1x'
end
algebra A2 product_of_fields 2
precosheaf S D
  at x A2
  map g = 0 1 ; 1 0
end
task check
task verify twisting S
task verify thm11 S
task verify cond423 F
task verify lemma42 F S
task induct puig F S
task verify thm13 F S
)";
    if (name == "parallel_collapse")
        return R"(# two parallel arrows collapsed onto one: the class condition fails
field rationals
category D
  objects x y
  identity x 1x
  identity y 1y
  morphism f x y
  morphism g x y
end
category C
  objects x' y'
  identity x' 1x'
  identity y' 1y'
  morphism h x' y'
end
functor F D C
  object x x'
  object y y'
  morphism f h
  morphism g h
end
algebra K1 field
precosheaf S D
  at x K1
  at y K1
  map f = 1
  map g = 1
end
task check
task verify twisting S
task verify cond423 F
)";
    throw SpecError("unknown fixture: " + name);
}

} // namespace catalg
