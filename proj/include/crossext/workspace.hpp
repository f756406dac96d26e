#pragma once

// JSON workspace: named algebras, modules, maps, cochains, crossed modules,
// sequences and extensions, plus a list of commands to run on them.

#include "extensions.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace crossext {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using AnyAlgebra = std::variant<LieAlgebra, LeibnizAlgebra>;
using AnyModule = std::variant<LieModule, LeibnizModule>;
using AnyCochain = std::variant<CECochain, LeibnizCochain>;
using AnyCrossed = std::variant<LieCrossedModule, LeibnizCrossedModule>;
using AnySequence = std::variant<LieSES, LeibnizSES>;

struct NamedAlgebra {
    std::string name;
    AnyAlgebra value;
};
struct NamedModule {
    std::string name;
    std::string algebra;
    AnyModule value;
};
struct NamedMorphism {
    std::string name;
    std::string source;
    std::string target;
    Matrix matrix;
};
struct NamedCochain {
    std::string name;
    std::string algebra;
    std::string module;
    AnyCochain value;
};
struct NamedCrossed {
    std::string name;
    std::string algebra;  // L
    std::string module;   // V
    AnyCrossed value;
};
struct NamedSequence {
    std::string name;
    std::string algebra;
    std::string sub, mid, quot;
    AnySequence value;
};
struct NamedExtension {
    std::string name;
    Json recipe;  // normalized description, re-emitted by serialize()
    CrossedExtension value;
    // Set when the extension is delta of another one; its class is then the
    // connecting image of that one's class.
    std::optional<std::pair<std::string, std::string>> connecting_from;  // (sequence, extension)
};

struct Workspace {
    FieldSpec field;
    std::vector<NamedAlgebra> algebras;
    std::vector<NamedModule> modules;
    std::vector<NamedMorphism> morphisms;
    std::vector<NamedCochain> cochains;
    std::vector<NamedCrossed> crossed_modules;
    std::vector<NamedSequence> sequences;
    std::vector<NamedExtension> extensions;
    Json commands = Json::array();

    template <class T>
    static const T* find_in(const std::vector<T>& items, const std::string& name) {
        for (const auto& x : items)
            if (x.name == name) return &x;
        return nullptr;
    }
    [[nodiscard]] const NamedAlgebra* algebra(const std::string& n) const { return find_in(algebras, n); }
    [[nodiscard]] const NamedModule* module(const std::string& n) const { return find_in(modules, n); }
    [[nodiscard]] const NamedMorphism* morphism(const std::string& n) const { return find_in(morphisms, n); }
    [[nodiscard]] const NamedCochain* cochain(const std::string& n) const { return find_in(cochains, n); }
    [[nodiscard]] const NamedCrossed* crossed(const std::string& n) const { return find_in(crossed_modules, n); }
    [[nodiscard]] const NamedSequence* sequence(const std::string& n) const { return find_in(sequences, n); }
    [[nodiscard]] const NamedExtension* extension(const std::string& n) const { return find_in(extensions, n); }
};

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices

inline Json scalar_to_json(const Scalar& s) {
    if (s.modulus() != 0) return static_cast<std::int64_t>(s.residue());
    const Rational& q = s.rational();
    if (q.denominator() == 1 && q.numerator().fits_slong_p()) return static_cast<std::int64_t>(q.numerator().get_si());
    return s.to_string();
}

inline Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

inline Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row_vector(r)));
    return out;
}

template <Flavor F>
Json cochain_values_to_json(const Cochain<F>& c) {
    Json out = Json::array();
    TupleBasis basis = c.basis();
    for (std::size_t t = 0; t < basis.size(); ++t) {
        Vector v = c.value_at(t);
        if (is_zero(v)) continue;
        out.push_back({{"tuple", basis.tuple(t)}, {"value", vector_to_json(v)}});
    }
    return out;
}

template <Flavor F>
Json class_to_json(const CohomologyClass<F>& c) {
    return {{"degree", c.representative.degree},
            {"zero", c.is_zero()},
            {"canonical", cochain_values_to_json(Cochain<F>{c.representative.degree, c.representative.algebra_dim,
                                                            c.representative.module_dim, c.canonical})}};
}

namespace io {

/// Parse errors carry the JSON path of the offending value.
[[noreturn]] inline void fail(ErrorCode code, const std::string& where, const std::string& what) {
    throw Error(code, where + ": " + what);
}

inline const Json& member(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(ErrorCode::ParseError, where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(ErrorCode::ParseError, where, std::string("missing key '") + key + "'");
    return *it;
}

inline std::string str(const Json& obj, const char* key, const std::string& where) {
    const Json& v = member(obj, key, where);
    if (!v.is_string()) fail(ErrorCode::ParseError, where + "." + key, "expected a string");
    return v.get<std::string>();
}

inline std::size_t count(const Json& obj, const char* key, const std::string& where) {
    const Json& v = member(obj, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        fail(ErrorCode::ParseError, where + "." + key, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

inline Scalar scalar(const Json& v, const FieldSpec& field, const std::string& where) {
    try {
        Scalar s;
        if (v.is_number_integer()) {
            s = Scalar(v.get<std::int64_t>());
        } else if (v.is_string()) {
            s = Scalar::parse(v.get<std::string>());
        } else {
            fail(ErrorCode::ParseError, where, "expected an integer or a string such as \"3/2\"");
        }
        return s.in_field(field);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorCode::ParseError, where, e.what());
    }
}

inline Vector vector(const Json& v, std::size_t n, const FieldSpec& field, const std::string& where) {
    if (!v.is_array() || v.size() != n) fail(ErrorCode::ParseError, where, "expected an array of length " + std::to_string(n));
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = scalar(v[i], field, where + "[" + std::to_string(i) + "]");
    return out;
}

inline Matrix matrix(const Json& v, std::size_t rows, std::size_t cols, const FieldSpec& field, const std::string& where) {
    if (!v.is_array() || v.size() != rows) {
        fail(ErrorCode::ParseError, where, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector(v[r], cols, field, where + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

inline std::size_t dim_of(const AnyAlgebra& a) {
    return std::visit([](const auto& x) { return x.dim(); }, a);
}
inline std::size_t dim_of(const AnyModule& m) {
    return std::visit([](const auto& x) { return x.dim(); }, m);
}
inline Flavor flavor_of(const AnyAlgebra& a) { return a.index() == 0 ? Flavor::Lie : Flavor::Leibniz; }

/// Wraps engine errors raised while building an object.
template <class Fn>
auto validated(const std::string& where, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnresolvedReference ||
            e.code() == ErrorCode::ValidationFail) {
            throw;
        }
        Violation v = e.violation();
        throw Error(ErrorCode::ValidationFail, where + ": " + v.to_string(), v.witness);
    } catch (const std::invalid_argument& e) {
        fail(ErrorCode::ValidationFail, where, e.what());
    } catch (const std::domain_error& e) {
        fail(ErrorCode::ValidationFail, where, e.what());
    }
}

}  // namespace io

// ---------------------------------------------------------------------------
// Parsing

class WorkspaceParser {
public:
    explicit WorkspaceParser(std::optional<FieldSpec> field_override) : override_(field_override) {}

    Workspace parse(const std::string& text) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what(), {e.byte});
        }
        return parse(doc);
    }

    Workspace parse(const Json& doc) {
        if (!doc.is_object()) io::fail(ErrorCode::ParseError, "$", "document must be an object");
        static const std::vector<std::string> known = {"field",           "algebras",  "modules",    "morphisms", "cochains",
                                                       "crossed_modules", "extensions", "sequences", "commands"};
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
                io::fail(ErrorCode::ParseError, "$", "unknown top-level key '" + it.key() + "'");
            }
        }
        ws_ = Workspace{};
        try {
            std::string f = doc.contains("field") ? io::str(doc, "field", "$") : "q";
            ws_.field = override_ ? *override_ : FieldSpec::parse(f);
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            io::fail(ErrorCode::ParseError, "$.field", e.what());
        }
        each(doc, "algebras", [&](const Json& j, const std::string& w) { parse_algebra(j, w); });
        each(doc, "modules", [&](const Json& j, const std::string& w) { parse_module(j, w); });
        each(doc, "morphisms", [&](const Json& j, const std::string& w) { parse_morphism(j, w); });
        each(doc, "cochains", [&](const Json& j, const std::string& w) { parse_cochain(j, w); });
        each(doc, "crossed_modules", [&](const Json& j, const std::string& w) { parse_crossed(j, w); });
        each(doc, "sequences", [&](const Json& j, const std::string& w) { parse_sequence(j, w); });
        each(doc, "extensions", [&](const Json& j, const std::string& w) { parse_extension(j, w); });
        if (doc.contains("commands")) {
            const Json& c = doc.at("commands");
            if (!c.is_array()) io::fail(ErrorCode::ParseError, "$.commands", "expected an array");
            for (std::size_t i = 0; i < c.size(); ++i) {
                const std::string w = "$.commands[" + std::to_string(i) + "]";
                io::str(c[i], "command", w);
                ws_.commands.push_back(c[i]);
            }
        }
        return std::move(ws_);
    }

private:
    template <class Fn>
    void each(const Json& doc, const char* key, Fn&& fn) {
        if (!doc.contains(key)) return;
        const Json& list = doc.at(key);
        const std::string where = std::string("$.") + key;
        if (!list.is_array()) io::fail(ErrorCode::ParseError, where, "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) fn(list[i], where + "[" + std::to_string(i) + "]");
    }

    std::string claim_name(const Json& j, const std::string& where) {
        std::string name = io::str(j, "name", where);
        if (name.empty()) io::fail(ErrorCode::ParseError, where, "empty name");
        if (!names_.emplace(name, where).second) io::fail(ErrorCode::ParseError, where, "duplicate name '" + name + "'");
        return name;
    }

    template <class T>
    const T& resolve(const T* p, const std::string& name, const std::string& kind, const std::string& where) {
        if (p == nullptr) io::fail(ErrorCode::UnresolvedReference, where, "no " + kind + " named '" + name + "'");
        return *p;
    }
    const NamedAlgebra& algebra_ref(const Json& j, const char* key, const std::string& w) {
        std::string n = io::str(j, key, w);
        return resolve(ws_.algebra(n), n, "algebra", w);
    }
    const NamedModule& module_ref(const Json& j, const char* key, const std::string& w) {
        std::string n = io::str(j, key, w);
        return resolve(ws_.module(n), n, "module", w);
    }

    Scalar sc(const Json& v, const std::string& w) { return io::scalar(v, ws_.field, w); }
    Matrix mat(const Json& v, std::size_t r, std::size_t c, const std::string& w) {
        return io::matrix(v, r, c, ws_.field, w);
    }

    void parse_algebra(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        std::string kind = j.contains("kind") ? io::str(j, "kind", w) : "lie";
        if (kind != "lie" && kind != "leibniz") io::fail(ErrorCode::ParseError, w + ".kind", "expected 'lie' or 'leibniz'");
        std::size_t n = io::count(j, "dim", w);
        StructureConstants c(n);
        std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
        std::vector<std::array<std::size_t, 3>> entries;
        if (j.contains("brackets")) {
            const Json& b = j.at("brackets");
            if (!b.is_array()) io::fail(ErrorCode::ParseError, w + ".brackets", "expected an array");
            for (std::size_t t = 0; t < b.size(); ++t) {
                const std::string wt = w + ".brackets[" + std::to_string(t) + "]";
                const Json& e = b[t];
                if (!e.is_array() || e.size() != 4) io::fail(ErrorCode::ParseError, wt, "expected [i, j, k, value]");
                std::array<std::size_t, 3> idx{};
                for (std::size_t a = 0; a < 3; ++a) {
                    if (!e[a].is_number_integer() || e[a].get<std::int64_t>() < 0 || e[a].get<std::size_t>() >= n) {
                        io::fail(ErrorCode::ParseError, wt, "basis index out of range");
                    }
                    idx[a] = e[a].get<std::size_t>();
                }
                c.at(idx[0], idx[1], idx[2]) += sc(e[3], wt + "[3]");
                given[idx[0]][idx[1]] = true;
                entries.push_back(idx);
            }
        }
        if (kind == "lie") {
            // Brackets listed for (i, j) only are extended by antisymmetry.
            for (const auto& idx : entries) {
                if (!given[idx[1]][idx[0]]) c.at(idx[1], idx[0], idx[2]) = -c(idx[0], idx[1], idx[2]);
            }
            ws_.algebras.push_back({name, io::validated(w, [&] { return AnyAlgebra(LieAlgebra::validate(c)); })});
        } else {
            ws_.algebras.push_back({name, io::validated(w, [&] { return AnyAlgebra(LeibnizAlgebra::validate(c)); })});
        }
    }

    void parse_module(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        const NamedAlgebra& alg = algebra_ref(j, "algebra", w);
        AnyModule m = std::visit(
            [&](const auto& g) -> AnyModule {
                using A = std::decay_t<decltype(g)>;
                constexpr Flavor F = A::flavor;
                if (j.contains("builtin")) {
                    std::string b = io::str(j, "builtin", w);
                    if (b == "adjoint") return io::validated(w, [&] { return adjoint(g); });
                    if (b == "trivial") {
                        std::size_t d = j.contains("dim") ? io::count(j, "dim", w) : 1;
                        return io::validated(w, [&] { return trivial_module(g, d); });
                    }
                    io::fail(ErrorCode::ParseError, w + ".builtin", "expected 'adjoint' or 'trivial'");
                }
                std::size_t d = io::count(j, "dim", w);
                auto read = [&](const char* key) {
                    std::vector<Matrix> out;
                    const Json& list = io::member(j, key, w);
                    if (!list.is_array() || list.size() != g.dim()) {
                        io::fail(ErrorCode::ParseError, w + "." + key, "expected one matrix per algebra basis vector");
                    }
                    for (std::size_t i = 0; i < g.dim(); ++i) {
                        out.push_back(mat(list[i], d, d, w + "." + key + "[" + std::to_string(i) + "]"));
                    }
                    return out;
                };
                std::vector<Matrix> left = read("left");
                std::vector<Matrix> right;
                if constexpr (F == Flavor::Leibniz) {
                    if (j.contains("right")) {
                        right = read("right");
                    } else {
                        for (const auto& a : left) right.push_back(Scalar(-1) * a);
                    }
                } else if (j.contains("right")) {
                    io::fail(ErrorCode::ParseError, w + ".right", "modules over Lie algebras have no right action");
                }
                return io::validated(w, [&] { return Representation<F>::validate(g, d, left, right); });
            },
            alg.value);
        ws_.modules.push_back({name, alg.name, std::move(m)});
    }

    void parse_morphism(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        const NamedModule& s = module_ref(j, "source", w);
        const NamedModule& t = module_ref(j, "target", w);
        if (s.algebra != t.algebra) io::fail(ErrorCode::ValidationFail, w, "source and target are over different algebras");
        Matrix m = mat(io::member(j, "matrix", w), io::dim_of(t.value), io::dim_of(s.value), w + ".matrix");
        const NamedAlgebra& alg = *ws_.algebra(s.algebra);
        std::visit(
            [&](const auto& g) {
                using A = std::decay_t<decltype(g)>;
                using R = Representation<A::flavor>;
                io::validated(w, [&] {
                    throw_if(check_module_morphism(g, std::get<R>(s.value), std::get<R>(t.value), m));
                    return 0;
                });
            },
            alg.value);
        ws_.morphisms.push_back({name, s.name, t.name, std::move(m)});
    }

    void parse_cochain(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        const NamedAlgebra& alg = algebra_ref(j, "algebra", w);
        const NamedModule& mod = module_ref(j, "module", w);
        if (mod.algebra != alg.name) io::fail(ErrorCode::ValidationFail, w, "module is not over the given algebra");
        std::size_t degree = io::count(j, "degree", w);
        AnyCochain value = std::visit(
            [&](const auto& g) -> AnyCochain {
                using A = std::decay_t<decltype(g)>;
                constexpr Flavor F = A::flavor;
                const std::size_t md = io::dim_of(mod.value);
                Cochain<F> c = Cochain<F>::zero(degree, g.dim(), md);
                TupleBasis basis(F, g.dim(), degree);
                if (j.contains("values")) {
                    const Json& list = j.at("values");
                    if (!list.is_array()) io::fail(ErrorCode::ParseError, w + ".values", "expected an array");
                    for (std::size_t t = 0; t < list.size(); ++t) {
                        const std::string wt = w + ".values[" + std::to_string(t) + "]";
                        const Json& tup = io::member(list[t], "tuple", wt);
                        if (!tup.is_array() || tup.size() != degree) {
                            io::fail(ErrorCode::ParseError, wt + ".tuple", "expected " + std::to_string(degree) + " indices");
                        }
                        std::vector<std::size_t> idx;
                        for (const auto& x : tup) {
                            if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::size_t>() >= g.dim()) {
                                io::fail(ErrorCode::ParseError, wt + ".tuple", "basis index out of range");
                            }
                            idx.push_back(x.get<std::size_t>());
                        }
                        auto norm = basis.normalize(idx);
                        if (!norm) io::fail(ErrorCode::ParseError, wt + ".tuple", "repeated index in an alternating cochain");
                        Vector v = io::vector(io::member(list[t], "value", wt), md, ws_.field, wt + ".value");
                        if (norm->first < 0) v = -v;
                        c.set_value_at(norm->second, c.value_at(norm->second) + v);
                    }
                }
                return c;
            },
            alg.value);
        ws_.cochains.push_back({name, alg.name, mod.name, std::move(value)});
    }

    void parse_crossed(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        const NamedAlgebra& alg = algebra_ref(j, "L", w);
        const NamedModule& mod = module_ref(j, "V", w);
        if (mod.algebra != alg.name) io::fail(ErrorCode::ValidationFail, w, "V is not a module over L");
        Matrix d = mat(io::member(j, "partial", w), io::dim_of(alg.value), io::dim_of(mod.value), w + ".partial");
        AnyCrossed cm = std::visit(
            [&](const auto& g) -> AnyCrossed {
                using A = std::decay_t<decltype(g)>;
                constexpr Flavor F = A::flavor;
                return io::validated(w, [&] {
                    return CrossedModule<F>::validate(g, std::get<Representation<F>>(mod.value), d);
                });
            },
            alg.value);
        ws_.crossed_modules.push_back({name, alg.name, mod.name, std::move(cm)});
    }

    void parse_sequence(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        const NamedModule& sub = module_ref(j, "sub", w);
        const NamedModule& mid = module_ref(j, "mid", w);
        const NamedModule& quot = module_ref(j, "quot", w);
        if (sub.algebra != mid.algebra || mid.algebra != quot.algebra) {
            io::fail(ErrorCode::ValidationFail, w, "modules are over different algebras");
        }
        const NamedAlgebra& alg = *ws_.algebra(mid.algebra);
        Matrix alpha = map_ref(j, "alpha", io::dim_of(mid.value), io::dim_of(sub.value), w);
        Matrix beta = map_ref(j, "beta", io::dim_of(quot.value), io::dim_of(mid.value), w);
        AnySequence s = std::visit(
            [&](const auto& g) -> AnySequence {
                using A = std::decay_t<decltype(g)>;
                constexpr Flavor F = A::flavor;
                using R = Representation<F>;
                return io::validated(w, [&] {
                    return ShortExactSequence<F>::validate(g, std::get<R>(sub.value), std::get<R>(mid.value),
                                                           std::get<R>(quot.value), alpha, beta);
                });
            },
            alg.value);
        ws_.sequences.push_back({name, alg.name, sub.name, mid.name, quot.name, std::move(s)});
    }

    /// A map given inline as a matrix or by the name of a morphism.
    Matrix map_ref(const Json& j, const char* key, std::size_t rows, std::size_t cols, const std::string& w) {
        const Json& v = io::member(j, key, w);
        if (v.is_string()) {
            std::string n = v.get<std::string>();
            const NamedMorphism& m = resolve(ws_.morphism(n), n, "morphism", w + "." + key);
            if (m.matrix.rows() != rows || m.matrix.cols() != cols) {
                io::fail(ErrorCode::ValidationFail, w + "." + key, "morphism '" + n + "' has the wrong shape");
            }
            return m.matrix;
        }
        return mat(v, rows, cols, w + "." + key);
    }

    const LieAlgebra& lie_algebra(const Json& j, const char* key, const std::string& w) {
        const NamedAlgebra& a = algebra_ref(j, key, w);
        if (a.value.index() != 0) io::fail(ErrorCode::ValidationFail, w, "extensions are defined over Lie algebras");
        return std::get<LieAlgebra>(a.value);
    }
    const LieModule& lie_module(const Json& j, const char* key, const std::string& w) {
        const NamedModule& m = module_ref(j, key, w);
        if (m.value.index() != 0) io::fail(ErrorCode::ValidationFail, w, "extensions need modules over Lie algebras");
        return std::get<LieModule>(m.value);
    }
    const NamedExtension& extension_ref(const Json& j, const char* key, const std::string& w) {
        std::string n = io::str(j, key, w);
        return resolve(ws_.extension(n), n, "extension", w);
    }
    const NamedSequence& lie_sequence(const Json& j, const char* key, const std::string& w) {
        std::string n = io::str(j, key, w);
        const NamedSequence& s = resolve(ws_.sequence(n), n, "sequence", w);
        if (s.value.index() != 0) io::fail(ErrorCode::ValidationFail, w, "extensions need sequences of Lie modules");
        return s;
    }

    void parse_extension(const Json& j, const std::string& w) {
        std::string name = claim_name(j, w);
        std::string how = j.contains("construct") ? io::str(j, "construct", w) : "explicit";
        NamedExtension out;
        out.name = name;
        Json recipe = {{"name", name}, {"construct", how}};
        if (how == "explicit") {
            const LieAlgebra& g = lie_algebra(j, "g", w);
            const LieModule& m = lie_module(j, "M", w);
            std::string cname = io::str(j, "base", w);
            const NamedCrossed& base = resolve(ws_.crossed(cname), cname, "crossed module", w);
            if (base.value.index() != 0) io::fail(ErrorCode::ValidationFail, w, "base must be a Lie crossed module");
            CrossedExtension e;
            e.g = g;
            e.M = m;
            e.base = std::get<LieCrossedModule>(base.value);
            e.pi = mat(io::member(j, "pi", w), g.dim(), e.base.L.dim(), w + ".pi");
            Json ups = j.contains("upper") ? j.at("upper") : Json::array();
            if (!ups.is_array()) io::fail(ErrorCode::ParseError, w + ".upper", "expected an array");
            for (std::size_t i = 0; i < ups.size(); ++i) {
                const std::string wi = w + ".upper[" + std::to_string(i) + "]";
                const NamedModule& um = module_ref(ups[i], "module", wi);
                if (um.algebra != io::str(j, "g", w)) io::fail(ErrorCode::ValidationFail, wi, "module is not over g");
                e.upper.push_back(std::get<LieModule>(um.value));
                e.maps.push_back(mat(io::member(ups[i], "map", wi), e.dim_at(i + 1), e.upper.back().dim(), wi + ".map"));
            }
            e.n = e.upper.size() + 2;
            e.f = mat(io::member(j, "f", w), e.dim_at(e.n - 1), m.dim(), w + ".f");
            recipe["g"] = io::str(j, "g", w);
            recipe["M"] = io::str(j, "M", w);
            recipe["base"] = cname;
            recipe["pi"] = matrix_to_json(e.pi);
            Json uj = Json::array();
            for (std::size_t i = 0; i < ups.size(); ++i) {
                uj.push_back({{"module", ups[i].at("module")}, {"map", matrix_to_json(e.maps[i])}});
            }
            recipe["upper"] = uj;
            recipe["f"] = matrix_to_json(e.f);
            out.value = io::validated(w, [&] { return checked(std::move(e)); });
        } else if (how == "zero") {
            const LieAlgebra& g = lie_algebra(j, "g", w);
            const LieModule& m = lie_module(j, "M", w);
            std::size_t n = io::count(j, "n", w);
            recipe["g"] = io::str(j, "g", w);
            recipe["M"] = io::str(j, "M", w);
            recipe["n"] = n;
            out.value = io::validated(w, [&] { return zero_extension(g, m, n); });
        } else if (how == "yoneda") {
            const NamedSequence& s = lie_sequence(j, "sequence", w);
            std::string cn = io::str(j, "cocycle", w);
            const NamedCochain& c = resolve(ws_.cochain(cn), cn, "cochain", w);
            if (c.module != s.quot) io::fail(ErrorCode::ValidationFail, w, "cocycle must take values in the quotient module");
            const auto& g = std::get<LieAlgebra>(ws_.algebra(s.algebra)->value);
            recipe["sequence"] = s.name;
            recipe["cocycle"] = cn;
            out.value = io::validated(w, [&] {
                return from_crossed(yoneda_crossed_module(g, std::get<LieSES>(s.value), std::get<CECochain>(c.value)));
            });
        } else if (how == "negate" || how == "connecting") {
            const NamedExtension& e = extension_ref(j, "of", w);
            recipe["of"] = e.name;
            if (how == "negate") {
                out.value = io::validated(w, [&] { return negate(e.value); });
                out.connecting_from = std::nullopt;
            } else {
                const NamedSequence& s = lie_sequence(j, "sequence", w);
                recipe["sequence"] = s.name;
                out.value = io::validated(w, [&] { return opext_connecting(std::get<LieSES>(s.value), e.value); });
                out.connecting_from = std::make_pair(s.name, e.name);
            }
        } else if (how == "baer-sum" || how == "sum-over-g") {
            const NamedExtension& a = extension_ref(j, "left", w);
            const NamedExtension& b = extension_ref(j, "right", w);
            recipe["left"] = a.name;
            recipe["right"] = b.name;
            out.value = io::validated(w, [&] {
                if (how == "sum-over-g") return sum_over_g(a.value, b.value);
                return a.value.n == 2 ? baer_sum_n2(a.value, b.value) : baer_sum(a.value, b.value);
            });
        } else if (how == "push-forward") {
            const NamedExtension& e = extension_ref(j, "of", w);
            std::string mn = io::str(j, "morphism", w);
            const NamedMorphism& m = resolve(ws_.morphism(mn), mn, "morphism", w);
            const LieModule& target = std::get<LieModule>(ws_.module(m.target)->value);
            recipe["of"] = e.name;
            recipe["morphism"] = mn;
            out.value = io::validated(w, [&] {
                if (!(std::get<LieModule>(ws_.module(m.source)->value) == e.value.M)) {
                    throw Error(ErrorCode::BaseMismatch, "morphism source is not the extension's module");
                }
                return push_forward(m.matrix, target, e.value);
            });
        } else {
            io::fail(ErrorCode::ParseError, w + ".construct", "unknown construction '" + how + "'");
        }
        out.recipe = std::move(recipe);
        ws_.extensions.push_back(std::move(out));
    }

    std::optional<FieldSpec> override_;
    Workspace ws_;
    std::map<std::string, std::string> names_;
};

inline Workspace parse_workspace(const std::string& text, std::optional<FieldSpec> field = std::nullopt) {
    return WorkspaceParser(field).parse(text);
}

inline Workspace parse_workspace(const Json& doc, std::optional<FieldSpec> field = std::nullopt) {
    return WorkspaceParser(field).parse(doc);
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string field_name(const FieldSpec& f) { return f.is_rational() ? "q" : "p:" + std::to_string(f.modulus); }

inline Json serialize(const Workspace& ws) {
    Json doc;
    doc["field"] = field_name(ws.field);
    Json algebras = Json::array();
    for (const auto& a : ws.algebras) {
        const StructureConstants& c = std::visit([](const auto& x) -> const StructureConstants& { return x.constants(); }, a.value);
        const bool lie = a.value.index() == 0;
        Json br = Json::array();
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = lie ? i + 1 : 0; j < c.dim(); ++j)
                for (std::size_t k = 0; k < c.dim(); ++k)
                    if (!c(i, j, k).is_zero()) br.push_back({i, j, k, scalar_to_json(c(i, j, k))});
        algebras.push_back({{"name", a.name}, {"kind", lie ? "lie" : "leibniz"}, {"dim", c.dim()}, {"brackets", br}});
    }
    doc["algebras"] = algebras;
    Json modules = Json::array();
    for (const auto& m : ws.modules) {
        Json j = {{"name", m.name}, {"algebra", m.algebra}};
        std::visit(
            [&](const auto& r) {
                j["dim"] = r.dim();
                Json left = Json::array();
                for (const auto& a : r.left()) left.push_back(matrix_to_json(a));
                j["left"] = left;
                if (!r.right().empty()) {
                    Json right = Json::array();
                    for (const auto& a : r.right()) right.push_back(matrix_to_json(a));
                    j["right"] = right;
                }
            },
            m.value);
        modules.push_back(j);
    }
    doc["modules"] = modules;
    Json morphisms = Json::array();
    for (const auto& m : ws.morphisms) {
        morphisms.push_back({{"name", m.name}, {"source", m.source}, {"target", m.target}, {"matrix", matrix_to_json(m.matrix)}});
    }
    doc["morphisms"] = morphisms;
    Json cochains = Json::array();
    for (const auto& c : ws.cochains) {
        std::visit(
            [&](const auto& z) {
                cochains.push_back({{"name", c.name},
                                    {"algebra", c.algebra},
                                    {"module", c.module},
                                    {"degree", z.degree},
                                    {"values", cochain_values_to_json(z)}});
            },
            c.value);
    }
    doc["cochains"] = cochains;
    Json crossed = Json::array();
    for (const auto& c : ws.crossed_modules) {
        const Matrix& d = std::visit([](const auto& x) -> const Matrix& { return x.partial; }, c.value);
        crossed.push_back({{"name", c.name}, {"L", c.algebra}, {"V", c.module}, {"partial", matrix_to_json(d)}});
    }
    doc["crossed_modules"] = crossed;
    Json sequences = Json::array();
    for (const auto& s : ws.sequences) {
        std::visit(
            [&](const auto& x) {
                sequences.push_back({{"name", s.name},
                                     {"sub", s.sub},
                                     {"mid", s.mid},
                                     {"quot", s.quot},
                                     {"alpha", matrix_to_json(x.alpha)},
                                     {"beta", matrix_to_json(x.beta)}});
            },
            s.value);
    }
    doc["sequences"] = sequences;
    Json extensions = Json::array();
    for (const auto& e : ws.extensions) extensions.push_back(e.recipe);
    doc["extensions"] = extensions;
    doc["commands"] = ws.commands;
    return doc;
}

}  // namespace crossext
