#pragma once

// Commands run against a workspace, producing human and JSON reports.

#include "workspace.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace crossext {

struct CommandOptions {
    std::size_t max_degree = 4;
    std::size_t dimension_guard = 100000;
};

struct Report {
    Report() = default;
    Report(std::string command_name, std::string target_name)
        : command(std::move(command_name)), target(std::move(target_name)) {}

    std::string command;
    std::string target;
    bool pass = true;
    Json data = Json::object();
    std::vector<std::string> lines;
    std::vector<std::string> warnings;

    [[nodiscard]] Json to_json() const {
        Json j = {{"command", command}, {"target", target}, {"pass", pass}};
        for (auto it = data.begin(); it != data.end(); ++it) j[it.key()] = it.value();
        if (!warnings.empty()) j["warnings"] = warnings;
        return j;
    }
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"check",    "cohomology", "theta",   "classify", "baer-sum",
                                                   "pushout",  "connecting", "yoneda",  "report"};
    return names;
}

namespace cmd {

inline std::string class_text(const Json& c) {
    if (c.at("zero").get<bool>()) return "0";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& e : c.at("canonical")) {
        if (!first) os << ", ";
        first = false;
        os << e.at("tuple").dump() << " -> " << e.at("value").dump();
    }
    os << "]";
    return os.str();
}

template <Flavor F>
std::size_t total_cochain_dim(std::size_t gdim, std::size_t mdim, std::size_t top) {
    std::size_t total = 0;
    for (std::size_t n = 0; n <= top; ++n) total += Cochain<F>::space_dim(n, gdim, mdim);
    return total;
}

template <Flavor F>
void guard(Report& r, std::size_t gdim, std::size_t mdim, std::size_t top, const CommandOptions& opt) {
    std::size_t total = total_cochain_dim<F>(gdim, mdim, top);
    if (total > opt.dimension_guard) {
        r.warnings.push_back("total cochain dimension " + std::to_string(total) + " exceeds " +
                             std::to_string(opt.dimension_guard) + "; this may be slow");
    }
}

inline std::string arg(const Json& c, const char* key) {
    auto it = c.find(key);
    if (it == c.end() || !it->is_string()) throw Error(ErrorCode::ParseError, std::string("command needs '") + key + "'");
    return it->get<std::string>();
}

template <class T>
const T& need(const T* p, const std::string& kind, const std::string& name) {
    if (p == nullptr) throw Error(ErrorCode::UnresolvedReference, "no " + kind + " named '" + name + "'");
    return *p;
}

// check ---------------------------------------------------------------------

inline std::vector<Report> check(const Workspace& ws, const Json& c) {
    std::string only = c.contains("object") ? arg(c, "object") : "";
    std::vector<Report> out;
    auto simple = [&](const std::string& kind, const std::string& name) {
        if (!only.empty() && only != name) return;
        Report r{"check", name};
        r.data = {{"kind", kind}};
        r.lines.push_back(kind + " " + name + ": valid");
        out.push_back(std::move(r));
    };
    for (const auto& a : ws.algebras) simple(a.value.index() == 0 ? "lie algebra" : "leibniz algebra", a.name);
    for (const auto& m : ws.modules) simple("module", m.name);
    for (const auto& m : ws.morphisms) simple("morphism", m.name);
    for (const auto& z : ws.cochains) simple("cochain", z.name);
    for (const auto& x : ws.crossed_modules) simple("crossed module", x.name);
    for (const auto& s : ws.sequences) simple("sequence", s.name);
    for (const auto& e : ws.extensions) {
        if (!only.empty() && only != e.name) continue;
        Report r{"check", e.name};
        Json nodes = Json::array();
        for (const auto& node : extension_report(e.value)) {
            bool ok = !node.result;
            nodes.push_back({{"node", node.label}, {"pass", ok}, {"detail", ok ? "" : node.result->to_string()}});
            r.lines.push_back(std::string(ok ? "  PASS " : "  FAIL ") + node.label + (ok ? "" : ": " + node.result->to_string()));
            r.pass = r.pass && ok;
        }
        r.data = {{"kind", "extension"}, {"n", e.value.n}, {"nodes", nodes}};
        r.lines.insert(r.lines.begin(), "extension " + e.name + " (n = " + std::to_string(e.value.n) + ")");
        out.push_back(std::move(r));
    }
    if (!only.empty() && out.empty()) throw Error(ErrorCode::UnresolvedReference, "no object named '" + only + "'");
    return out;
}

// cohomology ----------------------------------------------------------------

inline Report cohomology_of(const Workspace& ws, const NamedModule& m, std::size_t top, const CommandOptions& opt) {
    Report r{"cohomology", m.algebra + "/" + m.name};
    const NamedAlgebra& a = *ws.algebra(m.algebra);
    std::visit(
        [&](const auto& g) {
            using A = std::decay_t<decltype(g)>;
            constexpr Flavor F = A::flavor;
            const auto& mod = std::get<Representation<F>>(m.value);
            guard<F>(r, g.dim(), mod.dim(), top + 1, opt);
            Json rows = Json::array();
            std::vector<std::size_t> dims;
            for (const auto& row : cohomology_table(g, mod, top)) {
                rows.push_back({{"degree", row.degree}, {"cochains", row.cochain_dim}, {"rank", row.rank}, {"dim", row.dim}});
                dims.push_back(row.dim);
            }
            r.data = {{"flavor", flavor_name(F)}, {"algebra", m.algebra}, {"module", m.name}, {"table", rows}, {"dims", dims}};
            std::ostringstream os;
            os << flavor_name(F) << " cohomology of " << m.algebra << " with coefficients in " << m.name << ":";
            r.lines.push_back(os.str());
            for (const auto& row : rows) {
                std::ostringstream line;
                line << "  H^" << row["degree"].get<std::size_t>() << " = " << row["dim"].get<std::size_t>()
                     << "   (dim C = " << row["cochains"].get<std::size_t>() << ", rank d = " << row["rank"].get<std::size_t>()
                     << ")";
                r.lines.push_back(line.str());
            }
        },
        a.value);
    return r;
}

inline std::vector<Report> cohomology(const Workspace& ws, const Json& c, const CommandOptions& opt) {
    std::size_t top = c.contains("max_degree") ? c.at("max_degree").get<std::size_t>() : opt.max_degree;
    std::vector<Report> out;
    if (c.contains("module")) {
        const NamedModule& m = need(ws.module(arg(c, "module")), "module", arg(c, "module"));
        out.push_back(cohomology_of(ws, m, top, opt));
    } else {
        for (const auto& m : ws.modules) out.push_back(cohomology_of(ws, m, top, opt));
    }
    return out;
}

// theta / classify ----------------------------------------------------------

template <Flavor F>
void describe_crossed(Report& r, const CrossedModule<F>& cm, const InducedPair<F>& p, bool with_theta,
                      const CommandOptions& opt) {
    guard<F>(r, p.g.dim(), p.module.dim(), 4, opt);
    Sections sec = choose_sections(cm, p);
    Cochain<F> th = theta(cm, p, sec);
    bool cocycle = coboundary(p.g, p.module, th).is_zero();
    auto h3 = cohomology(p.g, p.module, 3);
    Json cls = class_to_json(h3.class_of(th));
    r.pass = cocycle;
    r.data["flavor"] = flavor_name(F);
    r.data["g_dim"] = p.g.dim();
    r.data["M_dim"] = p.module.dim();
    r.data["H3_dim"] = h3.dim();
    if (with_theta) {
        r.data["theta"] = cochain_values_to_json(th);
        r.data["cocycle"] = cocycle;
    }
    r.data["class"] = cls;
    r.lines.push_back("  g = coker d has dim " + std::to_string(p.g.dim()) + ", M = ker d has dim " +
                      std::to_string(p.module.dim()) + ", dim H^3 = " + std::to_string(h3.dim()));
    if (with_theta) {
        r.lines.push_back(std::string("  theta is ") + (cocycle ? "" : "NOT ") + "a 3-cocycle, with " +
                          std::to_string(r.data["theta"].size()) + " nonzero values");
        for (const auto& e : r.data["theta"]) r.lines.push_back("    theta" + e["tuple"].dump() + " = " + e["value"].dump());
    }
    r.lines.push_back("  class = " + class_text(cls) + " in H^3");
}

inline Report crossed_report(const std::string& command, const NamedCrossed& x, bool with_theta, const CommandOptions& opt) {
    Report r{command, x.name};
    r.lines.push_back(command + " " + x.name + ":");
    std::visit([&](const auto& cm) { describe_crossed(r, cm, induced_pair(cm), with_theta, opt); }, x.value);
    return r;
}

inline Report extension2_report(const std::string& command, const NamedExtension& e, bool with_theta,
                                const CommandOptions& opt) {
    Report r{command, e.name};
    r.lines.push_back(command + " " + e.name + ":");
    auto x = as_crossed(e.value);
    describe_crossed(r, x.cm, x.pair, with_theta, opt);
    return r;
}

/// Class of an extension where one is available: n = 2 via theta, delta
/// images via the connecting map, and zero when a splitting exists.
inline std::optional<CEClass> extension_class(const Workspace& ws, const NamedExtension& e) {
    if (e.value.n == 2) return classify2(e.value);
    if (e.connecting_from) {
        const NamedSequence& s = *ws.sequence(e.connecting_from->first);
        const NamedExtension& base = *ws.extension(e.connecting_from->second);
        auto inner = extension_class(ws, base);
        if (!inner) return std::nullopt;
        return connecting_hom(std::get<LieAlgebra>(ws.algebra(s.algebra)->value), std::get<LieSES>(s.value), *inner);
    }
    if (split_detect(e.value)) return cohomology(e.value.g, e.value.M, e.value.n + 1).zero_class();
    return std::nullopt;
}

inline std::vector<Report> theta_or_classify(const Workspace& ws, const Json& c, const CommandOptions& opt) {
    const std::string command = c.at("command").get<std::string>();
    const bool with_theta = command == "theta";
    std::vector<Report> out;
    auto one_extension = [&](const NamedExtension& e) {
        if (e.value.n == 2) {
            out.push_back(extension2_report(command, e, with_theta, opt));
            return;
        }
        Report r{command, e.name};
        if (with_theta) {
            r.pass = false;
            r.lines.push_back(command + " " + e.name + ": theta is defined for crossed modules (n = 2) only");
            out.push_back(std::move(r));
            return;
        }
        auto cls = extension_class(ws, e);
        r.data = {{"n", e.value.n}, {"classified", cls.has_value()}};
        if (cls) {
            r.data["class"] = class_to_json(*cls);
            r.lines.push_back(command + " " + e.name + ": class = " + class_text(r.data["class"]) + " in H^" +
                              std::to_string(e.value.n + 1));
        } else {
            r.lines.push_back(command + " " + e.name +
                              ": no classifier for this extension (n >= 3, not a connecting image, no splitting found)");
        }
        out.push_back(std::move(r));
    };
    if (c.contains("crossed_module")) {
        out.push_back(crossed_report(command, need(ws.crossed(arg(c, "crossed_module")), "crossed module", arg(c, "crossed_module")),
                                     with_theta, opt));
    } else if (c.contains("extension")) {
        one_extension(need(ws.extension(arg(c, "extension")), "extension", arg(c, "extension")));
    } else {
        for (const auto& x : ws.crossed_modules) out.push_back(crossed_report(command, x, with_theta, opt));
        for (const auto& e : ws.extensions) {
            if (with_theta && e.value.n != 2) continue;
            one_extension(e);
        }
    }
    return out;
}

// baer-sum ------------------------------------------------------------------

inline Report baer_sum_report(const Workspace& ws, const NamedExtension& a, const NamedExtension& b) {
    Report r{"baer-sum", a.name + " + " + b.name};
    CrossedExtension s = a.value.n == 2 ? baer_sum_n2(a.value, b.value) : baer_sum(a.value, b.value);
    auto v = validate_extension(s);
    r.pass = !v;
    r.data = {{"n", s.n}, {"valid", !v}, {"V_dim", s.dim_at(1)}, {"L_dim", s.L().dim()}};
    r.lines.push_back("baer-sum " + r.target + ": " + (v ? "INVALID " + v->to_string() : "valid extension") +
                      ", dim M_1 = " + std::to_string(s.dim_at(1)) + ", dim L = " + std::to_string(s.L().dim()));
    if (v) return r;
    if (s.n == 2) {
        CEClass ca = classify2(a.value);
        CEClass cb = classify2(b.value);
        CEClass cs = classify2(s);
        CEClass via_push = classify2(baer_sum(a.value, b.value));
        bool additive = cs == ca + cb;
        bool agree = cs == via_push;
        r.pass = additive && agree;
        r.data["class"] = class_to_json(cs);
        r.data["additive"] = additive;
        r.data["pushout_construction_agrees"] = agree;
        r.lines.push_back("  class = " + class_text(r.data["class"]) + "; class(E + E') = class(E) + class(E'): " +
                          (additive ? "yes" : "NO"));
        r.lines.push_back(std::string("  vector-space pushout and codiagonal push-forward give the same class: ") +
                          (agree ? "yes" : "NO"));
    } else {
        auto ca = extension_class(ws, a);
        auto cb = extension_class(ws, b);
        bool split = split_detect(s).has_value();
        r.data["split"] = split;
        r.lines.push_back(std::string("  splitting of the sum: ") + (split ? "found (class 0)" : "none found"));
        if (ca && cb) {
            Json expected = class_to_json(*ca + *cb);
            r.data["expected_class"] = expected;
            r.lines.push_back("  expected class from the summands: " + class_text(expected));
            if (split && !(*ca + *cb).is_zero()) r.pass = false;
        }
    }
    return r;
}

inline std::vector<Report> baer_sums(const Workspace& ws, const Json& c) {
    std::vector<Report> out;
    if (c.contains("left") || c.contains("right")) {
        out.push_back(baer_sum_report(ws, need(ws.extension(arg(c, "left")), "extension", arg(c, "left")),
                                      need(ws.extension(arg(c, "right")), "extension", arg(c, "right"))));
        return out;
    }
    for (std::size_t i = 0; i < ws.extensions.size(); ++i) {
        for (std::size_t j = i; j < ws.extensions.size(); ++j) {
            const auto& a = ws.extensions[i].value;
            const auto& b = ws.extensions[j].value;
            if (a.n == b.n && a.g == b.g && a.M == b.M) out.push_back(baer_sum_report(ws, ws.extensions[i], ws.extensions[j]));
        }
    }
    return out;
}

// pushout -------------------------------------------------------------------

inline Report pushout_report(const Workspace& ws, const NamedMorphism& f, const NamedMorphism& g) {
    Report r{"pushout", f.name + ", " + g.name};
    if (f.source != g.source) throw Error(ErrorCode::ShapeMismatch, "pushout needs maps with the same source");
    const NamedModule& a = *ws.module(f.source);
    const NamedAlgebra& alg = *ws.algebra(a.algebra);
    std::visit(
        [&](const auto& algebra) {
            using A = std::decay_t<decltype(algebra)>;
            using R = Representation<A::flavor>;
            auto po = pushout(algebra, std::get<R>(a.value), std::get<R>(ws.module(f.target)->value),
                              std::get<R>(ws.module(g.target)->value), f.matrix, g.matrix);
            bool commutes = po.maps.j * g.matrix == po.maps.i * f.matrix;
            bool identity = mediate(po.maps, po.maps.i, po.maps.j) == Matrix::identity(po.maps.dim());
            r.pass = commutes && identity;
            r.data = {{"dim", po.maps.dim()},
                      {"i", matrix_to_json(po.maps.i)},
                      {"j", matrix_to_json(po.maps.j)},
                      {"commutes", commutes},
                      {"mediator_of_itself_is_identity", identity}};
            r.lines.push_back("pushout of " + f.name + " and " + g.name + ": dim D = " + std::to_string(po.maps.dim()));
            r.lines.push_back("  i = " + r.data["i"].dump());
            r.lines.push_back("  j = " + r.data["j"].dump());
            r.lines.push_back(std::string("  j g = i f: ") + (commutes ? "yes" : "NO") +
                              "; mediator of (i, j) is the identity: " + (identity ? "yes" : "NO"));
        },
        alg.value);
    return r;
}

inline std::vector<Report> pushouts(const Workspace& ws, const Json& c) {
    std::vector<Report> out;
    if (c.contains("f") || c.contains("g")) {
        out.push_back(pushout_report(ws, need(ws.morphism(arg(c, "f")), "morphism", arg(c, "f")),
                                     need(ws.morphism(arg(c, "g")), "morphism", arg(c, "g"))));
        return out;
    }
    for (std::size_t i = 0; i < ws.morphisms.size(); ++i)
        for (std::size_t j = i + 1; j < ws.morphisms.size(); ++j)
            if (ws.morphisms[i].source == ws.morphisms[j].source) out.push_back(pushout_report(ws, ws.morphisms[i], ws.morphisms[j]));
    return out;
}

// connecting / yoneda -------------------------------------------------------

inline Report connecting_report(const Workspace& ws, const NamedSequence& s, const NamedCochain& z) {
    Report r{"connecting", s.name + ", " + z.name};
    const NamedAlgebra& alg = *ws.algebra(s.algebra);
    std::visit(
        [&](const auto& g) {
            using A = std::decay_t<decltype(g)>;
            constexpr Flavor F = A::flavor;
            const auto& ses = std::get<ShortExactSequence<F>>(s.value);
            const auto& cochain = std::get<Cochain<F>>(z.value);
            auto cls = cohomology(g, ses.quot, cochain.degree).class_of(cochain);
            Json image = class_to_json(connecting_hom(g, ses, cls));
            r.data = {{"flavor", flavor_name(F)}, {"source", class_to_json(cls)}, {"image", image}};
            r.lines.push_back("connecting map of " + s.name + " on [" + z.name + "] in H^" + std::to_string(cochain.degree) +
                              ": image = " + class_text(image) + " in H^" + std::to_string(cochain.degree + 1));
        },
        alg.value);
    return r;
}

inline Report opext_connecting_report(const Workspace& ws, const NamedSequence& s, const NamedExtension& e) {
    Report r{"connecting", s.name + ", " + e.name};
    CrossedExtension d = opext_connecting(std::get<LieSES>(s.value), e.value);
    auto v = validate_extension(d);
    r.pass = !v;
    r.data = {{"n", d.n}, {"valid", !v}};
    r.lines.push_back("delta of " + e.name + " along " + s.name + ": length " + std::to_string(d.n) + " extension, " +
                      (v ? "INVALID " + v->to_string() : "valid"));
    if (auto cls = extension_class(ws, e)) {
        Json image = class_to_json(connecting_hom(e.value.g, std::get<LieSES>(s.value), *cls));
        r.data["class"] = image;
        r.lines.push_back("  class = " + class_text(image) + " in H^" + std::to_string(d.n + 1));
    }
    return r;
}

inline std::vector<Report> connecting(const Workspace& ws, const Json& c) {
    std::vector<Report> out;
    if (c.contains("sequence")) {
        const NamedSequence& s = need(ws.sequence(arg(c, "sequence")), "sequence", arg(c, "sequence"));
        if (c.contains("extension")) {
            out.push_back(opext_connecting_report(ws, s, need(ws.extension(arg(c, "extension")), "extension", arg(c, "extension"))));
        } else {
            out.push_back(connecting_report(ws, s, need(ws.cochain(arg(c, "cocycle")), "cochain", arg(c, "cocycle"))));
        }
        return out;
    }
    for (const auto& s : ws.sequences)
        for (const auto& z : ws.cochains)
            if (z.module == s.quot) out.push_back(connecting_report(ws, s, z));
    return out;
}

inline Report yoneda_report(const Workspace& ws, const NamedSequence& s, const NamedCochain& z) {
    Report r{"yoneda", s.name + ", " + z.name};
    const NamedAlgebra& alg = *ws.algebra(s.algebra);
    std::visit(
        [&](const auto& g) {
            using A = std::decay_t<decltype(g)>;
            constexpr Flavor F = A::flavor;
            const auto& ses = std::get<ShortExactSequence<F>>(s.value);
            const auto& cochain = std::get<Cochain<F>>(z.value);
            if (cochain.degree != 2) throw Error(ErrorCode::ShapeMismatch, "yoneda needs a 2-cocycle");
            auto x = yoneda_crossed_module(g, ses, cochain);
            Json theta_class = class_to_json(classify2(x));
            Json image = class_to_json(connecting_hom(g, ses, cohomology(g, ses.quot, 2).class_of(cochain)));
            bool agree = theta_class == image;
            r.pass = agree;
            r.data = {{"flavor", flavor_name(F)}, {"L_dim", x.cm.L.dim()}, {"V_dim", x.cm.V.dim()},
                      {"class", theta_class},     {"connecting_image", image}, {"agree", agree}};
            r.lines.push_back("yoneda " + s.name + " with [" + z.name + "]: crossed module with dim V = " +
                              std::to_string(x.cm.V.dim()) + ", dim L = " + std::to_string(x.cm.L.dim()));
            r.lines.push_back("  class of theta     = " + class_text(theta_class));
            r.lines.push_back("  connecting image   = " + class_text(image));
            r.lines.push_back(std::string("  agree: ") + (agree ? "yes" : "NO"));
        },
        alg.value);
    return r;
}

inline std::vector<Report> yoneda(const Workspace& ws, const Json& c) {
    std::vector<Report> out;
    if (c.contains("sequence")) {
        out.push_back(yoneda_report(ws, need(ws.sequence(arg(c, "sequence")), "sequence", arg(c, "sequence")),
                                    need(ws.cochain(arg(c, "cocycle")), "cochain", arg(c, "cocycle"))));
        return out;
    }
    for (const auto& s : ws.sequences) {
        for (const auto& z : ws.cochains) {
            bool degree2 = std::visit([](const auto& x) { return x.degree == 2; }, z.value);
            if (z.module == s.quot && degree2) out.push_back(yoneda_report(ws, s, z));
        }
    }
    return out;
}

}  // namespace cmd

/// Runs one command description such as {"command": "cohomology", "module": "K"}.
/// Engine errors become failing reports that name the command's target.
inline std::vector<Report> run_command(const Workspace& ws, const Json& c, const CommandOptions& opt = {}) {
    const std::string name = c.at("command").get<std::string>();
    try {
        if (name == "check") return cmd::check(ws, c);
        if (name == "cohomology") return cmd::cohomology(ws, c, opt);
        if (name == "theta" || name == "classify") return cmd::theta_or_classify(ws, c, opt);
        if (name == "baer-sum") return cmd::baer_sums(ws, c);
        if (name == "pushout") return cmd::pushouts(ws, c);
        if (name == "connecting") return cmd::connecting(ws, c);
        if (name == "yoneda") return cmd::yoneda(ws, c);
        if (name == "report") {
            std::vector<Report> out = cmd::check(ws, Json{{"command", "check"}});
            bool any = false;
            for (const auto& sub : ws.commands) {
                if (sub.at("command") == "report" || sub.at("command") == "check") continue;
                any = true;
                auto more = run_command(ws, sub, opt);
                out.insert(out.end(), more.begin(), more.end());
            }
            if (!any) {
                for (const char* n : {"cohomology", "classify", "yoneda", "connecting", "pushout", "baer-sum"}) {
                    auto more = run_command(ws, Json{{"command", n}}, opt);
                    out.insert(out.end(), more.begin(), more.end());
                }
            }
            return out;
        }
        throw Error(ErrorCode::ParseError, "unknown command '" + name + "'");
    } catch (const Error& e) {
        Report r{name, c.dump()};
        r.pass = false;
        r.data = {{"error", std::string(code_name(e.code()))}, {"detail", e.what()}};
        r.lines.push_back(name + " " + c.dump() + ": ERROR " + e.what());
        return {r};
    }
}

/// The command's entries from the document, or the command run over every
/// applicable object when the document lists none.
inline std::vector<Report> run_named(const Workspace& ws, const std::string& name, const CommandOptions& opt = {}) {
    if (name == "report" || name == "check") return run_command(ws, Json{{"command", name}}, opt);
    std::vector<Report> out;
    bool any = false;
    for (const auto& c : ws.commands) {
        if (c.at("command") != name) continue;
        any = true;
        auto more = run_command(ws, c, opt);
        out.insert(out.end(), more.begin(), more.end());
    }
    if (!any) return run_command(ws, Json{{"command", name}}, opt);
    return out;
}

inline bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

inline std::string render_human(const std::vector<Report>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass ? "[PASS] " : "[FAIL] ");
        for (std::size_t i = 0; i < r.lines.size(); ++i) os << (i == 0 ? "" : "       ") << r.lines[i] << "\n";
        if (r.lines.empty()) os << r.command << " " << r.target << "\n";
        for (const auto& w : r.warnings) os << "       warning: " << w << "\n";
    }
    os << (all_pass(reports) ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

inline Json render_json(const Workspace& ws, const std::string& command, const std::vector<Report>& reports) {
    Json results = Json::array();
    for (const auto& r : reports) results.push_back(r.to_json());
    return {{"command", command}, {"field", field_name(ws.field)}, {"pass", all_pass(reports)}, {"results", results}};
}

}  // namespace crossext
