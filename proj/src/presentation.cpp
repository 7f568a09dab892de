#include "bicat/presentation.hpp"

#include <fmt/format.h>

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace bicat {

using nlohmann::json;

namespace {

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& field(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.contains(key)) throw ParseError(path + "/" + key, "required field missing");
    return doc.at(key);
}

std::string str(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
}

const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    return j;
}

std::vector<std::string> row(const json& j, std::size_t n, const std::string& path) {
    array(j, path);
    if (j.size() != n) throw ParseError(path, fmt::format("expected a row of {} ids", n));
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(str(j[i], ptr(path, i)));
    return out;
}

class Parser {
public:
    explicit Parser(const json& doc) : doc_(doc) {}

    Document run(std::string name) {
        if (!doc_.is_object()) throw ParseError("", "document must be a JSON object");
        BicatTables t;
        const json& objs = array(field(doc_, "objects", ""), "/objects");
        for (std::size_t i = 0; i < objs.size(); ++i) {
            std::string n = str(objs[i], ptr("/objects", i));
            if (!obj_.emplace(n, ObjId(i)).second) throw ParseError(ptr("/objects", i), "duplicate id '" + n + "'");
            t.objects.push_back(n);
        }
        const json& ones = array(field(doc_, "one_cells", ""), "/one_cells");
        for (std::size_t i = 0; i < ones.size(); ++i) {
            std::string p = ptr("/one_cells", i);
            std::string n = str(field(ones[i], "id", p), p + "/id");
            if (!one_.emplace(n, OneId(i)).second) throw ParseError(p + "/id", "duplicate id '" + n + "'");
            t.one_cells.push_back({n, object(ones[i]["src"], p + "/src"), object(ones[i]["tgt"], p + "/tgt")});
        }
        const json& twos = array(field(doc_, "two_cells", ""), "/two_cells");
        for (std::size_t i = 0; i < twos.size(); ++i) {
            std::string p = ptr("/two_cells", i);
            std::string n = str(field(twos[i], "id", p), p + "/id");
            if (!two_.emplace(n, TwoId(i)).second) throw ParseError(p + "/id", "duplicate id '" + n + "'");
            t.two_cells.push_back({n, one(twos[i]["src"], p + "/src"), one(twos[i]["tgt"], p + "/tgt")});
        }

        t.id1 = assignment<ObjId, OneId>("id1", t.objects.size(), [&](const json& j, const std::string& p) {
            return object(j, p);
        }, [&](const json& j, const std::string& p) { return one(j, p); }, [&](std::size_t i) { return t.objects[i]; });
        auto one_name = [&](std::size_t i) { return t.one_cells[i].name; };
        auto one_key = [&](const json& j, const std::string& p) { return one(j, p); };
        auto two_val = [&](const json& j, const std::string& p) { return two(j, p); };
        t.id2 = assignment<OneId, TwoId>("id2", t.one_cells.size(), one_key, two_val, one_name);
        t.runit = assignment<OneId, TwoId>("runit", t.one_cells.size(), one_key, two_val, one_name);
        t.lunit = assignment<OneId, TwoId>("lunit", t.one_cells.size(), one_key, two_val, one_name);

        table2("hcomp1", t.hcomp1, [&](const auto& r, const std::string& p) {
            return std::tuple{one(r[0], p + "/0"), one(r[1], p + "/1"), one(r[2], p + "/2")};
        });
        table2("vcomp", t.vcomp, [&](const auto& r, const std::string& p) {
            return std::tuple{two(r[0], p + "/0"), two(r[1], p + "/1"), two(r[2], p + "/2")};
        });
        table2("whisk_left", t.whisk_left, [&](const auto& r, const std::string& p) {
            return std::tuple{one(r[0], p + "/0"), two(r[1], p + "/1"), two(r[2], p + "/2")};
        });
        table2("whisk_right", t.whisk_right, [&](const auto& r, const std::string& p) {
            return std::tuple{two(r[0], p + "/0"), one(r[1], p + "/1"), two(r[2], p + "/2")};
        });
        if (doc_.contains("assoc")) {
            const json& rows = array(doc_["assoc"], "/assoc");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::string p = ptr("/assoc", i);
                array(rows[i], p);
                if (rows[i].size() != 4) throw ParseError(p, "expected a row of 4 ids");
                std::tuple k{one(rows[i][0], p + "/0"), one(rows[i][1], p + "/1"), one(rows[i][2], p + "/2")};
                if (!t.assoc.emplace(k, two(rows[i][3], p + "/3")).second) throw ParseError(p, "duplicate key");
            }
        }
        if (doc_.contains("strict")) {
            if (!doc_["strict"].is_boolean()) throw ParseError("/strict", "expected a boolean");
            t.strict = doc_["strict"].get<bool>();
        }

        Document d;
        d.name = std::move(name);
        try {
            d.bicat = FinBicat::build(std::move(t));
        } catch (const StructuralError& e) {
            std::string msg = e.what();
            std::string table = msg.substr(0, msg.find_first_of(" :"));
            throw ParseError("/" + table, msg);
        }

        if (doc_.contains("classes")) {
            const json& cls = doc_["classes"];
            if (!cls.is_object()) throw ParseError("/classes", "expected an object");
            for (const auto& [k, v] : cls.items()) {
                std::string p = "/classes/" + k;
                array(v, p);
                std::vector<OneId> m;
                for (std::size_t i = 0; i < v.size(); ++i) m.push_back(one(v[i], ptr(p, i)));
                d.classes[k] = std::move(m);
            }
        }
        if (doc_.contains("psfuns")) {
            const json& ps = array(doc_["psfuns"], "/psfuns");
            std::set<std::string> seen;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                std::string p = ptr("/psfuns", i);
                PsFunDecl decl = psfun(ps[i], p);
                if (!seen.insert(decl.name).second) throw ParseError(p + "/name", "duplicate id '" + decl.name + "'");
                d.psfuns.push_back(std::move(decl));
            }
        }
        return d;
    }

private:
    ObjId object(const json& j, const std::string& p) const {
        std::string n = str(j, p);
        auto it = obj_.find(n);
        if (it == obj_.end()) throw ParseError(p, "undeclared object '" + n + "'");
        return it->second;
    }
    OneId one(const json& j, const std::string& p) const {
        std::string n = str(j, p);
        auto it = one_.find(n);
        if (it == one_.end()) throw ParseError(p, "undeclared 1-cell '" + n + "'");
        return it->second;
    }
    TwoId two(const json& j, const std::string& p) const {
        std::string n = str(j, p);
        auto it = two_.find(n);
        if (it == two_.end()) throw ParseError(p, "undeclared 2-cell '" + n + "'");
        return it->second;
    }

    template <class K, class V, class KeyFn, class ValFn, class NameFn>
    std::vector<V> assignment(const std::string& key, std::size_t n, KeyFn&& kf, ValFn&& vf, NameFn&& name) {
        const json& rows = array(field(doc_, key, ""), "/" + key);
        std::vector<std::optional<V>> out(n);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string p = ptr("/" + key, i);
            array(rows[i], p);
            if (rows[i].size() != 2) throw ParseError(p, "expected a row of 2 ids");
            K k = kf(rows[i][0], p + "/0");
            if (out[k.index()]) throw ParseError(p, "duplicate key");
            out[k.index()] = vf(rows[i][1], p + "/1");
        }
        std::vector<V> res;
        for (std::size_t i = 0; i < n; ++i) {
            if (!out[i]) throw ParseError("/" + key, "missing entry for '" + name(i) + "'");
            res.push_back(*out[i]);
        }
        return res;
    }

    template <class Map, class RowFn>
    void table2(const std::string& key, Map& m, RowFn&& fn) {
        if (!doc_.contains(key)) return;
        const json& rows = array(doc_[key], "/" + key);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string p = ptr("/" + key, i);
            array(rows[i], p);
            if (rows[i].size() != 3) throw ParseError(p, "expected a row of 3 ids");
            auto [a, b, c] = fn(rows[i], p);
            if (!m.emplace(std::pair{a, b}, c).second) throw ParseError(p, "duplicate key");
        }
    }

    static std::vector<std::pair<std::string, std::string>> pairs(const json& j, const std::string& key,
                                                                  const std::string& p) {
        std::vector<std::pair<std::string, std::string>> out;
        if (!j.contains(key)) throw ParseError(p + "/" + key, "required field missing");
        const json& rows = array(j[key], p + "/" + key);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto r = row(rows[i], 2, ptr(p + "/" + key, i));
            out.emplace_back(r[0], r[1]);
        }
        return out;
    }

    static PsFunDecl psfun(const json& j, const std::string& p) {
        if (!j.is_object()) throw ParseError(p, "expected an object");
        PsFunDecl d;
        d.pointer = p;
        d.name = str(field(j, "name", p), p + "/name");
        if (j.contains("builtin")) {
            d.builtin = str(j["builtin"], p + "/builtin");
            if (d.builtin != "identity" && d.builtin != "universal")
                throw ParseError(p + "/builtin", "unknown builtin '" + d.builtin + "'");
            if (d.builtin == "universal") d.cls = str(field(j, "class", p), p + "/class");
            return d;
        }
        if (j.contains("target")) d.target = str(j["target"], p + "/target");
        d.f0 = pairs(j, "F0", p);
        d.f1 = pairs(j, "F1", p);
        d.f2 = pairs(j, "F2", p);
        d.sigma = pairs(j, "sigma", p);
        const json& rows = array(field(j, "psi", p), p + "/psi");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto r = row(rows[i], 3, ptr(p + "/psi", i));
            d.psi.push_back({r[0], r[1], r[2]});
        }
        return d;
    }

    const json& doc_;
    std::map<std::string, ObjId> obj_;
    std::map<std::string, OneId> one_;
    std::map<std::string, TwoId> two_;
};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Maps the explicit tables of a declaration onto cell ids.
PsFun explicit_psfun(const PsFunDecl& d, const BicatPtr& src, const BicatPtr& tgt) {
    PsFun F;
    F.name = d.name;
    F.source = src;
    F.target = tgt;
    auto need = [&](auto opt, const std::string& where, const std::string& n) {
        if (!opt) throw ParseError(d.pointer + "/" + where, "unknown id '" + n + "'");
        return *opt;
    };
    F.on_objects.assign(src->object_count(), ObjId());
    F.on_one.assign(src->one_count(), OneId());
    F.on_two.assign(src->two_count(), TwoId());
    F.sigma.assign(src->object_count(), TwoId());
    for (const auto& [a, b] : d.f0)
        F.on_objects[need(src->find_object(a), "F0", a).index()] = need(tgt->find_object(b), "F0", b);
    for (const auto& [a, b] : d.f1) F.on_one[need(src->find_one(a), "F1", a).index()] = need(tgt->find_one(b), "F1", b);
    for (const auto& [a, b] : d.f2) F.on_two[need(src->find_two(a), "F2", a).index()] = need(tgt->find_two(b), "F2", b);
    for (const auto& [a, b] : d.sigma)
        F.sigma[need(src->find_object(a), "sigma", a).index()] = need(tgt->find_two(b), "sigma", b);
    for (const auto& [g, f, c] : d.psi)
        F.psi[{need(src->find_one(g), "psi", g), need(src->find_one(f), "psi", f)}] = need(tgt->find_two(c), "psi", c);
    auto total = [&](const auto& v, const std::string& key, auto name) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].valid()) throw ParseError(d.pointer + "/" + key, "missing entry for '" + name(i) + "'");
    };
    total(F.on_objects, "F0", [&](std::size_t i) { return src->name(ObjId(i)); });
    total(F.on_one, "F1", [&](std::size_t i) { return src->name(OneId(i)); });
    total(F.on_two, "F2", [&](std::size_t i) { return src->name(TwoId(i)); });
    total(F.sigma, "sigma", [&](std::size_t i) { return src->name(ObjId(i)); });
    return F;
}

}  // namespace

Document parse_document(const std::string& text, std::string name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    return Parser(doc).run(std::move(name));
}

std::string export_document(const FinBicat& b, const std::map<std::string, std::vector<OneId>>& classes) {
    const BicatTables& t = b.tables();
    std::vector<std::string> lines;
    auto q = [](const std::string& s) { return json(s).dump(); };
    auto rows = [&](const std::string& key, const std::vector<std::string>& items, bool last = false) {
        lines.push_back("  " + q(key) + ": [");
        for (std::size_t i = 0; i < items.size(); ++i)
            lines.push_back("    " + items[i] + (i + 1 < items.size() ? "," : ""));
        lines.push_back(std::string("  ]") + (last ? "" : ","));
    };
    auto r = [&](std::initializer_list<std::string> ids) {
        std::string s = "[";
        bool first = true;
        for (const auto& x : ids) {
            if (!first) s += ", ";
            s += q(x);
            first = false;
        }
        return s + "]";
    };
    lines.push_back("{");
    std::vector<std::string> items;
    for (const auto& o : t.objects) items.push_back(q(o));
    rows("objects", items);
    items.clear();
    for (const auto& d : t.one_cells)
        items.push_back(fmt::format("{{\"id\": {}, \"src\": {}, \"tgt\": {}}}", q(d.name), q(b.name(d.src)),
                                    q(b.name(d.tgt))));
    rows("one_cells", items);
    items.clear();
    for (const auto& d : t.two_cells)
        items.push_back(fmt::format("{{\"id\": {}, \"src\": {}, \"tgt\": {}}}", q(d.name), q(b.name(d.src)),
                                    q(b.name(d.tgt))));
    rows("two_cells", items);
    items.clear();
    for (std::size_t x = 0; x < t.id1.size(); ++x) items.push_back(r({b.name(ObjId(x)), b.name(t.id1[x])}));
    rows("id1", items);
    items.clear();
    for (std::size_t f = 0; f < t.id2.size(); ++f) items.push_back(r({b.name(OneId(f)), b.name(t.id2[f])}));
    rows("id2", items);
    items.clear();
    for (const auto& [k, v] : t.hcomp1) items.push_back(r({b.name(k.first), b.name(k.second), b.name(v)}));
    rows("hcomp1", items);
    items.clear();
    for (const auto& [k, v] : t.vcomp) items.push_back(r({b.name(k.first), b.name(k.second), b.name(v)}));
    rows("vcomp", items);
    items.clear();
    for (const auto& [k, v] : t.whisk_left) items.push_back(r({b.name(k.first), b.name(k.second), b.name(v)}));
    rows("whisk_left", items);
    items.clear();
    for (const auto& [k, v] : t.whisk_right) items.push_back(r({b.name(k.first), b.name(k.second), b.name(v)}));
    rows("whisk_right", items);
    items.clear();
    for (const auto& [k, v] : t.assoc) {
        auto [h, g, f] = k;
        items.push_back(r({b.name(h), b.name(g), b.name(f), b.name(v)}));
    }
    rows("assoc", items);
    items.clear();
    for (std::size_t f = 0; f < t.runit.size(); ++f) items.push_back(r({b.name(OneId(f)), b.name(t.runit[f])}));
    rows("runit", items);
    items.clear();
    for (std::size_t f = 0; f < t.lunit.size(); ++f) items.push_back(r({b.name(OneId(f)), b.name(t.lunit[f])}));
    rows("lunit", items);
    if (classes.empty()) {
        lines.push_back(std::string("  \"strict\": ") + (t.strict ? "true" : "false"));
    } else {
        lines.push_back(std::string("  \"strict\": ") + (t.strict ? "true" : "false") + ",");
        lines.push_back("  \"classes\": {");
        std::size_t i = 0;
        for (const auto& [name, cells] : classes) {
            std::string s = "    " + q(name) + ": [";
            for (std::size_t j = 0; j < cells.size(); ++j) s += (j ? ", " : "") + q(b.name(cells[j]));
            lines.push_back(s + "]" + (++i < classes.size() ? "," : ""));
        }
        lines.push_back("  }");
    }
    lines.push_back("}");
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

WClass resolve_class(const Document& doc, const std::string& name) {
    auto it = doc.classes.find(name);
    if (it != doc.classes.end()) return WClass::of(doc.bicat, it->second, name);
    if (name == "ids") return identities_class(doc.bicat);
    if (name == "all") return all_cells_class(doc.bicat);
    if (name == "min") return quasi_units(doc.bicat);
    if (name == "equiv") return internal_equivalences_class(doc.bicat);
    const std::string suffix = "_sat";
    if (name.size() > suffix.size() && name.ends_with(suffix))
        return saturate(resolve_class(doc, name.substr(0, name.size() - suffix.size())));
    throw ParseError("/classes", "unknown class '" + name + "'");
}

WClass ResolvedPsFun::target_class(const std::string& name) const {
    if (target_doc) return resolve_class(*target_doc, name);
    Document bare;
    bare.bicat = fun.target;
    return resolve_class(bare, name);
}

const Document& Workspace::load(const std::string& ref, const std::filesystem::path& relative_to) {
    std::filesystem::path p(ref);
    if (p.is_relative() && !relative_to.empty() && std::filesystem::exists(relative_to / p)) p = relative_to / p;
    std::string key;
    std::string text;
    std::filesystem::path dir;
    if (std::filesystem::exists(p) && std::filesystem::is_regular_file(p)) {
        key = std::filesystem::weakly_canonical(p).string();
        dir = p.parent_path();
        if (auto it = docs_.find(key); it != docs_.end()) return *it->second;
        text = read_file(p);
    } else {
        std::string stem = p.filename().string();
        if (stem.ends_with(".json")) stem = stem.substr(0, stem.size() - 5);
        key = "embedded:" + stem;
        if (auto it = docs_.find(key); it != docs_.end()) return *it->second;
        bool found = false;
        for (const auto& [n, t] : embedded_fixtures())
            if (n == stem) {
                text = t;
                found = true;
            }
        if (!found) throw ParseError("", "no such document or fixture '" + ref + "'");
    }
    auto doc = std::make_unique<Document>(parse_document(text, p.filename().string()));
    doc->dir = dir;
    auto& slot = docs_[key];
    slot = std::move(doc);
    return *slot;
}

ResolvedPsFun Workspace::psfun(const Document& doc, const std::string& name) {
    for (const auto& d : doc.psfuns) {
        if (d.name != name) continue;
        ResolvedPsFun out;
        if (d.builtin == "identity") {
            out.fun = identity_psfun(doc.bicat, d.name);
            out.source_class = "ids";
            out.target_doc = &doc;
        } else if (d.builtin == "universal") {
            WClass w = resolve_class(doc, d.cls);
            auto fb = std::make_shared<const FractionBicat>(materialize_fractions(w, opt_));
            out.fun = universal_pseudofunctor(*fb, d.name);
            out.fractions = fb;
            out.source_class = d.cls;
        } else {
            out.target_doc = d.target.empty() ? &doc : &load(d.target, doc.dir);
            out.fun = explicit_psfun(d, doc.bicat, out.target_doc->bicat);
            out.source_class = "ids";
        }
        return out;
    }
    throw ParseError("/psfuns", "unknown pseudofunctor '" + name + "'");
}

}  // namespace bicat
