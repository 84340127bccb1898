#include "kcr/io.hpp"

#include <algorithm>
#include <limits>

namespace kcr::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const json& field(const json& obj, const char* name, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) fail(path + "." + name, "missing");
    return *it;
}

long as_size(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 1 || v > std::numeric_limits<long>::max()) fail(path, "size must be a positive integer");
    return static_cast<long>(v);
}

ColorKind parse_kind(const json& j, const std::string& path) {
    if (j == "T") return ColorKind::OffDiagonal;
    if (j == "D") return ColorKind::Diagonal;
    fail(path, "kind must be \"D\" or \"T\"");
}

std::vector<Involution> parse_involutions(const json& j, const std::string& path, bool allow_both) {
    if (j == "trivial") return {Involution::Trivial};
    if (j == "swap") return {Involution::Swap};
    if (allow_both && j == "both") return {Involution::Trivial, Involution::Swap};
    fail(path, allow_both ? "involution must be \"trivial\", \"swap\" or \"both\""
                          : "involution must be \"trivial\" or \"swap\"");
}

const json& colors_of(const json& doc, const std::string& path) {
    const json& colors = field(doc, "colors", path);
    if (!colors.is_array() || colors.empty()) fail(path + ".colors", "expected a nonempty array");
    if (auto it = doc.find("rank"); it != doc.end()) {
        if (!it->is_number_integer()) fail(path + ".rank", "expected an integer");
        if (it->get<std::int64_t>() != static_cast<std::int64_t>(colors.size()))
            fail(path + ".rank", "does not match the number of colors");
    }
    return colors;
}

std::vector<json> spec_docs(const json& doc) {
    if (doc.is_object() && doc.contains("specs")) {
        const json& specs = doc["specs"];
        if (!specs.is_array()) fail("$.specs", "expected an array");
        return specs.get<std::vector<json>>();
    }
    return {doc};
}

}  // namespace

GraphSpec parse_spec(const json& doc, const std::string& path) {
    GraphSpec s;
    const json& colors = colors_of(doc, path);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const std::string cp = path + ".colors[" + std::to_string(i) + "]";
        s.colors.push_back({parse_kind(field(colors[i], "kind", cp), cp + ".kind"),
                            as_size(field(colors[i], "size", cp), cp + ".size")});
    }
    s.involution = parse_involutions(field(doc, "involution", path), path + ".involution", false).front();
    return s;
}

std::vector<GraphSpec> parse_specs(const json& doc) {
    const auto docs = spec_docs(doc);
    const bool many = doc.is_object() && doc.contains("specs");
    std::vector<GraphSpec> out;
    for (std::size_t i = 0; i < docs.size(); ++i)
        out.push_back(parse_spec(docs[i], many ? "$.specs[" + std::to_string(i) + "]" : "$"));
    return out;
}

std::vector<GraphSpec> expand_sweep(const json& doc, std::size_t limit) {
    const auto docs = spec_docs(doc);
    const bool many = doc.is_object() && doc.contains("specs");
    std::vector<GraphSpec> out;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        const std::string path = many ? "$.specs[" + std::to_string(d) + "]" : "$";
        const json& colors = colors_of(docs[d], path);
        std::vector<ColorKind> kinds;
        std::vector<std::pair<long, long>> ranges;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            const std::string cp = path + ".colors[" + std::to_string(i) + "]";
            kinds.push_back(parse_kind(field(colors[i], "kind", cp), cp + ".kind"));
            const json& size = field(colors[i], "size", cp);
            if (size.is_object()) {
                const long lo = as_size(field(size, "min", cp + ".size"), cp + ".size.min");
                const long hi = as_size(field(size, "max", cp + ".size"), cp + ".size.max");
                if (lo > hi) fail(cp + ".size", "min exceeds max");
                ranges.emplace_back(lo, hi);
            } else {
                const long v = as_size(size, cp + ".size");
                ranges.emplace_back(v, v);
            }
        }
        const auto invs = parse_involutions(field(docs[d], "involution", path), path + ".involution", true);

        double count = static_cast<double>(invs.size());
        for (const auto& [lo, hi] : ranges) count *= static_cast<double>(hi - lo + 1);
        if (count + static_cast<double>(out.size()) > static_cast<double>(limit))
            fail(path, "sweep exceeds " + std::to_string(limit) + " instances");

        std::vector<long> cur;
        for (const auto& r : ranges) cur.push_back(r.first);
        for (;;) {
            for (auto inv : invs) {
                GraphSpec s;
                s.involution = inv;
                for (std::size_t i = 0; i < kinds.size(); ++i) s.colors.push_back({kinds[i], cur[i]});
                out.push_back(std::move(s));
            }
            std::size_t i = cur.size();
            while (i > 0 && cur[i - 1] == ranges[i - 1].second) {
                cur[i - 1] = ranges[i - 1].first;
                --i;
            }
            if (i == 0) break;
            ++cur[i - 1];
        }
    }
    return out;
}

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Integer integer_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) fail(path, "not a decimal integer");
        return v;
    }
    fail(path, "expected an integer");
}

json spec_to_json(const GraphSpec& spec) {
    json colors = json::array();
    for (const auto& c : spec.colors)
        colors.push_back({{"kind", c.kind == ColorKind::OffDiagonal ? "T" : "D"}, {"size", c.size}});
    return {{"rank", spec.rank()}, {"colors", colors}, {"involution", to_string(spec.involution)}};
}

json group_to_json(const FinAbGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion()) torsion.push_back(integer_to_json(t));
    return {{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

FinAbGroup group_from_json(const json& j, const std::string& path) {
    const json& fr = field(j, "free_rank", path);
    if (!fr.is_number_unsigned()) fail(path + ".free_rank", "expected a nonnegative integer");
    const json& tor = field(j, "torsion", path);
    if (!tor.is_array()) fail(path + ".torsion", "expected an array");
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < tor.size(); ++i)
        orders.push_back(integer_from_json(tor[i], path + ".torsion[" + std::to_string(i) + "]"));
    return FinAbGroup::from_cyclic(fr.get<std::size_t>(), std::move(orders));
}

json kgroup_to_json(const KGroup& g) {
    json out = g.group ? group_to_json(*g.group) : json::object();
    out["resolved"] = g.resolved();
    json subs = json::array();
    for (const auto& s : g.subfactors) subs.push_back(group_to_json(s));
    out["subfactors"] = subs;
    return out;
}

KGroup kgroup_from_json(const json& j, const std::string& path) {
    KGroup g;
    const json& resolved = field(j, "resolved", path);
    if (!resolved.is_boolean()) fail(path + ".resolved", "expected a boolean");
    if (resolved.get<bool>()) g.group = group_from_json(j, path);
    const json& subs = field(j, "subfactors", path);
    if (!subs.is_array()) fail(path + ".subfactors", "expected an array");
    for (std::size_t i = 0; i < subs.size(); ++i)
        g.subfactors.push_back(group_from_json(subs[i], path + ".subfactors[" + std::to_string(i) + "]"));
    return g;
}

json certificate_to_json(const ConvergenceCertificate& c) {
    return {{"kind", to_string(c.kind)}, {"r", c.r}, {"p", c.p}, {"q", c.q}, {"part", to_string(c.part)}};
}

namespace {

Part parse_part(const json& j, const std::string& path) {
    if (j == "real") return Part::Real;
    if (j == "complex") return Part::Complex;
    fail(path, "part must be \"real\" or \"complex\"");
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

json outcome_to_json(const ExtensionOutcome& o) {
    json out{{"sub", group_to_json(o.sub)},
             {"quotient", group_to_json(o.quotient)},
             {"certificate", to_string(o.certificate)},
             {"resolved", o.resolved}};
    out["group"] = o.group ? group_to_json(*o.group) : json(nullptr);
    return out;
}

ExtensionOutcome outcome_from_json(const json& j, const std::string& path) {
    ExtensionOutcome o;
    o.sub = group_from_json(field(j, "sub", path), path + ".sub");
    o.quotient = group_from_json(field(j, "quotient", path), path + ".quotient");
    const json& cert = field(j, "certificate", path);
    const auto c = cert.is_string() ? extension_certificate_from_string(cert.get<std::string>()) : std::nullopt;
    if (!c) fail(path + ".certificate", "unknown extension certificate");
    o.certificate = *c;
    o.resolved = field(j, "resolved", path).get<bool>();
    const json& g = field(j, "group", path);
    if (!g.is_null()) o.group = group_from_json(g, path + ".group");
    return o;
}

}  // namespace

ConvergenceCertificate certificate_from_json(const json& j, const std::string& path) {
    ConvergenceCertificate c;
    const json& kind = field(j, "kind", path);
    const auto k = kind.is_string() ? differential_certificate_from_string(kind.get<std::string>()) : std::nullopt;
    if (!k) fail(path + ".kind", "unknown differential certificate");
    c.kind = *k;
    c.r = as_int(field(j, "r", path), path + ".r");
    c.p = as_int(field(j, "p", path), path + ".p");
    c.q = as_int(field(j, "q", path), path + ".q");
    c.part = parse_part(field(j, "part", path), path + ".part");
    return c;
}

json table_to_json(const KTheoryTable& t) {
    json ko = json::array(), ku = json::array(), certs = json::array(), exts = json::array();
    for (const auto& g : t.ko) ko.push_back(kgroup_to_json(g));
    for (const auto& g : t.ku) ku.push_back(kgroup_to_json(g));
    for (const auto& c : t.certificates) certs.push_back(certificate_to_json(c));
    for (const auto& e : t.extensions) {
        json steps = json::array();
        for (const auto& s : e.steps) steps.push_back(outcome_to_json(s));
        exts.push_back({{"part", to_string(e.part)}, {"degree", e.degree}, {"resolved", e.resolved}, {"steps", steps}});
    }
    return {{"ko", ko}, {"ku", ku}, {"certificates", certs}, {"extensions", exts}, {"resolved", t.resolved()}};
}

KTheoryTable table_from_json(const json& j) {
    KTheoryTable t;
    for (const char* name : {"ko", "ku"}) {
        const json& arr = field(j, name, "$");
        if (!arr.is_array() || arr.size() != 8) fail(std::string("$.") + name, "expected 8 groups");
        auto& dst = std::string(name) == "ko" ? t.ko : t.ku;
        for (std::size_t n = 0; n < 8; ++n)
            dst[n] = kgroup_from_json(arr[n], std::string("$.") + name + "[" + std::to_string(n) + "]");
    }
    const json& certs = field(j, "certificates", "$");
    for (std::size_t i = 0; i < certs.size(); ++i)
        t.certificates.push_back(certificate_from_json(certs[i], "$.certificates[" + std::to_string(i) + "]"));
    const json& exts = field(j, "extensions", "$");
    for (std::size_t i = 0; i < exts.size(); ++i) {
        const std::string p = "$.extensions[" + std::to_string(i) + "]";
        DegreeResolution d;
        d.part = parse_part(field(exts[i], "part", p), p + ".part");
        d.degree = as_int(field(exts[i], "degree", p), p + ".degree");
        d.resolved = field(exts[i], "resolved", p).get<bool>();
        const json& steps = field(exts[i], "steps", p);
        for (std::size_t s = 0; s < steps.size(); ++s)
            d.steps.push_back(outcome_from_json(steps[s], p + ".steps[" + std::to_string(s) + "]"));
        t.extensions.push_back(std::move(d));
    }
    return t;
}

json invariants_to_json(const FamilyInvariants& inv) {
    return {{"g", integer_to_json(inv.g)},
            {"h", integer_to_json(inv.h)},
            {"k", integer_to_json(inv.k)},
            {"case", inv.family_case.label()}};
}

std::string format_table(const KTheoryTable& t) {
    std::vector<std::string> ko, ku;
    std::size_t width = 2;
    for (int n = 0; n < 8; ++n) {
        ko.push_back(t.ko[n].to_string());
        ku.push_back(t.ku[n].to_string());
        width = std::max({width, ko.back().size(), ku.back().size()});
    }
    auto line = [width](const std::string& head, const std::vector<std::string>& cells) {
        std::string s = head;
        for (const auto& c : cells) s += c + std::string(width + 2 - c.size(), ' ');
        while (s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    std::vector<std::string> header;
    for (int n = 0; n < 8; ++n) header.push_back(std::to_string(n));
    return line("    ", header) + line("KO  ", ko) + line("KU  ", ku);
}

}  // namespace kcr::io
