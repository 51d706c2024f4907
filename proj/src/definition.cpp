#include "mtk/definition.hpp"

#include "mtk/error.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace mtk {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) known = true;
        }
        if (!known) {
            throw Error("unknown field '" + key + "' in " + where);
        }
    }
}

std::vector<std::string> string_list(const json& node, const std::string& where) {
    if (!node.is_array()) throw Error(where + " must be a list");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (!item.is_string()) throw Error(where + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

void validate_value_shape(const json& value, const std::string& group, const std::string& where) {
    if (group == "ratscalar") {
        if (!value.is_string()) throw Error(where + ": ratscalar values are rational strings");
        parse_rat(value.get<std::string>());
    } else if (group == "ratvec3") {
        if (!value.is_array() || value.size() != 3)
            throw Error(where + ": ratvec3 values are lists of three rational strings");
        for (const auto& c : value) {
            if (!c.is_string()) throw Error(where + ": ratvec3 components are rational strings");
            parse_rat(c.get<std::string>());
        }
    } else if (group == "ratmat2") {
        if (!value.is_array() || value.size() != 2)
            throw Error(where + ": ratmat2 values are 2x2 nested lists of rational strings");
        for (const auto& row : value) {
            if (!row.is_array() || row.size() != 2)
                throw Error(where + ": ratmat2 values are 2x2 nested lists of rational strings");
            for (const auto& c : row) {
                if (!c.is_string())
                    throw Error(where + ": ratmat2 entries are rational strings");
                parse_rat(c.get<std::string>());
            }
        }
    } else {
        throw Error("unknown omega_group '" + group + "'");
    }
}

void validate_set_shape(const Definition& def, const json& set_node, const std::string& where) {
    if (def.interval) {
        if (!set_node.is_array()) throw Error(where + ": interval sets are lists of [lo,hi]");
        for (const auto& pair : set_node) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string()
                || !pair[1].is_string())
                throw Error(where + ": interval pieces are [\"lo\",\"hi\"] string pairs");
            Interval(parse_rat(pair[0].get<std::string>()),
                     parse_rat(pair[1].get<std::string>()));
        }
    } else {
        subset_of_points(def.carrier, string_list(set_node, where));
    }
}

} // namespace

SetSystem Definition::set_system() const {
    if (interval) throw Error("interval definitions have no finite set system");
    return SetSystem(carrier, system);
}

MeasureTable Definition::measure_table() const {
    return make_measure_table(set_system(), measure, MeasureLevel::semiring);
}

Definition parse_definition(const std::string& text) {
    json root = json::parse(text, nullptr, true, /*ignore_comments=*/false);
    if (!root.is_object()) throw Error("definition must be a JSON object");
    reject_unknown_keys(root, {"carrier", "system", "measure", "omega_group", "maps", "sequences"},
                        "definition");

    Definition def;
    if (!root.contains("carrier")) throw Error("definition needs a carrier");

    if (root["carrier"].is_string()) {
        if (root["carrier"].get<std::string>() != "interval") {
            throw Error("carrier must be a list of point names or \"interval\"");
        }
        def.interval = true;
        if (root.contains("system") || root.contains("measure")) {
            throw Error("interval definitions carry no explicit system or measure");
        }
    } else {
        def.carrier = Carrier(string_list(root["carrier"], "carrier"));
        if (!root.contains("system") || !root["system"].is_array()) {
            throw Error("finite definitions need a system: list of subsets");
        }
        for (const auto& entry : root["system"]) {
            def.system.push_back(subset_of_points(def.carrier, string_list(entry, "system entry")));
        }
        if (root.contains("measure")) {
            if (!root["measure"].is_object()) throw Error("measure must be an object");
            for (const auto& [key, value] : root["measure"].items()) {
                if (!value.is_string()) {
                    throw Error("measure values are rational strings (floats are rejected)");
                }
                const Subset s = parse_subset(def.carrier, key);
                const Rat q = parse_rat(value.get<std::string>());
                if (!def.measure.emplace(s.bits, q).second) {
                    throw Error("duplicate measure entry for " + subset_str(def.carrier, s));
                }
            }
        }
    }

    if (root.contains("omega_group")) {
        if (!root["omega_group"].is_string()) throw Error("omega_group must be a string");
        def.omega_group = root["omega_group"].get<std::string>();
        if (def.omega_group != "ratscalar" && def.omega_group != "ratvec3"
            && def.omega_group != "ratmat2") {
            throw Error("unknown omega_group '" + def.omega_group + "'");
        }
    }

    if (root.contains("maps")) {
        if (!root["maps"].is_object()) throw Error("maps must be an object");
        for (const auto& [name, pieces] : root["maps"].items()) {
            if (!pieces.is_array()) throw Error("map '" + name + "' must be a list of pieces");
            for (const auto& piece : pieces) {
                if (!piece.is_array() || piece.size() != 2) {
                    throw Error("map '" + name + "' pieces are [set, value] pairs");
                }
                validate_set_shape(def, piece[0], "map '" + name + "'");
                validate_value_shape(piece[1], def.omega_group, "map '" + name + "'");
            }
        }
        def.maps = root["maps"];
    }

    if (root.contains("sequences")) {
        if (!root["sequences"].is_object()) throw Error("sequences must be an object");
        for (const auto& [name, node] : root["sequences"].items()) {
            if (!node.is_object()) throw Error("sequence '" + name + "' must be an object");
            reject_unknown_keys(node, {"kind", "before", "after", "n0"},
                                "sequence '" + name + "'");
            if (!node.contains("kind") || !node["kind"].is_string()) {
                throw Error("sequence '" + name + "' needs a kind");
            }
            const std::string kind = node["kind"].get<std::string>();
            if (kind == "dyadic_indicator" || kind == "staircase") {
                if (!def.interval) {
                    throw Error("sequence kind '" + kind + "' needs the interval carrier");
                }
            } else if (kind == "eventually_constant") {
                for (const char* field : {"before", "after"}) {
                    if (!node.contains(field) || !node[field].is_string()
                        || !def.maps.contains(node[field].get<std::string>())) {
                        throw Error("sequence '" + name + "' needs map names in before/after");
                    }
                }
                if (!node.contains("n0") || !node["n0"].is_number_integer()) {
                    throw Error("sequence '" + name + "' needs integer n0");
                }
            } else {
                throw Error("unknown sequence kind '" + kind + "'");
            }
        }
        def.sequences = root["sequences"];
    }

    return def;
}

Definition load_definition(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open definition file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_definition(buf.str());
}

std::string serialize_definition(const Definition& def) {
    json root;
    if (def.interval) {
        root["carrier"] = "interval";
    } else {
        root["carrier"] = def.carrier.points();
        json system = json::array();
        SetSystem canonical(def.carrier, def.system);
        for (Subset s : canonical.members()) {
            json entry = json::array();
            for (std::size_t i = 0; i < def.carrier.size(); ++i) {
                if (s.contains(i)) entry.push_back(def.carrier.point(i));
            }
            system.push_back(entry);
        }
        root["system"] = system;
        if (!def.measure.empty()) {
            json measure = json::object();
            for (const auto& [mask, value] : def.measure) {
                std::string key = subset_str(def.carrier, Subset{mask});
                measure[key.substr(1, key.size() - 2)] = rat_str(value);
            }
            root["measure"] = measure;
        }
    }
    root["omega_group"] = def.omega_group;
    if (!def.maps.empty()) root["maps"] = def.maps;
    if (!def.sequences.empty()) root["sequences"] = def.sequences;
    return root.dump(2) + "\n";
}

std::string definition_digest(const Definition& def) {
    // FNV-1a over the canonical serialization
    const std::string text = serialize_definition(def);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool RenderedReport::pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

bool RenderedReport::flagged() const {
    for (const auto& r : records)
        if (r.flagged) return true;
    return false;
}

int RenderedReport::exit_code() const {
    if (!pass()) return 1;
    return flagged() ? 3 : 0;
}

std::string RenderedReport::verdict() const {
    if (!pass()) return "fail";
    return flagged() ? "flagged" : "pass";
}

namespace {

std::string now_string() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

} // namespace

std::string render_text(const RenderedReport& report, bool timestamps) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "inputs: " << report.digest << "\n";
    if (timestamps) out << "time: " << now_string() << "\n";
    for (const auto& [key, value] : report.outputs) {
        out << key << ": " << value << "\n";
    }
    for (const auto& r : report.records) {
        out << "[" << (r.pass ? (r.flagged ? "flag" : "pass") : "FAIL") << "] " << r.anchor;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
    out << "verdict: " << report.verdict() << "\n";
    return out.str();
}

std::string render_json(const RenderedReport& report, bool timestamps) {
    json root;
    root["command"] = report.command;
    root["inputs"] = report.digest;
    if (timestamps) root["time"] = now_string();
    json outputs = json::object();
    for (const auto& [key, value] : report.outputs) outputs[key] = value;
    root["outputs"] = outputs;
    json checks = json::array();
    for (const auto& r : report.records) {
        json c;
        c["anchor"] = r.anchor;
        c["pass"] = r.pass;
        c["flagged"] = r.flagged;
        c["detail"] = r.detail;
        checks.push_back(c);
    }
    root["checks"] = checks;
    root["verdict"] = report.verdict();
    return root.dump(2) + "\n";
}

} // namespace mtk
