#include "connwidth/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "connwidth/errors.hpp"

#include <json.hpp>

namespace connwidth {

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
    throw InputError("field '" + field + "': " + why);
}

std::string line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return std::to_string(line);
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error at line " + line_of_offset(text, e.byte) + ": " + e.what());
    }
}

std::uint32_t get_u32(const json& j, const std::string& field) {
    if (!j.contains(field)) fail_field(field, "missing");
    const json& v = j.at(field);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail_field(field, "expected a non-negative integer");
    const auto raw = v.get<std::int64_t>();
    if (raw > 0xFFFFFFFFll) fail_field(field, "value too large");
    return static_cast<std::uint32_t>(raw);
}

json witnesses_json(const std::vector<Mask>& witnesses) {
    json arr = json::array();
    for (Mask m : witnesses) arr.push_back(m);
    return arr;
}

json axiom_report_json(const AxiomReport& r) {
    json j;
    j["axiom"] = std::string(to_string(r.axiom));
    j["holds"] = r.holds;
    j["witnesses"] = witnesses_json(r.witnesses);
    if (r.element) j["element"] = *r.element;
    j["note"] = r.note;
    return j;
}

json verdict_json(bool holds, const std::vector<AxiomReport>& failures) {
    json j;
    j["holds"] = holds;
    json arr = json::array();
    for (const auto& f : failures) arr.push_back(axiom_report_json(f));
    j["failures"] = arr;
    return j;
}

}  // namespace

ConnectivitySystem Instance::build(const Budget& budget) const {
    switch (kind) {
        case Provenance::explicit_table:
            return make_explicit(n, values, /*validate=*/false, budget,
                                 name.empty() ? "explicit" : name);
        case Provenance::graph_cut:
            return make_graph_cut(graph, name, budget);
        case Provenance::graph_boundary:
            return make_graph_boundary(graph, name, budget);
    }
    throw InputError("unknown instance kind");
}

Instance parse_instance(const std::string& json_text) {
    const json j = parse_text(json_text);
    if (!j.is_object()) throw InputError("instance: expected a JSON object");

    Instance inst;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) fail_field("name", "expected a string");
        inst.name = j.at("name").get<std::string>();
    }

    if (!j.contains("kind")) fail_field("kind", "missing");
    const std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "explicit") {
        inst.kind = Provenance::explicit_table;
    } else if (kind == "graph_cut") {
        inst.kind = Provenance::graph_cut;
    } else if (kind == "graph_boundary") {
        inst.kind = Provenance::graph_boundary;
    } else {
        fail_field("kind", "expected one of explicit|graph_cut|graph_boundary");
    }

    inst.n = get_u32(j, "n");
    if (inst.n < 1) fail_field("n", "must be >= 1");

    if (inst.kind == Provenance::explicit_table) {
        if (!j.contains("values") || !j.at("values").is_array()) fail_field("values", "missing array");
        if (inst.n > 30) fail_field("n", "too large for an explicit table");
        const auto& arr = j.at("values");
        if (arr.size() != (std::size_t{1} << inst.n)) {
            fail_field("values", "expected 2^n = " + std::to_string(std::size_t{1} << inst.n) +
                                     " entries, got " + std::to_string(arr.size()));
        }
        inst.values.reserve(arr.size());
        for (const auto& v : arr) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                fail_field("values", "entries must be non-negative integers");
            }
            inst.values.push_back(static_cast<std::uint32_t>(v.get<std::int64_t>()));
        }
    } else {
        inst.graph.vertex_count = get_u32(j, "vertices");
        if (!j.contains("edges") || !j.at("edges").is_array()) fail_field("edges", "missing array");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0) {
                fail_field("edges", "each edge must be a pair of non-negative integers");
            }
            inst.graph.edges.emplace_back(static_cast<std::uint32_t>(e[0].get<std::int64_t>()),
                                          static_cast<std::uint32_t>(e[1].get<std::int64_t>()));
        }
        inst.graph.require_valid();
        const std::uint32_t expected =
            inst.kind == Provenance::graph_cut ? inst.graph.vertex_count
                                               : static_cast<std::uint32_t>(inst.graph.edges.size());
        if (inst.n != expected) {
            fail_field("n", "inconsistent with " +
                                std::string(inst.kind == Provenance::graph_cut ? "vertices" : "edge count") +
                                " (" + std::to_string(expected) + ")");
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    json j;
    j["name"] = inst.name;
    j["kind"] = std::string(to_string(inst.kind));
    j["n"] = inst.n;
    if (inst.kind == Provenance::explicit_table) {
        j["values"] = inst.values;
    } else {
        j["vertices"] = inst.graph.vertex_count;
        json edges = json::array();
        for (const auto& [u, v] : inst.graph.edges) edges.push_back(json::array({u, v}));
        j["edges"] = edges;
    }
    return j.dump() + "\n";
}

Instance instance_from_graph(const Graph& g, Provenance kind, std::string name) {
    Instance inst;
    inst.name = std::move(name);
    inst.kind = kind;
    inst.graph = g;
    inst.n = kind == Provenance::graph_cut ? g.vertex_count : static_cast<std::uint32_t>(g.edges.size());
    return inst;
}

Instance instance_from_table(std::vector<std::uint32_t> values, std::string name) {
    Instance inst;
    inst.name = std::move(name);
    inst.kind = Provenance::explicit_table;
    std::uint32_t n = 0;
    while ((std::size_t{1} << n) < values.size()) ++n;
    inst.n = n;
    inst.values = std::move(values);
    return inst;
}

std::vector<Mask> parse_family_masks(const std::string& json_text, std::uint32_t ground_size) {
    const json j = parse_text(json_text);
    if (!j.is_object() || !j.contains("members") || !j.at("members").is_array()) {
        throw InputError("family: expected {\"members\": [mask,...]}");
    }
    std::vector<Mask> masks;
    const Mask full = full_mask(ground_size);
    for (const auto& v : j.at("members")) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
            fail_field("members", "masks must be non-negative integers");
        }
        const auto raw = v.get<std::int64_t>();
        if (raw > static_cast<std::int64_t>(full)) {
            fail_field("members", "mask " + std::to_string(raw) + " out of range for n = " +
                                      std::to_string(ground_size));
        }
        masks.push_back(static_cast<Mask>(raw));
    }
    return masks;
}

std::vector<Mask> load_family_masks(const std::string& path, std::uint32_t ground_size) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_masks(buf.str(), ground_size);
}

std::string serialize_family(const std::vector<Mask>& members) {
    json j;
    j["members"] = members;
    return j.dump() + "\n";
}

std::string to_json(const AxiomReport& report) {
    return axiom_report_json(report).dump() + "\n";
}

std::string family_check_to_json(std::uint32_t k, IhVariant variant, bool require_ie,
                                 const VerdictReports& ideal, const VerdictReports& obstacle) {
    json j;
    j["k"] = k;
    j["variant"] = std::string(to_string(variant));
    j["require_ie"] = require_ie;
    j["single_ideal"] = verdict_json(ideal.holds, ideal.failures);
    j["linear_obstacle"] = verdict_json(obstacle.holds, obstacle.failures);
    return j.dump() + "\n";
}

std::string to_json(const WidthResult& result) {
    json j;
    j["width"] = result.width;
    j["ordering"] = result.ordering;
    return j.dump() + "\n";
}

std::string to_json(const VerificationReport& report, bool include_timing) {
    json j;
    j["harness"] = std::string(to_string(report.harness));
    json sys;
    sys["name"] = report.system.name;
    sys["kind"] = report.system.kind;
    sys["n"] = report.system.n;
    j["system"] = sys;
    if (report.k) j["k"] = *report.k;
    if (report.variant) j["variant"] = std::string(to_string(*report.variant));
    j["outcome"] = std::string(to_string(report.outcome));
    j["s4_interpretation"] = "IE";
    if (report.lw) j["lw"] = *report.lw;
    if (!report.lw_ordering.empty()) j["lw_ordering"] = report.lw_ordering;
    if (report.exists_ideal) {
        j["exists_ideal"] = *report.exists_ideal;
        if (*report.exists_ideal) j["ideal_family"] = report.ideal_family;
    }

    json reports = json::array();
    for (const auto& r : report.axiom_reports) reports.push_back(axiom_report_json(r));
    j["reports"] = reports;

    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
        json rec;
        rec["family"] = m.family;
        rec["single_ideal"] = verdict_json(m.ideal_holds, m.ideal_failures);
        rec["linear_obstacle"] = verdict_json(m.obstacle_holds, m.obstacle_failures);
        rec["slow_path_agrees"] = m.slow_path_agrees;
        mismatches.push_back(rec);
    }
    j["mismatches"] = mismatches;

    json counts;
    counts["families_examined"] = report.counts.families_examined;
    counts["efficient_sets"] = report.counts.efficient_sets;
    counts["pairs"] = report.counts.pairs;
    counts["mismatch_total"] = report.counts.mismatch_total;
    counts["evaluator_disagreements"] = report.counts.evaluator_disagreements;
    if (include_timing) counts["elapsed_ms"] = report.counts.elapsed_ms;
    j["counts"] = counts;

    j["note"] = report.note;
    return j.dump() + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write: " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw InputError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError("atomic rename failed for: " + path);
    }
}

}  // namespace connwidth
