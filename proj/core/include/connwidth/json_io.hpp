#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "connwidth/budget.hpp"
#include "connwidth/graph.hpp"
#include "connwidth/report.hpp"
#include "connwidth/search.hpp"
#include "connwidth/system.hpp"
#include "connwidth/verify.hpp"

namespace connwidth {

// Parsed form of the instance interchange schema:
//   {"name": str, "kind": "explicit"|"graph_cut"|"graph_boundary", "n": int,
//    "values": [int,...]?, "vertices": int?, "edges": [[int,int],...]?}
// kind-specific fields are required and must be consistent with n.
struct Instance {
    std::string name;
    Provenance kind = Provenance::explicit_table;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> values;  // explicit only
    Graph graph;                        // graph kinds only

    ConnectivitySystem build(const Budget& budget = {}) const;
};

// Parse errors throw InputError with a line/field diagnostic.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

Instance instance_from_graph(const Graph& g, Provenance kind, std::string name);
Instance instance_from_table(std::vector<std::uint32_t> values, std::string name);

// Family interchange: {"members": [mask,...]}. Masks are range-checked
// against ground_size and canonicalized.
std::vector<Mask> parse_family_masks(const std::string& json_text, std::uint32_t ground_size);
std::vector<Mask> load_family_masks(const std::string& path, std::uint32_t ground_size);
std::string serialize_family(const std::vector<Mask>& members);

// Serialized forms are compact single-line JSON with alphabetically ordered
// keys; identical inputs give byte-identical output.
std::string to_json(const AxiomReport& report);
std::string to_json(const WidthResult& result);
std::string to_json(const VerificationReport& report, bool include_timing = false);

// Combined two-system verdict, the check-family output line.
std::string family_check_to_json(std::uint32_t k, IhVariant variant, bool require_ie,
                                 const VerdictReports& ideal, const VerdictReports& obstacle);

// Whole-file atomic write: content lands via temp file + rename, so readers
// never observe a partial report.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace connwidth
