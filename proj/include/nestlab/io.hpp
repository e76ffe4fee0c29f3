#pragma once
// Text formats: labelings, vertex labelings, Skolem pairings and systems, edge lists, DOT
// drawings, campaign records and instance specifications.
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestlab/graph.hpp"
#include "nestlab/labeling.hpp"
#include "nestlab/search.hpp"
#include "nestlab/skolem.hpp"

namespace nestlab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabelingDocument {
    OrientedLabeling labeling;
    Label k = 0;
    int t = 0;
    std::optional<Label> r;
    std::string provenance;
};

// labeling 1 / vertices N / edges M / k K t T r R|- / [provenance P] / one "tail head label" per arc
std::string write_labeling(const LabelingDocument& d);
LabelingDocument parse_labeling(const std::string& text);

// vertex-labeling 1 / vertices N / t T / one "vertex value" per line
std::string write_vertex_labeling(const VertexLabeling& f);
VertexLabeling parse_vertex_labeling(const std::string& text);

// skolem-pairing 1 / n N t T / one "a b" per line in difference order
std::string write_pairing(const SkolemPairing& p);
SkolemPairing parse_pairing(const std::string& text);

// skolem-system 1 / n N k K t T r R M M / one block per line, distinguished element starred
std::string write_system(const SkolemSystem& S, const std::vector<Label>& distinguished = {});
ZeroSumSystem parse_system(const std::string& text);

// graph 1 / vertices N / edges M / one "u v" per line
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

std::string dot_graph(const Graph& g, const std::vector<bool>& dashed = {},
                      const std::vector<std::string>& vertex_labels = {});
std::string dot_two_nested(const TwoNestedGraph& g, const VertexLabeling* f = nullptr);
std::string dot_oriented(const OrientedLabeling& L);

struct CampaignRecord {
    std::string id;
    SearchStatus status = SearchStatus::none;
    std::string witness_path;  // "-" when there is no witness
    std::uint64_t nodes = 0;
    std::int64_t wall_ms = 0;
};

std::string write_campaign_record(const CampaignRecord& r);
CampaignRecord parse_campaign_record(const std::string& line);

// cycle:N, star:N, snowflake:a,b,c, nested:m1,m2, file:PATH (edge list)
struct Instance {
    std::string spec;
    Graph graph;
    std::optional<TwoNestedGraph> nested;
    std::optional<Snowflake> flake;
};

Instance parse_instance(const std::string& spec);
std::vector<int> parse_int_list(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nestlab
