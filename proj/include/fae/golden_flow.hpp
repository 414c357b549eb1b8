#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fae/ingest.hpp"

namespace fae::golden_flow {

using ingest::CaptureSummary;
using ingest::Signature;

// Graph node: a frame signature or one of the virtual walk endpoints.
// Kind order (Start < Sig < End) doubles as the canonical edge ordering.
struct Node {
    enum class Kind { Start, Sig, End };
    Kind kind = Kind::Sig;
    Signature sig;  // meaningful only when kind == Sig

    static Node start() { return {Kind::Start, {}}; }
    static Node end() { return {Kind::End, {}}; }
    static Node of(Signature s) { return {Kind::Sig, std::move(s)}; }

    bool is_virtual() const { return kind != Kind::Sig; }
    std::string label() const;  // "START", "END", or "<protocol> <text>"

    auto operator<=>(const Node&) const = default;
};

// Directed transition graph learned from successful captures.
class FlowGraph {
public:
    using AdjMap = std::map<Node, std::map<Node, int64_t>>;

    const AdjMap& edges() const { return adj_; }
    int64_t trained_on() const { return trained_on_; }

    bool contains(const Signature& sig) const;
    // Sorted successor set; empty for nodes not in the graph.
    std::vector<Node> successors(const Node& node) const;

private:
    AdjMap adj_;
    int64_t trained_on_ = 0;

    friend FlowGraph build_graph(const std::vector<CaptureSummary>& successes);
    friend FlowGraph parse_graph(const std::string& json_text, const std::string& origin);
};

FlowGraph build_graph(const std::vector<CaptureSummary>& successes);

enum class FlowStatus { Conforms, Deviation, PrematureEnd };

std::string to_string(FlowStatus status);

struct FlowVerdict {
    FlowStatus status = FlowStatus::Conforms;
    std::optional<int64_t> fault_frame_no;  // 0 marks an empty capture
    std::optional<Signature> observed;
    std::vector<Node> expected;             // successors of the last conforming node
    Node last_node = Node::start();         // where the walk stopped
    bool unknown_node = false;              // observed signature absent from the whole graph
};

FlowVerdict check(const FlowGraph& graph, const CaptureSummary& capture);

// JSON persistence. Serialization is canonical: edges sorted by (from, to).
std::string dump_graph(const FlowGraph& graph);
void save_graph(const FlowGraph& graph, const std::string& path);
FlowGraph parse_graph(const std::string& json_text, const std::string& origin = "<memory>");
FlowGraph load_graph(const std::string& path);

} // namespace fae::golden_flow
