#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace roma {

/// Run-scoped node identifier, assigned by the engine. 0 is never a valid id.
using NodeId = std::uint64_t;

constexpr NodeId kInvalidNodeId = 0;

enum class TaskType { Search, Think, Write, Code };

/// Closed enumeration: anything else is rejected at parse time.
std::optional<TaskType> parse_task_type(const std::string& text);
const char* to_string(TaskType type);

struct TaskSpec {
    std::string goal;          // non-empty after whitespace trimming
    std::string constraints;   // optional; empty means none
    TaskType task_type = TaskType::Think;
    std::map<std::string, std::string> metadata;
};

/// Trims whitespace and checks the non-empty-goal invariant.
bool is_valid_spec(const TaskSpec& spec);
std::string trim(const std::string& text);

enum class NodeStatus { Pending, Blocked, Ready, Running, Done, Failed, Cancelled };

const char* to_string(NodeStatus status);
std::optional<NodeStatus> parse_node_status(const std::string& text);
bool is_terminal(NodeStatus status);

/// Legal transitions:
///   Pending -> {Blocked, Ready}; Blocked -> {Ready, Cancelled};
///   Ready -> Running; Running -> {Done, Failed};
///   any non-terminal -> Cancelled. Done/Failed/Cancelled are terminal.
bool is_legal_transition(NodeStatus from, NodeStatus to);

struct TaskNode {
    NodeId id = kInvalidNodeId;
    TaskSpec spec;
    std::optional<NodeId> parent_id;
    int depth = 0;  // root = 0; depth(child) = depth(parent) + 1
    NodeStatus status = NodeStatus::Pending;
    std::optional<bool> atomic;            // set by the Atomizer
    std::optional<std::string> result_ref; // artifact id, set iff Done
};

/// Dependency edge: `to` consumes the output of `from`.
struct Edge {
    NodeId from = kInvalidNodeId;
    NodeId to = kInvalidNodeId;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.from == b.from && a.to == b.to;
    }
};

/// The Planner's output: an ordered DAG of sibling TaskNodes. Edges are only
/// ever between nodes of the same graph; anything else fails validation.
struct SubtaskGraph {
    std::vector<TaskNode> nodes;  // planner order; meaningful for tie-breaks
    std::vector<Edge> edges;      // set semantics, insertion order preserved

    const TaskNode* find(NodeId id) const;
    TaskNode* find(NodeId id);
    std::optional<std::size_t> index_of(NodeId id) const;

    /// Incoming dependencies of `id`, in edge declaration order.
    std::vector<NodeId> dependencies_of(NodeId id) const;
    /// Nodes that consume the output of `id`.
    std::vector<NodeId> dependents_of(NodeId id) const;
};

enum class GraphViolation { Cycle, DanglingEdge, DuplicateId, EmptyGraph };

const char* to_string(GraphViolation kind);

struct Violation {
    GraphViolation kind;
    std::string detail;
};

/// Violations are data, not failures: an empty list means the graph is accepted.
struct ValidationReport {
    std::vector<Violation> violations;

    bool accepted() const { return violations.empty(); }
    std::size_t count(GraphViolation kind) const;
};

/// Pure structural validation: {Cycle, DanglingEdge, DuplicateId, EmptyGraph}.
ValidationReport validate_graph(const SubtaskGraph& graph);

/// Nodes whose status is Pending/Blocked and whose every incoming dependency
/// is Done, ordered by the graph's node list order. `statuses` must cover
/// exactly the graph's nodes; unknown or missing ids are a contract error.
std::vector<NodeId> ready_set(const SubtaskGraph& graph,
                              const std::unordered_map<NodeId, NodeStatus>& statuses);

/// Wave i holds the nodes whose longest incoming dependency path has length i.
/// Throws ContractError on a cyclic graph.
std::vector<std::vector<NodeId>> topological_waves(const SubtaskGraph& graph);

}  // namespace roma
