#include "roma/task.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "roma/error.hpp"

namespace roma {

std::optional<TaskType> parse_task_type(const std::string& text) {
    if (text == "search") return TaskType::Search;
    if (text == "think") return TaskType::Think;
    if (text == "write") return TaskType::Write;
    if (text == "code") return TaskType::Code;
    return std::nullopt;
}

const char* to_string(TaskType type) {
    switch (type) {
        case TaskType::Search: return "search";
        case TaskType::Think: return "think";
        case TaskType::Write: return "write";
        case TaskType::Code: return "code";
    }
    return "think";
}

std::string trim(const std::string& text) {
    const char* ws = " \t\r\n\f\v";
    auto begin = text.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    auto end = text.find_last_not_of(ws);
    return text.substr(begin, end - begin + 1);
}

bool is_valid_spec(const TaskSpec& spec) {
    return !trim(spec.goal).empty();
}

const char* to_string(NodeStatus status) {
    switch (status) {
        case NodeStatus::Pending: return "pending";
        case NodeStatus::Blocked: return "blocked";
        case NodeStatus::Ready: return "ready";
        case NodeStatus::Running: return "running";
        case NodeStatus::Done: return "done";
        case NodeStatus::Failed: return "failed";
        case NodeStatus::Cancelled: return "cancelled";
    }
    return "pending";
}

std::optional<NodeStatus> parse_node_status(const std::string& text) {
    if (text == "pending") return NodeStatus::Pending;
    if (text == "blocked") return NodeStatus::Blocked;
    if (text == "ready") return NodeStatus::Ready;
    if (text == "running") return NodeStatus::Running;
    if (text == "done") return NodeStatus::Done;
    if (text == "failed") return NodeStatus::Failed;
    if (text == "cancelled") return NodeStatus::Cancelled;
    return std::nullopt;
}

bool is_terminal(NodeStatus status) {
    return status == NodeStatus::Done || status == NodeStatus::Failed ||
           status == NodeStatus::Cancelled;
}

bool is_legal_transition(NodeStatus from, NodeStatus to) {
    if (is_terminal(from)) return false;
    if (to == NodeStatus::Cancelled) return true;  // any non-terminal may cancel
    switch (from) {
        case NodeStatus::Pending:
            return to == NodeStatus::Blocked || to == NodeStatus::Ready;
        case NodeStatus::Blocked:
            return to == NodeStatus::Ready;
        case NodeStatus::Ready:
            return to == NodeStatus::Running;
        case NodeStatus::Running:
            return to == NodeStatus::Done || to == NodeStatus::Failed;
        default:
            return false;
    }
}

const TaskNode* SubtaskGraph::find(NodeId id) const {
    for (const auto& node : nodes) {
        if (node.id == id) return &node;
    }
    return nullptr;
}

TaskNode* SubtaskGraph::find(NodeId id) {
    for (auto& node : nodes) {
        if (node.id == id) return &node;
    }
    return nullptr;
}

std::optional<std::size_t> SubtaskGraph::index_of(NodeId id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id == id) return i;
    }
    return std::nullopt;
}

std::vector<NodeId> SubtaskGraph::dependencies_of(NodeId id) const {
    std::vector<NodeId> deps;
    for (const auto& edge : edges) {
        if (edge.to == id) deps.push_back(edge.from);
    }
    return deps;
}

std::vector<NodeId> SubtaskGraph::dependents_of(NodeId id) const {
    std::vector<NodeId> out;
    for (const auto& edge : edges) {
        if (edge.from == id) out.push_back(edge.to);
    }
    return out;
}

const char* to_string(GraphViolation kind) {
    switch (kind) {
        case GraphViolation::Cycle: return "cycle";
        case GraphViolation::DanglingEdge: return "dangling_edge";
        case GraphViolation::DuplicateId: return "duplicate_id";
        case GraphViolation::EmptyGraph: return "empty_graph";
    }
    return "cycle";
}

std::size_t ValidationReport::count(GraphViolation kind) const {
    std::size_t n = 0;
    for (const auto& v : violations) {
        if (v.kind == kind) ++n;
    }
    return n;
}

ValidationReport validate_graph(const SubtaskGraph& graph) {
    ValidationReport report;

    if (graph.nodes.empty()) {
        report.violations.push_back({GraphViolation::EmptyGraph, "graph has no nodes"});
    }

    std::unordered_set<NodeId> ids;
    for (const auto& node : graph.nodes) {
        if (!ids.insert(node.id).second) {
            report.violations.push_back(
                {GraphViolation::DuplicateId, "duplicate node id " + std::to_string(node.id)});
        }
    }

    // Edges must name graph nodes on both ends. Cross-subtree references show
    // up here as dangling because sibling graphs never share ids.
    std::vector<Edge> usable;
    for (const auto& edge : graph.edges) {
        bool from_ok = ids.count(edge.from) > 0;
        bool to_ok = ids.count(edge.to) > 0;
        if (!from_ok || !to_ok) {
            std::ostringstream detail;
            detail << "edge " << edge.from << " -> " << edge.to << " references unknown node";
            report.violations.push_back({GraphViolation::DanglingEdge, detail.str()});
            continue;
        }
        usable.push_back(edge);
    }

    // Kahn's algorithm over the usable edges; leftovers mean a cycle.
    std::unordered_map<NodeId, int> indegree;
    std::unordered_map<NodeId, std::vector<NodeId>> adj;
    for (const auto& node : graph.nodes) indegree[node.id];
    std::set<std::pair<NodeId, NodeId>> seen_pairs;
    for (const auto& edge : usable) {
        if (!seen_pairs.insert({edge.from, edge.to}).second) continue;
        adj[edge.from].push_back(edge.to);
        indegree[edge.to]++;
    }
    std::queue<NodeId> frontier;
    for (const auto& node : graph.nodes) {
        if (indegree[node.id] == 0) frontier.push(node.id);
    }
    std::size_t processed = 0;
    while (!frontier.empty()) {
        NodeId id = frontier.front();
        frontier.pop();
        ++processed;
        for (NodeId next : adj[id]) {
            if (--indegree[next] == 0) frontier.push(next);
        }
    }
    if (processed < ids.size()) {
        std::ostringstream detail;
        detail << "cycle among nodes:";
        for (const auto& node : graph.nodes) {
            if (indegree[node.id] > 0) detail << " " << node.id;
        }
        report.violations.push_back({GraphViolation::Cycle, detail.str()});
    }

    return report;
}

std::vector<NodeId> ready_set(const SubtaskGraph& graph,
                              const std::unordered_map<NodeId, NodeStatus>& statuses) {
    for (const auto& [id, status] : statuses) {
        if (!graph.find(id)) {
            throw ContractError("ready_set: status for unknown node id " + std::to_string(id));
        }
    }
    for (const auto& node : graph.nodes) {
        if (!statuses.count(node.id)) {
            throw ContractError("ready_set: missing status for node id " + std::to_string(node.id));
        }
    }

    std::vector<NodeId> ready;
    for (const auto& node : graph.nodes) {  // node list order is the tie-break
        NodeStatus status = statuses.at(node.id);
        if (status != NodeStatus::Pending && status != NodeStatus::Blocked) continue;
        bool deps_done = true;
        for (NodeId dep : graph.dependencies_of(node.id)) {
            if (statuses.at(dep) != NodeStatus::Done) {
                deps_done = false;
                break;
            }
        }
        if (deps_done) ready.push_back(node.id);
    }
    return ready;
}

std::vector<std::vector<NodeId>> topological_waves(const SubtaskGraph& graph) {
    std::unordered_map<NodeId, int> indegree;
    std::unordered_map<NodeId, std::vector<NodeId>> adj;
    std::unordered_map<NodeId, int> level;
    for (const auto& node : graph.nodes) indegree[node.id];
    for (const auto& edge : graph.edges) {
        adj[edge.from].push_back(edge.to);
        indegree[edge.to]++;
    }

    std::queue<NodeId> frontier;
    for (const auto& node : graph.nodes) {
        if (indegree[node.id] == 0) {
            frontier.push(node.id);
            level[node.id] = 0;
        }
    }
    std::size_t processed = 0;
    int max_level = -1;
    while (!frontier.empty()) {
        NodeId id = frontier.front();
        frontier.pop();
        ++processed;
        max_level = std::max(max_level, level[id]);
        for (NodeId next : adj[id]) {
            level[next] = std::max(level[next], level[id] + 1);
            if (--indegree[next] == 0) frontier.push(next);
        }
    }
    if (processed < graph.nodes.size()) {
        throw ContractError("topological_waves: graph is cyclic");
    }

    std::vector<std::vector<NodeId>> waves(static_cast<std::size_t>(max_level + 1));
    for (const auto& node : graph.nodes) {  // node list order within each wave
        waves[static_cast<std::size_t>(level[node.id])].push_back(node.id);
    }
    return waves;
}

}  // namespace roma
