#pragma once

#include <string>

#include "roma/artifact_store.hpp"
#include "roma/cost.hpp"
#include "roma/task.hpp"

namespace roma {

/// Terminal outcome of solving one node. Failed results carry a diagnostic
/// and an empty summary; Done results carry a summary within the configured
/// budget and reference the full output as an artifact.
struct TaskResult {
    NodeId node_id = kInvalidNodeId;
    ArtifactId output;        // artifact holding the full output (Done only)
    std::string summary;      // bounded by RunConfig::summary_budget
    NodeStatus status = NodeStatus::Failed;
    std::string diagnostic;   // set iff status == Failed
    TokenCost accounting;     // own cost plus, for parents, all child costs
};

}  // namespace roma
