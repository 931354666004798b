#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "roma/task.hpp"

namespace roma {

enum class ArtifactKind { Plan, Result, Note, Document, ToolTranscript, DatasetRef };
enum class ArtifactMedia { Text, BinaryRef };

const char* to_string(ArtifactKind kind);
std::optional<ArtifactKind> parse_artifact_kind(const std::string& text);

/// Content-addressed identifier: lowercase hex SHA-256 of the body.
using ArtifactId = std::string;

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

struct Artifact {
    ArtifactId id;
    ArtifactKind kind = ArtifactKind::Note;
    ArtifactMedia media = ArtifactMedia::Text;
    std::string body;  // raw body, or the external reference for BinaryRef
    std::uint64_t byte_size = 0;
    NodeId created_by = kInvalidNodeId;
};

/// Write-once, content-addressed store. put() is idempotent on identical
/// content; bodies are never mutated after storage. Safe under concurrent
/// put/get from all worker slots.
class ArtifactStore {
public:
    /// Stores `body` and returns its content id. Re-storing identical content
    /// yields the identical id and does not duplicate the artifact.
    ArtifactId put(const std::string& body, ArtifactKind kind, NodeId creator,
                   ArtifactMedia media = ArtifactMedia::Text);

    std::optional<Artifact> get(const ArtifactId& id) const;
    bool contains(const ArtifactId& id) const;
    std::size_t size() const;

    /// Directory layout: `<dir>/artifacts/<id>` holds the raw body bit-exact,
    /// `<dir>/artifacts/index.tsv` holds `id \t kind \t byte_size \t creator`.
    void save(const std::filesystem::path& dir) const;
    void load(const std::filesystem::path& dir);

private:
    mutable std::mutex mutex_;
    std::unordered_map<ArtifactId, Artifact> artifacts_;
    std::vector<ArtifactId> insertion_order_;
};

}  // namespace roma
