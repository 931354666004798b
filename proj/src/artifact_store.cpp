#include "roma/artifact_store.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include "roma/error.hpp"

namespace roma {

const char* to_string(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::Plan: return "plan";
        case ArtifactKind::Result: return "result";
        case ArtifactKind::Note: return "note";
        case ArtifactKind::Document: return "document";
        case ArtifactKind::ToolTranscript: return "tool_transcript";
        case ArtifactKind::DatasetRef: return "dataset_ref";
    }
    return "note";
}

std::optional<ArtifactKind> parse_artifact_kind(const std::string& text) {
    if (text == "plan") return ArtifactKind::Plan;
    if (text == "result") return ArtifactKind::Result;
    if (text == "note") return ArtifactKind::Note;
    if (text == "document") return ArtifactKind::Document;
    if (text == "tool_transcript") return ArtifactKind::ToolTranscript;
    if (text == "dataset_ref") return ArtifactKind::DatasetRef;
    return std::nullopt;
}

std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 digest failed");
    }
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

ArtifactId ArtifactStore::put(const std::string& body, ArtifactKind kind, NodeId creator,
                              ArtifactMedia media) {
    if (body.empty()) {
        throw ContractError("ArtifactStore::put: empty body");
    }
    ArtifactId id = sha256_hex(body);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = artifacts_.find(id);
    if (it != artifacts_.end()) {
        return id;  // idempotent on identical content
    }
    Artifact artifact;
    artifact.id = id;
    artifact.kind = kind;
    artifact.media = media;
    artifact.body = body;
    artifact.byte_size = body.size();
    artifact.created_by = creator;
    artifacts_.emplace(id, std::move(artifact));
    insertion_order_.push_back(id);
    return id;
}

std::optional<Artifact> ArtifactStore::get(const ArtifactId& id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = artifacts_.find(id);
    if (it == artifacts_.end()) return std::nullopt;
    return it->second;
}

bool ArtifactStore::contains(const ArtifactId& id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return artifacts_.count(id) > 0;
}

std::size_t ArtifactStore::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return artifacts_.size();
}

void ArtifactStore::save(const std::filesystem::path& dir) const {
    namespace fs = std::filesystem;
    std::lock_guard<std::mutex> lock(mutex_);
    fs::path root = dir / "artifacts";
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) {
        throw Error("ArtifactStore::save: cannot create " + root.string() + ": " + ec.message());
    }
    std::ofstream index(root / "index.tsv", std::ios::binary | std::ios::trunc);
    if (!index) {
        throw Error("ArtifactStore::save: cannot open index.tsv");
    }
    for (const auto& id : insertion_order_) {
        const Artifact& artifact = artifacts_.at(id);
        std::ofstream body(root / id, std::ios::binary | std::ios::trunc);
        if (!body) {
            throw Error("ArtifactStore::save: cannot write artifact " + id);
        }
        body.write(artifact.body.data(), static_cast<std::streamsize>(artifact.body.size()));
        index << artifact.id << '\t' << to_string(artifact.kind) << '\t' << artifact.byte_size
              << '\t' << artifact.created_by << '\n';
    }
}

void ArtifactStore::load(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::path root = dir / "artifacts";
    std::ifstream index(root / "index.tsv", std::ios::binary);
    if (!index) {
        throw Error("ArtifactStore::load: cannot open " + (root / "index.tsv").string());
    }
    std::string line;
    while (std::getline(index, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string id, kind_text, size_text, creator_text;
        if (!std::getline(fields, id, '\t') || !std::getline(fields, kind_text, '\t') ||
            !std::getline(fields, size_text, '\t') || !std::getline(fields, creator_text)) {
            throw ParseError("ArtifactStore::load: malformed index line: " + line);
        }
        auto kind = parse_artifact_kind(kind_text);
        if (!kind) {
            throw ParseError("ArtifactStore::load: unknown artifact kind: " + kind_text);
        }
        std::ifstream body_file(root / id, std::ios::binary);
        if (!body_file) {
            throw Error("ArtifactStore::load: missing body for " + id);
        }
        std::ostringstream body;
        body << body_file.rdbuf();
        std::string content = body.str();
        if (sha256_hex(content) != id) {
            throw Error("ArtifactStore::load: content hash mismatch for " + id);
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (artifacts_.count(id)) continue;
        Artifact artifact;
        artifact.id = id;
        artifact.kind = *kind;
        artifact.media = ArtifactMedia::Text;
        artifact.body = std::move(content);
        artifact.byte_size = artifact.body.size();
        artifact.created_by = std::stoull(creator_text);
        artifacts_.emplace(id, std::move(artifact));
        insertion_order_.push_back(id);
    }
}

}  // namespace roma
