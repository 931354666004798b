#pragma once

#include <stdexcept>
#include <string>

namespace roma {

/// Base class for all roma errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke an API precondition. Always a bug, never agent misbehavior.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Configuration file, flag, or schema problem.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Agent output that could not be mapped into its typed form.
/// The engine retries these with the failure appended to the agent input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Transport-level agent failure (connection refused, non-success status,
/// scripted mock failure). Retriable.
class AgentError : public Error {
public:
    using Error::Error;
};

/// Structurally malformed response body from an endpoint. Not retriable.
class ProtocolError : public Error {
public:
    using Error::Error;
};

}  // namespace roma
