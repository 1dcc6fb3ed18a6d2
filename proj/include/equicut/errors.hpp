#pragma once

#include <stdexcept>
#include <string>

namespace equicut {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(const std::string& what = "graph is not connected") : Error(what) {}
};

class TooSmall : public Error {
public:
    explicit TooSmall(const std::string& what) : Error(what) {}
};

class SizeLimitExceeded : public Error {
public:
    explicit SizeLimitExceeded(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class InfeasibleSystem : public Error {
public:
    explicit InfeasibleSystem(const std::string& what = "system has no feasible point") : Error(what) {}
};

class NodeBudgetExceeded : public Error {
public:
    explicit NodeBudgetExceeded(const std::string& what = "integer search node budget exhausted")
        : Error(what) {}
};

class NotL1Graph : public Error {
public:
    explicit NotL1Graph(const std::string& what = "graph metric is outside the cut cone") : Error(what) {}
};

class ScaleSearchInconclusive : public Error {
public:
    explicit ScaleSearchInconclusive(const std::string& what = "scale search hit the node budget")
        : Error(what) {}
};

class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

class CertificateMismatch : public Error {
public:
    explicit CertificateMismatch(const std::string& what) : Error(what) {}
};

class SizeConditionViolated : public Error {
public:
    explicit SizeConditionViolated(const std::string& what) : Error(what) {}
};

class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& what) : Error(what) {}
};

class UnknownFamily : public Error {
public:
    explicit UnknownFamily(const std::string& what) : Error(what) {}
};

class BadParameters : public Error {
public:
    explicit BadParameters(const std::string& what) : Error(what) {}
};

class UnknownEntry : public Error {
public:
    explicit UnknownEntry(const std::string& what) : Error(what) {}
};

class FixtureCorrupt : public Error {
public:
    explicit FixtureCorrupt(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace equicut
