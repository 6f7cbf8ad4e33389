#pragma once

#include <stdexcept>
#include <string>

namespace wlc {

// Every failure raised by the library derives from Error. Callers that need
// to map failures onto exit codes use is_numerical().
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual bool is_numerical() const { return true; }
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid argument: " + what) {}
    bool is_numerical() const override { return false; }
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
    bool is_numerical() const override { return false; }
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what) : Error("singular system: " + what) {}
};

class TrainingDiverged : public Error {
public:
    explicit TrainingDiverged(const std::string& what) : Error("training diverged: " + what) {}
};

class IllConditioned : public Error {
public:
    explicit IllConditioned(const std::string& what) : Error("ill-conditioned regression: " + what) {}
};

class EngineStall : public Error {
public:
    explicit EngineStall(const std::string& what) : Error("engine stall: " + what) {}
};

class SteeringLimit : public Error {
public:
    explicit SteeringLimit(const std::string& what) : Error("steering limit: " + what) {}
};

class BoomRange : public Error {
public:
    explicit BoomRange(const std::string& what) : Error("boom range: " + what) {}
};

class DegeneratePhase : public Error {
public:
    explicit DegeneratePhase(const std::string& what) : Error("degenerate phase: " + what) {}
};

class AmbiguousInverse : public Error {
public:
    explicit AmbiguousInverse(const std::string& what) : Error("ambiguous inverse: " + what) {}
};

}  // namespace wlc
