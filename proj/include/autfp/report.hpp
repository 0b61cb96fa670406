#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace autfp {

/// One verification record; mirrors the JSON report schema.
struct Verification {
    std::string statement;
    std::string instance;
    std::string lhs, rhs;
    bool pass = false;
    std::vector<std::string> witnesses;
};

/// Serialized sink collecting verification records and emitting them in a
/// stable order and format (no timestamps, key order fixed).
class ReportSink {
public:
    ReportSink(std::string command, unsigned long seed) : command_(std::move(command)), seed_(seed) {}

    void add(Verification v);
    void note(const std::string& key, const std::string& value);

    int failures() const { return failures_; }
    nlohmann::ordered_json json() const;
    std::string text() const;
    /// rows: statement,instance,lhs,rhs,verdict
    std::string csv() const;

    /// Writes in the requested format ("json", "csv" or "text"); empty path
    /// writes to stdout.
    void write(const std::string& path, const std::string& format) const;

private:
    std::string command_;
    unsigned long seed_;
    std::vector<Verification> records_;
    std::vector<std::pair<std::string, std::string>> notes_;
    int failures_ = 0;
};

/// Write a payload to the path, or stdout when the path is empty.
void write_payload(const std::string& path, const std::string& payload);

}  // namespace autfp
