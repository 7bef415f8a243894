// Structured check results shared by every axiom suite.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dcalg {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

struct Violation {
    std::string witness;
    std::string residual;
};

struct CheckResult {
    std::string id;
    std::string tag;
    Status status = Status::Pass;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<Violation> violations;  // first few failing instances
};

class Report {
public:
    static constexpr std::size_t kMaxViolationsKept = 5;

    explicit Report(std::string suite = "") : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    const std::vector<std::string>& notes() const { return notes_; }

    // Registers an instance of check `id`; the residual text is only kept for failures.
    void record(const std::string& id, const std::string& tag, bool ok, const std::string& witness,
                const std::string& residual);
    // Ensures a check shows up even with zero instances.
    void touch(const std::string& id, const std::string& tag);
    void note(std::string text) { notes_.push_back(std::move(text)); }
    // Appends another report's checks (prefixing nothing) and notes.
    void merge(const Report& other);
    // Downgrades every check to informational.
    void mark_informational();
    void mark_informational(const std::string& id);

    const CheckResult* find(const std::string& id) const;
    bool ok() const;
    std::size_t count(Status s) const;
    std::vector<std::string> failed_ids() const;

    std::string to_text() const;
    std::string to_json() const;

private:
    CheckResult& entry(const std::string& id, const std::string& tag);

    std::string suite_;
    std::vector<CheckResult> checks_;
    std::vector<std::string> notes_;
};

}  // namespace dcalg
