#include "dcalg/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace dcalg {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "informational";
    }
    return "?";
}

CheckResult& Report::entry(const std::string& id, const std::string& tag) {
    for (auto& c : checks_) {
        if (c.id == id) return c;
    }
    checks_.push_back(CheckResult{id, tag, Status::Pass, 0, 0, {}});
    return checks_.back();
}

void Report::touch(const std::string& id, const std::string& tag) { entry(id, tag); }

void Report::record(const std::string& id, const std::string& tag, bool ok, const std::string& witness,
                    const std::string& residual) {
    CheckResult& c = entry(id, tag);
    ++c.instances;
    if (ok) return;
    ++c.failures;
    if (c.status == Status::Pass) c.status = Status::Fail;
    if (c.violations.size() < kMaxViolationsKept) c.violations.push_back(Violation{witness, residual});
}

void Report::merge(const Report& other) {
    for (const auto& oc : other.checks_) {
        CheckResult& c = entry(oc.id, oc.tag);
        c.instances += oc.instances;
        c.failures += oc.failures;
        if (oc.status == Status::Fail && c.status == Status::Pass) c.status = Status::Fail;
        if (oc.status == Status::Info) c.status = Status::Info;
        for (const auto& v : oc.violations) {
            if (c.violations.size() < kMaxViolationsKept) c.violations.push_back(v);
        }
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
}

void Report::mark_informational() {
    for (auto& c : checks_) c.status = Status::Info;
}

void Report::mark_informational(const std::string& id) {
    for (auto& c : checks_) {
        if (c.id == id) c.status = Status::Info;
    }
}

const CheckResult* Report::find(const std::string& id) const {
    for (const auto& c : checks_) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

bool Report::ok() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::vector<std::string> Report::failed_ids() const {
    std::vector<std::string> ids;
    for (const auto& c : checks_) {
        if (c.status == Status::Fail) ids.push_back(c.id);
    }
    return ids;
}

std::string Report::to_text() const {
    std::string out = "suite: " + suite_ + "\n";
    for (const auto& c : checks_) {
        std::string label = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
        out += "[" + label + "] " + c.id + " (" + c.tag + ") instances=" + std::to_string(c.instances);
        if (c.failures) out += " failures=" + std::to_string(c.failures);
        out += "\n";
        for (const auto& v : c.violations) {
            out += "    witness: " + v.witness + "\n";
            out += "    residual: " + v.residual + "\n";
        }
    }
    for (const auto& n : notes_) out += "note: " + n + "\n";
    out += "summary: " + std::to_string(checks_.size()) + " checks, " + std::to_string(count(Status::Pass)) +
           " passed, " + std::to_string(count(Status::Fail)) + " failed, " + std::to_string(count(Status::Info)) +
           " informational\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["tag"] = c.tag;
        jc["status"] = to_string(c.status);
        jc["instances"] = c.instances;
        jc["failures"] = c.failures;
        jc["violations"] = nlohmann::ordered_json::array();
        for (const auto& v : c.violations) jc["violations"].push_back({{"witness", v.witness}, {"residual", v.residual}});
        j["checks"].push_back(jc);
    }
    j["notes"] = notes_;
    j["summary"] = {{"checks", checks_.size()},
                    {"passed", count(Status::Pass)},
                    {"failed", count(Status::Fail)},
                    {"informational", count(Status::Info)}};
    return j.dump(2) + "\n";
}

}  // namespace dcalg
