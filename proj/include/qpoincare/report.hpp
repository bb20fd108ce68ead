/// Check results shared by the verification suites, the CLI report
/// printer and the acceptance runner.
#pragma once

#include <string>
#include <vector>

namespace qpoin {

enum class Status { Pass, Fail, ErrorStatus };

struct CheckResult {
    std::string id;
    Status status = Status::Pass;
    std::string witness;  // offending expression / matrix index when failing
    double ms = 0.0;
};

inline CheckResult pass(std::string id, std::string note = "") {
    return {std::move(id), Status::Pass, std::move(note), 0.0};
}

inline CheckResult fail(std::string id, std::string witness) {
    return {std::move(id), Status::Fail, std::move(witness), 0.0};
}

inline CheckResult check(std::string id, bool ok, std::string witness = "") {
    return {std::move(id), ok ? Status::Pass : Status::Fail,
            ok ? std::string() : std::move(witness), 0.0};
}

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "error";
    }
}

}  // namespace qpoin
