#include "darcais/report.hpp"

#include "darcais/errors.hpp"

namespace darcais {

const char* to_string(Status s) {
    switch (s) {
    case Status::verified: return "verified";
    case Status::certified: return "certified";
    case Status::consistent: return "consistent";
    case Status::falsified: return "falsified";
    case Status::violation_candidate: return "violation_candidate";
    case Status::inconclusive: return "inconclusive";
    case Status::hypothesis_violated: return "hypothesis_violated";
    case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

Status status_from_string(const std::string& s) {
    for (Status v : {Status::verified, Status::certified, Status::consistent,
                     Status::falsified, Status::violation_candidate,
                     Status::inconclusive, Status::hypothesis_violated,
                     Status::indeterminate})
        if (s == to_string(v)) return v;
    throw error("unknown status: " + s);
}

int severity(Status s) {
    switch (s) {
    case Status::verified:
    case Status::certified:
    case Status::consistent: return 0;
    case Status::inconclusive: return 1;
    case Status::indeterminate: return 2;
    case Status::hypothesis_violated: return 3;
    case Status::violation_candidate: return 4;
    case Status::falsified: return 5;
    }
    return 5;
}

Json Report::to_json(bool with_timing) const {
    Json j;
    j["claim_id"] = claim_id;
    j["params"] = params;
    j["status"] = to_string(status);
    j["witnesses"] = witnesses;
    if (seed) j["seed"] = *seed;
    if (with_timing) j["timing_ms"] = timing_ms;
    if (!details.is_null()) j["details"] = details;
    return j;
}

std::string Report::to_line(bool with_timing) const {
    return to_json(with_timing).dump();
}

Status worst_status(const std::vector<Report>& members) {
    Status w = Status::verified;
    for (const auto& r : members)
        if (severity(r.status) > severity(w)) w = r.status;
    return w;
}

} // namespace darcais
