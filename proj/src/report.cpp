#include "ehall/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ehall {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string Report::to_json() const {
    ordered_json doc;
    doc["command"] = command;
    doc["version"] = kToolVersion;
    doc["config"] = ordered_json::object();
    for (const auto& [k, v] : config) doc["config"][k] = v;
    doc["records"] = ordered_json::array();
    for (const Record& r : records) {
        ordered_json row;
        row["check_id"] = r.check_id;
        row["family"] = r.family;
        row["params"] = r.params;
        row["bidegree"] = r.bidegree;
        row["prime"] = r.prime;
        row["seed"] = r.seed;
        row["status"] = r.status;
        row["data"] = r.data;
        row["elapsed_ms"] = r.elapsed_ms;
        doc["records"].push_back(std::move(row));
    }
    doc["wall_ms"] = wall_ms;
    return doc.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "# command=" << command << "\n";
    out << "# version=" << kToolVersion << "\n";
    for (const auto& [k, v] : config) out << "# " << k << "=" << v << "\n";
    out << "check_id,family,params,bidegree,prime,seed,status,data,elapsed_ms\n";
    for (const Record& r : records)
        out << csv_escape(r.check_id) << ',' << csv_escape(r.family) << ','
            << csv_escape(r.params) << ',' << csv_escape(r.bidegree) << ',' << r.prime
            << ',' << r.seed << ',' << r.status << ',' << csv_escape(r.data) << ','
            << r.elapsed_ms << "\n";
    out << "# wall_ms=" << wall_ms << "\n";
    return out.str();
}

bool Report::any_fail() const {
    for (const Record& r : records)
        if (r.status == "FAIL") return true;
    return false;
}

bool Report::any_inconclusive() const {
    for (const Record& r : records)
        if (r.status == "INCONCLUSIVE") return true;
    return false;
}

int Report::exit_code() const {
    if (any_fail()) return 1;
    if (any_inconclusive()) return 3;
    return 0;
}

} // namespace ehall
