#include "autfp/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace autfp {

void ReportSink::add(Verification v) {
    if (!v.pass) ++failures_;
    records_.push_back(std::move(v));
}

void ReportSink::note(const std::string& key, const std::string& value) {
    notes_.push_back({key, value});
}

nlohmann::ordered_json ReportSink::json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["seed"] = seed_;
    for (const auto& [k, v] : notes_) j["config"][k] = v;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : records_) {
        nlohmann::ordered_json e;
        e["statement"] = r.statement;
        e["instance"] = r.instance;
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        e["verdict"] = r.pass ? "pass" : "fail";
        e["witnesses"] = r.witnesses;
        j["results"].push_back(std::move(e));
    }
    j["summary"]["pass"] = static_cast<int>(records_.size()) - failures_;
    j["summary"]["fail"] = failures_;
    return j;
}

std::string ReportSink::text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.statement;
        if (!r.instance.empty()) os << "  [" << r.instance << "]";
        if (!r.lhs.empty() || !r.rhs.empty()) os << "  lhs=" << r.lhs << " rhs=" << r.rhs;
        os << "\n";
        for (const auto& w : r.witnesses) os << "      witness: " << w << "\n";
    }
    os << "pass " << records_.size() - failures_ << " / fail " << failures_ << "\n";
    return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string ReportSink::csv() const {
    std::ostringstream os;
    os << "statement,instance,lhs,rhs,verdict\n";
    for (const auto& r : records_)
        os << csv_escape(r.statement) << "," << csv_escape(r.instance) << "," << csv_escape(r.lhs)
           << "," << csv_escape(r.rhs) << "," << (r.pass ? "pass" : "fail") << "\n";
    return os.str();
}

void ReportSink::write(const std::string& path, const std::string& format) const {
    std::string payload;
    if (format == "json")
        payload = json().dump(2) + "\n";
    else if (format == "csv")
        payload = csv();
    else
        payload = text();
    write_payload(path, payload);
}

void write_payload(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file " + path);
        out << payload;
    }
}

}  // namespace autfp
