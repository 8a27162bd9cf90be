#include "qwcf/report.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace qwcf {
namespace {

using Json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

Json row_to_json(const SweepRow& row) {
    Json j;
    j["d_km"] = row.d_km;
    if (row.result) {
        const SolveResult& r = *row.result;
        j["x"] = r.x;
        j["y"] = r.y;
        j["z"] = r.z;
        j["p_h"] = r.p_h;
        j["p_ab"] = r.p_ab;
        j["p_d_quantum"] = r.p_d_quantum;
        j["p_d_classical"] = r.p_d_classical;
        j["l_one"] = r.l_one;
        j["advantage"] = r.advantage;
        j["converged"] = r.converged;
    } else {
        j["error"] = row.error;
    }
    return j;
}

} // namespace

std::string format_sig12(double v) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const SweepRow& row : rows) {
        out += format_sig12(row.d_km);
        if (row.result) {
            const SolveResult& r = *row.result;
            for (double v : {r.x, r.y, r.z, r.p_h, r.p_ab, r.p_d_quantum,
                             r.p_d_classical}) {
                out += ',';
                out += format_sig12(v);
            }
            out += ',';
            out += std::to_string(r.l_one);
            out += ',';
            out += format_bool(r.advantage);
            out += ',';
            out += format_bool(r.converged);
            out += ','; // empty error column
        } else {
            out += ",,,,,,,,,,"; // ten empty value columns
            out += csv_escape(row.error);
        }
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const SweepRow& row : rows)
        arr.push_back(row_to_json(row));
    return arr.dump(2) + "\n";
}

std::string sweep_to_table(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "  d_km            x            y          p_h         p_ab"
           "  p_d_quantum  p_d_classic  l1  adv\n";
    for (const SweepRow& row : rows) {
        std::string d = format_sig12(row.d_km);
        out << std::string(d.size() < 6 ? 6 - d.size() : 0, ' ') << d;
        if (row.result) {
            const SolveResult& r = *row.result;
            for (double v : {r.x, r.y, r.p_h, r.p_ab, r.p_d_quantum,
                             r.p_d_classical}) {
                std::string s = format_sig12(v);
                out << "  " << std::string(s.size() < 11 ? 11 - s.size() : 0, ' ')
                    << s;
            }
            out << "  " << r.l_one << "   " << (r.advantage ? "yes" : "no");
        } else {
            out << "  error: " << row.error;
        }
        out << '\n';
    }
    return out.str();
}

std::string solve_to_json(const SolveResult& r, double d_km) {
    Json j;
    j["d_km"] = d_km;
    j["x"] = r.x;
    j["y"] = r.y;
    j["z"] = r.z;
    j["p_h"] = r.p_h;
    j["p_ab"] = r.p_ab;
    j["p_d_quantum"] = r.p_d_quantum;
    j["p_d_classical"] = r.p_d_classical;
    j["l_one"] = r.l_one;
    j["advantage"] = r.advantage;
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["classical_tests_agree"] = r.classical_tests_agree;
    return j.dump(2) + "\n";
}

std::string scf_to_json(const ScfResult& r) {
    Json j;
    j["x"] = r.x;
    j["y"] = r.y;
    j["z"] = r.z;
    j["p"] = r.p;
    j["epsilon"] = r.epsilon;
    j["bias"] = r.bias;
    return j.dump(2) + "\n";
}

} // namespace qwcf
