#include "qfano/channel_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qfano {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::invalid_argument("channel spec: field \"" + path + "\" " + why);
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "must be a number");
    return j.get<double>();
}

}  // namespace

ChannelSpec load_channel_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("channel spec: cannot open " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("channel spec: not valid JSON: ") + e.what());
    }

    if (!doc.is_object()) fail("<root>", "must be an object");
    if (!doc.contains("d")) fail("d", "is missing");
    if (!doc["d"].is_number_integer()) fail("d", "must be an integer");
    const int d = doc["d"].get<int>();
    if (d < 1) fail("d", "must be >= 1");

    if (!doc.contains("kraus")) fail("kraus", "is missing");
    const json& kraus = doc["kraus"];
    if (!kraus.is_array() || kraus.empty()) fail("kraus", "must be a non-empty array");

    ChannelSpec spec{d, {}};
    for (size_t i = 0; i < kraus.size(); ++i) {
        const std::string mp = "kraus[" + std::to_string(i) + "]";
        const json& mat = kraus[i];
        if (!mat.is_array() || mat.size() != static_cast<size_t>(d)) {
            fail(mp, "must be an array of " + std::to_string(d) + " rows");
        }
        ComplexMatrix m(d);
        for (size_t r = 0; r < mat.size(); ++r) {
            const std::string rp = mp + "[" + std::to_string(r) + "]";
            const json& row = mat[r];
            if (!row.is_array() || row.size() != static_cast<size_t>(d)) {
                fail(rp, "must be an array of " + std::to_string(d) + " entries");
            }
            for (size_t c = 0; c < row.size(); ++c) {
                const std::string cp = rp + "[" + std::to_string(c) + "]";
                const json& pair = row[c];
                if (!pair.is_array() || pair.size() != 2) {
                    fail(cp, "must be a [re, im] pair");
                }
                m(static_cast<int>(r), static_cast<int>(c)) =
                    Complex(number_at(pair[0], cp + "[0]"), number_at(pair[1], cp + "[1]"));
            }
        }
        spec.kraus.push_back(std::move(m));
    }
    return spec;
}

void save_channel_spec(const ChannelSpec& spec, const std::string& path) {
    json kraus = json::array();
    for (const ComplexMatrix& m : spec.kraus) {
        json mat = json::array();
        for (int r = 0; r < m.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim(); ++c) {
                row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
            }
            mat.push_back(std::move(row));
        }
        kraus.push_back(std::move(mat));
    }
    const json doc{{"d", spec.d}, {"kraus", std::move(kraus)}};

    std::ofstream out(path);
    if (!out) throw std::invalid_argument("channel spec: cannot write " + path);
    out << doc.dump(2) << "\n";
}

KrausChannel to_channel(const ChannelSpec& spec) {
    return KrausChannel(spec.d, spec.kraus, 1e-8);
}

ChannelSpec to_spec(const KrausChannel& ch) { return ChannelSpec{ch.dim(), ch.operators()}; }

}  // namespace qfano
