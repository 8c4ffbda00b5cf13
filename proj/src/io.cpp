#include "lnd/io.hpp"

#include <fstream>

namespace lnd {

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid document '" + path.string() + "': " + e.what());
    }
    return doc;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

void save_json_file(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << canonical_dump(doc);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

json structure_table_to_json(const StructureTable& t) {
    json entries = json::array();
    for (const auto& [pair, gammas] : t.entries()) {
        json cs = json::array();
        for (const auto& [gamma, v] : gammas) {
            if (sgn(v) == 0) continue;
            cs.push_back(json{{"gamma", seq_to_json(gamma)}, {"value", to_decimal(v)}});
        }
        entries.push_back(json{{"alpha", seq_to_json(pair.first)},
                               {"beta", seq_to_json(pair.second)},
                               {"constants", cs}});
    }
    return json{{"kind", "constants"}, {"bound", t.bound()}, {"entries", entries}};
}

StructureTable structure_table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bound") || !j.contains("entries"))
        throw ParseError("constants document needs bound and entries");
    std::map<std::pair<ExpSeq, ExpSeq>, SparseConstants> entries;
    for (const auto& e : j.at("entries")) {
        const ExpSeq alpha = seq_from_json(e.at("alpha"));
        const ExpSeq beta = seq_from_json(e.at("beta"));
        SparseConstants cs;
        for (const auto& c : e.at("constants")) {
            const json& v = c.at("value");
            cs[seq_from_json(c.at("gamma"))] =
                v.is_string() ? int_from_string(v.get<std::string>()) : Int(v.get<long>());
        }
        entries[{alpha, beta}] = std::move(cs);
    }
    return structure_table_from_entries(j.at("bound").get<long>(), std::move(entries));
}

}  // namespace lnd
