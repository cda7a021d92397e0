#include "symfun/cache_io.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace symfun {

namespace {

using nlohmann::json;

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

Partition partition_from_json(const json& a) {
    std::vector<int> parts;
    for (const auto& x : a)
        parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

json expansion_json(const Expansion& e) {
    json a = json::array();
    for (const auto& t : e)
        a.push_back(json::array({partition_json(t.part), t.coeff}));
    return a;
}

Expansion expansion_from_json(const json& a) {
    Expansion e;
    for (const auto& t : a)
        e.push_back({partition_from_json(t.at(0)), t.at(1).get<long long>()});
    return e;
}

json pair_section(const std::map<PartitionPair, Expansion>& m) {
    json a = json::array();
    for (const auto& [key, exp] : m)
        a.push_back(json::array(
            {partition_json(key.first), partition_json(key.second), expansion_json(exp)}));
    return a;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json build_sections(const MemoTables& tables) {
    json sections;
    json chars = json::array();
    for (const auto& [key, v] : tables.characters.snapshot())
        chars.push_back(json::array({partition_json(key.first), partition_json(key.second), v}));
    sections["characters"] = std::move(chars);
    sections["lr"] = pair_section(tables.lr_products.snapshot());
    sections["kronecker"] = pair_section(tables.kron_products.snapshot());
    sections["plethysm"] = pair_section(tables.pleth_basis.snapshot());
    return sections;
}

} // namespace

void cache_save(const MemoTables& tables, const std::string& path) {
    json doc;
    doc["format"] = "symfun-cache";
    doc["version"] = cache_format_version;
    json sections = build_sections(tables);
    std::string payload = sections.dump();
    doc["checksum"] = fnv1a(payload);
    doc["sections"] = std::move(sections);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open cache file for writing: " + path);
    out << doc.dump();
    out.flush();
    if (!out)
        throw IoError("failed writing cache file: " + path);
}

namespace {

CacheInfo parse_file(const std::string& path, json& doc, bool& missing) {
    missing = false;
    if (!std::filesystem::exists(path)) {
        missing = true;
        return {};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open cache file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    try {
        doc = json::parse(text);
    } catch (const json::exception&) {
        throw IoError("cache file is corrupted (checksum/parse failure): " + path);
    }
    if (!doc.is_object() || doc.value("format", "") != "symfun-cache")
        throw IoError("not a symfun cache file: " + path);
    if (doc.value("version", -1) != cache_format_version)
        throw IoError("cache version mismatch in " + path);
    if (!doc.contains("sections") || !doc.contains("checksum"))
        throw IoError("cache file is missing sections: " + path);
    std::uint64_t want = doc["checksum"].get<std::uint64_t>();
    if (fnv1a(doc["sections"].dump()) != want)
        throw IoError("cache checksum mismatch in " + path);

    CacheInfo info;
    info.version = cache_format_version;
    const json& s = doc["sections"];
    info.characters = s.at("characters").size();
    info.lr_products = s.at("lr").size();
    info.kron_products = s.at("kronecker").size();
    info.pleth_basis = s.at("plethysm").size();
    return info;
}

} // namespace

CacheInfo cache_load(MemoTables& tables, const std::string& path) {
    json doc;
    bool missing = false;
    CacheInfo info = parse_file(path, doc, missing);
    if (missing)
        return info;

    // parse every entry before touching the tables
    const json& s = doc["sections"];
    std::vector<std::pair<PartitionPair, long long>> chars;
    for (const auto& t : s.at("characters"))
        chars.push_back({{partition_from_json(t.at(0)), partition_from_json(t.at(1))},
                         t.at(2).get<long long>()});
    auto parse_pairs = [](const json& a) {
        std::vector<std::pair<PartitionPair, Expansion>> out;
        for (const auto& t : a)
            out.push_back({{partition_from_json(t.at(0)), partition_from_json(t.at(1))},
                           expansion_from_json(t.at(2))});
        return out;
    };
    auto lr = parse_pairs(s.at("lr"));
    auto kron = parse_pairs(s.at("kronecker"));
    auto pleth = parse_pairs(s.at("plethysm"));

    for (auto& [key, v] : chars)
        tables.characters.insert(key, v);
    for (auto& [key, v] : lr)
        tables.lr_products.insert(key, std::move(v));
    for (auto& [key, v] : kron)
        tables.kron_products.insert(key, std::move(v));
    for (auto& [key, v] : pleth)
        tables.pleth_basis.insert(key, std::move(v));
    return info;
}

CacheInfo cache_inspect(const std::string& path) {
    json doc;
    bool missing = false;
    CacheInfo info = parse_file(path, doc, missing);
    if (missing)
        throw IoError("no such cache file: " + path);
    return info;
}

} // namespace symfun
